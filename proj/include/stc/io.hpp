#ifndef STC_IO_HPP
#define STC_IO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "stc/analysis.hpp"
#include "stc/errors.hpp"
#include "stc/system.hpp"

namespace stc {

/// Parses a system document:
///   {"n": 5, "inputs": [[1, 3]], "edges": [[1, 2], ...], "targets": [1, 3]}
/// inputs[k] lists the nodes fed by input k+1. Throws ParseError (with the
/// line, column and field of the failure) for malformed documents and
/// ValidationError for out-of-range or duplicate entries.
StructuredSystem parse_system(std::string_view text);

/// Reads and parses a file. Unreadable files raise ParseError at line 0.
StructuredSystem load_system(const std::string& path);

/// Canonical document: sorted inputs, edges and targets, one field per line.
std::string emit_system(const StructuredSystem& sys);

/// Flags echoed into the report.
struct ReportSettings {
    std::uint64_t seed = 0;
    int trials = 0;
    std::uint64_t max_weight = 0;
    std::optional<int> k;  // nullopt for "auto"
    bool oracle = true;
    std::uint64_t span_budget = 0;
};

nlohmann::ordered_json witness_json(const Witness& w);
nlohmann::ordered_json report_json(const StructuredSystem& sys, const Analysis& a, const ReportSettings& s);
std::string report_text(const StructuredSystem& sys, const Analysis& a, const ReportSettings& s);

/// Report for a run that stopped on an error. `kind` is parse, validation,
/// unsupported or internal.
nlohmann::ordered_json error_report_json(const std::string& kind, const std::string& message,
                                         const ParseError* where = nullptr);
std::string error_report_text(const std::string& kind, const std::string& message,
                              const ParseError* where = nullptr);

}  // namespace stc

#endif  // STC_IO_HPP
