// stc: structural target controllability analysis.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "stc/analysis.hpp"
#include "stc/errors.hpp"
#include "stc/io.hpp"

namespace {

enum Exit { kConclusive = 0, kInvalidInput = 1, kUnsupported = 2, kUndetermined = 3, kInternal = 4 };

struct Flags {
    std::string system;
    std::uint64_t seed = 0;
    int trials = stc::kDefaultTrials;
    std::uint64_t max_weight = stc::kDefaultMaxWeight;
    std::string k = "auto";
    bool no_oracle = false;
    std::string emit = "json";
    std::uint64_t span_budget = stc::SpanningOptions{}.candidate_budget;
};

class Emitter {
public:
    explicit Emitter(bool json) : json_(json) {}

    int error(const std::string& kind, const std::string& message, int code,
              const stc::ParseError* where = nullptr) const {
        if (json_) std::cout << stc::error_report_json(kind, message, where).dump(2) << "\n";
        else std::cout << stc::error_report_text(kind, message, where);
        std::cerr << "stc: " << message << "\n";
        return code;
    }

private:
    bool json_;
};

std::optional<int> parse_k(const std::string& text) {
    if (text == "auto") return std::nullopt;
    std::size_t used = 0;
    int k = 0;
    try {
        k = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) throw stc::UnsupportedError("--k must be \"auto\" or an integer, got " + text);
    return k;
}

int cmd_analyze(const Flags& f) {
    const Emitter emit(f.emit == "json");
    stc::StructuredSystem sys;
    try {
        sys = stc::load_system(f.system);
    } catch (const stc::ParseError& e) {
        return emit.error("parse", e.what(), kInvalidInput, &e);
    } catch (const stc::ValidationError& e) {
        return emit.error("validation", e.what(), kInvalidInput);
    }

    stc::AnalysisOptions options;
    stc::ReportSettings settings;
    try {
        if (f.trials < 1) throw stc::UnsupportedError("--trials must be at least 1");
        if (f.max_weight < 2) throw stc::UnsupportedError("--max-weight must be at least 2");
        if (f.span_budget < 1) throw stc::UnsupportedError("--span-budget must be at least 1");
        const auto k = parse_k(f.k);
        if (k && *k < sys.n)
            throw stc::UnsupportedError("--k must be at least n = " + std::to_string(sys.n) + ", got " + f.k);
        options.run_oracle = !f.no_oracle;
        options.oracle.trials = f.trials;
        options.oracle.seed = f.seed;
        options.oracle.max_weight = f.max_weight;
        options.oracle.k = k;
        options.spanning.candidate_budget = f.span_budget;
        settings = {f.seed, f.trials, f.max_weight, k, !f.no_oracle, f.span_budget};
    } catch (const stc::UnsupportedError& e) {
        return emit.error("unsupported", e.what(), kUnsupported);
    }

    stc::Analysis a;
    try {
        a = stc::analyze(sys, options);
    } catch (const stc::UnsupportedError& e) {
        return emit.error("unsupported", e.what(), kUnsupported);
    } catch (const stc::DomainError& e) {
        return emit.error("unsupported", e.what(), kUnsupported);
    } catch (const stc::Error& e) {
        return emit.error("internal", e.what(), kInternal);
    }

    if (f.emit == "json") std::cout << stc::report_json(sys, a, settings).dump(2) << "\n";
    else std::cout << stc::report_text(sys, a, settings);
    return a.conclusion == stc::Conclusion::undetermined ? kUndetermined : kConclusive;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Structural target controllability of structured linear systems"};
    app.require_subcommand(1);
    Flags f;
    CLI::App* analyze = app.add_subcommand("analyze", "Run every criterion and the generic-rank oracle on a system");
    analyze->add_option("--system", f.system, "System file (JSON)")->required();
    analyze->add_option("--seed", f.seed, "Oracle seed");
    analyze->add_option("--trials", f.trials, "Oracle realizations");
    analyze->add_option("--max-weight", f.max_weight, "Largest random weight");
    analyze->add_option("--k", f.k, "Number of matrix powers: auto or an integer >= n");
    analyze->add_flag("--no-oracle", f.no_oracle, "Skip the numerical oracle");
    analyze->add_option("--emit", f.emit, "Report format")->check(CLI::IsMember({"json", "text"}));
    analyze->add_option("--span-budget", f.span_budget, "Candidate budget of the spanning-tree search");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUnsupported;
    }
    return cmd_analyze(f);
}
