#include "stc/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "stc/errors.hpp"

namespace stc {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

struct Locus {
    int line = 1;
    int column = 1;
};

Locus locus_at(std::string_view text, std::size_t offset) {
    Locus l;
    offset = std::min(offset, text.size());
    for (std::size_t i = 0; i < offset; ++i) {
        if (text[i] == '\n') {
            ++l.line;
            l.column = 1;
        } else {
            ++l.column;
        }
    }
    return l;
}

// Position of a top-level key, or of the document start when not found.
Locus key_locus(std::string_view text, const std::string& key) {
    const std::string quoted = "\"" + key + "\"";
    int depth = 0;
    bool in_string = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (in_string) {
            if (c == '\\') ++i;
            else if (c == '"') in_string = false;
            continue;
        }
        if (c == '{' || c == '[') ++depth;
        else if (c == '}' || c == ']') --depth;
        else if (c == '"') {
            if (depth == 1 && text.substr(i, quoted.size()) == quoted) return locus_at(text, i);
            in_string = true;
        }
    }
    return {};
}

class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    [[noreturn]] void fail(const std::string& field, const std::string& message) const {
        const std::string top = field.substr(0, field.find('['));
        const Locus l = key_locus(text_, top);
        throw ParseError(field + ": " + message + " (line " + std::to_string(l.line) + ", column " +
                             std::to_string(l.column) + ")",
                         l.line, l.column, field);
    }

    int integer(const json& v, const std::string& field) const {
        if (!v.is_number_integer()) fail(field, "expected an integer");
        const auto x = v.get<std::int64_t>();
        if (x < INT32_MIN || x > INT32_MAX) fail(field, "integer out of range");
        return static_cast<int>(x);
    }

    const json& array(const json& v, const std::string& field) const {
        if (!v.is_array()) fail(field, "expected a list");
        return v;
    }

    std::vector<int> integers(const json& v, const std::string& field) const {
        std::vector<int> out;
        std::size_t i = 0;
        for (const json& x : array(v, field)) {
            out.push_back(integer(x, field + "[" + std::to_string(i) + "]"));
            ++i;
        }
        return out;
    }

private:
    std::string_view text_;
};

}  // namespace

StructuredSystem parse_system(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const Locus l = locus_at(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError("malformed document at line " + std::to_string(l.line) + ", column " +
                             std::to_string(l.column) + ": " + e.what(),
                         l.line, l.column, "");
    }
    const Reader r(text);
    if (!doc.is_object()) throw ParseError("document must be an object", 1, 1, "");
    for (const auto& [key, value] : doc.items())
        if (key != "n" && key != "inputs" && key != "edges" && key != "targets") r.fail(key, "unknown field");
    for (const char* key : {"n", "inputs", "edges", "targets"})
        if (!doc.contains(key)) throw ParseError(std::string("missing field ") + key, 1, 1, key);

    StructuredSystem sys;
    sys.n = r.integer(doc["n"], "n");
    const json& inputs = r.array(doc["inputs"], "inputs");
    sys.m = static_cast<int>(inputs.size());
    for (std::size_t k = 0; k < inputs.size(); ++k)
        for (int x : r.integers(inputs[k], "inputs[" + std::to_string(k) + "]"))
            sys.b_pattern.push_back({static_cast<int>(k) + 1, x});
    const json& edges = r.array(doc["edges"], "edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string field = "edges[" + std::to_string(i) + "]";
        const auto pair = r.integers(edges[i], field);
        if (pair.size() != 2) r.fail(field, "expected a pair [from, to]");
        sys.a_pattern.push_back({pair[0], pair[1]});
    }
    sys.targets = r.integers(doc["targets"], "targets");
    sys.validate();
    return sys;
}

StructuredSystem load_system(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path, 0, 0, "");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_system(ss.str());
}

std::string emit_system(const StructuredSystem& sys) {
    const StructuredSystem c = canonical(sys);
    json inputs = json::array();
    for (int k = 1; k <= c.m; ++k) {
        json row = json::array();
        for (const InputEdge& e : c.b_pattern)
            if (e.input == k) row.push_back(e.to);
        inputs.push_back(row);
    }
    json edges = json::array();
    for (const Edge& e : c.a_pattern) edges.push_back({e.from, e.to});
    auto list = [](const json& v) {
        std::string s = v.dump();
        std::string out;
        for (char ch : s) {
            out += ch;
            if (ch == ',') out += ' ';
        }
        return out;
    };
    return "{\n  \"n\": " + std::to_string(c.n) + ",\n  \"inputs\": " + list(inputs) + ",\n  \"edges\": " +
           list(edges) + ",\n  \"targets\": " + list(json(c.targets)) + "\n}\n";
}

namespace {

ordered_json node_lists(const std::vector<std::vector<Node>>& v) {
    ordered_json out = ordered_json::array();
    for (const auto& x : v) out.push_back(x);
    return out;
}

ordered_json edge_list(const std::vector<Edge>& edges) {
    ordered_json out = ordered_json::array();
    for (const Edge& e : edges) out.push_back({e.from, e.to});
    return out;
}

struct WitnessJson {
    ordered_json operator()(const NoWitness&) const { return nullptr; }
    ordered_json operator()(const NotApplicable& w) const {
        return {{"type", "not_applicable"}, {"reason", w.reason}};
    }
    ordered_json operator()(const DepthCollision& w) const {
        ordered_json j{{"type", "depth_collision"}, {"first", w.first}, {"second", w.second}, {"depth", w.depth}};
        if (w.residue) j["class"] = *w.residue;
        return j;
    }
    ordered_json operator()(const SharedCycle& w) const {
        return {{"type", "shared_cycle"}, {"first", w.first}, {"second", w.second}, {"cycle", w.cycle},
                {"class", w.residue}};
    }
    ordered_json operator()(const StemCycleCover& w) const {
        ordered_json stems = ordered_json::array();
        for (const Stem& s : w.stems) stems.push_back({{"input", s.input}, {"nodes", s.nodes}});
        return {{"type", "stem_cycle_cover"}, {"stems", stems}, {"cycles", node_lists(w.cycles)}};
    }
    ordered_json operator()(const LengthMatching& w) const {
        ordered_json pairs = ordered_json::array();
        for (const MatchedColumn& p : w.pairs)
            pairs.push_back({{"target", p.target}, {"input", p.input}, {"length", p.length}});
        return {{"type", "length_matching"}, {"max_length", w.max_length}, {"pairs", pairs}};
    }
    ordered_json operator()(const HallViolator& w) const {
        return {{"type", "hall_violator"}, {"targets", w.targets}, {"columns", w.column_count},
                {"max_length", w.max_length}};
    }
    ordered_json operator()(const SpanningSubgraph& w) const {
        return {{"type", "spanning_subgraph"}, {"input_successors", w.input_successors},
                {"edges", edge_list(w.edges)}, {"covered", w.covered}};
    }
};

std::string join(const std::vector<int>& v, const char* sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

std::string set_text(const std::vector<int>& v) { return "{" + join(v) + "}"; }

std::string cycle_text(const std::vector<Node>& c) {
    std::string out = join(c, " -> ");
    if (!c.empty()) out += " -> " + std::to_string(c.front());
    return out;
}

struct WitnessText {
    std::string operator()(const NoWitness&) const { return ""; }
    std::string operator()(const NotApplicable& w) const { return "not applicable: " + w.reason; }
    std::string operator()(const DepthCollision& w) const {
        std::string s = "targets " + std::to_string(w.first) + " and " + std::to_string(w.second) +
                        " share shortest path length " + std::to_string(w.depth);
        if (w.residue) s += " in class X_" + std::to_string(*w.residue);
        return s;
    }
    std::string operator()(const SharedCycle& w) const {
        return "targets " + std::to_string(w.first) + " and " + std::to_string(w.second) + " of class X_" +
               std::to_string(w.residue) + " hang off the same cycle " + cycle_text(w.cycle);
    }
    std::string operator()(const StemCycleCover& w) const {
        std::string s;
        for (const Stem& st : w.stems) {
            if (!s.empty()) s += "; ";
            s += "stem u" + std::to_string(st.input) + " -> " + join(st.nodes, " -> ");
        }
        for (const auto& c : w.cycles) {
            if (!s.empty()) s += "; ";
            s += "cycle " + cycle_text(c);
        }
        return s;
    }
    std::string operator()(const LengthMatching& w) const {
        std::string s = "matching (lengths up to " + std::to_string(w.max_length) + "):";
        for (const MatchedColumn& p : w.pairs)
            s += " " + std::to_string(p.target) + "~(u" + std::to_string(p.input) + "," + std::to_string(p.length) +
                 ")";
        return s;
    }
    std::string operator()(const HallViolator& w) const {
        return "targets " + set_text(w.targets) + " reach only " + std::to_string(w.column_count) +
               " walk lengths up to " + std::to_string(w.max_length);
    }
    std::string operator()(const SpanningSubgraph& w) const {
        std::string s = "elementary Christmas tree on " + set_text(w.covered) + ", input edges to " +
                        set_text(w.input_successors) + ", edges";
        for (const Edge& e : w.edges) s += " " + std::to_string(e.from) + "->" + std::to_string(e.to);
        return s;
    }
};

}  // namespace

ordered_json witness_json(const Witness& w) { return std::visit(WitnessJson{}, w); }

ordered_json report_json(const StructuredSystem& sys, const Analysis& a, const ReportSettings& s) {
    ordered_json j;
    const StructuredSystem c = canonical(sys);
    j["system"] = {{"n", c.n}, {"m", c.m}, {"edges", c.a_pattern.size()}, {"targets", c.targets}};

    ordered_json settings;
    settings["seed"] = s.seed;
    settings["trials"] = s.trials;
    settings["max_weight"] = s.max_weight;
    settings["k"] = s.k ? ordered_json(*s.k) : ordered_json("auto");
    settings["oracle"] = s.oracle;
    settings["span_budget"] = s.span_budget;
    j["settings"] = settings;

    const auto& cls = a.classification;
    ordered_json cj;
    cj["kind"] = to_string(cls.kind);
    if (cls.kind == GraphKind::elementary) cj["r"] = cls.period ? ordered_json(*cls.period) : ordered_json("acyclic");
    else cj["r"] = nullptr;
    ordered_json classes = ordered_json::array();
    for (std::size_t i = 0; i < cls.classes.size(); ++i)
        classes.push_back({{"class", i}, {"nodes", cls.classes[i]}});
    cj["classes"] = classes;
    if (cls.violation)
        cj["violation"] = {{"condition", to_string(cls.violation->condition)},
                           {"witness", cls.violation->witness},
                           {"message", cls.violation->message}};
    else
        cj["violation"] = nullptr;
    if (!cls.note.empty()) cj["note"] = cls.note;
    j["classification"] = cj;

    ordered_json criteria = ordered_json::array();
    for (const auto& v : a.verdicts) {
        ordered_json cv{{"criterion", to_string(v.id)}, {"verdict", to_string(v.verdict)},
                        {"witness", witness_json(v.witness)}};
        if (!v.note.empty()) cv["note"] = v.note;
        criteria.push_back(cv);
    }
    j["criteria"] = criteria;
    if (a.spanning)
        j["spanning"] = {{"status", to_string(a.spanning->status)}, {"explored", a.spanning->explored}};
    else
        j["spanning"] = nullptr;
    j["bipartite_max_length"] = a.bipartite_bound;

    if (a.oracle) {
        const OracleResult& o = *a.oracle;
        j["oracle"] = {{"k", o.k},
                       {"k_mode", s.k ? "fixed" : "auto (n)"},
                       {"trials", o.trials},
                       {"seed", o.seed},
                       {"max_weight", o.max_weight},
                       {"per_trial_ranks", o.per_trial_ranks},
                       {"certified_rank", o.certified_rank},
                       {"target_count", o.target_count},
                       {"ctrb_dimension", a.ctrb_dimension ? ordered_json(*a.ctrb_dimension) : ordered_json(nullptr)}};
    } else {
        j["oracle"] = nullptr;
    }
    j["conclusion"] = to_string(a.conclusion);
    j["certainty"] = to_string(a.certainty);
    j["basis"] = a.basis.empty() ? ordered_json(nullptr) : ordered_json(a.basis);
    j["notes"] = a.notes;
    j["error"] = nullptr;
    return j;
}

std::string report_text(const StructuredSystem& sys, const Analysis& a, const ReportSettings& s) {
    std::ostringstream out;
    const StructuredSystem c = canonical(sys);
    out << "system: n = " << c.n << ", m = " << c.m << ", " << c.a_pattern.size() << " edges, T = "
        << set_text(c.targets) << "\n";

    const auto& cls = a.classification;
    out << "graph: ";
    switch (cls.kind) {
        case GraphKind::elementary:
            out << "elementary Christmas tree, ";
            if (cls.period) out << "cycle length r = " << *cls.period << "\n";
            else out << "acyclic\n";
            for (std::size_t i = 0; i < cls.classes.size(); ++i)
                out << "  periodic class X_" << i << " = " << set_text(cls.classes[i]) << "\n";
            break;
        case GraphKind::christmas:
        case GraphKind::neither:
            out << (cls.kind == GraphKind::christmas ? "Christmas tree, not elementary" : "not a Christmas tree");
            if (cls.violation)
                out << " (" << to_string(cls.violation->condition) << " fails: " << cls.violation->message << ")";
            out << "\n";
            break;
        case GraphKind::not_applicable: out << "not classified (" << cls.note << ")\n"; break;
    }

    out << "criteria:\n";
    for (const auto& v : a.verdicts) {
        out << "  " << to_string(v.id) << ": " << to_string(v.verdict) << "\n";
        const std::string w = std::visit(WitnessText{}, v.witness);
        if (!w.empty()) out << "    " << w << "\n";
        if (!v.note.empty()) out << "    note: " << v.note << "\n";
    }
    if (a.spanning)
        out << "spanning search: " << to_string(a.spanning->status) << " after " << a.spanning->explored
            << " candidates\n";
    out << "bipartite lengths bounded by " << a.bipartite_bound << "\n";

    if (a.oracle) {
        const OracleResult& o = *a.oracle;
        out << "oracle: k = " << o.k << (s.k ? "" : " (auto)") << ", seed " << o.seed << ", M = " << o.max_weight
            << ", ranks [" << join(o.per_trial_ranks) << "] over " << o.trials << " trials, certified rank "
            << o.certified_rank << " / |T| = " << o.target_count;
        if (a.ctrb_dimension) out << ", generic dimension " << *a.ctrb_dimension;
        out << "\n";
    } else {
        out << "oracle: skipped\n";
    }
    out << "conclusion: " << to_string(a.conclusion);
    if (a.certainty != Certainty::none) out << " (" << to_string(a.certainty) << ", via " << a.basis << ")";
    out << "\n";
    for (const auto& n : a.notes) out << "note: " << n << "\n";
    return out.str();
}

ordered_json error_report_json(const std::string& kind, const std::string& message, const ParseError* where) {
    ordered_json err{{"kind", kind}, {"message", message}};
    if (where) {
        err["line"] = where->line();
        err["column"] = where->column();
        err["field"] = where->field();
    }
    ordered_json j;
    j["conclusion"] = nullptr;
    j["error"] = err;
    return j;
}

std::string error_report_text(const std::string& kind, const std::string& message, const ParseError* where) {
    std::string s = "error (" + kind + "): " + message + "\n";
    if (where && !where->field().empty()) s += "field: " + where->field() + "\n";
    return s;
}

}  // namespace stc
