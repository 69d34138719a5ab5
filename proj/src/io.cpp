#include "fintop/io.hpp"

#include "fintop/errors.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace fintop {

namespace {

std::string strip(const std::string& line) {
    std::string s = line.substr(0, line.find('#'));
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_fail(const std::string& filename, int line, const std::string& msg) {
    throw ParseError(filename + ":" + std::to_string(line) + ": " + msg);
}

// Torsion factors fit in an int64 at any realistic scale; fall back to a
// string representation when they do not.
nlohmann::json integer_to_json(const Integer& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return v.convert_to<long long>();
    return v.str();
}

} // namespace

FinitePoset parse_poset(std::istream& in, const std::string& filename) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> relations;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = strip(raw);
        if (line.empty()) continue;
        std::istringstream tok(line);
        std::string kind;
        tok >> kind;
        if (kind == "element") {
            std::string name, extra;
            if (!(tok >> name) || (tok >> extra))
                parse_fail(filename, lineno, "expected: element NAME");
            if (std::find(labels.begin(), labels.end(), name) != labels.end())
                parse_fail(filename, lineno, "duplicate element " + name);
            labels.push_back(name);
        } else if (kind == "rel") {
            std::string lo, lt, hi, extra;
            if (!(tok >> lo >> lt >> hi) || lt != "<" || (tok >> extra))
                parse_fail(filename, lineno, "expected: rel LOWER < UPPER");
            relations.emplace_back(lo, hi);
        } else {
            parse_fail(filename, lineno, "unknown directive '" + kind + "'");
        }
    }
    try {
        return build_poset(std::move(labels), relations);
    } catch (const Error& e) {
        throw ParseError(filename + ": " + e.what());
    }
}

FinitePoset load_poset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    return parse_poset(in, path);
}

PointMap parse_map(std::istream& in, const FinitePoset& dom, const FinitePoset& cod,
                   const std::string& filename) {
    std::vector<int> img(dom.size(), -1);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = strip(raw);
        if (line.empty()) continue;
        std::istringstream tok(line);
        std::string kind, from, arrow, to, extra;
        tok >> kind;
        if (kind != "map" || !(tok >> from >> arrow >> to) || arrow != "->" || (tok >> extra))
            parse_fail(filename, lineno, "expected: map NAME -> NAME");
        auto x = dom.find(from);
        if (!x) parse_fail(filename, lineno, "unknown domain element " + from);
        auto y = cod.find(to);
        if (!y) parse_fail(filename, lineno, "unknown codomain element " + to);
        if (img[*x] != -1) parse_fail(filename, lineno, from + " is mapped twice");
        img[*x] = *y;
    }
    for (int x = 0; x < dom.size(); ++x)
        if (img[x] == -1) throw ParseError(filename + ": no image for element " + dom.label(x));
    return PointMap(dom, cod, std::move(img));
}

PointMap load_map(const std::string& path, const FinitePoset& dom, const FinitePoset& cod) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    return parse_map(in, dom, cod, path);
}

nlohmann::json poset_to_json(const FinitePoset& X) {
    nlohmann::json covers = nlohmann::json::array();
    for (const auto& [a, b] : X.covers())
        covers.push_back({X.label(a), X.label(b)});
    return {{"labels", X.labels()}, {"covers", covers}};
}

FinitePoset poset_from_json(const nlohmann::json& j) {
    std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> relations;
    for (const auto& pair : j.at("covers"))
        relations.emplace_back(pair.at(1).get<std::string>(), pair.at(0).get<std::string>());
    return build_poset(std::move(labels), relations);
}

nlohmann::json homology_to_json(const HomologyResult& h) {
    HomologyResult t = h.trimmed();
    nlohmann::json torsion = nlohmann::json::array();
    for (const auto& degree : t.torsion) {
        nlohmann::json factors = nlohmann::json::array();
        for (const auto& d : degree) factors.push_back(integer_to_json(d));
        torsion.push_back(factors);
    }
    return {{"betti", t.betti}, {"torsion", torsion}, {"hdim", h.top_nonzero_degree()}};
}

nlohmann::json ledger_to_json(const CheckLedger& ledger) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : ledger.entries) {
        nlohmann::json entry = {{"name", e.name}, {"pass", e.pass}};
        if (!e.detail.empty()) entry["detail"] = e.detail;
        out.push_back(entry);
    }
    return out;
}

nlohmann::json report_to_json(const BettiReport& report) {
    nlohmann::json steps = nlohmann::json::array();
    for (std::size_t i = 0; i < report.step_betti.size(); ++i) {
        nlohmann::json torsion = nlohmann::json::array();
        for (const auto& degree : report.step_torsion[i]) {
            nlohmann::json factors = nlohmann::json::array();
            for (const auto& d : degree) factors.push_back(integer_to_json(d));
            torsion.push_back(factors);
        }
        steps.push_back({{"edge", {report.step_edges[i].first, report.step_edges[i].second}},
                         {"betti", report.step_betti[i]},
                         {"torsion", torsion},
                         {"cumulative_betti", report.cumulative_betti[i]}});
    }
    return {{"betti", {{"source", report.source_betti}, {"target", report.target_betti}}},
            {"steps", steps},
            {"residuals", report.residuals},
            {"pass", report.passing()}};
}

nlohmann::json trace_steps_to_json(const ContractionTrace& t) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& step : t.steps)
        steps.push_back({{"edge", {step.source.label(step.edge.first), step.source.label(step.edge.second)}},
                         {"merged", step.result.label(step.merged)},
                         {"result", poset_to_json(step.result)}});
    return steps;
}

nlohmann::json sweep_to_json(const SweepSummary& summary) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : summary.failures)
        failures.push_back(
            {{"n", f.n}, {"poset", f.poset}, {"check", f.check}, {"detail", f.detail}});
    return {{"max_n", summary.max_n},
            {"posets_per_n", summary.posets_per_n},
            {"posets", summary.posets},
            {"edges", summary.edges},
            {"checks", summary.checks},
            {"checks_run", summary.checks_run},
            {"failures", failures},
            {"pass", summary.all_passed()}};
}

} // namespace fintop
