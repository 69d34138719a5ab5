#include "fintop/commands.hpp"

#include "fintop/chains.hpp"
#include "fintop/errors.hpp"
#include "fintop/io.hpp"
#include "fintop/verify.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>

namespace fintop::cli {

namespace {

using nlohmann::json;

// Input problems exit with 2; any failing check with 1.
template <typename Body>
int guarded(Streams io, Body&& body) {
    try {
        return body();
    } catch (const Error& e) {
        io.err << "error: " << e.what() << "\n";
        return 2;
    }
}

std::string label_list(const FinitePoset& X, const std::vector<int>& elems) {
    std::string s = "{";
    for (std::size_t i = 0; i < elems.size(); ++i) s += (i ? "," : "") + X.label(elems[i]);
    return s + "}";
}

struct MapInput {
    FinitePoset dom, cod;
    PointMap map;
};

MapInput load_map_input(const std::string& dom_path, const std::string& cod_path,
                        const std::string& map_path) {
    FinitePoset dom = load_poset(dom_path);
    FinitePoset cod = load_poset(cod_path);
    PointMap map = load_map(map_path, dom, cod);
    return {std::move(dom), std::move(cod), std::move(map)};
}

json map_to_json(const PointMap& f) {
    json out = json::array();
    for (int x = 0; x < f.dom.size(); ++x)
        out.push_back({f.dom.label(x), f.cod.label(f.img[x])});
    return out;
}

} // namespace

int cmd_info(const std::string& poset_path, bool as_json, Streams io) {
    return guarded(io, [&] {
        FinitePoset X = load_poset(poset_path);
        long strict = 0;
        for (int x = 0; x < X.size(); ++x)
            for (int y = 0; y < X.size(); ++y)
                if (X.less(x, y)) ++strict;
        auto beats = X.beat_points();
        auto [core_space, removed] = X.size() > 0 ? core(X) : std::make_pair(X, std::vector<std::string>{});
        if (as_json) {
            json beat_labels = json::array();
            for (int b : beats) beat_labels.push_back(X.label(b));
            json j = {{"poset", poset_to_json(X)},
                      {"elements", X.size()},
                      {"strict_relations", strict},
                      {"hasse_edges", X.covers().size()},
                      {"beat_points", beat_labels},
                      {"minimal", beats.empty()},
                      {"core_size", core_space.size()}};
            io.out << j.dump(2) << "\n";
        } else {
            io.out << "elements:      " << X.size() << "\n";
            io.out << "relations:     " << strict << " strict pairs\n";
            io.out << "hasse edges:   " << X.covers().size() << "\n";
            io.out << "beat points:   " << label_list(X, beats) << "\n";
            io.out << "minimal:       " << (beats.empty() ? "yes" : "no") << "\n";
            io.out << "core size:     " << core_space.size() << "\n";
        }
        return 0;
    });
}

int cmd_homology(const std::string& poset_path, Streams io) {
    return guarded(io, [&] {
        FinitePoset X = load_poset(poset_path);
        io.out << homology_to_json(space_homology(X)).dump(2) << "\n";
        return 0;
    });
}

int cmd_contract(const std::string& poset_path, const std::string& edge_spec, Streams io) {
    return guarded(io, [&] {
        FinitePoset X = load_poset(poset_path);
        const auto comma = edge_spec.find(',');
        if (comma == std::string::npos)
            throw InvalidInput("--edge expects UPPER,LOWER labels");
        const int a = X.index_of(edge_spec.substr(0, comma));
        const int b = X.index_of(edge_spec.substr(comma + 1));
        EdgeContraction ec = contract_edge(X, {a, b});
        CokernelComplex ck = cokernel_complex(X, {&ec, 1});
        HomologyResult hk = homology(ck.complex);

        json sizes = json::array();
        json basis = json::array();
        for (int r = 0; r < ck.complex.degrees(); ++r) {
            sizes.push_back(ck.complex.dim(r));
            basis.push_back(ck.complex.basis[r]);
        }
        const char* verdict = "not_guaranteed";
        switch (whe_criterion(X, {a, b})) {
            case WheVerdict::GuaranteedByOpenSets: verdict = "guaranteed_by_open_sets"; break;
            case WheVerdict::GuaranteedByClosures: verdict = "guaranteed_by_closures"; break;
            case WheVerdict::NotGuaranteed: break;
        }
        json j = {{"result", poset_to_json(ec.result)},
                  {"merged", ec.result.label(ec.merged)},
                  {"cokernel_basis_sizes", sizes},
                  {"cokernel_basis", basis},
                  {"cokernel_homology", homology_to_json(hk)},
                  {"quasi_isomorphism", hk.all_zero()},
                  {"whe_criterion", verdict}};
        io.out << j.dump(2) << "\n";
        return 0;
    });
}

namespace {

int decompose_like(const std::string& dom_path, const std::string& cod_path,
                   const std::string& map_path, bool with_ledger, Streams io) {
    return guarded(io, [&] {
        MapInput in = load_map_input(dom_path, cod_path, map_path);
        std::optional<ContractionTrace> trace;
        try {
            trace = decompose(in.map);
        } catch (const NotMonotone& e) {
            json j = {{"monotone", false},
                      {"witness", {{"kind", e.kind()}, {"elements", e.witness()}}},
                      {"message", e.what()}};
            io.out << j.dump(2) << "\n";
            return 1;
        }
        BettiReport report = betti_report_for_trace(*trace);
        json j = report_to_json(report);
        j["monotone"] = true;
        j["steps_detail"] = trace_steps_to_json(*trace);
        bool pass = report.passing();
        if (with_ledger) {
            CheckLedger ledger = verify_trace(*trace);
            j["ledger"] = ledger_to_json(ledger);
            pass = pass && ledger.all_passed();
        }
        io.out << j.dump(2) << "\n";
        return pass ? 0 : 1;
    });
}

} // namespace

int cmd_decompose(const std::string& dom_path, const std::string& cod_path,
                  const std::string& map_path, Streams io) {
    return decompose_like(dom_path, cod_path, map_path, /*with_ledger=*/false, io);
}

int cmd_verify(const std::string& dom_path, const std::string& cod_path,
               const std::string& map_path, Streams io) {
    return decompose_like(dom_path, cod_path, map_path, /*with_ledger=*/true, io);
}

int cmd_monotone(const std::string& dom_path, const std::string& cod_path,
                 const std::string& map_path, Streams io) {
    return guarded(io, [&] {
        MapInput in = load_map_input(dom_path, cod_path, map_path);
        MonotoneVerdict verdict = monotone_verdict(in.map);
        if (verdict.monotone) {
            io.out << json{{"monotone", true}}.dump(2) << "\n";
            return 0;
        }
        json j = {{"monotone", false},
                  {"witness", {{"kind", verdict.witness_kind}, {"elements", verdict.witness}}}};
        io.out << j.dump(2) << "\n";
        return 1;
    });
}

int cmd_factorize(const std::string& dom_path, const std::string& cod_path,
                  const std::string& map_path, Streams io) {
    return guarded(io, [&] {
        MapInput in = load_map_input(dom_path, cod_path, map_path);
        Factorization fac = factorize(in.map);
        CheckLedger ledger = factorization_report(in.map);
        json j = {{"quotient", poset_to_json(fac.quotient)},
                  {"steps", trace_steps_to_json(fac.g_trace)},
                  {"residual_map", map_to_json(fac.discrete_part)},
                  {"ledger", ledger_to_json(ledger)}};
        io.out << j.dump(2) << "\n";
        return ledger.all_passed() ? 0 : 1;
    });
}

int cmd_gminimal(const std::string& poset_path, Streams io) {
    return guarded(io, [&] {
        FinitePoset X = load_poset(poset_path);
        json edges = json::array();
        bool gmin = true;
        for (const auto& e : X.covers()) {
            const bool qi = is_quasi_iso_contraction(contract_edge(X, e));
            gmin = gmin && !qi;
            edges.push_back(
                {{"edge", {X.label(e.first), X.label(e.second)}}, {"quasi_isomorphism", qi}});
        }
        json j = {{"g_minimal", gmin}, {"minimal", is_minimal(X)}, {"edges", edges}};
        io.out << j.dump(2) << "\n";
        return gmin ? 0 : 1;
    });
}

int cmd_sweep(const SweepArgs& args, Streams io) {
    return guarded(io, [&] {
        SweepOptions options;
        options.max_n = args.max_n;
        options.seed = args.seed;
        options.jobs = args.jobs;
        if (args.checks == "default") {
            options.checks = default_sweep_checks();
        } else if (args.checks == "all") {
            options.checks = all_sweep_checks();
        } else {
            options.checks.clear();
            std::istringstream ss(args.checks);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) options.checks.push_back(item);
            const auto known = all_sweep_checks();
            for (const auto& c : options.checks)
                if (std::find(known.begin(), known.end(), c) == known.end())
                    throw InvalidInput("unknown sweep check: " + c);
        }
        SweepSummary summary = sweep(options);
        io.out << sweep_to_json(summary).dump(2) << "\n";
        return summary.all_passed() ? 0 : 1;
    });
}

} // namespace fintop::cli
