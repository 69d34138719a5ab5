#include "fintop/verify.hpp"

#include "fintop/chains.hpp"
#include "fintop/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

namespace fintop {

namespace {

std::string betti_string(const std::vector<long>& b) {
    std::string s = "(";
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    return s + ")";
}

long betti_at(const std::vector<long>& b, int r) {
    return r >= 0 && r < static_cast<int>(b.size()) ? b[r] : 0;
}

std::string relations_string(const FinitePoset& X) {
    std::string s;
    for (const auto& [a, b] : X.covers()) {
        if (!s.empty()) s += " ";
        s += X.label(b) + "<" + X.label(a);
    }
    return s.empty() ? "(antichain of " + std::to_string(X.size()) + ")" : s;
}

} // namespace

bool BettiReport::passing() const {
    return std::all_of(residuals.begin(), residuals.end(), [](long r) { return r == 0; });
}

BettiReport betti_report_for_trace(const ContractionTrace& t) {
    BettiReport rep;
    HomologyResult src = space_homology(t.start);
    HomologyResult tgt = space_homology(t.target);
    rep.source_betti = src.betti;
    rep.target_betti = tgt.betti;

    int max_deg = static_cast<int>(std::max(src.betti.size(), tgt.betti.size()));
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const auto& step = t.steps[i];
        rep.step_edges.emplace_back(step.source.label(step.edge.first),
                                    step.source.label(step.edge.second));
        HomologyResult h = homology(cokernel_complex(step.source, trace_step(t, i)).complex);
        max_deg = std::max(max_deg, static_cast<int>(h.betti.size()) - 1);
        rep.step_betti.push_back(h.betti);
        rep.step_torsion.push_back(h.torsion);

        HomologyResult cum = homology(cokernel_complex(t.start, trace_prefix(t, i + 1)).complex);
        rep.cumulative_betti.push_back(cum.betti);
    }

    rep.residuals.resize(std::max(max_deg, 1));
    for (int r = 0; r < static_cast<int>(rep.residuals.size()); ++r) {
        long sum = 0;
        for (const auto& sb : rep.step_betti) sum += betti_at(sb, r + 1);
        rep.residuals[r] = betti_at(rep.source_betti, r) - betti_at(rep.target_betti, r) - sum;
    }
    return rep;
}

BettiReport betti_decomposition(const PointMap& f) { return betti_report_for_trace(decompose(f)); }

void CheckLedger::add(std::string name, bool pass, std::string detail) {
    entries.push_back({std::move(name), pass, std::move(detail)});
}

bool CheckLedger::all_passed() const {
    return std::all_of(entries.begin(), entries.end(), [](const LedgerEntry& e) { return e.pass; });
}

const LedgerEntry* CheckLedger::find(std::string_view name) const {
    for (const auto& e : entries)
        if (e.name == name) return &e;
    return nullptr;
}

CheckLedger verify_trace(const ContractionTrace& t) {
    validate(t);
    CheckLedger ledger;
    const int n = static_cast<int>(t.steps.size());

    // Homology of every intermediate space, X_0 = start.
    std::vector<HomologyResult> hom(n + 1);
    hom[0] = space_homology(t.start);
    for (int i = 0; i < n; ++i) hom[i + 1] = space_homology(t.steps[i].result);
    HomologyResult hom_target = space_homology(t.target);

    std::vector<HomologyResult> step_coker(n);
    std::vector<int> step_coker_dim0(n);
    for (int i = 0; i < n; ++i) {
        CokernelComplex ck = cokernel_complex(t.steps[i].source, trace_step(t, i));
        step_coker[i] = homology(ck.complex);
        step_coker_dim0[i] = ck.complex.dim(0);
    }

    std::vector<HomologyResult> cum_coker(n + 1); // cum_coker[i] for prefix length i >= 1
    std::vector<CokernelComplex> cum_complex(n + 1);
    for (int i = 1; i <= n; ++i) {
        cum_complex[i] = cokernel_complex(t.start, trace_prefix(t, i));
        cum_coker[i] = homology(cum_complex[i].complex);
    }

    // (a) kernels of the composite chain maps are acyclic, every prefix.
    {
        bool pass = true;
        std::string detail;
        for (int i = 1; i <= n && pass; ++i) {
            HomologyResult h = homology(kernel_complex(t.start, trace_prefix(t, i)).complex);
            if (!h.all_zero()) {
                pass = false;
                detail = "prefix " + std::to_string(i) + " kernel has homology " +
                         betti_string(h.betti);
            }
        }
        ledger.add("kernel_acyclic", pass, detail);
    }

    // (b) per-step rank identity.
    {
        bool pass = true;
        std::string detail;
        for (int i = 0; i < n && pass; ++i) {
            const int top = std::max({static_cast<int>(hom[i].betti.size()),
                                      static_cast<int>(hom[i + 1].betti.size()),
                                      static_cast<int>(step_coker[i].betti.size())});
            for (int r = 0; r < top; ++r)
                if (hom[i].betti_at(r) != hom[i + 1].betti_at(r) + step_coker[i].betti_at(r + 1)) {
                    pass = false;
                    detail = "step " + std::to_string(i + 1) + " degree " + std::to_string(r);
                    break;
                }
        }
        ledger.add("step_rank_identity", pass, detail);
    }

    // (c) step cokernels have no degree-0 generators.
    {
        bool pass = true;
        std::string detail;
        for (int i = 0; i < n; ++i)
            if (step_coker_dim0[i] != 0) {
                pass = false;
                detail = "step " + std::to_string(i + 1);
                break;
            }
        ledger.add("cokernel_degree0_empty", pass, detail);
    }

    // (d) cumulative cokernel Betti numbers add up stepwise.
    {
        bool pass = true;
        std::string detail;
        for (int i = 1; i < n && pass; ++i) {
            const int top = std::max({static_cast<int>(cum_coker[i + 1].betti.size()),
                                      static_cast<int>(cum_coker[i].betti.size()),
                                      static_cast<int>(step_coker[i].betti.size())});
            for (int r = 0; r < top; ++r)
                if (cum_coker[i + 1].betti_at(r) !=
                    cum_coker[i].betti_at(r) + step_coker[i].betti_at(r)) {
                    pass = false;
                    detail = "prefix " + std::to_string(i + 1) + " degree " + std::to_string(r);
                    break;
                }
        }
        ledger.add("cumulative_additivity", pass, detail);
    }

    // (e) end-to-end Betti identity.
    {
        bool pass = true;
        std::string detail;
        const int top = std::max({static_cast<int>(hom[0].betti.size()),
                                  static_cast<int>(hom_target.betti.size()),
                                  n > 0 ? static_cast<int>(cum_coker[n].betti.size()) : 0});
        for (int r = 0; r < top; ++r) {
            long full = n > 0 ? cum_coker[n].betti_at(r + 1) : 0;
            if (hom[0].betti_at(r) != hom_target.betti_at(r) + full) {
                pass = false;
                detail = "degree " + std::to_string(r);
                break;
            }
        }
        ledger.add("end_to_end_betti", pass, detail);
    }

    // (f) homological dimension never grows.
    {
        bool pass = true;
        std::string detail;
        for (int i = 0; i < n; ++i)
            if (hom[i + 1].top_nonzero_degree() > hom[i].top_nonzero_degree()) {
                pass = false;
                detail = "step " + std::to_string(i + 1);
                break;
            }
        ledger.add("hdim_nonincrease", pass, detail);
    }

    // (g) module-rank exactness per degree, every prefix: the source chain
    // group splits as kernel + image, the end chain group as image + cokernel.
    {
        bool pass = true;
        std::string detail;
        ChainComplex source = chain_complex(order_complex(t.start));
        for (int i = 1; i <= n && pass; ++i) {
            KernelComplex kern = kernel_complex(t.start, trace_prefix(t, i));
            const FinitePoset& end = t.steps[i - 1].result;
            ChainComplex endc = chain_complex(order_complex(end));
            const int top = std::max(source.degrees(), endc.degrees());
            for (int r = 0; r < top; ++r) {
                const int image_r = endc.dim(r) - cum_complex[i].complex.dim(r);
                if (source.dim(r) != kern.complex.dim(r) + image_r) {
                    pass = false;
                    detail = "prefix " + std::to_string(i) + " degree " + std::to_string(r);
                    break;
                }
            }
        }
        ledger.add("exactness_ranks", pass, detail);
    }

    // Torsion along the trace is reported, never asserted: the short exact
    // sequences determine ranks, not the group extensions.
    {
        std::string detail;
        for (int i = 0; i <= n; ++i)
            for (std::size_t r = 0; r < hom[i].torsion.size(); ++r)
                if (!hom[i].torsion[r].empty()) {
                    detail += (detail.empty() ? "" : "; ") + std::string("space ") + std::to_string(i) +
                              " degree " + std::to_string(r) + ": ";
                    for (std::size_t k = 0; k < hom[i].torsion[r].size(); ++k)
                        detail += (k ? "," : "") + hom[i].torsion[r][k].str();
                }
        ledger.add("torsion_observed", true, detail.empty() ? "none" : detail);
    }

    return ledger;
}

CheckLedger factorization_report(const PointMap& f) {
    CheckLedger ledger;
    Factorization fac = factorize(f); // antichain fibers verified inside

    PointMap g = fac.g_trace.composite();
    PointMap composite = compose(fac.discrete_part, g);
    ledger.add("factors_pointwise", composite.img == f.img);
    ledger.add("discrete_fibers", true);
    ledger.add("g_monotone", is_monotone(g));

    BettiReport rep = betti_report_for_trace(fac.g_trace);
    std::string detail;
    if (!rep.passing()) detail = "residuals " + betti_string(rep.residuals);
    ledger.add("g_star_surjective_rank", rep.passing(), detail);
    return ledger;
}

namespace {

// Pairwise relation codes for the enumerator: 0 incomparable, 1 lo<hi, 2 hi<lo.
struct PairEnumerator {
    int n;
    std::vector<std::vector<int>> rel; // rel[i][j], i < j
    std::vector<FinitePoset>* out;

    void run() {
        rel.assign(n, std::vector<int>(n, 0));
        assign(0, 1);
    }

    void assign(int i, int j) {
        if (j == n) {
            emit();
            return;
        }
        const int ni = i + 1 == j ? 0 : i + 1;
        const int nj = i + 1 == j ? j + 1 : j;
        for (int v = 0; v < 3; ++v) {
            rel[i][j] = v;
            if (consistent(i, j)) assign(ni, nj);
        }
        rel[i][j] = 0;
    }

    int code(int x, int y) const { // relation between x < y (indices)
        return rel[x][y];
    }

    bool lt(int x, int y) const { // strict order x < y for arbitrary indices
        return x < y ? code(x, y) == 1 : code(y, x) == 2;
    }

    // All pairs among {x,i,j} with x < i < j are decided once (i,j) is set;
    // check the six transitivity implications on every such triple.
    bool consistent(int i, int j) const {
        for (int x = 0; x < i; ++x) {
            const int t[3] = {x, i, j};
            bool ok = true;
            for (int p = 0; p < 3 && ok; ++p)
                for (int q = 0; q < 3 && ok; ++q)
                    for (int s = 0; s < 3 && ok; ++s)
                        if (p != q && q != s && p != s && lt(t[p], t[q]) && lt(t[q], t[s]) &&
                            !lt(t[p], t[s]))
                            ok = false;
            if (!ok) return false;
        }
        return true;
    }

    void emit() {
        std::vector<std::string> labels(n);
        for (int x = 0; x < n; ++x) labels[x] = std::to_string(x);
        std::vector<char> order(static_cast<std::size_t>(n) * n, 0);
        for (int x = 0; x < n; ++x) order[static_cast<std::size_t>(x) * n + x] = 1;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (x != y && lt(x, y)) order[static_cast<std::size_t>(x) * n + y] = 1;
        out->push_back(FinitePoset::from_order_table(std::move(labels), std::move(order)));
    }
};

} // namespace

std::vector<FinitePoset> enumerate_posets(int n) {
    if (n < 1 || n > kMaxSweepElements)
        throw SweepTooLarge("poset enumeration supports 1.." + std::to_string(kMaxSweepElements) +
                            " elements");
    std::vector<FinitePoset> out;
    if (n == 1) {
        out.push_back(build_poset({"0"}, {}));
        return out;
    }
    PairEnumerator e{n, {}, &out};
    e.run();
    return out;
}

std::vector<std::string> default_sweep_checks() {
    return {"kernel_acyclic", "cokernel_degree0", "step_rank_identity", "hdim_nonincrease",
            "beat_edge_quasi_iso"};
}

std::vector<std::string> all_sweep_checks() {
    auto v = default_sweep_checks();
    for (const char* c : {"kappa_monotone", "preimage_formulas", "star_surjective", "core_homology",
                          "gmin_implies_min", "greedy_independence", "random_trace"})
        v.emplace_back(c);
    return v;
}

namespace {

struct SweepWorker {
    const std::vector<FinitePoset>* posets;
    const SweepOptions* options;
    int n;
    SweepSummary local;

    bool selected(std::string_view name) const {
        return std::find(options->checks.begin(), options->checks.end(), name) !=
               options->checks.end();
    }

    void fail(const FinitePoset& P, std::string check, std::string detail) {
        local.failures.push_back({n, relations_string(P), std::move(check), std::move(detail)});
    }

    void check(const FinitePoset& P, const char* name, bool ok, const std::string& detail) {
        ++local.checks_run;
        if (!ok) fail(P, name, detail);
    }

    // Mirrors the minimal-neighbourhood / closure preimage formulas of the
    // contraction map.
    bool preimage_formulas_hold(const EdgeContraction& ec) {
        const FinitePoset& X = ec.source;
        const FinitePoset& Q = ec.result;
        const auto [a, b] = ec.edge;
        for (int x = 0; x < X.size(); ++x) {
            const int qx = ec.kappa.img[x];
            for (int z = 0; z < X.size(); ++z) {
                bool in_pre_open = Q.leq(ec.kappa.img[z], qx);
                bool expect_open = X.leq(z, x) || (Q.leq(ec.merged, qx) && X.leq(z, a));
                if (in_pre_open != expect_open) return false;
                bool in_pre_closed = Q.leq(qx, ec.kappa.img[z]);
                bool expect_closed = X.leq(x, z) || (Q.leq(qx, ec.merged) && X.leq(b, z));
                if (in_pre_closed != expect_closed) return false;
            }
        }
        return true;
    }

    bool star_surjective_holds(const FinitePoset& X, std::pair<int, int> edge) {
        FinitePoset sub = edge_subspace(X, edge);
        const int a = sub.index_of(X.label(edge.first));
        const int b = sub.index_of(X.label(edge.second));
        EdgeContraction ec = contract_edge(sub, {a, b});
        OrderComplex K = order_complex(ec.result);
        for (const auto& level : K.simplices)
            for (const auto& simplex : level)
                if (!image_membership(simplex, sub, {&ec, 1})) return false;
        return true;
    }

    void greedy_independence(const FinitePoset& P) {
        // Fix the constant map; compare the two deterministic greedy orders.
        std::vector<int> img(P.size(), 0);
        PointMap constant(P, build_poset({"*"}, {}), img);
        ContractionTrace lex = decompose(constant, EdgeChoice::Lexicographic);
        ContractionTrace rev = decompose(constant, EdgeChoice::ReverseLexicographic);
        check(P, "greedy_independence", are_isomorphic(lex.end_space(), rev.end_space()),
              "end spaces differ");
        auto betti_multiset = [](const ContractionTrace& t) {
            std::vector<std::vector<long>> all;
            for (std::size_t i = 0; i < t.steps.size(); ++i)
                all.push_back(
                    homology(cokernel_complex(t.steps[i].source, trace_step(t, i)).complex).betti);
            for (auto& b : all)
                while (!b.empty() && b.back() == 0) b.pop_back();
            std::sort(all.begin(), all.end());
            return all;
        };
        check(P, "greedy_independence", betti_multiset(lex) == betti_multiset(rev),
              "per-step cokernel Betti multisets differ");
    }

    void run_poset(const FinitePoset& P, std::uint64_t poset_seed) {
        HomologyResult hp = space_homology(P);
        const int hdim_p = hp.top_nonzero_degree();

        bool any_quasi_iso = false;
        for (const auto& edge : P.covers()) {
            ++local.edges;
            EdgeContraction ec = contract_edge(P, edge);
            CokernelComplex ck = cokernel_complex(P, {&ec, 1});
            HomologyResult hk = homology(ck.complex);
            HomologyResult he = space_homology(ec.result);
            if (hk.all_zero()) any_quasi_iso = true;

            if (selected("kernel_acyclic"))
                check(P, "kernel_acyclic", homology(kernel_complex(P, {&ec, 1}).complex).all_zero(),
                      "edge " + P.label(edge.first) + "," + P.label(edge.second));
            if (selected("cokernel_degree0"))
                check(P, "cokernel_degree0", ck.complex.dim(0) == 0,
                      "edge " + P.label(edge.first) + "," + P.label(edge.second));
            if (selected("step_rank_identity")) {
                bool ok = true;
                const int top = std::max(static_cast<int>(hp.betti.size()),
                                         static_cast<int>(he.betti.size()));
                for (int r = 0; r < top && ok; ++r)
                    ok = hp.betti_at(r) == he.betti_at(r) + hk.betti_at(r + 1);
                check(P, "step_rank_identity", ok,
                      "edge " + P.label(edge.first) + "," + P.label(edge.second));
            }
            if (selected("hdim_nonincrease"))
                check(P, "hdim_nonincrease", he.top_nonzero_degree() <= hdim_p,
                      "edge " + P.label(edge.first) + "," + P.label(edge.second));
            if (selected("beat_edge_quasi_iso"))
                check(P, "beat_edge_quasi_iso", !beat_edge_whe(P, edge) || hk.all_zero(),
                      "edge " + P.label(edge.first) + "," + P.label(edge.second));
            if (selected("kappa_monotone"))
                check(P, "kappa_monotone", is_monotone_exhaustive(ec.kappa),
                      "edge " + P.label(edge.first) + "," + P.label(edge.second));
            if (selected("preimage_formulas"))
                check(P, "preimage_formulas", preimage_formulas_hold(ec),
                      "edge " + P.label(edge.first) + "," + P.label(edge.second));
            if (selected("star_surjective"))
                check(P, "star_surjective", star_surjective_holds(P, edge),
                      "edge " + P.label(edge.first) + "," + P.label(edge.second));
        }

        if (selected("core_homology")) {
            HomologyResult hc = space_homology(core(P).first);
            check(P, "core_homology", hp.trimmed() == hc.trimmed(), "");
        }
        if (selected("gmin_implies_min"))
            check(P, "gmin_implies_min", any_quasi_iso || is_minimal(P), "");
        if (selected("greedy_independence") && P.size() >= 2 && is_connected(P))
            greedy_independence(P);
        if (selected("random_trace") && P.size() >= 2 && is_connected(P)) {
            std::mt19937_64 rng(poset_seed);
            CheckLedger ledger = verify_trace(random_full_trace(P, rng));
            std::string detail;
            for (const auto& e : ledger.entries)
                if (!e.pass) detail += e.name + " ";
            check(P, "random_trace", ledger.all_passed(), detail);
        }
    }
};

} // namespace

SweepSummary sweep(const SweepOptions& options) {
    if (options.max_n < 1 || options.max_n > kMaxSweepElements)
        throw SweepTooLarge("sweep supports max_n in 1.." + std::to_string(kMaxSweepElements));

    SweepSummary summary;
    summary.max_n = options.max_n;
    summary.checks = options.checks;

    for (int n = 1; n <= options.max_n; ++n) {
        std::vector<FinitePoset> posets = enumerate_posets(n);
        summary.posets_per_n.push_back(static_cast<long>(posets.size()));
        summary.posets += static_cast<long>(posets.size());

        const int jobs = std::max(1, options.jobs);
        std::vector<SweepWorker> workers;
        workers.reserve(jobs);
        for (int w = 0; w < jobs; ++w)
            workers.push_back(SweepWorker{&posets, &options, n, {}});

        auto body = [&](int w) {
            for (std::size_t i = w; i < posets.size(); i += jobs)
                workers[w].run_poset(posets[i],
                                     options.seed ^ (static_cast<std::uint64_t>(n) << 32) ^ i);
        };
        if (jobs == 1) {
            body(0);
        } else {
            std::vector<std::thread> threads;
            for (int w = 0; w < jobs; ++w) threads.emplace_back(body, w);
            for (auto& th : threads) th.join();
        }
        for (auto& w : workers) {
            summary.edges += w.local.edges;
            summary.checks_run += w.local.checks_run;
            summary.failures.insert(summary.failures.end(), w.local.failures.begin(),
                                    w.local.failures.end());
        }
    }
    return summary;
}

namespace {

bool coin(std::mt19937_64& rng, double p) {
    // mt19937_64 output is fully specified; avoid distribution classes so
    // streams reproduce across standard libraries.
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

} // namespace

FinitePoset random_poset(int n, double edge_probability, std::mt19937_64& rng) {
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = "p" + std::to_string(i);
    std::vector<std::pair<int, int>> relations;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (coin(rng, edge_probability)) relations.emplace_back(i, j); // i below j
    return build_poset_indexed(std::move(labels), relations);
}

ContractionTrace random_full_trace(const FinitePoset& X, std::mt19937_64& rng) {
    if (X.size() == 0) throw EmptySpace("cannot contract the empty space");
    std::vector<EdgeContraction> steps;
    FinitePoset cur = X;
    while (cur.size() > 1) {
        const auto& covers = cur.covers();
        if (covers.empty()) throw InvalidInput("random_full_trace requires a connected space");
        EdgeContraction ec = contract_edge(cur, covers[rng() % covers.size()]);
        cur = ec.result;
        steps.push_back(std::move(ec));
    }
    return ContractionTrace{X, std::move(steps), PointMap::identity(cur), cur};
}

} // namespace fintop
