#include "fintop/contraction.hpp"

#include "fintop/errors.hpp"

#include <algorithm>
#include <utility>

namespace fintop {

EdgeContraction contract_edge(const FinitePoset& X, std::pair<int, int> edge) {
    const auto [a, b] = edge;
    if (!X.is_cover(a, b))
        throw NotAHasseEdge("(" + X.label(a) + "," + X.label(b) + ") is not a Hasse edge");

    const int n = X.size();
    const int lo = std::min(a, b);
    const int hi = std::max(a, b);
    const int m = n - 1;

    // Classes keep ascending index order; the merged class sits at the
    // smaller endpoint's slot.
    std::vector<int> cls(n);
    for (int x = 0; x < n; ++x) cls[x] = x - (x > hi ? 1 : 0);
    cls[hi] = cls[lo];

    std::vector<std::vector<int>> fiber(m);
    for (int x = 0; x < n; ++x) fiber[cls[x]].push_back(x);

    std::vector<std::string> labels(m);
    for (int u = 0; u < m; ++u) {
        if (fiber[u].size() == 2)
            labels[u] = X.label(a) + "+" + X.label(b);
        else
            labels[u] = X.label(fiber[u][0]);
    }

    auto rel = [&](int x, int y) { return X.leq(x, y) || (X.leq(x, a) && X.leq(b, y)); };
    std::vector<char> order(static_cast<std::size_t>(m) * m);
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v) {
            bool r = false;
            for (int x : fiber[u])
                for (int y : fiber[v]) r = r || rel(x, y);
            order[static_cast<std::size_t>(u) * m + v] = r;
        }

    // from_order_table re-checks antisymmetry; a cover edge can never break it.
    FinitePoset result = FinitePoset::from_order_table(std::move(labels), std::move(order));
    PointMap kappa(X, result, cls);
    return EdgeContraction{X, edge, std::move(result), std::move(kappa), cls[a]};
}

PointMap ContractionTrace::composite() const {
    PointMap m = PointMap::identity(start);
    for (const auto& step : steps) m = compose(step.kappa, m);
    return compose(final, m);
}

ContractionTrace ContractionTrace::identity(const FinitePoset& X) {
    return ContractionTrace{X, {}, PointMap::identity(X), X};
}

void validate(const ContractionTrace& t) {
    const FinitePoset* cur = &t.start;
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        if (t.steps[i].source != *cur) throw InvalidInput("trace step " + std::to_string(i) + " does not chain");
        cur = &t.steps[i].result;
    }
    if (t.final.dom != *cur) throw InvalidInput("trace final map does not start at the end space");
    if (t.final.cod != t.target) throw InvalidInput("trace final map does not land in the target");
    if (!is_homeomorphism(t.final)) throw InvalidInput("trace final map is not an order isomorphism");
}

FinitePoset edge_subspace(const FinitePoset& X, std::pair<int, int> edge) {
    const auto [a, b] = edge;
    if (!X.is_cover(a, b))
        throw NotAHasseEdge("(" + X.label(a) + "," + X.label(b) + ") is not a Hasse edge");
    std::vector<int> keep;
    for (int x = 0; x < X.size(); ++x)
        if (X.leq(x, b) || X.leq(a, x)) keep.push_back(x);
    return X.induced(keep);
}

std::vector<int> star(const FinitePoset& X, int x) {
    std::vector<int> out;
    for (int z = 0; z < X.size(); ++z)
        if (X.comparable(x, z)) out.push_back(z);
    return out;
}

namespace {

// Greedy loop shared by decompose and factorize: contract Hasse edges whose
// endpoints lie in one fiber of the running induced map, until none remain.
struct GreedyResult {
    std::vector<EdgeContraction> steps;
    FinitePoset end;
    std::vector<int> induced_img;
};

GreedyResult contract_within_fibers(const PointMap& f, EdgeChoice choice) {
    GreedyResult out{{}, f.dom, f.img};
    for (;;) {
        const auto& covers = out.end.covers();
        int pick = -1;
        if (choice == EdgeChoice::Lexicographic) {
            for (std::size_t i = 0; i < covers.size(); ++i)
                if (out.induced_img[covers[i].first] == out.induced_img[covers[i].second]) {
                    pick = static_cast<int>(i);
                    break;
                }
        } else {
            for (std::size_t i = covers.size(); i-- > 0;)
                if (out.induced_img[covers[i].first] == out.induced_img[covers[i].second]) {
                    pick = static_cast<int>(i);
                    break;
                }
        }
        if (pick < 0) break;
        EdgeContraction ec = contract_edge(out.end, covers[pick]);
        std::vector<int> next(ec.result.size());
        for (int x = 0; x < out.end.size(); ++x) next[ec.kappa.img[x]] = out.induced_img[x];
        out.end = ec.result;
        out.induced_img = std::move(next);
        out.steps.push_back(std::move(ec));
    }
    return out;
}

} // namespace

ContractionTrace decompose(const PointMap& f, EdgeChoice choice) {
    if (!f.is_surjective()) throw NotSurjective("decompose requires a surjective map");
    if (!is_continuous(f)) throw NotContinuous("decompose requires a continuous map");

    GreedyResult g = contract_within_fibers(f, choice);

    // No Hasse edge joins two points of one fiber; a surviving multi-point
    // fiber is therefore internally disconnected.
    std::vector<int> fiber_size(f.cod.size(), 0);
    for (int v : g.induced_img) ++fiber_size[v];
    for (int u = 0; u < g.end.size(); ++u) {
        if (fiber_size[g.induced_img[u]] < 2) continue;
        std::vector<std::string> fiber_labels;
        for (int v = 0; v < g.end.size(); ++v)
            if (g.induced_img[v] == g.induced_img[u]) fiber_labels.push_back(g.end.label(v));
        std::string msg = "fiber of " + f.cod.label(g.induced_img[u]) + " is disconnected: {";
        for (std::size_t i = 0; i < fiber_labels.size(); ++i)
            msg += (i ? "," : "") + fiber_labels[i];
        msg += "}";
        throw NotMonotone(msg, "disconnected_fiber", std::move(fiber_labels));
    }

    PointMap final(g.end, f.cod, g.induced_img);
    if (!is_homeomorphism(final)) {
        // Continuity survives the quotients, so the failure is a codomain
        // relation the inverse does not preserve.
        std::vector<int> inv(f.cod.size());
        for (int x = 0; x < g.end.size(); ++x) inv[final.img[x]] = x;
        for (int u = 0; u < f.cod.size(); ++u)
            for (int v = 0; v < f.cod.size(); ++v)
                if (f.cod.less(u, v) && !final.dom.leq(inv[u], inv[v])) {
                    std::vector<std::string> witness{f.cod.label(u), f.cod.label(v)};
                    throw NotMonotone("final bijection does not reflect " + f.cod.label(u) + " < " +
                                          f.cod.label(v),
                                      "relation_not_reflected", std::move(witness));
                }
        throw NotMonotone("final bijection is not an order isomorphism", "relation_not_reflected", {});
    }
    return ContractionTrace{f.dom, std::move(g.steps), std::move(final), f.cod};
}

WheVerdict whe_criterion(const FinitePoset& X, std::pair<int, int> edge) {
    const auto [a, b] = edge;
    if (!X.is_cover(a, b))
        throw NotAHasseEdge("(" + X.label(a) + "," + X.label(b) + ") is not a Hasse edge");

    auto intersect_contractible = [&](const std::vector<int>& s, const std::vector<int>& t) {
        std::vector<int> both;
        std::set_intersection(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(both));
        return is_contractible(X.induced(both));
    };

    bool open_ok = true;
    const auto u_a = X.min_open(a);
    for (int x : X.punctured_up(b))
        if (!intersect_contractible(X.min_open(x), u_a)) {
            open_ok = false;
            break;
        }
    if (open_ok) return WheVerdict::GuaranteedByOpenSets;

    bool closed_ok = true;
    const auto f_b = X.closure_of(b);
    for (int y : X.punctured_down(a))
        if (!intersect_contractible(X.closure_of(y), f_b)) {
            closed_ok = false;
            break;
        }
    return closed_ok ? WheVerdict::GuaranteedByClosures : WheVerdict::NotGuaranteed;
}

bool beat_edge_whe(const FinitePoset& X, std::pair<int, int> edge) {
    const auto [a, b] = edge;
    if (!X.is_cover(a, b))
        throw NotAHasseEdge("(" + X.label(a) + "," + X.label(b) + ") is not a Hasse edge");
    return X.is_down_beat(a) || X.is_up_beat(b);
}

Factorization factorize(const PointMap& f) {
    if (!f.is_surjective()) throw NotSurjective("factorize requires a surjective map");
    if (!is_continuous(f)) throw NotContinuous("factorize requires a continuous map");

    GreedyResult g = contract_within_fibers(f, EdgeChoice::Lexicographic);
    PointMap residual(g.end, f.cod, g.induced_img);
    for (const auto& fiber : residual.fibers())
        for (std::size_t i = 0; i < fiber.size(); ++i)
            for (std::size_t j = i + 1; j < fiber.size(); ++j)
                if (g.end.comparable(fiber[i], fiber[j]))
                    throw DiscreteFiberViolation("residual fiber contains the comparable pair " +
                                                 g.end.label(fiber[i]) + ", " + g.end.label(fiber[j]));

    FinitePoset quotient = g.end;
    ContractionTrace trace{f.dom, std::move(g.steps), PointMap::identity(quotient), quotient};
    return Factorization{std::move(trace), std::move(quotient), std::move(residual)};
}

bool is_minimal(const FinitePoset& X) { return X.beat_points().empty(); }

} // namespace fintop
