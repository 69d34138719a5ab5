#include "fintop/homology.hpp"

#include <algorithm>

namespace fintop {

bool HomologyResult::all_zero() const {
    return std::all_of(betti.begin(), betti.end(), [](long b) { return b == 0; }) &&
           std::all_of(torsion.begin(), torsion.end(), [](const auto& t) { return t.empty(); });
}

bool HomologyResult::is_point_like() const {
    if (betti.empty() || betti[0] != 1) return false;
    for (std::size_t r = 1; r < betti.size(); ++r)
        if (betti[r] != 0) return false;
    return std::all_of(torsion.begin(), torsion.end(), [](const auto& t) { return t.empty(); });
}

int HomologyResult::top_nonzero_degree() const {
    int top = 0;
    for (int r = 0; r < static_cast<int>(betti.size()); ++r)
        if (betti[r] != 0 || !torsion_at(r).empty()) top = r;
    return top;
}

HomologyResult HomologyResult::trimmed() const {
    if (betti.empty()) return *this;
    const int len = top_nonzero_degree() + 1;
    HomologyResult out;
    out.betti.assign(betti.begin(), betti.begin() + len);
    out.torsion.resize(len);
    for (int r = 0; r < len; ++r) out.torsion[r] = torsion_at(r);
    return out;
}

HomologyResult homology(const ChainComplex& C) {
    const int degs = C.degrees();
    HomologyResult out;
    out.betti.resize(degs);
    out.torsion.resize(degs);

    std::vector<InvariantFactors> snf(degs);
    for (int r = 1; r < degs; ++r) snf[r] = invariant_factors(C.boundary[r]);

    for (int r = 0; r < degs; ++r) {
        const int rank_in = r + 1 < degs ? snf[r + 1].rank : 0;
        const int rank_out = r >= 1 ? snf[r].rank : 0;
        out.betti[r] = C.dim(r) - rank_out - rank_in;
        if (r + 1 < degs)
            for (const Integer& d : snf[r + 1].factors)
                if (d > 1) out.torsion[r].push_back(d);
    }
    return out;
}

HomologyResult space_homology(const FinitePoset& X, std::size_t budget) {
    return homology(chain_complex(order_complex(X, budget)));
}

bool is_acyclic(const ChainComplex& C) { return homology(C).all_zero(); }

int homological_dimension(const FinitePoset& X, std::size_t budget) {
    return space_homology(X, budget).top_nonzero_degree();
}

bool is_quasi_iso_contraction(const EdgeContraction& ec) {
    return homology(cokernel_complex(ec.source, {&ec, 1}).complex).all_zero();
}

bool is_g_minimal(const FinitePoset& X) {
    for (const auto& e : X.covers())
        if (is_quasi_iso_contraction(contract_edge(X, e))) return false;
    return true;
}

} // namespace fintop
