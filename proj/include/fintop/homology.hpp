#pragma once

#include "fintop/chains.hpp"
#include "fintop/contraction.hpp"
#include "fintop/integer_matrix.hpp"
#include "fintop/poset.hpp"

#include <vector>

namespace fintop {

// Unreduced integral homology: per-degree free ranks and torsion invariant
// factors (> 1, forming a divisibility chain). Vectors run over all degrees
// of the originating complex; use betti_at/torsion_at past the end.
struct HomologyResult {
    std::vector<long> betti;
    std::vector<std::vector<Integer>> torsion;

    long betti_at(int r) const {
        return r >= 0 && r < static_cast<int>(betti.size()) ? betti[r] : 0;
    }
    std::vector<Integer> torsion_at(int r) const {
        return r >= 0 && r < static_cast<int>(torsion.size()) ? torsion[r] : std::vector<Integer>{};
    }
    bool all_zero() const;
    // Homology of a point: betti (1, 0, ...) and no torsion anywhere.
    bool is_point_like() const;
    // Largest degree with nonvanishing homology; 0 when only H_0 survives.
    int top_nonzero_degree() const;
    // Drop trailing all-zero degrees (length >= 1 kept for nonempty results).
    HomologyResult trimmed() const;

    bool operator==(const HomologyResult&) const = default;
};

HomologyResult homology(const ChainComplex& C);

// Homology of the space through its order complex.
HomologyResult space_homology(const FinitePoset& X, std::size_t budget = kDefaultSimplexBudget);

// All homology vanishes, degree 0 included.
bool is_acyclic(const ChainComplex& C);

int homological_dimension(const FinitePoset& X, std::size_t budget = kDefaultSimplexBudget);

// A contraction induces homology isomorphisms in every degree exactly when
// its cokernel complex has vanishing homology.
bool is_quasi_iso_contraction(const EdgeContraction& ec);

// No single Hasse-edge contraction of X is a quasi-isomorphism. (If any
// composite of contractions out of X were one, its first edge already would
// be, so checking single edges suffices.)
bool is_g_minimal(const FinitePoset& X);

} // namespace fintop
