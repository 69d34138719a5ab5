#pragma once

#include "fintop/contraction.hpp"
#include "fintop/integer_matrix.hpp"
#include "fintop/poset.hpp"

#include <span>
#include <string>
#include <vector>

namespace fintop {

inline constexpr std::size_t kDefaultSimplexBudget = 2'000'000;

// The simplicial complex whose r-simplices are the (r+1)-chains of the poset.
// Tuples are strictly increasing in the poset order; per-dimension lists are
// sorted lexicographically by element index.
struct OrderComplex {
    FinitePoset space;
    std::vector<std::vector<std::vector<int>>> simplices;

    int dimensions() const { return static_cast<int>(simplices.size()); }
    int count(int r) const {
        return r >= 0 && r < dimensions() ? static_cast<int>(simplices[r].size()) : 0;
    }
    std::size_t total() const;
};

// pre: X nonempty. Chain counts grow exponentially with poset height/width,
// hence the budget guard.
OrderComplex order_complex(const FinitePoset& X, std::size_t budget = kDefaultSimplexBudget);

// Integer chain complex: boundary[r] maps degree r to degree r-1 coordinates
// (boundary[0] has zero rows).
struct ChainComplex {
    std::vector<std::vector<std::string>> basis;
    std::vector<IntMat> boundary;

    int degrees() const { return static_cast<int>(basis.size()); }
    int dim(int r) const {
        return r >= 0 && r < degrees() ? static_cast<int>(basis[r].size()) : 0;
    }
};

// Shape and boundary-squares-to-zero checks; throws InvalidInput.
void validate(const ChainComplex& C);

// Boundary of (x_0 < ... < x_n) is the alternating sum of facets.
ChainComplex chain_complex(const OrderComplex& K);

// Chain map induced by a (possibly empty) run of contractions: a chain maps
// to its image tuple with duplicates collapsed, to zero when degenerate, and
// with sign +1 otherwise (images stay strictly increasing because the
// quotient order extends the image of the source order).
struct InducedChainMap {
    ChainComplex source;
    ChainComplex target;
    std::vector<IntMat> matrix; // per source degree; rows = target dim
};

InducedChainMap induced_map(const FinitePoset& start, std::span<const EdgeContraction> steps,
                            std::size_t budget = kDefaultSimplexBudget);

// Does some strictly increasing lift of `simplex` (a chain of the end space)
// through all the contractions exist as a chain of `start`? Backtracks over
// the composite fibers of each vertex.
bool image_membership(std::span<const int> simplex, const FinitePoset& start,
                      std::span<const EdgeContraction> steps);

// Quotient of the end space's chain complex by the image of the composite
// chain map. Basis: simplices failing image_membership; boundary: ambient
// boundary followed by deletion of image coordinates.
struct CokernelComplex {
    ChainComplex complex;
    // Basis tuples per degree, as chains of the end space.
    std::vector<std::vector<std::vector<int>>> simplices;
};

CokernelComplex cokernel_complex(const FinitePoset& start, std::span<const EdgeContraction> steps,
                                 std::size_t budget = kDefaultSimplexBudget);

// Kernel of the induced chain map, as a chain complex of its own. Basis
// vectors are integer combinations of chains of `start` (columns of
// `embedding`); the boundary is the ambient boundary in those coordinates.
struct KernelComplex {
    ChainComplex complex;
    std::vector<IntMat> embedding; // embedding[r]: dim K(start)_r x kernel dim
};

KernelComplex kernel_complex(const FinitePoset& start, std::span<const EdgeContraction> steps,
                             std::size_t budget = kDefaultSimplexBudget);

// Convenience spans over a trace's steps.
inline std::span<const EdgeContraction> trace_prefix(const ContractionTrace& t, std::size_t len) {
    return {t.steps.data(), len};
}
inline std::span<const EdgeContraction> trace_step(const ContractionTrace& t, std::size_t i) {
    return {t.steps.data() + i, 1};
}

} // namespace fintop
