#pragma once

#include "fintop/point_map.hpp"
#include "fintop/poset.hpp"

#include <utility>
#include <vector>

namespace fintop {

// One Hasse-edge contraction: the quotient identifying the endpoints of a
// cover pair. `edge` is (upper, lower); `merged` is the class of both
// endpoints in the result.
struct EdgeContraction {
    FinitePoset source;
    std::pair<int, int> edge;
    FinitePoset result;
    PointMap kappa;
    int merged;
};

// pre: edge is a Hasse edge of X (first covers second).
// The quotient order is [x] <= [y] iff x <= y or (x <= a and b <= y); this
// stays antisymmetric because a covers b. The merged element is labeled
// "<label a>+<label b>".
EdgeContraction contract_edge(const FinitePoset& X, std::pair<int, int> edge);

// A sequence of contractions from `start`, ending in a bijection onto
// `target`. Plain value object; `validate` checks the chaining, that the
// final map is an order isomorphism, and the composite against `expected`
// when given.
struct ContractionTrace {
    FinitePoset start;
    std::vector<EdgeContraction> steps;
    PointMap final;
    FinitePoset target;

    const FinitePoset& end_space() const { return steps.empty() ? start : steps.back().result; }
    PointMap composite() const;

    static ContractionTrace identity(const FinitePoset& X);
};

void validate(const ContractionTrace& t);

// Induced subposet on { x : x <= lower or upper <= x }.
FinitePoset edge_subspace(const FinitePoset& X, std::pair<int, int> edge);

// U_x ∪ F_x.
std::vector<int> star(const FinitePoset& X, int x);

enum class EdgeChoice { Lexicographic, ReverseLexicographic };

// Decompose a surjective continuous map into Hasse-edge contractions followed
// by an order isomorphism: greedily contract the smallest Hasse edge whose
// endpoints lie in one fiber of the current induced map, until that map is
// injective. Succeeds iff f factors this way, i.e. iff its fibers are
// connected and the induced bijection is an order isomorphism. Every monotone
// surjection factors; the converse fails (a contraction map itself need not
// be monotone), so a NotMonotone throw certifies non-monotonicity while
// success certifies only decomposability. The witness names a disconnected
// fiber or a codomain relation the bijection fails to reflect. Also throws
// NotSurjective / NotContinuous.
ContractionTrace decompose(const PointMap& f, EdgeChoice choice = EdgeChoice::Lexicographic);

enum class WheVerdict { GuaranteedByOpenSets, GuaranteedByClosures, NotGuaranteed };

// Sufficient criterion for a contraction to be a weak homotopy equivalence:
// either U_x ∩ U_a is contractible for every x strictly above b, or
// F_y ∩ F_b is contractible for every y strictly below a. NotGuaranteed
// means the criterion is silent, not that the contraction fails.
WheVerdict whe_criterion(const FinitePoset& X, std::pair<int, int> edge);

// True when the upper endpoint is a down beat point or the lower endpoint is
// an up beat point; such contractions are weak homotopy equivalences.
bool beat_edge_whe(const FinitePoset& X, std::pair<int, int> edge);

// f = discrete_part ∘ g where g contracts, within each fiber of f, all Hasse
// edges joining points of the same fiber component. The residual map has
// antichain fibers (verified; DiscreteFiberViolation otherwise).
struct Factorization {
    ContractionTrace g_trace; // X onto the quotient, final = identity
    FinitePoset quotient;
    PointMap discrete_part; // quotient -> Y
};

Factorization factorize(const PointMap& f);

// No beat points.
bool is_minimal(const FinitePoset& X);

} // namespace fintop
