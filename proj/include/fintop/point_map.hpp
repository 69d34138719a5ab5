#pragma once

#include "fintop/poset.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fintop {

inline constexpr int kDefaultExhaustiveBound = 20;

// A total map between the element sets of two finite spaces. Continuity and
// monotonicity are checked properties, not construction invariants.
struct PointMap {
    FinitePoset dom;
    FinitePoset cod;
    std::vector<int> img; // img[x] is the codomain index of x's image

    PointMap(FinitePoset dom_, FinitePoset cod_, std::vector<int> img_);

    static PointMap identity(const FinitePoset& X);

    int operator()(int x) const { return img[x]; }

    bool is_surjective() const;
    bool is_injective() const;
    bool is_bijective() const { return dom.size() == cod.size() && is_surjective(); }

    // fibers()[y] lists the domain elements mapping to y, ascending.
    std::vector<std::vector<int>> fibers() const;

    bool operator==(const PointMap&) const = default;
};

// outer ∘ inner; requires inner.cod == outer.dom.
PointMap compose(const PointMap& outer, const PointMap& inner);

// Order preservation: x <= x' implies f(x) <= f(x').
bool is_continuous(const PointMap& f);

// Kuratowski's condition by enumeration: the preimage of every connected
// subset of the codomain is connected (the empty set counts as connected).
// Refuses codomains larger than `codomain_bound` elements.
bool is_monotone_exhaustive(const PointMap& f, int codomain_bound = kDefaultExhaustiveBound);

// Result of the monotonicity decision together with a counterexample when
// there is one: the elements of a disconnected fiber, a comparable codomain
// pair whose preimage is disconnected, or (on the exhaustive fallback) a
// connected codomain subset with disconnected preimage.
struct MonotoneVerdict {
    bool monotone;
    std::string witness_kind; // "", "disconnected_fiber",
                              // "disconnected_pair_preimage", "disconnected_preimage"
    std::vector<std::string> witness;
};

MonotoneVerdict monotone_verdict(const PointMap& f, int codomain_bound = kDefaultExhaustiveBound);

// Same truth value as is_monotone_exhaustive. For a surjective map the
// condition reduces to finitely many small checks: every fiber is connected
// and the preimage of every comparable codomain pair is connected (any
// connected set peels off leaf by leaf along a spanning tree of its
// comparability graph, and surjectivity keeps the overlaps nonempty).
// Non-surjective maps fall back to the exhaustive check.
bool is_monotone(const PointMap& f, int codomain_bound = kDefaultExhaustiveBound);

// Bijective with order preserved in both directions.
bool is_homeomorphism(const PointMap& f);

} // namespace fintop
