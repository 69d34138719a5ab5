#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fintop {

// A finite T0 topological space, stored as its specialization order.
// Element identity is the positional index; labels are presentation only.
// Values are immutable after construction and freely copyable.
class FinitePoset {
public:
    FinitePoset() = default;

    // Validates that `order` (a size*size row-major table, order[x*n+y] <=>
    // x <= y) is reflexive, antisymmetric and transitive, and computes the
    // cover relation. Throws CycleDetected on an antisymmetry violation.
    static FinitePoset from_order_table(std::vector<std::string> labels, std::vector<char> order);

    int size() const { return n_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int x) const { return labels_[x]; }

    bool leq(int x, int y) const { return leq_[static_cast<std::size_t>(x) * n_ + y] != 0; }
    bool less(int x, int y) const { return x != y && leq(x, y); }
    bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }

    // Hasse edges as (upper, lower) pairs, sorted lexicographically:
    // (a, b) means a covers b.
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    bool is_cover(int upper, int lower) const;

    int index_of(const std::string& label) const; // throws UnknownLabel
    std::optional<int> find(const std::string& label) const;

    // U_x = { z : z <= x }, the minimal open neighbourhood.
    std::vector<int> min_open(int x) const;
    // F_x = { z : x <= z }, the closure of x.
    std::vector<int> closure_of(int x) const;
    // F_x minus x (everything strictly above).
    std::vector<int> punctured_up(int x) const;
    // U_x minus x (everything strictly below).
    std::vector<int> punctured_down(int x) const;

    FinitePoset opposite() const;
    // Induced subposet on the given elements (kept in ascending index order).
    FinitePoset induced(std::span<const int> elements) const;

    bool is_up_beat(int x) const;
    bool is_down_beat(int x) const;
    bool is_beat_point(int x) const { return is_up_beat(x) || is_down_beat(x); }
    std::vector<int> beat_points() const;

    bool operator==(const FinitePoset&) const = default;

private:
    int n_ = 0;
    std::vector<std::string> labels_;
    std::vector<char> leq_;
    std::vector<std::pair<int, int>> covers_;
};

// Build from named relations; each pair (lower, upper) declares lower < upper.
// The stored order is the reflexive-transitive closure; covers are the
// transitive reduction. Throws CycleDetected / UnknownLabel / InvalidInput.
FinitePoset build_poset(std::vector<std::string> labels,
                        const std::vector<std::pair<std::string, std::string>>& relations);

// Index-based variant; pairs are (lower, upper).
FinitePoset build_poset_indexed(std::vector<std::string> labels,
                                const std::vector<std::pair<int, int>>& relations);

// Connectivity of a subspace equals connectivity of its comparability graph.
// The empty set counts as connected.
bool is_connected(const FinitePoset& X, std::span<const int> subset);
bool is_connected(const FinitePoset& X);

// Components of the comparability graph on `subset`, each sorted, ordered by
// smallest member.
std::vector<std::vector<int>> connected_components(const FinitePoset& X, std::span<const int> subset);

// Dismantle by repeatedly deleting the smallest-index beat point. Returns the
// beat-point-free core and the labels removed, in removal order.
std::pair<FinitePoset, std::vector<std::string>> core(const FinitePoset& X);

// One-point core <=> contractible.
bool is_contractible(const FinitePoset& X);

bool are_isomorphic(const FinitePoset& A, const FinitePoset& B);

} // namespace fintop
