#include "fintop/poset.hpp"

#include "fintop/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace fintop {

FinitePoset FinitePoset::from_order_table(std::vector<std::string> labels, std::vector<char> order) {
    const int n = static_cast<int>(labels.size());
    if (order.size() != static_cast<std::size_t>(n) * n)
        throw InvalidInput("order table size does not match label count");
    FinitePoset p;
    p.n_ = n;
    p.labels_ = std::move(labels);
    p.leq_ = std::move(order);

    {
        std::vector<std::string> sorted = p.labels_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InvalidInput("labels must be pairwise distinct");
    }
    for (int x = 0; x < n; ++x) {
        if (!p.leq(x, x)) throw InvalidInput("order table is not reflexive");
        for (int y = 0; y < n; ++y) {
            if (x != y && p.leq(x, y) && p.leq(y, x))
                throw CycleDetected("not a T0 space: " + p.labels_[x] + " <= " + p.labels_[y] +
                                    " <= " + p.labels_[x]);
        }
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (!p.leq(x, y)) continue;
            for (int z = 0; z < n; ++z)
                if (p.leq(y, z) && !p.leq(x, z)) throw InvalidInput("order table is not transitive");
        }

    // Covers: strict pairs with nothing strictly in between.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!p.less(b, a)) continue;
            bool has_mid = false;
            for (int z = 0; z < n && !has_mid; ++z)
                if (z != a && z != b && p.leq(b, z) && p.leq(z, a)) has_mid = true;
            if (!has_mid) p.covers_.emplace_back(a, b);
        }
    std::sort(p.covers_.begin(), p.covers_.end());
    return p;
}

bool FinitePoset::is_cover(int upper, int lower) const {
    return std::binary_search(covers_.begin(), covers_.end(), std::make_pair(upper, lower));
}

int FinitePoset::index_of(const std::string& label) const {
    if (auto i = find(label)) return *i;
    throw UnknownLabel("unknown element: " + label);
}

std::optional<int> FinitePoset::find(const std::string& label) const {
    for (int i = 0; i < n_; ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

std::vector<int> FinitePoset::min_open(int x) const {
    std::vector<int> out;
    for (int z = 0; z < n_; ++z)
        if (leq(z, x)) out.push_back(z);
    return out;
}

std::vector<int> FinitePoset::closure_of(int x) const {
    std::vector<int> out;
    for (int z = 0; z < n_; ++z)
        if (leq(x, z)) out.push_back(z);
    return out;
}

std::vector<int> FinitePoset::punctured_up(int x) const {
    std::vector<int> out;
    for (int z = 0; z < n_; ++z)
        if (z != x && leq(x, z)) out.push_back(z);
    return out;
}

std::vector<int> FinitePoset::punctured_down(int x) const {
    std::vector<int> out;
    for (int z = 0; z < n_; ++z)
        if (z != x && leq(z, x)) out.push_back(z);
    return out;
}

FinitePoset FinitePoset::opposite() const {
    std::vector<char> t(leq_.size());
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) t[static_cast<std::size_t>(x) * n_ + y] = leq(y, x);
    return from_order_table(labels_, std::move(t));
}

FinitePoset FinitePoset::induced(std::span<const int> elements) const {
    std::vector<int> elems(elements.begin(), elements.end());
    std::sort(elems.begin(), elems.end());
    const int m = static_cast<int>(elems.size());
    std::vector<std::string> labels(m);
    std::vector<char> order(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i) {
        labels[i] = labels_[elems[i]];
        for (int j = 0; j < m; ++j) order[static_cast<std::size_t>(i) * m + j] = leq(elems[i], elems[j]);
    }
    return from_order_table(std::move(labels), std::move(order));
}

bool FinitePoset::is_up_beat(int x) const {
    // F_x \ {x} equals F_y for some y; such a y is a minimum of the punctured set.
    auto up = punctured_up(x);
    if (up.empty()) return false;
    for (int y : up) {
        bool match = true;
        for (int z = 0; z < n_ && match; ++z) {
            bool in_up = z != x && leq(x, z);
            if (in_up != leq(y, z)) match = false;
        }
        if (match) return true;
    }
    return false;
}

bool FinitePoset::is_down_beat(int x) const {
    auto down = punctured_down(x);
    if (down.empty()) return false;
    for (int y : down) {
        bool match = true;
        for (int z = 0; z < n_ && match; ++z) {
            bool in_down = z != x && leq(z, x);
            if (in_down != leq(z, y)) match = false;
        }
        if (match) return true;
    }
    return false;
}

std::vector<int> FinitePoset::beat_points() const {
    std::vector<int> out;
    for (int x = 0; x < n_; ++x)
        if (is_beat_point(x)) out.push_back(x);
    return out;
}

FinitePoset build_poset(std::vector<std::string> labels,
                        const std::vector<std::pair<std::string, std::string>>& relations) {
    std::map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
        if (!index.emplace(labels[i], i).second) throw InvalidInput("duplicate label: " + labels[i]);
    }
    std::vector<std::pair<int, int>> rel;
    rel.reserve(relations.size());
    for (const auto& [lo, hi] : relations) {
        auto a = index.find(lo);
        auto b = index.find(hi);
        if (a == index.end()) throw UnknownLabel("unknown element: " + lo);
        if (b == index.end()) throw UnknownLabel("unknown element: " + hi);
        rel.emplace_back(a->second, b->second);
    }
    return build_poset_indexed(std::move(labels), rel);
}

FinitePoset build_poset_indexed(std::vector<std::string> labels,
                                const std::vector<std::pair<int, int>>& relations) {
    const int n = static_cast<int>(labels.size());
    std::vector<char> leq(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) leq[static_cast<std::size_t>(i) * n + i] = 1;
    for (const auto& [lo, hi] : relations) {
        if (lo < 0 || lo >= n || hi < 0 || hi >= n) throw InvalidInput("relation index out of range");
        leq[static_cast<std::size_t>(lo) * n + hi] = 1;
    }
    // Warshall closure.
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (!leq[static_cast<std::size_t>(i) * n + k]) continue;
            for (int j = 0; j < n; ++j)
                if (leq[static_cast<std::size_t>(k) * n + j]) leq[static_cast<std::size_t>(i) * n + j] = 1;
        }
    return FinitePoset::from_order_table(std::move(labels), std::move(leq));
}

namespace {

std::vector<std::vector<int>> components_impl(const FinitePoset& X, std::span<const int> subset) {
    std::vector<int> elems(subset.begin(), subset.end());
    std::sort(elems.begin(), elems.end());
    std::vector<char> seen(elems.size(), 0);
    std::vector<std::vector<int>> comps;
    for (std::size_t s = 0; s < elems.size(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::queue<std::size_t> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            std::size_t i = q.front();
            q.pop();
            comp.push_back(elems[i]);
            for (std::size_t j = 0; j < elems.size(); ++j)
                if (!seen[j] && X.comparable(elems[i], elems[j])) {
                    seen[j] = 1;
                    q.push(j);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

} // namespace

bool is_connected(const FinitePoset& X, std::span<const int> subset) {
    return components_impl(X, subset).size() <= 1;
}

bool is_connected(const FinitePoset& X) {
    std::vector<int> all(X.size());
    std::iota(all.begin(), all.end(), 0);
    return is_connected(X, all);
}

std::vector<std::vector<int>> connected_components(const FinitePoset& X, std::span<const int> subset) {
    return components_impl(X, subset);
}

std::pair<FinitePoset, std::vector<std::string>> core(const FinitePoset& X) {
    if (X.size() == 0) throw EmptySpace("core of the empty space");
    FinitePoset cur = X;
    std::vector<std::string> removed;
    for (;;) {
        int beat = -1;
        for (int x = 0; x < cur.size(); ++x)
            if (cur.is_beat_point(x)) {
                beat = x;
                break;
            }
        if (beat < 0) break;
        removed.push_back(cur.label(beat));
        std::vector<int> keep;
        for (int x = 0; x < cur.size(); ++x)
            if (x != beat) keep.push_back(x);
        cur = cur.induced(keep);
    }
    return {std::move(cur), std::move(removed)};
}

bool is_contractible(const FinitePoset& X) { return core(X).first.size() == 1; }

namespace {

// Per-element invariant used to prune the isomorphism search.
struct ElemSig {
    int down, up, cover_up, cover_down;
    auto operator<=>(const ElemSig&) const = default;
};

ElemSig signature(const FinitePoset& X, int x) {
    ElemSig s{0, 0, 0, 0};
    for (int z = 0; z < X.size(); ++z) {
        if (X.less(z, x)) ++s.down;
        if (X.less(x, z)) ++s.up;
    }
    for (const auto& [a, b] : X.covers()) {
        if (a == x) ++s.cover_down;
        if (b == x) ++s.cover_up;
    }
    return s;
}

bool extend_iso(const FinitePoset& A, const FinitePoset& B, std::vector<int>& img,
                std::vector<char>& used, int x) {
    const int n = A.size();
    if (x == n) return true;
    for (int y = 0; y < n; ++y) {
        if (used[y]) continue;
        bool ok = true;
        for (int z = 0; z < x && ok; ++z) {
            if (A.leq(z, x) != B.leq(img[z], y)) ok = false;
            if (A.leq(x, z) != B.leq(y, img[z])) ok = false;
        }
        if (!ok) continue;
        img[x] = y;
        used[y] = 1;
        if (extend_iso(A, B, img, used, x + 1)) return true;
        used[y] = 0;
    }
    return false;
}

} // namespace

bool are_isomorphic(const FinitePoset& A, const FinitePoset& B) {
    if (A.size() != B.size()) return false;
    if (A.covers().size() != B.covers().size()) return false;
    std::vector<ElemSig> sa, sb;
    for (int x = 0; x < A.size(); ++x) sa.push_back(signature(A, x));
    for (int x = 0; x < B.size(); ++x) sb.push_back(signature(B, x));
    auto sorted_a = sa, sorted_b = sb;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) return false;
    std::vector<int> img(A.size(), -1);
    std::vector<char> used(A.size(), 0);
    return extend_iso(A, B, img, used, 0);
}

} // namespace fintop
