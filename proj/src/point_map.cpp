#include "fintop/point_map.hpp"

#include "fintop/errors.hpp"

#include <algorithm>
#include <bit>
#include <queue>

namespace fintop {

PointMap::PointMap(FinitePoset dom_, FinitePoset cod_, std::vector<int> img_)
    : dom(std::move(dom_)), cod(std::move(cod_)), img(std::move(img_)) {
    if (img.size() != static_cast<std::size_t>(dom.size()))
        throw DomainMismatch("image table does not cover the domain");
    for (int v : img)
        if (v < 0 || v >= cod.size()) throw DomainMismatch("image refers to an unknown codomain element");
}

PointMap PointMap::identity(const FinitePoset& X) {
    std::vector<int> img(X.size());
    for (int i = 0; i < X.size(); ++i) img[i] = i;
    return PointMap(X, X, std::move(img));
}

bool PointMap::is_surjective() const {
    std::vector<char> hit(cod.size(), 0);
    for (int v : img) hit[v] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool PointMap::is_injective() const {
    std::vector<char> hit(cod.size(), 0);
    for (int v : img) {
        if (hit[v]) return false;
        hit[v] = 1;
    }
    return true;
}

std::vector<std::vector<int>> PointMap::fibers() const {
    std::vector<std::vector<int>> out(cod.size());
    for (int x = 0; x < dom.size(); ++x) out[img[x]].push_back(x);
    return out;
}

PointMap compose(const PointMap& outer, const PointMap& inner) {
    if (inner.cod != outer.dom) throw DomainMismatch("composition: codomain does not match domain");
    std::vector<int> img(inner.dom.size());
    for (int x = 0; x < inner.dom.size(); ++x) img[x] = outer.img[inner.img[x]];
    return PointMap(inner.dom, outer.cod, std::move(img));
}

bool is_continuous(const PointMap& f) {
    const int n = f.dom.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (f.dom.leq(x, y) && !f.cod.leq(f.img[x], f.img[y])) return false;
    return true;
}

namespace {

// Connectivity of a masked subset of Y via its comparability graph.
bool mask_connected(const std::vector<std::uint64_t>& adj, std::uint64_t mask) {
    if (mask == 0) return true;
    std::uint64_t seen = mask & (~mask + 1); // lowest set bit
    for (;;) {
        std::uint64_t grow = seen;
        std::uint64_t work = seen;
        while (work) {
            int v = std::countr_zero(work);
            work &= work - 1;
            grow |= adj[v] & mask;
        }
        if (grow == seen) break;
        seen = grow;
    }
    return seen == mask;
}

} // namespace

bool is_monotone_exhaustive(const PointMap& f, int codomain_bound) {
    const int m = f.cod.size();
    if (m > codomain_bound || m > 62)
        throw CodomainTooLarge("exhaustive enumeration refused for codomain of size " + std::to_string(m));

    std::vector<std::uint64_t> cod_adj(m, 0);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            if (x != y && f.cod.comparable(x, y)) cod_adj[x] |= std::uint64_t(1) << y;

    std::vector<int> preimage;
    preimage.reserve(f.dom.size());
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); ++mask) {
        if (!mask_connected(cod_adj, mask)) continue;
        preimage.clear();
        for (int x = 0; x < f.dom.size(); ++x)
            if (mask & (std::uint64_t(1) << f.img[x])) preimage.push_back(x);
        if (!is_connected(f.dom, preimage)) return false;
    }
    return true;
}

MonotoneVerdict monotone_verdict(const PointMap& f, int codomain_bound) {
    if (f.is_surjective()) {
        const auto fibers = f.fibers();
        // Fibers, visited in order of their first domain element.
        std::vector<char> seen(f.cod.size(), 0);
        for (int x = 0; x < f.dom.size(); ++x) {
            const int y = f.img[x];
            if (seen[y]) continue;
            seen[y] = 1;
            if (!is_connected(f.dom, fibers[y])) {
                std::vector<std::string> labels;
                for (int v : fibers[y]) labels.push_back(f.dom.label(v));
                return {false, "disconnected_fiber", std::move(labels)};
            }
        }
        for (int u = 0; u < f.cod.size(); ++u)
            for (int v = 0; v < f.cod.size(); ++v) {
                if (!f.cod.less(u, v)) continue;
                std::vector<int> preimage = fibers[u];
                preimage.insert(preimage.end(), fibers[v].begin(), fibers[v].end());
                if (!is_connected(f.dom, preimage))
                    return {false, "disconnected_pair_preimage", {f.cod.label(u), f.cod.label(v)}};
            }
        return {true, "", {}};
    }

    // Non-surjective: the pair reduction loses its overlap argument, so
    // enumerate. Reproduce the first failing connected subset as a witness.
    const int m = f.cod.size();
    if (m > codomain_bound || m > 62)
        throw CodomainTooLarge("exhaustive enumeration refused for codomain of size " + std::to_string(m));
    std::vector<std::uint64_t> cod_adj(m, 0);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            if (x != y && f.cod.comparable(x, y)) cod_adj[x] |= std::uint64_t(1) << y;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); ++mask) {
        if (!mask_connected(cod_adj, mask)) continue;
        std::vector<int> preimage;
        for (int x = 0; x < f.dom.size(); ++x)
            if (mask & (std::uint64_t(1) << f.img[x])) preimage.push_back(x);
        if (!is_connected(f.dom, preimage)) {
            std::vector<std::string> labels;
            for (int y = 0; y < m; ++y)
                if (mask & (std::uint64_t(1) << y)) labels.push_back(f.cod.label(y));
            return {false, "disconnected_preimage", std::move(labels)};
        }
    }
    return {true, "", {}};
}

bool is_monotone(const PointMap& f, int codomain_bound) {
    return monotone_verdict(f, codomain_bound).monotone;
}

bool is_homeomorphism(const PointMap& f) {
    if (!f.is_bijective()) return false;
    const int n = f.dom.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (f.dom.leq(x, y) != f.cod.leq(f.img[x], f.img[y])) return false;
    return true;
}

} // namespace fintop
