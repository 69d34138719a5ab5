#include "fintop/poset.hpp"

#include "fintop/errors.hpp"
#include "fintop/verify.hpp"
#include "test_helpers.hpp"

#include "doctest.h"

#include <algorithm>
#include <set>

using namespace fintop;
using namespace fintop::testing;

namespace {

// Independent closure oracle: iterate relation composition to a fixed point,
// then drop every pair with a witness strictly in between.
struct ClosureOracle {
    int n;
    std::vector<char> strict; // strict[x*n+y] <=> x < y

    explicit ClosureOracle(int n_, const std::vector<std::pair<int, int>>& lower_upper) : n(n_) {
        strict.assign(static_cast<std::size_t>(n) * n, 0);
        for (auto [lo, hi] : lower_upper) strict[lo * n + hi] = 1;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int z = 0; z < n; ++z)
                        if (strict[x * n + y] && strict[y * n + z] && !strict[x * n + z]) {
                            strict[x * n + z] = 1;
                            changed = true;
                        }
        }
    }

    std::set<std::pair<int, int>> covers() const { // (upper, lower)
        std::set<std::pair<int, int>> out;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (!strict[b * n + a]) continue;
                bool mid = false;
                for (int z = 0; z < n && !mid; ++z)
                    if (strict[b * n + z] && strict[z * n + a]) mid = true;
                if (!mid) out.insert({a, b});
            }
        return out;
    }
};

std::set<int> as_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

} // namespace

TEST_CASE("one-point poset has no covers") {
    FinitePoset p = singleton();
    CHECK(p.size() == 1);
    CHECK(p.covers().empty());
}

TEST_CASE("zigzag covers are exactly the declared relations") {
    FinitePoset p = zigzag();
    std::set<std::pair<int, int>> expect = {
        {p.index_of("a"), p.index_of("b")},
        {p.index_of("a"), p.index_of("t")},
        {p.index_of("s"), p.index_of("b")},
    };
    CHECK(std::set<std::pair<int, int>>(p.covers().begin(), p.covers().end()) == expect);
}

TEST_CASE("circle model closure and reduction match the oracle") {
    FinitePoset p = circle4();
    long strict_pairs = 0;
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y)
            if (p.less(x, y)) ++strict_pairs;
    CHECK(strict_pairs == 4);

    ClosureOracle oracle(4, {{2, 0}, {3, 0}, {2, 1}, {3, 1}});
    CHECK(std::set<std::pair<int, int>>(p.covers().begin(), p.covers().end()) == oracle.covers());
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            CHECK(p.less(x, y) == (oracle.strict[x * 4 + y] != 0));
}

TEST_CASE("closure happens through intermediate relations") {
    // c<a and a<t forces c<t; covers stay the two declared edges.
    FinitePoset p = build_poset({"a", "c", "t"}, {{"c", "a"}, {"a", "t"}});
    CHECK(p.less(p.index_of("c"), p.index_of("t")));
    CHECK(p.covers().size() == 2);
}

TEST_CASE("cycles and unknown labels are rejected") {
    CHECK_THROWS_AS(build_poset({"x", "y"}, {{"x", "y"}, {"y", "x"}}), CycleDetected);
    CHECK_THROWS_AS(build_poset({"x"}, {{"x", "nope"}}), UnknownLabel);
    CHECK_THROWS_AS(build_poset({"x", "x"}, {}), InvalidInput);
}

TEST_CASE("minimal open sets and closures") {
    FinitePoset s = singleton();
    CHECK(s.min_open(0) == std::vector<int>{0});
    CHECK(s.closure_of(0) == std::vector<int>{0});
    CHECK(s.punctured_up(0).empty());

    FinitePoset c = circle4();
    CHECK(as_set(c.min_open(c.index_of("a"))) == as_set(by_labels(c, {"a", "c", "d"})));
    CHECK(as_set(c.closure_of(c.index_of("c"))) == as_set(by_labels(c, {"c", "a", "b"})));
    CHECK(as_set(c.punctured_up(c.index_of("c"))) == as_set(by_labels(c, {"a", "b"})));

    FinitePoset z = zigzag();
    CHECK(as_set(z.min_open(z.index_of("s"))) == as_set(by_labels(z, {"s", "b"})));
    CHECK(as_set(z.closure_of(z.index_of("b"))) == as_set(by_labels(z, {"b", "a", "s"})));

    FinitePoset two = chain(2);
    CHECK(two.punctured_down(1) == std::vector<int>{0});
}

TEST_CASE("opposite transposes the order") {
    CHECK(singleton().opposite() == singleton());
    FinitePoset two = chain(2);
    FinitePoset op = two.opposite();
    CHECK(op.less(1, 0));
    CHECK_FALSE(op.less(0, 1));
    // The circle model is self-dual with the roles of maxima and minima swapped.
    CHECK(are_isomorphic(circle4(), circle4().opposite()));
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) CHECK(circle4().leq(x, y) == circle4().opposite().leq(y, x));
}

TEST_CASE("connectivity of subspaces") {
    FinitePoset c = circle4();
    CHECK(is_connected(c, std::vector<int>{}));
    CHECK(is_connected(c, by_labels(c, {"a"})));
    CHECK_FALSE(is_connected(c, by_labels(c, {"a", "b"})));
    CHECK(is_connected(c));

    auto comps = connected_components(c, by_labels(c, {"a", "b"}));
    CHECK(comps.size() == 2);
    CHECK(comps[0].size() == 1);
    CHECK(comps[1].size() == 1);
    CHECK(connected_components(c, by_labels(c, {"a", "c", "b"})).size() == 1);
    CHECK_FALSE(is_connected(antichain(2)));
}

TEST_CASE("beat points") {
    FinitePoset two = chain(2);
    CHECK(two.is_down_beat(1));
    CHECK(two.is_up_beat(0));
    CHECK(as_set(two.beat_points()) == std::set<int>{0, 1});

    CHECK(circle4().beat_points().empty());

    FinitePoset z = zigzag();
    CHECK(z.is_up_beat(z.index_of("t")));
    CHECK_FALSE(z.is_up_beat(z.index_of("b")));

    // A singleton has no y != x to witness anything.
    CHECK(singleton().beat_points().empty());
}

TEST_CASE("core dismantles to a point exactly for contractible spaces") {
    auto [c1, removed1] = core(singleton());
    CHECK(c1.size() == 1);
    CHECK(removed1.empty());

    auto [cc, removed2] = core(circle4());
    CHECK(cc == circle4());
    CHECK_FALSE(is_contractible(circle4()));

    CHECK(is_contractible(chain(4)));
    CHECK(is_contractible(zigzag().induced(by_labels(zigzag(), {"a", "b", "t"}))));
    CHECK_THROWS_AS(core(build_poset({}, {})), EmptySpace);

    // Any poset with a maximum dismantles to a point.
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        FinitePoset base = random_poset(1 + static_cast<int>(rng() % 5), 0.3, rng);
        std::vector<std::string> labels = base.labels();
        labels.push_back("top");
        std::vector<std::pair<std::string, std::string>> rel;
        for (const auto& [a, b] : base.covers()) rel.emplace_back(base.label(b), base.label(a));
        for (const auto& l : base.labels()) rel.emplace_back(l, "top");
        CHECK(is_contractible(build_poset(labels, rel)));
    }
}

TEST_CASE("order embeds in the minimal-open-set lattice") {
    for (const FinitePoset& p : {circle4(), zigzag(), chain(3)}) {
        for (int x = 0; x < p.size(); ++x)
            for (int y = 0; y < p.size(); ++y) {
                auto ux = as_set(p.min_open(x));
                auto uy = as_set(p.min_open(y));
                CHECK(p.leq(x, y) == std::includes(uy.begin(), uy.end(), ux.begin(), ux.end()));
            }
    }
}

TEST_CASE("covers are the inclusion-minimal generators of the strict order") {
    for (int n = 1; n <= 4; ++n) {
        for (const FinitePoset& p : enumerate_posets(n)) {
            // Transitive closure of the covers gives back the strict order.
            ClosureOracle closed(n, [&] {
                std::vector<std::pair<int, int>> lower_upper;
                for (const auto& [a, b] : p.covers()) lower_upper.emplace_back(b, a);
                return lower_upper;
            }());
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    CHECK(p.less(x, y) == (closed.strict[x * n + y] != 0));
            // Dropping any cover loses a relation.
            for (std::size_t skip = 0; skip < p.covers().size(); ++skip) {
                std::vector<std::pair<int, int>> lower_upper;
                for (std::size_t i = 0; i < p.covers().size(); ++i)
                    if (i != skip)
                        lower_upper.emplace_back(p.covers()[i].second, p.covers()[i].first);
                ClosureOracle smaller(n, lower_upper);
                const auto [a, b] = p.covers()[skip];
                CHECK_FALSE(smaller.strict[b * n + a]);
            }
        }
    }
}

TEST_CASE("poset isomorphism distinguishes small shapes") {
    CHECK(are_isomorphic(chain(3), chain(3)));
    CHECK_FALSE(are_isomorphic(chain(3), antichain(3)));
    FinitePoset vee = build_poset({"x", "y", "z"}, {{"x", "y"}, {"x", "z"}});
    FinitePoset wedge = build_poset({"x", "y", "z"}, {{"y", "x"}, {"z", "x"}});
    CHECK_FALSE(are_isomorphic(vee, wedge));
    CHECK(are_isomorphic(vee, wedge.opposite()));
}
