#include <doctest.h>

#include <algorithm>
#include <vector>

#include "betpo/core.hpp"
#include "betpo/generators.hpp"
#include "betpo/graphs.hpp"
#include "betpo/oracle.hpp"
#include "betpo/transform.hpp"
#include "test_oracles.hpp"

using namespace betpo;

TEST_CASE("betweenness lists chains of three in both directions") {
    SUBCASE("chain") {
        TernaryStructure s = betweenness_of(chain(3));
        CHECK_EQ(s.triples(), std::vector<Triple>{{0, 1, 2}, {2, 1, 0}});
    }
    SUBCASE("no chain of three, no triples") {
        CHECK(betweenness_of(Poset(3)).triples().empty());
        CHECK(betweenness_of(poset_from_pairs(2, std::vector<Pair>{{0, 1}})).triples().empty());
    }
    SUBCASE("two independent chains never mix") {
        TernaryStructure s = betweenness_of(example5());
        CHECK_EQ(s.triples(),
                 std::vector<Triple>{{0, 1, 2}, {2, 1, 0}, {3, 4, 5}, {5, 4, 3}});
    }
    SUBCASE("closed under triple reversal") {
        TernaryStructure s = betweenness_of(random_poset(9, 0.5, 3));
        for (const Triple& t : s.triples()) CHECK(s.contains(t.z, t.y, t.x));
    }
}

TEST_CASE("minimal, maximal and isolated elements") {
    Poset e3 = example3();
    CHECK_EQ(min_elements(e3), std::vector<Vertex>{0, 4});
    CHECK_EQ(max_elements(e3), std::vector<Vertex>{3, 5});
    CHECK(isolated_elements(e3).empty());

    Poset anti(2);
    CHECK_EQ(min_elements(anti), std::vector<Vertex>{0, 1});
    CHECK_EQ(max_elements(anti), std::vector<Vertex>{0, 1});
    CHECK_EQ(isolated_elements(anti), std::vector<Vertex>{0, 1});

    CHECK(min_elements(Poset(0)).empty());
    CHECK_EQ(min_elements(chain(3)), std::vector<Vertex>{0});
    CHECK_EQ(max_elements(chain(3)), std::vector<Vertex>{2});
    CHECK(isolated_elements(example5()).empty());
}

TEST_CASE("extremal elements are exactly the non-middles") {
    CHECK_EQ(extremal_elements(betweenness_of(chain(3))), std::vector<Vertex>{0, 2});
    CHECK_EQ(extremal_elements(b_cycle(3)), std::vector<Vertex>{0, 2, 4});
    CHECK_EQ(extremal_elements(TernaryStructure(3, {})), std::vector<Vertex>{0, 1, 2});

    SUBCASE("for a poset betweenness they are the union of minimal and maximal") {
        for (int n = 0; n <= 4; ++n) {
            for_each_poset(n, [](const Poset& p) {
                std::vector<Vertex> expected = min_elements(p);
                for (Vertex v : max_elements(p)) expected.push_back(v);
                std::sort(expected.begin(), expected.end());
                expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
                CHECK_EQ(extremal_elements(betweenness_of(p)), expected);
            });
        }
    }
}

TEST_CASE("recognizing orders whose betweenness forgets nothing") {
    CHECK(is_b_minimal(chain(4)));
    CHECK(is_b_minimal(Poset(3)));
    CHECK(is_b_minimal(Poset(0)));
    CHECK(is_b_minimal(fence_poset(2)));
    CHECK_FALSE(is_b_minimal(example3()));
    CHECK_FALSE(is_b_minimal(example5()));
    CHECK_FALSE(is_b_minimal(poset_from_pairs(2, std::vector<Pair>{{0, 1}})));

    SUBCASE("equivalent to the graph comparison") {
        for (int n = 0; n <= 4; ++n) {
            for_each_poset(n, [](const Poset& p) {
                bool graphs_equal = gaifman(betweenness_of(p)).edges() ==
                                    comparability(p).edges();
                CHECK_EQ(is_b_minimal(p), graphs_equal);
            });
        }
    }
}

TEST_CASE("minimize drops exactly the invisible covers") {
    SUBCASE("one pair between a minimal and a maximal element") {
        Poset e3 = example3();
        Poset m = minimize(e3);
        std::vector<Pair> expected;
        for (const Pair& q : e3.pairs()) {
            if (!(q == Pair{4, 5})) expected.push_back(q);
        }
        CHECK_EQ(m.pairs(), expected);
    }
    SUBCASE("splitting into two chains") {
        Poset m = minimize(example5());
        CHECK_EQ(m.pairs(),
                 std::vector<Pair>{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
    }
    SUBCASE("fixed point on already minimal orders") {
        CHECK(minimize(chain(4)) == chain(4));
        CHECK(minimize(Poset(3)) == Poset(3));
    }
    SUBCASE("idempotent, order-shrinking, betweenness-preserving, minimal") {
        for (int n = 0; n <= 4; ++n) {
            for_each_poset(n, [](const Poset& p) {
                Poset m = minimize(p);
                CHECK(is_b_minimal(m));
                CHECK(minimize(m) == m);
                CHECK(betweenness_of(m) == betweenness_of(p));
                CHECK(std::includes(p.pairs().begin(), p.pairs().end(), m.pairs().begin(),
                                    m.pairs().end()));
                // Smallest among the sub-orders sharing the betweenness.
                for (const Poset& q : posets_with_betweenness(betweenness_of(p))) {
                    if (std::includes(p.pairs().begin(), p.pairs().end(), q.pairs().begin(),
                                      q.pairs().end())) {
                        CHECK(std::includes(q.pairs().begin(), q.pairs().end(),
                                            m.pairs().begin(), m.pairs().end()));
                    }
                }
            });
        }
    }
}

TEST_CASE("cuts split the order into a lower and an upper part") {
    SUBCASE("frozen examples") {
        Cut c = cut_of(chain(3));
        CHECK_EQ(c.lower, std::vector<Vertex>{0});
        CHECK_EQ(c.upper, std::vector<Vertex>{1, 2});

        Cut f = cut_of(fence_poset(2));
        CHECK_EQ(f.lower, std::vector<Vertex>{0});
        CHECK_EQ(f.upper, std::vector<Vertex>{1, 2, 3});

        Cut e3 = cut_of(example3());
        CHECK_EQ(e3.lower, std::vector<Vertex>{0, 4});
        CHECK_EQ(e3.upper, std::vector<Vertex>{1, 2, 3, 5});

        Cut e5 = cut_of(example5());
        CHECK_EQ(e5.lower, std::vector<Vertex>{0, 3});
        CHECK_EQ(e5.upper, std::vector<Vertex>{1, 2, 4, 5});
    }
    SUBCASE("posets without a cut are refused") {
        CHECK_THROWS_AS(cut_of(chain(1)), HasIsolatedElement);
        CHECK_THROWS_AS(cut_of(Poset(2)), HasIsolatedElement);
        CHECK_THROWS_WITH_AS(cut_of(Poset(0)), "empty poset has no cut", Error);
    }
    SUBCASE("defining properties hold on every small poset") {
        for (int n = 1; n <= 4; ++n) {
            for_each_poset(n, [n](const Poset& p) {
                if (!isolated_elements(p).empty()) return;
                Cut c = cut_of(p);
                CHECK_FALSE(c.lower.empty());
                CHECK_FALSE(c.upper.empty());
                std::vector<char> in_lower(static_cast<std::size_t>(n), 0);
                std::vector<char> seen(static_cast<std::size_t>(n), 0);
                for (Vertex v : c.lower) in_lower[static_cast<std::size_t>(v)] = seen[static_cast<std::size_t>(v)] = 1;
                for (Vertex v : c.upper) {
                    CHECK_FALSE(seen[static_cast<std::size_t>(v)]);
                    seen[static_cast<std::size_t>(v)] = 1;
                }
                CHECK(std::all_of(seen.begin(), seen.end(), [](char s) { return s == 1; }));
                // downwards / upwards closed
                for (Vertex x = 0; x < n; ++x) {
                    for (Vertex y = 0; y < n; ++y) {
                        if (!p.less(x, y)) continue;
                        if (in_lower[static_cast<std::size_t>(y)]) {
                            CHECK(in_lower[static_cast<std::size_t>(x)]);
                        }
                    }
                }
                // every maximal chain crosses the cut
                for (const auto& ch : testing::maximal_chains(p)) {
                    CHECK(std::any_of(ch.begin(), ch.end(), [&](Vertex v) {
                        return in_lower[static_cast<std::size_t>(v)] == 1;
                    }));
                    CHECK(std::any_of(ch.begin(), ch.end(), [&](Vertex v) {
                        return in_lower[static_cast<std::size_t>(v)] == 0;
                    }));
                }
            });
        }
    }
}

TEST_CASE("rebuilding the order from a lower set") {
    SUBCASE("a chain from its bottom vertex") {
        std::vector<Pair> got =
            order_from_cut(betweenness_of(chain(3)), std::vector<Vertex>{0});
        CHECK_EQ(got, std::vector<Pair>{{0, 1}, {0, 2}, {1, 2}});
    }
    SUBCASE("any cut of the same order rebuilds the same order") {
        std::vector<Pair> got =
            order_from_cut(betweenness_of(chain(3)), std::vector<Vertex>{0, 1});
        CHECK_EQ(got, std::vector<Pair>{{0, 1}, {0, 2}, {1, 2}});
    }
    SUBCASE("a set that is no lower set rebuilds garbage") {
        std::vector<Pair> got =
            order_from_cut(betweenness_of(chain(3)), std::vector<Vertex>{1});
        CHECK_EQ(got, std::vector<Pair>{{1, 0}, {1, 2}});
    }
    SUBCASE("raw output may even contain reflexive pairs") {
        std::vector<Pair> got =
            order_from_cut(TernaryStructure(3, {{0, 0, 2}}), std::vector<Vertex>{0, 1});
        CHECK(std::find(got.begin(), got.end(), Pair{0, 0}) != got.end());
    }
    SUBCASE("recovers the minimized order of every small poset") {
        for (int n = 1; n <= 4; ++n) {
            for_each_poset(n, [](const Poset& p) {
                if (!isolated_elements(p).empty()) return;
                Cut c = cut_of(p);
                CHECK_EQ(order_from_cut(betweenness_of(p), c.lower), minimize(p).pairs());
            });
        }
        Cut c5 = cut_of(example5());
        CHECK_EQ(order_from_cut(betweenness_of(example5()), c5.lower),
                 minimize(example5()).pairs());
    }
}
