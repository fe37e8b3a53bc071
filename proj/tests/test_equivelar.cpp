#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "lextri/equivelar.hpp"

using namespace lextri;

namespace {
using Pairs = std::vector<std::pair<int, int>>;
using Triples = std::vector<TypeTriple>;
}  // namespace

TEST_CASE("admissible pairs down to chi = -10") {
    CHECK(admissible_pairs(2) == Pairs{{4, 3}, {6, 4}, {12, 5}});
    CHECK(admissible_pairs(1) == Pairs{{6, 5}});
    CHECK(admissible_pairs(-1) == Pairs{});
    CHECK(admissible_pairs(-2) == Pairs{{12, 7}});
    CHECK(admissible_pairs(-3) == Pairs{{9, 8}, {18, 7}});
    CHECK(admissible_pairs(-4) == Pairs{{12, 8}, {24, 7}});
    CHECK(admissible_pairs(-5) == Pairs{{10, 9}, {15, 8}, {30, 7}});
    CHECK(admissible_pairs(-6) == Pairs{{12, 9}, {18, 8}, {36, 7}});
    CHECK(admissible_pairs(-7) == Pairs{{14, 9}, {21, 8}, {42, 7}});
    CHECK(admissible_pairs(-8) == Pairs{{12, 10}, {16, 9}, {24, 8}, {48, 7}});
    CHECK(admissible_pairs(-9) == Pairs{{18, 9}, {27, 8}, {54, 7}});
    CHECK(admissible_pairs(-10) ==
          Pairs{{12, 11}, {15, 10}, {20, 9}, {30, 8}, {60, 7}});
}

TEST_CASE("pair arithmetic invariants") {
    for (int chi : {2, 1, -2, -5, -9, -24, -60}) {
        for (auto [n, q] : admissible_pairs(chi)) {
            CHECK(n * (6 - q) == 6 * chi);
            CHECK(q >= 3);
            CHECK(n >= q + 1);
        }
    }
    CHECK_THROWS_AS(admissible_pairs(0), std::invalid_argument);
}

TEST_CASE("the chi = 0 family") {
    CHECK(torus_like_pairs(7, 10) == Pairs{{7, 6}, {8, 6}, {9, 6}, {10, 6}});
    CHECK(torus_like_pairs(1, 7) == Pairs{{7, 6}});
    CHECK(torus_like_pairs(9, 8) == Pairs{});
}

TEST_CASE("admissible polyhedral map types") {
    CHECK(admissible_triples(-1) == Triples{});
    CHECK(admissible_triples(-2) == Triples{{3, 7, 12}, {7, 3, 28}});
    CHECK(admissible_triples(-3) == Triples{{3, 8, 9},
                                            {8, 3, 24},
                                            {3, 7, 18},
                                            {7, 3, 42},
                                            {4, 5, 12},
                                            {5, 4, 15}});
    CHECK(admissible_triples(-4) == Triples{{3, 8, 12},
                                            {8, 3, 32},
                                            {3, 7, 24},
                                            {7, 3, 56},
                                            {4, 5, 16},
                                            {5, 4, 20}});
    CHECK_THROWS_AS(admissible_triples(0), std::invalid_argument);
    CHECK_THROWS_AS(admissible_triples(2), std::invalid_argument);
}

TEST_CASE("triple arithmetic invariants") {
    for (int chi : {-2, -3, -4, -6, -12}) {
        for (const auto& t : admissible_triples(chi)) {
            // chi = n - nq/2 + nq/p, all terms integral
            CHECK((t.n * t.q) % 2 == 0);
            CHECK((t.n * t.q) % t.p == 0);
            CHECK(t.n - t.n * t.q / 2 + t.n * t.q / t.p == chi);
            CHECK(t.p >= 3);
            CHECK(t.q >= 3);
            CHECK(t.n >= t.q + 1);
            TypeTriple d = dual_type(t);
            CHECK(dual_type(d) == t);
            CHECK(t.n - t.n * t.q / 2 + t.n * t.q / t.p ==
                  d.n - d.n * d.q / 2 + d.n * d.q / d.p);
        }
    }
}

TEST_CASE("simplicial triples embed into the pair list") {
    // triples with p == 3 are exactly the triangulation types
    for (int chi : {-2, -3, -4, -5}) {
        auto pairs = admissible_pairs(chi);
        for (const auto& t : admissible_triples(chi)) {
            if (t.p != 3) continue;
            bool found = false;
            for (auto [n, q] : pairs) found |= (n == t.n && q == t.q);
            CHECK(found);
        }
    }
}
