#include <doctest.h>

#include <random>
#include <stdexcept>

#include "fslab/perm.hpp"

using namespace fslab;

TEST_CASE("rank and unrank") {
    CHECK(rank(Bijection::identity(4)) == 0);
    CHECK(rank(Bijection{3, 2, 1, 0}) == 23);  // last permutation
    for (int n : {1, 2, 3, 4, 5, 6}) {
        for (PermRank r = 0; r < kFactorial[n]; ++r) CHECK(rank(unrank(r, n)) == r);
    }
    // Lexicographic: unrank respects ordering.
    for (PermRank r = 0; r + 1 < kFactorial[5]; ++r) CHECK(unrank(r, 5) < unrank(r + 1, 5));
    CHECK_THROWS_AS(unrank(kFactorial[4], 4), std::out_of_range);
}

TEST_CASE("sign") {
    CHECK(sign(Bijection::identity(5)) == 1);
    CHECK(sign(Bijection{1, 0, 2, 3, 4}) == -1);
    CHECK(sign(Bijection{1, 0, 3, 2, 4}) == 1);  // two disjoint transpositions
    // Group homomorphism, exhaustively at n = 4.
    for (PermRank r1 = 0; r1 < 24; ++r1)
        for (PermRank r2 = 0; r2 < 24; ++r2) {
            Bijection b = unrank(r1, 4), c = unrank(r2, 4);
            CHECK(sign(compose(b, c)) == sign(b) * sign(c));
        }
    // Random triples at n = 8.
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        Bijection b = unrank(static_cast<PermRank>(rng() % kFactorial[8]), 8);
        Bijection c = unrank(static_cast<PermRank>(rng() % kFactorial[8]), 8);
        CHECK(sign(compose(b, c)) == sign(b) * sign(c));
    }
}

TEST_CASE("swapped") {
    Bijection id = Bijection::identity(4);
    Bijection t = id.swapped(0, 1);
    CHECK(t == Bijection{1, 0, 2, 3});
    CHECK(t.swapped(0, 1) == id);        // involution
    CHECK(sign(t) == -sign(id));
    int moved = 0;
    Bijection b{2, 0, 3, 1};
    Bijection s = b.swapped(1, 3);
    for (int i = 0; i < 4; ++i) moved += (b[i] != s[i]) ? 1 : 0;
    CHECK(moved == 2);
    CHECK_THROWS_AS(id.swapped(2, 2), std::invalid_argument);
}

TEST_CASE("inverse and compose") {
    for (PermRank r = 0; r < kFactorial[5]; ++r) {
        Bijection b = unrank(r, 5);
        CHECK(compose(b, b.inverse()) == Bijection::identity(5));
        CHECK(compose(b.inverse(), b) == Bijection::identity(5));
    }
}

TEST_CASE("restrict and extend") {
    Bijection b{2, 0, 3, 1};
    // Remove x = 2 (image 3): kept x {0,1,3} -> compact {0,1,2}; kept y {0,1,2}.
    Bijection r = restrict_to(b, 0b0100, 0b1000);
    CHECK(r.size() == 3);
    CHECK(r == Bijection{2, 0, 1});

    CHECK(restrict_to(b, 0, 0) == b);

    // Round trip through the same pinning.
    Bijection back = extend_with(r, {{2, 3}}, 4);
    CHECK(back == b);

    // Two removed vertices admit exactly two distinct extensions.
    Bijection small{1, 0};
    Bijection e1 = extend_with(small, {{2, 2}, {3, 3}}, 4);
    Bijection e2 = extend_with(small, {{2, 3}, {3, 2}}, 4);
    CHECK(e1 != e2);
    CHECK(restrict_to(e1, 0b1100, 0b1100) == small);
    CHECK(restrict_to(e2, 0b1100, 0b1100) == small);

    CHECK_THROWS_AS(restrict_to(b, 0b0100, 0b0001), std::invalid_argument);
    CHECK_THROWS_AS(extend_with(small, {{2, 2}, {3, 2}}, 4), std::invalid_argument);
    CHECK_THROWS_AS(extend_with(small, {{2, 2}}, 4), std::invalid_argument);
}

TEST_CASE("restrict respects order-preserving compaction") {
    // Remove x in {0, 3} mapped onto y in {1, 2}: kept x {1,2,4}, kept y {0,3,4}.
    Bijection b{1, 0, 4, 2, 3};
    Bijection r = restrict_to(b, 0b01001, 0b00110);
    CHECK(r.size() == 3);
    // x=1 -> y=0 (compact 0), x=2 -> y=4 (compact 2), x=4 -> y=3 (compact 1).
    CHECK(r == Bijection{0, 2, 1});
}

TEST_CASE("bijection text form") {
    CHECK(Bijection({2, 0, 1}).to_string() == "2 0 1");
}
