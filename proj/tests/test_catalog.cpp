#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diamond/catalog.hpp"

using namespace diamond;

namespace {
SparseVec unit(int k, long c = 1) { return {{k, GaussianRational(c)}}; }
}  // namespace

TEST_CASE("diamond_real structure") {
    AlgebraTable d1 = diamond_real(1);
    CHECK(d1.dim == 4);
    CHECK(d1.field == Scalars::rational);
    CHECK(d1.labels == std::vector<std::string>{"J", "P1", "Q1", "T"});
    CHECK(d1.bracket_basis(diamond_j(), diamond_p(1, 1)) == unit(diamond_q(1, 1)));
    CHECK(d1.bracket_basis(diamond_j(), diamond_q(1, 1)) == unit(diamond_p(1, 1), -1));
    CHECK(d1.bracket_basis(diamond_p(1, 1), diamond_q(1, 1)) == unit(diamond_t(1)));

    AlgebraTable d2 = diamond_real(2);
    CHECK(d2.dim == 6);
    CHECK(d2.bracket_basis(diamond_p(2, 1), diamond_q(2, 2)).empty());

    for (int m = 1; m <= 3; ++m) {
        AlgebraTable d = diamond_real(m);
        for (int x = 0; x < d.dim; ++x) {
            CHECK(d.bracket_basis(diamond_t(m), x).empty());  // T is central
        }
    }
    CHECK_THROWS_AS(diamond_real(0), std::invalid_argument);
}

TEST_CASE("diamond_complex structure") {
    AlgebraTable c1 = diamond_complex(1);
    CHECK(c1.dim == 4);
    CHECK(c1.field == Scalars::gaussian);
    CHECK(c1.labels == std::vector<std::string>{"J", "P1+", "Q1-", "T"});
    const GaussianRational i = GaussianRational::i();
    CHECK(c1.bracket_basis(diamond_p(1, 1), diamond_q(1, 1)) ==
          SparseVec{{diamond_t(1), GaussianRational(2) * i}});
    CHECK(c1.bracket_basis(diamond_j(), diamond_p(1, 1)) == SparseVec{{diamond_p(1, 1), i}});

    AlgebraTable c3 = diamond_complex(3);
    CHECK(c3.bracket_basis(diamond_p(3, 2), diamond_q(3, 3)).empty());
    CHECK(c3.bracket_basis(diamond_j(), diamond_j()).empty());
    CHECK_THROWS_AS(diamond_complex(0), std::invalid_argument);
}

TEST_CASE("heisenberg structure") {
    AlgebraTable h1 = heisenberg(1);
    CHECK(h1.dim == 3);
    CHECK(h1.bracket_basis(0, 1) == unit(2));
    CHECK(h1.bracket_basis(1, 0) == unit(2, -1));

    AlgebraTable h2 = heisenberg(2);
    CHECK(h2.dim == 5);
    CHECK(h2.bracket_basis(0, 3).empty());  // [X1, Y2] = 0
    CHECK_THROWS_AS(heisenberg(0), std::invalid_argument);
}

TEST_CASE("catalog algebras are Lie for m = 1..6") {
    for (int m = 1; m <= 6; ++m) {
        CHECK(check_lie(diamond_real(m)).pass);
        CHECK(check_lie(diamond_complex(m)).pass);
        CHECK(check_lie(heisenberg(m)).pass);
    }
}

TEST_CASE("complexification lands exactly on the complex table") {
    for (int m = 1; m <= 4; ++m) {
        ComplexifyResult res = complexify_diamond(m);
        CHECK(res.algebra == diamond_complex(m));

        // J and T coordinates are untouched by the base change.
        const int n = 2 * m + 2;
        for (int c = 0; c < n; ++c) {
            GaussianRational expect_j = c == diamond_j() ? GaussianRational(1) : GaussianRational();
            GaussianRational expect_t = c == diamond_t(m) ? GaussianRational(1) : GaussianRational();
            CHECK(res.base_change.matrix.at(diamond_j(), c) == expect_j);
            CHECK(res.base_change.matrix.at(diamond_t(m), c) == expect_t);
        }
    }
    CHECK_THROWS_AS(complexify_diamond(0), std::invalid_argument);
}
