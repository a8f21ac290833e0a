#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diamond/algebra.hpp"
#include "diamond/catalog.hpp"
#include "test_util.hpp"

using namespace diamond;

namespace {
Vec basis_vec(int dim, int i) {
    Vec v(dim);
    v[i] = GaussianRational(1);
    return v;
}
}  // namespace

TEST_CASE("bracket evaluation") {
    AlgebraTable d1 = diamond_real(1);
    const int J = diamond_j(), P1 = diamond_p(1, 1), Q1 = diamond_q(1, 1), T = diamond_t(1);

    CHECK(d1.bracket(basis_vec(4, J), basis_vec(4, P1)) == basis_vec(4, Q1));
    CHECK(d1.bracket(basis_vec(4, J), basis_vec(4, Q1)) ==
          vec_scaled(basis_vec(4, P1), GaussianRational(-1)));
    CHECK(d1.bracket(basis_vec(4, P1), basis_vec(4, Q1)) == basis_vec(4, T));
    CHECK(vec_is_zero(d1.bracket(basis_vec(4, J), Vec(4))));

    AlgebraTable c1 = diamond_complex(1);
    Vec two_i_t = vec_scaled(basis_vec(4, T), GaussianRational(Rational(0), Rational(2)));
    CHECK(c1.bracket(basis_vec(4, P1), basis_vec(4, Q1)) == two_i_t);

    CHECK_THROWS_AS(d1.bracket(Vec(3), Vec(4)), std::invalid_argument);
}

TEST_CASE("check_leibniz on catalog algebras") {
    for (int m = 1; m <= 4; ++m) {
        CHECK(check_leibniz(diamond_real(m)).pass);
        CHECK(check_leibniz(diamond_complex(m)).pass);
        CHECK(check_leibniz(heisenberg(m)).pass);
    }
}

TEST_CASE("check_leibniz reports the first violating triple") {
    AlgebraTable bad = diamond_real(1);
    bad.set_bracket(diamond_p(1, 1), diamond_q(1, 1), {{diamond_p(1, 1), GaussianRational(1)}});
    CheckReport rep = check_leibniz(bad);
    CHECK(!rep.pass);
    CHECK(rep.violations > 0);
    // First lexicographic violation is (J, P1, Q1):
    // [J,[P1,Q1]] = [J,P1] = Q1 but [[J,P1],Q1] - [[J,Q1],P1] = 0.
    CHECK(rep.first == std::array<int, 3>{0, 1, 2});
}

TEST_CASE("the identity forces the antisymmetric counterpart") {
    // With [P1,Q1] = T but [Q1,P1] = 0, the triple (P1,J,P1) breaks:
    // [P1,[J,P1]] = T while [[P1,J],P1] - [[P1,P1],J] = -[Q1,P1] = 0.
    AlgebraTable half = diamond_real(1);
    half.set_bracket(diamond_q(1, 1), diamond_p(1, 1), {});
    CheckReport rep = check_leibniz(half);
    CHECK(!rep.pass);
    CHECK(rep.first == std::array<int, 3>{1, 0, 1});
    CHECK(!check_lie(half).pass);
}

TEST_CASE("check_lie") {
    for (int m = 1; m <= 4; ++m) {
        CHECK(check_lie(diamond_real(m)).pass);
        CHECK(check_lie(heisenberg(m)).pass);
        CHECK(check_lie(diamond_complex(m)).pass);
    }

    AlgebraTable bad = diamond_real(1);
    bad.set_bracket(0, 0, {{diamond_t(1), GaussianRational(1)}});  // [J,J] = T
    CheckReport rep = check_lie(bad);
    CHECK(!rep.pass);
    CHECK(rep.first == std::array<int, 3>{0, 0, -1});
    CHECK(rep.what.find("antisymmetry") != std::string::npos);
}

TEST_CASE("Lie implies Leibniz on catalog algebras") {
    for (int m = 1; m <= 4; ++m) {
        for (const AlgebraTable& a : {diamond_real(m), diamond_complex(m), heisenberg(m)}) {
            if (check_lie(a).pass) CHECK(check_leibniz(a).pass);
        }
    }
}

TEST_CASE("squares span of a Lie algebra is zero") {
    for (int m = 1; m <= 3; ++m) {
        CHECK(squares_span(diamond_real(m)) == Subspace::zero(2 * m + 2));
        CHECK(squares_span(heisenberg(m)) == Subspace::zero(2 * m + 1));
    }
}

TEST_CASE("ideal_closure is a closure operator") {
    AlgebraTable a = diamond_real(2);
    CHECK(ideal_closure(a, Subspace::zero(a.dim)) == Subspace::zero(a.dim));

    testutil::Rng rng(60601);
    for (int t = 0; t < 20; ++t) {
        Subspace s = Subspace::from_span(a.dim, {rng.matrix(1, a.dim, false).row(0)});
        Subspace closed = ideal_closure(a, s);
        CHECK(closed.contains(s));                       // extensive
        CHECK(ideal_closure(a, closed) == closed);       // idempotent
        Subspace bigger = s.sum(Subspace::from_span(a.dim, {rng.matrix(1, a.dim, false).row(0)}));
        CHECK(ideal_closure(a, bigger).contains(closed));  // monotone
    }
}

TEST_CASE("annihilators") {
    SUBCASE("abelian algebra: everything annihilates") {
        AlgebraTable ab;
        ab.dim = 3;
        ab.labels = {"a", "b", "c"};
        CHECK(right_annihilator(ab) == Subspace::full(3));
        CHECK(left_annihilator(ab) == Subspace::full(3));
    }
    SUBCASE("diamond: the right annihilator is the center span{T}") {
        for (int m = 1; m <= 3; ++m) {
            AlgebraTable d = diamond_real(m);
            Subspace expected =
                Subspace::from_span(d.dim, {basis_vec(d.dim, diamond_t(m))});
            CHECK(right_annihilator(d) == expected);
            CHECK(left_annihilator(d) == expected);
        }
    }
    SUBCASE("heisenberg center is span{Z}") {
        for (int m = 1; m <= 3; ++m) {
            AlgebraTable h = heisenberg(m);
            Subspace center = right_annihilator(h).intersect(left_annihilator(h));
            CHECK(center == Subspace::from_span(h.dim, {basis_vec(h.dim, 2 * m)}));
        }
    }
}

TEST_CASE("quotient_algebra") {
    AlgebraTable d = diamond_real(1);

    SUBCASE("by the zero ideal: identical table") {
        QuotientResult q = quotient_algebra(d, Subspace::zero(d.dim));
        CHECK(q.algebra == d);
        CHECK(q.projection.matrix == ExactMatrix::identity(d.dim));
    }
    SUBCASE("by the center span{T}") {
        Subspace center = Subspace::from_span(d.dim, {basis_vec(d.dim, diamond_t(1))});
        QuotientResult q = quotient_algebra(d, center);
        CHECK(q.algebra.dim == 3);
        CHECK(q.algebra.labels == std::vector<std::string>{"J", "P1", "Q1"});
        CHECK(check_lie(q.algebra).pass);
        // [P1,Q1] = T dies in the quotient.
        CHECK(vec_is_zero(q.algebra.bracket(basis_vec(3, 1), basis_vec(3, 2))));
    }
    SUBCASE("non-ideal is rejected") {
        Subspace not_ideal = Subspace::from_span(d.dim, {basis_vec(d.dim, diamond_j())});
        CHECK_THROWS_AS(quotient_algebra(d, not_ideal), std::invalid_argument);
    }
}

TEST_CASE("verify_iso") {
    AlgebraTable d = diamond_real(2);

    SUBCASE("identity map is an isomorphism") {
        LinearMap id{d.dim, d.dim, ExactMatrix::identity(d.dim)};
        CHECK(verify_iso(id, d, d).pass);
    }
    SUBCASE("the P,Q,T subalgebra is heisenberg") {
        for (int m = 1; m <= 4; ++m) {
            AlgebraTable dm = diamond_real(m);
            std::vector<int> pqt;
            for (int k = 1; k <= m; ++k) pqt.push_back(diamond_p(m, k));
            for (int k = 1; k <= m; ++k) pqt.push_back(diamond_q(m, k));
            pqt.push_back(diamond_t(m));
            auto sub = subalgebra(dm, pqt);
            REQUIRE(sub.has_value());
            // P_k -> X_k, Q_k -> Y_k, T -> Z is the identity in these coordinates.
            LinearMap f{sub->dim, sub->dim, ExactMatrix::identity(sub->dim)};
            CHECK(verify_iso(f, *sub, heisenberg(m)).pass);
        }
    }
    SUBCASE("a non-invertible map fails") {
        ExactMatrix m = ExactMatrix::identity(d.dim);
        m.at(diamond_t(2), diamond_t(2)) = GaussianRational();  // T -> 0
        LinearMap f{d.dim, d.dim, m};
        CheckReport rep = verify_iso(f, d, d);
        CHECK(!rep.pass);
        CHECK(rep.what.find("invertible") != std::string::npos);
    }
    SUBCASE("a scaling that breaks the bracket fails with a named pair") {
        ExactMatrix m = ExactMatrix::identity(d.dim);
        m.at(diamond_t(2), diamond_t(2)) = GaussianRational(2);  // T -> 2T
        LinearMap f{d.dim, d.dim, m};
        CheckReport rep = verify_iso(f, d, d);
        CHECK(!rep.pass);
        CHECK(rep.first == std::array<int, 3>{diamond_p(2, 1), diamond_q(2, 1), -1});
    }
}

TEST_CASE("subalgebra rejects non-closed spans") {
    AlgebraTable d = diamond_real(1);
    CHECK(!subalgebra(d, {diamond_j(), diamond_p(1, 1)}).has_value());
}

TEST_CASE("table validation") {
    AlgebraTable a = diamond_real(1);
    a.validate();

    AlgebraTable bad = a;
    bad.table[{0, 1}] = {{7, GaussianRational(1)}};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    AlgebraTable imag = a;
    imag.table[{0, 1}] = {{2, GaussianRational::i()}};
    CHECK_THROWS_AS(imag.validate(), std::invalid_argument);
}
