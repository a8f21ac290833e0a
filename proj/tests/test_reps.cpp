#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diamond/reps.hpp"

using namespace diamond;

namespace {
const GaussianRational I = GaussianRational::i();

GaussianRational frac_i(long num, long den) {
    return GaussianRational(Rational(0), Rational(num, den));
}
}  // namespace

TEST_CASE("phi_sl image formulas") {
    SUBCASE("m=1") {
        MatrixRep rep = phi_sl(1);
        CHECK(rep.order == 3);

        ExactMatrix j(3, 3);
        j.at(0, 0) = frac_i(1, 3);
        j.at(1, 1) = frac_i(-2, 3);
        j.at(2, 2) = frac_i(1, 3);
        CHECK(rep.images[diamond_j()] == j);

        ExactMatrix t(3, 3);
        t.at(0, 2) = frac_i(-1, 2);
        CHECK(rep.images[diamond_t(1)] == t);

        ExactMatrix p(3, 3);
        p.at(0, 1) = GaussianRational(1);
        CHECK(rep.images[diamond_p(1, 1)] == p);

        ExactMatrix q(3, 3);
        q.at(1, 2) = GaussianRational(1);
        CHECK(rep.images[diamond_q(1, 1)] == q);
    }
    SUBCASE("m=2: P2+ image is e_{1,2}") {
        MatrixRep rep = phi_sl(2);
        CHECK(rep.order == 4);
        ExactMatrix p2(4, 4);
        p2.at(0, 1) = GaussianRational(1);
        CHECK(rep.images[diamond_p(2, 2)] == p2);
    }
    SUBCASE("images are strictly upper triangular except the diagonal J") {
        for (int m = 1; m <= 6; ++m) {
            MatrixRep rep = phi_sl(m);
            for (int b = 0; b < rep.algebra.dim; ++b) {
                for (int r = 0; r < rep.order; ++r) {
                    for (int c = 0; c <= r; ++c) {
                        if (b == diamond_j() && r == c) continue;
                        CHECK(rep.images[b].at(r, c).is_zero());
                    }
                }
            }
        }
    }
    CHECK_THROWS_AS(phi_sl(0), std::invalid_argument);
}

TEST_CASE("phi_sp image formulas (m=1)") {
    MatrixRep rep = phi_sp(1);
    CHECK(rep.order == 4);

    ExactMatrix j(4, 4);
    j.at(1, 2) = GaussianRational(-1);
    j.at(2, 1) = GaussianRational(1);
    CHECK(rep.images[diamond_j()] == j);

    ExactMatrix p(4, 4);
    p.at(0, 1) = GaussianRational(1);
    p.at(2, 3) = GaussianRational(-1);
    CHECK(rep.images[diamond_p(1, 1)] == p);

    ExactMatrix q(4, 4);
    q.at(0, 2) = GaussianRational(1);
    q.at(1, 3) = GaussianRational(1);
    CHECK(rep.images[diamond_q(1, 1)] == q);

    ExactMatrix t(4, 4);
    t.at(0, 3) = GaussianRational(2);
    CHECK(rep.images[diamond_t(1)] == t);

    // [phi(P1), phi(Q1)] = 2 e_{1,4} = phi(T)
    CHECK(rep.images[diamond_p(1, 1)].commutator(rep.images[diamond_q(1, 1)]) ==
          rep.images[diamond_t(1)]);

    CHECK_THROWS_AS(phi_sp(0), std::invalid_argument);
}

TEST_CASE("representation homomorphism check") {
    for (int m = 1; m <= 6; ++m) {
        CHECK(check_rep_homomorphism(phi_sl(m)).pass);
        CHECK(check_rep_homomorphism(phi_sp(m)).pass);
    }

    MatrixRep bad = phi_sl(1);
    bad.images[diamond_t(1)] = bad.images[diamond_t(1)].scaled(GaussianRational(-1));
    CheckReport rep = check_rep_homomorphism(bad);
    CHECK(!rep.pass);
    CHECK(rep.first == std::array<int, 3>{diamond_p(1, 1), diamond_q(1, 1), -1});
}

TEST_CASE("faithfulness") {
    for (int m = 1; m <= 6; ++m) {
        MatrixRep sl = phi_sl(m);
        CHECK(check_faithful(sl).faithful);
        CHECK(sl.order == m + 2);
        CHECK(check_faithful(phi_sp(m)).faithful);
    }

    MatrixRep zero = phi_sl(1);
    for (ExactMatrix& img : zero.images) img = ExactMatrix(zero.order, zero.order);
    FaithfulReport rep = check_faithful(zero);
    CHECK(!rep.faithful);
    CHECK(rep.kernel_dim == zero.algebra.dim);
}

TEST_CASE("traceless images") {
    for (int m = 1; m <= 6; ++m) {
        CHECK(check_traceless(phi_sl(m)).pass);
        CHECK(check_traceless(phi_sp(m)).pass);
    }
    MatrixRep bad = phi_sp(1);
    bad.images[0].at(0, 0) = GaussianRational(1);
    CHECK(!check_traceless(bad).pass);
}

TEST_CASE("invariant forms of phi_sp contain a symplectic form") {
    for (int m = 1; m <= 3; ++m) {
        MatrixRep rep = phi_sp(m);
        auto form = find_invariant_symplectic_form(rep);
        REQUIRE(form.has_value());
        const int n = rep.order;
        // Skew, nondegenerate, and invariant under every image.
        CHECK(rref(*form).rank == n);
        CHECK((form->transpose() + *form).is_zero());
        for (const ExactMatrix& phi : rep.images) {
            CHECK((phi.transpose() * *form + *form * phi).is_zero());
        }
    }
}

TEST_CASE("invariant form space for m=1 contains the antidiagonal form") {
    MatrixRep rep = phi_sp(1);
    Subspace forms = invariant_forms(rep);
    // Omega = e_{1,4} + e_{2,3} - e_{3,2} - e_{4,1}, flattened row-major.
    Vec omega(16);
    omega[0 * 4 + 3] = GaussianRational(1);
    omega[1 * 4 + 2] = GaussianRational(1);
    omega[2 * 4 + 1] = GaussianRational(-1);
    omega[3 * 4 + 0] = GaussianRational(-1);
    CHECK(forms.contains(omega));
}

TEST_CASE("a rep with zero images leaves every form invariant") {
    MatrixRep zero;
    zero.algebra.dim = 1;
    zero.algebra.labels = {"a"};
    zero.order = 2;
    zero.images = {ExactMatrix(2, 2)};
    CHECK(invariant_forms(zero) == Subspace::full(4));
}

TEST_CASE("module actions from the representations match the hand tables") {
    for (int m = 1; m <= 6; ++m) {
        CHECK(module_from_rep(phi_sl(m)).same_table(action_table_sl(m)));
        CHECK(module_from_rep(phi_sp(m)).same_table(action_table_sp(m)));
    }
}

TEST_CASE("hand action table entries") {
    SUBCASE("sl, m=1") {
        ModuleAction act = action_table_sl(1);
        CHECK(act.module_dim == 3);
        CHECK(act.act(0, diamond_p(1, 1)) == Vec{GaussianRational(), GaussianRational(1),
                                                 GaussianRational()});  // (X1,P1+) = X2
        CHECK(act.act(1, diamond_q(1, 1)) == Vec{GaussianRational(), GaussianRational(),
                                                 GaussianRational(1)});  // (X2,Q1-) = X3
        CHECK(act.act(0, diamond_t(1)) ==
              Vec{GaussianRational(), GaussianRational(), frac_i(-1, 2)});  // (X1,T)
    }
    SUBCASE("sl, m=2: only X1 moves under P+") {
        ModuleAction act = action_table_sl(2);
        CHECK(vec_is_zero(act.act(1, diamond_p(2, 1))));  // (X2, P1+) = 0
    }
    SUBCASE("sp, m=1") {
        ModuleAction act = action_table_sp(1);
        CHECK(act.module_dim == 4);
        CHECK(act.act(1, diamond_j()) ==
              Vec{GaussianRational(), GaussianRational(), GaussianRational(-1),
                  GaussianRational()});  // (X2,J) = -X3
        CHECK(act.act(2, diamond_p(1, 1)) ==
              Vec{GaussianRational(), GaussianRational(), GaussianRational(),
                  GaussianRational(-1)});  // (X3,P1) = -X4
        CHECK(vec_is_zero(act.act(0, diamond_j())));  // (X1,J) = 0
        CHECK(act.act(0, diamond_t(1)) ==
              Vec{GaussianRational(), GaussianRational(), GaussianRational(),
                  GaussianRational(2)});  // (X1,T) = 2X4
    }
    SUBCASE("acting on the zero vector gives zero") {
        ModuleAction act = action_table_sp(2);
        CHECK(vec_is_zero(act.act_vec(Vec(act.module_dim), diamond_j())));
    }
    CHECK_THROWS_AS(action_table_sl(0), std::invalid_argument);
    CHECK_THROWS_AS(action_table_sp(0), std::invalid_argument);
}

TEST_CASE("right module axiom") {
    for (int m = 1; m <= 4; ++m) {
        CHECK(check_right_module(action_table_sl(m)).pass);
        CHECK(check_right_module(action_table_sp(m)).pass);
        CHECK(check_right_module(module_from_rep(phi_sl(m))).pass);
        CHECK(check_right_module(module_from_rep(phi_sp(m))).pass);
    }

    ModuleAction bad = action_table_sp(1);
    bad.set_action(0, diamond_t(1), {{3, GaussianRational(1)}});  // (X1,T) := X4
    CheckReport rep = check_right_module(bad);
    CHECK(!rep.pass);
    // v.[P1,Q1] = v.T no longer matches (v.P1).Q1 - (v.Q1).P1.
    CHECK(rep.first == std::array<int, 3>{0, diamond_p(1, 1), diamond_q(1, 1)});
}
