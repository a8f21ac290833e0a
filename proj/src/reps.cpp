#include "diamond/reps.hpp"

#include <random>
#include <stdexcept>

namespace diamond {

namespace {
void require_positive(int m, const char* who) {
    if (m < 1) throw std::invalid_argument(std::string(who) + ": m must be >= 1");
}
}  // namespace

ExactMatrix MatrixRep::image_of(const Vec& x) const {
    if (static_cast<int>(x.size()) != algebra.dim) {
        throw std::invalid_argument("image_of: vector length != algebra dimension");
    }
    ExactMatrix out(order, order);
    for (int b = 0; b < algebra.dim; ++b) {
        if (!x[b].is_zero()) out = out + images[b].scaled(x[b]);
    }
    return out;
}

MatrixRep phi_sl(int m) {
    require_positive(m, "phi_sl");
    MatrixRep rep;
    rep.algebra = diamond_complex(m);
    rep.order = m + 2;
    rep.images.assign(rep.algebra.dim, ExactMatrix(rep.order, rep.order));

    const GaussianRational i = GaussianRational::i();
    const GaussianRational corner(Rational(m, m + 2));         // m/(m+2)
    const GaussianRational inner(Rational(2, m + 2));          // 2/(m+2)

    ExactMatrix& j = rep.images[diamond_j()];
    j.at(0, 0) = i * corner;
    for (int s = 1; s <= m; ++s) j.at(s, s) = -(i * inner);    // rows 2..m+1
    j.at(m + 1, m + 1) = i * corner;

    for (int k = 1; k <= m; ++k) {
        rep.images[diamond_p(m, k)].at(0, m + 1 - k) = GaussianRational(1);      // e_{1,m+2-k}
        rep.images[diamond_q(m, k)].at(m + 1 - k, m + 1) = GaussianRational(1);  // e_{m+2-k,m+2}
    }
    rep.images[diamond_t(m)].at(0, m + 1) = -(i * GaussianRational(Rational(1, 2)));
    return rep;
}

MatrixRep phi_sp(int m) {
    require_positive(m, "phi_sp");
    MatrixRep rep;
    rep.algebra = diamond_real(m);
    rep.order = 2 * m + 2;
    rep.images.assign(rep.algebra.dim, ExactMatrix(rep.order, rep.order));
    const int n = 2 * m + 2;

    ExactMatrix& j = rep.images[diamond_j()];
    for (int k = 2; k <= m + 1; ++k) j.at(k - 1, n - k) = GaussianRational(-1);     // -e_{k,2m+3-k}
    for (int k = m + 2; k <= 2 * m + 1; ++k) j.at(k - 1, n - k) = GaussianRational(1);

    for (int k = 1; k <= m; ++k) {
        ExactMatrix& p = rep.images[diamond_p(m, k)];
        p.at(0, k) = GaussianRational(1);                  // e_{1,1+k}
        p.at(n - k - 1, n - 1) = GaussianRational(-1);     // -e_{2m+2-k,2m+2}
        ExactMatrix& q = rep.images[diamond_q(m, k)];
        q.at(0, n - k - 1) = GaussianRational(1);          // e_{1,2m+2-k}
        q.at(k, n - 1) = GaussianRational(1);              // e_{k+1,2m+2}
    }
    rep.images[diamond_t(m)].at(0, n - 1) = GaussianRational(2);
    return rep;
}

CheckReport check_rep_homomorphism(const MatrixRep& rep) {
    CheckReport out;
    const AlgebraTable& a = rep.algebra;
    for (int x = 0; x < a.dim; ++x) {
        for (int y = 0; y < a.dim; ++y) {
            ExactMatrix expected(rep.order, rep.order);
            for (const auto& [k, c] : a.bracket_basis(x, y)) {
                expected = expected + rep.images[k].scaled(c);
            }
            if (rep.images[x].commutator(rep.images[y]) == expected) continue;
            if (out.pass) {
                out.pass = false;
                out.first = {x, y, -1};
                out.what = "homomorphism fails at (" + a.labels[x] + ", " + a.labels[y] + ")";
            }
            ++out.violations;
        }
    }
    return out;
}

FaithfulReport check_faithful(const MatrixRep& rep) {
    const int n2 = rep.order * rep.order;
    ExactMatrix stacked(n2, rep.algebra.dim);
    for (int b = 0; b < rep.algebra.dim; ++b) {
        for (int r = 0; r < rep.order; ++r) {
            for (int c = 0; c < rep.order; ++c) {
                stacked.at(r * rep.order + c, b) = rep.images[b].at(r, c);
            }
        }
    }
    const int kdim = kernel(stacked).dim();
    return {kdim == 0, kdim};
}

CheckReport check_traceless(const MatrixRep& rep) {
    CheckReport out;
    for (int b = 0; b < rep.algebra.dim; ++b) {
        if (rep.images[b].trace().is_zero()) continue;
        if (out.pass) {
            out.pass = false;
            out.first = {b, -1, -1};
            out.what = "nonzero trace at " + rep.algebra.labels[b];
        }
        ++out.violations;
    }
    return out;
}

Subspace invariant_forms(const MatrixRep& rep) {
    const int n = rep.order;
    // Unknown B flattened row-major; one equation per (basis x, entry (r,c)):
    // sum_s phi(x)_{s,r} B_{s,c} + sum_s B_{r,s} phi(x)_{s,c} = 0.
    std::vector<Vec> rows;
    for (int b = 0; b < rep.algebra.dim; ++b) {
        const ExactMatrix& phi = rep.images[b];
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) {
                Vec row(n * n);
                bool nonzero = false;
                for (int s = 0; s < n; ++s) {
                    if (!phi.at(s, r).is_zero()) {
                        row[s * n + c] += phi.at(s, r);
                        nonzero = true;
                    }
                    if (!phi.at(s, c).is_zero()) {
                        row[r * n + s] += phi.at(s, c);
                        nonzero = true;
                    }
                }
                if (nonzero && !vec_is_zero(row)) rows.push_back(std::move(row));
            }
        }
    }
    if (rows.empty()) return Subspace::full(n * n);
    return kernel(ExactMatrix::from_rows(rows));
}

namespace {
ExactMatrix unflatten(const Vec& v, int n) {
    ExactMatrix m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.at(r, c) = v[r * n + c];
    return m;
}

bool is_skew_nondegenerate(const ExactMatrix& b) {
    const int n = b.rows();
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            if (!(b.at(r, c) + b.at(c, r)).is_zero()) return false;
        }
    }
    return rref(b).rank == n;
}
}  // namespace

std::optional<ExactMatrix> find_invariant_symplectic_form(const MatrixRep& rep,
                                                          int combination_trials) {
    const Subspace forms = invariant_forms(rep);
    const int n = rep.order;
    for (const Vec& v : forms.basis()) {
        ExactMatrix b = unflatten(v, n);
        if (is_skew_nondegenerate(b)) return b;
    }
    std::mt19937 rng(0x51C0FF);
    for (int t = 0; t < combination_trials; ++t) {
        Vec v(n * n);
        for (const Vec& basis_vec : forms.basis()) {
            const long c = static_cast<long>(rng() % 19) - 9;
            if (c != 0) v = vec_add(v, vec_scaled(basis_vec, GaussianRational(c)));
        }
        ExactMatrix b = unflatten(v, n);
        if (is_skew_nondegenerate(b)) return b;
    }
    return std::nullopt;
}

Vec ModuleAction::act(int v, int e) const {
    auto it = action.find({v, e});
    if (it == action.end()) return Vec(module_dim);
    return sparse_to_dense(it->second, module_dim);
}

Vec ModuleAction::act_vec(const Vec& x, int e) const {
    if (static_cast<int>(x.size()) != module_dim) {
        throw std::invalid_argument("act_vec: vector length != module dimension");
    }
    Vec out(module_dim);
    for (int v = 0; v < module_dim; ++v) {
        if (x[v].is_zero()) continue;
        auto it = action.find({v, e});
        if (it == action.end()) continue;
        for (const auto& [t, coeff] : it->second) out[t] += x[v] * coeff;
    }
    return out;
}

void ModuleAction::set_action(int v, int e, SparseVec row) {
    std::erase_if(row, [](const auto& term) { return term.second.is_zero(); });
    if (row.empty()) {
        action.erase({v, e});
    } else {
        action[{v, e}] = std::move(row);
    }
}

ModuleAction module_from_rep(const MatrixRep& rep) {
    ModuleAction act;
    act.algebra = rep.algebra;
    act.module_dim = rep.order;
    for (int e = 0; e < rep.algebra.dim; ++e) {
        for (int v = 0; v < rep.order; ++v) {
            act.set_action(v, e, sparse_from_dense(rep.images[e].row(v)));
        }
    }
    return act;
}

ModuleAction action_table_sl(int m) {
    require_positive(m, "action_table_sl");
    ModuleAction act;
    act.algebra = diamond_complex(m);
    act.module_dim = m + 2;
    const GaussianRational i = GaussianRational::i();
    const GaussianRational corner = i * GaussianRational(Rational(m, m + 2));
    const GaussianRational inner = -(i * GaussianRational(Rational(2, m + 2)));

    act.set_action(0, diamond_j(), {{0, corner}});                       // (X_1, J)
    for (int k = 2; k <= m + 1; ++k) {
        act.set_action(k - 1, diamond_j(), {{k - 1, inner}});            // (X_k, J)
    }
    act.set_action(m + 1, diamond_j(), {{m + 1, corner}});               // (X_{m+2}, J)
    for (int k = 1; k <= m; ++k) {
        act.set_action(0, diamond_p(m, k), {{m + 1 - k, GaussianRational(1)}});
        act.set_action(m + 1 - k, diamond_q(m, k), {{m + 1, GaussianRational(1)}});
    }
    act.set_action(0, diamond_t(m), {{m + 1, -(i * GaussianRational(Rational(1, 2)))}});
    return act;
}

ModuleAction action_table_sp(int m) {
    require_positive(m, "action_table_sp");
    ModuleAction act;
    act.algebra = diamond_real(m);
    act.module_dim = 2 * m + 2;
    const int n = 2 * m + 2;

    for (int k = 2; k <= m + 1; ++k) {
        act.set_action(k - 1, diamond_j(), {{n - k, GaussianRational(-1)}});   // (X_k,J) = -X_{2m+3-k}
    }
    for (int k = m + 2; k <= 2 * m + 1; ++k) {
        act.set_action(k - 1, diamond_j(), {{n - k, GaussianRational(1)}});    // (X_k,J) = X_{2m+3-k}
    }
    for (int k = 1; k <= m; ++k) {
        act.set_action(0, diamond_p(m, k), {{k, GaussianRational(1)}});        // (X_1,P_k) = X_{k+1}
        act.set_action(n - k - 1, diamond_p(m, k), {{n - 1, GaussianRational(-1)}});
        act.set_action(0, diamond_q(m, k), {{n - k - 1, GaussianRational(1)}});
        act.set_action(k, diamond_q(m, k), {{n - 1, GaussianRational(1)}});    // (X_{k+1},Q_k)
    }
    act.set_action(0, diamond_t(m), {{n - 1, GaussianRational(2)}});           // (X_1,T) = 2X_{2m+2}
    return act;
}

CheckReport check_right_module(const ModuleAction& act) {
    CheckReport out;
    const AlgebraTable& a = act.algebra;
    for (int v = 0; v < act.module_dim; ++v) {
        Vec xv(act.module_dim);
        xv[v] = GaussianRational(1);
        for (int e = 0; e < a.dim; ++e) {
            const Vec ve = act.act(v, e);
            for (int f = 0; f < a.dim; ++f) {
                // v.[e,f] - (v.e).f + (v.f).e
                Vec residual(act.module_dim);
                for (const auto& [k, c] : a.bracket_basis(e, f)) {
                    residual = vec_add(residual, vec_scaled(act.act(v, k), c));
                }
                residual = vec_sub(residual, act.act_vec(ve, f));
                residual = vec_add(residual, act.act_vec(act.act(v, f), e));
                if (vec_is_zero(residual)) continue;
                if (out.pass) {
                    out.pass = false;
                    out.first = {v, e, f};
                    out.what = "right-module axiom fails at (X" + std::to_string(v + 1) +
                               ", " + a.labels[e] + ", " + a.labels[f] + ")";
                }
                ++out.violations;
            }
        }
    }
    return out;
}

std::vector<std::string> module_labels(int n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (int v = 1; v <= n; ++v) out.push_back("X" + std::to_string(v));
    return out;
}

}  // namespace diamond
