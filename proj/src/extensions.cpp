#include "diamond/extensions.hpp"

#include <map>
#include <random>
#include <stdexcept>

namespace diamond {

ExtensionProblem ExtensionProblem::make(AlgebraTable quotient, ModuleAction action) {
    if (action.algebra.dim != quotient.dim) {
        throw std::invalid_argument("ExtensionProblem: action algebra dimension mismatch");
    }
    if (quotient.field == Scalars::gaussian) {
        action.algebra.field = Scalars::gaussian;
    }
    CheckReport lie = check_lie(quotient);
    if (!lie.pass) {
        throw std::invalid_argument("ExtensionProblem: quotient is not a Lie algebra (" +
                                    lie.what + ")");
    }
    ExtensionProblem p{std::move(quotient), std::move(action)};
    p.action.algebra = p.quotient;
    CheckReport mod = check_right_module(p.action);
    if (!mod.pass) {
        throw std::invalid_argument("ExtensionProblem: action is not a right module (" +
                                    mod.what + ")");
    }
    return p;
}

Cocycle Cocycle::zero(const ExtensionProblem& p) {
    Cocycle c;
    c.dim = p.quotient_dim();
    c.module_dim = p.module_dim();
    c.flat.assign(p.unknowns(), GaussianRational());
    return c;
}

Cocycle Cocycle::from_flat(const ExtensionProblem& p, Vec flat) {
    if (static_cast<int>(flat.size()) != p.unknowns()) {
        throw std::invalid_argument("Cocycle: flat vector length mismatch");
    }
    Cocycle c;
    c.dim = p.quotient_dim();
    c.module_dim = p.module_dim();
    c.flat = std::move(flat);
    return c;
}

Vec Cocycle::omega(int i, int j) const {
    Vec out(module_dim);
    for (int t = 0; t < module_dim; ++t) out[t] = flat[(i * dim + j) * module_dim + t];
    return out;
}

void Cocycle::set(int i, int j, int t, GaussianRational v) {
    flat[(i * dim + j) * module_dim + t] = std::move(v);
}

void for_each_constraint_row(const ExtensionProblem& p,
                             const std::function<void(int, int, int, int,
                                                      const SparseVec&)>& fn) {
    const AlgebraTable& q = p.quotient;
    const ModuleAction& act = p.action;
    const int n = q.dim, d = act.module_dim;
    std::vector<std::map<int, GaussianRational>> rows(d);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            const SparseVec& br_xy = q.bracket_basis(x, y);
            for (int z = 0; z < n; ++z) {
                for (auto& row : rows) row.clear();
                // + omega(x, [y,z])
                for (const auto& [w, c] : q.bracket_basis(y, z)) {
                    for (int t = 0; t < d; ++t) rows[t][p.coord(x, w, t)] += c;
                }
                // - omega([x,y], z)
                for (const auto& [w, c] : br_xy) {
                    for (int t = 0; t < d; ++t) rows[t][p.coord(w, z, t)] -= c;
                }
                // - omega(x,y).z : coefficient -act(t',z)_t at unknown (x,y,t')
                for (int tp = 0; tp < d; ++tp) {
                    auto it = act.action.find({tp, z});
                    if (it == act.action.end()) continue;
                    for (const auto& [t, c] : it->second) rows[t][p.coord(x, y, tp)] -= c;
                }
                // + omega([x,z], y)
                for (const auto& [w, c] : q.bracket_basis(x, z)) {
                    for (int t = 0; t < d; ++t) rows[t][p.coord(w, y, t)] += c;
                }
                // + omega(x,z).y
                for (int tp = 0; tp < d; ++tp) {
                    auto it = act.action.find({tp, y});
                    if (it == act.action.end()) continue;
                    for (const auto& [t, c] : it->second) rows[t][p.coord(x, z, tp)] += c;
                }
                for (int t = 0; t < d; ++t) {
                    SparseVec row;
                    row.reserve(rows[t].size());
                    for (auto& [col, coeff] : rows[t]) {
                        if (!coeff.is_zero()) row.emplace_back(col, std::move(coeff));
                    }
                    fn(x, y, z, t, row);
                }
            }
        }
    }
}

ExactMatrix cocycle_constraints(const ExtensionProblem& p) {
    const int d = p.module_dim(), n = p.quotient_dim();
    ExactMatrix m(n * n * n * d, p.unknowns());
    for_each_constraint_row(p, [&](int x, int y, int z, int t, const SparseVec& row) {
        const int r = (((x * n) + y) * n + z) * d + t;
        for (const auto& [col, coeff] : row) m.at(r, col) = coeff;
    });
    return m;
}

Vec constraint_residual(const ExtensionProblem& p, int x, int y, int z, const Cocycle& omega) {
    if (!omega.shape_matches(p)) {
        throw std::invalid_argument("constraint_residual: cocycle shape mismatch");
    }
    const AlgebraTable& q = p.quotient;
    Vec out(p.module_dim());
    for (const auto& [w, c] : q.bracket_basis(y, z)) {
        out = vec_add(out, vec_scaled(omega.omega(x, w), c));
    }
    for (const auto& [w, c] : q.bracket_basis(x, y)) {
        out = vec_sub(out, vec_scaled(omega.omega(w, z), c));
    }
    out = vec_sub(out, p.action.act_vec(omega.omega(x, y), z));
    for (const auto& [w, c] : q.bracket_basis(x, z)) {
        out = vec_add(out, vec_scaled(omega.omega(w, y), c));
    }
    out = vec_add(out, p.action.act_vec(omega.omega(x, z), y));
    return out;
}

Subspace cocycle_space(const ExtensionProblem& p) {
    RowEchelon ech(p.unknowns());
    for_each_constraint_row(p, [&](int, int, int, int, const SparseVec& row) {
        if (!row.empty()) ech.insert(row);
    });
    return ech.kernel_space();
}

Cocycle coboundary_of(const ExtensionProblem& p, const ExactMatrix& f) {
    if (f.rows() != p.quotient_dim() || f.cols() != p.module_dim()) {
        throw std::invalid_argument("coboundary_of: lift map shape mismatch");
    }
    Cocycle out = Cocycle::zero(p);
    const int n = p.quotient_dim(), d = p.module_dim();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Vec v = p.action.act_vec(f.row(i), j);  // f(g_i).g_j
            for (const auto& [w, c] : p.quotient.bracket_basis(i, j)) {
                for (int t = 0; t < d; ++t) v[t] -= c * f.at(w, t);  // - f([g_i,g_j])
            }
            for (int t = 0; t < d; ++t) out.set(i, j, t, v[t]);
        }
    }
    return out;
}

namespace {
std::vector<Vec> coboundary_generators(const ExtensionProblem& p) {
    const int n = p.quotient_dim(), d = p.module_dim();
    std::vector<Vec> gens;
    gens.reserve(n * d);
    for (int x = 0; x < n; ++x) {
        for (int t = 0; t < d; ++t) {
            ExactMatrix f(n, d);
            f.at(x, t) = GaussianRational(1);
            gens.push_back(coboundary_of(p, f).flat);
        }
    }
    return gens;
}
}  // namespace

Subspace coboundary_space(const ExtensionProblem& p) {
    std::vector<Vec> gens = coboundary_generators(p);
    // Every delta f must satisfy the constraint system.
    for_each_constraint_row(p, [&](int x, int y, int z, int t, const SparseVec& row) {
        if (row.empty()) return;
        for (const Vec& g : gens) {
            GaussianRational dot;
            for (const auto& [col, coeff] : row) dot += coeff * g[col];
            if (!dot.is_zero()) {
                throw std::logic_error("coboundary_space: delta image violates constraint at (" +
                                       std::to_string(x) + "," + std::to_string(y) + "," +
                                       std::to_string(z) + ") coord " + std::to_string(t));
            }
        }
    });
    RowEchelon ech(p.unknowns());
    for (const Vec& g : gens) ech.insert(sparse_from_dense(g));
    return ech.row_space();
}

CohomologyReport cohomology(const ExtensionProblem& p) {
    CohomologyReport rep{cocycle_space(p), coboundary_space(p), 0, {}};
    if (!rep.cocycles.contains(rep.coboundaries)) {
        throw std::logic_error("cohomology: coboundaries not contained in cocycles");
    }
    rep.quotient_dim = rep.cocycles.dim() - rep.coboundaries.dim();
    Subspace covered = rep.coboundaries;
    for (const Vec& row : rep.cocycles.basis()) {
        if (covered.contains(row)) continue;
        rep.representatives.push_back(Cocycle::from_flat(p, row));
        covered = covered.sum(Subspace::from_span(p.unknowns(), {row}));
    }
    return rep;
}

AlgebraTable build_extension(const ExtensionProblem& p, const Cocycle& omega) {
    if (!omega.shape_matches(p)) {
        throw std::invalid_argument("build_extension: cocycle shape mismatch");
    }
    const int n = p.quotient_dim(), d = p.module_dim();
    AlgebraTable ext;
    ext.dim = n + d;
    ext.field = p.quotient.field;
    ext.labels = p.quotient.labels;
    for (const std::string& l : module_labels(d)) ext.labels.push_back(l);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            SparseVec entry = p.quotient.bracket_basis(i, j);
            Vec w = omega.omega(i, j);
            for (int t = 0; t < d; ++t) {
                if (!w[t].is_zero()) entry.emplace_back(n + t, w[t]);
            }
            ext.set_bracket(i, j, std::move(entry));
        }
    }
    for (const auto& [key, row] : p.action.action) {
        auto [v, e] = key;
        SparseVec entry;
        for (const auto& [t, c] : row) entry.emplace_back(n + t, c);
        ext.set_bracket(n + v, e, std::move(entry));
    }
    return ext;
}

std::optional<ExactMatrix> solve_lift_change(const ExtensionProblem& p, const Cocycle& omega) {
    if (!omega.shape_matches(p)) {
        throw std::invalid_argument("solve_lift_change: cocycle shape mismatch");
    }
    const int n = p.quotient_dim(), d = p.module_dim();
    std::vector<Vec> gens = coboundary_generators(p);
    ExactMatrix delta(p.unknowns(), n * d);
    for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
        for (int r = 0; r < p.unknowns(); ++r) delta.at(r, g) = gens[g][r];
    }
    Vec rhs(p.unknowns());
    for (int r = 0; r < p.unknowns(); ++r) rhs[r] = -omega.flat[r];
    std::optional<Vec> sol = solve(delta, rhs);
    if (!sol) return std::nullopt;
    ExactMatrix f(n, d);
    for (int x = 0; x < n; ++x) {
        for (int t = 0; t < d; ++t) f.at(x, t) = (*sol)[x * d + t];
    }
    return f;
}

SplitCheckReport check_split(const ExtensionProblem& p, int samples, unsigned seed) {
    SplitCheckReport rep;
    CohomologyReport coh = cohomology(p);
    rep.quotient_dim = coh.quotient_dim;
    if (coh.quotient_dim != 0) {
        rep.what = "cohomology quotient dimension is " + std::to_string(coh.quotient_dim);
        return rep;
    }
    std::mt19937 rng(seed);
    for (int s = 0; s < samples; ++s) {
        Vec flat(p.unknowns());
        for (const Vec& basis_vec : coh.cocycles.basis()) {
            const long c = static_cast<long>(rng() % 19) - 9;
            if (c != 0) flat = vec_add(flat, vec_scaled(basis_vec, GaussianRational(c)));
        }
        Cocycle omega = Cocycle::from_flat(p, std::move(flat));
        std::optional<ExactMatrix> f = solve_lift_change(p, omega);
        if (!f) {
            rep.what = "no lift change found for sample " + std::to_string(s);
            return rep;
        }
        Cocycle delta = coboundary_of(p, *f);
        if (!vec_is_zero(vec_add(omega.flat, delta.flat))) {
            rep.what = "lift change does not cancel sample " + std::to_string(s);
            return rep;
        }
        ++rep.samples_split;
    }
    rep.pass = true;
    return rep;
}

namespace {
void validate_theorem2_params(int m, const std::vector<std::vector<Rational>>& b,
                              const std::vector<std::vector<Rational>>& c) {
    auto shape_ok = [m](const std::vector<std::vector<Rational>>& mat) {
        if (static_cast<int>(mat.size()) != m) return false;
        for (const auto& row : mat) {
            if (static_cast<int>(row.size()) != m) return false;
        }
        return true;
    };
    if (!shape_ok(b) || !shape_ok(c)) {
        throw std::invalid_argument("theorem2: parameter matrices must be m x m");
    }
    for (int k = 0; k < m; ++k) {
        if (!b[k][k].is_zero()) {
            throw std::invalid_argument("theorem2: b[" + std::to_string(k + 1) + "][" +
                                        std::to_string(k + 1) + "] must be zero");
        }
        if (!c[k][k].is_zero()) {
            throw std::invalid_argument("theorem2: c[" + std::to_string(k + 1) + "][" +
                                        std::to_string(k + 1) + "] must be zero");
        }
        for (int s = 0; s < m; ++s) {
            if (!(b[k][s] == -b[s][k])) {
                throw std::invalid_argument("theorem2: b[" + std::to_string(k + 1) + "][" +
                                            std::to_string(s + 1) + "] must equal -b[" +
                                            std::to_string(s + 1) + "][" +
                                            std::to_string(k + 1) + "]");
            }
            if (!(c[k][s] == c[s][k])) {
                throw std::invalid_argument("theorem2: c[" + std::to_string(k + 1) + "][" +
                                            std::to_string(s + 1) + "] must equal c[" +
                                            std::to_string(s + 1) + "][" +
                                            std::to_string(k + 1) + "]");
            }
        }
    }
}
}  // namespace

Cocycle theorem2_cocycle(int m, const Rational& a1,
                         const std::vector<std::vector<Rational>>& b,
                         const std::vector<std::vector<Rational>>& c) {
    validate_theorem2_params(m, b, c);
    ExtensionProblem p = sp_problem(m);
    Cocycle w = Cocycle::zero(p);
    const int last = 2 * m + 1;  // coordinate of X_{2m+2}
    w.set(diamond_j(), diamond_j(), last, GaussianRational(a1));
    for (int k = 1; k <= m; ++k) {
        for (int s = 1; s <= m; ++s) {
            if (k == s) continue;
            w.set(diamond_p(m, k), diamond_p(m, s), last, GaussianRational(b[k - 1][s - 1]));
            w.set(diamond_q(m, k), diamond_q(m, s), last, GaussianRational(b[k - 1][s - 1]));
            // The mixed brackets pair antisymmetrically: [P_k,Q_s] = -[Q_k,P_s].
            // The symmetric placement fails the Leibniz identity at (P_1,J,P_s).
            w.set(diamond_p(m, k), diamond_q(m, s), last, GaussianRational(c[k - 1][s - 1]));
            w.set(diamond_q(m, k), diamond_p(m, s), last, GaussianRational(-c[k - 1][s - 1]));
        }
    }
    return w;
}

AlgebraTable theorem2_table(int m, const Rational& a1,
                            const std::vector<std::vector<Rational>>& b,
                            const std::vector<std::vector<Rational>>& c) {
    ExtensionProblem p = sp_problem(m);
    return build_extension(p, theorem2_cocycle(m, a1, b, c));
}

ExtensionProblem sl_problem(int m) {
    return ExtensionProblem::make(diamond_complex(m), action_table_sl(m));
}

ExtensionProblem sp_problem(int m) {
    return ExtensionProblem::make(diamond_real(m), action_table_sp(m));
}

}  // namespace diamond
