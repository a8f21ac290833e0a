#include "diamond/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace diamond {

std::string scalars_name(Scalars s) {
    return s == Scalars::rational ? "rational" : "gaussian";
}

std::optional<Scalars> scalars_from_name(const std::string& name) {
    if (name == "rational") return Scalars::rational;
    if (name == "gaussian") return Scalars::gaussian;
    return std::nullopt;
}

namespace {
const SparseVec kEmpty{};

std::string triple_str(const AlgebraTable& a, int i, int j, int k) {
    return "(" + a.labels[i] + ", " + a.labels[j] + ", " + a.labels[k] + ")";
}
}  // namespace

const SparseVec& AlgebraTable::bracket_basis(int i, int j) const {
    auto it = table.find({i, j});
    return it == table.end() ? kEmpty : it->second;
}

Vec AlgebraTable::bracket(const Vec& x, const Vec& y) const {
    if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim) {
        throw std::invalid_argument("bracket: vector length != algebra dimension");
    }
    Vec out(dim);
    for (int i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            const GaussianRational c = x[i] * y[j];
            for (const auto& [k, coeff] : bracket_basis(i, j)) out[k] += c * coeff;
        }
    }
    return out;
}

void AlgebraTable::set_bracket(int i, int j, SparseVec v) {
    std::erase_if(v, [](const auto& term) { return term.second.is_zero(); });
    if (v.empty()) {
        table.erase({i, j});
    } else {
        table[{i, j}] = std::move(v);
    }
}

int AlgebraTable::index_of(const std::string& label) const {
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
        if (labels[i] == label) return i;
    }
    return -1;
}

void AlgebraTable::validate() const {
    if (static_cast<int>(labels.size()) != dim) {
        throw std::invalid_argument("AlgebraTable: label count != dim");
    }
    for (const auto& [pair, terms] : table) {
        auto [i, j] = pair;
        if (i < 0 || i >= dim || j < 0 || j >= dim) {
            throw std::invalid_argument("AlgebraTable: bracket index out of range");
        }
        int prev = -1;
        for (const auto& [k, coeff] : terms) {
            if (k < 0 || k >= dim) {
                throw std::invalid_argument("AlgebraTable: coefficient index out of range");
            }
            if (k <= prev) throw std::invalid_argument("AlgebraTable: unsorted coefficients");
            prev = k;
            if (coeff.is_zero()) {
                throw std::invalid_argument("AlgebraTable: stored zero coefficient");
            }
            if (field == Scalars::rational && !coeff.is_real()) {
                throw std::invalid_argument("AlgebraTable: imaginary coefficient in rational table");
            }
        }
        if (terms.empty()) throw std::invalid_argument("AlgebraTable: stored empty bracket");
    }
}

CheckReport check_leibniz(const AlgebraTable& a) {
    CheckReport rep;
    std::vector<Vec> basis;
    basis.reserve(a.dim);
    for (int i = 0; i < a.dim; ++i) {
        Vec v(a.dim);
        v[i] = GaussianRational(1);
        basis.push_back(std::move(v));
    }
    for (int i = 0; i < a.dim; ++i) {
        for (int j = 0; j < a.dim; ++j) {
            Vec bij = a.bracket(basis[i], basis[j]);
            for (int k = 0; k < a.dim; ++k) {
                Vec residual = a.bracket(basis[i], a.bracket(basis[j], basis[k]));
                residual = vec_sub(residual, a.bracket(bij, basis[k]));
                residual = vec_add(residual, a.bracket(a.bracket(basis[i], basis[k]), basis[j]));
                if (vec_is_zero(residual)) continue;
                if (rep.pass) {
                    rep.pass = false;
                    rep.first = {i, j, k};
                    rep.what = "Leibniz identity violated at " + triple_str(a, i, j, k);
                }
                ++rep.violations;
            }
        }
    }
    return rep;
}

CheckReport check_lie(const AlgebraTable& a) {
    CheckReport rep;
    for (int i = 0; i < a.dim; ++i) {
        for (int j = 0; j < a.dim; ++j) {
            Vec sym = sparse_to_dense(a.bracket_basis(i, j), a.dim);
            sym = vec_add(sym, sparse_to_dense(a.bracket_basis(j, i), a.dim));
            if (vec_is_zero(sym)) continue;
            if (rep.pass) {
                rep.pass = false;
                rep.first = {i, j, -1};
                rep.what = "antisymmetry violated at (" + a.labels[i] + ", " + a.labels[j] + ")";
            }
            ++rep.violations;
        }
    }
    CheckReport leib = check_leibniz(a);
    if (!leib.pass) {
        if (rep.pass) {
            rep.pass = false;
            rep.first = leib.first;
            rep.what = leib.what;
        }
        rep.violations += leib.violations;
    }
    return rep;
}

Subspace squares_span(const AlgebraTable& a) {
    std::vector<Vec> gens;
    for (int i = 0; i < a.dim; ++i) {
        for (int j = i; j < a.dim; ++j) {
            Vec v = sparse_to_dense(a.bracket_basis(i, j), a.dim);
            v = vec_add(v, sparse_to_dense(a.bracket_basis(j, i), a.dim));
            if (!vec_is_zero(v)) gens.push_back(std::move(v));
        }
    }
    return Subspace::from_span(a.dim, gens);
}

Subspace ideal_closure(const AlgebraTable& a, const Subspace& s) {
    if (s.ambient_dim() != a.dim) {
        throw std::invalid_argument("ideal_closure: ambient dimension mismatch");
    }
    Subspace current = s;
    std::vector<Vec> basis;
    for (int i = 0; i < a.dim; ++i) {
        Vec v(a.dim);
        v[i] = GaussianRational(1);
        basis.push_back(std::move(v));
    }
    for (;;) {
        std::vector<Vec> gens = current.basis();
        for (const Vec& b : current.basis()) {
            for (int x = 0; x < a.dim; ++x) {
                gens.push_back(a.bracket(basis[x], b));
                gens.push_back(a.bracket(b, basis[x]));
            }
        }
        Subspace next = Subspace::from_span(a.dim, gens);
        if (next.dim() == current.dim()) return next;
        current = std::move(next);
    }
}

namespace {
/// Rows of the system { v : [e_x, v] = 0 for all x } (or the mirrored one).
Subspace annihilator(const AlgebraTable& a, bool right) {
    std::vector<Vec> rows;
    for (int x = 0; x < a.dim; ++x) {
        // Equation block: component k of [e_x, e_j] v_j (right) or [e_j, e_x] v_j.
        std::vector<Vec> block(a.dim, Vec(a.dim));
        bool nonzero = false;
        for (int j = 0; j < a.dim; ++j) {
            const SparseVec& br = right ? a.bracket_basis(x, j) : a.bracket_basis(j, x);
            for (const auto& [k, coeff] : br) {
                block[k][j] = coeff;
                nonzero = true;
            }
        }
        if (!nonzero) continue;
        for (Vec& r : block) {
            if (!vec_is_zero(r)) rows.push_back(std::move(r));
        }
    }
    if (rows.empty()) return Subspace::full(a.dim);
    return kernel(ExactMatrix::from_rows(rows));
}
}  // namespace

Subspace right_annihilator(const AlgebraTable& a) { return annihilator(a, true); }
Subspace left_annihilator(const AlgebraTable& a) { return annihilator(a, false); }

QuotientResult quotient_algebra(const AlgebraTable& a, const Subspace& ideal) {
    if (ideal.ambient_dim() != a.dim) {
        throw std::invalid_argument("quotient_algebra: ambient dimension mismatch");
    }
    if (!(ideal_closure(a, ideal) == ideal)) {
        throw std::invalid_argument("quotient_algebra: subspace is not an ideal");
    }
    std::vector<bool> is_pivot(a.dim, false);
    for (const Vec& row : ideal.basis()) {
        int p = 0;
        while (row[p].is_zero()) ++p;
        is_pivot[p] = true;
    }
    std::vector<int> reps;  // ambient indices of coset representatives
    for (int c = 0; c < a.dim; ++c) {
        if (!is_pivot[c]) reps.push_back(c);
    }
    const int qdim = static_cast<int>(reps.size());

    AlgebraTable q;
    q.dim = qdim;
    q.field = a.field;
    for (int c : reps) q.labels.push_back(a.labels[c]);

    auto project = [&](Vec v) {
        v = ideal.reduce(std::move(v));
        Vec out(qdim);
        for (int t = 0; t < qdim; ++t) out[t] = v[reps[t]];
        return out;
    };

    for (int s = 0; s < qdim; ++s) {
        for (int t = 0; t < qdim; ++t) {
            Vec br = sparse_to_dense(a.bracket_basis(reps[s], reps[t]), a.dim);
            q.set_bracket(s, t, sparse_from_dense(project(std::move(br))));
        }
    }

    LinearMap proj;
    proj.source_dim = a.dim;
    proj.target_dim = qdim;
    proj.matrix = ExactMatrix(a.dim, qdim);
    for (int x = 0; x < a.dim; ++x) {
        Vec e(a.dim);
        e[x] = GaussianRational(1);
        Vec img = project(std::move(e));
        for (int t = 0; t < qdim; ++t) proj.matrix.at(x, t) = img[t];
    }
    return {std::move(q), std::move(proj)};
}

CheckReport verify_iso(const LinearMap& f, const AlgebraTable& a, const AlgebraTable& b) {
    CheckReport rep;
    if (f.source_dim != a.dim || f.target_dim != b.dim || a.dim != b.dim) {
        rep.pass = false;
        rep.what = "dimension mismatch";
        return rep;
    }
    if (!inverse(f.matrix)) {
        rep.pass = false;
        rep.what = "map is not invertible";
        return rep;
    }
    for (int i = 0; i < a.dim; ++i) {
        for (int j = 0; j < a.dim; ++j) {
            Vec lhs = f.apply(sparse_to_dense(a.bracket_basis(i, j), a.dim));
            Vec rhs = b.bracket(f.matrix.row(i), f.matrix.row(j));
            if (vec_is_zero(vec_sub(lhs, rhs))) continue;
            if (rep.pass) {
                rep.pass = false;
                rep.first = {i, j, -1};
                rep.what = "bracket not preserved at (" + a.labels[i] + ", " + a.labels[j] + ")";
            }
            ++rep.violations;
        }
    }
    return rep;
}

std::optional<AlgebraTable> subalgebra(const AlgebraTable& a, const std::vector<int>& indices) {
    std::vector<int> pos(a.dim, -1);
    for (int t = 0; t < static_cast<int>(indices.size()); ++t) {
        if (indices[t] < 0 || indices[t] >= a.dim) {
            throw std::invalid_argument("subalgebra: index out of range");
        }
        pos[indices[t]] = t;
    }
    AlgebraTable sub;
    sub.dim = static_cast<int>(indices.size());
    sub.field = a.field;
    for (int x : indices) sub.labels.push_back(a.labels[x]);
    for (int s = 0; s < sub.dim; ++s) {
        for (int t = 0; t < sub.dim; ++t) {
            SparseVec out;
            for (const auto& [k, coeff] : a.bracket_basis(indices[s], indices[t])) {
                if (pos[k] < 0) return std::nullopt;  // bracket leaves the span
                out.emplace_back(pos[k], coeff);
            }
            std::sort(out.begin(), out.end(),
                      [](const auto& l, const auto& r) { return l.first < r.first; });
            sub.set_bracket(s, t, std::move(out));
        }
    }
    return sub;
}

AlgebraTable change_basis(const AlgebraTable& a, const LinearMap& change,
                          std::vector<std::string> new_labels) {
    if (change.source_dim != a.dim || change.target_dim != a.dim) {
        throw std::invalid_argument("change_basis: map shape mismatch");
    }
    auto inv = inverse(change.matrix);
    if (!inv) throw std::invalid_argument("change_basis: basis change is singular");
    AlgebraTable out;
    out.dim = a.dim;
    out.field = a.field;
    out.labels = std::move(new_labels);
    for (int i = 0; i < a.dim; ++i) {
        for (int j = 0; j < a.dim; ++j) {
            Vec br = a.bracket(change.matrix.row(i), change.matrix.row(j));
            out.set_bracket(i, j, sparse_from_dense(vec_times_matrix(br, *inv)));
        }
    }
    return out;
}

}  // namespace diamond
