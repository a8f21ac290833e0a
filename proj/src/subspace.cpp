#include "diamond/subspace.hpp"

#include <stdexcept>

namespace diamond {

Subspace Subspace::zero(int ambient_dim) { return Subspace(ambient_dim, {}); }

Subspace Subspace::full(int ambient_dim) {
    std::vector<Vec> rows;
    rows.reserve(ambient_dim);
    for (int i = 0; i < ambient_dim; ++i) {
        Vec v(ambient_dim);
        v[i] = GaussianRational(1);
        rows.push_back(std::move(v));
    }
    return Subspace(ambient_dim, std::move(rows));
}

Subspace Subspace::from_span(int ambient_dim, const std::vector<Vec>& vectors) {
    for (const Vec& v : vectors) {
        if (static_cast<int>(v.size()) != ambient_dim) {
            throw std::invalid_argument("Subspace: vector length != ambient dimension");
        }
    }
    if (vectors.empty()) return zero(ambient_dim);
    RrefResult rr = rref(ExactMatrix::from_rows(vectors));
    std::vector<Vec> basis;
    basis.reserve(rr.rank);
    for (int r = 0; r < rr.rank; ++r) basis.push_back(rr.matrix.row(r));
    return Subspace(ambient_dim, std::move(basis));
}

Vec Subspace::reduce(Vec v) const {
    if (static_cast<int>(v.size()) != ambient_) {
        throw std::invalid_argument("Subspace: vector length != ambient dimension");
    }
    for (const Vec& row : basis_) {
        int pivot = 0;
        while (row[pivot].is_zero()) ++pivot;  // basis rows are nonzero
        if (v[pivot].is_zero()) continue;
        const GaussianRational f = v[pivot];
        for (int c = pivot; c < ambient_; ++c) {
            if (!row[c].is_zero()) v[c] -= f * row[c];
        }
    }
    return v;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) {
        throw std::invalid_argument("Subspace: ambient dimension mismatch");
    }
    for (const Vec& row : other.basis_) {
        if (!contains(row)) return false;
    }
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (other.ambient_ != ambient_) {
        throw std::invalid_argument("Subspace: ambient dimension mismatch");
    }
    std::vector<Vec> rows = basis_;
    rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
    return from_span(ambient_, rows);
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (other.ambient_ != ambient_) {
        throw std::invalid_argument("Subspace: ambient dimension mismatch");
    }
    // Zassenhaus: RREF of [A|A; B|0]; rows with zero left half carry an
    // intersection basis in the right half.
    const int n = ambient_;
    ExactMatrix block(dim() + other.dim(), 2 * n);
    for (int r = 0; r < dim(); ++r) {
        for (int c = 0; c < n; ++c) {
            block.at(r, c) = basis_[r][c];
            block.at(r, n + c) = basis_[r][c];
        }
    }
    for (int r = 0; r < other.dim(); ++r) {
        for (int c = 0; c < n; ++c) block.at(dim() + r, c) = other.basis_[r][c];
    }
    RrefResult rr = rref(block);
    std::vector<Vec> rows;
    for (int r = 0; r < rr.rank; ++r) {
        bool left_zero = true;
        for (int c = 0; c < n && left_zero; ++c) left_zero = rr.matrix.at(r, c).is_zero();
        if (!left_zero) continue;
        Vec v(n);
        for (int c = 0; c < n; ++c) v[c] = rr.matrix.at(r, n + c);
        rows.push_back(std::move(v));
    }
    return from_span(n, rows);
}

int Subspace::quotient_dim(const Subspace& sub) const {
    if (!contains(sub)) {
        throw std::invalid_argument("Subspace: quotient_dim requires a contained subspace");
    }
    return dim() - sub.dim();
}

Subspace kernel(const ExactMatrix& m) {
    RrefResult rr = rref(m);
    const int cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int p : rr.pivot_cols) is_pivot[p] = true;
    std::vector<Vec> rows;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols);
        v[f] = GaussianRational(1);
        for (int i = 0; i < rr.rank; ++i) {
            const GaussianRational& coeff = rr.matrix.at(i, f);
            if (!coeff.is_zero()) v[rr.pivot_cols[i]] = -coeff;
        }
        rows.push_back(std::move(v));
    }
    return Subspace::from_span(cols, rows);
}

}  // namespace diamond
