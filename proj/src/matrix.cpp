#include "diamond/matrix.hpp"

#include <stdexcept>

namespace diamond {

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return ExactMatrix(0, 0);
    ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows_; ++r) {
        if (static_cast<int>(rows[r].size()) != m.cols_) {
            throw std::invalid_argument("ExactMatrix: ragged rows");
        }
        for (int c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Vec ExactMatrix::row(int r) const {
    Vec v(cols_);
    for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw std::invalid_argument("ExactMatrix: shape mismatch in +");
    }
    ExactMatrix m(rows_, cols_);
    for (size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k] + o.entries_[k];
    return m;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw std::invalid_argument("ExactMatrix: shape mismatch in -");
    }
    ExactMatrix m(rows_, cols_);
    for (size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k] - o.entries_[k];
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("ExactMatrix: shape mismatch in *");
    ExactMatrix m(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int k = 0; k < cols_; ++k) {
            const GaussianRational& a = at(r, k);
            if (a.is_zero()) continue;
            for (int c = 0; c < o.cols_; ++c) {
                const GaussianRational& b = o.at(k, c);
                if (!b.is_zero()) m.at(r, c) += a * b;
            }
        }
    }
    return m;
}

ExactMatrix ExactMatrix::scaled(const GaussianRational& c) const {
    ExactMatrix m(rows_, cols_);
    for (size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k] * c;
    return m;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

GaussianRational ExactMatrix::trace() const {
    GaussianRational t;
    for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
    return t;
}

ExactMatrix ExactMatrix::commutator(const ExactMatrix& o) const {
    return *this * o - o * *this;
}

bool ExactMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

RrefResult rref(const ExactMatrix& m) {
    RrefResult res;
    res.matrix = m;
    ExactMatrix& a = res.matrix;
    const int rows = a.rows(), cols = a.cols();
    int pivot_row = 0;
    for (int col = 0; col < cols && pivot_row < rows; ++col) {
        int sel = -1;
        for (int r = pivot_row; r < rows; ++r) {
            if (!a.at(r, col).is_zero()) { sel = r; break; }
        }
        if (sel < 0) continue;
        if (sel != pivot_row) {
            for (int c = col; c < cols; ++c) std::swap(a.at(sel, c), a.at(pivot_row, c));
        }
        GaussianRational inv = a.at(pivot_row, col).inv();
        for (int c = col; c < cols; ++c) {
            if (!a.at(pivot_row, c).is_zero()) a.at(pivot_row, c) *= inv;
        }
        for (int r = 0; r < rows; ++r) {
            if (r == pivot_row) continue;
            const GaussianRational f = a.at(r, col);
            if (f.is_zero()) continue;
            for (int c = col; c < cols; ++c) {
                if (!a.at(pivot_row, c).is_zero()) a.at(r, c) -= f * a.at(pivot_row, c);
            }
        }
        res.pivot_cols.push_back(col);
        ++pivot_row;
    }
    res.rank = pivot_row;
    return res;
}

std::optional<ExactMatrix> inverse(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    const int n = m.rows();
    ExactMatrix aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = GaussianRational(1);
    }
    RrefResult rr = rref(aug);
    if (rr.rank < n || rr.pivot_cols.back() >= n) return std::nullopt;
    ExactMatrix inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv.at(r, c) = rr.matrix.at(r, n + c);
    return inv;
}

std::optional<Vec> solve(const ExactMatrix& a, const Vec& b) {
    if (static_cast<int>(b.size()) != a.rows()) {
        throw std::invalid_argument("solve: rhs length mismatch");
    }
    const int rows = a.rows(), cols = a.cols();
    ExactMatrix aug(rows, cols + 1);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, cols) = b[r];
    }
    RrefResult rr = rref(aug);
    for (int i = 0; i < rr.rank; ++i) {
        if (rr.pivot_cols[i] == cols) return std::nullopt;  // 0 = 1 row
    }
    Vec x(cols);
    for (int i = 0; i < rr.rank; ++i) x[rr.pivot_cols[i]] = rr.matrix.at(i, cols);
    return x;
}

Vec vec_times_matrix(const Vec& x, const ExactMatrix& m) {
    if (static_cast<int>(x.size()) != m.rows()) {
        throw std::invalid_argument("vec_times_matrix: length mismatch");
    }
    Vec out(m.cols());
    for (int r = 0; r < m.rows(); ++r) {
        if (x[r].is_zero()) continue;
        for (int c = 0; c < m.cols(); ++c) {
            if (!m.at(r, c).is_zero()) out[c] += x[r] * m.at(r, c);
        }
    }
    return out;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_add: length mismatch");
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_sub: length mismatch");
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vec vec_scaled(const Vec& a, const GaussianRational& c) {
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
    return out;
}

bool vec_is_zero(const Vec& a) {
    for (const auto& e : a)
        if (!e.is_zero()) return false;
    return true;
}

}  // namespace diamond
