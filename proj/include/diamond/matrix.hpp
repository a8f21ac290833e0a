#pragma once

#include <optional>
#include <vector>

#include "diamond/rational.hpp"

namespace diamond {

using Vec = std::vector<GaussianRational>;

/// Dense matrix over Q(i). All operations are exact.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {}

    static ExactMatrix identity(int n);
    static ExactMatrix from_rows(const std::vector<Vec>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const GaussianRational& at(int r, int c) const {
        return entries_[static_cast<size_t>(r) * cols_ + c];
    }
    GaussianRational& at(int r, int c) {
        return entries_[static_cast<size_t>(r) * cols_ + c];
    }

    Vec row(int r) const;

    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix scaled(const GaussianRational& c) const;
    ExactMatrix transpose() const;
    GaussianRational trace() const;

    /// AB - BA.
    ExactMatrix commutator(const ExactMatrix& o) const;

    bool is_zero() const;
    bool operator==(const ExactMatrix& o) const = default;

private:
    int rows_, cols_;
    std::vector<GaussianRational> entries_;
};

struct RrefResult {
    ExactMatrix matrix;
    int rank = 0;
    std::vector<int> pivot_cols;
};

/// Reduced row echelon form by Gauss-Jordan elimination, first nonzero pivot
/// in column order. The result is the unique RREF of the input.
RrefResult rref(const ExactMatrix& m);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<ExactMatrix> inverse(const ExactMatrix& m);

/// One solution x of A x^T = b (free variables set to zero), or nullopt if
/// the system is inconsistent.
std::optional<Vec> solve(const ExactMatrix& a, const Vec& b);

/// Row vector times matrix.
Vec vec_times_matrix(const Vec& x, const ExactMatrix& m);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scaled(const Vec& a, const GaussianRational& c);
bool vec_is_zero(const Vec& a);

}  // namespace diamond
