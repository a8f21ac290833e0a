#pragma once

#include <map>
#include <utility>
#include <vector>

#include "diamond/subspace.hpp"

namespace diamond {

/// Sparse row: (column, coefficient) pairs sorted by column, coefficients nonzero.
using SparseVec = std::vector<std::pair<int, GaussianRational>>;

SparseVec sparse_from_dense(const Vec& v);
Vec sparse_to_dense(const SparseVec& v, int len);
/// a + c*b, merged and pruned.
SparseVec sparse_axpy(const SparseVec& a, const GaussianRational& c, const SparseVec& b);

/// Incremental Gaussian elimination over sparse rows. Rows are inserted one
/// at a time and reduced against the pivots seen so far, so the full
/// coefficient matrix never needs to be materialized. Used for the large
/// cocycle constraint systems; the dense rref path stays independent of it.
class RowEchelon {
public:
    explicit RowEchelon(int cols) : cols_(cols) {}

    /// Reduces the row against current pivots; keeps it if nonzero.
    /// Returns true iff the rank grew.
    bool insert(SparseVec row);

    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(pivots_.size()); }

    /// Canonical row space of everything inserted.
    Subspace row_space() const;

    /// Canonical kernel of the inserted row system (ambient = cols).
    Subspace kernel_space() const;

private:
    /// Back-eliminates above pivots; result rows keyed by pivot column.
    std::map<int, SparseVec> reduced_rows() const;

    int cols_;
    std::map<int, SparseVec> pivots_;  // pivot column -> row, pivot coeff 1
};

}  // namespace diamond
