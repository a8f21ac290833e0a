#pragma once

#include <vector>

#include "diamond/matrix.hpp"

namespace diamond {

/// Linear subspace of Q(i)^n held by its canonical basis: the nonzero rows
/// of a reduced row echelon form. Two subspaces are equal iff their stored
/// bases are identical, so equality of independently computed spans is
/// decidable by direct comparison.
class Subspace {
public:
    static Subspace zero(int ambient_dim);
    static Subspace full(int ambient_dim);
    static Subspace from_span(int ambient_dim, const std::vector<Vec>& vectors);

    int ambient_dim() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Vec>& basis() const { return basis_; }

    /// v reduced modulo the subspace (zero iff v is a member).
    Vec reduce(Vec v) const;

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    /// dim(this) - dim(sub); requires sub to be contained in this.
    int quotient_dim(const Subspace& sub) const;

    bool operator==(const Subspace& o) const = default;

private:
    Subspace(int ambient, std::vector<Vec> basis)
        : ambient_(ambient), basis_(std::move(basis)) {}

    int ambient_;
    std::vector<Vec> basis_;
};

/// Canonical basis of {x : M x^T = 0}. dim = cols - rank.
Subspace kernel(const ExactMatrix& m);

}  // namespace diamond
