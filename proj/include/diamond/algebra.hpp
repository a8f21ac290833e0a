#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diamond/echelon.hpp"
#include "diamond/subspace.hpp"

namespace diamond {

enum class Scalars { rational, gaussian };

std::string scalars_name(Scalars s);
std::optional<Scalars> scalars_from_name(const std::string& name);

/// Finite-dimensional algebra given by a labeled basis and sparse structure
/// constants: table[(i,j)] lists the nonzero coefficients of [e_i, e_j].
/// No symmetry is assumed in storage; Leibniz tables need none.
struct AlgebraTable {
    int dim = 0;
    Scalars field = Scalars::rational;
    std::vector<std::string> labels;
    std::map<std::pair<int, int>, SparseVec> table;

    /// [e_i, e_j] as a sparse vector (empty if zero).
    const SparseVec& bracket_basis(int i, int j) const;

    /// Bilinear extension of the structure constants.
    Vec bracket(const Vec& x, const Vec& y) const;

    /// Stores [e_i, e_j] = v, dropping zero coefficients; erases empty entries.
    void set_bracket(int i, int j, SparseVec v);

    int index_of(const std::string& label) const;  // -1 if absent

    /// Checks index ranges, nonzero coefficients, and field purity.
    void validate() const;

    bool operator==(const AlgebraTable& o) const = default;
};

/// Linear map between algebras/spaces; row r of the matrix is the image of
/// the r-th source basis vector, so vectors map by x -> x * matrix.
struct LinearMap {
    int source_dim = 0;
    int target_dim = 0;
    ExactMatrix matrix;

    Vec apply(const Vec& x) const { return vec_times_matrix(x, matrix); }
};

/// Outcome of an identity check. `first` holds the basis indices of the
/// first violation in lexicographic order (unused slots are -1).
struct CheckReport {
    bool pass = true;
    std::string what;
    std::array<int, 3> first{-1, -1, -1};
    int violations = 0;
};

/// Evaluates [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] + [[e_i,e_k],e_j] over all
/// basis triples.
CheckReport check_leibniz(const AlgebraTable& a);

/// Antisymmetry on all pairs, then the Leibniz identity (= Jacobi under
/// antisymmetry).
CheckReport check_lie(const AlgebraTable& a);

/// Span of the squares of elements: [e_i+e_j, e_i+e_j] over all i <= j,
/// equivalently the symmetrized brackets.
Subspace squares_span(const AlgebraTable& a);

/// Smallest subspace containing s that is closed under bracketing with all
/// basis elements on both sides.
Subspace ideal_closure(const AlgebraTable& a, const Subspace& s);

/// {v : [x, v] = 0 for all x}.
Subspace right_annihilator(const AlgebraTable& a);

/// {v : [v, x] = 0 for all x}.
Subspace left_annihilator(const AlgebraTable& a);

struct QuotientResult {
    AlgebraTable algebra;
    LinearMap projection;
};

/// Quotient by a two-sided ideal; coset representatives are the ambient
/// basis vectors at the non-pivot columns of the ideal's canonical basis.
/// Throws if `ideal` is not closed.
QuotientResult quotient_algebra(const AlgebraTable& a, const Subspace& ideal);

/// Pass iff f is invertible and f([x,y]_A) = [f(x),f(y)]_B on all basis pairs.
CheckReport verify_iso(const LinearMap& f, const AlgebraTable& a, const AlgebraTable& b);

/// Restriction of the table to the given basis indices, or nullopt if their
/// span is not closed under the bracket.
std::optional<AlgebraTable> subalgebra(const AlgebraTable& a, const std::vector<int>& indices);

/// Rewrites the table in the basis whose rows (in old coordinates) form
/// `change.matrix`; requires the matrix to be invertible.
AlgebraTable change_basis(const AlgebraTable& a, const LinearMap& change,
                          std::vector<std::string> new_labels);

}  // namespace diamond
