#pragma once

#include <functional>

#include "diamond/reps.hpp"

namespace diamond {

/// A Lie quotient together with a right module over it: the data over which
/// Leibniz extensions are classified.
struct ExtensionProblem {
    AlgebraTable quotient;
    ModuleAction action;

    /// Validates that the quotient is a Lie algebra and the action a right
    /// module before accepting the pair.
    static ExtensionProblem make(AlgebraTable quotient, ModuleAction action);

    int quotient_dim() const { return quotient.dim; }
    int module_dim() const { return action.module_dim; }
    /// Number of cocycle unknowns: quotient_dim^2 * module_dim.
    int unknowns() const { return quotient.dim * quotient.dim * action.module_dim; }
    /// Flat index of the unknown omega(g_i, g_j)_t.
    int coord(int i, int j, int t) const {
        return (i * quotient.dim + j) * action.module_dim + t;
    }
};

/// Bilinear map omega: quotient x quotient -> module, stored as the flat
/// coefficient vector indexed by ExtensionProblem::coord.
struct Cocycle {
    int dim = 0;
    int module_dim = 0;
    Vec flat;

    static Cocycle zero(const ExtensionProblem& p);
    static Cocycle from_flat(const ExtensionProblem& p, Vec flat);

    Vec omega(int i, int j) const;
    void set(int i, int j, int t, GaussianRational v);
    bool shape_matches(const ExtensionProblem& p) const {
        return dim == p.quotient_dim() && module_dim == p.module_dim();
    }
};

/// Streams the constraint rows of the Leibniz identity
///   omega(x,[y,z]) - omega([x,y],z) - omega(x,y).z
///     + omega([x,z],y) + omega(x,z).y = 0
/// over all quotient basis triples (x,y,z) in lexicographic order, one sparse
/// row per module coordinate (zero rows included to keep row indices stable).
void for_each_constraint_row(const ExtensionProblem& p,
                             const std::function<void(int x, int y, int z, int t,
                                                      const SparseVec& row)>& fn);

/// Full dense constraint matrix: one row per (triple, module coordinate),
/// columns indexed by the cocycle unknowns.
ExactMatrix cocycle_constraints(const ExtensionProblem& p);

/// The constraint rows of a single triple, evaluated on a candidate cocycle:
/// the module vector by which the triple violates the Leibniz identity.
Vec constraint_residual(const ExtensionProblem& p, int x, int y, int z, const Cocycle& omega);

/// Kernel of the constraint system (computed by incremental sparse
/// elimination; the dense rref path provides an independent oracle).
Subspace cocycle_space(const ExtensionProblem& p);

/// delta f for a lift change f: quotient -> module (matrix row x = f(g_x)):
/// delta f(x,y) = f(x).y - f([x,y]).
Cocycle coboundary_of(const ExtensionProblem& p, const ExactMatrix& f);

/// Image of delta over all lift changes. Every generator is verified against
/// the constraint system, so the result is contained in cocycle_space.
Subspace coboundary_space(const ExtensionProblem& p);

struct CohomologyReport {
    Subspace cocycles;
    Subspace coboundaries;
    int quotient_dim = 0;
    std::vector<Cocycle> representatives;
};

/// Cocycles, coboundaries, their dimension difference, and representative
/// cocycles completing the coboundary basis to the cocycle basis.
CohomologyReport cohomology(const ExtensionProblem& p);

/// The Leibniz algebra on quotient + module with brackets
///   [g_i,g_j] = [g_i,g_j]_quotient + omega(i,j), [v,g_j] = v.g_j,
///   [g_i,v] = 0, [v,w] = 0.
AlgebraTable build_extension(const ExtensionProblem& p, const Cocycle& omega);

/// Solves omega + delta f = 0 for a lift change f, or nullopt if omega is
/// not a coboundary. f is returned as the quotient_dim x module_dim matrix
/// of lift corrections.
std::optional<ExactMatrix> solve_lift_change(const ExtensionProblem& p, const Cocycle& omega);

struct SplitCheckReport {
    bool pass = false;
    int quotient_dim = -1;
    int samples_split = 0;
    std::string what;
};

/// Verifies that every extension of the problem splits: the cohomology
/// quotient must vanish, and for `samples` seeded random cocycles an explicit
/// lift change f with omega + delta f = 0 is constructed and checked.
SplitCheckReport check_split(const ExtensionProblem& p, int samples = 3,
                             unsigned seed = 0xD1A307D);

/// The normal-form bracket table over the real Diamond algebra and its
/// natural 2m+2 module: [J,J] = a1 X_{2m+2}, [P_k,P_s] = [Q_k,Q_s] =
/// b_{k,s} X_{2m+2} and [P_k,Q_s] = -[Q_k,P_s] = c_{k,s} X_{2m+2} for
/// k != s, on top of the Lie brackets and the module action. b must be
/// antisymmetric and c symmetric, both with zero diagonal.
AlgebraTable theorem2_table(int m, const Rational& a1,
                            const std::vector<std::vector<Rational>>& b,
                            const std::vector<std::vector<Rational>>& c);

/// The cocycle underlying theorem2_table, for membership and injectivity
/// tests (validates the same parameter restrictions).
Cocycle theorem2_cocycle(int m, const Rational& a1,
                         const std::vector<std::vector<Rational>>& b,
                         const std::vector<std::vector<Rational>>& c);

/// Convenience: the sl-side extension problem (complex Diamond quotient,
/// natural m+2 module) and the sp-side one (real quotient, 2m+2 module).
ExtensionProblem sl_problem(int m);
ExtensionProblem sp_problem(int m);

}  // namespace diamond
