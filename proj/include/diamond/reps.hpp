#pragma once

#include "diamond/algebra.hpp"
#include "diamond/catalog.hpp"

namespace diamond {

/// Matrix representation of an algebra: one order x order image per basis
/// element, extended linearly.
struct MatrixRep {
    AlgebraTable algebra;
    int order = 0;
    std::vector<ExactMatrix> images;

    ExactMatrix image_of(const Vec& x) const;
};

/// Representation of the complexified Diamond algebra by traceless
/// (m+2) x (m+2) matrices: J maps to the diagonal
/// (im/(m+2), -2i/(m+2), ..., -2i/(m+2), im/(m+2)), T to -(i/2) e_{1,m+2},
/// P_k+ to e_{1,m+2-k}, Q_k- to e_{m+2-k,m+2}.
MatrixRep phi_sl(int m);

/// Representation of the real Diamond algebra by (2m+2) x (2m+2) matrices:
/// J maps to the antidiagonal block with -1 in rows 2..m+1 and +1 in rows
/// m+2..2m+1, T to 2 e_{1,2m+2}, P_k to e_{1,1+k} - e_{2m+2-k,2m+2},
/// Q_k to e_{1,2m+2-k} + e_{k+1,2m+2}.
MatrixRep phi_sp(int m);

/// phi([x,y]) = phi(x)phi(y) - phi(y)phi(x) on all basis pairs.
CheckReport check_rep_homomorphism(const MatrixRep& rep);

struct FaithfulReport {
    bool faithful = false;
    int kernel_dim = 0;
};

/// Kernel of the linear map algebra -> matrices (images stacked as columns
/// of an order^2 x dim matrix).
FaithfulReport check_faithful(const MatrixRep& rep);

/// trace(phi(x)) = 0 for every basis element.
CheckReport check_traceless(const MatrixRep& rep);

/// All bilinear forms B with phi(x)^T B + B phi(x) = 0 for every basis x,
/// as a subspace of flattened order x order matrices (row-major).
Subspace invariant_forms(const MatrixRep& rep);

/// A nondegenerate skew-symmetric member of invariant_forms, searched over
/// basis elements and seeded small-integer combinations; nullopt if the
/// search finds none.
std::optional<ExactMatrix> find_invariant_symplectic_form(const MatrixRep& rep,
                                                          int combination_trials = 200);

/// Right action of an algebra on a module: action[(v,e)] is the row vector
/// X_v . e, stored sparsely.
struct ModuleAction {
    AlgebraTable algebra;
    int module_dim = 0;
    std::map<std::pair<int, int>, SparseVec> action;

    Vec act(int v, int e) const;
    /// Row vector x acted on by basis element e.
    Vec act_vec(const Vec& x, int e) const;
    void set_action(int v, int e, SparseVec row);

    /// Entry-for-entry equality of the action tables.
    bool same_table(const ModuleAction& o) const {
        return module_dim == o.module_dim && action == o.action;
    }
};

/// The natural right module of a representation: (X_v, e) = row v of phi(e).
ModuleAction module_from_rep(const MatrixRep& rep);

/// Literal transcription of the sl-side action table on X_1..X_{m+2}.
ModuleAction action_table_sl(int m);

/// Literal transcription of the sp-side action table on X_1..X_{2m+2}.
ModuleAction action_table_sp(int m);

/// v.[e,f] = (v.e).f - (v.f).e over all module-basis x algebra-basis pairs.
CheckReport check_right_module(const ModuleAction& act);

/// "X1".."XN".
std::vector<std::string> module_labels(int n);

}  // namespace diamond
