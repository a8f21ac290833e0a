#pragma once

#include "diamond/algebra.hpp"

namespace diamond {

/// The general Diamond Lie algebra over Q: basis {J, P_1..P_m, Q_1..Q_m, T},
/// nonzero brackets [J,P_k] = Q_k, [J,Q_k] = -P_k, [P_k,Q_k] = T and their
/// antisymmetric counterparts. Dimension 2m+2.
AlgebraTable diamond_real(int m);

/// The complexified Diamond algebra in the eigenbasis {J, P_k+, Q_k-, T}:
/// [J,P_k+] = i P_k+, [J,Q_k-] = -i Q_k-, [P_k+,Q_k-] = 2i T.
AlgebraTable diamond_complex(int m);

/// Heisenberg algebra: basis {X_1..X_m, Y_1..Y_m, Z}, [X_i,Y_i] = Z.
AlgebraTable heisenberg(int m);

struct ComplexifyResult {
    AlgebraTable algebra;
    LinearMap base_change;  // rows: new basis in old coordinates
};

/// Extends scalars of diamond_real(m) to Q(i) and changes basis by
/// P_k+ = P_k - i Q_k, Q_k- = P_k + i Q_k (J, T fixed). The result matches
/// diamond_complex(m) entry for entry.
ComplexifyResult complexify_diamond(int m);

/// Basis index helpers for the diamond bases (J first, then P's, Q's, T).
inline int diamond_j() { return 0; }
inline int diamond_p(int m, int k) { return k; }          // 1 <= k <= m
inline int diamond_q(int m, int k) { return m + k; }      // 1 <= k <= m
inline int diamond_t(int m) { return 2 * m + 1; }

}  // namespace diamond
