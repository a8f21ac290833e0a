#include "diamond/catalog.hpp"

#include <stdexcept>

namespace diamond {

namespace {
void require_positive(int m, const char* who) {
    if (m < 1) throw std::invalid_argument(std::string(who) + ": m must be >= 1");
}

SparseVec single(int k, GaussianRational c) { return {{k, std::move(c)}}; }

void set_antisymmetric(AlgebraTable& a, int i, int j, const SparseVec& v) {
    a.set_bracket(i, j, v);
    SparseVec neg;
    for (const auto& [k, c] : v) neg.emplace_back(k, -c);
    a.set_bracket(j, i, std::move(neg));
}
}  // namespace

AlgebraTable diamond_real(int m) {
    require_positive(m, "diamond_real");
    AlgebraTable a;
    a.dim = 2 * m + 2;
    a.field = Scalars::rational;
    a.labels.push_back("J");
    for (int k = 1; k <= m; ++k) a.labels.push_back("P" + std::to_string(k));
    for (int k = 1; k <= m; ++k) a.labels.push_back("Q" + std::to_string(k));
    a.labels.push_back("T");
    for (int k = 1; k <= m; ++k) {
        set_antisymmetric(a, diamond_j(), diamond_p(m, k), single(diamond_q(m, k), 1));
        set_antisymmetric(a, diamond_j(), diamond_q(m, k), single(diamond_p(m, k), -1));
        set_antisymmetric(a, diamond_p(m, k), diamond_q(m, k), single(diamond_t(m), 1));
    }
    return a;
}

AlgebraTable diamond_complex(int m) {
    require_positive(m, "diamond_complex");
    AlgebraTable a;
    a.dim = 2 * m + 2;
    a.field = Scalars::gaussian;
    a.labels.push_back("J");
    for (int k = 1; k <= m; ++k) a.labels.push_back("P" + std::to_string(k) + "+");
    for (int k = 1; k <= m; ++k) a.labels.push_back("Q" + std::to_string(k) + "-");
    a.labels.push_back("T");
    const GaussianRational i = GaussianRational::i();
    for (int k = 1; k <= m; ++k) {
        set_antisymmetric(a, diamond_j(), diamond_p(m, k), single(diamond_p(m, k), i));
        set_antisymmetric(a, diamond_j(), diamond_q(m, k), single(diamond_q(m, k), -i));
        set_antisymmetric(a, diamond_p(m, k), diamond_q(m, k),
                          single(diamond_t(m), GaussianRational(2) * i));
    }
    return a;
}

AlgebraTable heisenberg(int m) {
    require_positive(m, "heisenberg");
    AlgebraTable a;
    a.dim = 2 * m + 1;
    a.field = Scalars::rational;
    for (int k = 1; k <= m; ++k) a.labels.push_back("X" + std::to_string(k));
    for (int k = 1; k <= m; ++k) a.labels.push_back("Y" + std::to_string(k));
    a.labels.push_back("Z");
    for (int k = 0; k < m; ++k) {
        set_antisymmetric(a, k, m + k, single(2 * m, 1));
    }
    return a;
}

ComplexifyResult complexify_diamond(int m) {
    require_positive(m, "complexify_diamond");
    AlgebraTable real = diamond_real(m);
    real.field = Scalars::gaussian;  // scalar extension: Q embeds in Q(i)

    const int n = real.dim;
    LinearMap change;
    change.source_dim = n;
    change.target_dim = n;
    change.matrix = ExactMatrix(n, n);
    const GaussianRational i = GaussianRational::i();
    change.matrix.at(diamond_j(), diamond_j()) = GaussianRational(1);
    change.matrix.at(diamond_t(m), diamond_t(m)) = GaussianRational(1);
    for (int k = 1; k <= m; ++k) {
        // P_k+ = P_k - i Q_k
        change.matrix.at(diamond_p(m, k), diamond_p(m, k)) = GaussianRational(1);
        change.matrix.at(diamond_p(m, k), diamond_q(m, k)) = -i;
        // Q_k- = P_k + i Q_k
        change.matrix.at(diamond_q(m, k), diamond_p(m, k)) = GaussianRational(1);
        change.matrix.at(diamond_q(m, k), diamond_q(m, k)) = i;
    }

    AlgebraTable out = change_basis(real, change, diamond_complex(m).labels);
    return {std::move(out), std::move(change)};
}

}  // namespace diamond
