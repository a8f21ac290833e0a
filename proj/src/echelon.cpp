#include "diamond/echelon.hpp"

namespace diamond {

SparseVec sparse_from_dense(const Vec& v) {
    SparseVec out;
    for (int i = 0; i < static_cast<int>(v.size()); ++i) {
        if (!v[i].is_zero()) out.emplace_back(i, v[i]);
    }
    return out;
}

Vec sparse_to_dense(const SparseVec& v, int len) {
    Vec out(len);
    for (const auto& [col, coeff] : v) out[col] = coeff;
    return out;
}

SparseVec sparse_axpy(const SparseVec& a, const GaussianRational& c, const SparseVec& b) {
    SparseVec out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) {
            out.push_back(a[i++]);
        } else if (a[i].first > b[j].first) {
            out.emplace_back(b[j].first, c * b[j].second);
            ++j;
        } else {
            GaussianRational v = a[i].second + c * b[j].second;
            if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.emplace_back(b[j].first, c * b[j].second);
    return out;
}

bool RowEchelon::insert(SparseVec row) {
    while (!row.empty()) {
        auto it = pivots_.find(row.front().first);
        if (it == pivots_.end()) break;
        row = sparse_axpy(row, -row.front().second, it->second);
    }
    if (row.empty()) return false;
    const GaussianRational inv = row.front().second.inv();
    for (auto& [col, coeff] : row) coeff *= inv;
    pivots_.emplace(row.front().first, std::move(row));
    return true;
}

std::map<int, SparseVec> RowEchelon::reduced_rows() const {
    std::map<int, SparseVec> rows = pivots_;
    // Eliminate pivot columns from the rows above them, last pivot first.
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        const int pivot_col = it->first;
        for (auto& [other_col, other_row] : rows) {
            if (other_col >= pivot_col) break;
            for (size_t k = 0; k < other_row.size(); ++k) {
                if (other_row[k].first == pivot_col) {
                    other_row = sparse_axpy(other_row, -other_row[k].second, it->second);
                    break;
                }
                if (other_row[k].first > pivot_col) break;
            }
        }
    }
    return rows;
}

Subspace RowEchelon::row_space() const {
    std::vector<Vec> rows;
    rows.reserve(pivots_.size());
    for (const auto& [col, row] : reduced_rows()) rows.push_back(sparse_to_dense(row, cols_));
    return Subspace::from_span(cols_, rows);
}

Subspace RowEchelon::kernel_space() const {
    std::map<int, SparseVec> rows = reduced_rows();
    std::vector<bool> is_pivot(cols_, false);
    for (const auto& [col, row] : rows) is_pivot[col] = true;
    std::vector<Vec> basis;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols_);
        v[f] = GaussianRational(1);
        for (const auto& [pivot_col, row] : rows) {
            for (const auto& [col, coeff] : row) {
                if (col == f) {
                    v[pivot_col] = -coeff;
                    break;
                }
                if (col > f) break;
            }
        }
        basis.push_back(std::move(v));
    }
    return Subspace::from_span(cols_, basis);
}

}  // namespace diamond
