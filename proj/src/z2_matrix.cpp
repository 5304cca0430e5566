#include "topo/z2_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace topo {

Z2SparseMatrix::Z2SparseMatrix(std::vector<CellId> row_ids, std::vector<CellId> col_ids)
    : row_ids_(std::move(row_ids)), col_ids_(std::move(col_ids)) {
    cols_.reserve(col_ids_.size());
    for (CellId c : col_ids_) cols_[c];
}

std::vector<CellId> sym_diff(const std::vector<CellId>& a, const std::vector<CellId>& b) {
    std::vector<CellId> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool Z2SparseMatrix::entry(CellId row, CellId col) const {
    const auto& c = this->col(col);
    return std::binary_search(c.begin(), c.end(), row);
}

void Z2SparseMatrix::set_entry(CellId row, CellId col, bool value) {
    auto it = cols_.find(col);
    if (it == cols_.end()) throw std::out_of_range("unknown column");
    auto& c = it->second;
    auto p = std::lower_bound(c.begin(), c.end(), row);
    bool present = p != c.end() && *p == row;
    if (value && !present)
        c.insert(p, row);
    else if (!value && present)
        c.erase(p);
}

const std::vector<CellId>& Z2SparseMatrix::col(CellId c) const {
    auto it = cols_.find(c);
    if (it == cols_.end()) throw std::out_of_range("unknown column");
    return it->second;
}

void Z2SparseMatrix::set_col(CellId c, std::vector<CellId> rows) {
    auto it = cols_.find(c);
    if (it == cols_.end()) throw std::out_of_range("unknown column");
    it->second = std::move(rows);
}

void Z2SparseMatrix::add_col(CellId src, CellId dst) {
    auto s = cols_.find(src);
    auto d = cols_.find(dst);
    if (s == cols_.end() || d == cols_.end()) throw std::out_of_range("unknown column");
    d->second = sym_diff(d->second, s->second);
}

std::optional<CellId> Z2SparseMatrix::low(CellId c, const std::vector<int>& pos) const {
    const auto& rows = col(c);
    if (rows.empty()) return std::nullopt;
    CellId best = rows[0];
    for (CellId r : rows)
        if (pos[r] > pos[best]) best = r;
    return best;
}

int Z2SparseMatrix::nnz() const {
    int n = 0;
    for (const auto& [c, rows] : cols_) {
        (void)c;
        n += static_cast<int>(rows.size());
    }
    return n;
}

bool Z2SparseMatrix::operator==(const Z2SparseMatrix& other) const {
    if (col_ids_.size() != other.col_ids_.size()) return false;
    for (CellId c : col_ids_) {
        auto it = other.cols_.find(c);
        if (it == other.cols_.end()) return false;
        if (col(c) != it->second) return false;
    }
    return true;
}

}  // namespace topo
