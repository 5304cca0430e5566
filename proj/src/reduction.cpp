#include "topo/reduction.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace topo {

void ReductionTriple::u_add_row(CellId dst, CellId src) { U.add_col(src, dst); }

Z2SparseMatrix boundary_matrix(const LefschetzComplex& X, const HOrder& ord, int n) {
    std::vector<CellId> rows, cols;
    for (CellId c : ord.order) {
        if (X.dim(c) == n - 1) rows.push_back(c);
        if (X.dim(c) == n) cols.push_back(c);
    }
    Z2SparseMatrix D(rows, cols);
    for (CellId c : cols) {
        std::vector<CellId> fs = X.facets(c);
        std::sort(fs.begin(), fs.end());
        D.set_col(c, std::move(fs));
    }
    return D;
}

Z2SparseMatrix coboundary_matrix(const LefschetzComplex& X, const HOrder& ord, int n) {
    std::vector<CellId> rows, cols;
    for (auto it = ord.order.rbegin(); it != ord.order.rend(); ++it) {
        if (X.dim(*it) == n + 1) rows.push_back(*it);
        if (X.dim(*it) == n) cols.push_back(*it);
    }
    Z2SparseMatrix Dt(rows, cols);
    for (CellId c : cols) {
        std::vector<CellId> cf = X.cofacets(c);
        std::sort(cf.begin(), cf.end());
        Dt.set_col(c, std::move(cf));
    }
    return Dt;
}

namespace {

// working columns kept sorted by position so the low is the back element
std::vector<CellId> to_pos_sorted(std::vector<CellId> ids, const std::vector<int>& pos) {
    std::sort(ids.begin(), ids.end(), [&](CellId a, CellId b) { return pos[a] < pos[b]; });
    return ids;
}

std::vector<CellId> merge_pos_sorted(const std::vector<CellId>& a, const std::vector<CellId>& b,
                                     const std::vector<int>& pos) {
    std::vector<CellId> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++i;
            ++j;
        } else if (pos[a[i]] < pos[b[j]]) {
            out.push_back(a[i++]);
        } else {
            out.push_back(b[j++]);
        }
    }
    out.insert(out.end(), a.begin() + i, a.end());
    out.insert(out.end(), b.begin() + j, b.end());
    return out;
}

}  // namespace

ReductionTriple lazy_reduce(const Z2SparseMatrix& D, const std::vector<CellId>& col_order,
                            const std::vector<int>& pos) {
    ReductionTriple t;
    t.R = Z2SparseMatrix(D.row_ids(), D.col_ids());
    t.U = Z2SparseMatrix(D.col_ids(), D.col_ids());
    t.V = Z2SparseMatrix(D.col_ids(), D.col_ids());
    for (CellId c : D.col_ids()) {
        t.U.set_col(c, {c});
        t.V.set_col(c, {c});
    }
    std::unordered_map<CellId, std::vector<CellId>> work;
    std::unordered_map<CellId, CellId> low_to_col;
    for (CellId y : col_order) {
        std::vector<CellId> cur = to_pos_sorted(D.col(y), pos);
        while (!cur.empty()) {
            CellId l = cur.back();
            auto hit = low_to_col.find(l);
            if (hit == low_to_col.end()) break;
            CellId x = hit->second;
            cur = merge_pos_sorted(cur, work[x], pos);
            t.U.add_col(y, x);  // U[x,:] += U[y,:]
            t.V.add_col(x, y);  // V[:,y] += V[:,x]
        }
        if (!cur.empty()) low_to_col[cur.back()] = y;
        std::vector<CellId> ids = cur;
        std::sort(ids.begin(), ids.end());
        t.R.set_col(y, std::move(ids));
        work[y] = std::move(cur);
    }
    return t;
}

bool verify_decomposition(const Z2SparseMatrix& D, const ReductionTriple& t,
                          const std::vector<CellId>& col_order, const std::vector<int>& pos) {
    // R == D V
    for (CellId y : D.col_ids()) {
        std::vector<CellId> acc;
        for (CellId x : t.V.col(y)) acc = sym_diff(acc, D.col(x));
        if (acc != t.R.col(y)) return false;
    }
    // column-major copy of U (it is stored by rows)
    Z2SparseMatrix u_cols(D.col_ids(), D.col_ids());
    for (CellId x : D.col_ids())
        for (CellId y : t.U.col(x)) u_cols.set_entry(x, y, true);
    // D == R U and U V == I
    for (CellId y : D.col_ids()) {
        std::vector<CellId> acc;
        for (CellId x : u_cols.col(y)) acc = sym_diff(acc, t.R.col(x));
        if (acc != D.col(y)) return false;
        std::vector<CellId> id;
        for (CellId x : t.V.col(y)) id = sym_diff(id, u_cols.col(x));
        if (id != std::vector<CellId>{y}) return false;
    }
    // distinct lows on nonzero R columns
    std::unordered_map<CellId, int> seen;
    for (CellId y : D.col_ids()) {
        auto l = t.R.low(y, pos);
        if (l && seen.count(*l)) return false;
        if (l) seen[*l] = 1;
    }
    // U, V unit upper triangular in column order
    for (CellId x : D.col_ids()) {
        if (!t.U.entry(x, x) || !t.V.entry(x, x)) return false;
        for (CellId y : t.U.col(x))  // row x of U
            if (pos[y] < pos[x]) return false;
        for (CellId r : t.V.col(x))  // column x of V
            if (pos[r] > pos[x]) return false;
    }
    (void)col_order;
    return true;
}

}  // namespace topo
