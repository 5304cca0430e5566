#pragma once

#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "topo/cell_complex.hpp"

namespace topo {

// Sparse Z2 matrix, column major. Rows and columns are keyed by stable cell
// ids; each column holds its nonzero row ids sorted by id. Positional
// questions (low, triangularity) are answered against a caller-supplied
// position map, so reordering rows or columns never touches the stored data.
class Z2SparseMatrix {
  public:
    Z2SparseMatrix() = default;
    Z2SparseMatrix(std::vector<CellId> row_ids, std::vector<CellId> col_ids);

    const std::vector<CellId>& row_ids() const { return row_ids_; }
    const std::vector<CellId>& col_ids() const { return col_ids_; }

    bool entry(CellId row, CellId col) const;
    void set_entry(CellId row, CellId col, bool value);
    const std::vector<CellId>& col(CellId c) const;
    void set_col(CellId c, std::vector<CellId> rows);

    // dst += src (symmetric difference by row id)
    void add_col(CellId src, CellId dst);

    bool col_zero(CellId c) const { return col(c).empty(); }
    // row id maximizing pos[row]; nullopt for a zero column
    std::optional<CellId> low(CellId c, const std::vector<int>& pos) const;

    int nnz() const;
    bool operator==(const Z2SparseMatrix& other) const;

  private:
    std::vector<CellId> row_ids_;
    std::vector<CellId> col_ids_;
    std::unordered_map<CellId, std::vector<CellId>> cols_;
};

// dst = a + b over Z2, inputs sorted by id
std::vector<CellId> sym_diff(const std::vector<CellId>& a, const std::vector<CellId>& b);

}  // namespace topo
