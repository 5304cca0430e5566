#pragma once

#include "topo/dmf.hpp"
#include "topo/z2_matrix.hpp"

namespace topo {

// Result of the left-to-right lazy column reduction of D: R = D V with
// U = V^-1, D = R U. U is kept row major (its row additions are the update
// primitive); R and V column major. All three share D's column id set; U and
// V are square over the column ids.
struct ReductionTriple {
    Z2SparseMatrix R;
    Z2SparseMatrix U;  // stored by rows: U.col(x) is row x of U
    Z2SparseMatrix V;

    bool u_entry(CellId row, CellId col) const { return U.entry(col, row); }
    void u_add_row(CellId dst, CellId src);  // U[dst,:] += U[src,:]
};

// rows of D_n are the (n-1)-cells, columns the n-cells, both in h-order
Z2SparseMatrix boundary_matrix(const LefschetzComplex& X, const HOrder& ord, int n);
// transpose of D_{n+1} under the reversed order: rows (n+1)-cells, cols n-cells
Z2SparseMatrix coboundary_matrix(const LefschetzComplex& X, const HOrder& ord, int n);

// Lazy reduction. col_order lists D's columns in reduction order; pos maps
// row ids to positions (higher = lower in the matrix).
ReductionTriple lazy_reduce(const Z2SparseMatrix& D, const std::vector<CellId>& col_order,
                            const std::vector<int>& pos);

// D = R U, R reduced with pairwise distinct lows, U unit upper triangular in
// col order, U V = I.
bool verify_decomposition(const Z2SparseMatrix& D, const ReductionTriple& t,
                          const std::vector<CellId>& col_order, const std::vector<int>& pos);

}  // namespace topo
