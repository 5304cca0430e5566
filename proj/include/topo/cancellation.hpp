#pragma once

#include <optional>

#include "topo/reduced_state.hpp"

namespace topo {

// Quotient after cancelling a facet-cofacet pair (s, t): cells minus {s, t},
// boundary corrected by D(x,y) += D(s,y) D(x,t). The quotient is materialized
// with fresh dense ids plus the id maps.
struct QuotientComplex {
    const LefschetzComplex* base = nullptr;
    CellId removed_facet = kNoCell;
    CellId removed_cofacet = kNoCell;
    LefschetzComplex quotient;
    std::vector<CellId> to_quotient;    // base id -> quotient id or kNoCell
    std::vector<CellId> from_quotient;  // quotient id -> base id
};

QuotientComplex lefschetz_cancel(const LefschetzComplex& X, CellId s, CellId t);

// restriction of a filter to the quotient's cells
DiscreteMorseFunction restrict_dmf(const QuotientComplex& q, const DiscreteMorseFunction& h);

// In-place cancellation of pivot (s=row, t=column) inside a working matrix:
// every column holding row s absorbs column t, then column t is zeroed. The
// zeroed row and column stay in the id sets (erased only at API boundaries).
void cancel_in_matrix(Z2SparseMatrix& M, CellId s, CellId t);

// The boundary matrix of column dimension n+1 after iteratively cancelling
// every currently-shallow n-dimensional pair lying in the closed bottom-right
// quadrants of alpha and beta (the two pairs themselves are kept), in
// increasing persistence order. Throws if a quadrant pair never becomes
// shallow. dual = true performs the mirrored construction on the coboundary
// matrix of column dimension n.
Z2SparseMatrix clear_quadrant(const ReducedState& s, const BirthDeathPair& alpha,
                              const std::optional<BirthDeathPair>& beta, int n, bool dual = false);

}  // namespace topo
