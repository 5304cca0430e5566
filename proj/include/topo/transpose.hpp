#pragma once

#include <optional>

#include "topo/cancellation.hpp"
#include "topo/reduced_state.hpp"

namespace topo {

enum class CriterionSide { birth, death };

// Fast quadrant-cleared entry, computed from the live V (or dual V) without
// re-reduction:
//   birth side: the [beta.birth, alpha.death] entry, valid when beta sits
//   strictly bottom-left of alpha and their births are consecutive among the
//   n-cells;
//   death side: the [alpha.birth, beta.death] entry, valid when beta sits
//   strictly top-right of alpha and the deaths are consecutive among the
//   (n+1)-cells.
// Returns nullopt when the hypotheses fail (caller falls back to
// clear_quadrant).
std::optional<int> criterion_entry(const ReducedState& s, const BirthDeathPair& alpha,
                                   const BirthDeathPair& beta, CriterionSide side);

// Theorem-level wrappers around the engine transposition. Preconditions are
// checked and the two cells must be adjacent in the full h-order.

// roles: h(alpha.birth) < h(beta.birth); transposes the two death cells
TranspositionOutcome transpose_deaths(ReducedState& s, const BirthDeathPair& alpha,
                                      const BirthDeathPair& beta);
// roles: h(beta.death) < h(alpha.death), missing deaths count as +infinity;
// transposes the two birth cells
TranspositionOutcome transpose_births(ReducedState& s, const BirthDeathPair& alpha,
                                      const BirthDeathPair& beta);
// left cell a birth, right cell a death (increasing birth / decreasing death)
TranspositionOutcome transpose_mixed(ReducedState& s, int position);
// at least one side belongs to a diagonal pair
TranspositionOutcome transpose_with_vector(ReducedState& s, int position);

}  // namespace topo
