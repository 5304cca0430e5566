#pragma once

#include <vector>

#include "topo/reduced_state.hpp"

namespace topo {

enum class RelationKind { hom, cohom };

// off-diagonal U / dual-U entry between same-dimension cells
bool relation(const ReducedState& s, CellId x, CellId y, RelationKind kind);

// cells x != d with U[x, d] = 1, i.e. sources of homological relations into d
std::vector<CellId> incoming_hom_cells(const ReducedState& s, CellId d);
// sources of cohomological relations into b
std::vector<CellId> incoming_cohom_cells(const ReducedState& s, CellId b);

// No incoming relation at all: the columns of U at the death and of the dual
// U at the birth are trivial. Essential pairs are never shallow.
bool is_shallow(const ReducedState& s, const BirthDeathPair& p);

// Every incoming relation source belongs to a diagonal pair; equivalently the
// pair is shallow in the Morse complex of the induced field.
bool is_critical_shallow(const ReducedState& s, const BirthDeathPair& p);

}  // namespace topo
