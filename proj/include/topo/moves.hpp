#pragma once

#include <optional>

#include "topo/reduced_state.hpp"

namespace topo {

// One value relocation pushing a pair toward the diagonal. For a right move
// the pair's birth cell (and the non-critical cells reaching it, up to value
// xi) is mapped affinely into (delta, xi) with h(birth) -> delta; a down move
// mirrors this for the death cell with h(death) -> delta. The open interval
// between delta and xi must be free of cell values, and at most one critical
// cell may be bypassed; it must not be connected to the moving endpoint.
struct MoveSpec {
    enum class Direction { right, down };
    Direction direction = Direction::right;
    BirthDeathPair pair;
    double delta = 0;
    double xi = 0;
    CellId bypassed = kNoCell;
};

DiscreteMorseFunction move_right(const LefschetzComplex& X, const DiscreteMorseFunction& h,
                                 const MoveSpec& spec);
DiscreteMorseFunction move_down(const LefschetzComplex& X, const DiscreteMorseFunction& h,
                                const MoveSpec& spec);

// Deterministic gap selection: a right/down move past the given critical
// cell, or a squeeze inside the pair's lifetime when bypass is kNoCell. For a
// down squeeze the gap hugs the birth value; for a right squeeze it hugs the
// death value. Throws when no valid gap exists.
MoveSpec choose_gap(const ReducedState& s, const BirthDeathPair& alpha, MoveSpec::Direction dir,
                    CellId bypass = kNoCell);

}  // namespace topo
