#pragma once

#include <string>
#include <utility>
#include <vector>

#include "topo/pairing.hpp"

namespace topo {

// Union of closed quadrants anchored at corners; a lower-left staircase is
// the union of [-inf, x] x [-inf, y], an upper-right one of [x, inf] x
// [y, inf]. Corners are kept as a maximal antichain sorted by x.
struct Staircase {
    enum class Orientation { lower_left, upper_right };
    Orientation orientation = Orientation::lower_left;
    std::vector<std::pair<double, double>> corners;

    bool empty() const { return corners.empty(); }
    bool contains(double x, double y) const;
    // every point of `other` lies in *this (same orientation required)
    bool contains(const Staircase& other) const;
};

Staircase make_staircase(Staircase::Orientation o,
                         std::vector<std::pair<double, double>> raw_corners);

// Lower-left region the death cell of alpha must avoid: quadrants of the
// same-dimension off-diagonal pairs with a homological relation into alpha,
// plus diagonal squares of the critical cells reachable from the death cell
// (the pair's own components excluded).
Staircase death_region(const ReducedState& s, const BirthDeathPair& alpha);
// Upper-right dual: cohomological relations and critical cells reaching the
// birth cell.
Staircase birth_region(const ReducedState& s, const BirthDeathPair& alpha);

// closed-set intersection test, sort + sweep
bool regions_intersect(const Staircase& death, const Staircase& birth);

struct Eligibility {
    bool eligible = false;
    bool regions_disjoint = false;
    bool reversible = false;
    std::uint64_t path_count = 0;  // capped at 2
    std::string diagnostic;
};

// Thm-1.1-style criterion: disjoint forbidden regions and a unique gradient
// path between the paired cells.
Eligibility eligible(const ReducedState& s, const BirthDeathPair& alpha);

}  // namespace topo
