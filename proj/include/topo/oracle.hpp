#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "topo/regions.hpp"

namespace topo {
namespace oracle {

// Deliberately naive reference implementations on dense Z2 bit rows, sharing
// no matrix code with the engine. Desk scale only (at most 4096 cells).

// dense bit matrix over positions 0..n-1
struct BitMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::uint64_t>> col_bits;

    void init(int r, int c);
    bool get(int r, int c) const;
    void flip(int r, int c);
    void add_col(int src, int dst);
    int low(int c) const;  // -1 for a zero column
    bool col_zero(int c) const;
};

// full from-scratch state for one cell order
struct BruteState {
    const LefschetzComplex* X = nullptr;
    std::vector<CellId> order;
    std::vector<int> pos;
    // per column dimension: primal and dual triples, indexed positionally
    struct Triple {
        std::vector<CellId> row_cells, col_cells;  // position -> cell id
        std::vector<int> row_index, col_index;     // cell id -> position or -1
        BitMatrix D, R, U, V;                      // U, V square over columns
    };
    std::vector<Triple> primal;
    std::vector<Triple> dual;
    std::vector<CellId> partner;

    bool u_entry(int dim, CellId x, CellId y, bool dual_side) const;
    bool v_entry(int dim, CellId x, CellId y, bool dual_side) const;
};

BruteState brute_reduce(const LefschetzComplex& X, const std::vector<CellId>& order);

struct StateDiff {
    std::vector<std::string> entries;
    bool empty() const { return entries.empty(); }
    std::string to_string() const;
};

// pairing plus every U/V entry, primal and dual, all dimensions
StateDiff compare_states(const ReducedState& engine, const BruteState& brute);

// explicit DFS path enumeration; throws past the budget
std::vector<GradientPath> brute_paths(const LefschetzComplex& X,
                                      const CombinatorialVectorField& V, CellId from, CellId to,
                                      std::size_t budget = 1u << 20);

// forbidden-region membership straight from the definition
bool brute_region_member(const ReducedState& s, const BirthDeathPair& alpha, bool death_side,
                         double px, double py);

}  // namespace oracle
}  // namespace topo
