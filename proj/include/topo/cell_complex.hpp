#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace topo {

using CellId = int;
constexpr CellId kNoCell = -1;

struct Cell {
    CellId id = kNoCell;
    int dim = 0;
    std::string name;  // external label, optional
};

// Finite cell complex with Z2 boundary coefficients. Cell ids are dense
// indices 0..size-1 and stay stable under every operation; matrices and
// orders refer to cells by id only.
class LefschetzComplex {
  public:
    LefschetzComplex() = default;

    CellId add_cell(int dim, std::string name = {});
    // declares D(facet, cofacet) = 1
    void add_boundary(CellId facet, CellId cofacet);

    int size() const { return static_cast<int>(cells_.size()); }
    bool empty() const { return cells_.empty(); }
    int dim(CellId c) const { return cells_[c].dim; }
    int max_dim() const { return max_dim_; }
    const std::string& name(CellId c) const { return cells_[c].name; }
    const std::vector<Cell>& cells() const { return cells_; }

    const std::vector<CellId>& facets(CellId c) const { return facets_[c]; }
    const std::vector<CellId>& cofacets(CellId c) const { return cofacets_[c]; }
    bool has_boundary(CellId facet, CellId cofacet) const;

    std::vector<CellId> cells_of_dim(int d) const;

  private:
    std::vector<Cell> cells_;
    std::vector<std::vector<CellId>> facets_;    // facets_[c]: ids with D(f, c) = 1
    std::vector<std::vector<CellId>> cofacets_;  // transpose of facets_
    int max_dim_ = -1;
};

struct ComplexViolation {
    enum Kind { bad_dimension, square_nonzero } kind;
    CellId a = kNoCell;
    CellId b = kNoCell;
    std::string detail;
};

struct ComplexReport {
    std::vector<ComplexViolation> violations;
    bool valid() const { return violations.empty(); }
};

// Checks the two structural conditions: D(x,y) != 0 implies dim x + 1 = dim y,
// and sum_z D(x,z) D(z,y) = 0 over Z2 for all x, y. Never throws.
ComplexReport validate_complex(const LefschetzComplex& X);

}  // namespace topo
