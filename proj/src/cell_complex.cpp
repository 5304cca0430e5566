#include "topo/cell_complex.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace topo {

CellId LefschetzComplex::add_cell(int dim, std::string name) {
    if (dim < 0) throw std::invalid_argument("cell dimension must be non-negative");
    CellId id = static_cast<CellId>(cells_.size());
    if (name.empty()) name = "c" + std::to_string(id);
    cells_.push_back(Cell{id, dim, std::move(name)});
    facets_.emplace_back();
    cofacets_.emplace_back();
    max_dim_ = std::max(max_dim_, dim);
    return id;
}

void LefschetzComplex::add_boundary(CellId facet, CellId cofacet) {
    if (facet < 0 || facet >= size() || cofacet < 0 || cofacet >= size())
        throw std::invalid_argument("boundary references unknown cell");
    facets_[cofacet].push_back(facet);
    cofacets_[facet].push_back(cofacet);
    std::sort(facets_[cofacet].begin(), facets_[cofacet].end());
    std::sort(cofacets_[facet].begin(), cofacets_[facet].end());
}

bool LefschetzComplex::has_boundary(CellId facet, CellId cofacet) const {
    const auto& f = facets_[cofacet];
    return std::binary_search(f.begin(), f.end(), facet);
}

std::vector<CellId> LefschetzComplex::cells_of_dim(int d) const {
    std::vector<CellId> out;
    for (const Cell& c : cells_)
        if (c.dim == d) out.push_back(c.id);
    return out;
}

ComplexReport validate_complex(const LefschetzComplex& X) {
    ComplexReport report;
    for (const Cell& c : X.cells()) {
        for (CellId f : X.facets(c.id)) {
            if (X.dim(f) + 1 != c.dim) {
                report.violations.push_back(
                    {ComplexViolation::bad_dimension, f, c.id,
                     "dim " + std::to_string(X.dim(f)) + " vs " + std::to_string(c.dim)});
            }
        }
    }
    // square-zero: for every y, count paths x -> z -> y over facets
    for (const Cell& y : X.cells()) {
        std::map<CellId, int> parity;
        for (CellId z : X.facets(y.id))
            for (CellId x : X.facets(z)) parity[x] ^= 1;
        for (auto [x, p] : parity) {
            if (p != 0)
                report.violations.push_back({ComplexViolation::square_nonzero, x, y.id,
                                             "boundary of boundary nonzero"});
        }
    }
    return report;
}

}  // namespace topo
