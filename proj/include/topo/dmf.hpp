#pragma once

#include <optional>
#include <string>
#include <vector>

#include "topo/cell_complex.hpp"

namespace topo {

// Real filter over cells. Values are exact doubles; equal values are created
// deliberately (vectors of the induced field) and compared bitwise.
struct DiscreteMorseFunction {
    std::vector<double> values;

    double operator()(CellId c) const { return values[c]; }
    double& operator[](CellId c) { return values[c]; }
    double operator[](CellId c) const { return values[c]; }
    int size() const { return static_cast<int>(values.size()); }
};

struct DmfViolation {
    enum Kind { missing_value, weak_monotonicity, pairing, almost_injective } kind;
    CellId a = kNoCell;
    CellId b = kNoCell;
    CellId c = kNoCell;
    std::string detail;
};

struct DmfReport {
    std::vector<DmfViolation> violations;
    bool valid() const { return violations.empty(); }
};

DmfReport validate_dmf(const LefschetzComplex& X, const DiscreteMorseFunction& h);

// Strict total order: by value, ties broken by dimension. Valid for any h
// whose equal-value classes have distinct dimensions (guaranteed for a dMf).
struct HOrder {
    std::vector<CellId> order;  // cells by position
    std::vector<int> pos;       // cell -> position

    bool less(CellId a, CellId b) const { return pos[a] < pos[b]; }
    int size() const { return static_cast<int>(order.size()); }
};

HOrder h_order(const LefschetzComplex& X, const DiscreteMorseFunction& h);

// Maximal connected (in the Hasse diagram) classes on which f is constant.
// f need not be a dMf.
std::vector<std::vector<CellId>> induced_partition(const LefschetzComplex& X,
                                                   const std::vector<double>& f);

}  // namespace topo
