#include "topo/dmf.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace topo {

DmfReport validate_dmf(const LefschetzComplex& X, const DiscreteMorseFunction& h) {
    DmfReport report;
    if (h.size() != X.size()) {
        for (CellId c = h.size(); c < X.size(); ++c)
            report.violations.push_back({DmfViolation::missing_value, c, kNoCell, kNoCell,
                                         "no value for cell " + X.name(c)});
        return report;
    }
    for (const Cell& y : X.cells()) {
        for (CellId x : X.facets(y.id)) {
            if (h(x) > h(y.id))
                report.violations.push_back({DmfViolation::weak_monotonicity, x, y.id, kNoCell,
                                             "h(facet) > h(cofacet)"});
        }
    }
    std::map<double, std::vector<CellId>> classes;
    for (const Cell& c : X.cells()) classes[h(c.id)].push_back(c.id);
    for (auto& [v, cls] : classes) {
        (void)v;
        if (cls.size() > 2) {
            report.violations.push_back({DmfViolation::almost_injective, cls[0], cls[1], cls[2],
                                         "value shared by " + std::to_string(cls.size()) + " cells"});
            continue;
        }
        if (cls.size() == 2) {
            CellId a = cls[0], b = cls[1];
            if (!X.has_boundary(a, b) && !X.has_boundary(b, a))
                report.violations.push_back(
                    {DmfViolation::pairing, a, b, kNoCell, "equal values on non-incident cells"});
        }
    }
    return report;
}

HOrder h_order(const LefschetzComplex& X, const DiscreteMorseFunction& h) {
    if (h.size() != X.size()) throw std::invalid_argument("dmf does not cover the complex");
    HOrder ord;
    ord.order.resize(X.size());
    std::iota(ord.order.begin(), ord.order.end(), 0);
    std::sort(ord.order.begin(), ord.order.end(), [&](CellId a, CellId b) {
        if (h(a) != h(b)) return h(a) < h(b);
        if (X.dim(a) != X.dim(b)) return X.dim(a) < X.dim(b);
        return a < b;  // unreachable for a valid dMf; keeps the sort total
    });
    ord.pos.resize(X.size());
    for (int i = 0; i < X.size(); ++i) ord.pos[ord.order[i]] = i;
    return ord;
}

std::vector<std::vector<CellId>> induced_partition(const LefschetzComplex& X,
                                                   const std::vector<double>& f) {
    if (static_cast<int>(f.size()) != X.size())
        throw std::invalid_argument("filter does not cover the complex");
    // union-find over Hasse edges with equal endpoint values
    std::vector<int> parent(X.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (const Cell& y : X.cells())
        for (CellId x : X.facets(y.id))
            if (f[x] == f[y.id]) parent[find(x)] = find(y.id);
    std::map<int, std::vector<CellId>> groups;
    for (CellId c = 0; c < X.size(); ++c) groups[find(c)].push_back(c);
    std::vector<std::vector<CellId>> out;
    out.reserve(groups.size());
    for (auto& [root, cls] : groups) {
        (void)root;
        out.push_back(std::move(cls));
    }
    return out;
}

}  // namespace topo
