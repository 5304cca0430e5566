#include "topo/pairing.hpp"

namespace topo {

bool relation(const ReducedState& s, CellId x, CellId y, RelationKind kind) {
    return kind == RelationKind::hom ? s.hom_relation(x, y) : s.cohom_relation(x, y);
}

std::vector<CellId> incoming_hom_cells(const ReducedState& s, CellId d) {
    std::vector<CellId> out;
    int n = s.complex().dim(d);
    for (CellId x : s.bd(n).col_ids())
        if (x != d && s.primal(n).u_entry(x, d)) out.push_back(x);
    return out;
}

std::vector<CellId> incoming_cohom_cells(const ReducedState& s, CellId b) {
    std::vector<CellId> out;
    int n = s.complex().dim(b);
    for (CellId x : s.cobd(n).col_ids())
        if (x != b && s.dual(n).u_entry(x, b)) out.push_back(x);
    return out;
}

bool is_shallow(const ReducedState& s, const BirthDeathPair& p) {
    if (!p.has_death()) return false;
    return incoming_hom_cells(s, p.death).empty() && incoming_cohom_cells(s, p.birth).empty();
}

bool is_critical_shallow(const ReducedState& s, const BirthDeathPair& p) {
    auto from_vector = [&](CellId x) { return s.pair_of(x).cls == PairClass::diagonal; };
    // a relation may enter through either component, homologically or not
    for (CellId x : incoming_hom_cells(s, p.birth))
        if (!from_vector(x)) return false;
    for (CellId x : incoming_cohom_cells(s, p.birth))
        if (!from_vector(x)) return false;
    if (p.has_death()) {
        for (CellId x : incoming_hom_cells(s, p.death))
            if (!from_vector(x)) return false;
        for (CellId x : incoming_cohom_cells(s, p.death))
            if (!from_vector(x)) return false;
    }
    return true;
}

}  // namespace topo
