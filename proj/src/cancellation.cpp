#include "topo/cancellation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace topo {

QuotientComplex lefschetz_cancel(const LefschetzComplex& X, CellId s, CellId t) {
    if (!X.has_boundary(s, t)) throw std::invalid_argument("cancelled pair must be incident");
    QuotientComplex q;
    q.base = &X;
    q.removed_facet = s;
    q.removed_cofacet = t;
    q.to_quotient.assign(X.size(), kNoCell);
    for (const Cell& c : X.cells()) {
        if (c.id == s || c.id == t) continue;
        CellId nid = q.quotient.add_cell(c.dim, c.name);
        q.to_quotient[c.id] = nid;
        q.from_quotient.push_back(c.id);
    }
    for (const Cell& y : X.cells()) {
        if (y.id == s || y.id == t) continue;
        bool st_corr = X.has_boundary(s, y.id);  // D(s, y)
        for (const Cell& x : X.cells()) {
            if (x.id == s || x.id == t) continue;
            if (x.dim + 1 != y.dim) continue;
            bool v = X.has_boundary(x.id, y.id);
            if (st_corr && X.has_boundary(x.id, t)) v = !v;  // + D(s,y) D(x,t)
            if (v) q.quotient.add_boundary(q.to_quotient[x.id], q.to_quotient[y.id]);
        }
    }
    return q;
}

DiscreteMorseFunction restrict_dmf(const QuotientComplex& q, const DiscreteMorseFunction& h) {
    DiscreteMorseFunction out;
    out.values.reserve(q.from_quotient.size());
    for (CellId base_id : q.from_quotient) out.values.push_back(h.values[base_id]);
    return out;
}

void cancel_in_matrix(Z2SparseMatrix& M, CellId s, CellId t) {
    if (!M.entry(s, t)) throw std::invalid_argument("pivot entry is zero");
    for (CellId y : M.col_ids()) {
        if (y == t) continue;
        if (M.entry(s, y)) M.add_col(t, y);
    }
    M.set_col(t, {});
}

namespace {

// shallow inside a working matrix: s is the latest row of column t and t the
// earliest column of row s, under the matrix's own row/col positions
bool shallow_in_matrix(const Z2SparseMatrix& M, CellId s, CellId t, const std::vector<int>& pos) {
    if (!M.entry(s, t)) return false;
    auto l = M.low(t, pos);
    if (!l || *l != s) return false;
    for (CellId y : M.col_ids())
        if (M.entry(s, y) && pos[y] < pos[t]) return false;
    return true;
}

}  // namespace

Z2SparseMatrix clear_quadrant(const ReducedState& s, const BirthDeathPair& alpha,
                              const std::optional<BirthDeathPair>& beta, int n, bool dual) {
    if (!alpha.has_death()) throw std::invalid_argument("quadrant clearing needs a finite pair");
    Z2SparseMatrix M = dual ? s.cobd(n) : s.bd(n + 1);
    const std::vector<int> pos = dual ? s.rev_pos() : s.pos();

    auto in_quadrant = [&](const BirthDeathPair& g, const BirthDeathPair& of) {
        return s.value(g.birth) > s.value(of.birth) && s.value(g.death) < s.value(of.death);
    };
    std::vector<BirthDeathPair> remaining;
    for (const BirthDeathPair& g : s.pairs()) {
        if (g.dim != n || !g.has_death()) continue;
        if (g.birth == alpha.birth) continue;
        if (beta && g.birth == beta->birth) continue;
        bool hit = in_quadrant(g, alpha) || (beta && in_quadrant(g, *beta));
        if (hit) remaining.push_back(g);
    }
    std::sort(remaining.begin(), remaining.end(), [&](const auto& a, const auto& b) {
        double pa = s.value(a.death) - s.value(a.birth);
        double pb = s.value(b.death) - s.value(b.birth);
        if (pa != pb) return pa < pb;
        return s.pos()[a.birth] < s.pos()[b.birth];
    });

    while (!remaining.empty()) {
        bool progress = false;
        for (size_t i = 0; i < remaining.size(); ++i) {
            const BirthDeathPair& g = remaining[i];
            CellId pr = dual ? g.death : g.birth;  // pivot row
            CellId pc = dual ? g.birth : g.death;  // pivot column
            if (shallow_in_matrix(M, pr, pc, pos)) {
                cancel_in_matrix(M, pr, pc);
                remaining.erase(remaining.begin() + i);
                progress = true;
                break;
            }
        }
        if (!progress)
            throw std::logic_error("quadrant pair never became shallow (clearing stuck)");
    }
    return M;
}

}  // namespace topo
