#include "topo/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace topo {
namespace oracle {

void BitMatrix::init(int r, int c) {
    rows = r;
    cols = c;
    col_bits.assign(c, std::vector<std::uint64_t>((r + 63) / 64, 0));
}

bool BitMatrix::get(int r, int c) const { return (col_bits[c][r / 64] >> (r % 64)) & 1; }

void BitMatrix::flip(int r, int c) { col_bits[c][r / 64] ^= (std::uint64_t{1} << (r % 64)); }

void BitMatrix::add_col(int src, int dst) {
    auto& s = col_bits[src];
    auto& d = col_bits[dst];
    for (size_t i = 0; i < d.size(); ++i) d[i] ^= s[i];
}

int BitMatrix::low(int c) const {
    const auto& bits = col_bits[c];
    for (int w = static_cast<int>(bits.size()) - 1; w >= 0; --w) {
        if (bits[w]) {
            return w * 64 + 63 - __builtin_clzll(bits[w]);
        }
    }
    return -1;
}

bool BitMatrix::col_zero(int c) const { return low(c) < 0; }

namespace {

void reduce_triple(BruteState::Triple& t) {
    int nc = t.D.cols;
    t.R = t.D;
    t.U.init(nc, nc);
    t.V.init(nc, nc);
    for (int i = 0; i < nc; ++i) {
        t.U.flip(i, i);
        t.V.flip(i, i);
    }
    std::vector<int> low_owner(t.D.rows, -1);
    for (int y = 0; y < nc; ++y) {
        int l = t.R.low(y);
        while (l >= 0 && low_owner[l] >= 0) {
            int x = low_owner[l];
            t.R.add_col(x, y);
            // row update on U: U[x,:] += U[y,:] -> column-major storage flips
            for (int k = 0; k < nc; ++k)
                if (t.U.get(y, k)) t.U.flip(x, k);
            t.V.add_col(x, y);
            l = t.R.low(y);
        }
        if (l >= 0) low_owner[l] = y;
    }
}

BruteState::Triple build_triple(const LefschetzComplex& X, const std::vector<CellId>& order,
                                int row_dim, int col_dim, bool reversed) {
    BruteState::Triple t;
    t.row_index.assign(X.size(), -1);
    t.col_index.assign(X.size(), -1);
    auto scan = [&](auto begin, auto end) {
        for (auto it = begin; it != end; ++it) {
            CellId c = *it;
            if (X.dim(c) == row_dim) {
                t.row_index[c] = static_cast<int>(t.row_cells.size());
                t.row_cells.push_back(c);
            }
            if (X.dim(c) == col_dim) {
                t.col_index[c] = static_cast<int>(t.col_cells.size());
                t.col_cells.push_back(c);
            }
        }
    };
    if (reversed)
        scan(order.rbegin(), order.rend());
    else
        scan(order.begin(), order.end());
    t.D.init(static_cast<int>(t.row_cells.size()), static_cast<int>(t.col_cells.size()));
    for (CellId c : t.col_cells) {
        const auto& incident = row_dim < col_dim ? X.facets(c) : X.cofacets(c);
        for (CellId r : incident) t.D.flip(t.row_index[r], t.col_index[c]);
    }
    return t;
}

}  // namespace

bool BruteState::u_entry(int dim, CellId x, CellId y, bool dual_side) const {
    const Triple& t = dual_side ? dual[dim] : primal[dim];
    return t.U.get(t.col_index[x], t.col_index[y]);
}

bool BruteState::v_entry(int dim, CellId x, CellId y, bool dual_side) const {
    const Triple& t = dual_side ? dual[dim] : primal[dim];
    return t.V.get(t.col_index[x], t.col_index[y]);
}

BruteState brute_reduce(const LefschetzComplex& X, const std::vector<CellId>& order) {
    if (X.size() > 4096) throw std::invalid_argument("oracle scale exceeded");
    BruteState b;
    b.X = &X;
    b.order = order;
    b.pos.assign(X.size(), -1);
    for (size_t i = 0; i < order.size(); ++i) b.pos[order[i]] = static_cast<int>(i);
    int md = std::max(X.max_dim(), 0);
    b.primal.resize(md + 1);
    b.dual.resize(md + 1);
    b.partner.assign(X.size(), kNoCell);
    for (int n = 0; n <= md; ++n) {
        b.primal[n] = build_triple(X, order, n - 1, n, false);
        reduce_triple(b.primal[n]);
        b.dual[n] = build_triple(X, order, n + 1, n, true);
        reduce_triple(b.dual[n]);
        for (int y = 0; y < b.primal[n].D.cols; ++y) {
            int l = b.primal[n].R.low(y);
            if (l >= 0) {
                CellId death = b.primal[n].col_cells[y];
                CellId birth = b.primal[n].row_cells[l];
                b.partner[death] = birth;
                b.partner[birth] = death;
            }
        }
    }
    return b;
}

std::string StateDiff::to_string() const {
    std::ostringstream os;
    for (const auto& e : entries) os << e << '\n';
    return os.str();
}

StateDiff compare_states(const ReducedState& engine, const BruteState& brute) {
    StateDiff diff;
    const LefschetzComplex& X = engine.complex();
    for (CellId c = 0; c < X.size(); ++c) {
        if (engine.partner(c) != brute.partner[c]) {
            std::ostringstream os;
            os << "pairing mismatch at " << X.name(c) << ": engine "
               << (engine.partner(c) == kNoCell ? std::string("-") : X.name(engine.partner(c)))
               << " vs brute "
               << (brute.partner[c] == kNoCell ? std::string("-") : X.name(brute.partner[c]));
            diff.entries.push_back(os.str());
        }
    }
    for (int n = 0; n <= engine.max_dim(); ++n) {
        for (bool dual_side : {false, true}) {
            const auto& cols =
                dual_side ? engine.cobd(n).col_ids() : engine.bd(n).col_ids();
            const ReductionTriple& t = dual_side ? engine.dual(n) : engine.primal(n);
            for (CellId x : cols) {
                for (CellId y : cols) {
                    bool eu = t.u_entry(x, y);
                    bool bu = brute.u_entry(n, x, y, dual_side);
                    if (eu != bu) {
                        std::ostringstream os;
                        os << (dual_side ? "dual " : "") << "U_" << n << "[" << X.name(x) << ","
                           << X.name(y) << "]: engine " << eu << " vs brute " << bu;
                        diff.entries.push_back(os.str());
                    }
                    bool ev = t.V.entry(x, y);
                    bool bv = brute.v_entry(n, x, y, dual_side);
                    if (ev != bv) {
                        std::ostringstream os;
                        os << (dual_side ? "dual " : "") << "V_" << n << "[" << X.name(x) << ","
                           << X.name(y) << "]: engine " << ev << " vs brute " << bv;
                        diff.entries.push_back(os.str());
                    }
                }
            }
        }
    }
    return diff;
}

namespace {

void dfs_paths(const LefschetzComplex& X, const CombinatorialVectorField& V, CellId cur,
               CellId to, int k, GradientPath& stack, std::vector<GradientPath>& out,
               std::size_t budget) {
    if (cur == to) {
        out.push_back(stack);
        if (out.size() > budget) throw std::runtime_error("oracle scale exceeded");
        return;
    }
    for (CellId t : field_arcs(X, V, cur)) {
        if (X.dim(t) != k && X.dim(t) != k + 1) continue;
        stack.push_back(t);
        dfs_paths(X, V, t, to, k, stack, out, budget);
        stack.pop_back();
    }
}

}  // namespace

std::vector<GradientPath> brute_paths(const LefschetzComplex& X,
                                      const CombinatorialVectorField& V, CellId from, CellId to,
                                      std::size_t budget) {
    std::vector<GradientPath> out;
    GradientPath stack{from};
    if (from == to) {
        out.push_back(stack);
        return out;
    }
    int k = X.dim(to);
    if (X.dim(from) != k && X.dim(from) != k + 1) return out;
    dfs_paths(X, V, from, to, k, stack, out, budget);
    return out;
}

bool brute_region_member(const ReducedState& s, const BirthDeathPair& alpha, bool death_side,
                         double px, double py) {
    const LefschetzComplex& X = s.complex();
    CombinatorialVectorField V = s.field();
    int n = alpha.dim;
    // independent reachability: plain DFS on the arcs
    auto reach = [&](CellId from, CellId to) {
        std::vector<char> seen(X.size(), 0);
        std::vector<CellId> todo{from};
        seen[from] = 1;
        while (!todo.empty()) {
            CellId c = todo.back();
            todo.pop_back();
            if (c == to) return true;
            for (CellId t : field_arcs(X, V, c))
                if (!seen[t]) {
                    seen[t] = 1;
                    todo.push_back(t);
                }
        }
        return false;
    };
    if (death_side) {
        for (const BirthDeathPair& beta : s.pairs()) {
            if (beta.dim != n || beta.cls != PairClass::off_diagonal) continue;
            if (beta.birth == alpha.birth) continue;
            if (!s.hom_relation(beta.death, alpha.death)) continue;
            if (px <= s.value(beta.birth) && py <= s.value(beta.death)) return true;
        }
        for (CellId c : V.criticals()) {
            if (c == alpha.birth || c == alpha.death) continue;
            if (!reach(alpha.death, c)) continue;
            if (px <= s.value(c) && py <= s.value(c)) return true;
        }
        return false;
    }
    for (const BirthDeathPair& beta : s.pairs()) {
        if (beta.dim != n || beta.cls != PairClass::off_diagonal) continue;
        if (beta.birth == alpha.birth) continue;
        if (!s.cohom_relation(beta.birth, alpha.birth)) continue;
        if (px >= s.value(beta.birth) && py >= s.value(beta.death)) return true;
    }
    for (CellId c : V.criticals()) {
        if (c == alpha.birth || c == alpha.death) continue;
        if (!reach(c, alpha.birth)) continue;
        if (px >= s.value(c) && py >= s.value(c)) return true;
    }
    return false;
}

}  // namespace oracle
}  // namespace topo
