#include "topo/vector_field.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace topo {

std::vector<CellId> CombinatorialVectorField::criticals() const {
    std::vector<CellId> out;
    for (CellId c = 0; c < size(); ++c)
        if (partner[c] == kNoCell) out.push_back(c);
    return out;
}

std::vector<std::pair<CellId, CellId>> CombinatorialVectorField::vectors(
    const LefschetzComplex& X) const {
    std::vector<std::pair<CellId, CellId>> out;
    for (CellId c = 0; c < size(); ++c) {
        CellId p = partner[c];
        if (p != kNoCell && X.dim(c) < X.dim(p)) out.emplace_back(c, p);
    }
    return out;
}

std::vector<CellId> field_arcs(const LefschetzComplex& X, const CombinatorialVectorField& V,
                               CellId c) {
    std::vector<CellId> out;
    CellId p = V.partner[c];
    if (p != kNoCell && X.dim(p) == X.dim(c) + 1) out.push_back(p);
    for (CellId f : X.facets(c))
        if (f != p) out.push_back(f);
    return out;
}

bool is_gradient(const LefschetzComplex& X, const CombinatorialVectorField& V) {
    std::vector<int> indeg(X.size(), 0);
    for (CellId c = 0; c < X.size(); ++c)
        for (CellId t : field_arcs(X, V, c)) indeg[t]++;
    std::queue<CellId> q;
    for (CellId c = 0; c < X.size(); ++c)
        if (indeg[c] == 0) q.push(c);
    int seen = 0;
    while (!q.empty()) {
        CellId c = q.front();
        q.pop();
        ++seen;
        for (CellId t : field_arcs(X, V, c))
            if (--indeg[t] == 0) q.push(t);
    }
    return seen == X.size();
}

CombinatorialVectorField induced_vector_field(const LefschetzComplex& X,
                                              const DiscreteMorseFunction& h) {
    DmfReport rep = validate_dmf(X, h);
    if (!rep.valid()) throw std::invalid_argument("not a discrete Morse function");
    CombinatorialVectorField V;
    V.partner.assign(X.size(), kNoCell);
    std::map<double, std::vector<CellId>> classes;
    for (CellId c = 0; c < X.size(); ++c) classes[h(c)].push_back(c);
    for (auto& [v, cls] : classes) {
        (void)v;
        if (cls.size() == 2) {
            V.partner[cls[0]] = cls[1];
            V.partner[cls[1]] = cls[0];
        }
    }
    if (!is_gradient(X, V)) throw std::runtime_error("induced field is not acyclic");
    return V;
}

namespace {

// cells of dims {k, k+1} in topological order of the restricted digraph
std::vector<CellId> restricted_topo_order(const LefschetzComplex& X,
                                          const CombinatorialVectorField& V, int k) {
    std::vector<CellId> nodes;
    for (CellId c = 0; c < X.size(); ++c)
        if (X.dim(c) == k || X.dim(c) == k + 1) nodes.push_back(c);
    std::vector<int> indeg(X.size(), 0);
    auto arcs_in_band = [&](CellId c) {
        std::vector<CellId> out;
        for (CellId t : field_arcs(X, V, c))
            if (X.dim(t) == k || X.dim(t) == k + 1) out.push_back(t);
        return out;
    };
    for (CellId c : nodes)
        for (CellId t : arcs_in_band(c)) indeg[t]++;
    std::queue<CellId> q;
    for (CellId c : nodes)
        if (indeg[c] == 0) q.push(c);
    std::vector<CellId> order;
    while (!q.empty()) {
        CellId c = q.front();
        q.pop();
        order.push_back(c);
        for (CellId t : arcs_in_band(c))
            if (--indeg[t] == 0) q.push(t);
    }
    if (order.size() != nodes.size()) throw std::runtime_error("vector field has a cycle");
    return order;
}

}  // namespace

PathCount count_paths(const LefschetzComplex& X, const CombinatorialVectorField& V, CellId from,
                      CellId to, std::uint64_t cap) {
    PathCount out;
    if (from == to) {
        out.count = std::min<std::uint64_t>(1, cap);
        out.parity = 1;
        return out;
    }
    int k = X.dim(to);
    if (X.dim(from) != k && X.dim(from) != k + 1) return out;
    std::vector<CellId> order = restricted_topo_order(X, V, k);
    // walk in reverse topological order: ways[c] = paths from c to `to`
    std::vector<std::uint64_t> ways(X.size(), 0);
    std::vector<int> par(X.size(), 0);
    ways[to] = 1;
    par[to] = 1;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        CellId c = *it;
        if (c == to) continue;
        std::uint64_t acc = 0;
        int p = 0;
        for (CellId t : field_arcs(X, V, c)) {
            if (X.dim(t) != k && X.dim(t) != k + 1) continue;
            acc += ways[t];
            if (acc > cap) acc = cap;
            p ^= par[t];
        }
        ways[c] = acc;
        par[c] = p;
    }
    out.count = std::min(ways[from], cap);
    out.parity = par[from];
    return out;
}

std::vector<char> reachable_from(const LefschetzComplex& X, const CombinatorialVectorField& V,
                                 CellId c) {
    std::vector<char> seen(X.size(), 0);
    std::queue<CellId> q;
    q.push(c);
    seen[c] = 1;
    while (!q.empty()) {
        CellId a = q.front();
        q.pop();
        for (CellId t : field_arcs(X, V, a))
            if (!seen[t]) {
                seen[t] = 1;
                q.push(t);
            }
    }
    return seen;
}

std::vector<char> reaching(const LefschetzComplex& X, const CombinatorialVectorField& V,
                           CellId c) {
    // reverse arcs
    std::vector<std::vector<CellId>> radj(X.size());
    for (CellId a = 0; a < X.size(); ++a)
        for (CellId t : field_arcs(X, V, a)) radj[t].push_back(a);
    std::vector<char> seen(X.size(), 0);
    std::queue<CellId> q;
    q.push(c);
    seen[c] = 1;
    while (!q.empty()) {
        CellId a = q.front();
        q.pop();
        for (CellId t : radj[a])
            if (!seen[t]) {
                seen[t] = 1;
                q.push(t);
            }
    }
    return seen;
}

std::optional<GradientPath> unique_path(const LefschetzComplex& X,
                                        const CombinatorialVectorField& V, CellId top,
                                        CellId bottom) {
    PathCount pc = count_paths(X, V, top, bottom, 2);
    if (pc.count != 1) return std::nullopt;
    GradientPath path;
    int k = X.dim(bottom);
    CellId cur = top;
    path.push_back(cur);
    while (cur != bottom) {
        CellId next = kNoCell;
        for (CellId t : field_arcs(X, V, cur)) {
            if (X.dim(t) != k && X.dim(t) != k + 1) continue;
            if (count_paths(X, V, t, bottom, 1).count > 0) {
                next = t;
                break;  // unique path: exactly one successor leads on
            }
        }
        if (next == kNoCell) throw std::runtime_error("path reconstruction failed");
        path.push_back(next);
        cur = next;
    }
    return path;
}

MorseComplex morse_complex(const LefschetzComplex& X, const CombinatorialVectorField& V) {
    if (!is_gradient(X, V)) throw std::runtime_error("vector field is not acyclic");
    MorseComplex M;
    M.to_morse.assign(X.size(), kNoCell);
    for (CellId c : V.criticals()) {
        CellId m = M.complex.add_cell(X.dim(c), X.name(c));
        M.to_morse[c] = m;
        M.from_morse.push_back(c);
    }
    for (CellId y : V.criticals()) {
        for (CellId x : V.criticals()) {
            if (X.dim(y) != X.dim(x) + 1) continue;
            if (count_paths(X, V, y, x, 2).parity)
                M.complex.add_boundary(M.to_morse[x], M.to_morse[y]);
        }
    }
    return M;
}

CombinatorialVectorField reverse_path(const LefschetzComplex& X,
                                      const CombinatorialVectorField& V,
                                      const GradientPath& path) {
    if (path.size() < 2 || path.size() % 2 != 0)
        throw std::invalid_argument("path must alternate between two endpoints");
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        auto arcs = field_arcs(X, V, path[i]);
        if (std::find(arcs.begin(), arcs.end(), path[i + 1]) == arcs.end())
            throw std::invalid_argument("sequence does not follow the field");
    }
    CellId front = path.front(), back = path.back();
    CombinatorialVectorField W = V;
    if (V.is_critical(front) && V.is_critical(back)) {
        // critical endpoints become matched; interior vectors shift by one
        PathCount pc = count_paths(X, V, front, back, 2);
        if (pc.count >= 2) throw std::invalid_argument("not reversible: path is not unique");
        for (size_t i = 0; i + 1 < path.size(); i += 2) {
            W.partner[path[i]] = path[i + 1];
            W.partner[path[i + 1]] = path[i];
        }
    } else if (V.partner[front] == path[1] && V.partner[back] == path[path.size() - 2]) {
        // inverse orientation: endpoints matched into the path become critical
        W.partner[front] = kNoCell;
        W.partner[back] = kNoCell;
        for (size_t i = 1; i + 2 < path.size(); i += 2) {
            W.partner[path[i]] = path[i + 1];
            W.partner[path[i + 1]] = path[i];
        }
    } else {
        throw std::invalid_argument("path endpoints are not critical");
    }
    if (!is_gradient(X, W)) throw std::runtime_error("reversal broke acyclicity");
    return W;
}

}  // namespace topo
