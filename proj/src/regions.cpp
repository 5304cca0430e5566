#include "topo/regions.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <limits>
#include <stdexcept>

namespace topo {

bool Staircase::contains(double x, double y) const {
    if (orientation == Orientation::lower_left) {
        for (auto [a, b] : corners)
            if (x <= a && y <= b) return true;
    } else {
        for (auto [a, b] : corners)
            if (x >= a && y >= b) return true;
    }
    return false;
}

bool Staircase::contains(const Staircase& other) const {
    if (other.orientation != orientation) throw std::invalid_argument("orientation mismatch");
    for (auto [x, y] : other.corners)
        if (!contains(x, y)) return false;
    return true;
}

Staircase make_staircase(Staircase::Orientation o,
                         std::vector<std::pair<double, double>> raw_corners) {
    Staircase st;
    st.orientation = o;
    auto& cs = raw_corners;
    if (o == Staircase::Orientation::lower_left) {
        // keep Pareto-maximal corners: x ascending, y strictly descending
        std::sort(cs.begin(), cs.end(), [](auto& a, auto& b) {
            if (a.first != b.first) return a.first > b.first;
            return a.second > b.second;
        });
        double best_y = -std::numeric_limits<double>::infinity();
        for (auto [x, y] : cs) {
            if (y > best_y) {
                st.corners.emplace_back(x, y);
                best_y = y;
            }
        }
        std::reverse(st.corners.begin(), st.corners.end());
    } else {
        // keep Pareto-minimal corners
        std::sort(cs.begin(), cs.end(), [](auto& a, auto& b) {
            if (a.first != b.first) return a.first < b.first;
            return a.second < b.second;
        });
        double best_y = std::numeric_limits<double>::infinity();
        for (auto [x, y] : cs) {
            if (y < best_y) {
                st.corners.emplace_back(x, y);
                best_y = y;
            }
        }
    }
    return st;
}

Staircase death_region(const ReducedState& s, const BirthDeathPair& alpha) {
    if (alpha.cls != PairClass::off_diagonal)
        throw std::invalid_argument("forbidden regions are defined for off-diagonal pairs");
    std::vector<std::pair<double, double>> corners;
    for (CellId x : incoming_hom_cells(s, alpha.death)) {
        BirthDeathPair beta = s.pair_of(x);
        if (beta.cls != PairClass::off_diagonal || beta.dim != alpha.dim) continue;
        corners.emplace_back(s.value(beta.birth), s.value(beta.death));
    }
    CombinatorialVectorField V = s.field();
    std::vector<char> down = reachable_from(s.complex(), V, alpha.death);
    for (CellId c : V.criticals()) {
        if (c == alpha.birth || c == alpha.death) continue;
        if (down[c]) corners.emplace_back(s.value(c), s.value(c));
    }
    return make_staircase(Staircase::Orientation::lower_left, std::move(corners));
}

Staircase birth_region(const ReducedState& s, const BirthDeathPair& alpha) {
    if (alpha.cls != PairClass::off_diagonal)
        throw std::invalid_argument("forbidden regions are defined for off-diagonal pairs");
    std::vector<std::pair<double, double>> corners;
    for (CellId x : incoming_cohom_cells(s, alpha.birth)) {
        BirthDeathPair beta = s.pair_of(x);
        if (beta.cls != PairClass::off_diagonal || beta.dim != alpha.dim) continue;
        corners.emplace_back(s.value(beta.birth), s.value(beta.death));
    }
    CombinatorialVectorField V = s.field();
    std::vector<char> up = reaching(s.complex(), V, alpha.birth);
    for (CellId c : V.criticals()) {
        if (c == alpha.birth || c == alpha.death) continue;
        if (up[c]) corners.emplace_back(s.value(c), s.value(c));
    }
    return make_staircase(Staircase::Orientation::upper_right, std::move(corners));
}

bool regions_intersect(const Staircase& death, const Staircase& birth) {
    if (death.empty() || birth.empty()) return false;
    // death corners: x ascending, y descending. For a birth corner (c, d) the
    // best death candidate with a >= c is the first corner of that suffix.
    const auto& dc = death.corners;
    for (auto [c, d] : birth.corners) {
        auto it = std::lower_bound(dc.begin(), dc.end(), c,
                                   [](const auto& corner, double v) { return corner.first < v; });
        if (it != dc.end() && d <= it->second) return true;
    }
    return false;
}

Eligibility eligible(const ReducedState& s, const BirthDeathPair& alpha) {
    if (alpha.cls != PairClass::off_diagonal)
        throw std::invalid_argument("eligibility is defined for off-diagonal pairs");
    Eligibility e;
    Staircase dr = death_region(s, alpha);
    Staircase br = birth_region(s, alpha);
    e.regions_disjoint = !regions_intersect(dr, br);
    PathCount pc = count_paths(s.complex(), s.field(), alpha.death, alpha.birth, 2);
    e.path_count = pc.count;
    e.reversible = pc.count == 1;
    e.eligible = e.regions_disjoint && e.reversible;
    if (!e.eligible) {
        std::ostringstream msg;
        if (!e.reversible)
            msg << "not reversible: " << pc.count << (pc.count >= 2 ? "+" : "")
                << " gradient paths between the paired cells";
        if (!e.regions_disjoint) {
            if (!msg.str().empty()) msg << "; ";
            msg << "forbidden regions intersect";
            for (auto [c, d] : br.corners) {
                for (auto [a, b] : dr.corners) {
                    if (c <= a && d <= b) {
                        msg << " (corners (" << a << "," << b << ") and (" << c << "," << d << "))";
                        goto done;
                    }
                }
            }
        done:;
        }
        e.diagnostic = msg.str();
    }
    return e;
}

}  // namespace topo
