#include "topo/moves.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace topo {

namespace {

void check_interval_empty(const DiscreteMorseFunction& h, double lo, double hi) {
    for (double v : h.values)
        if (v >= lo && v <= hi)
            throw std::invalid_argument("relocation interval is not value-free");
}

void check_bypass(const LefschetzComplex& X, const DiscreteMorseFunction& h,
                  const CombinatorialVectorField& V, double lo, double hi,
                  const std::vector<char>& connected, const char* clause) {
    int criticals = 0;
    for (CellId c = 0; c < X.size(); ++c) {
        if (!V.is_critical(c)) continue;
        if (h(c) > lo && h(c) < hi) {
            ++criticals;
            if (criticals > 1)
                throw std::invalid_argument(std::string("more than one critical cell bypassed: ") +
                                            clause);
            if (connected[c])
                throw std::invalid_argument(
                    std::string("bypassed critical cell is connected to the moving endpoint: ") +
                    clause);
        }
    }
}

}  // namespace

DiscreteMorseFunction move_right(const LefschetzComplex& X, const DiscreteMorseFunction& h,
                                 const MoveSpec& spec) {
    const BirthDeathPair& a = spec.pair;
    if (spec.direction != MoveSpec::Direction::right)
        throw std::invalid_argument("spec direction is not right");
    if (!a.has_death()) throw std::invalid_argument("right move needs a finite pair");
    double b = h(a.birth), d = h(a.death);
    if (!(b < spec.delta && spec.delta < spec.xi && spec.xi < d))
        throw std::invalid_argument("right move needs h(birth) < delta < xi < h(death)");
    check_interval_empty(h, spec.delta, spec.xi);
    CombinatorialVectorField V = induced_vector_field(X, h);
    std::vector<char> reach = reaching(X, V, a.birth);
    check_bypass(X, h, V, b, spec.delta, reach, "(h(birth), delta)");

    DiscreteMorseFunction out = h;
    for (CellId c = 0; c < X.size(); ++c) {
        if (h(c) < b || h(c) > spec.xi) continue;
        if (!reach[c]) continue;
        if (V.is_critical(c) && c != a.birth) continue;
        double t = (spec.xi - h(c)) / (spec.xi - b);
        out[c] = t * spec.delta + (1 - t) * spec.xi;
    }
    DmfReport rep = validate_dmf(X, out);
    if (!rep.valid()) throw std::logic_error("right move produced an invalid filter");
    if (!(induced_vector_field(X, out) == V))
        throw std::logic_error("right move changed the vector field");
    return out;
}

DiscreteMorseFunction move_down(const LefschetzComplex& X, const DiscreteMorseFunction& h,
                                const MoveSpec& spec) {
    const BirthDeathPair& a = spec.pair;
    if (spec.direction != MoveSpec::Direction::down)
        throw std::invalid_argument("spec direction is not down");
    if (!a.has_death()) throw std::invalid_argument("down move needs a finite pair");
    double b = h(a.birth), d = h(a.death);
    if (!(b < spec.xi && spec.xi < spec.delta && spec.delta < d))
        throw std::invalid_argument("down move needs h(birth) < xi < delta < h(death)");
    check_interval_empty(h, spec.xi, spec.delta);
    CombinatorialVectorField V = induced_vector_field(X, h);
    std::vector<char> down = reachable_from(X, V, a.death);
    check_bypass(X, h, V, spec.delta, d, down, "(delta, h(death))");

    DiscreteMorseFunction out = h;
    for (CellId c = 0; c < X.size(); ++c) {
        if (h(c) < spec.xi || h(c) > d) continue;
        if (!down[c]) continue;
        if (V.is_critical(c) && c != a.death) continue;
        double t = (d - h(c)) / (d - spec.xi);
        out[c] = t * spec.xi + (1 - t) * spec.delta;
    }
    DmfReport rep = validate_dmf(X, out);
    if (!rep.valid()) throw std::logic_error("down move produced an invalid filter");
    if (!(induced_vector_field(X, out) == V))
        throw std::logic_error("down move changed the vector field");
    return out;
}

MoveSpec choose_gap(const ReducedState& s, const BirthDeathPair& alpha, MoveSpec::Direction dir,
                    CellId bypass) {
    if (!alpha.has_death()) throw std::invalid_argument("gap selection needs a finite pair");
    MoveSpec spec;
    spec.direction = dir;
    spec.pair = alpha;
    spec.bypassed = bypass;
    double b = s.value(alpha.birth), d = s.value(alpha.death);

    // next cell value strictly above v, capped at hi
    auto next_value_above = [&](double v, double hi) {
        double best = hi;
        for (double w : s.dmf().values)
            if (w > v && w < best) best = w;
        return best;
    };
    auto prev_value_below = [&](double v, double lo) {
        double best = lo;
        for (double w : s.dmf().values)
            if (w < v && w > best) best = w;
        return best;
    };

    double lo, hi;
    if (dir == MoveSpec::Direction::right) {
        if (bypass != kNoCell) {
            if (!(s.value(bypass) > b && s.value(bypass) < d))
                throw std::invalid_argument("bypass cell is outside the lifetime");
            lo = s.value(bypass);
        } else {
            lo = prev_value_below(d, b);  // final squeeze: hug the death value
        }
        hi = next_value_above(lo, d);
        if (!(lo < hi)) throw std::invalid_argument("no value-free gap available");
        spec.delta = lo + (hi - lo) / 3;
        spec.xi = lo + 2 * (hi - lo) / 3;
    } else {
        if (bypass != kNoCell) {
            if (!(s.value(bypass) > b && s.value(bypass) < d))
                throw std::invalid_argument("bypass cell is outside the lifetime");
            hi = s.value(bypass);
        } else {
            hi = next_value_above(b, d);  // bottom squeeze: hug the birth value
        }
        lo = prev_value_below(hi, b);
        if (!(lo < hi)) throw std::invalid_argument("no value-free gap available");
        spec.xi = lo + (hi - lo) / 3;
        spec.delta = lo + 2 * (hi - lo) / 3;
    }
    return spec;
}

}  // namespace topo
