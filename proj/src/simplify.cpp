#include "topo/simplify.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

namespace topo {

namespace {

// critical cells strictly between birth and death in the current h-order
std::vector<CellId> criticals_between(const ReducedState& s, const BirthDeathPair& a) {
    std::vector<CellId> out;
    CombinatorialVectorField V = s.field();
    int lo = s.pos()[a.birth], hi = s.pos()[a.death];
    for (int p = lo + 1; p < hi; ++p) {
        CellId c = s.order()[p];
        if (V.is_critical(c)) out.push_back(c);
    }
    return out;
}

std::set<CellId> interval_preimage(const ReducedState& s, double lo, double hi) {
    std::set<CellId> out;
    for (CellId c = 0; c < s.complex().size(); ++c)
        if (s.value(c) >= lo && s.value(c) <= hi) out.insert(c);
    return out;
}

void run_move(ReducedState& s, SimplificationTrace& trace, const MoveSpec& spec) {
    DiscreteMorseFunction h2 = spec.direction == MoveSpec::Direction::right
                                   ? move_right(s.complex(), s.dmf(), spec)
                                   : move_down(s.complex(), s.dmf(), spec);
    TraceStep step;
    step.spec = spec;
    step.outcomes = s.set_values(h2);
    for (const TranspositionOutcome& o : step.outcomes)
        if (o.pairing_switched)
            throw std::logic_error("allowed move switched the pairing");
    step.snapshot = s.dmf();
    trace.moves.push_back(std::move(step));
}

}  // namespace

SimplificationTrace journey_to_diagonal(ReducedState& s, const BirthDeathPair& alpha) {
    Eligibility el = eligible(s, alpha);
    if (!el.eligible)
        throw std::invalid_argument("pair is not cancellable: " + el.diagnostic);
    SimplificationTrace trace;
    trace.target = alpha;

    // phase 1: bypass critical cells one at a time
    while (true) {
        std::vector<CellId> between = criticals_between(s, alpha);
        if (between.empty()) break;
        CellId x = between.front();
        CellId y = between.back();
        CombinatorialVectorField V = s.field();
        std::vector<char> reach_birth = reaching(s.complex(), V, alpha.birth);
        std::vector<char> from_death = reachable_from(s.complex(), V, alpha.death);
        if (!reach_birth[x] && (s.is_death(x) || !s.cohom_relation(x, alpha.birth))) {
            run_move(s, trace, choose_gap(s, alpha, MoveSpec::Direction::right, x));
        } else if (!from_death[y] && (s.is_birth(y) || !s.hom_relation(y, alpha.death))) {
            run_move(s, trace, choose_gap(s, alpha, MoveSpec::Direction::down, y));
        } else {
            throw std::logic_error("no allowed move despite disjoint regions");
        }
    }

    // phase 2: squeeze the lifetime until it captures exactly the unique path
    GradientPath rho = *unique_path(s.complex(), s.field(), alpha.death, alpha.birth);
    std::set<CellId> rho_set(rho.begin(), rho.end());
    auto isolated = [&] {
        return interval_preimage(s, s.value(alpha.birth), s.value(alpha.death)) == rho_set;
    };
    if (!isolated()) {
        run_move(s, trace, choose_gap(s, alpha, MoveSpec::Direction::down));
        if (!isolated()) {
            run_move(s, trace, choose_gap(s, alpha, MoveSpec::Direction::right));
        }
    }
    if (!isolated())
        throw std::logic_error("squeeze failed to isolate the connecting path");
    return trace;
}

DiscreteMorseFunction reverse_path_dmf(const LefschetzComplex& X, const DiscreteMorseFunction& h,
                                       const BirthDeathPair& alpha, const GradientPath& path) {
    if (path.empty() || path.front() != alpha.death || path.back() != alpha.birth)
        throw std::invalid_argument("path must run from the death cell to the birth cell");
    size_t m = path.size() - 1;
    // enumerate from the birth cell, matching the pairwise value rewrite
    std::vector<CellId> up(path.rbegin(), path.rend());
    // precondition: closed-interval preimage equals the path
    std::set<CellId> rho_set(path.begin(), path.end());
    for (CellId c = 0; c < X.size(); ++c) {
        bool inside = h(c) >= h(alpha.birth) && h(c) <= h(alpha.death);
        if (inside != (rho_set.count(c) > 0))
            throw std::invalid_argument("lifetime preimage is not exactly the path");
    }
    DiscreteMorseFunction out = h;
    for (size_t i = 0; i <= m; ++i) out[up[i]] = h(up[m - 2 * (i / 2)]);
    DmfReport rep = validate_dmf(X, out);
    if (!rep.valid()) throw std::logic_error("reversal produced an invalid filter");
    return out;
}

SimplificationTrace cancel_pair(ReducedState& s, const BirthDeathPair& alpha) {
    SimplificationTrace trace = journey_to_diagonal(s, alpha);
    BirthDeathPair a = s.pair_of(alpha.birth);  // values moved; same cells
    GradientPath rho = *unique_path(s.complex(), s.field(), a.death, a.birth);
    DiscreteMorseFunction h2 = reverse_path_dmf(s.complex(), s.dmf(), a, rho);
    s.apply_reversal(rho, h2);
    trace.reversed = rho;
    trace.final_dmf = h2;
    return trace;
}

int obstacle_count(const ReducedState& s, const BirthDeathPair& alpha) {
    int m = 0;
    double b = s.value(alpha.birth), d = s.value(alpha.death);
    for (const BirthDeathPair& g : s.pairs()) {
        if (g.cls != PairClass::off_diagonal || g.birth == alpha.birth) continue;
        double gb = s.value(g.birth);
        double gd = g.has_death() ? s.value(g.death) : std::numeric_limits<double>::infinity();
        if ((gb >= b && gb <= d) || (gb <= b && gd <= d)) ++m;
    }
    return m;
}

SimplifyReport simplify_all(ReducedState& s, SimplifyPolicy policy, const SimplifyOptions& opts) {
    SimplifyReport report;
    auto start = std::chrono::steady_clock::now();
    auto out_of_budget = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() >
               opts.budget_seconds;
    };
    for (const BirthDeathPair& p : s.pairs())
        if (p.cls == PairClass::off_diagonal) report.initial_off_diagonal++;

    auto by_persistence = [&](std::vector<BirthDeathPair>& ps) {
        std::sort(ps.begin(), ps.end(), [&](const auto& a, const auto& b) {
            double pa = s.value(a.death) - s.value(a.birth);
            double pb = s.value(b.death) - s.value(b.birth);
            if (pa != pb) return pa < pb;
            return s.pos()[a.birth] < s.pos()[b.birth];
        });
    };
    auto off_diagonal_pairs = [&] {
        std::vector<BirthDeathPair> ps;
        for (const BirthDeathPair& p : s.pairs())
            if (p.cls == PairClass::off_diagonal) ps.push_back(p);
        by_persistence(ps);
        return ps;
    };
    auto cancel_and_record = [&](const BirthDeathPair& p, CancelMethod method) {
        CancelRecord rec;
        rec.birth = p.birth;
        rec.death = p.death;
        rec.dim = p.dim;
        rec.birth_value = s.value(p.birth);
        rec.death_value = s.value(p.death);
        rec.method = method;
        rec.obstacle_count = obstacle_count(s, p);
        auto t0 = std::chrono::steady_clock::now();
        SimplificationTrace trace = cancel_pair(s, p);
        auto t1 = std::chrono::steady_clock::now();
        rec.seconds = std::chrono::duration<double>(t1 - t0).count();
        rec.move_count = static_cast<int>(trace.moves.size());
        report.cancelled.push_back(rec);
        if (opts.after_cancel && !opts.after_cancel(s, report.cancelled.back())) return false;
        return true;
    };

    if (policy == SimplifyPolicy::shallow_first_then_regions) {
        bool progress = true;
        while (progress && report.complete) {
            progress = false;
            if (out_of_budget()) {
                report.complete = false;
                break;
            }
            for (const BirthDeathPair& p : off_diagonal_pairs()) {
                if (!is_shallow(s, p)) continue;
                if (count_paths(s.complex(), s.field(), p.death, p.birth, 2).count != 1) continue;
                if (!cancel_and_record(p, CancelMethod::standard)) report.complete = false;
                progress = true;
                break;
            }
        }
    }
    bool progress = true;
    while (progress && report.complete) {
        progress = false;
        if (out_of_budget()) {
            report.complete = false;
            break;
        }
        for (const BirthDeathPair& p : off_diagonal_pairs()) {
            if (!eligible(s, p).eligible) continue;
            if (!cancel_and_record(p, CancelMethod::region)) report.complete = false;
            progress = true;
            break;
        }
    }
    report.not_cancellable = off_diagonal_pairs();
    return report;
}

}  // namespace topo
