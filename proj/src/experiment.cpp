#include "topo/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "topo/oracle.hpp"

namespace topo {

using nlohmann::json;

std::string ExperimentReport::to_string(const LefschetzComplex& X) const {
    std::ostringstream os;
    os << "experiment: " << dim << "-simplex, seed " << seed << ", " << X.size() << " cells\n";
    os << "  band separation: " << (band_separated ? "yes" : "no") << "\n";
    os << "  off-diagonal pairs: " << simplify.initial_off_diagonal << "\n";
    for (const auto& [d, tally] : per_dimension) {
        os << "  dim " << d << ": standard " << tally.standard_cancelled << ", region "
           << tally.region_cancelled << ", blocked " << tally.not_cancellable << "\n";
    }
    if (verified) os << "  oracle diffs: " << oracle_diffs << "\n";
    if (!complete) os << "  WARNING: budget exceeded, partial run\n";
    os << "  total: " << total_seconds << " s\n";
    return os.str();
}

std::string ExperimentReport::to_json() const {
    json doc;
    doc["dim"] = dim;
    doc["seed"] = seed;
    doc["band_separated"] = band_separated;
    doc["complete"] = complete;
    doc["verified"] = verified;
    doc["oracle_diffs"] = oracle_diffs;
    doc["total_seconds"] = total_seconds;
    doc["cells"] = complexity.cell_count;
    doc["pairs"] = complexity.pair_count;
    json per_dim = json::object();
    for (const auto& [d, tally] : per_dimension) {
        per_dim[std::to_string(d)] = {{"standard", tally.standard_cancelled},
                                      {"region", tally.region_cancelled},
                                      {"blocked", tally.not_cancellable}};
    }
    doc["classes"] = per_dim;
    json cancels = json::array();
    for (const auto& rec : simplify.cancelled) {
        cancels.push_back({{"dim", rec.dim},
                           {"birth_value", rec.birth_value},
                           {"death_value", rec.death_value},
                           {"method", rec.method == CancelMethod::standard ? "standard" : "region"},
                           {"seconds", rec.seconds},
                           {"obstacles", rec.obstacle_count},
                           {"moves", rec.move_count}});
    }
    doc["cancellations"] = cancels;
    return doc.dump(2);
}

ExperimentReport run_experiment(int d, std::uint64_t seed, bool verify, double budget_seconds) {
    ExperimentReport rep;
    rep.dim = d;
    rep.seed = seed;
    auto t0 = std::chrono::steady_clock::now();

    LefschetzComplex X = simplex_skeleton(d);
    DiscreteMorseFunction h = random_dmf(X, seed, /*banded=*/true);
    rep.band_separated = bands_separated(X, h);
    ReducedState state(X, h);
    rep.complexity.cell_count = X.size();
    rep.complexity.pair_count = static_cast<int>(state.pairs().size());

    int verify_stride = 10;
    int cancel_index = 0;
    if (verify) {
        rep.verified = true;
        oracle::BruteState b = oracle::brute_reduce(X, state.order());
        rep.oracle_diffs += static_cast<int>(oracle::compare_states(state, b).entries.size());
    }
    SimplifyOptions opts;
    opts.budget_seconds = budget_seconds;
    opts.after_cancel = [&](ReducedState& s, const CancelRecord& rec) {
        (void)rec;
        ++cancel_index;
        if (verify && cancel_index % verify_stride == 0) {
            oracle::BruteState b = oracle::brute_reduce(X, s.order());
            rep.oracle_diffs += static_cast<int>(oracle::compare_states(s, b).entries.size());
        }
        return true;
    };
    rep.simplify = simplify_all(state, SimplifyPolicy::shallow_first_then_regions, opts);
    rep.complete = rep.simplify.complete;
    if (verify) {
        oracle::BruteState b = oracle::brute_reduce(X, state.order());
        rep.oracle_diffs += static_cast<int>(oracle::compare_states(state, b).entries.size());
    }

    for (const CancelRecord& rec : rep.simplify.cancelled) {
        auto& tally = rep.per_dimension[rec.dim];
        if (rec.method == CancelMethod::standard)
            tally.standard_cancelled++;
        else
            tally.region_cancelled++;
        rep.complexity.obstacle_counts.push_back(rec.obstacle_count);
        rep.complexity.cancel_seconds.push_back(rec.seconds);
    }
    for (const BirthDeathPair& p : rep.simplify.not_cancellable)
        rep.per_dimension[p.dim].not_cancellable++;

    rep.total_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

ComplexDocument zigzag_path(int cells, int bumps) {
    ComplexDocument doc;
    int m = std::max(2, (cells + 1) / 2);  // vertices
    int run = std::max(2, (m - 1) / (2 * std::max(1, bumps)));
    LefschetzComplex& X = doc.complex;
    std::vector<CellId> verts(m);
    for (int i = 0; i < m; ++i) verts[i] = X.add_cell(0, "v" + std::to_string(i));
    std::vector<CellId> edges(m - 1);
    for (int i = 0; i + 1 < m; ++i) {
        edges[i] = X.add_cell(1, "e" + std::to_string(i));
        X.add_boundary(verts[i], edges[i]);
        X.add_boundary(verts[i + 1], edges[i]);
    }
    auto pattern = [&](int i) {
        int phase = i % (2 * run);
        return phase < run ? phase : 2 * run - phase;
    };
    DiscreteMorseFunction h;
    h.values.assign(X.size(), 0.0);
    for (int i = 0; i < m; ++i)
        h.values[verts[i]] = static_cast<double>(pattern(i)) * m + i;
    for (int i = 0; i + 1 < m; ++i) {
        double a = h.values[verts[i]], b = h.values[verts[i + 1]];
        bool up = b > a;
        bool next_descends = i + 2 < m && h.values[verts[i + 2]] < b;
        if (up && next_descends) {
            h.values[edges[i]] = std::max(a, b) + 0.5;  // critical edge at the local max
        } else {
            h.values[edges[i]] = std::max(a, b);  // vector with the higher endpoint
        }
    }
    doc.values = h;
    return doc;
}

std::string ScalingReport::to_string() const {
    std::ostringstream os;
    os << "scaling probe (per-cancellation seconds):\n";
    for (const auto& p : points)
        os << "  n=" << p.cells << " pairs=" << p.pairs << " t=" << p.seconds_per_cancellation
           << "\n";
    os << "  worst ratio per doubling: " << worst_ratio << "\n";
    return os.str();
}

ScalingReport scaling_probe(const std::vector<int>& sizes, int bumps) {
    ScalingReport rep;
    for (int n : sizes) {
        ComplexDocument doc = zigzag_path(n, bumps);
        ReducedState state(doc.complex, *doc.values);
        int off = 0;
        for (const BirthDeathPair& p : state.pairs())
            if (p.cls == PairClass::off_diagonal) ++off;
        SimplifyReport sim = simplify_all(state, SimplifyPolicy::shallow_first_then_regions);
        ScalingPoint pt;
        pt.cells = doc.complex.size();
        pt.pairs = off;
        if (!sim.cancelled.empty()) {
            double total = 0;
            for (const auto& rec : sim.cancelled) total += rec.seconds;
            pt.seconds_per_cancellation = total / static_cast<double>(sim.cancelled.size());
        }
        rep.points.push_back(pt);
    }
    rep.worst_ratio = 0;
    for (size_t i = 1; i < rep.points.size(); ++i) {
        double a = rep.points[i - 1].seconds_per_cancellation;
        double b = rep.points[i].seconds_per_cancellation;
        if (a > 0) rep.worst_ratio = std::max(rep.worst_ratio, b / a);
    }
    return rep;
}

}  // namespace topo
