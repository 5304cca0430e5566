#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "topo/io.hpp"
#include "topo/simplify.hpp"

namespace topo {

struct ComplexityReport {
    int cell_count = 0;
    int pair_count = 0;  // birth-death pairs, essential generators included
    std::vector<int> obstacle_counts;       // m per cancelled pair
    std::vector<double> cancel_seconds;     // per-cancellation wall time
};

struct DimensionTally {
    int standard_cancelled = 0;
    int region_cancelled = 0;
    int not_cancellable = 0;
};

struct ExperimentReport {
    int dim = 0;
    std::uint64_t seed = 0;
    bool band_separated = false;
    bool verified = false;       // oracle spot checks ran
    int oracle_diffs = 0;
    bool complete = true;        // budget not exceeded
    std::map<int, DimensionTally> per_dimension;
    SimplifyReport simplify;
    ComplexityReport complexity;
    double total_seconds = 0;

    std::string to_string(const LefschetzComplex& X) const;
    std::string to_json() const;
};

// Full-simplex run: random banded filter, two-phase simplification, optional
// oracle spot checks after every cancellation.
ExperimentReport run_experiment(int d, std::uint64_t seed, bool verify,
                                double budget_seconds = 600);

struct ScalingPoint {
    int cells = 0;
    int pairs = 0;
    double seconds_per_cancellation = 0;
};

struct ScalingReport {
    std::vector<ScalingPoint> points;
    double worst_ratio = 0;  // per doubling of the cell count
    std::string to_string() const;
};

// Per-cancellation cost on subdivided zigzag filtrations of doubling size at
// a fixed number of critical pairs.
ScalingReport scaling_probe(const std::vector<int>& sizes = {256, 512, 1024, 2048},
                            int bumps = 8);

// zigzag path complex used by the probe (exposed for tests)
ComplexDocument zigzag_path(int cells, int bumps);

}  // namespace topo
