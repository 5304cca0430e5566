#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "topo/moves.hpp"
#include "topo/regions.hpp"

namespace topo {

struct TraceStep {
    MoveSpec spec;
    std::vector<TranspositionOutcome> outcomes;
    DiscreteMorseFunction snapshot;  // filter after the move
};

struct SimplificationTrace {
    BirthDeathPair target;
    std::vector<TraceStep> moves;
    GradientPath reversed;  // death cell down to birth cell
    DiscreteMorseFunction final_dmf;
};

// Sequence of allowed moves shrinking alpha's lifetime until the closed value
// interval of the pair captures exactly the unique connecting path. Mutates
// the state; requires eligibility.
SimplificationTrace journey_to_diagonal(ReducedState& s, const BirthDeathPair& alpha);

// Filter realizing the reversed field: values along the path (enumerated
// birth to death) are rewritten pairwise so consecutive cells share the value
// of the upper end of their new vector. Requires the closed-interval preimage
// of the pair's lifetime to be exactly the path.
DiscreteMorseFunction reverse_path_dmf(const LefschetzComplex& X, const DiscreteMorseFunction& h,
                                       const BirthDeathPair& alpha, const GradientPath& path);

// journey + reversal; removes alpha from the off-diagonal pairs and leaves
// every other pair's values untouched
SimplificationTrace cancel_pair(ReducedState& s, const BirthDeathPair& alpha);

enum class SimplifyPolicy { shallow_first_then_regions, regions_only };

enum class CancelMethod { standard, region };

struct CancelRecord {
    CellId birth = kNoCell;
    CellId death = kNoCell;
    int dim = 0;
    double birth_value = 0;
    double death_value = 0;
    CancelMethod method = CancelMethod::standard;
    double seconds = 0;
    int obstacle_count = 0;  // pairs in the blocking area of the persistence plane
    int move_count = 0;
};

struct SimplifyReport {
    std::vector<CancelRecord> cancelled;
    std::vector<BirthDeathPair> not_cancellable;  // off-diagonal pairs left over
    int initial_off_diagonal = 0;
    bool complete = true;  // false when the budget ran out
};

struct SimplifyOptions {
    double budget_seconds = std::numeric_limits<double>::infinity();
    // called after every cancellation; return false to stop early
    std::function<bool(ReducedState&, const CancelRecord&)> after_cancel;
};

// obstacle count m for one pair: pairs whose birth falls inside the lifetime
// band, or which dominate the pair from the lower left
int obstacle_count(const ReducedState& s, const BirthDeathPair& alpha);

// Under the two-phase policy, repeatedly cancels reversible shallow pairs
// first; both policies then cancel eligible pairs in increasing persistence
// until no cancellable pair remains.
SimplifyReport simplify_all(ReducedState& s, SimplifyPolicy policy,
                            const SimplifyOptions& opts = {});

}  // namespace topo
