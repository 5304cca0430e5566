#pragma once

#include <optional>
#include <vector>

#include "topo/reduction.hpp"
#include "topo/vector_field.hpp"

namespace topo {

enum class PairClass { off_diagonal, diagonal, essential };

struct BirthDeathPair {
    CellId birth = kNoCell;
    CellId death = kNoCell;  // kNoCell for essential homology generators
    int dim = 0;
    PairClass cls = PairClass::essential;

    bool has_death() const { return death != kNoCell; }
    bool operator==(const BirthDeathPair&) const = default;
};

enum class TranspositionKind { death_death, birth_birth, mixed, vector_involving, disjoint };

enum class MatrixTag { U, V, R, U_dual, V_dual, R_dual };

struct UpdatedEntry {
    MatrixTag matrix;
    int dim;     // column dimension of the matrix
    CellId id;   // row (U) or column (V, R) that changed
};

struct TranspositionOutcome {
    TranspositionKind kind = TranspositionKind::disjoint;
    bool pairing_switched = false;
    bool rebuilt = false;  // non-local fallback (switch paths) re-reduced an interface
    std::vector<UpdatedEntry> rows_updated;
    std::optional<int> criterion_value;
};

// Mutable engine state: per-dimension boundary and coboundary matrices with
// their lazy-reduction triples, the pairing, and the h-order permutation.
// Cell ids never change; transpositions permute the order and patch the
// triples so that they always equal a from-scratch reduction of the permuted
// matrices. Single writer; copy the object for a read-only snapshot.
class ReducedState {
  public:
    ReducedState(const LefschetzComplex& X, const DiscreteMorseFunction& h);

    const LefschetzComplex& complex() const { return *X_; }
    const DiscreteMorseFunction& dmf() const { return h_; }
    const std::vector<CellId>& order() const { return order_; }
    const std::vector<int>& pos() const { return pos_; }
    std::vector<int> rev_pos() const;
    double value(CellId c) const { return h_.values[c]; }
    int max_dim() const { return max_dim_; }

    const Z2SparseMatrix& bd(int n) const { return bd_[n]; }
    const Z2SparseMatrix& cobd(int n) const { return cobd_[n]; }
    const ReductionTriple& primal(int n) const { return primal_[n]; }
    const ReductionTriple& dual(int n) const { return dual_[n]; }

    CellId partner(CellId c) const { return partner_[c]; }
    bool is_birth(CellId c) const;  // zero reduced boundary column
    bool is_death(CellId c) const { return !is_birth(c); }
    BirthDeathPair pair_of(CellId c) const;
    std::vector<BirthDeathPair> pairs() const;

    // the vector field of the current filter (diagonal pairs)
    CombinatorialVectorField field() const;

    bool hom_relation(CellId x, CellId y) const;    // U[x,y], x != y, same dim
    bool cohom_relation(CellId x, CellId y) const;  // dual U[x,y]

    // Swaps the cells at positions i, i+1 of the h-order (their filter values
    // are exchanged as well) and updates every decomposition incrementally.
    // Throws if the two cells are incident.
    TranspositionOutcome transpose_adjacent_at(int position);
    TranspositionOutcome transpose_adjacent(CellId a, CellId b);

    // Replaces the filter with h2, realizing the order change as a sequence
    // of adjacent transpositions through the engine.
    std::vector<TranspositionOutcome> set_values(const DiscreteMorseFunction& h2,
                                                 bool validate = true);

    // Re-pairs the cells along a reversed path and re-reduces the two
    // affected interfaces; all other decompositions provably do not change.
    void apply_reversal(const GradientPath& path, const DiscreteMorseFunction& h2);

    // full invariant check against verify_decomposition (slow; for tests)
    bool verify_all() const;

  private:
    void build_matrices();
    void reduce_all();
    void rebuild_primal(int n);
    void rebuild_dual(int n);
    void extract_pairing();

    std::vector<CellId> cols_in_order(const Z2SparseMatrix& M, bool reversed) const;

    TranspositionOutcome same_dim_swap(CellId u, CellId w);
    void swap_order(CellId u, CellId w);

    const LefschetzComplex* X_;
    DiscreteMorseFunction h_;
    std::vector<CellId> order_;
    std::vector<int> pos_;
    int max_dim_ = 0;
    std::vector<Z2SparseMatrix> bd_;      // index = column dimension n
    std::vector<Z2SparseMatrix> cobd_;    // index = column dimension n
    std::vector<ReductionTriple> primal_;
    std::vector<ReductionTriple> dual_;
    std::vector<CellId> partner_;
};

}  // namespace topo
