#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "topo/dmf.hpp"

namespace topo {

// Partition of the cell set into critical singletons and facet-cofacet
// vectors. partner[c] == kNoCell marks a critical cell; otherwise (c,
// partner[c]) with the lower-dimensional cell first is a vector.
struct CombinatorialVectorField {
    std::vector<CellId> partner;

    bool is_critical(CellId c) const { return partner[c] == kNoCell; }
    int size() const { return static_cast<int>(partner.size()); }

    std::vector<CellId> criticals() const;
    // (facet, cofacet) pairs
    std::vector<std::pair<CellId, CellId>> vectors(const LefschetzComplex& X) const;

    bool operator==(const CombinatorialVectorField&) const = default;
};

// Arcs of the induced digraph leaving c: the explicit arc to the vector
// partner when c is the lower cell, and implicit arcs to every facet except a
// vector partner.
std::vector<CellId> field_arcs(const LefschetzComplex& X, const CombinatorialVectorField& V,
                               CellId c);

// Topological-sort acyclicity check of the induced digraph.
bool is_gradient(const LefschetzComplex& X, const CombinatorialVectorField& V);

// Classes of a valid dMf, i.e. nonempty value preimages. Throws if a class is
// not a facet-cofacet pair or singleton, or if the result is not gradient.
CombinatorialVectorField induced_vector_field(const LefschetzComplex& X,
                                              const DiscreteMorseFunction& h);

struct PathCount {
    std::uint64_t count = 0;  // saturated at cap
    int parity = 0;
    bool unique() const { return count == 1; }
};

// Paths from `from` to `to` in the induced digraph restricted to dimensions
// {dim to, dim to + 1}. from == to counts the empty path. Count saturates at
// cap; parity is exact (separate Z2 dynamic program). Throws if V has a cycle.
PathCount count_paths(const LefschetzComplex& X, const CombinatorialVectorField& V, CellId from,
                      CellId to, std::uint64_t cap);

// All cells reachable from c in the full induced digraph (c included).
std::vector<char> reachable_from(const LefschetzComplex& X, const CombinatorialVectorField& V,
                                 CellId c);
// All cells that reach c (c included).
std::vector<char> reaching(const LefschetzComplex& X, const CombinatorialVectorField& V, CellId c);

using GradientPath = std::vector<CellId>;  // alternating cells along arcs

// The unique path from top to bottom when it exists.
std::optional<GradientPath> unique_path(const LefschetzComplex& X,
                                        const CombinatorialVectorField& V, CellId top,
                                        CellId bottom);

// Complex over the critical cells; boundary coefficient = gradient path
// parity between criticals of adjacent dimension. Cell ids are reused from X
// (non-critical ids become isolated unused slots in the id space), so the
// returned complex carries its own id remapping.
struct MorseComplex {
    LefschetzComplex complex;
    std::vector<CellId> to_morse;    // X id -> morse id or kNoCell
    std::vector<CellId> from_morse;  // morse id -> X id
};

MorseComplex morse_complex(const LefschetzComplex& X, const CombinatorialVectorField& V);

// Reverses the matching along a gradient path between two critical cells.
// path runs from the top cell (dim k+1) down to the bottom cell (dim k) and
// must be the unique such path; both endpoints must be critical. The two
// endpoints become matched and the result is again gradient.
CombinatorialVectorField reverse_path(const LefschetzComplex& X,
                                      const CombinatorialVectorField& V, const GradientPath& path);

}  // namespace topo
