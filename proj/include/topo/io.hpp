#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "topo/regions.hpp"

namespace topo {

struct ComplexDocument {
    LefschetzComplex complex;
    std::optional<DiscreteMorseFunction> values;
};

// JSON schema: { "cells": [ {"id": str, "dim": int, "facets": [str...]} ...],
//                "values": { id: number, ... } }   (values optional)
ComplexDocument parse_complex(const std::string& text);
std::string emit_complex(const LefschetzComplex& X, const DiscreteMorseFunction* h);

// full d-simplex: one cell per nonempty vertex subset
LefschetzComplex simplex_skeleton(int d, int cell_budget = 1 << 14);

// Deterministic injective filter from a seeded random linear extension of the
// face poset. banded sorts cells by dimension first so each dimension
// occupies its own value band (always a valid extension).
DiscreteMorseFunction random_dmf(const LefschetzComplex& X, std::uint64_t seed,
                                 bool banded = false);
bool bands_separated(const LefschetzComplex& X, const DiscreteMorseFunction& h);

enum class DiagramFormat { json, csv, svg };

// pairs + relations (+ regions of off-diagonal pairs when requested)
std::string emit_diagram(const ReducedState& s, DiagramFormat format, bool with_regions = false);

}  // namespace topo
