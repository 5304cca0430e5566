#include "topo/transpose.hpp"

#include <limits>
#include <stdexcept>

namespace topo {

namespace {

// no cell of dimension `dim` strictly between a and b in the h-order
bool consecutive_in_dim(const ReducedState& s, CellId a, CellId b, int dim) {
    int pa = s.pos()[a], pb = s.pos()[b];
    if (pa > pb) std::swap(pa, pb);
    for (int p = pa + 1; p < pb; ++p)
        if (s.complex().dim(s.order()[p]) == dim) return false;
    return true;
}

}  // namespace

std::optional<int> criterion_entry(const ReducedState& s, const BirthDeathPair& alpha,
                                   const BirthDeathPair& beta, CriterionSide side) {
    if (alpha.dim != beta.dim) return std::nullopt;
    if (!alpha.has_death() || !beta.has_death()) return std::nullopt;
    int n = alpha.dim;
    if (side == CriterionSide::birth) {
        if (!(s.value(beta.birth) < s.value(alpha.birth) &&
              s.value(beta.death) < s.value(alpha.death)))
            return std::nullopt;
        if (!consecutive_in_dim(s, beta.birth, alpha.birth, n)) return std::nullopt;
        if (n + 1 > s.max_dim()) return 0;
        int acc = 0;
        for (CellId x : s.primal(n + 1).V.col(alpha.death))
            acc ^= s.bd(n + 1).entry(beta.birth, x) ? 1 : 0;
        return acc;
    }
    if (!(s.value(beta.birth) > s.value(alpha.birth) && s.value(beta.death) > s.value(alpha.death)))
        return std::nullopt;
    if (!consecutive_in_dim(s, beta.death, alpha.death, n + 1)) return std::nullopt;
    int acc = 0;
    for (CellId z : s.dual(n).V.col(alpha.birth))
        acc ^= s.cobd(n).entry(beta.death, z) ? 1 : 0;
    return acc;
}

TranspositionOutcome transpose_deaths(ReducedState& s, const BirthDeathPair& alpha,
                                      const BirthDeathPair& beta) {
    if (!alpha.has_death() || !beta.has_death())
        throw std::invalid_argument("death transposition needs two finite pairs");
    if (!(s.value(alpha.birth) < s.value(beta.birth)))
        throw std::invalid_argument("role mismatch: alpha must carry the earlier birth");
    return s.transpose_adjacent(alpha.death, beta.death);
}

TranspositionOutcome transpose_births(ReducedState& s, const BirthDeathPair& alpha,
                                      const BirthDeathPair& beta) {
    double da = alpha.has_death() ? s.value(alpha.death) : std::numeric_limits<double>::infinity();
    double db = beta.has_death() ? s.value(beta.death) : std::numeric_limits<double>::infinity();
    if (!(db < da)) throw std::invalid_argument("role mismatch: alpha must carry the later death");
    return s.transpose_adjacent(alpha.birth, beta.birth);
}

TranspositionOutcome transpose_mixed(ReducedState& s, int position) {
    CellId u = s.order()[position];
    CellId w = s.order()[position + 1];
    if (s.complex().dim(u) != s.complex().dim(w))
        throw std::invalid_argument("mixed transposition needs same-dimension cells");
    if (!(s.is_birth(u) && s.is_death(w)))
        throw std::invalid_argument("expected a birth rising past a death");
    TranspositionOutcome out = s.transpose_adjacent_at(position);
    if (out.pairing_switched) throw std::logic_error("mixed transposition switched pairing");
    return out;
}

TranspositionOutcome transpose_with_vector(ReducedState& s, int position) {
    CellId u = s.order()[position];
    CellId w = s.order()[position + 1];
    bool vec = s.pair_of(u).cls == PairClass::diagonal || s.pair_of(w).cls == PairClass::diagonal;
    if (!vec) throw std::invalid_argument("neither side belongs to a vector");
    return s.transpose_adjacent_at(position);
}

}  // namespace topo
