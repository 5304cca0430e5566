#include "topo/reduced_state.hpp"

#include <algorithm>
#include <stdexcept>

namespace topo {

ReducedState::ReducedState(const LefschetzComplex& X, const DiscreteMorseFunction& h)
    : X_(&X), h_(h) {
    ComplexReport cr = validate_complex(X);
    if (!cr.valid()) throw std::invalid_argument("invalid complex");
    DmfReport dr = validate_dmf(X, h);
    if (!dr.valid()) throw std::invalid_argument("invalid discrete Morse function");
    HOrder ord = h_order(X, h);
    order_ = ord.order;
    pos_ = ord.pos;
    max_dim_ = std::max(X.max_dim(), 0);
    build_matrices();
    reduce_all();
    extract_pairing();
}

std::vector<int> ReducedState::rev_pos() const {
    std::vector<int> rp(pos_.size());
    int n = static_cast<int>(pos_.size());
    for (size_t c = 0; c < pos_.size(); ++c) rp[c] = n - 1 - pos_[c];
    return rp;
}

void ReducedState::build_matrices() {
    bd_.clear();
    cobd_.clear();
    HOrder ord{order_, pos_};
    for (int n = 0; n <= max_dim_; ++n) {
        bd_.push_back(boundary_matrix(*X_, ord, n));
        cobd_.push_back(coboundary_matrix(*X_, ord, n));
    }
}

std::vector<CellId> ReducedState::cols_in_order(const Z2SparseMatrix& M, bool reversed) const {
    std::vector<CellId> cols = M.col_ids();
    if (reversed)
        std::sort(cols.begin(), cols.end(), [&](CellId a, CellId b) { return pos_[a] > pos_[b]; });
    else
        std::sort(cols.begin(), cols.end(), [&](CellId a, CellId b) { return pos_[a] < pos_[b]; });
    return cols;
}

void ReducedState::rebuild_primal(int n) {
    primal_[n] = lazy_reduce(bd_[n], cols_in_order(bd_[n], false), pos_);
}

void ReducedState::rebuild_dual(int n) {
    dual_[n] = lazy_reduce(cobd_[n], cols_in_order(cobd_[n], true), rev_pos());
}

void ReducedState::reduce_all() {
    primal_.assign(max_dim_ + 1, ReductionTriple{});
    dual_.assign(max_dim_ + 1, ReductionTriple{});
    for (int n = 0; n <= max_dim_; ++n) {
        rebuild_primal(n);
        rebuild_dual(n);
    }
}

void ReducedState::extract_pairing() {
    partner_.assign(X_->size(), kNoCell);
    for (int n = 1; n <= max_dim_; ++n) {
        for (CellId y : bd_[n].col_ids()) {
            auto l = primal_[n].R.low(y, pos_);
            if (l) {
                partner_[*l] = y;
                partner_[y] = *l;
            }
        }
    }
    // dual characterization must agree
    std::vector<int> rp = rev_pos();
    for (int n = 0; n <= max_dim_; ++n) {
        for (CellId x : cobd_[n].col_ids()) {
            auto l = dual_[n].R.low(x, rp);
            CellId expect = l ? *l : kNoCell;
            CellId have = partner_[x];
            if (have != kNoCell && X_->dim(have) < X_->dim(x)) have = kNoCell;  // x is a death
            if (have != expect)
                throw std::logic_error("primal/dual pairing mismatch (reduction bug)");
        }
    }
}

bool ReducedState::is_birth(CellId c) const { return primal_[X_->dim(c)].R.col_zero(c); }

BirthDeathPair ReducedState::pair_of(CellId c) const {
    BirthDeathPair p;
    CellId mate = partner_[c];
    CellId birth = c, death = mate;
    if (mate != kNoCell && X_->dim(mate) < X_->dim(c)) std::swap(birth, death);
    p.birth = birth;
    p.death = death;
    p.dim = X_->dim(birth);
    if (death == kNoCell)
        p.cls = PairClass::essential;
    else
        p.cls = (h_(birth) == h_(death)) ? PairClass::diagonal : PairClass::off_diagonal;
    return p;
}

std::vector<BirthDeathPair> ReducedState::pairs() const {
    std::vector<BirthDeathPair> out;
    for (CellId c = 0; c < X_->size(); ++c) {
        BirthDeathPair p = pair_of(c);
        if (p.birth == c) out.push_back(p);
    }
    return out;
}

CombinatorialVectorField ReducedState::field() const {
    CombinatorialVectorField V;
    V.partner.assign(X_->size(), kNoCell);
    for (CellId c = 0; c < X_->size(); ++c) {
        CellId m = partner_[c];
        if (m != kNoCell && h_(c) == h_(m)) V.partner[c] = m;
    }
    return V;
}

bool ReducedState::hom_relation(CellId x, CellId y) const {
    if (x == y) return false;
    int n = X_->dim(x);
    if (X_->dim(y) != n) return false;
    return primal_[n].u_entry(x, y);
}

bool ReducedState::cohom_relation(CellId x, CellId y) const {
    if (x == y) return false;
    int n = X_->dim(x);
    if (X_->dim(y) != n) return false;
    return dual_[n].u_entry(x, y);
}

void ReducedState::swap_order(CellId u, CellId w) {
    int pu = pos_[u], pw = pos_[w];
    std::swap(order_[pu], order_[pw]);
    std::swap(pos_[u], pos_[w]);
    std::swap(h_.values[u], h_.values[w]);
}

TranspositionOutcome ReducedState::transpose_adjacent_at(int position) {
    if (position < 0 || position + 1 >= static_cast<int>(order_.size()))
        throw std::invalid_argument("transposition position out of range");
    CellId u = order_[position];
    CellId w = order_[position + 1];
    if (X_->has_boundary(u, w) || X_->has_boundary(w, u))
        throw std::invalid_argument("cannot transpose incident cells");

    bool vector_event = false;
    if (partner_[u] != kNoCell && h_(u) == h_(partner_[u])) vector_event = true;
    if (partner_[w] != kNoCell && h_(w) == h_(partner_[w])) vector_event = true;

    TranspositionOutcome out;
    if (X_->dim(u) == X_->dim(w)) {
        out = same_dim_swap(u, w);
    } else {
        out.kind = TranspositionKind::disjoint;
        swap_order(u, w);
    }
    if (vector_event) out.kind = TranspositionKind::vector_involving;
    return out;
}

TranspositionOutcome ReducedState::transpose_adjacent(CellId a, CellId b) {
    int pa = pos_[a], pb = pos_[b];
    if (pa > pb) std::swap(pa, pb);
    if (pb != pa + 1) throw std::invalid_argument("cells are not adjacent in the h-order");
    return transpose_adjacent_at(pa);
}

TranspositionOutcome ReducedState::same_dim_swap(CellId u, CellId w) {
    TranspositionOutcome out;
    int n = X_->dim(u);
    bool u_birth = is_birth(u);
    bool w_birth = is_birth(w);

    auto switch_rebuild = [&](bool lo, bool hi) {
        swap_order(u, w);
        if (lo) {
            rebuild_primal(n);
            if (n >= 1) rebuild_dual(n - 1);
        }
        if (hi) {
            if (n + 1 <= max_dim_) rebuild_primal(n + 1);
            rebuild_dual(n);
        }
        out.rebuilt = true;
        extract_pairing();
        out.pairing_switched = true;
    };

    if (!u_birth && !w_birth) {
        out.kind = TranspositionKind::death_death;
        // switch: the left column fed the right one
        if (primal_[n].u_entry(u, w)) {
            switch_rebuild(true, false);
            return out;
        }
        // roles: alpha carries the earlier birth
        CellId bu = partner_[u], bw = partner_[w];
        bool u_is_alpha = pos_[bu] < pos_[bw];
        CellId balpha = u_is_alpha ? bu : bw;
        CellId bbeta = u_is_alpha ? bw : bu;
        CellId dbeta = u_is_alpha ? w : u;
        bool fire = false;
        if (n >= 1) {
            fire = dual_[n - 1].u_entry(bbeta, balpha);
            if (dbeta == w) {
                int entry = dual_[n - 1].R.entry(w, balpha) ? 1 : 0;
                out.criterion_value = entry;
                fire = fire || entry == 1;
            }
        }
        if (fire) {
            dual_[n - 1].u_add_row(bbeta, balpha);  // U[bbeta,:] += U[balpha,:]
            dual_[n - 1].V.add_col(bbeta, balpha);  // V[:,balpha] += V[:,bbeta]
            dual_[n - 1].R.add_col(bbeta, balpha);
            out.rows_updated.push_back({MatrixTag::U_dual, n - 1, bbeta});
            out.rows_updated.push_back({MatrixTag::V_dual, n - 1, balpha});
            out.rows_updated.push_back({MatrixTag::R_dual, n - 1, balpha});
        }
        swap_order(u, w);
        return out;
    }

    if (u_birth && w_birth) {
        out.kind = TranspositionKind::birth_birth;
        CellId du = partner_[u], dw = partner_[w];
        bool swch = dual_[n].u_entry(w, u);
        if (!swch && du == kNoCell && dw != kNoCell && n + 1 <= max_dim_ &&
            primal_[n + 1].R.entry(u, dw))
            swch = true;  // an essential class takes over the death
        if (swch) {
            switch_rebuild(false, true);
            return out;
        }
        // roles: alpha carries the later death (missing death counts as +inf)
        bool u_is_alpha;
        if (du == kNoCell)
            u_is_alpha = true;
        else if (dw == kNoCell)
            u_is_alpha = false;
        else
            u_is_alpha = pos_[du] > pos_[dw];
        CellId dalpha = u_is_alpha ? du : dw;
        CellId dbeta = u_is_alpha ? dw : du;
        CellId bbeta = u_is_alpha ? w : u;
        bool fire = false;
        if (dalpha != kNoCell && dbeta != kNoCell && n + 1 <= max_dim_) {
            fire = primal_[n + 1].u_entry(dbeta, dalpha);
            if (bbeta == u) {
                int entry = primal_[n + 1].R.entry(u, dalpha) ? 1 : 0;
                out.criterion_value = entry;
                fire = fire || entry == 1;
            }
        }
        if (fire) {
            primal_[n + 1].u_add_row(dbeta, dalpha);  // U[dbeta,:] += U[dalpha,:]
            primal_[n + 1].V.add_col(dbeta, dalpha);  // V[:,dalpha] += V[:,dbeta]
            primal_[n + 1].R.add_col(dbeta, dalpha);
            out.rows_updated.push_back({MatrixTag::U, n + 1, dbeta});
            out.rows_updated.push_back({MatrixTag::V, n + 1, dalpha});
            out.rows_updated.push_back({MatrixTag::R, n + 1, dalpha});
        }
        swap_order(u, w);
        return out;
    }

    out.kind = TranspositionKind::mixed;
    if (!u_birth && w_birth) {
        // a death sinking below a birth may flip both their roles
        CellId bu = partner_[u];
        CellId dw = partner_[w];
        bool swch = primal_[n].u_entry(u, w) || dual_[n].u_entry(w, u);
        if (!swch && dw != kNoCell && n + 1 <= max_dim_ && primal_[n + 1].R.entry(u, dw))
            swch = true;
        if (!swch && n >= 1 && dual_[n - 1].R.entry(w, bu)) swch = true;
        if (swch) {
            switch_rebuild(true, true);
            return out;
        }
    }
    swap_order(u, w);
    return out;
}

std::vector<TranspositionOutcome> ReducedState::set_values(const DiscreteMorseFunction& h2,
                                                           bool validate) {
    if (h2.size() != X_->size()) throw std::invalid_argument("filter size mismatch");
    if (validate) {
        DmfReport dr = validate_dmf(*X_, h2);
        if (!dr.valid()) throw std::invalid_argument("target filter is not a dMf");
    }
    HOrder target = h_order(*X_, h2);
    const std::vector<int>& tp = target.pos;
    std::vector<TranspositionOutcome> outcomes;
    int N = static_cast<int>(order_.size());
    for (int i = 1; i < N; ++i) {
        int j = i;
        while (j > 0 && tp[order_[j - 1]] > tp[order_[j]]) {
            outcomes.push_back(transpose_adjacent_at(j - 1));
            --j;
        }
    }
    h_ = h2;
    return outcomes;
}

void ReducedState::apply_reversal(const GradientPath& path, const DiscreteMorseFunction& h2) {
    if (path.size() < 2 || path.size() % 2 != 0)
        throw std::invalid_argument("reversal path must have even length");
    int k = X_->dim(path.back());
    // new matching along the path: (path[2i], path[2i+1])
    for (size_t i = 0; i + 1 < path.size(); i += 2) {
        partner_[path[i]] = path[i + 1];
        partner_[path[i + 1]] = path[i];
    }
    h_ = h2;
    HOrder ord = h_order(*X_, h2);
    order_ = ord.order;
    pos_ = ord.pos;
    // only the (k, k+1) interface is sensitive to the reordering
    if (k + 1 <= max_dim_) rebuild_primal(k + 1);
    rebuild_dual(k);
    extract_pairing();
}

bool ReducedState::verify_all() const {
    std::vector<int> rp = rev_pos();
    for (int n = 0; n <= max_dim_; ++n) {
        auto cols = cols_in_order(bd_[n], false);
        if (!verify_decomposition(bd_[n], primal_[n], cols, pos_)) return false;
        auto dcols = cols_in_order(cobd_[n], true);
        if (!verify_decomposition(cobd_[n], dual_[n], dcols, rp)) return false;
    }
    return true;
}

}  // namespace topo
