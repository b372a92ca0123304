#include "cohomotopy/algebra/smith.hpp"

#include <utility>

namespace cohomotopy::algebra {

namespace {

// Elimination state; transforms are only maintained when `track` is set.
class SmithWorker {
public:
    SmithWorker(const IntMatrix& m, bool track) : a_(m), track_(track) {
        if (track_) {
            u_ = IntMatrix::identity(m.rows());
            u_inv_ = u_;
            v_ = IntMatrix::identity(m.cols());
            v_inv_ = v_;
        }
    }

    std::size_t run() {
        const std::size_t limit = std::min(a_.rows(), a_.cols());
        std::size_t t = 0;
        for (; t < limit; ++t) {
            if (!move_min_pivot(t)) break;
            for (;;) {
                if (!clear_cross(t)) {
                    move_min_pivot(t);
                    continue;
                }
                if (!enforce_divisibility(t)) break;
            }
            if (a_(t, t) < 0) negate_row(t);
        }
        return t;
    }

    IntMatrix a_, u_, u_inv_, v_, v_inv_;

private:
    // Moves the least nonzero |entry| of the block [t.., t..] to (t, t).
    bool move_min_pivot(std::size_t t) {
        std::size_t best_r = 0, best_c = 0;
        bool found = false;
        Integer best;
        for (std::size_t r = t; r < a_.rows(); ++r)
            for (std::size_t c = t; c < a_.cols(); ++c) {
                const Integer& x = a_(r, c);
                if (x == 0) continue;
                Integer ax = abs(x);
                if (!found || ax < best) {
                    best = std::move(ax);
                    best_r = r;
                    best_c = c;
                    found = true;
                    if (best == 1) goto done;
                }
            }
    done:
        if (!found) return false;
        if (best_r != t) swap_rows(t, best_r);
        if (best_c != t) swap_cols(t, best_c);
        return true;
    }

    // Reduces row t and column t against the pivot. Returns true when both are clear.
    bool clear_cross(std::size_t t) {
        bool clear = true;
        const Integer pivot = a_(t, t);
        for (std::size_t r = t + 1; r < a_.rows(); ++r) {
            if (a_(r, t) == 0) continue;
            Integer q = a_(r, t) / pivot;
            if (q != 0) add_row_multiple(r, t, -q);
            if (a_(r, t) != 0) clear = false;
        }
        for (std::size_t c = t + 1; c < a_.cols(); ++c) {
            if (a_(t, c) == 0) continue;
            Integer q = a_(t, c) / pivot;
            if (q != 0) add_col_multiple(c, t, -q);
            if (a_(t, c) != 0) clear = false;
        }
        return clear;
    }

    // If some entry of the trailing block is not divisible by the pivot, folds its row
    // into row t and returns true so elimination restarts.
    bool enforce_divisibility(std::size_t t) {
        const Integer& pivot = a_(t, t);
        for (std::size_t r = t + 1; r < a_.rows(); ++r)
            for (std::size_t c = t + 1; c < a_.cols(); ++c)
                if (a_(r, c) % pivot != 0) {
                    add_row_multiple(t, r, 1);
                    return true;
                }
        return false;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_(i, c), a_(j, c));
        if (!track_) return;
        for (std::size_t c = 0; c < u_.cols(); ++c) std::swap(u_(i, c), u_(j, c));
        for (std::size_t r = 0; r < u_inv_.rows(); ++r) std::swap(u_inv_(r, i), u_inv_(r, j));
    }

    void swap_cols(std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_(r, i), a_(r, j));
        if (!track_) return;
        for (std::size_t r = 0; r < v_.rows(); ++r) std::swap(v_(r, i), v_(r, j));
        for (std::size_t c = 0; c < v_inv_.cols(); ++c) std::swap(v_inv_(i, c), v_inv_(j, c));
    }

    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < a_.cols(); ++c) a_(i, c) = -a_(i, c);
        if (!track_) return;
        for (std::size_t c = 0; c < u_.cols(); ++c) u_(i, c) = -u_(i, c);
        for (std::size_t r = 0; r < u_inv_.rows(); ++r) u_inv_(r, i) = -u_inv_(r, i);
    }

    // row_dst += q * row_src
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& q) {
        for (std::size_t c = 0; c < a_.cols(); ++c)
            if (a_(src, c) != 0) a_(dst, c) += q * a_(src, c);
        if (!track_) return;
        for (std::size_t c = 0; c < u_.cols(); ++c)
            if (u_(src, c) != 0) u_(dst, c) += q * u_(src, c);
        // U^{-1} <- U^{-1} E^{-1}: column src -= q * column dst
        for (std::size_t r = 0; r < u_inv_.rows(); ++r)
            if (u_inv_(r, dst) != 0) u_inv_(r, src) -= q * u_inv_(r, dst);
    }

    // col_dst += q * col_src
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& q) {
        for (std::size_t r = 0; r < a_.rows(); ++r)
            if (a_(r, src) != 0) a_(r, dst) += q * a_(r, src);
        if (!track_) return;
        for (std::size_t r = 0; r < v_.rows(); ++r)
            if (v_(r, src) != 0) v_(r, dst) += q * v_(r, src);
        // V^{-1} <- F^{-1} V^{-1}: row src -= q * row dst
        for (std::size_t c = 0; c < v_inv_.cols(); ++c)
            if (v_inv_(dst, c) != 0) v_inv_(src, c) -= q * v_inv_(dst, c);
    }

    bool track_;
};

} // namespace

IntVector SmithDecomposition::invariant_factors() const {
    IntVector d;
    d.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i) d.push_back(S(i, i));
    return d;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    SmithWorker w(m, true);
    SmithDecomposition out;
    out.rank = w.run();
    out.S = std::move(w.a_);
    out.U = std::move(w.u_);
    out.U_inv = std::move(w.u_inv_);
    out.V = std::move(w.v_);
    out.V_inv = std::move(w.v_inv_);
    return out;
}

IntVector smith_invariants(const IntMatrix& m) {
    SmithWorker w(m, false);
    const std::size_t rank = w.run();
    IntVector d;
    d.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i) d.push_back(w.a_(i, i));
    return d;
}

} // namespace cohomotopy::algebra
