#pragma once

#include "cohomotopy/algebra/int_matrix.hpp"

namespace cohomotopy::algebra {

/// U * M * V = S with U, V unimodular and S diagonal with d1 | d2 | ... | dk, 0, ..., 0.
/// The inverses of both transforms are carried along since every quotient
/// computation needs them.
struct SmithDecomposition {
    IntMatrix U;
    IntMatrix S;
    IntMatrix V;
    IntMatrix U_inv;
    IntMatrix V_inv;
    std::size_t rank = 0;

    /// Nonzero diagonal entries d1 | d2 | ... | d_rank.
    IntVector invariant_factors() const;
};

/// Pivoting: the nonzero entry of least absolute value in the active block,
/// first in row-major order. Deterministic for fixed input.
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Invariant factors only; skips the transform bookkeeping.
IntVector smith_invariants(const IntMatrix& m);

} // namespace cohomotopy::algebra
