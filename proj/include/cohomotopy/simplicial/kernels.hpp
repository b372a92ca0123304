#pragma once

#include "cohomotopy/simplicial/complex.hpp"

#include <cstdint>
#include <vector>

namespace cohomotopy::simplicial::kernels {

using Bits = std::vector<std::uint8_t>;

/// Face-deletion pattern of the cup-i product of a p-cochain and a q-cochain.
/// Each term deletes `left[t]` from an n-simplex to feed u and `right[t]` to feed v,
/// where n = p + q - i; positions are listed in descending order.
struct CupPlan {
    int p = 0;
    int q = 0;
    int i = 0;
    int n = 0;
    std::vector<std::vector<int>> left;
    std::vector<std::vector<int>> right;
};

CupPlan make_cup_plan(int p, int q, int i);

/// Index of the face of simplex `index` (of `degree`) with the listed positions removed.
std::size_t subface(const SimplicialComplex& k, int degree, std::size_t index, const std::vector<int>& positions);

Bits cup_i_serial(const SimplicialComplex& k, const CupPlan& plan, const Bits& u, const Bits& v);
Bits cup_i_parallel(const SimplicialComplex& k, const CupPlan& plan, const Bits& u, const Bits& v);

/// Integral coboundary through the face table.
IntVector coboundary_serial(const SimplicialComplex& k, int degree, const IntVector& u);
IntVector coboundary_parallel(const SimplicialComplex& k, int degree, const IntVector& u);

/// Mod-2 coboundary.
Bits coboundary_bits_serial(const SimplicialComplex& k, int degree, const Bits& u);
Bits coboundary_bits_parallel(const SimplicialComplex& k, int degree, const Bits& u);

/// True when the library was built with OpenMP.
bool parallel_enabled();

} // namespace cohomotopy::simplicial::kernels
