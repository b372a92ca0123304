#pragma once

#include "cohomotopy/algebra/abelian_group.hpp"

#include <vector>

namespace cohomotopy::engine {

using algebra::FinAbGroup;
using algebra::Integer;

/// Partition (weakly decreasing, positive parts).
using Partition = std::vector<int>;

/// Littlewood-Richardson coefficient c^lambda_{mu nu}.
Integer littlewood_richardson(const Partition& lambda, const Partition& mu, const Partition& nu);

/// All abelian groups E (up to isomorphism) with a subgroup isomorphic to T and quotient
/// isomorphic to H. T must be finite; a free part of H splits off. Throws TooLarge when
/// |T| * |tors H| exceeds 2^20. Sorted by number of invariant factors, then by factors.
std::vector<FinAbGroup> enumerate_extensions(const FinAbGroup& t, const FinAbGroup& h);

} // namespace cohomotopy::engine
