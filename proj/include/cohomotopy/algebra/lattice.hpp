#pragma once

#include "cohomotopy/algebra/abelian_group.hpp"
#include "cohomotopy/algebra/int_matrix.hpp"

#include <optional>
#include <vector>

namespace cohomotopy::algebra {

/// A sublattice of Z^k given by a unimodular change of basis W and scale factors:
/// the basis vectors are scale[j] * W.column(active[j]).
struct ScaledBasis {
    IntMatrix W;
    IntMatrix W_inv;
    std::vector<std::size_t> active;
    IntVector scale;

    std::size_t ambient_dimension() const noexcept { return W.rows(); }
    std::size_t rank() const noexcept { return active.size(); }
    IntVector basis_vector(std::size_t j) const;
    /// Coordinates of x in this basis, or nullopt when x is not in the lattice.
    std::optional<IntVector> coordinates(const IntVector& x) const;
};

ScaledBasis full_lattice(std::size_t dimension);
/// Lattice spanned by the columns of `generators`.
ScaledBasis lattice_from_generators(const IntMatrix& generators);
/// {x in Z^cols : A x = 0}.
ScaledBasis kernel_lattice(const IntMatrix& a);
/// {x in Z^cols : A x = 0 mod m}.
ScaledBasis kernel_lattice_mod(const IntMatrix& a, const Integer& m);

/// N / R for a lattice N and a set of relation vectors R contained in N,
/// presented in invariant-factor form with explicit representatives.
class Subquotient {
public:
    /// `relations` holds ambient-coordinate vectors as columns; every column must lie
    /// in `numerator` (RelationViolation otherwise).
    Subquotient(ScaledBasis numerator, const IntMatrix& relations);

    const FinAbGroup& group() const noexcept { return group_; }
    /// Ambient representatives of the group generators (torsion first, then free).
    const std::vector<IntVector>& representatives() const noexcept { return reps_; }
    const IntVector& orders() const noexcept { return orders_; }
    std::size_t ambient_dimension() const noexcept { return numerator_.ambient_dimension(); }

    /// Coordinates of the class of x, reduced into canonical range.
    std::optional<IntVector> try_coordinates(const IntVector& x) const;
    /// Throws RelationViolation when x is outside the numerator lattice.
    IntVector coordinates(const IntVector& x) const;

private:
    ScaledBasis numerator_;
    IntMatrix transform_;          // kept rows of the relation-side Smith transform
    IntVector orders_;             // 0 for free generators
    std::vector<IntVector> reps_;
    FinAbGroup group_;
};

} // namespace cohomotopy::algebra
