#pragma once

#include "cohomotopy/simplicial/complex.hpp"

namespace cohomotopy::simplicial {

using algebra::CoefficientMap;
using algebra::GroupHom;

struct Cochain {
    const SimplicialComplex* complex = nullptr;
    int degree = 0;
    Coefficients coeffs = Coefficients::integers();
    IntVector values;
};

/// A cocycle together with the coordinates of its class.
struct CohClass {
    Cochain representative;
    IntVector coordinates;
};

/// Validates the length and reduces modular values into [0, m).
Cochain make_cochain(const SimplicialComplex& k, int degree, const Coefficients& coeffs, IntVector values);
Cochain coboundary(const Cochain& u);

/// Throws InvalidArgument when the cochain is not a cocycle.
CohClass class_of(const Cochain& cocycle);
CohClass class_from_coordinates(const SimplicialComplex& k, int degree, const Coefficients& coeffs,
                                const IntVector& coordinates);

/// Mod-2 cup-i product, of degree deg u + deg v - i (MixedComplexes, BadIndex).
Cochain cup_i(const Cochain& u, const Cochain& v, unsigned i);
/// Sq^k on a mod-2 cochain of degree n: u cup_{n-k} u, zero for k > n.
Cochain steenrod_square_cochain(unsigned k, const Cochain& u);

/// WrongCoefficients unless c is a mod-2 class.
CohClass steenrod_square(unsigned k, const CohClass& c);
/// beta_r of a mod-p^r class (WrongCoefficients otherwise).
CohClass bockstein(unsigned r, const CohClass& c);
CohClass coefficient_change(const CohClass& c, const CoefficientMap& map);

/// An operation on the cohomology of a complex, for matrix extraction.
class InducedOperation {
public:
    enum class Kind { Square, Bockstein, CoefficientChange, ReducedSquare };

    static InducedOperation square(unsigned k);
    static InducedOperation bockstein(const Integer& p, unsigned r);
    static InducedOperation coefficient_change(Coefficients source, CoefficientMap map);
    /// Sq^2 after reduction mod 2 from `source` coefficients (the p = 2 reduced power of G).
    static InducedOperation reduced_square(Coefficients source);

    Kind kind() const noexcept { return kind_; }
    std::string name() const;

private:
    friend GroupHom induced_operation_matrix(const SimplicialComplex&, const InducedOperation&, int);

    InducedOperation(Kind kind, unsigned k, Integer p, unsigned r, Coefficients source, CoefficientMap map)
        : kind_(kind), k_(k), p_(std::move(p)), r_(r), source_(std::move(source)), map_(std::move(map)) {}

    Kind kind_;
    unsigned k_ = 0;
    Integer p_ = 2;
    unsigned r_ = 1;
    Coefficients source_ = Coefficients::modular(2);
    CoefficientMap map_ = CoefficientMap::reduce(Coefficients::modular(2));
};

GroupHom induced_operation_matrix(const SimplicialComplex& k, const InducedOperation& op, int n);

} // namespace cohomotopy::simplicial
