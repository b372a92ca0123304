#pragma once

#include "cohomotopy/algebra/cohomology.hpp"
#include "cohomotopy/algebra/group_hom.hpp"

#include <functional>
#include <memory>
#include <string>

namespace cohomotopy::algebra {

/// Mod-p primary operation: Sq^k at p = 2, or the first reduced power P^1 at p
/// (P^1 at p = 2 is Sq^2).
class PrimaryOperation {
public:
    enum class Kind { Square, ReducedPower };

    static PrimaryOperation square(unsigned k) { return PrimaryOperation(Kind::Square, k, 2); }
    static PrimaryOperation reduced_power(const Integer& p);

    Kind kind() const noexcept { return kind_; }
    unsigned square_index() const noexcept { return k_; }
    const Integer& prime() const noexcept { return p_; }
    int degree_shift() const;
    std::string name() const;

private:
    PrimaryOperation(Kind kind, unsigned k, Integer p) : kind_(kind), k_(k), p_(std::move(p)) {}

    Kind kind_;
    unsigned k_;
    Integer p_;
};

/// Coefficient homomorphism acting on cochains: reduction Z/a -> Z/b (b | a, or any b
/// from Z and the p-power b from Z_(p)), or multiplication by a factor Z/a -> Z/b
/// (requires b | factor * a).
class CoefficientMap {
public:
    enum class Kind { Reduce, Multiply };

    static CoefficientMap reduce(Coefficients target);
    static CoefficientMap multiply(const Integer& factor, Coefficients target);

    Kind kind() const noexcept { return kind_; }
    const Integer& factor() const noexcept { return factor_; }
    const Coefficients& target() const noexcept { return target_; }

    /// Throws IncompatibleCoefficients when undefined on `source`.
    void check_source(const Coefficients& source) const;
    IntVector apply(const IntVector& cochain, const Coefficients& source) const;
    std::string name() const;

private:
    CoefficientMap(Kind kind, Integer factor, Coefficients target)
        : kind_(kind), factor_(std::move(factor)), target_(std::move(target)) {}

    Kind kind_;
    Integer factor_;
    Coefficients target_;
};

/// A space presented by an integral cochain complex that computes its reduced
/// cohomology, together with cochain-level mod-p primary operations on cocycles.
class CochainModel {
public:
    virtual ~CochainModel() = default;

    virtual std::string name() const = 0;
    virtual int dimension() const = 0;
    virtual const CochainComplex& cochains() const = 0;
    /// Mod-p operation on a mod-p cocycle; the result is a mod-p cocycle of degree
    /// `degree + op.degree_shift()`. Throws UnsupportedOperation when unavailable.
    virtual IntVector apply_primary(const PrimaryOperation& op, const IntVector& cocycle, int degree) const = 0;

    /// Reduced cohomology; degree must be >= 1 (DegreeOutOfRange otherwise).
    std::shared_ptr<const CohomologyGroup> cohomology(int degree, const Coefficients& coeffs) const;
};

/// Matrix of the map induced by a cochain map between two cohomology groups.
GroupHom induced_map(const CohomologyGroup& source, const CohomologyGroup& target,
                     const std::function<IntVector(const IntVector&)>& cochain_map);

GroupHom coefficient_change_matrix(const CochainModel& space, int degree, const Coefficients& source,
                                   const CoefficientMap& map);

/// Bockstein of 0 -> Z/p -> Z/p^{r+1} -> Z/p^r -> 0 on a mod-p^r cocycle: lift, apply
/// the integral coboundary, divide by p^r, reduce mod p.
IntVector bockstein_cochain(const CochainModel& space, const IntVector& cocycle, int degree, const Integer& p,
                            unsigned r);
GroupHom bockstein_matrix(const CochainModel& space, int degree, const Integer& p, unsigned r);

/// The operation on mod-p cohomology, H^degree(Z/p) -> H^{degree+shift}(Z/p).
GroupHom primary_operation_matrix(const CochainModel& space, const PrimaryOperation& op, int degree);

/// The operation precomposed with reduction from `source` coefficients:
/// H^degree(source) -> H^{degree+shift}(Z/p). For op = P^1 this is P^1_G.
GroupHom reduced_operation_matrix(const CochainModel& space, const PrimaryOperation& op,
                                  const Coefficients& source, int degree);

} // namespace cohomotopy::algebra
