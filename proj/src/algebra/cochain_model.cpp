#include "cohomotopy/algebra/cochain_model.hpp"

#include "cohomotopy/error.hpp"

namespace cohomotopy::algebra {

PrimaryOperation PrimaryOperation::reduced_power(const Integer& p) {
    if (!is_prime(p)) raise(ErrorCode::InvalidArgument, "reduced powers need a prime, got " + p.str());
    if (p == 2) return square(2);
    return PrimaryOperation(Kind::ReducedPower, 1, p);
}

int PrimaryOperation::degree_shift() const {
    if (kind_ == Kind::Square) return static_cast<int>(k_);
    return 2 * (static_cast<int>(p_) - 1);
}

std::string PrimaryOperation::name() const {
    if (kind_ == Kind::Square) return "Sq^" + std::to_string(k_);
    return "P^1";
}

CoefficientMap CoefficientMap::reduce(Coefficients target) {
    if (target.is_integers()) raise(ErrorCode::IncompatibleCoefficients, "reduction needs a modular target");
    return CoefficientMap(Kind::Reduce, 1, std::move(target));
}

CoefficientMap CoefficientMap::multiply(const Integer& factor, Coefficients target) {
    if (target.is_local()) raise(ErrorCode::IncompatibleCoefficients, "multiplication into Z_(p) is not supported");
    return CoefficientMap(Kind::Multiply, factor, std::move(target));
}

void CoefficientMap::check_source(const Coefficients& source) const {
    auto fail = [&] {
        raise(ErrorCode::IncompatibleCoefficients, name() + " is not defined on " + source.to_string());
    };
    if (kind_ == Kind::Reduce) {
        if (target_.is_local()) {
            if (!source.is_integers() && !(source == target_)) fail();
            return;
        }
        const Integer& b = target_.modulus();
        if (source.is_integers()) return;
        if (source.is_modular()) {
            if (source.modulus() % b != 0) fail();
            return;
        }
        Integer q;
        unsigned r = 0;
        if (!prime_power(b, q, r) || q != source.local_prime()) fail();
        return;
    }
    if (source.is_local()) fail();
    if (target_.is_integers()) {
        if (!source.is_integers()) fail();
        return;
    }
    if (source.is_integers()) return;
    if ((factor_ * source.modulus()) % target_.modulus() != 0) fail();
}

IntVector CoefficientMap::apply(const IntVector& cochain, const Coefficients& source) const {
    check_source(source);
    IntVector out = cochain;
    for (auto& x : out) {
        x *= factor_;
        if (target_.is_modular()) x = mod(x, target_.modulus());
    }
    return out;
}

std::string CoefficientMap::name() const {
    if (kind_ == Kind::Reduce) return "reduction to " + target_.to_string();
    return "multiplication by " + factor_.str() + " into " + target_.to_string();
}

std::shared_ptr<const CohomologyGroup> CochainModel::cohomology(int degree, const Coefficients& coeffs) const {
    if (degree < 1)
        raise(ErrorCode::DegreeOutOfRange, "reduced cohomology is only reported in degrees >= 1");
    return cochains().cohomology(degree, coeffs);
}

GroupHom induced_map(const CohomologyGroup& source, const CohomologyGroup& target,
                     const std::function<IntVector(const IntVector&)>& cochain_map) {
    IntMatrix m(target.generator_count(), source.generator_count());
    for (std::size_t j = 0; j < source.generator_count(); ++j)
        m.set_column(j, target.coordinates(cochain_map(source.representative(j))));
    return GroupHom(source.group(), target.group(), std::move(m));
}

GroupHom coefficient_change_matrix(const CochainModel& space, int degree, const Coefficients& source,
                                   const CoefficientMap& map) {
    map.check_source(source);
    auto from = space.cohomology(degree, source);
    auto to = space.cohomology(degree, map.target());
    return induced_map(*from, *to, [&](const IntVector& c) { return map.apply(c, source); });
}

IntVector bockstein_cochain(const CochainModel& space, const IntVector& cocycle, int degree, const Integer& p,
                            unsigned r) {
    const Integer m = pow(p, r);
    IntVector lift = cocycle;
    for (auto& x : lift) x = mod(x, m);
    IntVector image = space.cochains().apply_coboundary(degree, lift);
    for (auto& x : image) {
        if (x % m != 0)
            raise(ErrorCode::LiftFailure, "coboundary of the lift is not divisible by " + m.str());
        x = mod(x / m, p);
    }
    return image;
}

GroupHom bockstein_matrix(const CochainModel& space, int degree, const Integer& p, unsigned r) {
    auto from = space.cohomology(degree, Coefficients::modular(pow(p, r)));
    auto to = space.cohomology(degree + 1, Coefficients::modular(p));
    return induced_map(*from, *to,
                       [&](const IntVector& c) { return bockstein_cochain(space, c, degree, p, r); });
}

GroupHom primary_operation_matrix(const CochainModel& space, const PrimaryOperation& op, int degree) {
    return reduced_operation_matrix(space, op, Coefficients::modular(op.prime()), degree);
}

GroupHom reduced_operation_matrix(const CochainModel& space, const PrimaryOperation& op,
                                  const Coefficients& source, int degree) {
    const Coefficients field = Coefficients::modular(op.prime());
    auto reduce = CoefficientMap::reduce(field);
    reduce.check_source(source);
    auto from = space.cohomology(degree, source);
    auto to = space.cohomology(degree + op.degree_shift(), field);
    return induced_map(*from, *to, [&](const IntVector& c) {
        IntVector image = space.apply_primary(op, reduce.apply(c, source), degree);
        for (auto& x : image) x = mod(x, op.prime());
        return image;
    });
}

} // namespace cohomotopy::algebra
