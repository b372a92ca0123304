#include "cohomotopy/simplicial/operations.hpp"

#include "cohomotopy/error.hpp"
#include "cohomotopy/simplicial/kernels.hpp"

namespace cohomotopy::simplicial {

namespace {

const Coefficients kMod2 = Coefficients::modular(2);

kernels::Bits to_bits(const IntVector& v) {
    kernels::Bits out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<std::uint8_t>(algebra::mod(v[i], 2) != 0);
    return out;
}

IntVector from_bits(const kernels::Bits& b) {
    IntVector out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = b[i];
    return out;
}

IntVector square_values(const SimplicialComplex& k, unsigned sq, const IntVector& u, int degree) {
    const int target = degree + static_cast<int>(sq);
    if (static_cast<int>(sq) > degree) return IntVector(k.count(target));
    auto plan = kernels::make_cup_plan(degree, degree, degree - static_cast<int>(sq));
    auto bits = to_bits(u);
    return from_bits(kernels::cup_i_parallel(k, plan, bits, bits));
}

void require_mod2(const Coefficients& c) {
    if (!(c == kMod2)) raise(ErrorCode::WrongCoefficients, "Steenrod squares need Z/2 coefficients, got " + c.to_string());
}

} // namespace

IntVector SimplicialComplex::apply_primary(const algebra::PrimaryOperation& op, const IntVector& cocycle,
                                           int degree) const {
    if (op.kind() != algebra::PrimaryOperation::Kind::Square)
        raise(ErrorCode::UnsupportedOperation,
              op.name() + " at p = " + op.prime().str() + " has no cochain-level formula on simplicial complexes");
    if (cocycle.size() != count(degree)) raise(ErrorCode::InvalidArgument, "cochain length does not match the complex");
    return square_values(*this, op.square_index(), cocycle, degree);
}

Cochain make_cochain(const SimplicialComplex& k, int degree, const Coefficients& coeffs, IntVector values) {
    if (values.size() != k.count(degree)) raise(ErrorCode::InvalidArgument, "cochain length does not match the complex");
    if (coeffs.is_modular())
        for (auto& x : values) x = algebra::mod(x, coeffs.modulus());
    return Cochain{&k, degree, coeffs, std::move(values)};
}

Cochain coboundary(const Cochain& u) {
    return make_cochain(*u.complex, u.degree + 1, u.coeffs, kernels::coboundary_parallel(*u.complex, u.degree, u.values));
}

CohClass class_of(const Cochain& cocycle) {
    auto h = cocycle.complex->cohomology(cocycle.degree, cocycle.coeffs);
    return CohClass{cocycle, h->coordinates(cocycle.values)};
}

CohClass class_from_coordinates(const SimplicialComplex& k, int degree, const Coefficients& coeffs,
                                const IntVector& coordinates) {
    auto h = k.cohomology(degree, coeffs);
    IntVector coords = h->group().normalize(coordinates);
    return CohClass{make_cochain(k, degree, coeffs, h->cochain_from(coords)), coords};
}

Cochain cup_i(const Cochain& u, const Cochain& v, unsigned i) {
    if (u.complex != v.complex) raise(ErrorCode::MixedComplexes, "cup-i of cochains on different complexes");
    if (static_cast<int>(i) > u.degree || static_cast<int>(i) > v.degree)
        raise(ErrorCode::BadIndex, "cup-" + std::to_string(i) + " needs i <= both degrees");
    auto plan = kernels::make_cup_plan(u.degree, v.degree, static_cast<int>(i));
    auto out = kernels::cup_i_parallel(*u.complex, plan, to_bits(u.values), to_bits(v.values));
    return make_cochain(*u.complex, plan.n, kMod2, from_bits(out));
}

Cochain steenrod_square_cochain(unsigned k, const Cochain& u) {
    return make_cochain(*u.complex, u.degree + static_cast<int>(k), kMod2,
                        square_values(*u.complex, k, u.values, u.degree));
}

CohClass steenrod_square(unsigned k, const CohClass& c) {
    require_mod2(c.representative.coeffs);
    return class_of(steenrod_square_cochain(k, c.representative));
}

CohClass bockstein(unsigned r, const CohClass& c) {
    Integer p;
    unsigned level = 0;
    if (!c.representative.coeffs.prime_data(p, level) || level != r)
        raise(ErrorCode::WrongCoefficients, "beta_" + std::to_string(r) + " needs Z/p^" + std::to_string(r) +
                                                " coefficients, got " + c.representative.coeffs.to_string());
    const Cochain& u = c.representative;
    IntVector image = algebra::bockstein_cochain(*u.complex, u.values, u.degree, p, r);
    return class_of(make_cochain(*u.complex, u.degree + 1, Coefficients::modular(p), std::move(image)));
}

CohClass coefficient_change(const CohClass& c, const CoefficientMap& map) {
    const Cochain& u = c.representative;
    return class_of(make_cochain(*u.complex, u.degree, map.target(), map.apply(u.values, u.coeffs)));
}

InducedOperation InducedOperation::square(unsigned k) {
    return InducedOperation(Kind::Square, k, 2, 1, kMod2, CoefficientMap::reduce(kMod2));
}

InducedOperation InducedOperation::bockstein(const Integer& p, unsigned r) {
    if (!algebra::is_prime(p) || r == 0) raise(ErrorCode::InvalidArgument, "Bockstein needs a prime and r >= 1");
    return InducedOperation(Kind::Bockstein, 0, p, r, Coefficients::modular(algebra::pow(p, r)),
                            CoefficientMap::reduce(kMod2));
}

InducedOperation InducedOperation::coefficient_change(Coefficients source, CoefficientMap map) {
    map.check_source(source);
    return InducedOperation(Kind::CoefficientChange, 0, 2, 1, std::move(source), std::move(map));
}

InducedOperation InducedOperation::reduced_square(Coefficients source) {
    CoefficientMap::reduce(kMod2).check_source(source);
    return InducedOperation(Kind::ReducedSquare, 2, 2, 1, std::move(source), CoefficientMap::reduce(kMod2));
}

std::string InducedOperation::name() const {
    switch (kind_) {
    case Kind::Square:
        return "Sq^" + std::to_string(k_);
    case Kind::Bockstein:
        return "beta_" + std::to_string(r_) + " at p = " + p_.str();
    case Kind::CoefficientChange:
        return map_.name();
    case Kind::ReducedSquare:
        return "Sq^2 on " + source_.to_string();
    }
    return {};
}

GroupHom induced_operation_matrix(const SimplicialComplex& k, const InducedOperation& op, int n) {
    switch (op.kind_) {
    case InducedOperation::Kind::Square:
        return algebra::primary_operation_matrix(k, algebra::PrimaryOperation::square(op.k_), n);
    case InducedOperation::Kind::Bockstein:
        return algebra::bockstein_matrix(k, n, op.p_, op.r_);
    case InducedOperation::Kind::CoefficientChange:
        return algebra::coefficient_change_matrix(k, n, op.source_, op.map_);
    case InducedOperation::Kind::ReducedSquare:
        return algebra::reduced_operation_matrix(k, algebra::PrimaryOperation::square(2), op.source_, n);
    }
    raise(ErrorCode::InvalidArgument, "unknown operation");
}

} // namespace cohomotopy::simplicial
