#include "cohomotopy/engine/cohomotopy.hpp"

#include "cohomotopy/error.hpp"

#include <sstream>

namespace cohomotopy::engine {

using algebra::Integer;

void CohomotopySpec::validate() const {
    if (!space) raise(ErrorCode::InvalidArgument, "no space given");
    if (n < 1) raise(ErrorCode::InvalidArgument, "the cohomotopy degree must be positive");
    Integer p;
    unsigned r = 0;
    if (coeffs.is_integers() || !coeffs.prime_data(p, r))
        raise(ErrorCode::InvalidArgument, "coefficients must be Z/p^r or Z_(p), got " + coeffs.to_string());
}

Integer CohomotopySpec::prime() const {
    return coeffs.is_local() ? coeffs.local_prime() : coeffs.residue_field().modulus();
}

unsigned CohomotopySpec::level() const {
    Integer p;
    unsigned r = 0;
    coeffs.prime_data(p, r);
    return r;
}

HypothesisReport check_hypotheses(const CohomotopySpec& spec) {
    spec.validate();
    HypothesisReport h;
    h.dimension = spec.space->dimension();
    h.n = spec.n;
    h.p = spec.prime();
    h.dimension_ok = Integer(h.dimension) <= h.n + 2 * h.p - 3;
    h.degree_ok = Integer(h.n) >= 2 * h.p - 1;
    return h;
}

std::vector<std::string> HypothesisReport::lines() const {
    const Integer bound = n + 2 * p - 3;
    const Integer low = 2 * p - 1;
    std::ostringstream a, b;
    a << "dim X <= n + 2p - 3: " << dimension << (dimension_ok ? " <= " : " > ") << bound
      << (dimension_ok ? " (pass)" : " (fail)");
    b << "n >= 2p - 1: " << n << (degree_ok ? " >= " : " < ") << low << (degree_ok ? " (pass)" : " (fail)");
    return {a.str(), b.str()};
}

std::string HypothesisReport::failure_message() const {
    std::ostringstream out;
    bool first = true;
    if (!dimension_ok) {
        out << "dim X = " << dimension << " > n + 2p - 3 = " << (n + 2 * p - 3);
        first = false;
    }
    if (!degree_ok) {
        if (!first) out << "; ";
        out << "n = " << n << " < 2p - 1 = " << (2 * p - 1);
    }
    return out.str();
}

} // namespace cohomotopy::engine
