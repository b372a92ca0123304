#include "cohomotopy/algebra/integer.hpp"

#include "cohomotopy/error.hpp"

namespace cohomotopy::algebra {

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(abs(a), abs(b)); }

Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    return abs(a) / gcd(a, b) * abs(b);
}

Integer mod(const Integer& a, const Integer& m) {
    if (m == 0) raise(ErrorCode::InvalidArgument, "modulus must be nonzero");
    Integer am = abs(m);
    Integer r = a % am;
    if (r < 0) r += am;
    return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
    if (b == 0) raise(ErrorCode::InvalidArgument, "division by zero");
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Integer pow(const Integer& base, unsigned exponent) { return boost::multiprecision::pow(base, exponent); }

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Integer d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

unsigned valuation(const Integer& n, const Integer& p) {
    if (n == 0) raise(ErrorCode::InvalidArgument, "valuation of zero");
    unsigned e = 0;
    Integer m = abs(n);
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    return e;
}

bool prime_power(const Integer& n, Integer& p, unsigned& r) {
    if (n < 2) return false;
    auto factors = factorize(n);
    if (factors.size() != 1) return false;
    p = factors.front().first;
    r = factors.front().second;
    return true;
}

std::vector<std::pair<Integer, unsigned>> factorize(Integer n) {
    std::vector<std::pair<Integer, unsigned>> out;
    n = abs(n);
    if (n < 2) return out;
    for (Integer d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e > 0) out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1u);
    return out;
}

std::string to_string(const Integer& a) { return a.str(); }

} // namespace cohomotopy::algebra
