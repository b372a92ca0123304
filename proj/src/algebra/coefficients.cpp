#include "cohomotopy/algebra/coefficients.hpp"

#include "cohomotopy/error.hpp"

#include <algorithm>
#include <cctype>

namespace cohomotopy::algebra {

namespace {

Integer parse_integer(const std::string& s, const std::string& context) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
        raise(ErrorCode::ParseError, "bad integer '" + s + "' in coefficients '" + context + "'");
    return Integer(s);
}

} // namespace

Coefficients Coefficients::modular(const Integer& m) {
    if (m < 2) raise(ErrorCode::InvalidArgument, "Z/m needs m >= 2");
    return Coefficients(Kind::Modular, m);
}

Coefficients Coefficients::local(const Integer& p) {
    if (!is_prime(p)) raise(ErrorCode::InvalidArgument, "Z_(p) needs a prime p");
    return Coefficients(Kind::Local, p);
}

Coefficients Coefficients::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s == "Z") return integers();
    if (s.rfind("Z/", 0) == 0) {
        std::string rest = s.substr(2);
        auto caret = rest.find('^');
        if (caret == std::string::npos) return modular(parse_integer(rest, text));
        Integer base = parse_integer(rest.substr(0, caret), text);
        Integer e = parse_integer(rest.substr(caret + 1), text);
        if (e < 1 || e > 4096) raise(ErrorCode::ParseError, "bad exponent in '" + text + "'");
        return modular(pow(base, static_cast<unsigned>(e)));
    }
    if (s.rfind("Z_(", 0) == 0 && s.back() == ')') return local(parse_integer(s.substr(3, s.size() - 4), text));
    if (s.rfind("Z_", 0) == 0) return local(parse_integer(s.substr(2), text));
    raise(ErrorCode::ParseError, "unrecognised coefficients '" + text + "'");
}

bool Coefficients::prime_data(Integer& p, unsigned& r) const {
    if (kind_ == Kind::Local) {
        p = value_;
        r = 0;
        return true;
    }
    if (kind_ == Kind::Modular) return prime_power(value_, p, r);
    return false;
}

Coefficients Coefficients::residue_field() const {
    Integer p;
    unsigned r;
    if (!prime_data(p, r))
        raise(ErrorCode::IncompatibleCoefficients, "no residue field for coefficients " + to_string());
    return modular(p);
}

std::string Coefficients::free_symbol() const {
    switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::Modular: return "Z/" + value_.str();
    case Kind::Local: return "Z_(" + value_.str() + ")";
    }
    return "?";
}

std::string Coefficients::to_string() const { return free_symbol(); }

} // namespace cohomotopy::algebra
