#pragma once

#include "cohomotopy/algebra/integer.hpp"

#include <string>

namespace cohomotopy::algebra {

/// Coefficient ring descriptor: Z, Z/m (m >= 2) or the p-local integers Z_(p).
class Coefficients {
public:
    enum class Kind { Integers, Modular, Local };

    static Coefficients integers() { return Coefficients(Kind::Integers, 0); }
    static Coefficients modular(const Integer& m);
    static Coefficients local(const Integer& p);
    /// Accepts "Z", "Z/4", "Z/2^3", "Z_(3)", "Z_3" (whitespace-insensitive).
    static Coefficients parse(const std::string& text);

    Kind kind() const noexcept { return kind_; }
    bool is_integers() const noexcept { return kind_ == Kind::Integers; }
    bool is_modular() const noexcept { return kind_ == Kind::Modular; }
    bool is_local() const noexcept { return kind_ == Kind::Local; }

    /// The modulus for Z/m; the prime for Z_(p); 0 for Z.
    const Integer& modulus() const noexcept { return value_; }
    const Integer& local_prime() const noexcept { return value_; }

    /// For Z/p^r: true with prime and exponent; for Z_(p): prime with exponent 0.
    bool prime_data(Integer& p, unsigned& r) const;

    /// Z/p for Z/p^r and Z_(p); throws otherwise.
    Coefficients residue_field() const;

    /// Symbol used for free summands of cohomology with these coefficients.
    std::string free_symbol() const;
    std::string to_string() const;

    friend bool operator==(const Coefficients& a, const Coefficients& b) = default;

private:
    Coefficients(Kind kind, Integer value) : kind_(kind), value_(std::move(value)) {}

    Kind kind_;
    Integer value_;
};

} // namespace cohomotopy::algebra
