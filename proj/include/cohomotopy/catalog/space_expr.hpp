#pragma once

#include "cohomotopy/algebra/integer.hpp"

#include <memory>
#include <string>
#include <vector>

namespace cohomotopy::catalog {

using algebra::Integer;

/// Symbolic space: S(n), M(n; p^r), CP(n), HP(n), wedge(...), susp(X, k).
struct SpaceExpr {
    enum class Kind { Sphere, Moore, ComplexProjective, QuaternionicProjective, Wedge, Suspension };

    Kind kind = Kind::Sphere;
    int n = 1;      // dimension index (sphere/Moore degree, projective height) or suspension count
    Integer p = 0;  // Moore prime
    unsigned r = 0; // Moore exponent
    std::vector<SpaceExpr> parts;

    static SpaceExpr sphere(int n);
    static SpaceExpr moore(int n, const Integer& p, unsigned r);
    static SpaceExpr complex_projective(int n);
    static SpaceExpr quaternionic_projective(int n);
    static SpaceExpr wedge(std::vector<SpaceExpr> parts);
    static SpaceExpr suspension(SpaceExpr x, int k);

    std::string to_string() const;
    friend bool operator==(const SpaceExpr& a, const SpaceExpr& b) = default;
};

/// Accepts `S(n)`, `M(n; p^r)`, `M(n; p)`, `CP(n)`, `HP(n)`, `wedge(e1, e2, ...)`,
/// `susp(e, k)` and the long forms `Sphere(n)`, `Moore(n, p, r)`, `Wedge(...)`,
/// `Susp(e, k)`; whitespace-insensitive. Throws ParseError.
SpaceExpr parse_space_expr(const std::string& text);

int catalog_dimension(const SpaceExpr& x);

} // namespace cohomotopy::catalog
