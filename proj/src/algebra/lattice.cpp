#include "cohomotopy/algebra/lattice.hpp"

#include "cohomotopy/algebra/smith.hpp"
#include "cohomotopy/error.hpp"

namespace cohomotopy::algebra {

IntVector ScaledBasis::basis_vector(std::size_t j) const {
    IntVector v = W.column(active.at(j));
    if (scale[j] != 1)
        for (auto& x : v) x *= scale[j];
    return v;
}

std::optional<IntVector> ScaledBasis::coordinates(const IntVector& x) const {
    if (x.size() != ambient_dimension()) raise(ErrorCode::InvalidArgument, "lattice coordinate length mismatch");
    IntVector y = W_inv.apply(x);
    std::vector<bool> is_active(y.size(), false);
    for (auto a : active) is_active[a] = true;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (!is_active[i] && y[i] != 0) return std::nullopt;
    IntVector z(active.size());
    for (std::size_t j = 0; j < active.size(); ++j) {
        const Integer& yj = y[active[j]];
        if (yj % scale[j] != 0) return std::nullopt;
        z[j] = yj / scale[j];
    }
    return z;
}

ScaledBasis full_lattice(std::size_t dimension) {
    ScaledBasis b;
    b.W = IntMatrix::identity(dimension);
    b.W_inv = b.W;
    for (std::size_t i = 0; i < dimension; ++i) {
        b.active.push_back(i);
        b.scale.emplace_back(1);
    }
    return b;
}

ScaledBasis lattice_from_generators(const IntMatrix& generators) {
    // U G V = S, so G V = U^{-1} S: the lattice has basis s_i * U^{-1} e_i.
    auto snf = smith_normal_form(generators);
    ScaledBasis b;
    b.W = std::move(snf.U_inv);
    b.W_inv = std::move(snf.U);
    for (std::size_t i = 0; i < snf.rank; ++i) {
        b.active.push_back(i);
        b.scale.push_back(snf.S(i, i));
    }
    return b;
}

ScaledBasis kernel_lattice(const IntMatrix& a) {
    auto snf = smith_normal_form(a);
    ScaledBasis b;
    b.W = std::move(snf.V);
    b.W_inv = std::move(snf.V_inv);
    for (std::size_t i = snf.rank; i < a.cols(); ++i) {
        b.active.push_back(i);
        b.scale.emplace_back(1);
    }
    return b;
}

ScaledBasis kernel_lattice_mod(const IntMatrix& a, const Integer& m) {
    // x = V y; A x = U^{-1} S y vanishes mod m iff s_i y_i = 0 mod m for every i.
    auto snf = smith_normal_form(a);
    ScaledBasis b;
    b.W = std::move(snf.V);
    b.W_inv = std::move(snf.V_inv);
    for (std::size_t i = 0; i < a.cols(); ++i) {
        b.active.push_back(i);
        b.scale.push_back(i < snf.rank ? Integer(m / gcd(m, snf.S(i, i))) : Integer(1));
    }
    return b;
}

Subquotient::Subquotient(ScaledBasis numerator, const IntMatrix& relations) : numerator_(std::move(numerator)) {
    const std::size_t rank = numerator_.rank();
    if (relations.rows() != numerator_.ambient_dimension())
        raise(ErrorCode::InvalidArgument, "relation vectors live in the wrong ambient space");
    IntMatrix rel(rank, relations.cols());
    for (std::size_t c = 0; c < relations.cols(); ++c) {
        auto z = numerator_.coordinates(relations.column(c));
        if (!z) raise(ErrorCode::RelationViolation, "relation vector outside the numerator lattice");
        rel.set_column(c, *z);
    }
    auto snf = smith_normal_form(rel);

    std::vector<std::size_t> kept;
    for (std::size_t j = 0; j < rank; ++j) {
        Integer order = j < snf.rank ? snf.S(j, j) : Integer(0);
        if (order == 1) continue;
        kept.push_back(j);
        orders_.push_back(order);
    }
    transform_ = IntMatrix(kept.size(), rank);
    for (std::size_t g = 0; g < kept.size(); ++g)
        for (std::size_t c = 0; c < rank; ++c) transform_(g, c) = snf.U(kept[g], c);

    std::vector<IntVector> basis;
    basis.reserve(rank);
    for (std::size_t t = 0; t < rank; ++t) basis.push_back(numerator_.basis_vector(t));
    const std::size_t n = numerator_.ambient_dimension();
    for (std::size_t g = 0; g < kept.size(); ++g) {
        IntVector rep(n);
        for (std::size_t t = 0; t < rank; ++t) {
            const Integer& w = snf.U_inv(t, kept[g]);
            if (w == 0) continue;
            for (std::size_t i = 0; i < n; ++i)
                if (basis[t][i] != 0) rep[i] += w * basis[t][i];
        }
        reps_.push_back(std::move(rep));
    }

    std::size_t free = 0;
    IntVector torsion;
    for (const auto& o : orders_) {
        if (o == 0)
            ++free;
        else
            torsion.push_back(o);
    }
    group_ = FinAbGroup(free, std::move(torsion));
}

std::optional<IntVector> Subquotient::try_coordinates(const IntVector& x) const {
    auto z = numerator_.coordinates(x);
    if (!z) return std::nullopt;
    IntVector w = transform_.apply(*z);
    for (std::size_t g = 0; g < w.size(); ++g)
        if (orders_[g] != 0) w[g] = mod(w[g], orders_[g]);
    return w;
}

IntVector Subquotient::coordinates(const IntVector& x) const {
    auto w = try_coordinates(x);
    if (!w) raise(ErrorCode::RelationViolation, "vector outside the numerator lattice");
    return *w;
}

} // namespace cohomotopy::algebra
