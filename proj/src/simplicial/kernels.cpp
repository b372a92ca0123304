#include "cohomotopy/simplicial/kernels.hpp"

#include "cohomotopy/error.hpp"

#include <cstddef>

namespace cohomotopy::simplicial::kernels {

CupPlan make_cup_plan(int p, int q, int i) {
    if (p < 0 || q < 0 || i < 0 || i > p || i > q) raise(ErrorCode::BadIndex, "cup-i index out of range");
    CupPlan plan;
    plan.p = p;
    plan.q = q;
    plan.i = i;
    plan.n = p + q - i;
    const int n = plan.n;
    const unsigned width = static_cast<unsigned>(n + 1);
    for (unsigned mask = 0; mask < (1u << width); ++mask) {
        if (__builtin_popcount(mask) != n - i) continue;
        std::vector<int> u0, u1;
        int j = 0;
        for (int pos = 0; pos <= n; ++pos) {
            if (!(mask & (1u << pos))) continue;
            ++j;
            ((pos + j) % 2 == 0 ? u0 : u1).push_back(pos);
        }
        if (static_cast<int>(u0.size()) != q - i || static_cast<int>(u1.size()) != p - i) continue;
        plan.left.emplace_back(u0.rbegin(), u0.rend());
        plan.right.emplace_back(u1.rbegin(), u1.rend());
    }
    return plan;
}

std::size_t subface(const SimplicialComplex& k, int degree, std::size_t index, const std::vector<int>& positions) {
    for (int pos : positions) index = k.face(degree--, index, static_cast<std::size_t>(pos));
    return index;
}

namespace {

inline std::uint8_t cup_entry(const SimplicialComplex& k, const CupPlan& plan, const Bits& u, const Bits& v,
                              std::size_t s) {
    unsigned acc = 0;
    for (std::size_t t = 0; t < plan.left.size(); ++t) {
        if (!u[subface(k, plan.n, s, plan.left[t])]) continue;
        acc ^= v[subface(k, plan.n, s, plan.right[t])];
    }
    return static_cast<std::uint8_t>(acc & 1u);
}

void check_cup_shapes(const SimplicialComplex& k, const CupPlan& plan, const Bits& u, const Bits& v) {
    if (u.size() != k.count(plan.p) || v.size() != k.count(plan.q))
        raise(ErrorCode::InvalidArgument, "cochain length does not match the complex");
}

} // namespace

Bits cup_i_serial(const SimplicialComplex& k, const CupPlan& plan, const Bits& u, const Bits& v) {
    check_cup_shapes(k, plan, u, v);
    const std::size_t m = k.count(plan.n);
    Bits out(m, 0);
    for (std::size_t s = 0; s < m; ++s) out[s] = cup_entry(k, plan, u, v, s);
    return out;
}

Bits cup_i_parallel(const SimplicialComplex& k, const CupPlan& plan, const Bits& u, const Bits& v) {
    check_cup_shapes(k, plan, u, v);
    const auto m = static_cast<std::ptrdiff_t>(k.count(plan.n));
    Bits out(static_cast<std::size_t>(m), 0);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t s = 0; s < m; ++s)
        out[static_cast<std::size_t>(s)] = cup_entry(k, plan, u, v, static_cast<std::size_t>(s));
    return out;
}

namespace {

template <class Vec>
void check_coboundary_shape(const SimplicialComplex& k, int degree, const Vec& u) {
    if (u.size() != k.count(degree)) raise(ErrorCode::InvalidArgument, "cochain length does not match the complex");
}

inline Integer coboundary_entry(const SimplicialComplex& k, int degree, const IntVector& u, std::size_t s) {
    Integer acc = 0;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(degree) + 1; ++i) {
        const Integer& x = u[k.face(degree + 1, s, i)];
        if (i % 2 == 0)
            acc += x;
        else
            acc -= x;
    }
    return acc;
}

inline std::uint8_t coboundary_bit(const SimplicialComplex& k, int degree, const Bits& u, std::size_t s) {
    unsigned acc = 0;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(degree) + 1; ++i) acc ^= u[k.face(degree + 1, s, i)];
    return static_cast<std::uint8_t>(acc & 1u);
}

} // namespace

IntVector coboundary_serial(const SimplicialComplex& k, int degree, const IntVector& u) {
    check_coboundary_shape(k, degree, u);
    IntVector out(k.count(degree + 1));
    for (std::size_t s = 0; s < out.size(); ++s) out[s] = coboundary_entry(k, degree, u, s);
    return out;
}

IntVector coboundary_parallel(const SimplicialComplex& k, int degree, const IntVector& u) {
    check_coboundary_shape(k, degree, u);
    IntVector out(k.count(degree + 1));
    const auto m = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t s = 0; s < m; ++s)
        out[static_cast<std::size_t>(s)] = coboundary_entry(k, degree, u, static_cast<std::size_t>(s));
    return out;
}

Bits coboundary_bits_serial(const SimplicialComplex& k, int degree, const Bits& u) {
    check_coboundary_shape(k, degree, u);
    Bits out(k.count(degree + 1), 0);
    for (std::size_t s = 0; s < out.size(); ++s) out[s] = coboundary_bit(k, degree, u, s);
    return out;
}

Bits coboundary_bits_parallel(const SimplicialComplex& k, int degree, const Bits& u) {
    check_coboundary_shape(k, degree, u);
    Bits out(k.count(degree + 1), 0);
    const auto m = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t s = 0; s < m; ++s)
        out[static_cast<std::size_t>(s)] = coboundary_bit(k, degree, u, static_cast<std::size_t>(s));
    return out;
}

bool parallel_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

} // namespace cohomotopy::simplicial::kernels
