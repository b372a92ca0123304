#include "cohomotopy/cli/scan.hpp"

#include "cohomotopy/catalog/catalog_space.hpp"
#include "cohomotopy/engine/cohomotopy.hpp"
#include "cohomotopy/error.hpp"

#include <cctype>
#include <exception>

namespace cohomotopy::cli {

namespace {

int to_int(const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) raise(ErrorCode::ParseError, "not an integer: '" + s + "'");
    return v;
}

void fill_row(ScanRow& row) {
    auto x = catalog::catalog_space(row.family == 'C' ? catalog::SpaceExpr::complex_projective(row.n)
                                                      : catalog::SpaceExpr::quaternionic_projective(row.n));
    const algebra::Integer dim = x->dimension();
    row.dimension_ok = dim <= row.m + 2 * row.p - 3;
    row.degree_ok = row.m >= 2 * row.p - 1;
    if (!row.dimension_ok || !row.degree_ok) return;
    auto res = engine::modular_cohomotopy({x, row.m, algebra::Coefficients::local(row.p)});
    row.integral_rank = res.quotient.free_rank();
    if (res.group) {
        row.group = res.group;
        row.primary = algebra::FinAbGroup(0, res.group->torsion());
    }
}

} // namespace

Range Range::parse(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    const auto dots = t.find("..");
    if (dots == std::string::npos) {
        const int v = to_int(t);
        return {v, v};
    }
    return {to_int(t.substr(0, dots)), to_int(t.substr(dots + 2))};
}

std::vector<ScanRow> catalog_scan(char family, Range n, Range p, Range k) {
    if (family != 'C' && family != 'H') raise(ErrorCode::InvalidArgument, "family must be C or H");
    if (!n.empty() && (n.hi > 64 || n.lo < 1)) raise(ErrorCode::RangeTooLarge, "n must lie in 1..64");
    if (!p.empty() && (p.hi > 31 || p.lo < 2)) raise(ErrorCode::RangeTooLarge, "p must lie in 2..31");
    if (!k.empty() && (k.hi > 64 || k.lo < 0)) raise(ErrorCode::RangeTooLarge, "k must lie in 0..64");

    const int d = family == 'C' ? 2 : 4;
    std::vector<ScanRow> rows;
    for (int nn = n.lo; nn <= n.hi; ++nn)
        for (int pp = p.lo; pp <= p.hi; ++pp) {
            if (!algebra::is_prime(pp)) continue;
            for (int kk = k.lo; kk <= k.hi; ++kk) {
                ScanRow row;
                row.family = family;
                row.n = nn;
                row.p = pp;
                row.k = kk;
                row.m = d * nn - 2 * pp + kk + 3;
                rows.push_back(row);
            }
        }

    const long count = static_cast<long>(rows.size());
    std::vector<std::exception_ptr> failures(rows.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        try {
            fill_row(rows[static_cast<std::size_t>(i)]);
        } catch (...) {
            failures[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& f : failures)
        if (f) std::rethrow_exception(f);
    return rows;
}

} // namespace cohomotopy::cli
