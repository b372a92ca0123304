#include "cohomotopy/catalog/catalog_space.hpp"

#include "cohomotopy/error.hpp"

#include <map>
#include <mutex>

namespace cohomotopy::catalog {

using algebra::Integer;
using algebra::PrimaryOperation;

namespace {

Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer c = 1;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

std::string power_label(int m) { return m == 1 ? "α" : "α^" + std::to_string(m); }

std::string prefix_for(int shift) {
    if (shift == 0) return "";
    if (shift == 1) return "σ";
    return "σ^" + std::to_string(shift);
}

} // namespace

CatalogSpace::CatalogSpace(SpaceExpr expr) : expr_(std::move(expr)), dimension_(catalog_dimension(expr_)) {
    cells_.resize(static_cast<std::size_t>(dimension_) + 1);
    collect(expr_, 0, "");

    std::vector<std::size_t> ranks;
    for (const auto& c : cells_) ranks.push_back(c.size());
    std::vector<IntMatrix> coboundaries;
    for (std::size_t q = 0; q + 1 < ranks.size(); ++q) coboundaries.emplace_back(ranks[q + 1], ranks[q]);
    for (std::size_t a = 0; a < atoms_.size(); ++a) {
        const Atom& atom = atoms_[a];
        if (atom.kind != SpaceExpr::Kind::Moore) continue;
        int bottom = atom.n + atom.shift;
        auto from = find_cell(a, 0, bottom);
        auto to = find_cell(a, 1, bottom + 1);
        coboundaries[static_cast<std::size_t>(bottom)](*to, *from) = algebra::pow(atom.p, atom.r);
    }
    cochains_ = algebra::CochainComplex(std::move(ranks), std::move(coboundaries));
}

void CatalogSpace::collect(const SpaceExpr& x, int shift, const std::string& suffix) {
    using K = SpaceExpr::Kind;
    if (x.kind == K::Wedge) {
        for (std::size_t i = 0; i < x.parts.size(); ++i)
            collect(x.parts[i], shift, suffix + "[" + std::to_string(i + 1) + "]");
        return;
    }
    if (x.kind == K::Suspension) {
        collect(x.parts[0], shift + x.n, suffix);
        return;
    }
    const std::size_t index = atoms_.size();
    atoms_.push_back(Atom{x.kind, x.n, x.p, x.r, shift, suffix});
    const std::string pre = prefix_for(shift);
    auto add = [&](int degree, int exponent, const std::string& base) {
        cells_[static_cast<std::size_t>(degree + shift)].push_back(Cell{degree + shift, pre + base + suffix, index, exponent});
    };
    switch (x.kind) {
    case K::Sphere:
        add(x.n, 1, "ι_" + std::to_string(x.n));
        break;
    case K::Moore:
        add(x.n, 0, "e_" + std::to_string(x.n));
        add(x.n + 1, 1, "e_" + std::to_string(x.n + 1));
        break;
    case K::ComplexProjective:
        for (int m = 1; m <= x.n; ++m) add(2 * m, m, power_label(m));
        break;
    case K::QuaternionicProjective:
        for (int m = 1; m <= x.n; ++m) add(4 * m, m, power_label(m));
        break;
    default:
        break;
    }
}

std::vector<CatalogSpace::Cell> CatalogSpace::cells(int degree) const {
    if (degree < 0 || degree > dimension_) return {};
    return cells_[static_cast<std::size_t>(degree)];
}

std::optional<std::size_t> CatalogSpace::find_cell(std::size_t atom, int exponent, int degree) const {
    if (degree < 0 || degree > dimension_) return std::nullopt;
    const auto& row = cells_[static_cast<std::size_t>(degree)];
    for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i].atom == atom && row[i].exponent == exponent) return i;
    return std::nullopt;
}

std::vector<CatalogSpace::OpTerm> CatalogSpace::act(const PrimaryOperation& op, int degree, std::size_t index) const {
    using K = SpaceExpr::Kind;
    const Cell& cell = cells_[static_cast<std::size_t>(degree)][index];
    const Atom& atom = atoms_[cell.atom];
    const int shift = op.degree_shift();
    const Integer& p = op.prime();
    std::vector<OpTerm> out;
    auto emit = [&](int exponent, const Integer& coeff) {
        Integer c = algebra::mod(coeff, p);
        if (c == 0) return;
        if (auto t = find_cell(cell.atom, exponent, degree + shift)) out.push_back(OpTerm{*t, c});
    };
    if (shift == 0) {
        out.push_back(OpTerm{index, 1});
        return out;
    }
    const bool projective = atom.kind == K::ComplexProjective || atom.kind == K::QuaternionicProjective;
    const int d = atom.kind == K::ComplexProjective ? 2 : 4;
    const int m = cell.exponent;
    if (op.kind() == PrimaryOperation::Kind::Square) {
        const int k = static_cast<int>(op.square_index());
        if (atom.kind == K::Moore) {
            if (k == 1 && atom.p == 2 && atom.r == 1 && cell.exponent == 0) emit(1, 1);
        } else if (projective && k % d == 0) {
            emit(m + k / d, binomial(m, k / d));
        }
        return out;
    }
    if (projective && shift % d == 0) emit(m + shift / d, Integer(d * m / 2));
    return out;
}

IntVector CatalogSpace::apply_primary(const PrimaryOperation& op, const IntVector& cocycle, int degree) const {
    if (cocycle.size() != cochains_.rank(degree))
        raise(ErrorCode::InvalidArgument, "cochain length does not match the cells of the degree");
    IntVector out(cochains_.rank(degree + op.degree_shift()));
    for (std::size_t i = 0; i < cocycle.size(); ++i) {
        if (cocycle[i] == 0) continue;
        for (const auto& term : act(op, degree, i)) out[term.target] += term.coeff * cocycle[i];
    }
    for (auto& x : out) x = algebra::mod(x, op.prime());
    return out;
}

IntVector CatalogSpace::cup(const IntVector& u, int a, const IntVector& v, int b) const {
    using K = SpaceExpr::Kind;
    if (u.size() != cochains_.rank(a) || v.size() != cochains_.rank(b))
        raise(ErrorCode::InvalidArgument, "cochain length does not match the cells of the degree");
    IntVector out(cochains_.rank(a + b));
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        const Cell& ci = cells_[static_cast<std::size_t>(a)][i];
        const Atom& atom = atoms_[ci.atom];
        if (atom.shift != 0 || (atom.kind != K::ComplexProjective && atom.kind != K::QuaternionicProjective)) continue;
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j] == 0) continue;
            const Cell& cj = cells_[static_cast<std::size_t>(b)][j];
            if (cj.atom != ci.atom) continue;
            if (auto t = find_cell(ci.atom, ci.exponent + cj.exponent, a + b)) out[*t] += u[i] * v[j];
        }
    }
    return out;
}

std::string CatalogSpace::describe(const IntVector& cochain, int degree) const {
    std::string s;
    const auto& row = cells_.at(static_cast<std::size_t>(degree));
    for (std::size_t i = 0; i < cochain.size(); ++i) {
        if (cochain[i] == 0) continue;
        if (!s.empty()) s += " + ";
        if (cochain[i] != 1) s += cochain[i].str();
        s += row[i].label;
    }
    return s.empty() ? "0" : s;
}

std::shared_ptr<const CatalogSpace> catalog_space(const SpaceExpr& x) {
    static std::mutex mutex;
    static std::map<std::string, std::shared_ptr<const CatalogSpace>> cache;
    const std::string key = x.to_string();
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto space = std::make_shared<const CatalogSpace>(x);
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(key, std::move(space)).first->second;
}

CatalogCohomology catalog_cohomology(const SpaceExpr& x, int n, const Coefficients& coeffs) {
    auto space = catalog_space(x);
    auto h = space->cohomology(n, coeffs);
    CatalogCohomology out{h->group(), std::nullopt, h->representatives()};
    std::vector<std::string> labels;
    for (const auto& rep : out.representatives) labels.push_back(space->describe(rep, n));
    out.group.set_labels(std::move(labels));
    if (coeffs.is_local()) out.local = algebra::LocalModule::from_group(out.group, coeffs.local_prime());
    return out;
}

std::string CatalogOperation::name() const {
    if (kind_ == Kind::Bockstein) return "beta_" + std::to_string(r_);
    return op_.name();
}

GroupHom catalog_operation(const SpaceExpr& x, const CatalogOperation& op, int n, const Coefficients& coeffs) {
    auto space = catalog_space(x);
    if (op.kind() == CatalogOperation::Kind::Primary) return algebra::reduced_operation_matrix(*space, op.op(), coeffs, n);
    Integer p;
    unsigned r = 0;
    if (!coeffs.prime_data(p, r) || r != op.level() || coeffs.is_local())
        raise(ErrorCode::WrongCoefficients,
              op.name() + " needs Z/p^" + std::to_string(op.level()) + " coefficients, got " + coeffs.to_string());
    return algebra::bockstein_matrix(*space, n, p, r);
}

} // namespace cohomotopy::catalog
