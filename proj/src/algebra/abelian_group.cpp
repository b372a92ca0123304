#include "cohomotopy/algebra/abelian_group.hpp"

#include "cohomotopy/algebra/smith.hpp"
#include "cohomotopy/error.hpp"

#include <algorithm>
#include <sstream>

namespace cohomotopy::algebra {

FinAbGroup::FinAbGroup(std::size_t free_rank, IntVector torsion) : free_rank_(free_rank), torsion_(std::move(torsion)) {
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        if (torsion_[i] < 2) raise(ErrorCode::InvalidArgument, "invariant factors must be >= 2");
        if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
            raise(ErrorCode::InvalidArgument, "invariant factors must form a divisibility chain");
    }
}

FinAbGroup FinAbGroup::cyclic(const Integer& order) { return from_cyclic_orders({order}); }

FinAbGroup FinAbGroup::from_cyclic_orders(const IntVector& orders) {
    std::size_t free = 0;
    IntVector finite;
    for (const auto& o : orders) {
        if (o == 0)
            ++free;
        else if (abs(o) > 1)
            finite.push_back(abs(o));
    }
    IntVector torsion;
    for (auto& d : smith_invariants(IntMatrix::diagonal(finite)))
        if (d > 1) torsion.push_back(d);
    return FinAbGroup(free, std::move(torsion));
}

Integer FinAbGroup::generator_order(std::size_t i) const {
    if (i < torsion_.size()) return torsion_[i];
    if (i < generator_count()) return 0;
    raise(ErrorCode::BadIndex, "generator index out of range");
}

Integer FinAbGroup::order() const {
    if (!is_finite()) raise(ErrorCode::InvalidArgument, "order of an infinite group");
    return torsion_order();
}

Integer FinAbGroup::torsion_order() const {
    Integer n = 1;
    for (const auto& d : torsion_) n *= d;
    return n;
}

IntVector FinAbGroup::normalize(IntVector coords) const {
    if (coords.size() != generator_count()) raise(ErrorCode::InvalidArgument, "coordinate vector length mismatch");
    for (std::size_t i = 0; i < torsion_.size(); ++i) coords[i] = mod(coords[i], torsion_[i]);
    return coords;
}

void FinAbGroup::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != generator_count())
        raise(ErrorCode::InvalidArgument, "one label per generator required");
    labels_ = std::move(labels);
}

std::string FinAbGroup::to_string(const std::string& free_symbol) const {
    if (is_trivial()) return "0";
    std::vector<std::string> parts;
    if (free_rank_ == 1)
        parts.push_back(free_symbol);
    else if (free_rank_ > 1)
        parts.push_back(free_symbol + "^" + std::to_string(free_rank_));
    for (const auto& d : torsion_) parts.push_back("Z/" + d.str());
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? " ⊕ " : "") << parts[i];
    return os.str();
}

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
    IntVector orders = a.torsion();
    orders.insert(orders.end(), b.torsion().begin(), b.torsion().end());
    for (std::size_t i = 0; i < a.free_rank() + b.free_rank(); ++i) orders.push_back(0);
    return FinAbGroup::from_cyclic_orders(orders);
}

FinAbGroup p_primary_part(const FinAbGroup& g, const Integer& p) {
    IntVector t;
    for (const auto& d : g.torsion()) {
        unsigned e = valuation(d, p);
        if (e > 0) t.push_back(pow(p, e));
    }
    return FinAbGroup(0, std::move(t));
}

LocalModule LocalModule::localize(const FinAbGroup& g, const Integer& p) {
    if (!is_prime(p)) raise(ErrorCode::InvalidArgument, "localisation needs a prime");
    return LocalModule{p, g.free_rank(), p_primary_part(g, p).torsion()};
}

LocalModule LocalModule::from_group(const FinAbGroup& g, const Integer& p) {
    for (const auto& d : g.torsion()) {
        Integer q;
        unsigned e;
        if (!prime_power(d, q, e) || q != p)
            raise(ErrorCode::InvalidArgument, "torsion of a Z_(p)-module must be p-primary");
    }
    return LocalModule{p, g.free_rank(), g.torsion()};
}

std::string LocalModule::to_string() const { return as_group().to_string("Z_(" + p.str() + ")"); }

FinAbGroup tensor_cyclic(const FinAbGroup& a, const Integer& m) {
    if (m == 0) return a;
    IntVector orders;
    for (const auto& d : a.torsion()) orders.push_back(gcd(d, m));
    for (std::size_t i = 0; i < a.free_rank(); ++i) orders.push_back(abs(m));
    return FinAbGroup::from_cyclic_orders(orders);
}

FinAbGroup tor_cyclic(const FinAbGroup& a, const Integer& m) {
    if (m == 0) return FinAbGroup::trivial();
    IntVector orders;
    for (const auto& d : a.torsion()) orders.push_back(gcd(d, m));
    return FinAbGroup::from_cyclic_orders(orders);
}

TensorTor tensor_and_tor(const FinAbGroup& a, const Integer& m) {
    if (m < 2) raise(ErrorCode::InvalidArgument, "tensor_and_tor needs m >= 2");
    return {tensor_cyclic(a, m), tor_cyclic(a, m)};
}

} // namespace cohomotopy::algebra
