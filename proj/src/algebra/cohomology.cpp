#include "cohomotopy/algebra/cohomology.hpp"

#include "cohomotopy/error.hpp"

namespace cohomotopy::algebra {

CohomologyGroup::CohomologyGroup(Coefficients coeffs, IntMatrix d_out, std::shared_ptr<const Subquotient> quotient,
                                 std::vector<std::size_t> kept, IntVector local_orders)
    : coeffs_(std::move(coeffs)), d_out_(std::move(d_out)), quotient_(std::move(quotient)), kept_(std::move(kept)),
      orders_(std::move(local_orders)) {
    std::size_t free = 0;
    IntVector torsion;
    for (std::size_t g = 0; g < kept_.size(); ++g) {
        IntVector rep = quotient_->representatives()[kept_[g]];
        if (coeffs_.is_modular())
            for (auto& x : rep) x = mod(x, coeffs_.modulus());
        reps_.push_back(std::move(rep));
        if (orders_[g] == 0)
            ++free;
        else
            torsion.push_back(orders_[g]);
    }
    group_ = FinAbGroup(free, std::move(torsion));
}

bool CohomologyGroup::is_cocycle(const IntVector& cochain) const {
    if (cochain.size() != cochain_rank()) return false;
    IntVector image = d_out_.apply(cochain);
    for (const auto& x : image) {
        if (coeffs_.is_modular() ? mod(x, coeffs_.modulus()) != 0 : x != 0) return false;
    }
    return true;
}

IntVector CohomologyGroup::coordinates(const IntVector& cocycle) const {
    if (!is_cocycle(cocycle)) raise(ErrorCode::InvalidArgument, "cochain is not a cocycle");
    IntVector x = cocycle;
    if (coeffs_.is_modular())
        for (auto& v : x) v = mod(v, coeffs_.modulus());
    IntVector all = quotient_->coordinates(x);
    IntVector out(kept_.size());
    for (std::size_t g = 0; g < kept_.size(); ++g) {
        out[g] = all[kept_[g]];
        if (orders_[g] != 0) out[g] = mod(out[g], orders_[g]);
    }
    return out;
}

IntVector CohomologyGroup::cochain_from(const IntVector& coords) const {
    if (coords.size() != reps_.size()) raise(ErrorCode::InvalidArgument, "coordinate vector length mismatch");
    IntVector out(cochain_rank());
    for (std::size_t g = 0; g < reps_.size(); ++g) {
        if (coords[g] == 0) continue;
        for (std::size_t i = 0; i < out.size(); ++i)
            if (reps_[g][i] != 0) out[i] += coords[g] * reps_[g][i];
    }
    if (coeffs_.is_modular())
        for (auto& v : out) v = mod(v, coeffs_.modulus());
    return out;
}

bool CohomologyGroup::is_trivial_class(const IntVector& cocycle) const {
    for (const auto& c : coordinates(cocycle))
        if (c != 0) return false;
    return true;
}

CohomologyGroup cohomology_from_pair(const IntMatrix& d_in, const IntMatrix& d_out, const Coefficients& coeffs) {
    const std::size_t k = d_out.cols();
    if (d_in.rows() != k) raise(ErrorCode::InvalidArgument, "coboundary shapes do not compose");
    IntMatrix composite = d_out * d_in;
    bool vanishes = coeffs.is_modular() ? composite.is_zero_mod(coeffs.modulus()) : composite.is_zero();
    if (!vanishes) raise(ErrorCode::CompositionNonzero, "consecutive coboundaries do not compose to zero");

    std::shared_ptr<const Subquotient> quotient;
    if (coeffs.is_modular()) {
        const Integer& m = coeffs.modulus();
        IntMatrix rel = d_in.hconcat(IntMatrix::diagonal(IntVector(k, m)));
        quotient = std::make_shared<const Subquotient>(kernel_lattice_mod(d_out, m), rel);
    } else {
        quotient = std::make_shared<const Subquotient>(kernel_lattice(d_out), d_in);
    }

    std::vector<std::size_t> kept;
    IntVector orders;
    const IntVector& all = quotient->orders();
    for (std::size_t g = 0; g < all.size(); ++g) {
        Integer order = all[g];
        if (coeffs.is_local() && order != 0) {
            unsigned v = valuation(order, coeffs.local_prime());
            order = pow(coeffs.local_prime(), v);
            if (order == 1) continue;
        }
        kept.push_back(g);
        orders.push_back(order);
    }
    return CohomologyGroup(coeffs, d_out, std::move(quotient), std::move(kept), std::move(orders));
}

CochainComplex::CochainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> coboundaries)
    : ranks_(std::move(ranks)), coboundaries_(std::move(coboundaries)) {
    if (ranks_.empty()) {
        if (!coboundaries_.empty()) raise(ErrorCode::InvalidArgument, "coboundaries given for an empty complex");
        return;
    }
    if (coboundaries_.size() + 1 != ranks_.size())
        raise(ErrorCode::InvalidArgument, "need one coboundary between consecutive degrees");
    for (std::size_t q = 0; q < coboundaries_.size(); ++q) {
        if (coboundaries_[q].rows() != ranks_[q + 1] || coboundaries_[q].cols() != ranks_[q])
            raise(ErrorCode::InvalidArgument, "coboundary in degree " + std::to_string(q) + " has the wrong shape");
    }
}

std::size_t CochainComplex::rank(int degree) const {
    if (degree < 0 || degree > top_degree()) return 0;
    return ranks_[static_cast<std::size_t>(degree)];
}

IntMatrix CochainComplex::coboundary(int degree) const {
    if (degree >= 0 && degree < top_degree()) return coboundaries_[static_cast<std::size_t>(degree)];
    return IntMatrix(rank(degree + 1), rank(degree));
}

IntVector CochainComplex::apply_coboundary(int degree, const IntVector& cochain) const {
    if (cochain.size() != rank(degree)) raise(ErrorCode::InvalidArgument, "cochain length mismatch");
    if (degree >= 0 && degree < top_degree()) return coboundaries_[static_cast<std::size_t>(degree)].apply(cochain);
    return IntVector(rank(degree + 1));
}

std::shared_ptr<const CohomologyGroup> CochainComplex::cohomology(int degree, const Coefficients& coeffs) const {
    auto key = std::make_pair(degree, coeffs.to_string());
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->groups.find(key);
        if (it != cache_->groups.end()) return it->second;
    }
    auto group = std::make_shared<const CohomologyGroup>(
        cohomology_from_pair(coboundary(degree - 1), coboundary(degree), coeffs));
    std::lock_guard<std::mutex> lock(cache_->mutex);
    return cache_->groups.emplace(key, std::move(group)).first->second;
}

} // namespace cohomotopy::algebra
