#pragma once

#include "cohomotopy/algebra/coefficients.hpp"
#include "cohomotopy/algebra/lattice.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace cohomotopy::algebra {

/// ker(d_out) / im(d_in) with coefficients, together with cocycle representatives.
///
/// Cochains are integer vectors indexed by the cells of the degree. Modular
/// representatives are reduced into [0, m). Z_(p) groups are computed integrally and
/// localised: prime-to-p torsion generators are dropped and the surviving torsion
/// coordinates are reduced mod their p-part.
class CohomologyGroup {
public:
    const FinAbGroup& group() const noexcept { return group_; }
    const Coefficients& coefficients() const noexcept { return coeffs_; }
    std::size_t cochain_rank() const noexcept { return d_out_.cols(); }
    std::size_t generator_count() const noexcept { return reps_.size(); }
    const std::vector<IntVector>& representatives() const noexcept { return reps_; }
    const IntVector& representative(std::size_t j) const { return reps_.at(j); }

    bool is_cocycle(const IntVector& cochain) const;
    /// Class coordinates of a cocycle; throws InvalidArgument for a non-cocycle.
    IntVector coordinates(const IntVector& cocycle) const;
    /// Sum of coords[j] * representative(j), reduced for modular coefficients.
    IntVector cochain_from(const IntVector& coords) const;

    /// True when the cocycle represents the zero class.
    bool is_trivial_class(const IntVector& cocycle) const;

private:
    friend CohomologyGroup cohomology_from_pair(const IntMatrix&, const IntMatrix&, const Coefficients&);

    CohomologyGroup(Coefficients coeffs, IntMatrix d_out, std::shared_ptr<const Subquotient> quotient,
                    std::vector<std::size_t> kept, IntVector local_orders);

    Coefficients coeffs_;
    IntMatrix d_out_;
    std::shared_ptr<const Subquotient> quotient_;
    std::vector<std::size_t> kept_;   // indices into quotient generators
    IntVector orders_;                // order per kept generator (0 = free)
    std::vector<IntVector> reps_;
    FinAbGroup group_;
};

/// Cohomology at the middle of C^{n-1} --d_in--> C^n --d_out--> C^{n+1}.
/// Shapes: d_in is (k x k_prev), d_out is (k_next x k). Throws CompositionNonzero
/// when d_out * d_in does not vanish over the coefficients.
CohomologyGroup cohomology_from_pair(const IntMatrix& d_in, const IntMatrix& d_out, const Coefficients& coeffs);

/// Integral cochain complex C^0 -> C^1 -> ... -> C^top with memoised cohomology.
class CochainComplex {
public:
    CochainComplex() = default;
    /// coboundaries[q] maps C^q to C^{q+1} and must have shape ranks[q+1] x ranks[q].
    CochainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> coboundaries);

    CochainComplex(const CochainComplex&) = delete;
    CochainComplex& operator=(const CochainComplex&) = delete;
    CochainComplex(CochainComplex&&) noexcept = default;
    CochainComplex& operator=(CochainComplex&&) noexcept = default;

    int top_degree() const noexcept { return static_cast<int>(ranks_.size()) - 1; }
    std::size_t rank(int degree) const;
    /// Zero-sized (but correctly shaped) outside the complex.
    IntMatrix coboundary(int degree) const;
    IntVector apply_coboundary(int degree, const IntVector& cochain) const;

    std::shared_ptr<const CohomologyGroup> cohomology(int degree, const Coefficients& coeffs) const;

private:
    struct Cache {
        std::mutex mutex;
        std::map<std::pair<int, std::string>, std::shared_ptr<const CohomologyGroup>> groups;
    };

    std::vector<std::size_t> ranks_;
    std::vector<IntMatrix> coboundaries_;
    std::unique_ptr<Cache> cache_ = std::make_unique<Cache>();
};

} // namespace cohomotopy::algebra
