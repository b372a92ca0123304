#pragma once

#include "cohomotopy/algebra/integer.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cohomotopy::algebra {

/// Finitely generated abelian group Z^free_rank + Z/d1 + ... + Z/dk in
/// invariant-factor form (d1 | d2 | ... | dk, every di >= 2).
///
/// Generator order used for coordinates throughout the library: the torsion
/// generators first, in invariant-factor order, then the free generators.
class FinAbGroup {
public:
    FinAbGroup() = default;
    /// Throws InvalidArgument unless `torsion` is a divisibility chain of entries >= 2.
    FinAbGroup(std::size_t free_rank, IntVector torsion);

    static FinAbGroup trivial() { return {}; }
    static FinAbGroup free(std::size_t rank) { return FinAbGroup(rank, {}); }
    static FinAbGroup cyclic(const Integer& order);
    /// Normalises an arbitrary list of cyclic orders (0 = infinite cyclic, 1 = trivial).
    static FinAbGroup from_cyclic_orders(const IntVector& orders);

    std::size_t free_rank() const noexcept { return free_rank_; }
    const IntVector& torsion() const noexcept { return torsion_; }
    std::size_t generator_count() const noexcept { return torsion_.size() + free_rank_; }
    /// Order of generator i (0 for a free generator).
    Integer generator_order(std::size_t i) const;

    bool is_trivial() const noexcept { return free_rank_ == 0 && torsion_.empty(); }
    bool is_finite() const noexcept { return free_rank_ == 0; }
    /// Order of a finite group; throws InvalidArgument for infinite groups.
    Integer order() const;
    /// Product of the torsion invariants.
    Integer torsion_order() const;

    /// Reduces a coordinate vector into canonical range (torsion entries mod their order).
    IntVector normalize(IntVector coords) const;

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    void set_labels(std::vector<std::string> labels);

    /// "0", "Z", "Z^2 ⊕ Z/2 ⊕ Z/4"; `free_symbol` replaces "Z" for the free part.
    std::string to_string(const std::string& free_symbol = "Z") const;

    /// Equality ignores labels.
    friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) {
        return a.free_rank_ == b.free_rank_ && a.torsion_ == b.torsion_;
    }

private:
    std::size_t free_rank_ = 0;
    IntVector torsion_;
    std::vector<std::string> labels_;
};

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b);

/// The p-part of the torsion (every invariant replaced by its p-primary factor).
FinAbGroup p_primary_part(const FinAbGroup& g, const Integer& p);

/// Module over the p-local integers: Z_(p)^free_rank + sum Z/p^e.
struct LocalModule {
    Integer p;
    std::size_t free_rank = 0;
    IntVector p_torsion;

    /// Localisation of an integral group: keeps the free rank and the p-primary torsion.
    static LocalModule localize(const FinAbGroup& g, const Integer& p);
    /// Reinterprets invariants as a Z_(p)-module; throws unless all torsion is p-power.
    static LocalModule from_group(const FinAbGroup& g, const Integer& p);

    FinAbGroup as_group() const { return FinAbGroup(free_rank, p_torsion); }
    std::string to_string() const;

    friend bool operator==(const LocalModule& a, const LocalModule& b) = default;
};

struct TensorTor {
    FinAbGroup tensor;
    FinAbGroup tor;
};

/// (A ⊗ Z/m, Tor(A, Z/m)) for m >= 2.
TensorTor tensor_and_tor(const FinAbGroup& a, const Integer& m);

/// Same for a cyclic coefficient group given abstractly (m = 0 means Z).
FinAbGroup tensor_cyclic(const FinAbGroup& a, const Integer& m);
FinAbGroup tor_cyclic(const FinAbGroup& a, const Integer& m);

} // namespace cohomotopy::algebra
