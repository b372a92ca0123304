#pragma once

#include "cohomotopy/algebra/cochain_model.hpp"
#include "cohomotopy/engine/extensions.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cohomotopy::engine {

using algebra::CochainModel;
using algebra::Coefficients;
using algebra::GroupHom;
using algebra::IntMatrix;
using algebra::IntVector;

/// pi^n(X; G) with G = Z/p^r (r >= 1) or Z_(p).
struct CohomotopySpec {
    std::shared_ptr<const CochainModel> space;
    int n = 0;
    Coefficients coeffs = Coefficients::integers();

    /// Throws InvalidArgument unless the coefficients are Z/p^r or Z_(p) and n >= 1.
    void validate() const;
    algebra::Integer prime() const;
    /// r for Z/p^r, 0 for Z_(p).
    unsigned level() const;
};

struct HypothesisReport {
    int dimension = 0;
    int n = 0;
    algebra::Integer p;
    bool dimension_ok = false;   // dim X <= n + 2p - 3
    bool degree_ok = false;      // n >= 2p - 1

    bool passed() const { return dimension_ok && degree_ok; }
    /// The failed inequalities spelled out, e.g. "dim X = 10 > n + 2p - 3 = 9".
    std::string failure_message() const;
    std::vector<std::string> lines() const;
};

HypothesisReport check_hypotheses(const CohomotopySpec& spec);

/// Cokernel of P^1_G : H^{n-1}(X; G) -> H^{n+2p-3}(X; Z/p) (Sq^2 at p = 2).
struct TTerm {
    int numerator_degree = 0;
    algebra::FinAbGroup numerator;
    GroupHom denominator_map = GroupHom::zero({}, {});
    algebra::FinAbGroup group;
};

/// Throws HypothesisFailure when the hypotheses fail.
TTerm t_operator(const CohomotopySpec& spec);

enum class SplitStatus { Splits, DoesNotSplit, Unknown };

enum class SplitCriterion {
    LocalImagesAgree,          // Z_(p): P^1 images over Z_(p) and Z/p coincide
    LocalImagesDiffer,
    DoublingInjective,         // Z/2^r, r >= 2: [2] injective and the Sq^1 inclusion holds
    DoublingInclusionFails,
    DoublingNotInjective,
    Sq1Vanishes,               // Z/2: Sq^1 = 0 on H^n
    Sq1NonzeroNoLowerClasses,  // Z/2: Sq^1 != 0 and H^{n-1} = 0
    Sq1NonzeroUndetermined,
    OddFirstLevel,             // Z/p, p odd
    OddMultiplicationInjective,
    OddMultiplicationNotInjective,
};

std::string_view to_string(SplitStatus s);
std::string_view to_string(SplitCriterion c);

struct SplitVerdict {
    SplitStatus status = SplitStatus::Unknown;
    SplitCriterion criterion = SplitCriterion::OddFirstLevel;
    /// Set when an undetermined verdict was settled by T = 0, H = 0, or a unique candidate.
    std::optional<std::string> settled_by;
    std::vector<std::string> trace;
};

SplitVerdict splitting_verdict(const CohomotopySpec& spec, const TTerm& t);

struct CohomotopyResult {
    CohomotopySpec spec;
    HypothesisReport hypotheses;
    TTerm t_term;
    algebra::FinAbGroup quotient;   // H^n(X; G)
    SplitVerdict verdict;
    std::optional<algebra::FinAbGroup> group;
    std::vector<algebra::FinAbGroup> candidates;
    std::vector<std::string> notes;

    /// Free summands are printed with this symbol ("Z_(p)" or "Z").
    std::string free_symbol() const;
};

/// Throws HypothesisFailure when the hypotheses fail.
CohomotopyResult modular_cohomotopy(const CohomotopySpec& spec);

/// p-primary component of pi^m(X) (p prime), or its free rank (p = 0, meaning infinity).
struct PrimaryReport {
    algebra::Integer p;   // 0 for infinity
    int m = 0;
    algebra::Integer working_prime;
    CohomotopyResult local;
    std::optional<algebra::FinAbGroup> component;   // torsion of the resolved local group
    std::size_t free_rank = 0;
    std::string summary() const;
};

/// For p = 0 the working prime defaults to the least prime satisfying the hypotheses.
PrimaryReport primary_component(std::shared_ptr<const CochainModel> space, int m, const algebra::Integer& p,
                                std::optional<algebra::Integer> working_prime = std::nullopt);

struct UctReport {
    algebra::FinAbGroup tensor;   // pi^m(X) ⊗ G
    algebra::FinAbGroup tor;      // Tor(pi^{m+1}(X), G)
    algebra::Integer predicted_order;
    algebra::Integer engine_order;
    bool orders_match = false;
    /// G has no 2-torsion: the sequence is predicted to split.
    bool split_predicted = false;
    std::optional<bool> groups_match;
    CohomotopyResult engine;
};

/// Universal-coefficient order check; needs dim X <= 2m - 2 (HypothesisFailure).
UctReport peterson_uct_check(std::shared_ptr<const CochainModel> space, int m, const Coefficients& g,
                             const algebra::FinAbGroup& pi_m, const algebra::FinAbGroup& pi_m1);

struct H3ImageReport {
    algebra::Integer p;
    algebra::FinAbGroup h3;
    algebra::FinAbGroup kernel;
    IntMatrix inclusion;   // columns: H^3 coordinates of kernel generators
    std::vector<std::string> generator_names;
    algebra::Integer index;   // |H^3 / kernel|
    bool full = false;
    /// p = 2 and dim X <= 5: the kernel is the whole image, not just a bound.
    bool equality_applies = false;
};

/// Kernel of P^1_{Z_(p)} : H^3(X; Z_(p)) -> H^{2p+1}(X; Z/p); needs dim X <= 4p - 3.
H3ImageReport hurewicz_image_h3(std::shared_ptr<const CochainModel> space, const algebra::Integer& p);

/// "pi^7(CP(5); Z_(3)) = Z/3 [splits: T=Z/3, H=0]".
std::string summary_line(const CohomotopyResult& r);

} // namespace cohomotopy::engine
