#include "cohomotopy/engine/cohomotopy.hpp"

#include "cohomotopy/error.hpp"

#include <algorithm>
#include <sstream>

namespace cohomotopy::engine {

using algebra::CoefficientMap;
using algebra::FinAbGroup;
using algebra::Integer;
using algebra::PrimaryOperation;

namespace {

std::string degree_group(const char* name, int degree, const Coefficients& c) {
    return name + std::string("^") + std::to_string(degree) + "(X;" + c.to_string() + ")";
}

std::string order_text(const GroupHom& f) {
    return algebra::to_string(algebra::image(f).order());
}

void require_hypotheses(const CohomotopySpec& spec) {
    const HypothesisReport h = check_hypotheses(spec);
    if (!h.passed()) raise(ErrorCode::HypothesisFailure, h.failure_message());
}

GroupHom multiplication_by_p(const CohomotopySpec& spec, const Integer& p, unsigned r) {
    const Coefficients lower = Coefficients::modular(algebra::pow(p, r - 1));
    return algebra::coefficient_change_matrix(*spec.space, spec.n, lower,
                                              CoefficientMap::multiply(p, spec.coeffs));
}

bool has_summand(const FinAbGroup& g, const Integer& d) {
    return std::find(g.torsion().begin(), g.torsion().end(), d) != g.torsion().end();
}

// Both published readings of the Moore-space example, checked whenever X looks like a
// Moore space at 2 (cohomologically (n-1)-connected, dim <= n+1, 2-torsion in H_n).
std::optional<std::string> moore_discrepancy(const CohomotopySpec& spec, const CohomotopyResult& r) {
    if (spec.prime() != 2) return std::nullopt;
    const auto& x = *spec.space;
    if (x.dimension() > spec.n + 1) return std::nullopt;
    const Coefficients z = Coefficients::integers();
    for (int k = 1; k < spec.n; ++k)
        if (!x.cohomology(k, z)->group().is_trivial()) return std::nullopt;
    // H_n = Z^{rank H^n} + tors H^{n+1}.
    const FinAbGroup hn(x.cohomology(spec.n, z)->group().free_rank(), x.cohomology(spec.n + 1, z)->group().torsion());
    if (p_primary_part(hn, 2).is_trivial()) return std::nullopt;

    const unsigned level = spec.coeffs.is_local() ? 0 : spec.level();
    const bool by_level = level != 1;
    const bool by_homology = !has_summand(p_primary_part(hn, 2), 2);
    auto word = [](bool s) { return s ? "splits" : "does not split"; };
    std::ostringstream out;
    out << "discrepancy: for M(Z/2^s) with G = Z/2^r the two Moore-space rules conflict, 'splits iff r >= 2' versus "
        << "'splits iff s >= 2' (H_n(X) has no Z/2 summand); here H_n(X) = " << hn.to_string() << " and they predict "
        << word(by_level) << " and " << word(by_homology) << "; the verdict above comes from the criterion";
    if (r.group) out << " and the computed group " << r.group->to_string(r.free_symbol());
    return out.str();
}

} // namespace

std::string_view to_string(SplitStatus s) {
    switch (s) {
    case SplitStatus::Splits: return "splits";
    case SplitStatus::DoesNotSplit: return "does not split";
    case SplitStatus::Unknown: return "undetermined";
    }
    return "?";
}

std::string_view to_string(SplitCriterion c) {
    switch (c) {
    case SplitCriterion::LocalImagesAgree: return "local and mod-p images of P^1 agree";
    case SplitCriterion::LocalImagesDiffer: return "local and mod-p images of P^1 differ";
    case SplitCriterion::DoublingInjective: return "[2] injective on H^n and Sq^1 lands in the Sq^2 image";
    case SplitCriterion::DoublingInclusionFails: return "[2] injective on H^n but Sq^1 leaves the Sq^2 image";
    case SplitCriterion::DoublingNotInjective: return "[2] not injective on H^n";
    case SplitCriterion::Sq1Vanishes: return "Sq^1 vanishes on H^n(X;Z/2)";
    case SplitCriterion::Sq1NonzeroNoLowerClasses: return "Sq^1 nonzero on H^n(X;Z/2) and H^{n-1}(X;Z/2) = 0";
    case SplitCriterion::Sq1NonzeroUndetermined: return "Sq^1 nonzero on H^n(X;Z/2) with H^{n-1}(X;Z/2) != 0";
    case SplitCriterion::OddFirstLevel: return "odd prime, first level r = 1";
    case SplitCriterion::OddMultiplicationInjective: return "odd prime, [p] injective on H^n";
    case SplitCriterion::OddMultiplicationNotInjective: return "odd prime, [p] not injective on H^n";
    }
    return "?";
}

TTerm t_operator(const CohomotopySpec& spec) {
    require_hypotheses(spec);
    const Integer p = spec.prime();
    const auto& x = *spec.space;
    TTerm t{spec.n + 2 * static_cast<int>(p) - 3, {}, GroupHom::zero({}, {}), {}};
    const Coefficients fp = Coefficients::modular(p);
    t.numerator = x.cohomology(t.numerator_degree, fp)->group();
    t.denominator_map = algebra::reduced_operation_matrix(x, PrimaryOperation::reduced_power(p), spec.coeffs, spec.n - 1);
    t.group = algebra::hom_kernel_cokernel(t.denominator_map).cokernel;
    return t;
}

SplitVerdict splitting_verdict(const CohomotopySpec& spec, const TTerm& t) {
    const auto& x = *spec.space;
    const Integer p = spec.prime();
    const Coefficients fp = Coefficients::modular(p);
    const PrimaryOperation p1 = PrimaryOperation::reduced_power(p);
    SplitVerdict v;
    auto& trace = v.trace;
    trace.push_back("T = " + degree_group("H", t.numerator_degree, fp) + " / image = " + t.group.to_string());

    if (spec.coeffs.is_local()) {
        const GroupHom mod_p = algebra::primary_operation_matrix(x, p1, spec.n - 1);
        const bool equal = algebra::images_equal(t.denominator_map, mod_p);
        trace.push_back("image of " + p1.name() + " on " + degree_group("H", spec.n - 1, spec.coeffs) + " has order " +
                        order_text(t.denominator_map));
        trace.push_back("image of " + p1.name() + " on " + degree_group("H", spec.n - 1, fp) + " has order " +
                        order_text(mod_p));
        trace.push_back(std::string("images ") + (equal ? "coincide" : "differ") + " in " +
                        degree_group("H", t.numerator_degree, fp));
        v.status = equal ? SplitStatus::Splits : SplitStatus::DoesNotSplit;
        v.criterion = equal ? SplitCriterion::LocalImagesAgree : SplitCriterion::LocalImagesDiffer;
        return v;
    }

    const unsigned r = spec.level();
    if (p == 2 && r >= 2) {
        const GroupHom doubling = multiplication_by_p(spec, p, r);
        const bool injective = algebra::is_injective(doubling);
        trace.push_back("[2]: " + degree_group("H", spec.n, Coefficients::modular(algebra::pow(p, r - 1))) + " -> " +
                        degree_group("H", spec.n, spec.coeffs) + (injective ? " is injective" : " is not injective"));
        const GroupHom sq1_integral =
            algebra::reduced_operation_matrix(x, PrimaryOperation::square(1), Coefficients::integers(), spec.n);
        const GroupHom sq1_mod2 = algebra::primary_operation_matrix(x, PrimaryOperation::square(1), spec.n);
        const bool contained = algebra::image_contained(sq1_integral, t.denominator_map);
        const bool contained_mod2 = algebra::image_contained(sq1_mod2, t.denominator_map);
        trace.push_back("subgroups compared after reduction, inside " + degree_group("H", spec.n + 1, fp));
        trace.push_back(std::string("Sq^1 of reduced integral classes ") + (contained ? "lies" : "does not lie") +
                        " in Sq^2 of " + degree_group("H", spec.n - 1, spec.coeffs) + " (image order " +
                        order_text(sq1_integral) + ")");
        trace.push_back(std::string("Sq^1 of all of ") + degree_group("H", spec.n, fp) +
                        (contained_mod2 ? " lies" : " does not lie") + " in that image (image order " +
                        order_text(sq1_mod2) + "); recorded only");
        if (!injective) {
            v.status = SplitStatus::Unknown;
            v.criterion = SplitCriterion::DoublingNotInjective;
        } else {
            v.status = contained ? SplitStatus::Splits : SplitStatus::DoesNotSplit;
            v.criterion = contained ? SplitCriterion::DoublingInjective : SplitCriterion::DoublingInclusionFails;
        }
        return v;
    }

    if (p == 2) {
        const GroupHom sq1 = algebra::primary_operation_matrix(x, PrimaryOperation::square(1), spec.n);
        trace.push_back("Sq^1 on " + degree_group("H", spec.n, fp) + " has image of order " + order_text(sq1));
        if (sq1.is_zero()) {
            v.status = SplitStatus::Splits;
            v.criterion = SplitCriterion::Sq1Vanishes;
            return v;
        }
        const bool lower_zero = x.cohomology(spec.n - 1, fp)->group().is_trivial();
        trace.push_back(degree_group("H", spec.n - 1, fp) + (lower_zero ? " = 0" : " != 0"));
        v.status = lower_zero ? SplitStatus::DoesNotSplit : SplitStatus::Unknown;
        v.criterion = lower_zero ? SplitCriterion::Sq1NonzeroNoLowerClasses : SplitCriterion::Sq1NonzeroUndetermined;
        return v;
    }

    if (r == 1) {
        v.status = SplitStatus::Splits;
        v.criterion = SplitCriterion::OddFirstLevel;
        return v;
    }
    const GroupHom mult = multiplication_by_p(spec, p, r);
    const bool injective = algebra::is_injective(mult);
    trace.push_back("[" + algebra::to_string(p) + "] on " + degree_group("H", spec.n, spec.coeffs) +
                    (injective ? " is injective" : " is not injective"));
    v.status = injective ? SplitStatus::Splits : SplitStatus::Unknown;
    v.criterion = injective ? SplitCriterion::OddMultiplicationInjective : SplitCriterion::OddMultiplicationNotInjective;
    return v;
}

std::string CohomotopyResult::free_symbol() const { return spec.coeffs.free_symbol(); }

CohomotopyResult modular_cohomotopy(const CohomotopySpec& spec) {
    CohomotopyResult r{spec, check_hypotheses(spec), t_operator(spec), {}, {}, std::nullopt, {}, {}};
    r.quotient = spec.space->cohomology(spec.n, spec.coeffs)->group();
    r.verdict = splitting_verdict(spec, r.t_term);
    const FinAbGroup direct = direct_sum(r.t_term.group, r.quotient);

    try {
        r.candidates = enumerate_extensions(r.t_term.group, r.quotient);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::TooLarge) throw;
        r.notes.push_back("candidate list omitted: " + e.message());
    }

    if (r.verdict.status == SplitStatus::Unknown) {
        if (r.t_term.group.is_trivial())
            r.verdict.settled_by = "T = 0";
        else if (r.quotient.is_trivial())
            r.verdict.settled_by = "H^n = 0";
        else if (r.candidates.size() == 1)
            r.verdict.settled_by = "only one extension exists";
        if (r.verdict.settled_by) r.verdict.status = SplitStatus::Splits;
    }

    if (r.verdict.status == SplitStatus::Splits) {
        r.group = direct;
    } else if (r.verdict.status == SplitStatus::DoesNotSplit) {
        std::vector<FinAbGroup> nonsplit;
        for (const auto& c : r.candidates)
            if (!(c == direct)) nonsplit.push_back(c);
        if (nonsplit.size() == 1) r.group = nonsplit.front();
    }
    if (auto note = moore_discrepancy(spec, r)) r.notes.push_back(*note);
    return r;
}

std::string summary_line(const CohomotopyResult& r) {
    const std::string sym = r.free_symbol();
    std::ostringstream out;
    out << "pi^" << r.spec.n << "(" << r.spec.space->name() << "; " << r.spec.coeffs.to_string() << ") = ";
    if (r.group) {
        out << r.group->to_string(sym);
    } else {
        out << "one of {";
        for (std::size_t i = 0; i < r.candidates.size(); ++i) out << (i ? ", " : "") << r.candidates[i].to_string(sym);
        out << "}";
    }
    out << " [" << to_string(r.verdict.status) << ": T=" << r.t_term.group.to_string()
        << ", H=" << r.quotient.to_string(sym) << "]";
    return out.str();
}

} // namespace cohomotopy::engine
