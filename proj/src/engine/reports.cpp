#include "cohomotopy/engine/cohomotopy.hpp"

#include "cohomotopy/catalog/catalog_space.hpp"
#include "cohomotopy/error.hpp"

#include <algorithm>
#include <sstream>

namespace cohomotopy::engine {

using algebra::FinAbGroup;
using algebra::Integer;
using algebra::PrimaryOperation;

PrimaryReport primary_component(std::shared_ptr<const CochainModel> space, int m, const Integer& p,
                                std::optional<Integer> working_prime) {
    PrimaryReport rep;
    rep.p = p;
    rep.m = m;
    if (p != 0) {
        if (!algebra::is_prime(p)) raise(ErrorCode::InvalidArgument, "p must be a prime or infinity");
        rep.working_prime = p;
    } else if (working_prime) {
        if (!algebra::is_prime(*working_prime)) raise(ErrorCode::InvalidArgument, "working prime must be prime");
        rep.working_prime = *working_prime;
    } else {
        for (Integer q = 2; 2 * q - 1 <= m; ++q) {
            if (!algebra::is_prime(q)) continue;
            if (check_hypotheses({space, m, Coefficients::local(q)}).passed()) {
                rep.working_prime = q;
                break;
            }
        }
        if (rep.working_prime == 0)
            raise(ErrorCode::HypothesisFailure, "no prime p satisfies dim X <= m + 2p - 3 and m >= 2p - 1 for m = " +
                                                    std::to_string(m) + ", dim X = " +
                                                    std::to_string(space->dimension()));
    }
    rep.local = modular_cohomotopy({std::move(space), m, Coefficients::local(rep.working_prime)});
    rep.free_rank = rep.local.quotient.free_rank();
    if (rep.local.group) rep.component = FinAbGroup(0, rep.local.group->torsion());
    return rep;
}

std::string PrimaryReport::summary() const {
    std::ostringstream out;
    const std::string target = "pi^" + std::to_string(m) + "(" + local.spec.space->name() + ")";
    if (p == 0) {
        out << "integral summand of " << target << ": "
            << (free_rank == 0 ? std::string("0") : FinAbGroup::free(free_rank).to_string()) << " (working prime "
            << working_prime << ")";
    } else {
        out << p << "-primary component of " << target << ": "
            << (component ? component->to_string() : std::string("undetermined"));
    }
    return out.str();
}

UctReport peterson_uct_check(std::shared_ptr<const CochainModel> space, int m, const Coefficients& g,
                             const FinAbGroup& pi_m, const FinAbGroup& pi_m1) {
    if (!g.is_modular()) raise(ErrorCode::InvalidArgument, "coefficients must be Z/p^r");
    const int dim = space->dimension();
    if (dim > 2 * m - 2)
        raise(ErrorCode::HypothesisFailure, "dim X = " + std::to_string(dim) + " > 2m - 2 = " + std::to_string(2 * m - 2));
    UctReport rep;
    const Integer& k = g.modulus();
    rep.tensor = algebra::tensor_cyclic(pi_m, k);
    rep.tor = algebra::tor_cyclic(pi_m1, k);
    rep.predicted_order = rep.tensor.order() * rep.tor.order();
    rep.engine = modular_cohomotopy({std::move(space), m, g});
    rep.engine_order = rep.engine.t_term.group.order() * rep.engine.quotient.order();
    rep.orders_match = rep.predicted_order == rep.engine_order;
    rep.split_predicted = k % 2 != 0;
    if (rep.split_predicted && rep.engine.group) rep.groups_match = *rep.engine.group == direct_sum(rep.tensor, rep.tor);
    return rep;
}

H3ImageReport hurewicz_image_h3(std::shared_ptr<const CochainModel> space, const Integer& p) {
    if (!algebra::is_prime(p)) raise(ErrorCode::InvalidArgument, "p must be prime");
    const int dim = space->dimension();
    if (Integer(dim) > 4 * p - 3)
        raise(ErrorCode::HypothesisFailure,
              "dim X = " + std::to_string(dim) + " > 4p - 3 = " + algebra::to_string(4 * p - 3));
    const Coefficients local = Coefficients::local(p);
    H3ImageReport rep;
    rep.p = p;
    auto h3 = space->cohomology(3, local);
    rep.h3 = h3->group();
    const GroupHom f = algebra::reduced_operation_matrix(*space, PrimaryOperation::reduced_power(p), local, 3);
    const auto kc = algebra::hom_kernel_cokernel(f);
    rep.kernel = kc.kernel;
    rep.inclusion = kc.inclusion;
    for (std::size_t j = 0; j < rep.inclusion.cols(); ++j) {
        algebra::IntVector col = rep.inclusion.column(j);
        auto lead = std::find_if(col.begin(), col.end(), [](const Integer& e) { return e != 0; });
        if (lead != col.end() && *lead < 0) {
            for (auto& e : col) e = -e;
            rep.inclusion.set_column(j, rep.h3.normalize(col));
        }
    }
    rep.index = algebra::image(f).order();
    rep.full = rep.index == 1;
    rep.equality_applies = p == 2 && dim <= 5;

    const auto* cat = dynamic_cast<const catalog::CatalogSpace*>(space.get());
    for (std::size_t j = 0; j < rep.inclusion.cols(); ++j) {
        const algebra::IntVector coords = rep.inclusion.column(j);
        if (cat) {
            rep.generator_names.push_back(cat->describe(h3->cochain_from(coords), 3));
        } else {
            std::ostringstream out;
            out << "(";
            for (std::size_t i = 0; i < coords.size(); ++i) out << (i ? ", " : "") << coords[i];
            out << ")";
            rep.generator_names.push_back(out.str());
        }
    }
    return rep;
}

} // namespace cohomotopy::engine
