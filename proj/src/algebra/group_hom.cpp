#include "cohomotopy/algebra/group_hom.hpp"

#include "cohomotopy/algebra/lattice.hpp"
#include "cohomotopy/error.hpp"

namespace cohomotopy::algebra {

namespace {

// Columns order_j * e_j for the torsion generators of g.
IntMatrix relation_columns(const FinAbGroup& g) {
    IntMatrix d(g.generator_count(), g.torsion().size());
    for (std::size_t j = 0; j < g.torsion().size(); ++j) d(j, j) = g.torsion()[j];
    return d;
}

} // namespace

GroupHom::GroupHom(FinAbGroup source, FinAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.generator_count() || matrix_.cols() != source_.generator_count())
        raise(ErrorCode::InvalidArgument, "homomorphism matrix has the wrong shape");
    const auto& tt = target_.torsion();
    for (std::size_t r = 0; r < tt.size(); ++r)
        for (std::size_t c = 0; c < matrix_.cols(); ++c) matrix_(r, c) = mod(matrix_(r, c), tt[r]);
    for (std::size_t c = 0; c < source_.torsion().size(); ++c) {
        const Integer& d = source_.torsion()[c];
        for (std::size_t r = 0; r < matrix_.rows(); ++r) {
            Integer image = d * matrix_(r, c);
            bool ok = r < tt.size() ? (image % tt[r] == 0) : (image == 0);
            if (!ok)
                raise(ErrorCode::RelationViolation,
                      "generator of order " + d.str() + " is sent to an element of larger order");
        }
    }
}

GroupHom GroupHom::zero(const FinAbGroup& source, const FinAbGroup& target) {
    return GroupHom(source, target, IntMatrix(target.generator_count(), source.generator_count()));
}

GroupHom GroupHom::identity(const FinAbGroup& group) {
    return GroupHom(group, group, IntMatrix::identity(group.generator_count()));
}

IntVector GroupHom::apply(const IntVector& coords) const { return target_.normalize(matrix_.apply(coords)); }

bool GroupHom::is_zero() const { return matrix_.is_zero(); }

GroupHom compose(const GroupHom& g, const GroupHom& f) {
    if (!(f.target_ == g.source_)) raise(ErrorCode::InvalidArgument, "composition of incompatible homomorphisms");
    return GroupHom(f.source_, g.target_, g.matrix_ * f.matrix_);
}

KernelCokernel hom_kernel_cokernel(const GroupHom& f) {
    const FinAbGroup& src = f.source();
    const FinAbGroup& tgt = f.target();
    const std::size_t a = src.generator_count();
    const IntMatrix target_rel = relation_columns(tgt);

    KernelCokernel out;

    // Kernel: {x : f x in target relations} modulo the source relations.
    IntMatrix stacked = f.matrix().hconcat(target_rel);
    ScaledBasis solutions = kernel_lattice(stacked);
    IntMatrix gens(a, solutions.rank());
    for (std::size_t j = 0; j < solutions.rank(); ++j) {
        IntVector v = solutions.basis_vector(j);
        for (std::size_t i = 0; i < a; ++i) gens(i, j) = v[i];
    }
    Subquotient ker(lattice_from_generators(gens), relation_columns(src));
    out.kernel = ker.group();
    out.inclusion = IntMatrix(a, ker.representatives().size());
    for (std::size_t j = 0; j < ker.representatives().size(); ++j)
        out.inclusion.set_column(j, src.normalize(ker.representatives()[j]));

    Subquotient coker(full_lattice(tgt.generator_count()), stacked);
    out.cokernel = coker.group();
    out.projection = IntMatrix(out.cokernel.generator_count(), tgt.generator_count());
    for (std::size_t j = 0; j < tgt.generator_count(); ++j) {
        IntVector e(tgt.generator_count());
        e[j] = 1;
        out.projection.set_column(j, coker.coordinates(e));
    }
    return out;
}

FinAbGroup image(const GroupHom& f) {
    const IntMatrix target_rel = relation_columns(f.target());
    Subquotient im(lattice_from_generators(f.matrix().hconcat(target_rel)), target_rel);
    return im.group();
}

bool is_injective(const GroupHom& f) { return hom_kernel_cokernel(f).kernel.is_trivial(); }

bool is_surjective(const GroupHom& f) { return hom_kernel_cokernel(f).cokernel.is_trivial(); }

bool image_contained(const GroupHom& f, const GroupHom& g) {
    if (!(f.target() == g.target())) raise(ErrorCode::InvalidArgument, "image comparison needs a common target");
    auto kc = hom_kernel_cokernel(g);
    IntMatrix projected = kc.projection * f.matrix();
    for (std::size_t c = 0; c < projected.cols(); ++c)
        for (std::size_t r = 0; r < projected.rows(); ++r) {
            Integer order = kc.cokernel.generator_order(r);
            Integer v = order == 0 ? projected(r, c) : mod(projected(r, c), order);
            if (v != 0) return false;
        }
    return true;
}

bool images_equal(const GroupHom& f, const GroupHom& g) { return image_contained(f, g) && image_contained(g, f); }

} // namespace cohomotopy::algebra
