#pragma once

#include "cohomotopy/algebra/abelian_group.hpp"
#include "cohomotopy/algebra/int_matrix.hpp"

namespace cohomotopy::algebra {

/// Homomorphism between groups in invariant-factor presentation. Column j holds the
/// coordinates of the image of source generator j.
class GroupHom {
public:
    /// Validates that relations are respected (RelationViolation) and reduces the
    /// torsion rows into canonical range.
    GroupHom(FinAbGroup source, FinAbGroup target, IntMatrix matrix);

    static GroupHom zero(const FinAbGroup& source, const FinAbGroup& target);
    static GroupHom identity(const FinAbGroup& group);

    const FinAbGroup& source() const noexcept { return source_; }
    const FinAbGroup& target() const noexcept { return target_; }
    const IntMatrix& matrix() const noexcept { return matrix_; }

    IntVector apply(const IntVector& coords) const;
    bool is_zero() const;

    /// g ∘ f.
    friend GroupHom compose(const GroupHom& g, const GroupHom& f);

private:
    FinAbGroup source_;
    FinAbGroup target_;
    IntMatrix matrix_;
};

struct KernelCokernel {
    FinAbGroup kernel;
    /// Columns: source coordinates of the kernel generators.
    IntMatrix inclusion;
    FinAbGroup cokernel;
    /// Columns: cokernel coordinates of the target generators.
    IntMatrix projection;
};

KernelCokernel hom_kernel_cokernel(const GroupHom& f);

FinAbGroup image(const GroupHom& f);
bool is_injective(const GroupHom& f);
bool is_surjective(const GroupHom& f);
/// im f ⊆ im g; both maps must share the target group.
bool image_contained(const GroupHom& f, const GroupHom& g);
bool images_equal(const GroupHom& f, const GroupHom& g);

} // namespace cohomotopy::algebra
