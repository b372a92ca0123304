#pragma once

#include "cohomotopy/algebra/cochain_model.hpp"
#include "cohomotopy/catalog/space_expr.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cohomotopy::catalog {

using algebra::Coefficients;
using algebra::GroupHom;
using algebra::IntMatrix;
using algebra::IntVector;

/// Cellular model of a catalog space: reduced cellular cochains plus cell-level tables
/// for the mod-p operations and the integral cup product.
class CatalogSpace final : public algebra::CochainModel {
public:
    struct Cell {
        int degree = 0;
        std::string label;
        std::size_t atom = 0;   // index of the wedge summand that owns the cell
        int exponent = 0;       // m for alpha^m; 0 or 1 for the two cells of a Moore space
    };

    explicit CatalogSpace(SpaceExpr expr);

    std::string name() const override { return expr_.to_string(); }
    int dimension() const override { return dimension_; }
    const algebra::CochainComplex& cochains() const override { return cochains_; }
    IntVector apply_primary(const algebra::PrimaryOperation& op, const IntVector& cocycle, int degree) const override;

    const SpaceExpr& expr() const noexcept { return expr_; }
    /// Cells of the given degree in cochain order.
    std::vector<Cell> cells(int degree) const;

    /// Integral cup product of cochains of degrees a and b.
    IntVector cup(const IntVector& u, int a, const IntVector& v, int b) const;

    /// Human-readable name of a cochain, e.g. "α^2" or "2σα + e_6".
    std::string describe(const IntVector& cochain, int degree) const;

private:
    struct Atom {
        SpaceExpr::Kind kind;
        int n = 0;
        algebra::Integer p = 0;
        unsigned r = 0;
        int shift = 0;
        std::string suffix;
    };
    struct OpTerm {
        std::size_t target;
        algebra::Integer coeff;
    };

    void collect(const SpaceExpr& x, int shift, const std::string& suffix);
    std::vector<OpTerm> act(const algebra::PrimaryOperation& op, int degree, std::size_t index) const;
    std::optional<std::size_t> find_cell(std::size_t atom, int exponent, int degree) const;

    SpaceExpr expr_;
    int dimension_ = 0;
    std::vector<Atom> atoms_;
    std::vector<std::vector<Cell>> cells_;
    algebra::CochainComplex cochains_;
};

/// Shared, immutable model for an expression (memoised process-wide).
std::shared_ptr<const CatalogSpace> catalog_space(const SpaceExpr& x);

struct CatalogCohomology {
    algebra::FinAbGroup group;                      // carries generator labels
    std::optional<algebra::LocalModule> local;      // set for Z_(p) coefficients
    std::vector<IntVector> representatives;
};

/// Labelled reduced cohomology; degree must be >= 1.
CatalogCohomology catalog_cohomology(const SpaceExpr& x, int n, const Coefficients& coeffs);

/// An operation on catalog cohomology: a mod-p primary operation precomposed with
/// reduction from the given coefficients, or the Bockstein beta_r on Z/p^r.
class CatalogOperation {
public:
    enum class Kind { Primary, Bockstein };

    static CatalogOperation primary(algebra::PrimaryOperation op) { return CatalogOperation(Kind::Primary, std::move(op), 0); }
    static CatalogOperation bockstein(unsigned r) {
        return CatalogOperation(Kind::Bockstein, algebra::PrimaryOperation::square(0), r);
    }

    Kind kind() const noexcept { return kind_; }
    const algebra::PrimaryOperation& op() const noexcept { return op_; }
    unsigned level() const noexcept { return r_; }
    std::string name() const;

private:
    CatalogOperation(Kind kind, algebra::PrimaryOperation op, unsigned r) : kind_(kind), op_(std::move(op)), r_(r) {}

    Kind kind_;
    algebra::PrimaryOperation op_;
    unsigned r_;
};

/// Induced map with source H^n(X; coeffs). Primary operations land in mod-p cohomology;
/// coefficients must reduce to Z/p (IncompatibleCoefficients). Bocksteins need Z/p^r
/// coefficients (WrongCoefficients).
GroupHom catalog_operation(const SpaceExpr& x, const CatalogOperation& op, int n, const Coefficients& coeffs);

} // namespace cohomotopy::catalog
