#pragma once

#include "cohomotopy/algebra/cochain_model.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cohomotopy::simplicial {

using algebra::Coefficients;
using algebra::Integer;
using algebra::IntMatrix;
using algebra::IntVector;

/// Vertices of a simplex in strictly increasing order.
using Simplex = std::vector<int>;

/// Finite connected simplicial complex on vertices 0..V-1.
///
/// Input labels are relabelled in increasing order, so the order of the original
/// labels is the vertex order used by every cochain formula. Simplices of each
/// dimension are sorted lexicographically; cochains are indexed in that order.
class SimplicialComplex final : public algebra::CochainModel {
public:
    /// Throws ParseError for empty or repeated-vertex facets and NotConnected for a
    /// disconnected complex. An empty facet list gives the empty complex.
    static SimplicialComplex from_facets(const std::vector<std::vector<long long>>& facets, std::string name = "");

    SimplicialComplex(SimplicialComplex&&) noexcept = default;
    SimplicialComplex& operator=(SimplicialComplex&&) noexcept = default;

    std::string name() const override { return name_; }
    /// -1 for the empty complex.
    int dimension() const override { return static_cast<int>(simplices_.size()) - 1; }
    const algebra::CochainComplex& cochains() const override { return cochains_; }
    /// Sq^k through cup-i products; odd-prime reduced powers are UnsupportedOperation.
    IntVector apply_primary(const algebra::PrimaryOperation& op, const IntVector& cocycle, int degree) const override;

    std::size_t vertex_count() const noexcept { return labels_.size(); }
    /// Original label of vertex v.
    long long label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
    const std::vector<long long>& labels() const noexcept { return labels_; }

    std::size_t count(int degree) const;
    const std::vector<Simplex>& simplices(int degree) const;
    std::optional<std::size_t> index_of(const Simplex& s) const;
    /// Index (in degree - 1) of the face of simplex `index` of `degree` with position i removed.
    std::size_t face(int degree, std::size_t index, std::size_t i) const {
        return faces_[static_cast<std::size_t>(degree)][index * (static_cast<std::size_t>(degree) + 1) + i];
    }
    const std::vector<std::size_t>& face_table(int degree) const { return faces_.at(static_cast<std::size_t>(degree)); }

    std::vector<std::size_t> f_vector() const;
    long long euler_characteristic() const;
    std::vector<Simplex> facets() const;

    /// Matrix of delta: C^n -> C^{n+1}, (delta u)(s) = sum_i (-1)^i u(d_i s), reduced for
    /// modular coefficients. Requires 0 <= n < dim (DegreeOutOfRange).
    IntMatrix coboundary_matrix(int n, const Coefficients& coeffs) const;

private:
    SimplicialComplex() = default;

    std::string name_;
    std::vector<long long> labels_;
    std::vector<std::vector<Simplex>> simplices_;
    std::vector<std::map<Simplex, std::size_t>> index_;
    std::vector<std::vector<std::size_t>> faces_;
    algebra::CochainComplex cochains_;
};

/// Facet-list text (one facet per line, '#' comments) or the JSON form
/// {"vertices": [...] or count, "facets": [[...], ...], "name": "..."}.
SimplicialComplex parse_complex(const std::string& text, std::string name = "");
SimplicialComplex load_complex(const std::string& path);

/// Join with two new points, placed after all existing vertices in the order.
SimplicialComplex suspension(const SimplicialComplex& k);

/// Cochain restriction C^degree(X) -> C^degree(A) for a subcomplex A (matched by
/// original labels); InvalidArgument if A is not a subcomplex.
IntMatrix restriction_matrix(const SimplicialComplex& x, const SimplicialComplex& a, int degree);

} // namespace cohomotopy::simplicial
