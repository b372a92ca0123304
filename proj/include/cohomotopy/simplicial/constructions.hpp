#pragma once

#include "cohomotopy/simplicial/complex.hpp"

namespace cohomotopy::simplicial {

/// The full simplex on d + 1 vertices.
SimplicialComplex simplex(int d);
/// Boundary of the (n+1)-simplex, a triangulated n-sphere.
SimplicialComplex sphere(int n);
/// Minimal 6-vertex real projective plane.
SimplicialComplex real_projective_plane();
/// Minimal 7-vertex torus.
SimplicialComplex torus();
/// 5-vertex Moebius band.
SimplicialComplex moebius_band();
/// Minimal 9-vertex complex projective plane.
SimplicialComplex complex_projective_plane();
/// A 13-vertex 2-complex: a disk whose boundary wraps three times around a triangle,
/// so that its integral cohomology is Z/3 in degree 2.
SimplicialComplex mod3_moore_complex();
/// One-point union along vertex 0 of each summand; vertices of b follow those of a.
SimplicialComplex wedge(const SimplicialComplex& a, const SimplicialComplex& b);
/// Cone with a new apex after all existing vertices.
SimplicialComplex cone(const SimplicialComplex& k);

} // namespace cohomotopy::simplicial
