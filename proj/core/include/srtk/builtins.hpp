#pragma once

#include <string>
#include <vector>

#include "srtk/simplicial_complex.hpp"

namespace srtk {

/// Built-in corpus. Parametrized names take a ":k" suffix:
///   simplex_boundary:k   boundary of the k-simplex on k+1 vertices
///   cross_polytope:k     boundary of the k-dimensional cross-polytope on 2k vertices
///   rp2_6                6-vertex triangulation of the real projective plane
///   torus7               7-vertex triangulation of the torus
///   wedge_two_circles    two triangle boundaries glued at a vertex
///   bowtie_filled        two solid triangles glued at a vertex
SimplicialComplex builtin(const std::string& name);

std::vector<std::string> builtin_names();

} // namespace srtk
