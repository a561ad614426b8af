#pragma once

#include "reeb3/types.hpp"

namespace reeb3 {

// Deforms a circle of extremal points into a Morse extremum feeding a
// sphere/torus transition: a Circle minimum (0|{T}) becomes a fresh Morse
// minimum, a sphere edge, and the old vertex as ({S}|{T}); mirrored for a
// maximum. Adds one vertex and one edge; betti1 and the census are
// preserved. Throws BadSignatureError unless the vertex is a Circle
// extremum.
LabeledReebDigraph split_circle_bott(const LabeledReebDigraph& g, const std::string& v);

// Same deformation for a sphere of extremal points: a SphereBott maximum
// ({S,S}|0) becomes the sphere-merge vertex ({S,S}|{S}) feeding a fresh
// Morse maximum; mirrored for a minimum. A torus of extremal points admits
// no such deformation and raises BadSignatureError.
LabeledReebDigraph split_sphere_bott(const LabeledReebDigraph& g, const std::string& v);

}  // namespace reeb3
