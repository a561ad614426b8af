#pragma once

#include <vector>

#include "reeb3/types.hpp"

namespace reeb3 {

// Diffeomorphism type of the preimage of a small vertex neighborhood.
enum class PreimageClass : std::uint8_t {
    Ball3,             // cone point of a Morse extremum
    SolidTorus,        // circle of extremal points
    SphereCylinder,    // S2 x D1, sphere of extremal points
    TorusCylinder,     // T2 x D1, torus of extremal points
    RP3MinusBall,      // twisted sphere bundle over RP2's soul
    SurgeryCobordism,  // single Morse surgery between regular levels
};

const char* to_string(PreimageClass c);

struct CatalogEntry {
    VertexSignature signature;  // annotation included
    PreimageClass preimage;
};

// The complete local-form table: ten extremum entries (five shapes, both
// orientations) and the six non-extremal surgery signatures. Sphere and torus
// levels under a single Morse surgery admit nothing else.
const std::vector<CatalogEntry>& vertex_catalog();

// Annotations an extremum with `count` incident edges of uniform label `l`
// may carry. Empty when no extremum of that shape exists.
std::vector<SingularityKind> allowed_extremum_annotations(FiberLabel l, int count);

// Missing annotation on a non-extremal vertex is treated as MorsePoint; on an
// extremum it disqualifies the signature.
bool catalog_contains(const VertexSignature& sig);

const CatalogEntry* catalog_lookup(const VertexSignature& sig);

struct CatalogViolation {
    std::string vertex;
    std::string detail;
};

// Checks every vertex signature against the table. Expects a graph that
// already passes validate_problem1; on such graphs only non-extremal vertices
// can fail here.
std::vector<CatalogViolation> validate_catalog(const LabeledReebDigraph& g);

}  // namespace reeb3
