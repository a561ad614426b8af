#include "reeb3/catalog.hpp"

namespace reeb3 {

const char* to_string(PreimageClass c) {
    switch (c) {
        case PreimageClass::Ball3: return "D3";
        case PreimageClass::SolidTorus: return "S1xD2";
        case PreimageClass::SphereCylinder: return "S2xD1";
        case PreimageClass::TorusCylinder: return "T2xD1";
        case PreimageClass::RP3MinusBall: return "RP3-minus-ball";
        case PreimageClass::SurgeryCobordism: return "surgery-cobordism";
    }
    return "?";
}

namespace {

VertexSignature sig(int is, int it, int os, int ot, SingularityKind k) {
    VertexSignature s;
    s.in_sphere = is;
    s.in_torus = it;
    s.out_sphere = os;
    s.out_torus = ot;
    s.sing = k;
    return s;
}

std::vector<CatalogEntry> build_catalog() {
    using K = SingularityKind;
    using P = PreimageClass;
    std::vector<CatalogEntry> c;
    // Extrema, minimum then maximum orientation of each shape.
    c.push_back({sig(0, 0, 1, 0, K::MorsePoint), P::Ball3});
    c.push_back({sig(1, 0, 0, 0, K::MorsePoint), P::Ball3});
    c.push_back({sig(0, 0, 1, 0, K::ProjectivePlane), P::RP3MinusBall});
    c.push_back({sig(1, 0, 0, 0, K::ProjectivePlane), P::RP3MinusBall});
    c.push_back({sig(0, 0, 0, 1, K::Circle), P::SolidTorus});
    c.push_back({sig(0, 1, 0, 0, K::Circle), P::SolidTorus});
    c.push_back({sig(0, 0, 2, 0, K::SphereBott), P::SphereCylinder});
    c.push_back({sig(2, 0, 0, 0, K::SphereBott), P::SphereCylinder});
    c.push_back({sig(0, 0, 0, 2, K::TorusBott), P::TorusCylinder});
    c.push_back({sig(0, 2, 0, 0, K::TorusBott), P::TorusCylinder});
    // Non-extremal Morse vertices: sphere merge/split, sphere absorbed into or
    // emitted from a torus, and the degree-2 sphere/torus transitions.
    c.push_back({sig(2, 0, 1, 0, K::MorsePoint), P::SurgeryCobordism});
    c.push_back({sig(1, 0, 2, 0, K::MorsePoint), P::SurgeryCobordism});
    c.push_back({sig(1, 1, 0, 1, K::MorsePoint), P::SurgeryCobordism});
    c.push_back({sig(0, 1, 1, 1, K::MorsePoint), P::SurgeryCobordism});
    c.push_back({sig(1, 0, 0, 1, K::MorsePoint), P::SurgeryCobordism});
    c.push_back({sig(0, 1, 1, 0, K::MorsePoint), P::SurgeryCobordism});
    return c;
}

}  // namespace

const std::vector<CatalogEntry>& vertex_catalog() {
    static const std::vector<CatalogEntry> table = build_catalog();
    return table;
}

std::vector<SingularityKind> allowed_extremum_annotations(FiberLabel l, int count) {
    using K = SingularityKind;
    if (count == 1 && l == FiberLabel::Sphere2) return {K::MorsePoint, K::ProjectivePlane};
    if (count == 1 && l == FiberLabel::Torus2) return {K::Circle};
    if (count == 2 && l == FiberLabel::Sphere2) return {K::SphereBott};
    if (count == 2 && l == FiberLabel::Torus2) return {K::TorusBott};
    return {};
}

const CatalogEntry* catalog_lookup(const VertexSignature& sig) {
    VertexSignature probe = sig;
    if (!probe.sing && !probe.is_extremum()) probe.sing = SingularityKind::MorsePoint;
    if (!probe.sing) return nullptr;
    for (const CatalogEntry& e : vertex_catalog())
        if (e.signature.same_shape(probe) && e.signature.sing == probe.sing) return &e;
    return nullptr;
}

bool catalog_contains(const VertexSignature& sig) { return catalog_lookup(sig) != nullptr; }

std::vector<CatalogViolation> validate_catalog(const LabeledReebDigraph& g) {
    std::vector<CatalogViolation> out;
    for (const std::string& v : g.vertices()) {
        VertexSignature s = g.signature(v);
        if (!catalog_contains(s))
            out.push_back({v, "signature " + s.to_string() + " is not a local form"});
    }
    return out;
}

}  // namespace reeb3
