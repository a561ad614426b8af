#include "reeb3/splits.hpp"

namespace reeb3 {

namespace {

// Shared shape of both splits: the old vertex keeps its edges and turns into
// an interior vertex; a fresh Morse extremum hangs off it by a sphere edge on
// the empty side.
LabeledReebDigraph cap_with_morse_extremum(const LabeledReebDigraph& g,
                                           const std::string& v, bool is_minimum) {
    LabeledReebDigraph out = g;
    std::string cap = g.fresh_vertex(v, is_minimum ? "_min" : "_max");
    out.add_vertex(cap);
    out.set_sing(cap, SingularityKind::MorsePoint);
    out.set_sing(v, SingularityKind::MorsePoint);
    if (is_minimum)
        out.add_edge(cap, v, FiberLabel::Sphere2);
    else
        out.add_edge(v, cap, FiberLabel::Sphere2);
    if (auto h = g.height(v))
        out.set_height(cap, is_minimum ? *h - Rational(1) : *h + Rational(1));
    return out;
}

}  // namespace

LabeledReebDigraph split_circle_bott(const LabeledReebDigraph& g, const std::string& v) {
    if (!g.has_vertex(v)) throw UnknownVertexError(v);
    VertexSignature s = g.signature(v);
    if (s.sing != SingularityKind::Circle || !s.is_extremum() ||
        s.in_torus + s.out_torus != 1 || s.degree() != 1)
        throw BadSignatureError("split_circle_bott needs a Circle extremum of one torus edge, got " +
                                v + " = " + s.to_string());
    return cap_with_morse_extremum(g, v, /*is_minimum=*/s.out_torus == 1);
}

LabeledReebDigraph split_sphere_bott(const LabeledReebDigraph& g, const std::string& v) {
    if (!g.has_vertex(v)) throw UnknownVertexError(v);
    VertexSignature s = g.signature(v);
    if (s.sing == SingularityKind::TorusBott)
        throw BadSignatureError("a torus of extremal points does not split off a Morse extremum: " +
                                v + " = " + s.to_string());
    if (s.sing != SingularityKind::SphereBott || !s.is_extremum() ||
        s.in_sphere + s.out_sphere != 2 || s.degree() != 2)
        throw BadSignatureError("split_sphere_bott needs a SphereBott extremum of two sphere edges, got " +
                                v + " = " + s.to_string());
    return cap_with_morse_extremum(g, v, /*is_minimum=*/s.out_sphere == 2);
}

}  // namespace reeb3
