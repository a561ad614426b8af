#include <doctest.h>

#include <algorithm>

#include "reeb3/catalog.hpp"
#include "reeb3/graph_algos.hpp"
#include "reeb3/independent_check.hpp"
#include "reeb3/isomorphism.hpp"
#include "reeb3/types.hpp"
#include "reeb3/validate.hpp"
#include "helpers.hpp"

using namespace reeb3;

namespace {

LabeledReebDigraph chain_st() {
    // bottom -> mid (S2), mid -> top (T2): the minimal mixed chain.
    LabeledReebDigraph g;
    g.add_vertex("bottom");
    g.add_vertex("mid");
    g.add_vertex("top");
    g.add_edge("bottom", "mid", FiberLabel::Sphere2);
    g.add_edge("mid", "top", FiberLabel::Torus2);
    g.set_sing("bottom", SingularityKind::MorsePoint);
    g.set_sing("top", SingularityKind::Circle);
    return g;
}

}  // namespace

TEST_CASE("vertex signatures count labels by side") {
    LabeledReebDigraph g = chain_st();
    VertexSignature mid = g.signature("mid");
    CHECK(mid.in_sphere == 1);
    CHECK(mid.in_torus == 0);
    CHECK(mid.out_sphere == 0);
    CHECK(mid.out_torus == 1);
    CHECK(mid.degree() == 2);
    CHECK_FALSE(mid.is_extremum());
    CHECK(mid.labels_mixed());

    VertexSignature bottom = g.signature("bottom");
    CHECK(bottom.is_extremum());
    CHECK(bottom.out_degree() == 1);
    CHECK(bottom.sing == SingularityKind::MorsePoint);
}

TEST_CASE("graph builder rejects misuse") {
    LabeledReebDigraph g;
    g.add_vertex("a");
    CHECK_THROWS_AS(g.add_vertex("a"), DuplicateVertexError);
    CHECK_THROWS_AS(g.add_vertex("bad id"), BadVertexIdError);
    CHECK_THROWS_AS(g.add_vertex(""), BadVertexIdError);
    CHECK_THROWS_AS(g.add_edge("a", "nope", FiberLabel::Sphere2), UnknownVertexError);
    CHECK_THROWS_AS(g.set_sing("nope", SingularityKind::Circle), UnknownVertexError);
}

TEST_CASE("fresh vertex ids never collide") {
    LabeledReebDigraph g;
    g.add_vertex("v");
    g.add_vertex("v_lo");
    CHECK(g.fresh_vertex("v", "_lo") == "v_lo2");
    CHECK(g.fresh_vertex("v", "_hi") == "v_hi");
}

TEST_CASE("effective annotation defaults interior vertices to Morse points") {
    LabeledReebDigraph g = chain_st();
    CHECK(g.sing("mid") == std::nullopt);
    CHECK(g.effective_sing("mid") == SingularityKind::MorsePoint);
    CHECK(g.effective_sing("top") == SingularityKind::Circle);

    LabeledReebDigraph lone;
    lone.add_vertex("x");
    CHECK(lone.effective_sing("x") == std::nullopt);
}

TEST_CASE("degree counts loops twice") {
    LabeledReebDigraph g;
    g.add_vertex("a");
    g.add_edge("a", "a", FiberLabel::Sphere2);
    CHECK(g.degree("a") == 2);
    // incident_edges lists distinct edge indices, so the loop appears once.
    CHECK(g.incident_edges("a") == std::vector<int>{0});
}

TEST_CASE("validator accepts the fixtures") {
    for (const char* name : {"s3.reeb", "lens_path.reeb", "cycle_only.reeb",
                             "triangle_pendant.reeb", "rp3.reeb", "solid_torus_pair.reeb",
                             "heights.reeb"}) {
        CAPTURE(name);
        ValidationReport r = validate_problem1(load_fixture(name));
        CHECK_MESSAGE(r.ok(), r.to_string());
    }
}

TEST_CASE("validator finds each violation kind") {
    SUBCASE("no edges") {
        LabeledReebDigraph g;
        CHECK(validate_problem1(g).has(ViolationKind::NoEdges));
        g.add_vertex("a");
        CHECK(validate_problem1(g).has(ViolationKind::NoEdges));
    }
    SUBCASE("isolated vertex") {
        LabeledReebDigraph g = chain_st();
        g.add_vertex("stray");
        CHECK(validate_problem1(g).has(ViolationKind::IsolatedVertex));
    }
    SUBCASE("loop is a directed cycle") {
        LabeledReebDigraph g;
        g.add_vertex("a");
        g.add_edge("a", "a", FiberLabel::Sphere2);
        CHECK(validate_problem1(g).has(ViolationKind::DirectedCycle));
    }
    SUBCASE("two-step directed cycle") {
        LabeledReebDigraph g;
        g.add_vertex("a");
        g.add_vertex("b");
        g.add_edge("a", "b", FiberLabel::Torus2);
        g.add_edge("b", "a", FiberLabel::Torus2);
        CHECK(validate_problem1(g).has(ViolationKind::DirectedCycle));
    }
    SUBCASE("extremum of degree three") {
        LabeledReebDigraph g;
        g.add_vertex("src");
        for (const char* t : {"t1", "t2", "t3"}) {
            g.add_vertex(t);
            g.add_edge("src", t, FiberLabel::Sphere2);
            g.set_sing(t, SingularityKind::MorsePoint);
        }
        g.set_sing("src", SingularityKind::SphereBott);
        CHECK(validate_problem1(g).has(ViolationKind::ExtremumDegree));
    }
    SUBCASE("extremum with mixed labels") {
        LabeledReebDigraph g;
        g.add_vertex("src");
        g.add_vertex("a");
        g.add_vertex("b");
        g.add_edge("src", "a", FiberLabel::Sphere2);
        g.add_edge("src", "b", FiberLabel::Torus2);
        g.set_sing("src", SingularityKind::SphereBott);
        g.set_sing("a", SingularityKind::MorsePoint);
        g.set_sing("b", SingularityKind::Circle);
        CHECK(validate_problem1(g).has(ViolationKind::ExtremumMixedLabels));
    }
    SUBCASE("extremum without annotation") {
        LabeledReebDigraph g;
        g.add_vertex("a");
        g.add_vertex("b");
        g.add_edge("a", "b", FiberLabel::Sphere2);
        g.set_sing("b", SingularityKind::MorsePoint);
        CHECK(validate_problem1(g).has(ViolationKind::ExtremumMissingAnnotation));
    }
    SUBCASE("annotation incompatible with the local shape") {
        auto bad = [](FiberLabel l, int count, SingularityKind k) {
            LabeledReebDigraph g;
            g.add_vertex("x");
            for (int i = 0; i < count; ++i) {
                std::string t = "t" + std::to_string(i);
                g.add_vertex(t);
                g.add_edge("x", t, l);
                g.set_sing(t, l == FiberLabel::Sphere2 ? SingularityKind::MorsePoint
                                                       : SingularityKind::Circle);
            }
            g.set_sing("x", k);
            return validate_problem1(g).has(ViolationKind::AnnotationIncompatible);
        };
        CHECK(bad(FiberLabel::Sphere2, 1, SingularityKind::Circle));
        CHECK(bad(FiberLabel::Sphere2, 1, SingularityKind::TorusBott));
        CHECK(bad(FiberLabel::Sphere2, 2, SingularityKind::MorsePoint));
        CHECK(bad(FiberLabel::Sphere2, 2, SingularityKind::ProjectivePlane));
        CHECK(bad(FiberLabel::Torus2, 1, SingularityKind::MorsePoint));
        CHECK(bad(FiberLabel::Torus2, 1, SingularityKind::ProjectivePlane));
        CHECK(bad(FiberLabel::Torus2, 2, SingularityKind::Circle));
        CHECK(bad(FiberLabel::Torus2, 2, SingularityKind::SphereBott));
    }
    SUBCASE("non-extremum with a bott annotation") {
        LabeledReebDigraph g = chain_st();
        g.set_sing("mid", SingularityKind::TorusBott);
        CHECK(validate_problem1(g).has(ViolationKind::AnnotationIncompatible));
    }
    SUBCASE("heights must increase along edges") {
        LabeledReebDigraph g = chain_st();
        g.set_height("bottom", Rational(1));
        g.set_height("mid", Rational(1));
        CHECK(validate_problem1(g).has(ViolationKind::HeightOrientation));
        g.set_height("mid", Rational(3, 2));
        g.set_height("top", Rational(2));
        CHECK(validate_problem1(g).ok());
    }
}

TEST_CASE("independent checker agrees on handmade cases") {
    auto agree = [](const LabeledReebDigraph& g) {
        ValidationReport r = validate_problem1(g);
        oracle::IndependentVerdict v = oracle::check_problem1_independent(g);
        std::set<ViolationKind> kinds;
        for (const Violation& x : r.violations) kinds.insert(x.kind);
        return r.ok() == v.valid && kinds == v.kinds;
    };
    CHECK(agree(chain_st()));
    CHECK(agree(load_fixture("triangle_pendant.reeb")));
    LabeledReebDigraph g = chain_st();
    g.set_height("bottom", Rational(5));
    g.set_height("mid", Rational(5));
    g.set_sing("mid", SingularityKind::SphereBott);
    g.add_vertex("stray");
    CHECK(agree(g));
}

TEST_CASE("height assignment is the longest-path layering") {
    LabeledReebDigraph g = load_fixture("triangle_pendant.reeb");
    LabeledReebDigraph h = assign_heights(g);
    CHECK(h.height("u") == Rational(0));
    CHECK(h.height("m") == Rational(1));
    CHECK(h.height("w") == Rational(2));
    CHECK(h.height("p") == Rational(2));
    CHECK(validate_problem1(h).ok());
}

TEST_CASE("height completion keeps declared values") {
    LabeledReebDigraph g = chain_st();
    g.set_height("bottom", Rational(-7, 2));
    LabeledReebDigraph h = complete_heights(g);
    CHECK(h.height("bottom") == Rational(-7, 2));
    CHECK(*h.height("mid") > Rational(-7, 2));
    CHECK(*h.height("top") > *h.height("mid"));
}

TEST_CASE("topological order is a linear extension with id tiebreak") {
    LabeledReebDigraph g = load_fixture("triangle_pendant.reeb");
    std::vector<std::string> order = topological_order(g);
    REQUIRE(order.size() == 4);
    auto pos = [&](const std::string& v) {
        return std::find(order.begin(), order.end(), v) - order.begin();
    };
    for (const Edge& e : g.edges()) CHECK(pos(e.src) < pos(e.dst));
}

TEST_CASE("catalog lists sixteen local forms") {
    const auto& cat = vertex_catalog();
    CHECK(cat.size() == 16);
    int extrema = 0;
    for (const CatalogEntry& e : cat)
        if (e.signature.is_extremum()) ++extrema;
    CHECK(extrema == 10);
    for (const CatalogEntry& e : cat) CHECK(catalog_contains(e.signature));
}

TEST_CASE("extremum annotation table") {
    using K = SingularityKind;
    CHECK(allowed_extremum_annotations(FiberLabel::Sphere2, 1) ==
          std::vector<K>{K::MorsePoint, K::ProjectivePlane});
    CHECK(allowed_extremum_annotations(FiberLabel::Sphere2, 2) ==
          std::vector<K>{K::SphereBott});
    CHECK(allowed_extremum_annotations(FiberLabel::Torus2, 1) == std::vector<K>{K::Circle});
    CHECK(allowed_extremum_annotations(FiberLabel::Torus2, 2) ==
          std::vector<K>{K::TorusBott});
    CHECK(allowed_extremum_annotations(FiberLabel::Sphere2, 3).empty());
    CHECK(allowed_extremum_annotations(FiberLabel::Torus2, 0).empty());
}

TEST_CASE("catalog lookup reports preimage classes") {
    LabeledReebDigraph g = load_fixture("triangle_pendant.reeb");
    const CatalogEntry* u = catalog_lookup(g.signature("u"));
    REQUIRE(u != nullptr);
    CHECK(u->preimage == PreimageClass::TorusCylinder);
    const CatalogEntry* m = catalog_lookup(g.signature("m"));
    REQUIRE(m != nullptr);
    CHECK(m->preimage == PreimageClass::SurgeryCobordism);
    const CatalogEntry* p = catalog_lookup(g.signature("p"));
    REQUIRE(p != nullptr);
    CHECK(p->preimage == PreimageClass::Ball3);
}

TEST_CASE("catalog validation flags the sphere through-vertex") {
    // bottom -> mid -> top all sphere: mid is ({S}|{S}), a valid function
    // shape but not a single Morse surgery.
    LabeledReebDigraph g;
    g.add_vertex("bottom");
    g.add_vertex("mid");
    g.add_vertex("top");
    g.add_edge("bottom", "mid", FiberLabel::Sphere2);
    g.add_edge("mid", "top", FiberLabel::Sphere2);
    g.set_sing("bottom", SingularityKind::MorsePoint);
    g.set_sing("top", SingularityKind::MorsePoint);
    CHECK(validate_problem1(g).ok());
    auto violations = validate_catalog(g);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].vertex == "mid");
}

TEST_CASE("isomorphism is label, orientation and annotation aware") {
    LabeledReebDigraph g = load_fixture("triangle_pendant.reeb");

    LabeledReebDigraph h;
    for (const char* v : {"zz", "yy", "xx", "ww"}) h.add_vertex(v);
    h.add_edge("xx", "zz", FiberLabel::Torus2);  // u->w
    h.add_edge("xx", "yy", FiberLabel::Torus2);  // u->m
    h.add_edge("yy", "ww", FiberLabel::Sphere2); // m->p
    h.add_edge("yy", "zz", FiberLabel::Torus2);  // m->w
    h.set_sing("xx", SingularityKind::TorusBott);
    h.set_sing("zz", SingularityKind::TorusBott);
    h.set_sing("ww", SingularityKind::MorsePoint);

    auto iso = isomorphic(g, h);
    REQUIRE(iso.has_value());
    CHECK(check_isomorphism(g, h, *iso));
    CHECK(canonical_key(g) == canonical_key(h));

    SUBCASE("label change breaks it") {
        LabeledReebDigraph rebuilt;
        for (const std::string& v : g.vertices()) rebuilt.add_vertex(v);
        for (int i = 0; i < g.edge_count(); ++i) {
            const Edge& e = g.edge(i);
            rebuilt.add_edge(e.src, e.dst,
                             i == 3 ? FiberLabel::Torus2 : e.label);
        }
        CHECK_FALSE(isomorphic(g, rebuilt).has_value());
    }
    SUBCASE("annotation change breaks it") {
        LabeledReebDigraph h2 = h;
        h2.set_sing("ww", SingularityKind::ProjectivePlane);
        CHECK_FALSE(isomorphic(g, h2).has_value());
        CHECK(canonical_key(g) != canonical_key(h2));
    }
    SUBCASE("explicit MorsePoint on an interior vertex is the same graph") {
        LabeledReebDigraph h2 = h;
        h2.set_sing("yy", SingularityKind::MorsePoint);
        CHECK(isomorphic(g, h2).has_value());
        CHECK(canonical_key(g) == canonical_key(h2));
    }
}

TEST_CASE("canonical graph is a fixed point") {
    for (const char* name : {"s3.reeb", "lens_path.reeb", "cycle_only.reeb",
                             "triangle_pendant.reeb"}) {
        CAPTURE(name);
        LabeledReebDigraph g = load_fixture(name);
        LabeledReebDigraph c = canonical_graph(g);
        CHECK(isomorphic(g, c).has_value());
        CHECK(canonical_graph(c) == c);
        CHECK(canonical_key(c) == canonical_key(g));
    }
}

TEST_CASE("parallel edges need distinct edge images") {
    LabeledReebDigraph g = load_fixture("cycle_only.reeb");
    auto iso = isomorphic(g, g);
    REQUIRE(iso.has_value());
    CHECK(iso->edge_map.size() == 2);
    CHECK(iso->edge_map[0] != iso->edge_map[1]);
}

TEST_CASE("component and cycle analysis") {
    LabeledReebDigraph g = load_fixture("triangle_pendant.reeb");
    CHECK(connected_component_count(g) == 1);
    CHECK(is_connected(g));
    CHECK(betti1(g) == 1);
    auto cycles = simple_cycles(g);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0] == std::vector<int>{0, 1, 2});
    CHECK(is_cactus(g));

    LabeledReebDigraph two = load_fixture("s3.reeb");
    two.add_vertex("x");
    two.add_vertex("y");
    two.add_edge("x", "y", FiberLabel::Sphere2);
    CHECK(connected_component_count(two) == 2);
    CHECK(betti1(two) == 0);

    // Theta graph: three parallel edges, three 2-cycles sharing edges.
    LabeledReebDigraph theta;
    theta.add_vertex("a");
    theta.add_vertex("b");
    for (int i = 0; i < 3; ++i) theta.add_edge("a", "b", FiberLabel::Sphere2);
    CHECK(simple_cycles(theta).size() == 3);
    CHECK_FALSE(is_cactus(theta));
}
