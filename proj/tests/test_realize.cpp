#include <doctest.h>

#include <algorithm>

#include "reeb3/classify.hpp"
#include "reeb3/graph_algos.hpp"
#include "reeb3/io.hpp"
#include "reeb3/isomorphism.hpp"
#include "reeb3/realize.hpp"
#include "reeb3/validate.hpp"
#include "helpers.hpp"

using namespace reeb3;

namespace {

Theorem3Instance triangle_instance() {
    Theorem3Instance inst;
    inst.k = load_fixture("triangle_pendant.reeb");
    inst.cycles = {{0, 1, 2}};
    return inst;
}

const HypothesisCheck& check_named(const HypothesisReport& r, const std::string& name) {
    for (const HypothesisCheck& c : r.checks)
        if (c.name == name) return c;
    REQUIRE_MESSAGE(false, "no check named " << name);
    static HypothesisCheck dummy;
    return dummy;
}

}  // namespace

TEST_CASE("hypothesis checks accept the triangle instance") {
    HypothesisReport r = check_theorem3_hypotheses(triangle_instance());
    CHECK(r.all_passed());
    CHECK(r.checks.size() == 5);
    for (const HypothesisCheck& c : r.checks) {
        CAPTURE(c.name);
        CHECK(c.passed);
    }
}

TEST_CASE("each hypothesis can fail") {
    SUBCASE("not a simple cycle") {
        Theorem3Instance inst = triangle_instance();
        inst.cycles = {{0, 1}};  // u->m->w is not closed
        HypothesisReport r = check_theorem3_hypotheses(inst);
        CHECK_FALSE(check_named(r, "cycles-are-simple-cycles").passed);
    }
    SUBCASE("bad edge index") {
        Theorem3Instance inst = triangle_instance();
        inst.cycles = {{0, 1, 9}};
        HypothesisReport r = check_theorem3_hypotheses(inst);
        CHECK_FALSE(r.all_passed());
    }
    SUBCASE("cycles sharing a vertex") {
        // Two torus bigons glued along a shared transition chain.
        LabeledReebDigraph g = parse(
            "v a !torus\n"
            "v b\n"
            "v c !torus\n"
            "v lo !point\n"
            "v hi !point\n"
            "e a -> b : T2\n"
            "e a -> b : T2\n"
            "e b -> c : T2\n"
            "e b -> c : T2\n"
            "e lo -> b : S2\n"
            "e b -> hi : S2\n");
        REQUIRE(validate_problem1(g).ok());
        Theorem3Instance inst;
        inst.k = g;
        inst.cycles = {{0, 1}, {2, 3}};
        HypothesisReport r = check_theorem3_hypotheses(inst);
        CHECK_FALSE(check_named(r, "cycles-pairwise-vertex-disjoint").passed);
    }
    SUBCASE("sphere edge in a chosen cycle") {
        LabeledReebDigraph g = parse(
            "v a !sphere\n"
            "v b !sphere\n"
            "e a -> b : S2\n"
            "e a -> b : S2\n");
        Theorem3Instance inst;
        inst.k = g;
        inst.cycles = {{0, 1}};
        HypothesisReport r = check_theorem3_hypotheses(inst);
        CHECK_FALSE(check_named(r, "cycle-edges-torus-labeled").passed);
    }
    SUBCASE("turning point of degree three") {
        // The cycle turns at m, but m also feeds a pendant, so it is not an
        // extremum of the whole graph.
        LabeledReebDigraph g = parse(
            "v a !torus\n"
            "v m\n"
            "v p !point\n"
            "e a -> m : T2\n"
            "e a -> m : T2\n"
            "e m -> p : S2\n");
        REQUIRE(validate_problem1(g).ok());
        Theorem3Instance inst;
        inst.k = g;
        inst.cycles = {{0, 1}};
        HypothesisReport r = check_theorem3_hypotheses(inst);
        CHECK_FALSE(check_named(r, "turning-points-are-extrema").passed);
    }
    SUBCASE("circle graph with no interior vertex") {
        Theorem3Instance inst;
        inst.k = load_fixture("cycle_only.reeb");
        inst.cycles = {{0, 1}};
        HypothesisReport r = check_theorem3_hypotheses(inst);
        const HypothesisCheck& c = check_named(r, "circle-needs-interior-vertex");
        CHECK_FALSE(c.passed);
        CHECK(c.detail.find("circle") != std::string::npos);
        // The other four hypotheses hold; only the circle clause bites.
        int failed = 0;
        for (const HypothesisCheck& x : r.checks)
            if (!x.passed) ++failed;
        CHECK(failed == 1);
    }
    SUBCASE("the circle clause is checked even with no cycles chosen") {
        Theorem3Instance inst;
        inst.k = load_fixture("cycle_only.reeb");
        HypothesisReport r = check_theorem3_hypotheses(inst);
        CHECK_FALSE(check_named(r, "circle-needs-interior-vertex").passed);
    }
}

TEST_CASE("residue and cycle pieces") {
    Theorem3Instance inst = triangle_instance();
    LabeledReebDigraph kp = construct_k_prime(inst);
    CHECK(kp.vertex_count() == 4);
    CHECK(kp.edge_count() == 1);
    CHECK(kp.edge(0).label == FiberLabel::Sphere2);

    LabeledReebDigraph c0 = cycle_subgraph(inst, 0);
    CHECK(c0.vertex_count() == 3);
    CHECK(c0.edge_count() == 3);
    CHECK(c0.sing("u") == SingularityKind::TorusBott);
}

TEST_CASE("pendant augmentation") {
    LabeledReebDigraph g = load_fixture("lens_path.reeb");
    AugmentedGraph aug = augment_with_pendants(g, {"lower", "upper"});
    CHECK(aug.graph.vertex_count() == 8);
    CHECK(aug.graph.edge_count() == 7);
    REQUIRE(aug.pendants.count("lower") == 1);
    const PendantPair& pp = aug.pendants.at("lower");
    CHECK(aug.graph.edge(pp.low_edge).src == pp.low);
    CHECK(aug.graph.edge(pp.low_edge).dst == "lower");
    CHECK(aug.graph.edge(pp.high_edge).src == "lower");
    CHECK(aug.graph.edge(pp.high_edge).dst == pp.high);
    CHECK(aug.graph.edge(pp.low_edge).label == FiberLabel::Sphere2);
    CHECK(validate_problem1(aug.graph).ok());

    SUBCASE("heights bracket the target") {
        LabeledReebDigraph h = assign_heights(g);
        AugmentedGraph a2 = augment_with_pendants(h, {"lower"});
        const PendantPair& p2 = a2.pendants.at("lower");
        CHECK(*a2.graph.height(p2.low) < *a2.graph.height("lower"));
        CHECK(*a2.graph.height(p2.high) > *a2.graph.height("upper"));
        CHECK(validate_problem1(a2.graph).ok());
    }
    SUBCASE("an annotated target becomes a plain Morse point") {
        LabeledReebDigraph t = load_fixture("cycle_only.reeb");
        AugmentedGraph a3 = augment_with_pendants(t, {"a", "b"});
        CHECK(a3.graph.sing("a") == SingularityKind::MorsePoint);
        CHECK(validate_problem1(a3.graph).ok());
    }
}

TEST_CASE("the worked triangle instance step by step") {
    Theorem3Instance inst = triangle_instance();
    RealizationCertificate cert = realize(inst);

    CHECK(cert.hypotheses.all_passed());

    CHECK(cert.k0_prime.graph.vertex_count() == 10);
    CHECK(cert.k0_prime.graph.edge_count() == 7);

    REQUIRE(cert.c0.size() == 1);
    CHECK(cert.c0[0].graph.vertex_count() == 9);
    CHECK(cert.c0[0].graph.edge_count() == 9);

    CHECK(cert.glued.graph.vertex_count() == 10);
    CHECK(cert.glued.graph.edge_count() == 10);
    CHECK(betti1(cert.glued.graph) == 1);
    CHECK(validate_problem1(cert.glued.graph).ok());

    auto iso = isomorphic(cert.final_graph, inst.k);
    REQUIRE(iso.has_value());
    CHECK(check_isomorphism(cert.final_graph, inst.k, cert.iso_witness));

    auto locus = singular_locus_census(cert.final_graph);
    CHECK(locus[SingularityKind::TorusBott] == 2);
    CHECK(locus[SingularityKind::MorsePoint] == 2);

    CHECK(cert.census.torus_bundle_count == 1);
    CHECK(classify(cert.final_graph).torus_bundle_count == 1);
    CHECK(cert.manifold_expression == "TorusBundle # Theorem1Class");
}

TEST_CASE("realization with no cycles is the identity construction") {
    Theorem3Instance inst;
    inst.k = load_fixture("lens_path.reeb");
    RealizationCertificate cert = realize(inst);
    CHECK(cert.manifold_expression == "Theorem1Class");
    CHECK(cert.c0.empty());
    CHECK(isomorphic(cert.final_graph, inst.k).has_value());
    CHECK(cert.census.arc_summands == 1);
}

TEST_CASE("choosing too few cycles is refused") {
    Theorem3Instance inst;
    inst.k = load_fixture("triangle_pendant.reeb");
    CHECK_THROWS_AS(realize(inst), CycleSelectionError);
}

TEST_CASE("hypothesis violations surface as errors") {
    Theorem3Instance inst;
    inst.k = load_fixture("cycle_only.reeb");
    inst.cycles = {{0, 1}};
    try {
        realize(inst);
        FAIL("expected HypothesisViolationError");
    } catch (const HypothesisViolationError& e) {
        CHECK_FALSE(e.report.all_passed());
        CHECK(e.report.to_string().find("circle") != std::string::npos);
    }
}

TEST_CASE("realize validates its input first") {
    Theorem3Instance inst;
    inst.k.add_vertex("a");
    CHECK_THROWS_AS(realize(inst), PreconditionError);
}

TEST_CASE("certificate stages re-validate and re-parse") {
    RealizationCertificate cert = realize(triangle_instance());
    for (const LabeledReebDigraph* g :
         {&cert.k_prime, &cert.k0_prime.graph, &cert.c0[0].graph, &cert.glued.graph,
          &cert.final_graph}) {
        LabeledReebDigraph back = parse(serialize(*g));
        CHECK(isomorphic(*g, back).has_value());
    }
    // The residue alone may be invalid as a standalone function (it is a
    // piece, not a whole), but it must stay loop-free and acyclic.
    CHECK(validate_problem1(cert.k0_prime.graph).ok());
}

TEST_CASE("cactus inputs give cactus finals") {
    Theorem3Instance inst = triangle_instance();
    REQUIRE(is_cactus(inst.k));
    RealizationCertificate cert = realize(inst);
    CHECK(is_cactus(cert.final_graph));
}
