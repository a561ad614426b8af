#include <doctest.h>

#include <random>

#include "reeb3/enumerate.hpp"
#include "reeb3/independent_check.hpp"
#include "reeb3/io.hpp"
#include "reeb3/isomorphism.hpp"
#include "helpers.hpp"

using namespace reeb3;

TEST_CASE("parse reads vertices, heights, annotations, edges") {
    LabeledReebDigraph g = parse(
        "# a comment\n"
        "v a @-1/2 !circle\n"
        "v b @3/4 !circle\n"
        "\n"
        "e a -> b : T2\n");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.height("a") == Rational(-1, 2));
    CHECK(g.height("b") == Rational(3, 4));
    CHECK(g.sing("a") == SingularityKind::Circle);
    CHECK(g.edge(0).label == FiberLabel::Torus2);
}

TEST_CASE("heights are completed only when one is declared") {
    LabeledReebDigraph bare = parse("v a !point\nv b !point\ne a -> b : S2\n");
    CHECK(bare.height_map().empty());

    LabeledReebDigraph seeded = parse("v a @2 !point\nv b !point\ne a -> b : S2\n");
    CHECK(seeded.height("a") == Rational(2));
    REQUIRE(seeded.height("b").has_value());
    CHECK(*seeded.height("b") > Rational(2));
}

TEST_CASE("parse errors carry line and column") {
    auto bad = [](const std::string& text) {
        CAPTURE(text);
        CHECK_THROWS_AS(parse(text), ParseError);
    };
    bad("v a !point\r\nv b !point\ne a -> b : S2\n");  // CR anywhere
    bad("w a\n");                                       // unknown line kind
    bad(" # indented comment\n");
    bad("v a !point extra\n");
    bad("v a !ball\n");
    bad("v a @1/0 !point\n");
    bad("v a @9223372036854775808 !point\n");   // does not fit long long
    bad("v a @-9223372036854775808 !point\n");  // magnitude checked unsigned
    bad("v a !point\ne a -> b : S2\n");         // undeclared endpoint
    bad("v a !point\nv a !point\n");            // duplicate declaration
    bad("v a !point\nv b !point\ne a -> b : S3\n");
    bad("v a !point\nv b !point\ne a -> b : S2 \n");  // trailing space
    bad("v a@1 !point\n");                            // missing whitespace

    try {
        parse("v a !point\nv b !wrong\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column > 1);
    }
}

TEST_CASE("undeclared and duplicate names have dedicated errors") {
    CHECK_THROWS_AS(parse("v a !point\ne a -> b : S2\n"), UndeclaredVertexError);
    CHECK_THROWS_AS(parse("v a !point\nv a !circle\n"), DuplicateDeclarationError);
}

TEST_CASE("serialize emits the canonical document") {
    LabeledReebDigraph g = load_fixture("triangle_pendant.reeb");
    std::string doc = serialize(g);
    CHECK(doc ==
          "v m\n"
          "v p !point\n"
          "v u !torus\n"
          "v w !torus\n"
          "e u -> m : T2\n"
          "e m -> w : T2\n"
          "e u -> w : T2\n"
          "e m -> p : S2\n");
}

TEST_CASE("round trips") {
    for (const char* name : {"s3.reeb", "lens_path.reeb", "cycle_only.reeb",
                             "triangle_pendant.reeb", "rp3.reeb", "heights.reeb"}) {
        CAPTURE(name);
        LabeledReebDigraph g = load_fixture(name);
        LabeledReebDigraph back = parse(serialize(g));
        CHECK(isomorphic(g, back).has_value());
        // Canonical documents reproduce byte for byte.
        std::string doc = serialize(g);
        CHECK(serialize(parse(doc)) == doc);
    }
}

TEST_CASE("serialized heights stay exact") {
    LabeledReebDigraph g = load_fixture("heights.reeb");
    std::string doc = serialize(g);
    CHECK(doc.find("@-1/2") != std::string::npos);
    CHECK(doc.find("@3/4") != std::string::npos);
    LabeledReebDigraph back = parse(doc);
    CHECK(back.height("a") == Rational(-1, 2));
}

TEST_CASE("dot export shows labels by color and marks boundaries") {
    LabeledReebDigraph g = load_fixture("lens_path.reeb");
    std::string dot = export_dot(g, {"bottom"});
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("blue") != std::string::npos);
    CHECK(dot.find("red") != std::string::npos);
    CHECK(dot.find("\"lower\" -> \"upper\"") != std::string::npos);
    CHECK(export_dot(g) == export_dot(g));
}

TEST_CASE("json export is deterministic and carries the census") {
    LabeledReebDigraph g = load_fixture("s3.reeb");
    ManifoldCensus census = classify(g);
    std::string j = export_json(g, &census);
    CHECK(j.find("\"format\": \"reeb3kit/1\"") != std::string::npos);
    CHECK(j.find("\"member_of_class\": true") != std::string::npos);
    CHECK(export_json(g, &census) == j);
    CHECK(census_json(census).find("\"torus_bundle_count\": 0") != std::string::npos);
}

TEST_CASE("document oracle agrees with the parser on handmade lines") {
    auto parses = [](const std::string& text) {
        try {
            parse(text);
            return true;
        } catch (const ParseError&) {
            return false;
        }
    };
    const char* docs[] = {
        "v a !point\nv b !point\ne a -> b : S2\n",
        "v a\n",
        "v a @0\n",
        "v a @+3/7 !torus\n",
        "# only a comment\n",
        "",
        "v a !point\ne a -> a : S2\n",       // loop: grammar-valid, invalid later
        "v a !point\nv b\ne b -> a : T2\n",
        "v a !point\nv b !point\ne a -> b : S2",   // no trailing newline
        "v a  \t !point\n",                        // internal whitespace runs
        "v a !point\n v b !point\n",               // leading space
        "v a !point\nE a -> a : S2\n",
        "e a -> b : S2\nv a !point\nv b !point\n",  // use before declaration
        "v a @00/01 !point\n",
        "v a @18446744073709551615 !point\n",
    };
    for (const char* d : docs) {
        CAPTURE(d);
        CHECK(parses(d) == oracle::document_is_valid(d));
    }
}

TEST_CASE("random document mutations never crash the parser") {
    EnumerationSpec spec;
    spec.max_edges = 2;
    std::vector<std::string> seeds;
    for (const LabeledReebDigraph& g : enumerate_graphs(spec)) seeds.push_back(serialize(g));
    seeds.push_back(fixture_text("heights.reeb"));
    seeds.push_back(fixture_text("triangle_pendant.reeb"));

    std::mt19937 rng(20260822);
    const std::string alphabet = "vab e->:@/!#ST2 \t\npointcircle0139_x";
    int accepted = 0;
    for (int iter = 0; iter < 1000; ++iter) {
        std::string doc = seeds[rng() % seeds.size()];
        int edits = 1 + static_cast<int>(rng() % 3);
        for (int k = 0; k < edits; ++k) {
            if (doc.empty()) break;
            std::size_t pos = rng() % doc.size();
            switch (rng() % 3) {
                case 0: doc.insert(pos, 1, alphabet[rng() % alphabet.size()]); break;
                case 1: doc.erase(pos, 1); break;
                default: doc[pos] = alphabet[rng() % alphabet.size()]; break;
            }
        }
        bool ok_parse;
        try {
            parse(doc);
            ok_parse = true;
        } catch (const ParseError&) {
            ok_parse = false;
        }
        if (ok_parse) ++accepted;
        CAPTURE(doc);
        REQUIRE(ok_parse == oracle::document_is_valid(doc));
    }
    CHECK(accepted > 0);  // the sample must exercise both outcomes
    CHECK(accepted < 1000);
}
