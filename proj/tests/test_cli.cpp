#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "helpers.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout and stderr interleaved
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(REEB3_CLI) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    return {WEXITSTATUS(status), out};
}

std::string fx(const std::string& name) {
    return std::string(REEB3_FIXTURES) + "/" + name;
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::ofstream out(name, std::ios::binary);
    REQUIRE(out.good());
    out << text;
    out.close();
    return name;
}

}  // namespace

TEST_CASE("validate fixture files") {
    RunResult ok = run("validate " + fx("s3.reeb"));
    CHECK(ok.exit_code == 0);
    CHECK(ok.output == "valid\n");

    std::string bad = write_temp("cli_invalid.reeb",
                                 "v a !point\nv b !point\nv stray\ne a -> b : S2\n");
    RunResult inv = run("validate " + bad);
    CHECK(inv.exit_code == 1);
    CHECK(inv.output.find("isolated") != std::string::npos);

    std::string garbage = write_temp("cli_garbage.reeb", "vertex a\n");
    RunResult parse_fail = run("validate " + garbage);
    CHECK(parse_fail.exit_code == 2);
    CHECK(parse_fail.output.find("parse error") != std::string::npos);

    RunResult missing = run("validate does_not_exist.reeb");
    CHECK(missing.exit_code == 2);
    CHECK(missing.output.find("cannot open") != std::string::npos);
}

TEST_CASE("classify prints a census") {
    RunResult text = run("classify " + fx("s3.reeb"));
    CHECK(text.exit_code == 0);
    CHECK(text.output == "member=yes torus_bundles=0 arc_summands=0 rp3=0 residual_cycles=0\n");

    RunResult json = run("classify " + fx("s3.reeb") + " --json");
    CHECK(json.exit_code == 0);
    CHECK(json.output.find("\"member_of_class\": true") != std::string::npos);
    CHECK(json.output.find("\"torus_bundle_count\": 0") != std::string::npos);

    RunResult bundle = run("classify " + fx("cycle_only.reeb"));
    CHECK(bundle.output.find("torus_bundles=1") != std::string::npos);

    // Defective input is normalized on the way; the trace goes to stderr.
    RunResult pair = run("classify " + fx("solid_torus_pair.reeb"));
    CHECK(pair.exit_code == 0);
    CHECK(pair.output.find("split-circle a") != std::string::npos);
    CHECK(pair.output.find("arc_summands=1") != std::string::npos);
}

TEST_CASE("normalize writes a document that validates") {
    RunResult res = run("normalize " + fx("solid_torus_pair.reeb") + " -o cli_norm.reeb");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("split-circle a") != std::string::npos);
    CHECK(res.output.find("split-circle b") != std::string::npos);

    RunResult check = run("validate cli_norm.reeb");
    CHECK(check.exit_code == 0);

    // Byte-identical on a second run.
    run("normalize " + fx("solid_torus_pair.reeb") + " -o cli_norm2.reeb");
    std::ifstream a("cli_norm.reeb", std::ios::binary), b("cli_norm2.reeb", std::ios::binary);
    std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
    std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
    CHECK(sa == sb);
    CHECK(!sa.empty());
}

TEST_CASE("realize reports the expression or the violated clause") {
    RunResult ok = run("realize " + fx("triangle_pendant.reeb") + " --cycles 0,1,2");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("TorusBundle # Theorem1Class\n") != std::string::npos);

    RunResult circle = run("realize " + fx("cycle_only.reeb") + " --cycles 0,1");
    CHECK(circle.exit_code == 3);
    CHECK(circle.output.find("circle") != std::string::npos);

    RunResult missed = run("realize " + fx("triangle_pendant.reeb"));
    CHECK(missed.exit_code == 3);
    CHECK(missed.output.find("do not exhaust") != std::string::npos);

    RunResult bad_flag = run("realize " + fx("triangle_pendant.reeb") + " --cycles 0,x");
    CHECK(bad_flag.exit_code == 2);
}

TEST_CASE("enumerate counts and listings") {
    RunResult count = run("enumerate --max-edges 1 --count-only");
    CHECK(count.exit_code == 0);
    CHECK(count.output == "5\n");

    RunResult listing = run("enumerate --max-edges 1");
    CHECK(listing.exit_code == 0);
    // Five serialized documents separated by blank lines.
    CHECK(listing.output.find("e v0 -> v1 : T2") != std::string::npos);

    RunResult capped = run("enumerate --max-edges 99");
    CHECK(capped.exit_code == 2);
}

TEST_CASE("export-dot emits graphviz that mentions every vertex") {
    RunResult dot = run("export-dot " + fx("lens_path.reeb"));
    CHECK(dot.exit_code == 0);
    CHECK(dot.output.find("digraph") != std::string::npos);
    for (const char* v : {"bottom", "lower", "upper", "top"})
        CHECK(dot.output.find(v) != std::string::npos);
}

TEST_CASE("identical invocations are byte-identical") {
    RunResult a = run("classify " + fx("triangle_pendant.reeb") + " --json");
    RunResult b = run("classify " + fx("triangle_pendant.reeb") + " --json");
    CHECK(a.output == b.output);
    RunResult c = run("enumerate --max-edges 2");
    RunResult d = run("enumerate --max-edges 2");
    CHECK(c.output == d.output);
}

TEST_CASE("usage errors do not crash") {
    CHECK(run("").exit_code == 2);
    CHECK(run("frobnicate x").exit_code == 2);
    CHECK(run("validate").exit_code == 2);
}
