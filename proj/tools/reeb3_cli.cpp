// reeb3: command line front end for the Reeb digraph toolkit.
//
// Exit codes: 0 success, 1 validation failure, 2 parse/usage error,
// 3 realization hypothesis violation, 4 internal invariant breach.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "reeb3/catalog.hpp"
#include "reeb3/classify.hpp"
#include "reeb3/enumerate.hpp"
#include "reeb3/independent_check.hpp"
#include "reeb3/io.hpp"
#include "reeb3/normalize.hpp"
#include "reeb3/realize.hpp"
#include "reeb3/validate.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kParse = 2;
constexpr int kHypothesis = 3;
constexpr int kInternal = 4;

struct FileError {
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError{"cannot open " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw FileError{"cannot open " + out_path + " for writing"};
    out << text;
}

std::vector<std::vector<int>> parse_cycles(const std::string& flag) {
    std::vector<std::vector<int>> cycles;
    if (flag.empty()) return cycles;
    std::stringstream groups(flag);
    std::string group;
    while (std::getline(groups, group, ';')) {
        std::vector<int> cycle;
        std::stringstream items(group);
        std::string item;
        while (std::getline(items, item, ',')) {
            size_t pos = 0;
            int v = 0;
            try {
                v = std::stoi(item, &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (item.empty() || pos != item.size())
                throw reeb3::ParseError(0, 0, "bad edge index '" + item + "' in --cycles");
            cycle.push_back(v);
        }
        if (cycle.empty())
            throw reeb3::ParseError(0, 0, "empty cycle in --cycles");
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

int cmd_validate(const std::string& file) {
    reeb3::LabeledReebDigraph g = reeb3::parse(read_file(file));
    reeb3::ValidationReport report = reeb3::validate_problem1(g);
    reeb3::oracle::IndependentVerdict second = reeb3::oracle::check_problem1_independent(g);
    if (report.ok() != second.valid) {
        std::cerr << "internal error: validators disagree on this input\n";
        return kInternal;
    }
    if (!report.ok()) {
        for (const reeb3::Violation& v : report.violations)
            std::cout << "violation " << reeb3::to_string(v.kind) << " " << v.subject << "\n";
        std::cout << "invalid\n";
        std::cerr << report.to_string();
        return kInvalid;
    }
    for (const reeb3::CatalogViolation& v : reeb3::validate_catalog(g))
        std::cerr << "note: outside the vertex catalog: " << v.vertex << ": " << v.detail
                  << "\n";
    std::cout << "valid\n";
    return kOk;
}

int cmd_normalize(const std::string& file, const std::string& out) {
    reeb3::LabeledReebDigraph g = reeb3::parse(read_file(file));
    reeb3::NormalizeResult res = reeb3::normalize(g);
    for (const reeb3::TraceStep& step : res.trace) std::cerr << step.to_string() << "\n";
    write_output(out, reeb3::serialize(res.graph));
    return kOk;
}

int cmd_classify(const std::string& file, bool json) {
    reeb3::LabeledReebDigraph g = reeb3::parse(read_file(file));
    reeb3::NormalizeResult res = reeb3::normalize(g);
    for (const reeb3::TraceStep& step : res.trace) std::cerr << step.to_string() << "\n";
    reeb3::ManifoldCensus census = reeb3::classify(res.graph);
    if (json)
        std::cout << reeb3::census_json(census) << "\n";
    else
        std::cout << census.to_string() << "\n";
    return kOk;
}

int cmd_realize(const std::string& file, const std::string& cycles_flag) {
    reeb3::Theorem3Instance inst;
    inst.k = reeb3::parse(read_file(file));
    inst.cycles = parse_cycles(cycles_flag);
    reeb3::RealizationCertificate cert = reeb3::realize(inst);
    std::cerr << "residue: " << cert.k0_prime.graph.vertex_count() << " vertices, "
              << cert.k0_prime.graph.edge_count() << " edges\n";
    for (std::size_t j = 0; j < cert.c0.size(); ++j)
        std::cerr << "cycle piece " << j << ": " << cert.c0[j].graph.vertex_count()
                  << " vertices, " << cert.c0[j].graph.edge_count() << " edges\n";
    std::cerr << "glued: " << cert.glued.graph.vertex_count() << " vertices, "
              << cert.glued.graph.edge_count() << " edges\n";
    std::cout << cert.manifold_expression << "\n";
    return kOk;
}

int cmd_enumerate(int max_edges, bool count_only) {
    reeb3::EnumerationSpec spec;
    spec.max_edges = max_edges;
    std::vector<reeb3::LabeledReebDigraph> suite = reeb3::enumerate_graphs(spec);
    if (count_only) {
        std::cout << suite.size() << "\n";
        return kOk;
    }
    for (const reeb3::LabeledReebDigraph& g : suite) std::cout << reeb3::serialize(g) << "\n";
    return kOk;
}

int cmd_export_dot(const std::string& file, const std::string& out) {
    reeb3::LabeledReebDigraph g = reeb3::parse(read_file(file));
    write_output(out, reeb3::export_dot(g));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reeb digraphs of sphere/torus-fibered functions on 3-manifolds"};
    app.require_subcommand(1);

    std::string file, out_path, cycles_flag;
    bool json = false, count_only = false;
    int max_edges = 3;

    CLI::App* validate = app.add_subcommand("validate", "check a digraph document");
    validate->add_option("file", file)->required();

    CLI::App* normalize = app.add_subcommand("normalize", "rewrite to normal form");
    normalize->add_option("file", file)->required();
    normalize->add_option("-o,--output", out_path);

    CLI::App* classify = app.add_subcommand("classify", "compute the 3-manifold census");
    classify->add_option("file", file)->required();
    classify->add_flag("--json", json);

    CLI::App* realize = app.add_subcommand("realize", "run the realization construction");
    realize->add_option("file", file)->required();
    realize->add_option("--cycles", cycles_flag,
                        "edge-index cycles, comma within and semicolon between");

    CLI::App* enumerate = app.add_subcommand("enumerate", "list graphs up to isomorphism");
    enumerate->add_option("--max-edges", max_edges)->required();
    enumerate->add_flag("--count-only", count_only);

    CLI::App* export_dot = app.add_subcommand("export-dot", "write Graphviz text");
    export_dot->add_option("file", file)->required();
    export_dot->add_option("-o,--output", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    try {
        if (*validate) return cmd_validate(file);
        if (*normalize) return cmd_normalize(file, out_path);
        if (*classify) return cmd_classify(file, json);
        if (*realize) return cmd_realize(file, cycles_flag);
        if (*enumerate) return cmd_enumerate(max_edges, count_only);
        if (*export_dot) return cmd_export_dot(file, out_path);
        std::cerr << "no subcommand\n";
        return kParse;
    } catch (const FileError& e) {
        std::cerr << e.message << "\n";
        return kParse;
    } catch (const reeb3::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kParse;
    } catch (const reeb3::HypothesisViolationError& e) {
        std::cerr << e.report.to_string();
        return kHypothesis;
    } catch (const reeb3::CycleSelectionError& e) {
        std::cerr << e.what() << "\n";
        return kHypothesis;
    } catch (const reeb3::PreconditionError& e) {
        std::cerr << e.what() << "\n" << e.report.to_string();
        return kInvalid;
    } catch (const reeb3::NonCatalogVertexError& e) {
        std::cerr << e.what() << "\n";
        return kInvalid;
    } catch (const reeb3::DefectiveTorusSubgraphError& e) {
        std::cerr << e.what() << "\n";
        return kInvalid;
    } catch (const reeb3::NormalizationStuckError& e) {
        std::cerr << e.what() << "\n";
        return kInvalid;
    } catch (const reeb3::CapExceededError& e) {
        std::cerr << e.what() << "\n";
        return kParse;
    } catch (const reeb3::Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}
