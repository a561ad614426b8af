// Benchmark: serial vs parallel enumeration, with a result equality check.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>

#include "reeb3/enumerate.hpp"
#include "reeb3/isomorphism.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double run_ms(std::vector<reeb3::LabeledReebDigraph> (*f)(const reeb3::EnumerationSpec&),
              const reeb3::EnumerationSpec& spec,
              std::vector<reeb3::LabeledReebDigraph>& out) {
    auto t0 = Clock::now();
    out = f(spec);
    auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int max_edges = argc > 1 ? std::atoi(argv[1]) : 5;

    std::cout << "edges  graphs      serial_ms    parallel_ms  speedup\n";
    for (int e = 1; e <= max_edges; ++e) {
        reeb3::EnumerationSpec spec;
        spec.max_edges = e;

        std::vector<reeb3::LabeledReebDigraph> serial, parallel;
        double ts = run_ms(reeb3::enumerate_graphs_serial, spec, serial);
        double tp = run_ms(reeb3::enumerate_graphs, spec, parallel);

        if (serial.size() != parallel.size()) {
            std::cerr << "mismatch at max_edges=" << e << ": " << serial.size() << " vs "
                      << parallel.size() << "\n";
            return 1;
        }
        for (std::size_t i = 0; i < serial.size(); ++i)
            if (!(serial[i] == parallel[i])) {
                std::cerr << "graph " << i << " differs at max_edges=" << e << "\n";
                return 1;
            }

        std::printf("%5d  %6zu  %11.2f  %13.2f  %7.2fx\n", e, serial.size(), ts, tp,
                    tp > 0 ? ts / tp : 0.0);
    }
    return 0;
}
