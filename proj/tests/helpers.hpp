#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "reeb3/io.hpp"
#include "reeb3/types.hpp"

inline std::string fixture_text(const std::string& name) {
    std::ifstream in(std::string(REEB3_FIXTURES) + "/" + name, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing fixture " << name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline reeb3::LabeledReebDigraph load_fixture(const std::string& name) {
    return reeb3::parse(fixture_text(name));
}
