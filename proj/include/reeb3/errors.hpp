#pragma once

#include <stdexcept>
#include <string>

namespace reeb3 {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Structural misuse of the graph builder.
struct UnknownVertexError : Error {
    explicit UnknownVertexError(const std::string& id)
        : Error("unknown vertex: " + id) {}
};

struct DuplicateVertexError : Error {
    explicit DuplicateVertexError(const std::string& id)
        : Error("duplicate vertex: " + id) {}
};

struct BadVertexIdError : Error {
    explicit BadVertexIdError(const std::string& id)
        : Error("vertex id must match [A-Za-z0-9_]+: '" + id + "'") {}
};

struct DirectedCycleError : Error {
    explicit DirectedCycleError(const std::string& detail)
        : Error("directed cycle: " + detail) {}
};

// A surgery was requested at a vertex whose signature does not admit it.
struct BadSignatureError : Error {
    explicit BadSignatureError(const std::string& detail)
        : Error("bad signature: " + detail) {}
};

// A move site does not embed into the host graph.
struct NoMatchError : Error {
    explicit NoMatchError(const std::string& detail)
        : Error("move site does not match: " + detail) {}
};

struct ParseError : Error {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& detail)
        : Error("parse error at " + std::to_string(line_) + ":" +
                std::to_string(column_) + ": " + detail),
          line(line_), column(column_) {}
};

struct UndeclaredVertexError : ParseError {
    UndeclaredVertexError(int line_, int column_, const std::string& id)
        : ParseError(line_, column_, "edge endpoint not declared: " + id) {}
};

struct DuplicateDeclarationError : ParseError {
    DuplicateDeclarationError(int line_, int column_, const std::string& id)
        : ParseError(line_, column_, "vertex declared twice: " + id) {}
};

struct CapExceededError : Error {
    explicit CapExceededError(const std::string& detail)
        : Error("enumeration cap exceeded: " + detail) {}
};

}  // namespace reeb3
