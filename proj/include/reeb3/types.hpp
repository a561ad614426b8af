#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "reeb3/errors.hpp"

namespace reeb3 {

// Fiber of the regular level over an edge. The order Sphere2 < Torus2 is
// load-bearing: canonical forms and serialization sort by it.
enum class FiberLabel : std::uint8_t { Sphere2 = 0, Torus2 = 1 };

// Connected singular component sitting over a vertex.
enum class SingularityKind : std::uint8_t {
    MorsePoint = 0,
    Circle = 1,
    SphereBott = 2,
    TorusBott = 3,
    ProjectivePlane = 4,
};

// Heights are exact so comparisons never wobble and serialization is lossless.
using Rational = boost::rational<long long>;

const char* to_string(FiberLabel l);
const char* to_string(SingularityKind k);

struct Edge {
    std::string src;
    std::string dst;
    FiberLabel label;

    bool operator==(const Edge&) const = default;
};

// In/out label multisets of a vertex plus its annotation. Labels are binary,
// so multisets collapse to counts.
struct VertexSignature {
    int in_sphere = 0;
    int in_torus = 0;
    int out_sphere = 0;
    int out_torus = 0;
    std::optional<SingularityKind> sing;

    int in_degree() const { return in_sphere + in_torus; }
    int out_degree() const { return out_sphere + out_torus; }
    int degree() const { return in_degree() + out_degree(); }

    // Local extremum of the height function: all incident edges on one side.
    bool is_extremum() const {
        return degree() > 0 && (in_degree() == 0 || out_degree() == 0);
    }

    bool labels_mixed() const {
        return (in_sphere + out_sphere) > 0 && (in_torus + out_torus) > 0;
    }

    // Ignores the annotation; counts only.
    bool same_shape(const VertexSignature& o) const {
        return in_sphere == o.in_sphere && in_torus == o.in_torus &&
               out_sphere == o.out_sphere && out_torus == o.out_torus;
    }

    std::string to_string() const;  // e.g. "({S,T}|{T})" or "(0|{S,S}) !sphere"
};

// Finite edge-labeled digraph with optional rational heights and singularity
// annotations. Vertices are opaque ids restricted to [A-Za-z0-9_]+ so every
// graph stays serializable; edges are identified by index, parallel edges are
// legal, loops are representable (validation rejects them).
//
// Values are plain data: operations take const refs and return new graphs.
class LabeledReebDigraph {
  public:
    void add_vertex(const std::string& id);
    bool has_vertex(const std::string& id) const { return vertices_.count(id) > 0; }

    // Returns the index of the new edge. Endpoints must exist.
    int add_edge(const std::string& src, const std::string& dst, FiberLabel label);

    void set_sing(const std::string& id, SingularityKind k);
    void clear_sing(const std::string& id);
    void set_height(const std::string& id, const Rational& h);
    void clear_heights() { height_.clear(); }

    const std::set<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_.at(static_cast<std::size_t>(i)); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }

    std::optional<SingularityKind> sing(const std::string& id) const;

    // Annotation under the reading used everywhere downstream: a vertex that
    // is not an extremum and carries no annotation is a plain Morse point.
    std::optional<SingularityKind> effective_sing(const std::string& id) const;

    std::optional<Rational> height(const std::string& id) const;
    const std::map<std::string, SingularityKind>& sing_map() const { return sing_; }
    const std::map<std::string, Rational>& height_map() const { return height_; }

    std::vector<int> in_edges(const std::string& id) const;
    std::vector<int> out_edges(const std::string& id) const;
    std::vector<int> incident_edges(const std::string& id) const;
    int degree(const std::string& id) const;

    VertexSignature signature(const std::string& id) const;
    bool is_extremum(const std::string& id) const { return signature(id).is_extremum(); }

    // "base_suffix", then "base_suffix2", "base_suffix3", ... first id not
    // already taken. Deterministic, so rewrites replay byte-for-byte.
    std::string fresh_vertex(const std::string& base, const std::string& suffix) const;

    bool operator==(const LabeledReebDigraph&) const = default;

  private:
    std::set<std::string> vertices_;
    std::vector<Edge> edges_;
    std::map<std::string, SingularityKind> sing_;
    std::map<std::string, Rational> height_;
};

bool valid_vertex_id(const std::string& id);

std::string rational_to_string(const Rational& r);

}  // namespace reeb3
