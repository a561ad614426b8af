#include "reeb3/types.hpp"

#include <algorithm>

namespace reeb3 {

const char* to_string(FiberLabel l) {
    return l == FiberLabel::Sphere2 ? "S2" : "T2";
}

const char* to_string(SingularityKind k) {
    switch (k) {
        case SingularityKind::MorsePoint: return "point";
        case SingularityKind::Circle: return "circle";
        case SingularityKind::SphereBott: return "sphere";
        case SingularityKind::TorusBott: return "torus";
        case SingularityKind::ProjectivePlane: return "rp2";
    }
    return "?";
}

namespace {

std::string label_multiset(int spheres, int tori) {
    if (spheres == 0 && tori == 0) return "0";
    std::string out = "{";
    for (int i = 0; i < spheres; ++i) out += (out.size() > 1 ? ",S" : "S");
    for (int i = 0; i < tori; ++i) out += (out.size() > 1 ? ",T" : "T");
    out += "}";
    return out;
}

}  // namespace

std::string VertexSignature::to_string() const {
    std::string out = "(" + label_multiset(in_sphere, in_torus) + "|" +
                      label_multiset(out_sphere, out_torus) + ")";
    if (sing) {
        out += " !";
        out += reeb3::to_string(*sing);
    }
    return out;
}

bool valid_vertex_id(const std::string& id) {
    if (id.empty()) return false;
    return std::all_of(id.begin(), id.end(), [](unsigned char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
               (c >= '0' && c <= '9') || c == '_';
    });
}

void LabeledReebDigraph::add_vertex(const std::string& id) {
    if (!valid_vertex_id(id)) throw BadVertexIdError(id);
    if (!vertices_.insert(id).second) throw DuplicateVertexError(id);
}

int LabeledReebDigraph::add_edge(const std::string& src, const std::string& dst,
                                 FiberLabel label) {
    if (!has_vertex(src)) throw UnknownVertexError(src);
    if (!has_vertex(dst)) throw UnknownVertexError(dst);
    edges_.push_back(Edge{src, dst, label});
    return static_cast<int>(edges_.size()) - 1;
}

void LabeledReebDigraph::set_sing(const std::string& id, SingularityKind k) {
    if (!has_vertex(id)) throw UnknownVertexError(id);
    sing_[id] = k;
}

void LabeledReebDigraph::clear_sing(const std::string& id) { sing_.erase(id); }

void LabeledReebDigraph::set_height(const std::string& id, const Rational& h) {
    if (!has_vertex(id)) throw UnknownVertexError(id);
    height_[id] = h;
}

std::optional<SingularityKind> LabeledReebDigraph::sing(const std::string& id) const {
    auto it = sing_.find(id);
    if (it == sing_.end()) return std::nullopt;
    return it->second;
}

std::optional<SingularityKind> LabeledReebDigraph::effective_sing(const std::string& id) const {
    auto it = sing_.find(id);
    if (it != sing_.end()) return it->second;
    VertexSignature s = signature(id);
    if (s.degree() > 0 && !s.is_extremum()) return SingularityKind::MorsePoint;
    return std::nullopt;
}

std::optional<Rational> LabeledReebDigraph::height(const std::string& id) const {
    auto it = height_.find(id);
    if (it == height_.end()) return std::nullopt;
    return it->second;
}

std::vector<int> LabeledReebDigraph::in_edges(const std::string& id) const {
    std::vector<int> out;
    for (int i = 0; i < edge_count(); ++i)
        if (edges_[static_cast<std::size_t>(i)].dst == id) out.push_back(i);
    return out;
}

std::vector<int> LabeledReebDigraph::out_edges(const std::string& id) const {
    std::vector<int> out;
    for (int i = 0; i < edge_count(); ++i)
        if (edges_[static_cast<std::size_t>(i)].src == id) out.push_back(i);
    return out;
}

std::vector<int> LabeledReebDigraph::incident_edges(const std::string& id) const {
    std::vector<int> out;
    for (int i = 0; i < edge_count(); ++i) {
        const Edge& e = edges_[static_cast<std::size_t>(i)];
        if (e.src == id || e.dst == id) out.push_back(i);
    }
    return out;
}

int LabeledReebDigraph::degree(const std::string& id) const {
    int d = 0;
    for (const Edge& e : edges_) {
        if (e.src == id) ++d;
        if (e.dst == id) ++d;  // a loop counts twice
    }
    return d;
}

VertexSignature LabeledReebDigraph::signature(const std::string& id) const {
    if (!has_vertex(id)) throw UnknownVertexError(id);
    VertexSignature s;
    for (const Edge& e : edges_) {
        if (e.dst == id) {
            if (e.label == FiberLabel::Sphere2) ++s.in_sphere; else ++s.in_torus;
        }
        if (e.src == id) {
            if (e.label == FiberLabel::Sphere2) ++s.out_sphere; else ++s.out_torus;
        }
    }
    s.sing = sing(id);
    return s;
}

std::string LabeledReebDigraph::fresh_vertex(const std::string& base,
                                             const std::string& suffix) const {
    std::string stem;
    for (char c : base)
        if (valid_vertex_id(std::string(1, c))) stem += c;
    if (stem.empty()) stem = "v";
    std::string candidate = stem + suffix;
    int n = 2;
    while (has_vertex(candidate)) {
        candidate = stem + suffix + std::to_string(n);
        ++n;
    }
    return candidate;
}

std::string rational_to_string(const Rational& r) {
    std::string out = std::to_string(r.numerator());
    if (r.denominator() != 1) out += "/" + std::to_string(r.denominator());
    return out;
}

}  // namespace reeb3
