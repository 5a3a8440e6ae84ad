#include "pathsets/presentation.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "pathsets/errors.hpp"

namespace pathsets {

Presentation::Presentation(Alphabet alphabet, std::vector<std::string> vertex_names,
                           std::vector<Edge> edges, int initial)
    : alphabet_(std::move(alphabet)),
      vertex_names_(std::move(vertex_names)),
      edges_(std::move(edges)),
      initial_(initial) {
    const int m = vertex_count();
    {
        std::unordered_set<std::string> seen;
        for (const auto& name : vertex_names_)
            if (!seen.insert(name).second)
                throw ValidationError("DuplicateVertex", "vertex '" + name + "' listed twice");
    }
    if (m == 0) {
        if (initial_ >= 0)
            throw ValidationError("UnknownVertex", "initial vertex on an empty vertex list");
        initial_ = -1;
        if (!edges_.empty())
            throw ValidationError("UnknownVertex", "edge on an empty vertex list");
        return;
    }
    if (initial_ < 0)
        throw ValidationError("MissingInitial", "no initial vertex given");
    if (initial_ >= m)
        throw ValidationError("UnknownVertex", "initial vertex index out of range");
    for (const Edge& e : edges_) {
        if (e.src < 0 || e.src >= m || e.dst < 0 || e.dst >= m)
            throw ValidationError("UnknownVertex", "edge endpoint out of range");
        if (e.sym < 0 || e.sym >= alphabet_.size())
            throw ValidationError("UnknownSymbol", "edge symbol out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    for (size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i] == edges_[i - 1])
            throw ValidationError("DuplicateEdgeTriple",
                                  "edge (" + vertex_names_[static_cast<size_t>(edges_[i].src)] + ", " +
                                      alphabet_.name(edges_[i].sym) + ", " +
                                      vertex_names_[static_cast<size_t>(edges_[i].dst)] + ") listed twice");
}

Presentation Presentation::empty(Alphabet alphabet) {
    return Presentation(std::move(alphabet), {}, {}, -1);
}

std::vector<Edge> Presentation::out_edges(int v) const {
    std::vector<Edge> out;
    for (const Edge& e : edges_)
        if (e.src == v) out.push_back(e);
    return out;
}

bool Presentation::is_right_resolving() const {
    for (size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i].src == edges_[i - 1].src && edges_[i].sym == edges_[i - 1].sym)
            return false;
    return true;
}

bool Presentation::is_pruned() const {
    std::vector<char> has_out(static_cast<size_t>(vertex_count()), 0);
    for (const Edge& e : edges_) has_out[static_cast<size_t>(e.src)] = 1;
    for (char h : has_out)
        if (!h) return false;
    return true;
}

int Presentation::step(int v, Symbol a) const {
    // Edges are sorted by (src, sym, dst) and dst >= 0, so this probe sorts
    // just before any (v, a, *) edge.
    Edge probe{v, a, -1};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), probe);
    if (it != edges_.end() && it->src == v && it->sym == a) return it->dst;
    return -1;
}

Presentation validate(const Alphabet& alphabet,
                      const std::vector<std::string>& vertex_names,
                      const std::vector<std::tuple<std::string, std::string, std::string>>& edges,
                      const std::string& initial) {
    std::unordered_map<std::string, int> vertex_index;
    for (size_t i = 0; i < vertex_names.size(); ++i) {
        if (!vertex_index.emplace(vertex_names[i], static_cast<int>(i)).second)
            throw ValidationError("DuplicateVertex", "vertex '" + vertex_names[i] + "' listed twice");
    }
    auto vertex_of = [&](const std::string& name) {
        auto it = vertex_index.find(name);
        if (it == vertex_index.end())
            throw ValidationError("UnknownVertex", "vertex '" + name + "' not declared");
        return it->second;
    };
    std::vector<Edge> resolved;
    resolved.reserve(edges.size());
    for (const auto& [src, sym, dst] : edges) {
        auto s = alphabet.index_of(sym);
        if (!s) throw ValidationError("UnknownSymbol", "symbol '" + sym + "' not declared");
        resolved.push_back(Edge{vertex_of(src), *s, vertex_of(dst)});
    }
    int init = -1;
    if (!vertex_names.empty()) {
        if (initial.empty()) throw ValidationError("MissingInitial", "no initial vertex given");
        init = vertex_of(initial);
    } else if (!initial.empty()) {
        throw ValidationError("UnknownVertex", "initial vertex '" + initial + "' not declared");
    }
    return Presentation(alphabet, vertex_names, std::move(resolved), init);
}

} // namespace pathsets
