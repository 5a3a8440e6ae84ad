#pragma once

#include <string>
#include <vector>

#include "pathsets/alphabet.hpp"

namespace pathsets {

/// One labeled edge of a pointed graph. Vertices are indices into the
/// presentation's vertex list.
struct Edge {
    int src;
    Symbol sym;
    int dst;

    friend bool operator==(const Edge& a, const Edge& b) {
        return a.src == b.src && a.sym == b.sym && a.dst == b.dst;
    }
    friend bool operator<(const Edge& a, const Edge& b) {
        if (a.src != b.src) return a.src < b.src;
        if (a.sym != b.sym) return a.sym < b.sym;
        return a.dst < b.dst;
    }
};

/// A pointed labeled directed graph: the raw, unnormalized form of a path
/// set. No determinism, pruning, or reachability is required here. The
/// zero-vertex presentation (initial < 0) is the empty value produced when
/// pruning deletes the initial vertex.
class Presentation {
public:
    /// Checked construction. Verifies vertex-name distinctness, edge endpoint
    /// and symbol validity, edge-triple distinctness, and that an initial
    /// vertex is given whenever the vertex list is nonempty. Edges are stored
    /// sorted by (src, sym, dst).
    Presentation(Alphabet alphabet, std::vector<std::string> vertex_names,
                 std::vector<Edge> edges, int initial);

    /// The empty presentation (no vertices) over the given alphabet.
    static Presentation empty(Alphabet alphabet);

    const Alphabet& alphabet() const { return alphabet_; }
    int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
    const std::vector<std::string>& vertex_names() const { return vertex_names_; }
    const std::string& vertex_name(int v) const { return vertex_names_.at(static_cast<size_t>(v)); }
    const std::vector<Edge>& edges() const { return edges_; }

    /// -1 for the empty presentation.
    int initial() const { return initial_; }
    bool is_empty() const { return initial_ < 0; }

    /// Edges leaving v, in (symbol, target) order.
    std::vector<Edge> out_edges(int v) const;

    /// True when no vertex has two out-edges with the same label.
    bool is_right_resolving() const;

    /// True when every vertex has at least one out-edge. The empty
    /// presentation is vacuously pruned.
    bool is_pruned() const;

    /// Deterministic successor: the unique a-target of v, or -1. Only
    /// meaningful on right-resolving presentations.
    int step(int v, Symbol a) const;

private:
    Alphabet alphabet_;
    std::vector<std::string> vertex_names_;
    std::vector<Edge> edges_;
    int initial_;
};

/// Convenience checked builder working with names rather than indices.
/// Errors: UnknownVertex, UnknownSymbol, DuplicateEdgeTriple, MissingInitial,
/// EmptyAlphabet, DuplicateVertex.
Presentation validate(const Alphabet& alphabet,
                      const std::vector<std::string>& vertex_names,
                      const std::vector<std::tuple<std::string, std::string, std::string>>& edges,
                      const std::string& initial);

} // namespace pathsets
