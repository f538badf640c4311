#pragma once

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "hyperbetti/errors.hpp"
#include "hyperbetti/vertex_set.hpp"

namespace hyperbetti {

enum class UniformityKind { uniform, non_uniform, no_edges };

struct Uniformity {
    UniformityKind kind = UniformityKind::no_edges;
    int d = 0; // valid only when kind == uniform
};

// Simple hypergraph on vertices {0, ..., n-1}: every edge has at least two
// vertices and no edge contains another.  Edges are kept in canonical order
// (cardinality, then lexicographic), and the vertex count never shrinks under
// edge or vertex deletion, so isolated vertices are retained on purpose.
//
// Instances are immutable after build(); all operations return new values.
class Hypergraph {
public:
    Hypergraph() = default;

    // Validates and canonicalizes.  Labels are display names only; when
    // omitted they default to x1..xn.
    static Hypergraph build(int n, std::vector<VertexSet> edges,
                            std::vector<std::string> labels = {});

    int n() const { return n_; }
    const std::vector<VertexSet>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const VertexSet& edge(int index) const;
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const;

    bool has_edge(VertexSet e) const { return edge_set_.count(e) != 0; }
    // Index in canonical order, if present.
    std::optional<int> edge_index(VertexSet e) const;

    Uniformity uniformity() const;
    // Common edge cardinality; throws unless uniformly d-uniform.
    int uniform_degree() const;
    bool is_graph() const; // 2-uniform or edgeless

    // Union of all edges; vertices outside it are isolated.
    VertexSet support() const;
    // Vertices adjacent to x: union of the edges through x, minus x.
    VertexSet neighborhood(int x) const;

    Hypergraph remove_edge(VertexSet e) const;
    // Drops every edge meeting x; keeps n.
    Hypergraph remove_vertex(int x) const;
    // Keeps only the edges contained in y; keeps n.
    Hypergraph induced(VertexSet y) const;
    // d-subsets of the vertex set that are not edges.
    Hypergraph complement(int d) const;

    // True when every d-subset of y is an edge (vacuous for |y| < d).
    bool is_d_complete(VertexSet y, int d) const;

    // Relabels the support to 0..k-1 preserving order and drops isolated
    // vertices; used for memo keys and reproducer shrinking.
    Hypergraph compacted() const;

    std::string describe_edge(VertexSet e) const;

    bool operator==(const Hypergraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_ && labels_ == other.labels_;
    }

private:
    int n_ = 0;
    std::vector<VertexSet> edges_;
    std::vector<std::string> labels_;
    std::unordered_set<VertexSet, VertexSetHash> edge_set_;
};

std::vector<std::string> default_labels(int n);

} // namespace hyperbetti
