#pragma once

#include <optional>
#include <vector>

#include "hyperbetti/hypergraph.hpp"

namespace hyperbetti {

// Vertices of e that lie in no other edge.
VertexSet free_vertices(const Hypergraph& h, VertexSet e);

// v-leaf: an edge with a free vertex.
bool is_v_leaf(const Hypergraph& h, VertexSet e);

// f-leaf: some other edge h0 absorbs every intersection, i.e. e n e' is
// contained in e n h0 for all edges e' != e.  A lone edge counts.
bool is_f_leaf(const Hypergraph& h, VertexSet e);

struct SplitWitness {
    int z = -1; // certifying vertex of e, smallest in vertex order
};

// Eliahou-Kervaire splitting test for I(H) = (x^e) + I(H \ e): looks for a
// vertex z of e with (x^e) n I(H \ e) contained in (x^e) n I(H \ {z}).
// Requires at least two edges.
std::optional<SplitWitness> is_splitting_edge(const Hypergraph& h, VertexSet e);

// Combinatorial criterion for properly-connected d-uniform hypergraphs: z
// certifies iff every neighbor swap (e \ {z}) u {z_i}, z_i in N(e), is an
// edge.  Agrees with is_splitting_edge vertex for vertex; verify rechecks
// that on the spot.
std::optional<SplitWitness> is_splitting_edge_pc(const Hypergraph& h, VertexSet e,
                                                 bool verify = false);

// Vertex elimination scheme: repeatedly removes a vertex whose closed
// neighborhood induces a d-complete hypergraph, lowest admissible vertex
// first, with backtracking.  Returns the order over all n vertices, or
// nothing if the search exhausts.
std::optional<std::vector<int>> elimination_order(const Hypergraph& h);

// Ground-truth triangulated test straight from the definition: every
// nonempty vertex subset must induce a sub-hypergraph with an eliminable
// vertex.  Exponential in n; refuses n beyond the cap.
bool is_triangulated_exact(const Hypergraph& h, int cap = 14);

struct TriangulatedReport {
    bool triangulated = false;
    bool order_found = false; // elimination order exists
    bool exact_ran = false;   // definition-level test settled the verdict
};

// Fast path via elimination_order, falling back on the exact test when the
// instance is small enough and the order search alone cannot certify (for
// d >= 3 an order is necessary but not known to be sufficient).  Disagreement
// between the two engines is reported as an internal check failure.
TriangulatedReport is_triangulated_report(const Hypergraph& h, int exact_cap = 14);
bool is_triangulated(const Hypergraph& h, int exact_cap = 14);

// Chordality via simplicial elimination.  Edgeless graphs count as chordal.
// With verify set and the graph small, cross-checks against a direct
// chordless-cycle search.
bool is_chordal(const Hypergraph& g, bool verify = false);

// Test-support: explicit search for an induced cycle of length >= 4.
bool has_chordless_cycle(const Hypergraph& g);

} // namespace hyperbetti
