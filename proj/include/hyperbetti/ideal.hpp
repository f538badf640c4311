#pragma once

#include <string>
#include <vector>

#include "hyperbetti/hypergraph.hpp"

namespace hyperbetti {

// Squarefree monomial, identified with its support.
using Monomial = VertexSet;

// Squarefree monomial ideal in k[x_1..x_n], kept as its unique minimal
// generating set in canonical order.  The zero ideal is the empty list; the
// unit ideal never arises here and is not representable.
struct MonomialIdeal {
    int n = 0;
    std::vector<Monomial> gens;

    bool is_zero() const { return gens.empty(); }
    bool contains_monomial(Monomial m) const;
    bool contains(const MonomialIdeal& other) const;

    bool operator==(const MonomialIdeal&) const = default;
};

// Builds an ideal from arbitrary generators, discarding multiples.
MonomialIdeal minimalize(int n, std::vector<Monomial> gens);

// Ideal generated by the products x^E over the edges of h.
MonomialIdeal edge_ideal(const Hypergraph& h);

// (m) n I, again as a minimal generating set: lcm(m, g) over generators g,
// minimalized.
MonomialIdeal intersect_principal(Monomial m, const MonomialIdeal& ideal);

// The pieces of (x^E) n I(H \ E) for a properly-connected d-uniform H:
// x^E * ((z_1..z_t) + I(far)), with z_i running over the neighbor set.
struct IntersectionDecomposition {
    VertexSet neighbors;
    Hypergraph far;
    MonomialIdeal ideal;
};

IntersectionDecomposition intersection_decomposition(const Hypergraph& h, VertexSet e,
                                                     bool verify = false);

// All inclusion-minimal transversals of the generator supports, canonical
// order.  For an edge ideal these are the minimal vertex covers.
std::vector<VertexSet> minimal_transversals(const MonomialIdeal& ideal);
std::vector<VertexSet> minimal_vertex_covers(const Hypergraph& h);

// Alexander dual: intersection of the prime ideals of the generator
// supports, generated by the minimal transversals.  Undefined for the zero
// ideal (the dual would be the unit ideal).
MonomialIdeal alexander_dual(const MonomialIdeal& ideal);

// Smallest generator degree of the dual, i.e. the minimum transversal size.
int height(const MonomialIdeal& ideal);

// True when all minimal transversals share one size.
bool is_unmixed(const Hypergraph& h);
int cover_number(const Hypergraph& h);

// Maximum number of pairwise disjoint edges.
int matching_number(const Hypergraph& h);

std::string monomial_to_string(Monomial m, const std::vector<std::string>& labels);

} // namespace hyperbetti
