#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperbetti/hypergraph.hpp"

namespace hyperbetti {

// Distance between two edges: length of a shortest proper chain, or infinite
// when no chain connects them.
class Distance {
public:
    static Distance infinite() { return Distance(-1); }
    static Distance finite(int v) { return Distance(v); }

    bool is_infinite() const { return value_ < 0; }
    int value() const {
        if (is_infinite()) fail(errc::bad_argument, "infinite distance has no value");
        return value_;
    }

    // Infinite compares greater than every finite distance.
    bool operator==(const Distance&) const = default;
    bool operator<(Distance o) const {
        if (is_infinite()) return false;
        if (o.is_infinite()) return true;
        return value_ < o.value_;
    }
    bool operator<=(Distance o) const { return *this == o || *this < o; }

    std::string to_string() const {
        return is_infinite() ? "infinite" : std::to_string(value_);
    }

private:
    explicit Distance(int v) : value_(v) {}
    int value_;
};

// A witness chain E_0, x_1, E_1, ..., x_l, E_l: edges with the interleaved
// link vertices.  links.size() == edges.size() - 1 except for the trivial
// chain from an edge to itself, where both lists shrink accordingly.
struct ChainCertificate {
    std::vector<VertexSet> edges;
    std::vector<int> links;
};

struct DistanceResult {
    Distance distance = Distance::infinite();
    std::optional<ChainCertificate> chain;
};

// Shortest proper chain between two edges of h.  Requires |e| >= |f|; for
// uniform hypergraphs the relation is symmetric.
DistanceResult edge_distance(const Hypergraph& h, VertexSet e, VertexSet f);

// All pairwise distances, indexed by canonical edge order.  Uniform only.
std::vector<std::vector<Distance>> distance_matrix(const Hypergraph& h);

// Checks that a certificate is a proper chain of h from its first edge to its
// last; used by tests and verification mode.
bool is_proper_chain(const Hypergraph& h, const ChainCertificate& c,
                     std::string* why = nullptr);

struct ProperConnectionReport {
    bool ok = true;
    // On failure: an intersecting pair whose distance exceeds d - |overlap|.
    VertexSet first, second;
    Distance found = Distance::infinite();
    int expected = 0;
};

// True when dist(e, f) = d - |e n f| for every intersecting pair of edges of
// a d-uniform hypergraph.  Edgeless passes vacuously.
ProperConnectionReport properly_connected_report(const Hypergraph& h);
bool is_properly_connected(const Hypergraph& h);

// max over all edge pairs (edgeless -> 0 by convention, reported separately
// by callers that care).
Distance diameter(const Hypergraph& h);

// Union of f - e over edges f at distance 1 from e (equivalently, for
// d-uniform h, the edges meeting e in d-1 vertices).
VertexSet neighbor_set(const Hypergraph& h, VertexSet e);

// Sub-hypergraph on the edges at distance >= d+1 from e (infinite included).
Hypergraph far_subhypergraph(const Hypergraph& h, VertexSet e);

struct DisjointWitness {
    int count = 0;
    std::vector<VertexSet> edges;
};

// Largest set of edges with pairwise distance >= t, by exact branch and
// bound on the conflict graph.
DisjointWitness max_pairwise_t_disjoint(const Hypergraph& h, int t);

// Exact maximum independent set on an explicit adjacency-mask graph; exposed
// for reuse (matching number, conflict graphs) and for direct testing.
std::pair<int, std::uint64_t> max_independent_set(const std::vector<std::uint64_t>& adj);

} // namespace hyperbetti
