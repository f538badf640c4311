#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hyperbetti/hypergraph.hpp"

namespace hyperbetti {

// Deterministic 64-bit generator.  The rejection loop in below() keeps the
// draw sequence identical across platforms, which the reproducibility
// guarantees of the randomized suites rely on.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    // Uniform draw from [0, bound); bound must be positive.
    int below(int bound);

    // k distinct values from [0, bound) in draw order.
    std::vector<int> sample(int bound, int k);

  private:
    std::uint64_t state_;
};

// Graph with exactly min(edge_count, C(n,2)) distinct random edges.
Hypergraph random_graph(Rng& rng, int n, int edge_count);

// Chordal graph built by attaching each new vertex to a random clique of the
// part already built (reverse perfect elimination).  Clique picks are capped
// by max_clique and the total edge budget by max_edges so instances stay
// inside the homology oracle's generator cap.
Hypergraph random_chordal(Rng& rng, int n, int max_clique = 3, int max_edges = 18);

// d-uniform v-tree: starts from one edge; every later edge keeps d-1
// vertices of an existing edge and adds one fresh vertex.  Vertex count ends
// up at d + edge_count - 1.
Hypergraph random_v_tree(Rng& rng, int d, int edge_count);

struct PcSample {
    std::optional<Hypergraph> hypergraph; // empty when every attempt failed
    int attempts = 0;
};

// Rejection-samples random d-uniform hypergraphs until one is properly
// connected.  Gives up after max_attempts; the attempt count doubles as an
// acceptance-rate report.
PcSample random_pc_uniform(Rng& rng, int n, int d, int edge_count,
                           int max_attempts = 10000);

// Visits every labeled graph on n vertices (2^C(n,2) of them) in a fixed
// order and returns how many were visited.  Refuses n > 7.
std::uint64_t for_each_graph(int n, const std::function<void(const Hypergraph&)>& fn);

} // namespace hyperbetti
