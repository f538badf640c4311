#include "hyperbetti/generators.hpp"

#include <algorithm>
#include <numeric>

#include "hyperbetti/metric.hpp"

namespace hyperbetti {

std::uint64_t Rng::next() {
    // splitmix64; small, full-period, and easy to keep bit-identical.
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

int Rng::below(int bound) {
    if (bound <= 0) fail(errc::bad_argument, "below() needs a positive bound");
    std::uint64_t b = static_cast<std::uint64_t>(bound);
    std::uint64_t limit = ~0ull - ~0ull % b;
    std::uint64_t draw;
    do {
        draw = next();
    } while (draw >= limit);
    return static_cast<int>(draw % b);
}

std::vector<int> Rng::sample(int bound, int k) {
    std::vector<int> pool(static_cast<std::size_t>(bound));
    std::iota(pool.begin(), pool.end(), 0);
    k = std::min(k, bound);
    for (int i = 0; i < k; ++i)
        std::swap(pool[static_cast<std::size_t>(i)],
                  pool[static_cast<std::size_t>(i + below(bound - i))]);
    pool.resize(static_cast<std::size_t>(k));
    return pool;
}

namespace {

std::vector<VertexSet> all_pairs(int n) {
    std::vector<VertexSet> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.push_back(VertexSet{}.add(i).add(j));
    return pairs;
}

} // namespace

Hypergraph random_graph(Rng& rng, int n, int edge_count) {
    std::vector<VertexSet> pairs = all_pairs(n);
    std::vector<VertexSet> edges;
    for (int idx : rng.sample(static_cast<int>(pairs.size()), edge_count))
        edges.push_back(pairs[static_cast<std::size_t>(idx)]);
    return Hypergraph::build(n, edges);
}

Hypergraph random_chordal(Rng& rng, int n, int max_clique, int max_edges) {
    std::vector<VertexSet> adj(static_cast<std::size_t>(n));
    std::vector<VertexSet> edges;
    for (int v = 1; v < n; ++v) {
        int budget = std::min({max_clique, v, max_edges - static_cast<int>(edges.size())});
        if (budget <= 0) continue;
        int want = rng.below(budget + 1);
        VertexSet clique;
        VertexSet candidates = VertexSet::full(v);
        while (clique.size() < want && !candidates.empty()) {
            std::vector<int> pool = candidates.elements();
            int u = pool[static_cast<std::size_t>(rng.below(static_cast<int>(pool.size())))];
            clique.add(u);
            candidates = (candidates & adj[static_cast<std::size_t>(u)]).remove(u);
        }
        for (int u : clique) {
            adj[static_cast<std::size_t>(u)].add(v);
            adj[static_cast<std::size_t>(v)].add(u);
            edges.push_back(VertexSet{}.add(u).add(v));
        }
    }
    return Hypergraph::build(n, edges);
}

Hypergraph random_v_tree(Rng& rng, int d, int edge_count) {
    if (d < 2) fail(errc::bad_argument, "v-trees need d >= 2");
    if (edge_count < 1) fail(errc::bad_argument, "v-trees need at least one edge");
    int n = d + edge_count - 1;
    if (n > VertexSet::max_vertices) fail(errc::too_large, "v-tree would exceed the vertex cap");
    std::vector<VertexSet> edges{VertexSet::full(d)};
    for (int fresh = d; fresh < n; ++fresh) {
        VertexSet base = edges[static_cast<std::size_t>(
            rng.below(static_cast<int>(edges.size())))];
        std::vector<int> verts = base.elements();
        int dropped = verts[static_cast<std::size_t>(rng.below(d))];
        edges.push_back(VertexSet{base}.remove(dropped).add(fresh));
    }
    return Hypergraph::build(n, edges);
}

PcSample random_pc_uniform(Rng& rng, int n, int d, int edge_count, int max_attempts) {
    if (d < 2 || d > n) fail(errc::bad_argument, "need 2 <= d <= n");
    std::vector<VertexSet> subsets;
    VertexSet cursor = VertexSet::full(d);
    std::uint64_t top = 1ull << n;
    while (cursor.bits() < top) {
        subsets.push_back(cursor);
        cursor = VertexSet::next_same_size(cursor);
    }
    PcSample out;
    while (out.attempts < max_attempts) {
        ++out.attempts;
        std::vector<VertexSet> edges;
        for (int idx : rng.sample(static_cast<int>(subsets.size()), edge_count))
            edges.push_back(subsets[static_cast<std::size_t>(idx)]);
        Hypergraph h = Hypergraph::build(n, edges);
        if (is_properly_connected(h)) {
            out.hypergraph = h;
            return out;
        }
    }
    return out;
}

std::uint64_t for_each_graph(int n, const std::function<void(const Hypergraph&)>& fn) {
    if (n < 0 || n > 7) fail(errc::too_large, "exhaustive graph streams stop at n = 7");
    std::vector<VertexSet> pairs = all_pairs(n);
    std::uint64_t total = 1ull << pairs.size();
    std::vector<VertexSet> edges;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        edges.clear();
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if (mask & (1ull << b)) edges.push_back(pairs[b]);
        fn(Hypergraph::build(n, edges));
    }
    return total;
}

} // namespace hyperbetti
