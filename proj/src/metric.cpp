#include "hyperbetti/metric.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>

namespace hyperbetti {

namespace {

// State for the labeled chain search.  A chain must reuse neither edges nor
// link vertices, so plain BFS over edges is only a lower bound; the real
// search is depth-first with both exclusions tracked, iteratively deepened.
struct ChainSearch {
    const std::vector<VertexSet>& edges;
    int target;
    std::vector<int> lower; // unlabeled step-graph distance to target
    std::vector<int> edge_path;
    std::vector<int> link_path;
    std::uint64_t used_edges = 0;
    VertexSet used_links;

    bool dfs(int cur, int remaining) {
        if (remaining == 0) return cur == target;
        VertexSet cur_e = edges[static_cast<std::size_t>(cur)];
        for (int j = 0; j < static_cast<int>(edges.size()); ++j) {
            if (used_edges & (1ull << j)) continue;
            if (j == target ? remaining != 1 : lower[static_cast<std::size_t>(j)] > remaining - 1)
                continue;
            VertexSet next = edges[static_cast<std::size_t>(j)];
            VertexSet overlap = cur_e & next;
            if (overlap.size() != next.size() - 1) continue;
            VertexSet candidates = overlap - used_links;
            for (int x : candidates) {
                used_edges |= 1ull << j;
                used_links.add(x);
                edge_path.push_back(j);
                link_path.push_back(x);
                if (dfs(j, remaining - 1)) return true;
                edge_path.pop_back();
                link_path.pop_back();
                used_links.remove(x);
                used_edges &= ~(1ull << j);
            }
        }
        return false;
    }
};

// Unlabeled lower bounds: BFS on the "proper step" relation toward target.
// Steps are directed (i -> j needs |E_i n E_j| = |E_j| - 1), so the BFS runs
// on reversed steps.  Unreachable entries stay at a large sentinel.
std::vector<int> step_lower_bounds(const std::vector<VertexSet>& edges, int target) {
    const int unreachable = 1 << 20;
    std::vector<int> dist(edges.size(), unreachable);
    dist[static_cast<std::size_t>(target)] = 0;
    std::deque<int> queue{target};
    while (!queue.empty()) {
        int j = queue.front();
        queue.pop_front();
        for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
            if (dist[static_cast<std::size_t>(i)] != unreachable) continue;
            VertexSet overlap = edges[static_cast<std::size_t>(i)] & edges[static_cast<std::size_t>(j)];
            if (overlap.size() != edges[static_cast<std::size_t>(j)].size() - 1) continue;
            dist[static_cast<std::size_t>(i)] = dist[static_cast<std::size_t>(j)] + 1;
            queue.push_back(i);
        }
    }
    return dist;
}

DistanceResult bounded_distance(const Hypergraph& h, VertexSet e, VertexSet f, int limit) {
    auto ia = h.edge_index(e);
    auto ib = h.edge_index(f);
    if (!ia || !ib)
        fail(errc::no_such_edge, "distance endpoints must be edges of the hypergraph");
    if (e.size() < f.size())
        fail(errc::bad_argument, "distance requires |first| >= |second|");

    if (e == f) {
        ChainCertificate trivial;
        trivial.edges.push_back(e);
        return {Distance::finite(0), trivial};
    }

    ChainSearch search{h.edges(), *ib, step_lower_bounds(h.edges(), *ib), {}, {}, 0, {}};
    int start_bound = search.lower[static_cast<std::size_t>(*ia)];
    int cap = std::min(h.edge_count() - 1, h.n());
    cap = std::min(cap, limit);
    if (start_bound > cap) return {Distance::infinite(), std::nullopt};

    for (int length = std::max(1, start_bound); length <= cap; ++length) {
        search.used_edges = 1ull << *ia;
        search.used_links = VertexSet();
        search.edge_path.assign(1, *ia);
        search.link_path.clear();
        if (search.dfs(*ia, length)) {
            ChainCertificate cert;
            for (int idx : search.edge_path)
                cert.edges.push_back(h.edges()[static_cast<std::size_t>(idx)]);
            cert.links = search.link_path;
            return {Distance::finite(length), cert};
        }
    }
    return {Distance::infinite(), std::nullopt};
}

} // namespace

DistanceResult edge_distance(const Hypergraph& h, VertexSet e, VertexSet f) {
    return bounded_distance(h, e, f, 1 << 20);
}

std::vector<std::vector<Distance>> distance_matrix(const Hypergraph& h) {
    h.uniform_degree();
    int s = h.edge_count();
    std::vector<std::vector<Distance>> m(
        static_cast<std::size_t>(s),
        std::vector<Distance>(static_cast<std::size_t>(s), Distance::finite(0)));
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) {
            Distance d = edge_distance(h, h.edge(i), h.edge(j)).distance;
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = d;
            m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = d;
        }
    return m;
}

bool is_proper_chain(const Hypergraph& h, const ChainCertificate& c, std::string* why) {
    auto reject = [&](const std::string& reason) {
        if (why) *why = reason;
        return false;
    };
    if (c.edges.empty()) return reject("chain has no edges");
    if (c.links.size() + 1 != c.edges.size())
        return reject("link count must be one less than edge count");
    for (std::size_t i = 0; i < c.edges.size(); ++i) {
        if (!h.has_edge(c.edges[i])) return reject("chain uses a non-edge");
        for (std::size_t j = i + 1; j < c.edges.size(); ++j)
            if (c.edges[i] == c.edges[j]) return reject("repeated edge");
    }
    VertexSet seen;
    for (std::size_t k = 0; k < c.links.size(); ++k) {
        int x = c.links[k];
        if (seen.contains(x)) return reject("repeated link vertex");
        seen.add(x);
        if (!c.edges[k].contains(x) || !c.edges[k + 1].contains(x))
            return reject("link vertex must lie in both adjacent edges");
    }
    for (std::size_t k = 0; k + 1 < c.edges.size(); ++k) {
        VertexSet overlap = c.edges[k] & c.edges[k + 1];
        if (overlap.size() != c.edges[k + 1].size() - 1)
            return reject("step is not proper");
    }
    return true;
}

ProperConnectionReport properly_connected_report(const Hypergraph& h) {
    ProperConnectionReport report;
    if (h.edge_count() == 0) return report;
    int d = h.uniform_degree();
    for (int i = 0; i < h.edge_count(); ++i)
        for (int j = i + 1; j < h.edge_count(); ++j) {
            VertexSet e = h.edge(i), f = h.edge(j);
            VertexSet overlap = e & f;
            if (overlap.empty()) continue;
            int expected = d - overlap.size();
            // A proper chain loses at most one vertex of e per step, so the
            // distance is at least `expected`; only the upper side can fail.
            Distance found = bounded_distance(h, e, f, expected).distance;
            if (found != Distance::finite(expected)) {
                report.ok = false;
                report.first = e;
                report.second = f;
                report.expected = expected;
                report.found = edge_distance(h, e, f).distance;
                return report;
            }
        }
    return report;
}

bool is_properly_connected(const Hypergraph& h) {
    return properly_connected_report(h).ok;
}

Distance diameter(const Hypergraph& h) {
    if (h.edge_count() <= 1) return Distance::finite(0);
    Distance worst = Distance::finite(0);
    for (const auto& row : distance_matrix(h))
        for (Distance d : row)
            if (worst < d) worst = d;
    return worst;
}

VertexSet neighbor_set(const Hypergraph& h, VertexSet e) {
    int d = h.uniform_degree();
    if (!h.has_edge(e))
        fail(errc::no_such_edge, "neighbor set requires an edge of the hypergraph");
    VertexSet nb;
    for (VertexSet f : h.edges())
        if ((e & f).size() == d - 1) nb |= f - e;
    return nb;
}

Hypergraph far_subhypergraph(const Hypergraph& h, VertexSet e) {
    int d = h.uniform_degree();
    if (!h.has_edge(e))
        fail(errc::no_such_edge, "far sub-hypergraph requires an edge of the hypergraph");
    std::vector<VertexSet> far;
    for (VertexSet f : h.edges())
        if (bounded_distance(h, e, f, d).distance.is_infinite())
            far.push_back(f);
    return Hypergraph::build(h.n(), std::move(far), h.labels());
}

namespace {

struct MisSearch {
    const std::vector<std::uint64_t>& adj;
    int best = -1;
    std::uint64_t best_set = 0;

    void run(std::uint64_t cand, std::uint64_t cur, int cur_size) {
        if (cur_size + std::popcount(cand) <= best) return;
        if (cand == 0) {
            if (cur_size > best) {
                best = cur_size;
                best_set = cur;
            }
            return;
        }
        // Branch on the candidate with the most conflicts left; including it
        // prunes the most, excluding it shrinks the branching factor fast.
        int pivot = -1, pivot_deg = -1;
        for (std::uint64_t rest = cand; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            int deg = std::popcount(adj[static_cast<std::size_t>(v)] & cand);
            if (deg > pivot_deg) {
                pivot_deg = deg;
                pivot = v;
            }
        }
        std::uint64_t vbit = 1ull << pivot;
        run(cand & ~(adj[static_cast<std::size_t>(pivot)] | vbit), cur | vbit, cur_size + 1);
        run(cand & ~vbit, cur, cur_size);
    }
};

} // namespace

std::pair<int, std::uint64_t> max_independent_set(const std::vector<std::uint64_t>& adj) {
    if (adj.size() > 64)
        fail(errc::too_large, "independent set solver handles at most 64 nodes");
    MisSearch search{adj};
    search.best = 0;
    std::uint64_t all = adj.empty() ? 0 : (adj.size() == 64 ? ~0ull : (1ull << adj.size()) - 1);
    search.run(all, 0, 0);
    return {search.best, search.best_set};
}

DisjointWitness max_pairwise_t_disjoint(const Hypergraph& h, int t) {
    if (t < 1) fail(errc::bad_argument, "separation threshold must be positive");
    int s = h.edge_count();
    if (s == 0) return {};
    if (s > 64) fail(errc::too_large, "too many edges for the exact solver");
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(s), 0);
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) {
            VertexSet a = h.edge(i), b = h.edge(j);
            if (a.size() < b.size()) std::swap(a, b);
            Distance d = bounded_distance(h, a, b, t - 1).distance;
            if (!d.is_infinite()) {
                adj[static_cast<std::size_t>(i)] |= 1ull << j;
                adj[static_cast<std::size_t>(j)] |= 1ull << i;
            }
        }
    auto [count, set] = max_independent_set(adj);
    DisjointWitness witness;
    witness.count = count;
    for (int i = 0; i < s; ++i)
        if (set & (1ull << i)) witness.edges.push_back(h.edge(i));
    return witness;
}

} // namespace hyperbetti
