#include "hyperbetti/ideal.hpp"

#include <algorithm>

#include "hyperbetti/metric.hpp"

namespace hyperbetti {

bool MonomialIdeal::contains_monomial(Monomial m) const {
    for (Monomial g : gens)
        if (g.subset_of(m)) return true;
    return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    for (Monomial g : other.gens)
        if (!contains_monomial(g)) return false;
    return true;
}

MonomialIdeal minimalize(int n, std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), canonical_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> minimal;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        // Canonical order puts potential divisors first.
        for (std::size_t j = 0; j < i && !redundant; ++j)
            if (gens[j].subset_of(gens[i])) redundant = true;
        if (!redundant) minimal.push_back(gens[i]);
    }
    return {n, std::move(minimal)};
}

MonomialIdeal edge_ideal(const Hypergraph& h) {
    // Edges are already minimal and canonically ordered.
    return {h.n(), h.edges()};
}

MonomialIdeal intersect_principal(Monomial m, const MonomialIdeal& ideal) {
    std::vector<Monomial> out;
    out.reserve(ideal.gens.size());
    for (Monomial g : ideal.gens) out.push_back(g | m);
    return minimalize(ideal.n, std::move(out));
}

IntersectionDecomposition intersection_decomposition(const Hypergraph& h, VertexSet e,
                                                     bool verify) {
    if (!h.has_edge(e))
        fail(errc::no_such_edge, "decomposition requires an edge of the hypergraph");
    // The closed form only holds for properly-connected hypergraphs.
    if (!is_properly_connected(h))
        fail(errc::not_properly_connected,
             "intersection decomposition requires a properly-connected hypergraph");
    IntersectionDecomposition out{neighbor_set(h, e), far_subhypergraph(h, e), {}};
    std::vector<Monomial> gens;
    for (int z : out.neighbors) gens.push_back(VertexSet(e).add(z));
    for (VertexSet f : out.far.edges()) gens.push_back(e | f);
    out.ideal = minimalize(h.n(), std::move(gens));
    if (verify) {
        MonomialIdeal direct = intersect_principal(e, edge_ideal(h.remove_edge(e)));
        if (!(direct == out.ideal))
            fail(errc::internal_check_failed,
                 "decomposition of (x^E) n I(H \\ E) disagrees with the direct intersection for E = " +
                     h.describe_edge(e));
    }
    return out;
}

namespace {

struct TransversalSearch {
    const std::vector<Monomial>& supports;
    std::vector<VertexSet> found;

    // Every u in the partial transversal must keep a private support (one it
    // alone hits).  Supports only gain hits as the set grows, so a vertex
    // that loses all privates now can never win one back; prune immediately.
    bool all_private(VertexSet t) const {
        for (int u : t) {
            bool has_private = false;
            for (Monomial s : supports) {
                VertexSet hit = s & t;
                if (hit.size() == 1 && hit.contains(u)) {
                    has_private = true;
                    break;
                }
            }
            if (!has_private) return false;
        }
        return true;
    }

    void extend(VertexSet t) {
        const Monomial* unhit = nullptr;
        for (const Monomial& s : supports)
            if (!s.intersects(t)) {
                unhit = &s;
                break;
            }
        if (!unhit) {
            found.push_back(t);
            return;
        }
        for (int v : *unhit) {
            VertexSet next = t;
            next.add(v);
            if (all_private(next)) extend(next);
        }
    }
};

} // namespace

std::vector<VertexSet> minimal_transversals(const MonomialIdeal& ideal) {
    if (ideal.is_zero())
        fail(errc::no_edges, "transversals of the zero ideal are undefined");
    TransversalSearch search{ideal.gens, {}};
    search.extend(VertexSet());
    std::sort(search.found.begin(), search.found.end(), canonical_less);
    search.found.erase(std::unique(search.found.begin(), search.found.end()),
                       search.found.end());
    return search.found;
}

std::vector<VertexSet> minimal_vertex_covers(const Hypergraph& h) {
    if (h.edge_count() == 0)
        fail(errc::no_edges, "vertex covers of an edgeless hypergraph are trivial");
    return minimal_transversals(edge_ideal(h));
}

MonomialIdeal alexander_dual(const MonomialIdeal& ideal) {
    return {ideal.n, minimal_transversals(ideal)};
}

int height(const MonomialIdeal& ideal) {
    int best = -1;
    for (VertexSet t : minimal_transversals(ideal))
        if (best < 0 || t.size() < best) best = t.size();
    return best;
}

bool is_unmixed(const Hypergraph& h) {
    std::vector<VertexSet> covers = minimal_vertex_covers(h);
    for (VertexSet c : covers)
        if (c.size() != covers.front().size()) return false;
    return true;
}

int cover_number(const Hypergraph& h) {
    return height(edge_ideal(h));
}

int matching_number(const Hypergraph& h) {
    int s = h.edge_count();
    if (s == 0) return 0;
    if (s > 64) fail(errc::too_large, "too many edges for the exact solver");
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(s), 0);
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j)
            if (h.edge(i).intersects(h.edge(j))) {
                adj[static_cast<std::size_t>(i)] |= 1ull << j;
                adj[static_cast<std::size_t>(j)] |= 1ull << i;
            }
    return max_independent_set(adj).first;
}

std::string monomial_to_string(Monomial m, const std::vector<std::string>& labels) {
    if (m.empty()) return "1";
    std::string out;
    for (int v : m) {
        if (!out.empty()) out += "*";
        out += (v < static_cast<int>(labels.size())) ? labels[static_cast<std::size_t>(v)]
                                                     : "x" + std::to_string(v + 1);
    }
    return out;
}

} // namespace hyperbetti
