#include "hyperbetti/betti.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "hyperbetti/metric.hpp"

namespace hyperbetti {

namespace {

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    static const auto table = [] {
        constexpr int cap = VertexSet::max_vertices + 1;
        std::array<std::array<std::int64_t, cap>, cap> t{};
        for (int i = 0; i < cap; ++i) {
            t[static_cast<std::size_t>(i)][0] = 1;
            for (int j = 1; j <= i; ++j)
                t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                    t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
        }
        return t;
    }();
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

void verify_hypotheses(const Hypergraph& h, const RecursionOptions& opts) {
    h.uniform_degree();
    if (h.uniform_degree() != 2) {
        ProperConnectionReport pc = properly_connected_report(h);
        if (!pc.ok)
            fail(errc::not_properly_connected,
                 "not properly connected: dist(" + h.describe_edge(pc.first) + ", " +
                     h.describe_edge(pc.second) + ") = " + pc.found.to_string() +
                     ", expected " + std::to_string(pc.expected));
    }
    if (!is_triangulated(h, opts.triangulated_cap))
        fail(errc::not_triangulated, "hypergraph is not triangulated");
}

// Lowest support vertex whose closed neighborhood induces a d-complete
// sub-hypergraph.  Exists whenever the hypergraph is triangulated and has an
// edge.
int eliminable_vertex(const Hypergraph& h, int d) {
    for (int x : h.support()) {
        VertexSet closed = h.neighborhood(x);
        closed.add(x);
        if (h.is_d_complete(closed, d)) return x;
    }
    return -1;
}

std::string memo_key(const Hypergraph& h) {
    // Compaction relabels the support order-preservingly, so isomorphic
    // leftovers of vertex deletions share an entry.
    Hypergraph c = h.compacted();
    std::string key;
    key.reserve(c.edges().size() * sizeof(std::uint64_t));
    for (VertexSet e : c.edges()) {
        std::uint64_t bits = e.bits();
        key.append(reinterpret_cast<const char*>(&bits), sizeof(bits));
    }
    return key;
}

struct RecursionEngine {
    RecursionOptions opts;
    std::unordered_map<std::string, BettiTable> betti_memo;
    std::unordered_map<std::string, TableInvariants> light_memo;

    BettiTable betti(const Hypergraph& h) {
        if (h.edge_count() == 0) return {};
        std::string key = memo_key(h);
        auto it = betti_memo.find(key);
        if (it != betti_memo.end()) return it->second;

        int d = h.uniform_degree();
        BettiTable out;
        if (h.edge_count() == 1) {
            out.set(0, d, 1);
        } else {
            SplitDecomposition split = split_node(h);
            BettiTable rest = betti(split.rest);
            BettiTable far = betti(split.far);
            assemble(out, h, d, split.t, rest, far);
        }
        betti_memo.emplace(std::move(key), out);
        return out;
    }

    TableInvariants invariants(const Hypergraph& h) {
        if (h.edge_count() == 0) return {};
        std::string key = memo_key(h);
        auto it = light_memo.find(key);
        if (it != light_memo.end()) return it->second;

        int d = h.uniform_degree();
        TableInvariants out;
        if (h.edge_count() == 1) {
            out.reg = d;
            out.pdim = 0;
        } else {
            SplitDecomposition split = split_node(h);
            TableInvariants rest = invariants(split.rest);
            TableInvariants far = invariants(split.far);
            out.reg = std::max(rest.reg, far.reg + d - 1);
            out.pdim = std::max(rest.pdim, far.pdim + split.t + 1);
        }
        light_memo.emplace(std::move(key), out);
        return out;
    }

    SplitDecomposition split_node(const Hypergraph& h) {
        if (opts.verify == VerifyMode::full) verify_hypotheses(h, opts);
        return split_step_unchecked(h, opts);
    }

    static SplitDecomposition split_step_unchecked(const Hypergraph& h,
                                                   const RecursionOptions& opts) {
        int d = h.uniform_degree();
        int x = eliminable_vertex(h, d);
        if (x < 0)
            fail(errc::not_triangulated,
                 "no vertex has a d-complete closed neighborhood");
        SplitDecomposition out;
        for (VertexSet e : h.edges())
            if (e.contains(x)) {
                out.edge = e;
                break;
            }
        out.z = x;
        out.rest = h.remove_edge(out.edge);
        out.far = far_subhypergraph(h, out.edge);
        out.t = neighbor_set(h, out.edge).size();
        if (opts.verify == VerifyMode::full) {
            // The eliminated vertex itself must certify the split: every
            // neighbor swap of the chosen edge has to be an edge.
            VertexSet neighbors = neighbor_set(h, out.edge);
            for (int zi : neighbors) {
                VertexSet swapped = out.edge;
                swapped.remove(x).add(zi);
                if (!h.has_edge(swapped))
                    fail(errc::internal_check_failed,
                         "chosen vertex fails the neighbor-swap certificate on " +
                             h.describe_edge(out.edge));
            }
            if (h.edge_count() >= 2) is_splitting_edge_pc(h, out.edge, true);
        }
        return out;
    }

    // beta_{i,j}(I) = beta_{i,j}(I(rest))
    //              + sum_l C(t,l) beta_{i-1-l, j-d-l}(I(far)), with the
    // l = i term collapsing to C(t,i) at j = d+i by the beta_{-1,0} = 1
    // convention; beta_{0,*} is just the generator count.
    static void assemble(BettiTable& out, const Hypergraph& h, int d, int t,
                         const BettiTable& rest, const BettiTable& far) {
        out.set(0, d, h.edge_count());
        for (const auto& [key, value] : rest.entries())
            if (key.first >= 1) out.add(key.first, key.second, value);
        for (const auto& [key, value] : far.entries())
            for (int l = 0; l <= t; ++l)
                out.add(key.first + 1 + l, key.second + d + l, binomial(t, l) * value);
        for (int l = 1; l <= t; ++l) out.add(l, d + l, binomial(t, l));
    }
};

} // namespace

SplitDecomposition split_step(const Hypergraph& h, const RecursionOptions& opts) {
    if (h.edge_count() == 0) fail(errc::no_edges, "nothing to split in an edgeless hypergraph");
    if (opts.verify != VerifyMode::off) verify_hypotheses(h, opts);
    return RecursionEngine::split_step_unchecked(h, opts);
}

bool recursion_applies(const Hypergraph& h) {
    if (h.edge_count() == 0) return true;
    if (h.uniformity().kind != UniformityKind::uniform) return false;
    if (h.uniform_degree() >= 3 && !is_properly_connected(h)) return false;
    return is_triangulated(h);
}

BettiTable recursive_betti(const Hypergraph& h, const RecursionOptions& opts) {
    if (h.edge_count() == 0) return {};
    if (opts.verify != VerifyMode::off) verify_hypotheses(h, opts);
    RecursionEngine engine{opts};
    return engine.betti(h);
}

TableInvariants reg_pdim(const Hypergraph& h, RegPdimStrategy strategy, int p,
                         const RecursionOptions& opts) {
    if (strategy == RegPdimStrategy::oracle)
        return table_invariants(taylor_betti(edge_ideal(h), p));
    if (h.edge_count() == 0) return {};
    if (opts.verify != VerifyMode::off) verify_hypotheses(h, opts);
    RecursionEngine engine{opts};
    return engine.invariants(h);
}

EkIdentityReport ek_identity_check(const Hypergraph& h, VertexSet e, int p) {
    if (!is_splitting_edge(h, e))
        fail(errc::not_a_splitting_edge,
             h.describe_edge(e) + " is not a splitting edge");
    BettiTable whole = taylor_betti(edge_ideal(h), p);
    BettiTable rest = taylor_betti(edge_ideal(h.remove_edge(e)), p);
    BettiTable cross = taylor_betti(intersect_principal(e, edge_ideal(h.remove_edge(e))), p);

    EkIdentityReport report;
    std::map<BettiTable::Key, std::int64_t> expected;
    expected[{0, e.size()}] += 1; // the principal part
    for (const auto& [key, value] : rest.entries()) expected[key] += value;
    for (const auto& [key, value] : cross.entries())
        expected[{key.first + 1, key.second}] += value;

    for (const auto& [key, value] : expected)
        if (whole.at(key.first, key.second) != value) {
            report.ok = false;
            std::ostringstream msg;
            msg << "beta_{" << key.first << "," << key.second << "}: whole table has "
                << whole.at(key.first, key.second) << ", split sum gives " << value;
            report.detail = msg.str();
            return report;
        }
    for (const auto& [key, value] : whole.entries())
        if (expected.find(key) == expected.end()) {
            report.ok = false;
            std::ostringstream msg;
            msg << "beta_{" << key.first << "," << key.second << "} = " << value
                << " missing from the split sum";
            report.detail = msg.str();
            return report;
        }
    return report;
}

RegBounds reg_bounds(const Hypergraph& h) {
    RegBounds bounds;
    if (h.edge_count() == 0) {
        bounds.upper = 1;
        return bounds;
    }
    int d = h.uniform_degree();
    ProperConnectionReport pc = properly_connected_report(h);
    if (!pc.ok)
        fail(errc::not_properly_connected,
             "regularity bounds assume a properly-connected hypergraph");
    bounds.c = max_pairwise_t_disjoint(h, d + 1).count;
    bounds.lower = (d - 1) * bounds.c + 1;
    if (d == 2) bounds.upper = matching_number(h) + 1;
    return bounds;
}

namespace {

// Number of independent sets of each size in a conflict graph.
std::vector<std::int64_t> independent_set_profile(const std::vector<std::uint64_t>& adj) {
    std::vector<std::int64_t> counts(adj.size() + 1, 0);
    counts[0] = 1;
    struct Walker {
        const std::vector<std::uint64_t>& adj;
        std::vector<std::int64_t>& counts;
        void walk(std::uint64_t allowed, int from, int size) {
            for (int v = from; v < static_cast<int>(adj.size()); ++v) {
                if (!(allowed & (1ull << v))) continue;
                counts[static_cast<std::size_t>(size + 1)]++;
                walk(allowed & ~adj[static_cast<std::size_t>(v)] & ~(1ull << v), v + 1,
                     size + 1);
            }
        }
    } walker{adj, counts};
    walker.walk(adj.empty() ? 0 : ~0ull >> (64 - adj.size()), 0, 0);
    return counts;
}

std::vector<std::uint64_t> far_conflicts(const Hypergraph& h, int threshold) {
    // Edges at distance <= threshold conflict.
    int s = h.edge_count();
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(s), 0);
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) {
            DistanceResult r = edge_distance(h, h.edge(i), h.edge(j));
            if (!r.distance.is_infinite() && r.distance.value() <= threshold) {
                adj[static_cast<std::size_t>(i)] |= 1ull << j;
                adj[static_cast<std::size_t>(j)] |= 1ull << i;
            }
        }
    return adj;
}

} // namespace

StrandCountReport strand_count_check(const Hypergraph& h, int p) {
    StrandCountReport report;
    if (h.edge_count() == 0) return report;
    int d = h.uniform_degree();
    if (!is_properly_connected(h))
        fail(errc::not_properly_connected,
             "strand counting assumes a properly-connected hypergraph");
    BettiTable table = taylor_betti(edge_ideal(h), p);
    std::vector<std::int64_t> profile = independent_set_profile(far_conflicts(h, d));
    for (int i = 1; i <= h.edge_count(); ++i) {
        std::int64_t expected = profile[static_cast<std::size_t>(i)];
        std::int64_t actual = table.at(i - 1, d * i);
        if (expected != actual) {
            report.ok = false;
            std::ostringstream msg;
            msg << "beta_{" << i - 1 << "," << d * i << "} = " << actual << " but "
                << expected << " pairwise far " << i << "-sets";
            report.detail = msg.str();
            return report;
        }
    }
    return report;
}

LinearityReport linearity_report(const Hypergraph& h, int p) {
    if (h.edge_count() == 0) fail(errc::no_edges, "linearity is about a nonzero ideal");
    int d = h.uniform_degree();
    if (!is_properly_connected(h))
        fail(errc::not_properly_connected,
             "the linearity equivalences assume a properly-connected hypergraph");
    BettiTable table = taylor_betti(edge_ideal(h), p);
    LinearityReport report;
    report.linear_first_syzygies = has_linear_first_syzygies(table, d);
    report.linear_resolution = has_linear_resolution(table, d);
    Distance diam = diameter(h);
    report.diameter_small = diam <= Distance::finite(d);
    report.triangulated = is_triangulated(h);
    if (report.linear_first_syzygies != report.diameter_small)
        fail(errc::property_violation,
             "linear first syzygies disagree with the diameter criterion");
    if (report.triangulated && report.linear_resolution != report.linear_first_syzygies)
        fail(errc::property_violation,
             "triangulated instance separates linear resolution from linear first syzygies");
    return report;
}

FrobergReport froberg_check(const Hypergraph& g, int p) {
    if (!g.is_graph()) fail(errc::not_a_graph, "this equivalence is about graphs");
    FrobergReport report;
    BettiTable table = taylor_betti(edge_ideal(g), p);
    report.linear_resolution = has_linear_resolution(table, 2);
    report.complement_chordal = g.n() < 2 || is_chordal(g.complement(2));
    report.ok = report.linear_resolution == report.complement_chordal;
    return report;
}

KonigReport konig_check(const Hypergraph& g, int p) {
    if (!g.is_graph()) fail(errc::not_a_graph, "cover-height chains are about graphs");
    KonigReport report;
    if (g.edge_count() == 0) {
        report.detail = "edgeless: nothing to check";
        return report;
    }
    std::vector<VertexSet> covers = minimal_vertex_covers(g);
    report.height = covers.front().size();
    report.unmixed = true;
    for (VertexSet c : covers) {
        report.height = std::min(report.height, c.size());
        if (c.size() != covers.front().size()) report.unmixed = false;
    }
    TableInvariants primal = table_invariants(taylor_betti(edge_ideal(g), p));
    TableInvariants dual = table_invariants(taylor_betti(alexander_dual(edge_ideal(g)), p));

    auto complain = [&](const std::string& what) {
        report.ok = false;
        if (!report.detail.empty()) report.detail += "; ";
        report.detail += what;
    };
    int ht = report.height;
    if (report.unmixed) {
        if (!(primal.reg <= ht + 1 && ht + 1 <= dual.reg + 1))
            complain("unmixed chain reg <= ht+1 <= reg(dual)+1 fails");
        if (!(dual.pdim <= ht && ht <= primal.pdim + 1))
            complain("unmixed chain pdim(dual) <= ht <= pdim+1 fails");
    } else {
        if (!(primal.reg <= ht + 1 && ht + 1 <= dual.reg))
            complain("chain reg <= ht+1 <= reg(dual) fails");
        if (!(dual.pdim <= ht && ht <= primal.pdim))
            complain("chain pdim(dual) <= ht <= pdim fails");
    }
    if (primal.reg != dual.pdim + 1) complain("reg(I) != pdim(dual) + 1");
    if (dual.reg != primal.pdim + 1) complain("reg(dual) != pdim(I) + 1");
    return report;
}

} // namespace hyperbetti
