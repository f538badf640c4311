#include "hyperbetti/check.hpp"

#include <algorithm>
#include <functional>

#include "hyperbetti/generators.hpp"
#include "hyperbetti/metric.hpp"

namespace hyperbetti {

namespace {

// True when the instance still violates the property under test.  Unrelated
// breakage (a shrunk candidate drifting outside the suite's hypotheses) must
// come back false, so predicates catch their own expected errors and shrink
// adds a catch-all net.
using Violates = std::function<bool(const Hypergraph&)>;

bool violates_quietly(const Violates& violates, const Hypergraph& h) {
    try {
        return violates(h);
    } catch (...) {
        return false;
    }
}

Hypergraph shrink(Hypergraph h, const Violates& violates) {
    bool progress = true;
    while (progress) {
        progress = false;
        for (int i = 0; i < h.edge_count(); ++i) {
            Hypergraph candidate = h.remove_edge(h.edge(i));
            if (violates_quietly(violates, candidate)) {
                h = candidate;
                progress = true;
                break;
            }
        }
    }
    Hypergraph compact = h.compacted();
    if (violates_quietly(violates, compact)) return compact;
    return h;
}

void record_failure(CheckResult& r, const Hypergraph& h, const Violates& violates,
                    std::string detail) {
    r.ok = false;
    r.detail = std::move(detail);
    r.reproducer = shrink(h, violates);
}

std::vector<Hypergraph> make_instances(const CheckOptions& o) {
    std::vector<Hypergraph> out;
    if (o.exhaustive) {
        for_each_graph(o.n, [&](const Hypergraph& g) { out.push_back(g); });
        return out;
    }
    Rng rng(o.seed);
    int pair_count = o.n * (o.n - 1) / 2;
    for (int t = 0; t < o.trials; ++t) {
        if (o.kind == "graph") {
            out.push_back(random_graph(rng, o.n, rng.below(std::min(pair_count, 15) + 1)));
        } else if (o.kind == "chordal") {
            out.push_back(random_chordal(rng, o.n));
        } else if (o.kind == "v-tree") {
            out.push_back(random_v_tree(rng, 3, 1 + rng.below(std::max(1, o.n - 2))));
        } else if (o.kind == "pc-uniform") {
            if (o.n < 4)
                fail(errc::bad_argument, "pc-uniform instances need n >= 4");
            PcSample sample = random_pc_uniform(rng, o.n, 3, 2 + rng.below(5), 2000);
            if (sample.hypergraph) out.push_back(*sample.hypergraph);
        } else {
            fail(errc::bad_argument, "unknown kind '" + o.kind + "'");
        }
    }
    return out;
}

BettiTable oracle_table(const Hypergraph& h, const CheckOptions& o) {
    BettiTable t = taylor_betti(edge_ideal(h), o.p);
    if (o.mutate_oracle && !t.entries().empty()) {
        auto key = t.entries().begin()->first;
        t.add(key.first, key.second, 1);
    }
    return t;
}

// Hypergraphs outside the hypotheses of a hypothesis-bound suite are
// skipped, not failed.
bool in_pc_scope(const Hypergraph& h) {
    if (h.edge_count() == 0) return true;
    if (h.uniform_degree() == 2) return true; // graphs are always properly connected
    return is_properly_connected(h);
}

CheckResult suite_recursion(const CheckOptions& o) {
    CheckResult r;
    Violates violates = [&](const Hypergraph& h) {
        if (!in_pc_scope(h) || !is_triangulated(h)) return false;
        return recursive_betti(h, {o.verify}) != oracle_table(h, o);
    };
    for (const Hypergraph& h : make_instances(o)) {
        if (!in_pc_scope(h) || !is_triangulated(h)) {
            ++r.skipped;
            continue;
        }
        ++r.instances;
        ++r.checks;
        if (violates(h)) {
            record_failure(r, h, violates, "recursion table differs from the homology oracle");
            return r;
        }
    }
    return r;
}

CheckResult suite_ek_identity(const CheckOptions& o) {
    CheckResult r;
    auto bad_edge = [&](const Hypergraph& h, VertexSet e) {
        std::optional<SplitWitness> general = is_splitting_edge(h, e);
        if (h.uniformity().kind == UniformityKind::uniform && in_pc_scope(h)) {
            std::optional<SplitWitness> swap = is_splitting_edge_pc(h, e);
            bool mismatch = general.has_value() != swap.has_value() ||
                            (general && general->z != swap->z);
            if (mismatch) return true;
        }
        return general && !ek_identity_check(h, e, o.p).ok;
    };
    Violates violates = [&](const Hypergraph& h) {
        if (h.edge_count() < 2) return false;
        for (VertexSet e : h.edges())
            if (bad_edge(h, e)) return true;
        return false;
    };
    for (const Hypergraph& h : make_instances(o)) {
        if (h.edge_count() < 2) {
            ++r.skipped;
            continue;
        }
        ++r.instances;
        for (VertexSet e : h.edges()) {
            ++r.checks;
            if (bad_edge(h, e)) {
                record_failure(r, h, violates,
                               "splitting-edge criteria disagree or the EK identity fails on " +
                                   h.describe_edge(e));
                return r;
            }
        }
    }
    return r;
}

CheckResult suite_strand_count(const CheckOptions& o) {
    CheckResult r;
    Violates violates = [&](const Hypergraph& h) {
        return in_pc_scope(h) && !strand_count_check(h, o.p).ok;
    };
    for (const Hypergraph& h : make_instances(o)) {
        if (!in_pc_scope(h)) {
            ++r.skipped;
            continue;
        }
        ++r.instances;
        ++r.checks;
        StrandCountReport report = strand_count_check(h, o.p);
        if (!report.ok) {
            record_failure(r, h, violates, "strand count mismatch: " + report.detail);
            return r;
        }
    }
    return r;
}

CheckResult suite_reg_bounds(const CheckOptions& o) {
    CheckResult r;
    auto broken = [&](const Hypergraph& h) -> std::string {
        RegBounds b = reg_bounds(h);
        TableInvariants inv = table_invariants(taylor_betti(edge_ideal(h), o.p));
        if (inv.reg < b.lower) return "reg below the (d-1)c+1 lower bound";
        if (b.upper && inv.reg > *b.upper) return "reg above the matching upper bound";
        if (is_triangulated(h) && inv.reg != b.lower)
            return "triangulated instance misses reg = (d-1)c+1";
        return {};
    };
    Violates violates = [&](const Hypergraph& h) {
        return in_pc_scope(h) && !broken(h).empty();
    };
    for (const Hypergraph& h : make_instances(o)) {
        if (!in_pc_scope(h)) {
            ++r.skipped;
            continue;
        }
        ++r.instances;
        ++r.checks;
        std::string what = broken(h);
        if (!what.empty()) {
            record_failure(r, h, violates, what);
            return r;
        }
    }
    return r;
}

CheckResult suite_matching_bound(const CheckOptions& o) {
    CheckResult r;
    Violates violates = [&](const Hypergraph& h) {
        if (!h.is_graph()) return false;
        TableInvariants inv = table_invariants(taylor_betti(edge_ideal(h), o.p));
        return inv.reg - 1 > matching_number(h);
    };
    for (const Hypergraph& h : make_instances(o)) {
        if (!h.is_graph()) {
            ++r.skipped;
            continue;
        }
        ++r.instances;
        ++r.checks;
        if (violates(h)) {
            record_failure(r, h, violates, "reg(I) - 1 exceeds the matching number");
            return r;
        }
    }
    return r;
}

CheckResult suite_froberg(const CheckOptions& o) {
    CheckResult r;
    Violates violates = [&](const Hypergraph& h) {
        return h.is_graph() && !froberg_check(h, o.p).ok;
    };
    for (const Hypergraph& h : make_instances(o)) {
        if (!h.is_graph()) {
            ++r.skipped;
            continue;
        }
        ++r.instances;
        ++r.checks;
        FrobergReport report = froberg_check(h, o.p);
        if (!report.ok) {
            record_failure(r, h, violates,
                           std::string("linear resolution ") +
                               (report.linear_resolution ? "holds" : "fails") +
                               " but complement chordality " +
                               (report.complement_chordal ? "holds" : "fails"));
            return r;
        }
    }
    return r;
}

CheckResult suite_konig(const CheckOptions& o) {
    CheckResult r;
    Violates violates = [&](const Hypergraph& h) {
        return h.is_graph() && !konig_check(h, o.p).ok;
    };
    for (const Hypergraph& h : make_instances(o)) {
        if (!h.is_graph()) {
            ++r.skipped;
            continue;
        }
        ++r.instances;
        ++r.checks;
        KonigReport report = konig_check(h, o.p);
        if (!report.ok) {
            record_failure(r, h, violates, report.detail);
            return r;
        }
    }
    return r;
}

CheckResult suite_char_independence(const CheckOptions& o) {
    CheckResult r;
    int q = o.p == 32003 ? 2 : 32003;
    Violates violates = [&](const Hypergraph& h) {
        return !char_compare(edge_ideal(h), o.p, q).equal;
    };
    for (const Hypergraph& h : make_instances(o)) {
        ++r.instances;
        ++r.checks;
        CharCompareResult cmp = char_compare(edge_ideal(h), o.p, q);
        if (!cmp.equal) {
            record_failure(r, h, violates,
                           "Betti tables differ between characteristics " +
                               std::to_string(o.p) + " and " + std::to_string(q));
            return r;
        }
    }
    return r;
}

CheckResult suite_linearity(const CheckOptions& o) {
    CheckResult r;
    Violates violates = [&](const Hypergraph& h) {
        if (h.edge_count() == 0 || !in_pc_scope(h)) return false;
        try {
            linearity_report(h, o.p);
            return false;
        } catch (const error& e) {
            if (e.code() == errc::property_violation) return true;
            throw;
        }
    };
    for (const Hypergraph& h : make_instances(o)) {
        if (h.edge_count() == 0 || !in_pc_scope(h)) {
            ++r.skipped;
            continue;
        }
        ++r.instances;
        ++r.checks;
        try {
            linearity_report(h, o.p);
        } catch (const error& e) {
            if (e.code() != errc::property_violation) throw;
            record_failure(r, h, violates, e.what());
            return r;
        }
    }
    return r;
}

CheckResult suite_duality(const CheckOptions& o) {
    CheckResult r;
    auto broken = [&](const Hypergraph& h) -> std::string {
        MonomialIdeal ideal = edge_ideal(h);
        MonomialIdeal dual = alexander_dual(ideal);
        for (Monomial c : dual.gens) {
            for (VertexSet e : h.edges())
                if (!e.intersects(c))
                    return "dual generator misses the edge " + h.describe_edge(e);
            for (int v : c) {
                bool has_private = false;
                for (VertexSet e : h.edges())
                    if ((e & c) == VertexSet{v}) has_private = true;
                if (!has_private)
                    return "dual generator is not a minimal transversal";
            }
        }
        if (alexander_dual(dual) != ideal) return "double dual differs from the ideal";
        if (height(ideal) != dual.gens.front().size())
            return "height differs from the least dual generator degree";
        return {};
    };
    Violates violates = [&](const Hypergraph& h) {
        return h.edge_count() > 0 && !broken(h).empty();
    };
    for (const Hypergraph& h : make_instances(o)) {
        if (h.edge_count() == 0) {
            ++r.skipped;
            continue;
        }
        ++r.instances;
        ++r.checks;
        std::string what = broken(h);
        if (!what.empty()) {
            record_failure(r, h, violates, what);
            return r;
        }
    }
    return r;
}

} // namespace

const std::vector<std::string>& check_suites() {
    static const std::vector<std::string> names = {
        "recursion-vs-oracle", "ek-identity",       "strand-count",
        "reg-bounds",          "matching-bound",    "froberg",
        "konig",               "char-independence", "linearity-iff",
        "duality",             "all"};
    return names;
}

CheckResult run_check(const std::string& suite, const CheckOptions& opts) {
    if (suite == "recursion-vs-oracle") return suite_recursion(opts);
    if (suite == "ek-identity") return suite_ek_identity(opts);
    if (suite == "strand-count") return suite_strand_count(opts);
    if (suite == "reg-bounds") return suite_reg_bounds(opts);
    if (suite == "matching-bound") return suite_matching_bound(opts);
    if (suite == "froberg") return suite_froberg(opts);
    if (suite == "konig") return suite_konig(opts);
    if (suite == "char-independence") return suite_char_independence(opts);
    if (suite == "linearity-iff") return suite_linearity(opts);
    if (suite == "duality") return suite_duality(opts);
    if (suite == "all") {
        CheckResult total;
        for (const std::string& name : check_suites()) {
            if (name == "all") continue;
            CheckResult part = run_check(name, opts);
            total.instances += part.instances;
            total.checks += part.checks;
            total.skipped += part.skipped;
            if (!part.ok) {
                total.ok = false;
                total.detail = name + ": " + part.detail;
                total.reproducer = part.reproducer;
                return total;
            }
        }
        return total;
    }
    fail(errc::bad_argument, "unknown suite '" + suite + "'");
}

} // namespace hyperbetti
