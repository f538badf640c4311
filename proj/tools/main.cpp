#include <algorithm>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperbetti/betti.hpp"
#include "hyperbetti/check.hpp"
#include "hyperbetti/generators.hpp"
#include "hyperbetti/io.hpp"
#include "hyperbetti/metric.hpp"

namespace hb = hyperbetti;

namespace {

// 0 success, 1 usage, 2 invalid input, 3 property violation, 4 method
// inapplicable to this instance.
int exit_code_for(hb::errc code) {
    switch (code) {
        case hb::errc::property_violation:
        case hb::errc::internal_check_failed:
            return 3;
        case hb::errc::not_uniform:
        case hb::errc::not_properly_connected:
        case hb::errc::not_triangulated:
        case hb::errc::not_a_graph:
        case hb::errc::not_a_splitting_edge:
        case hb::errc::too_few_edges:
        case hb::errc::too_many_generators:
        case hb::errc::cap_exceeded:
        case hb::errc::no_edges:
            return 4;
        default:
            return 2;
    }
}

std::string grid_render(const hb::BettiTable& table, int degree) {
    hb::TableInvariants inv = hb::table_invariants(table);
    std::ostringstream out;
    if (table.empty()) {
        out << "zero ideal; reg=1, pdim=-1\n";
        return out.str();
    }
    int cols = inv.pdim;
    std::vector<std::int64_t> totals(static_cast<std::size_t>(cols + 1), 0);
    for (const auto& [key, value] : table.entries())
        totals[static_cast<std::size_t>(key.first)] += value;

    auto width_of = [](std::int64_t v) { return std::to_string(v).size(); };
    std::vector<std::size_t> width(static_cast<std::size_t>(cols + 1));
    for (int i = 0; i <= cols; ++i)
        width[static_cast<std::size_t>(i)] =
            std::max(width_of(totals[static_cast<std::size_t>(i)]), std::to_string(i).size());
    for (const auto& [key, value] : table.entries())
        width[static_cast<std::size_t>(key.first)] =
            std::max(width[static_cast<std::size_t>(key.first)], width_of(value));

    std::size_t label_width = std::max<std::size_t>(
        6, std::to_string(inv.reg).size() + 1); // fits "total:" and "<row>:"
    auto cell = [&](int i, const std::string& text) {
        out << "  " << std::string(width[static_cast<std::size_t>(i)] - text.size(), ' ')
            << text;
    };

    out << std::string(label_width, ' ');
    for (int i = 0; i <= cols; ++i) cell(i, std::to_string(i));
    out << '\n';
    out << std::string(label_width - 6, ' ') << "total:";
    for (int i = 0; i <= cols; ++i) cell(i, std::to_string(totals[static_cast<std::size_t>(i)]));
    out << '\n';
    for (int row = degree; row <= inv.reg; ++row) {
        std::string head = std::to_string(row) + ":";
        out << std::string(label_width - head.size(), ' ') << head;
        for (int i = 0; i <= cols; ++i) {
            std::int64_t v = table.at(i, row + i);
            cell(i, v == 0 ? "." : std::to_string(v));
        }
        out << '\n';
    }
    return out.str();
}

std::string csv_render(const hb::BettiTable& table) {
    std::ostringstream out;
    out << "i,j,value\n";
    for (const auto& [key, value] : table.entries())
        out << key.first << ',' << key.second << ',' << value << '\n';
    return out.str();
}

nlohmann::json table_json(const hb::BettiTable& table) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, value] : table.entries())
        entries.push_back({{"i", key.first}, {"j", key.second}, {"value", value}});
    return entries;
}

int cmd_betti(const std::string& file, std::string method, int p,
              const std::string& format, bool verify) {
    hb::Hypergraph h = hb::parse_hypergraph_file(file);
    if (method == "auto") method = hb::recursion_applies(h) ? "recursive" : "oracle";

    hb::BettiTable table;
    if (method == "recursive") {
        hb::RecursionOptions opts;
        opts.verify = verify ? hb::VerifyMode::full : hb::VerifyMode::root;
        table = hb::recursive_betti(h, opts);
    } else {
        table = hb::taylor_betti(hb::edge_ideal(h), p);
    }
    hb::TableInvariants inv = hb::table_invariants(table);
    std::optional<int> degree;
    if (h.uniformity().kind == hb::UniformityKind::uniform) degree = h.uniform_degree();

    if (format == "grid") {
        std::cout << grid_render(table, degree.value_or(0));
        if (!table.empty()) std::cout << "reg=" << inv.reg << ", pdim=" << inv.pdim << '\n';
    } else if (format == "csv") {
        std::cout << csv_render(table);
    } else {
        nlohmann::json doc;
        doc["n"] = h.n();
        doc["edge_count"] = h.edge_count();
        doc["degree"] = degree ? nlohmann::json(*degree) : nlohmann::json();
        doc["method"] = method;
        doc["char"] = method == "oracle" ? nlohmann::json(p) : nlohmann::json();
        doc["betti"] = table_json(table);
        doc["reg"] = inv.reg;
        doc["pdim"] = inv.pdim;
        doc["linear_resolution"] =
            degree ? nlohmann::json(hb::has_linear_resolution(table, *degree))
                   : nlohmann::json();
        std::cout << doc.dump(2) << '\n';
    }
    return 0;
}

int cmd_invariants(const std::string& file, int p) {
    hb::Hypergraph h = hb::parse_hypergraph_file(file);
    auto field = [](const std::string& name, const std::string& value) {
        std::cout << name << ": " << value << '\n';
    };
    auto guarded = [&](const std::string& name, auto&& compute) {
        try {
            field(name, compute());
        } catch (const hb::error& e) {
            field(name, std::string("unavailable (") + e.what() + ")");
        }
    };
    auto yesno = [](bool b) { return b ? std::string("yes") : std::string("no"); };

    field("n", std::to_string(h.n()));
    field("edges", std::to_string(h.edge_count()));
    hb::Uniformity u = h.uniformity();
    bool uniform = u.kind == hb::UniformityKind::uniform;
    field("d", u.kind == hb::UniformityKind::no_edges ? "n/a (no edges)"
               : uniform                              ? std::to_string(u.d)
                                                      : "non-uniform");

    bool pc = false;
    if (uniform) {
        pc = hb::is_properly_connected(h);
        field("properly-connected", yesno(pc));
        if (u.d == 2 || pc) {
            hb::TriangulatedReport tri = hb::is_triangulated_report(h);
            std::string method = u.d == 2        ? "chordality"
                                 : tri.exact_ran ? "exhaustive definition"
                                                 : "elimination order";
            field("triangulated", yesno(tri.triangulated) + " (" + method + ")");
        } else {
            field("triangulated", "n/a (not properly connected)");
        }
        guarded("diameter", [&] { return hb::diameter(h).to_string(); });
        guarded("c (max pairwise (d+1)-disjoint)", [&] {
            return std::to_string(hb::max_pairwise_t_disjoint(h, u.d + 1).count);
        });
    }
    guarded("matching number",
            [&] { return std::to_string(hb::matching_number(h)); });
    if (h.edge_count() > 0) {
        guarded("cover number (height)",
                [&] { return std::to_string(hb::height(hb::edge_ideal(h))); });
        guarded("unmixed", [&] { return yesno(hb::is_unmixed(h)); });
    }

    bool recursive = hb::recursion_applies(h);
    try {
        hb::TableInvariants inv =
            recursive ? hb::reg_pdim(h, hb::RegPdimStrategy::recursive)
                      : hb::reg_pdim(h, hb::RegPdimStrategy::oracle, p);
        field("reg", std::to_string(inv.reg) +
                         (recursive ? " (recursion)" : " (oracle)"));
        field("pdim", std::to_string(inv.pdim) +
                          (recursive ? " (recursion)" : " (oracle)"));
    } catch (const hb::error& e) {
        field("reg", std::string("unavailable (") + e.what() + ")");
        field("pdim", std::string("unavailable (") + e.what() + ")");
    }
    if (uniform)
        guarded("linear resolution", [&] {
            return yesno(hb::has_linear_resolution(
                hb::taylor_betti(hb::edge_ideal(h), p), u.d));
        });

    if (h.edge_count() >= 2) {
        std::string found;
        for (hb::VertexSet e : h.edges())
            if (auto w = hb::is_splitting_edge(h, e)) {
                if (!found.empty()) found += ", ";
                found += h.describe_edge(e) + " (z=" + h.label(w->z) + ")";
            }
        field("splitting edges", found.empty() ? "none" : found);
    }
    return 0;
}

int cmd_distance(const std::string& file, int a, int b) {
    hb::Hypergraph h = hb::parse_hypergraph_file(file);
    hb::VertexSet ea = h.edge(a);
    hb::VertexSet eb = h.edge(b);
    if (ea.size() < eb.size()) std::swap(ea, eb);
    hb::DistanceResult r = hb::edge_distance(h, ea, eb);
    std::cout << "distance(" << a << ", " << b << ") = " << r.distance.to_string() << '\n';
    if (r.chain) {
        std::cout << "chain:";
        for (std::size_t i = 0; i < r.chain->edges.size(); ++i) {
            if (i > 0) std::cout << " -" << h.label(r.chain->links[i - 1]) << "->";
            std::cout << ' ' << h.describe_edge(r.chain->edges[i]);
        }
        std::cout << '\n';
    }
    return 0;
}

int cmd_dual(const std::string& file) {
    hb::Hypergraph h = hb::parse_hypergraph_file(file);
    hb::MonomialIdeal dual = hb::alexander_dual(hb::edge_ideal(h));
    for (hb::Monomial m : dual.gens)
        std::cout << hb::monomial_to_string(m, h.labels()) << '\n';
    return 0;
}

int cmd_split(const std::string& file) {
    hb::Hypergraph h = hb::parse_hypergraph_file(file);
    if (h.edge_count() < 2) {
        std::cout << "no splitting edges (needs at least two edges)\n";
        return 0;
    }
    bool any = false;
    for (hb::VertexSet e : h.edges())
        if (auto w = hb::is_splitting_edge(h, e)) {
            std::cout << "splitting edge " << h.describe_edge(e) << " (z=" << h.label(w->z)
                      << ")\n";
            any = true;
        }
    if (!any) std::cout << "no splitting edges\n";
    return 0;
}

int cmd_check(const std::string& suite, hb::CheckOptions opts, bool seed_given) {
    if (!seed_given) {
        opts.seed = std::random_device{}();
        std::cout << "seed: " << opts.seed << '\n';
    }
    hb::CheckResult r = hb::run_check(suite, opts);
    std::cout << "suite " << suite << ": " << r.instances << " instances, " << r.checks
              << " checks, " << r.skipped << " skipped - " << (r.ok ? "PASS" : "FAIL")
              << '\n';
    if (r.ok) return 0;
    std::cout << "violation: " << r.detail << '\n';
    if (r.reproducer) std::cout << "reproducer:\n" << hb::render_text(*r.reproducer);
    return 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graded Betti numbers, regularity and projective dimension of "
                 "edge ideals of simple hypergraphs"};
    app.require_subcommand(1);

    std::string file = "-";
    std::string method = "auto";
    std::string format = "grid";
    int p = 2;
    bool verify = false;

    CLI::App* betti = app.add_subcommand("betti", "Print the graded Betti table");
    betti->add_option("file", file, "instance file, - for stdin");
    betti->add_option("--method", method, "recursive | oracle | auto")
        ->check(CLI::IsMember({"recursive", "oracle", "auto"}));
    betti->add_option("--char", p, "field characteristic for the oracle (prime)");
    betti->add_option("--format", format, "grid | csv | json")
        ->check(CLI::IsMember({"grid", "csv", "json"}));
    betti->add_flag("--verify", verify, "re-check recursion preconditions at every step");

    CLI::App* invariants = app.add_subcommand("invariants", "Print a full invariant report");
    invariants->add_option("file", file, "instance file, - for stdin");
    invariants->add_option("--char", p, "field characteristic for oracle-backed fields");

    int edge_a = 0;
    int edge_b = 0;
    CLI::App* distance =
        app.add_subcommand("distance", "Distance between two edges, with a chain certificate");
    distance->add_option("file", file, "instance file, - for stdin")->required();
    distance->add_option("a", edge_a, "first edge index")->required();
    distance->add_option("b", edge_b, "second edge index")->required();

    CLI::App* dual = app.add_subcommand("dual", "Print the Alexander dual's generators");
    dual->add_option("file", file, "instance file, - for stdin");

    CLI::App* split = app.add_subcommand("split", "List splitting edges with certificates");
    split->add_option("file", file, "instance file, - for stdin");

    hb::CheckOptions copts;
    std::string suite = "all";
    bool full_verify = false;
    CLI::App* check = app.add_subcommand("check", "Run a property-test suite");
    check->add_option("suite", suite, "suite name or 'all'")
        ->check(CLI::IsMember(hb::check_suites()));
    check->add_option("--n", copts.n, "vertex count for generated instances");
    check->add_option("--trials", copts.trials, "number of random instances");
    CLI::Option* seed_opt = check->add_option("--seed", copts.seed, "random seed");
    check->add_option("--char", copts.p, "field characteristic (prime)");
    check->add_option("--kind", copts.kind, "graph | chordal | v-tree | pc-uniform")
        ->check(CLI::IsMember({"graph", "chordal", "v-tree", "pc-uniform"}));
    check->add_flag("--exhaustive", copts.exhaustive,
                    "all labeled graphs on n vertices instead of random ones");
    check->add_flag("--verify", full_verify, "full per-step precondition re-checking");
    check->add_flag("--self-test-mutant", copts.mutate_oracle,
                    "corrupt one oracle entry to prove violations are caught");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (betti->parsed()) return cmd_betti(file, method, p, format, verify);
        if (invariants->parsed()) return cmd_invariants(file, p);
        if (distance->parsed()) return cmd_distance(file, edge_a, edge_b);
        if (dual->parsed()) return cmd_dual(file);
        if (split->parsed()) return cmd_split(file);
        if (check->parsed()) {
            if (full_verify) copts.verify = hb::VerifyMode::full;
            return cmd_check(suite, copts, seed_opt->count() > 0);
        }
    } catch (const hb::error& e) {
        std::cerr << "error [" << hb::errc_name(e.code()) << "]: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
    return 1;
}
