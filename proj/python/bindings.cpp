#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "hyperbetti/betti.hpp"
#include "hyperbetti/check.hpp"
#include "hyperbetti/io.hpp"
#include "hyperbetti/metric.hpp"

namespace py = pybind11;
using namespace hyperbetti;

namespace {

std::vector<std::string> edge_labels(const Hypergraph& h, VertexSet e) {
    std::vector<std::string> out;
    for (int v : e) out.push_back(h.labels()[static_cast<std::size_t>(v)]);
    return out;
}

std::optional<int> degree_of(const Hypergraph& h) {
    if (h.uniformity().kind != UniformityKind::uniform) return std::nullopt;
    return h.uniform_degree();
}

// Same document shape as the command line's JSON output.
py::dict betti_document(const Hypergraph& h, std::string method, int p, bool verify) {
    if (method != "auto" && method != "recursive" && method != "oracle")
        fail(errc::bad_argument, "method must be auto, recursive or oracle");
    if (method == "auto") method = recursion_applies(h) ? "recursive" : "oracle";

    BettiTable table;
    if (method == "recursive") {
        RecursionOptions opts;
        opts.verify = verify ? VerifyMode::full : VerifyMode::root;
        table = recursive_betti(h, opts);
    } else {
        table = taylor_betti(edge_ideal(h), p);
    }
    TableInvariants inv = table_invariants(table);

    py::list entries;
    for (const auto& [key, value] : table.entries()) {
        py::dict cell;
        cell["i"] = key.first;
        cell["j"] = key.second;
        cell["value"] = value;
        entries.append(cell);
    }
    py::dict doc;
    doc["n"] = h.n();
    doc["edge_count"] = h.edge_count();
    doc["degree"] = degree_of(h);
    doc["method"] = method;
    doc["char"] = method == "oracle" ? py::object(py::int_(p)) : py::none();
    doc["betti"] = entries;
    doc["reg"] = inv.reg;
    doc["pdim"] = inv.pdim;
    std::optional<int> d = degree_of(h);
    doc["linear_resolution"] =
        d ? py::object(py::bool_(has_linear_resolution(table, *d))) : py::none();
    return doc;
}

py::dict invariants_document(const Hypergraph& h, int p) {
    py::dict doc;
    doc["n"] = h.n();
    doc["edge_count"] = h.edge_count();
    doc["degree"] = degree_of(h);
    bool uniform = h.uniformity().kind == UniformityKind::uniform;
    bool pc = uniform && is_properly_connected(h);
    doc["properly_connected"] = uniform ? py::object(py::bool_(pc)) : py::none();
    doc["triangulated"] =
        pc ? py::object(py::bool_(is_triangulated(h))) : py::none();
    Distance diam = diameter(h);
    doc["diameter"] =
        diam.is_infinite() ? py::none() : py::object(py::int_(diam.value()));
    doc["matching_number"] = matching_number(h);
    MonomialIdeal ideal = edge_ideal(h);
    doc["height"] = h.edge_count() > 0 ? py::object(py::int_(height(ideal)))
                                       : py::none();
    doc["unmixed"] =
        h.edge_count() > 0 ? py::object(py::bool_(is_unmixed(h))) : py::none();
    TableInvariants inv = recursion_applies(h)
                              ? reg_pdim(h, RegPdimStrategy::recursive)
                              : reg_pdim(h, RegPdimStrategy::oracle, p);
    doc["reg"] = inv.reg;
    doc["pdim"] = inv.pdim;
    return doc;
}

py::dict distance_document(const Hypergraph& h, int a, int b) {
    VertexSet ea = h.edge(a);
    VertexSet eb = h.edge(b);
    if (ea.size() < eb.size()) std::swap(ea, eb);
    DistanceResult r = edge_distance(h, ea, eb);
    py::dict doc;
    doc["distance"] = r.distance.is_infinite()
                          ? py::none()
                          : py::object(py::int_(r.distance.value()));
    if (r.chain) {
        py::list chain;
        for (const VertexSet& e : r.chain->edges) chain.append(edge_labels(h, e));
        py::list links;
        for (int v : r.chain->links)
            links.append(h.labels()[static_cast<std::size_t>(v)]);
        doc["chain"] = chain;
        doc["links"] = links;
    } else {
        doc["chain"] = py::none();
        doc["links"] = py::none();
    }
    return doc;
}

py::list dual_generators(const Hypergraph& h) {
    py::list out;
    for (const Monomial& g : alexander_dual(edge_ideal(h)).gens)
        out.append(edge_labels(h, g));
    return out;
}

py::list splitting_edges(const Hypergraph& h) {
    py::list out;
    if (h.edge_count() < 2) return out;
    for (const VertexSet& e : h.edges()) {
        auto w = is_splitting_edge(h, e);
        if (!w) continue;
        py::dict item;
        item["edge"] = edge_labels(h, e);
        item["z"] = h.labels()[static_cast<std::size_t>(w->z)];
        out.append(item);
    }
    return out;
}

py::dict check_document(const std::string& suite, int n, int trials,
                        std::uint64_t seed, int p, const std::string& kind) {
    CheckOptions opts;
    opts.n = n;
    opts.trials = trials;
    opts.seed = seed;
    opts.p = p;
    opts.kind = kind;
    CheckResult r = run_check(suite, opts);
    py::dict doc;
    doc["ok"] = r.ok;
    doc["instances"] = r.instances;
    doc["checks"] = r.checks;
    doc["skipped"] = r.skipped;
    doc["detail"] = r.detail;
    doc["reproducer"] =
        r.reproducer ? py::object(py::str(render_text(*r.reproducer))) : py::none();
    return doc;
}

} // namespace

PYBIND11_MODULE(_hyperbetti, m) {
    m.doc() = "Exact Betti tables, regularity and projective dimension of "
              "edge ideals of simple hypergraphs";

    py::register_exception<error>(m, "Error");

    py::class_<Hypergraph>(m, "Hypergraph")
        .def_property_readonly("n", &Hypergraph::n)
        .def_property_readonly("edge_count", &Hypergraph::edge_count)
        .def_property_readonly("labels", &Hypergraph::labels)
        .def_property_readonly("degree",
                               [](const Hypergraph& h) { return degree_of(h); })
        .def("edges",
             [](const Hypergraph& h) {
                 std::vector<std::vector<std::string>> out;
                 for (const VertexSet& e : h.edges()) out.push_back(edge_labels(h, e));
                 return out;
             })
        .def("render_text", &render_text)
        .def("render_json", &render_json)
        .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; })
        .def("__repr__", [](const Hypergraph& h) {
            return "Hypergraph(n=" + std::to_string(h.n()) +
                   ", edges=" + std::to_string(h.edge_count()) + ")";
        });

    m.def("parse", &parse_hypergraph, py::arg("text"),
          "Parse the text or JSON instance format");
    m.def("betti", &betti_document, py::arg("hypergraph"),
          py::arg("method") = "auto", py::arg("p") = 2, py::arg("verify") = false,
          "Graded Betti table with regularity and projective dimension");
    m.def("invariants", &invariants_document, py::arg("hypergraph"),
          py::arg("p") = 2, "Structural and homological invariant summary");
    m.def("distance", &distance_document, py::arg("hypergraph"), py::arg("a"),
          py::arg("b"), "Edge distance with a shortest proper chain");
    m.def("dual", &dual_generators, py::arg("hypergraph"),
          "Generators of the Alexander dual (minimal vertex covers)");
    m.def("splitting_edges", &splitting_edges, py::arg("hypergraph"),
          "Splitting edges with their certifying vertices");
    m.def("check", &check_document, py::arg("suite"), py::arg("n") = 8,
          py::arg("trials") = 50, py::arg("seed") = 1, py::arg("p") = 2,
          py::arg("kind") = "graph", "Run a randomized property suite");
}
