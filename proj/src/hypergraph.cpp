#include "hyperbetti/hypergraph.hpp"

#include <algorithm>
#include <sstream>

namespace hyperbetti {

const char* errc_name(errc code) {
    switch (code) {
        case errc::loop_edge: return "loop_edge";
        case errc::contained_edge: return "contained_edge";
        case errc::duplicate_edge: return "duplicate_edge";
        case errc::vertex_out_of_range: return "vertex_out_of_range";
        case errc::bad_label: return "bad_label";
        case errc::no_such_edge: return "no_such_edge";
        case errc::not_uniform: return "not_uniform";
        case errc::not_properly_connected: return "not_properly_connected";
        case errc::not_triangulated: return "not_triangulated";
        case errc::not_a_graph: return "not_a_graph";
        case errc::not_a_splitting_edge: return "not_a_splitting_edge";
        case errc::too_few_edges: return "too_few_edges";
        case errc::no_edges: return "no_edges";
        case errc::too_many_generators: return "too_many_generators";
        case errc::too_large: return "too_large";
        case errc::bad_field_char: return "bad_field_char";
        case errc::cap_exceeded: return "cap_exceeded";
        case errc::parse_error: return "parse_error";
        case errc::bad_argument: return "bad_argument";
        case errc::property_violation: return "property_violation";
        case errc::internal_check_failed: return "internal_check_failed";
    }
    return "unknown";
}

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
    return labels;
}

Hypergraph Hypergraph::build(int n, std::vector<VertexSet> edges,
                             std::vector<std::string> labels) {
    if (n < 0 || n > VertexSet::max_vertices)
        fail(errc::too_large, "vertex count " + std::to_string(n) +
                                  " outside supported range 0.." +
                                  std::to_string(VertexSet::max_vertices));

    Hypergraph h;
    h.n_ = n;
    VertexSet ground = VertexSet::full(n);
    for (VertexSet e : edges) {
        if (e.size() < 2)
            fail(errc::loop_edge, "edge with fewer than two vertices");
        if (!ground.contains(e))
            fail(errc::vertex_out_of_range,
                 "edge uses a vertex outside 0.." + std::to_string(n - 1));
    }
    std::sort(edges.begin(), edges.end(), canonical_less);
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1])
            fail(errc::duplicate_edge, "repeated edge");
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = 0; j < edges.size(); ++j)
            if (i != j && edges[j].contains(edges[i])) {
                std::ostringstream msg;
                msg << "edge #" << i << " is contained in edge #" << j;
                fail(errc::contained_edge, msg.str());
            }

    if (labels.empty()) {
        labels = default_labels(n);
    } else {
        if (static_cast<int>(labels.size()) != n)
            fail(errc::bad_label, "expected " + std::to_string(n) + " labels, got " +
                                      std::to_string(labels.size()));
        std::unordered_set<std::string> seen;
        for (const std::string& l : labels) {
            if (l.empty() || l.find_first_of(" \t\r\n#:") != std::string::npos)
                fail(errc::bad_label, "label '" + l + "' is empty or contains reserved characters");
            if (!seen.insert(l).second)
                fail(errc::bad_label, "label '" + l + "' appears twice");
        }
    }

    h.edges_ = std::move(edges);
    h.labels_ = std::move(labels);
    h.edge_set_.reserve(h.edges_.size() * 2);
    for (VertexSet e : h.edges_) h.edge_set_.insert(e);
    return h;
}

const VertexSet& Hypergraph::edge(int index) const {
    if (index < 0 || index >= edge_count())
        fail(errc::no_such_edge, "edge index " + std::to_string(index) +
                                     " out of range (have " +
                                     std::to_string(edge_count()) + " edges)");
    return edges_[static_cast<std::size_t>(index)];
}

const std::string& Hypergraph::label(int v) const {
    if (v < 0 || v >= n_)
        fail(errc::vertex_out_of_range, "vertex " + std::to_string(v) + " out of range");
    return labels_[static_cast<std::size_t>(v)];
}

std::optional<int> Hypergraph::edge_index(VertexSet e) const {
    if (!edge_set_.count(e)) return std::nullopt;
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e, canonical_less);
    return static_cast<int>(it - edges_.begin());
}

Uniformity Hypergraph::uniformity() const {
    if (edges_.empty()) return {UniformityKind::no_edges, 0};
    int d = edges_.front().size();
    for (VertexSet e : edges_)
        if (e.size() != d) return {UniformityKind::non_uniform, 0};
    return {UniformityKind::uniform, d};
}

int Hypergraph::uniform_degree() const {
    Uniformity u = uniformity();
    if (u.kind == UniformityKind::no_edges)
        fail(errc::no_edges, "hypergraph has no edges");
    if (u.kind == UniformityKind::non_uniform)
        fail(errc::not_uniform, "edges have mixed cardinalities");
    return u.d;
}

bool Hypergraph::is_graph() const {
    Uniformity u = uniformity();
    return u.kind == UniformityKind::no_edges ||
           (u.kind == UniformityKind::uniform && u.d == 2);
}

VertexSet Hypergraph::support() const {
    VertexSet s;
    for (VertexSet e : edges_) s |= e;
    return s;
}

VertexSet Hypergraph::neighborhood(int x) const {
    if (x < 0 || x >= n_)
        fail(errc::vertex_out_of_range, "vertex " + std::to_string(x) + " out of range");
    VertexSet nb;
    for (VertexSet e : edges_)
        if (e.contains(x)) nb |= e;
    nb.remove(x);
    return nb;
}

Hypergraph Hypergraph::remove_edge(VertexSet e) const {
    if (!has_edge(e))
        fail(errc::no_such_edge, "cannot remove " + describe_edge(e) + ": not an edge");
    std::vector<VertexSet> rest;
    rest.reserve(edges_.size() - 1);
    for (VertexSet f : edges_)
        if (f != e) rest.push_back(f);
    return build(n_, std::move(rest), labels_);
}

Hypergraph Hypergraph::remove_vertex(int x) const {
    if (x < 0 || x >= n_)
        fail(errc::vertex_out_of_range, "vertex " + std::to_string(x) + " out of range");
    std::vector<VertexSet> rest;
    for (VertexSet f : edges_)
        if (!f.contains(x)) rest.push_back(f);
    return build(n_, std::move(rest), labels_);
}

Hypergraph Hypergraph::induced(VertexSet y) const {
    std::vector<VertexSet> kept;
    for (VertexSet f : edges_)
        if (y.contains(f)) kept.push_back(f);
    return build(n_, std::move(kept), labels_);
}

Hypergraph Hypergraph::complement(int d) const {
    if (d < 2 || d > n_)
        fail(errc::bad_argument, "complement degree must lie in 2..n");
    Uniformity u = uniformity();
    if (u.kind == UniformityKind::non_uniform)
        fail(errc::not_uniform, "complement requires a d-uniform or edgeless hypergraph");
    if (u.kind == UniformityKind::uniform && u.d != d)
        fail(errc::not_uniform, "complement degree disagrees with edge cardinality");

    std::vector<VertexSet> out;
    std::uint64_t limit = 1ull << n_;
    for (VertexSet cand = VertexSet::full(d); cand.bits() < limit;
         cand = VertexSet::next_same_size(cand))
        if (!has_edge(cand)) out.push_back(cand);
    return build(n_, std::move(out), labels_);
}

bool Hypergraph::is_d_complete(VertexSet y, int d) const {
    if (d < 2) fail(errc::bad_argument, "completeness degree must be at least 2");
    if (!VertexSet::full(n_).contains(y))
        fail(errc::vertex_out_of_range, "subset uses a vertex outside the ground set");
    if (y.size() < d) return true;
    // Walk the d-subsets of y via its element list.
    std::vector<int> vs = y.elements();
    int k = static_cast<int>(vs.size());
    std::vector<int> idx(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        VertexSet cand;
        for (int i : idx) cand.add(vs[static_cast<std::size_t>(i)]);
        if (!has_edge(cand)) return false;
        int pos = d - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == k - d + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < d; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
    return true;
}

Hypergraph Hypergraph::compacted() const {
    VertexSet sup = support();
    std::vector<int> map(static_cast<std::size_t>(n_), -1);
    std::vector<std::string> labels;
    int next = 0;
    for (int v : sup) {
        map[static_cast<std::size_t>(v)] = next++;
        labels.push_back(labels_[static_cast<std::size_t>(v)]);
    }
    std::vector<VertexSet> edges;
    edges.reserve(edges_.size());
    for (VertexSet e : edges_) {
        VertexSet m;
        for (int v : e) m.add(map[static_cast<std::size_t>(v)]);
        edges.push_back(m);
    }
    return build(next, std::move(edges), std::move(labels));
}

std::string Hypergraph::describe_edge(VertexSet e) const {
    std::string out = "{";
    bool first = true;
    for (int v : e) {
        if (!first) out += ",";
        first = false;
        out += (v < n_) ? labels_[static_cast<std::size_t>(v)] : std::to_string(v);
    }
    out += "}";
    return out;
}

} // namespace hyperbetti
