#include "hyperbetti/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace hyperbetti {

namespace {

struct LabelTable {
    std::vector<std::string> order;
    std::unordered_map<std::string, int> index;
    bool fixed = false; // a vertices line / array pins the set

    int resolve(const std::string& label, const std::string& where) {
        auto it = index.find(label);
        if (it != index.end()) return it->second;
        if (fixed)
            fail(errc::parse_error,
                 where + ": label '" + label + "' not in the vertices list");
        int id = static_cast<int>(order.size());
        order.push_back(label);
        index.emplace(label, id);
        return id;
    }

    void fix(const std::vector<std::string>& labels, const std::string& where) {
        if (fixed) fail(errc::parse_error, where + ": repeated vertices list");
        if (!order.empty())
            fail(errc::parse_error, where + ": vertices list must come before edges");
        for (const std::string& label : labels) {
            if (index.count(label))
                fail(errc::parse_error, where + ": duplicate vertex '" + label + "'");
            index.emplace(label, static_cast<int>(order.size()));
            order.push_back(label);
        }
        fixed = true;
    }
};

VertexSet resolve_edge(LabelTable& table, const std::vector<std::string>& labels,
                       const std::string& where) {
    if (labels.empty()) fail(errc::parse_error, where + ": empty edge");
    VertexSet edge;
    for (const std::string& label : labels) {
        int v = table.resolve(label, where);
        if (v >= VertexSet::max_vertices)
            fail(errc::too_large, where + ": more than 64 vertices");
        if (edge.contains(v))
            fail(errc::parse_error, where + ": repeated vertex '" + label + "'");
        edge.add(v);
    }
    return edge;
}

std::vector<std::string> split_words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string word;
    while (in >> word) out.push_back(word);
    return out;
}

Hypergraph parse_text(const std::string& text) {
    LabelTable table;
    std::vector<VertexSet> edges;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string where = "line " + std::to_string(lineno);
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::vector<std::string> words = split_words(line);
        if (words.empty()) continue;
        if (words.front() == "vertices:") {
            table.fix({words.begin() + 1, words.end()}, where);
        } else if (words.front() == "edge:") {
            edges.push_back(resolve_edge(table, {words.begin() + 1, words.end()}, where));
        } else {
            fail(errc::parse_error,
                 where + ": expected 'vertices:' or 'edge:', got '" + words.front() + "'");
        }
    }
    return Hypergraph::build(static_cast<int>(table.order.size()), edges, table.order);
}

std::vector<std::string> string_array(const nlohmann::json& value, const std::string& where) {
    if (!value.is_array()) fail(errc::parse_error, where + ": expected an array");
    std::vector<std::string> out;
    for (const auto& item : value) {
        if (!item.is_string()) fail(errc::parse_error, where + ": expected strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

Hypergraph parse_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(errc::parse_error, e.what());
    }
    if (!doc.is_object()) fail(errc::parse_error, "top level: expected an object");
    LabelTable table;
    if (doc.contains("vertices")) table.fix(string_array(doc["vertices"], "vertices"), "vertices");
    std::vector<VertexSet> edges;
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) fail(errc::parse_error, "edges: expected an array");
        int i = 0;
        for (const auto& item : doc["edges"]) {
            std::string where = "edges[" + std::to_string(i++) + "]";
            edges.push_back(resolve_edge(table, string_array(item, where), where));
        }
    }
    return Hypergraph::build(static_cast<int>(table.order.size()), edges, table.order);
}

} // namespace

Hypergraph parse_hypergraph(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
        if (c == '{') return parse_json(text);
        break;
    }
    return parse_text(text);
}

Hypergraph parse_hypergraph_file(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
        buffer << in.rdbuf();
    }
    return parse_hypergraph(buffer.str());
}

std::string render_text(const Hypergraph& h) {
    std::ostringstream out;
    out << "vertices:";
    for (const std::string& label : h.labels()) out << ' ' << label;
    out << '\n';
    for (VertexSet e : h.edges()) {
        out << "edge:";
        for (int v : e) out << ' ' << h.label(v);
        out << '\n';
    }
    return out.str();
}

std::string render_json(const Hypergraph& h) {
    nlohmann::json doc;
    doc["vertices"] = h.labels();
    doc["edges"] = nlohmann::json::array();
    for (VertexSet e : h.edges()) {
        nlohmann::json edge = nlohmann::json::array();
        for (int v : e) edge.push_back(h.label(v));
        doc["edges"].push_back(edge);
    }
    return doc.dump(2) + "\n";
}

} // namespace hyperbetti
