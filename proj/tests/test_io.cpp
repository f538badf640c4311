#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <optional>

#include "hyperbetti/generators.hpp"
#include "hyperbetti/io.hpp"

using namespace hyperbetti;

namespace {

std::optional<errc> code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const error& e) {
        return e.code();
    }
    return std::nullopt;
}

} // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("text parsing registers labels in first-appearance order") {
    Hypergraph h = parse_hypergraph("edge: b a\nedge: a c\n");
    CHECK(h.n() == 3);
    CHECK(h.labels() == std::vector<std::string>{"b", "a", "c"});
    // b=0, a=1, c=2; canonical order sorts {0,1} before {1,2}.
    CHECK(h.edges() == std::vector<VertexSet>{VertexSet{0, 1}, VertexSet{1, 2}});
}

TEST_CASE("a vertices line fixes the order and the universe") {
    Hypergraph h = parse_hypergraph("vertices: x y z w\nedge: z x\n");
    CHECK(h.n() == 4);
    CHECK(h.labels() == std::vector<std::string>{"x", "y", "z", "w"});
    CHECK(h.edges() == std::vector<VertexSet>{VertexSet{0, 2}});

    // Unknown labels are rejected once the universe is fixed.
    CHECK(code_of([] { parse_hypergraph("vertices: x y\nedge: x q\n"); }) ==
          errc::parse_error);
    // The vertices line cannot come after an edge.
    CHECK(code_of([] { parse_hypergraph("edge: a b\nvertices: a b\n"); }) ==
          errc::parse_error);
    // Repeated labels in the vertices line are rejected.
    CHECK(code_of([] { parse_hypergraph("vertices: a b a\n"); }) ==
          errc::parse_error);
}

TEST_CASE("comments and blank lines are ignored") {
    Hypergraph h = parse_hypergraph(
        "# a path\n"
        "\n"
        "vertices: a b c  # inline note\n"
        "edge: a b\n"
        "   \n"
        "edge: b c # tail\n");
    CHECK(h.n() == 3);
    CHECK(h.edge_count() == 2);
}

TEST_CASE("text errors carry the offending line") {
    auto message_of = [](const std::string& text) -> std::string {
        try {
            parse_hypergraph(text);
        } catch (const error& e) {
            return e.what();
        }
        return "";
    };
    CHECK(message_of("edge: a b\nedgy: c d\n").find("line 2") != std::string::npos);
    CHECK(message_of("edge: a a\n").find("line 1") != std::string::npos);
    CHECK(message_of("edge:\n").find("line 1") != std::string::npos);
}

TEST_CASE("simplicity checks still apply after parsing") {
    CHECK(code_of([] { parse_hypergraph("edge: a b\nedge: a b c\n"); }) ==
          errc::contained_edge);
    CHECK(code_of([] { parse_hypergraph("edge: a\n"); }) == errc::loop_edge);
}

TEST_CASE("json parsing") {
    Hypergraph h = parse_hypergraph(
        R"({"vertices": ["a", "b", "c", "d"], "edges": [["c", "a"], ["b", "d"]]})");
    CHECK(h.n() == 4);
    CHECK(h.labels() == std::vector<std::string>{"a", "b", "c", "d"});
    CHECK(h.edges() == std::vector<VertexSet>{VertexSet{0, 2}, VertexSet{1, 3}});

    SUBCASE("vertices are optional") {
        Hypergraph g = parse_hypergraph(R"({"edges": [["q", "p"]]})");
        CHECK(g.labels() == std::vector<std::string>{"q", "p"});
    }

    SUBCASE("malformed documents fail as parse errors") {
        CHECK(code_of([] { parse_hypergraph("{\"edges\": [[\"a\"], 3]}"); }) ==
              errc::parse_error);
        CHECK(code_of([] { parse_hypergraph("{\"edges\": \"oops\"}"); }) ==
              errc::parse_error);
        CHECK(code_of([] { parse_hypergraph("{ not json"); }) == errc::parse_error);
        CHECK(code_of([] {
                  parse_hypergraph(R"({"vertices": ["a"], "edges": [["a","b"]]})");
              }) == errc::parse_error);
    }
}

TEST_CASE("renderers round-trip exactly") {
    Rng rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        Hypergraph g = random_graph(rng, 7, rng.below(14));
        CHECK(parse_hypergraph(render_text(g)) == g);
        CHECK(parse_hypergraph(render_json(g)) == g);
    }
    Hypergraph t = random_v_tree(rng, 3, 5);
    CHECK(parse_hypergraph(render_text(t)) == t);
    CHECK(parse_hypergraph(render_json(t)) == t);

    // Renderers keep custom labels.
    Hypergraph named = parse_hypergraph("vertices: left mid right\nedge: left mid\n");
    std::string text = render_text(named);
    CHECK(text.find("vertices: left mid right") != std::string::npos);
    CHECK(text.find("edge: left mid") != std::string::npos);
    CHECK(parse_hypergraph(text) == named);
    CHECK(parse_hypergraph(render_json(named)) == named);
}

TEST_CASE("isolated vertices survive the round trip") {
    Hypergraph h = parse_hypergraph("vertices: a b c\nedge: a b\n");
    CHECK(h.n() == 3);
    Hypergraph back = parse_hypergraph(render_text(h));
    CHECK(back.n() == 3);
    CHECK(back == h);
}

TEST_CASE("file input") {
    const char* path = "io_test_instance.txt";
    {
        std::ofstream out(path);
        out << "vertices: a b c d e\n";
        for (const char* line :
             {"edge: a b", "edge: b c", "edge: c d", "edge: d e", "edge: e a"})
            out << line << "\n";
    }
    Hypergraph h = parse_hypergraph_file(path);
    CHECK(h.n() == 5);
    CHECK(h.edge_count() == 5);
    std::remove(path);

    CHECK(code_of([] { parse_hypergraph_file("definitely_missing_file.txt"); }) ==
          errc::parse_error);
}

TEST_SUITE_END();
