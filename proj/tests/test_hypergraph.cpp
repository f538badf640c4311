#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperbetti/hypergraph.hpp"

using namespace hyperbetti;

TEST_SUITE_BEGIN("hypergraph");

TEST_CASE("vertex sets behave as ordered bitsets") {
    VertexSet s{0, 3, 5};
    CHECK(s.size() == 3);
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(1));
    CHECK(s.first() == 0);
    CHECK(s.elements() == std::vector<int>{0, 3, 5});

    CHECK(lex_less(VertexSet{0, 3}, VertexSet{1, 2}));
    CHECK_FALSE(lex_less(VertexSet{1, 2}, VertexSet{0, 3}));
    CHECK(canonical_less(VertexSet{1, 2}, VertexSet{0, 1, 2}));

    SUBCASE("same-size stepping enumerates all d-subsets") {
        int count = 0;
        for (VertexSet c = VertexSet::full(2); c.bits() < (1u << 5);
             c = VertexSet::next_same_size(c)) {
            CHECK(c.size() == 2);
            ++count;
        }
        CHECK(count == 10);
    }
}

TEST_CASE("build validates simplicity") {
    CHECK_THROWS_AS(Hypergraph::build(3, {VertexSet{1}}), error);
    CHECK_THROWS_AS(Hypergraph::build(3, {VertexSet{1, 3}}), error);
    CHECK_THROWS_AS(Hypergraph::build(3, {VertexSet{0, 1}, VertexSet{0, 1}}), error);
    CHECK_THROWS_AS(Hypergraph::build(3, {VertexSet{0, 1}, VertexSet{0, 1, 2}}), error);

    auto code_of = [](auto&& thunk) {
        try {
            thunk();
        } catch (const error& e) {
            return e.code();
        }
        return errc::internal_check_failed;
    };
    CHECK(code_of([] { Hypergraph::build(3, {VertexSet{1}}); }) == errc::loop_edge);
    CHECK(code_of([] { Hypergraph::build(3, {VertexSet{1, 3}}); }) ==
          errc::vertex_out_of_range);
    CHECK(code_of([] {
              Hypergraph::build(3, {VertexSet{0, 1}, VertexSet{0, 1, 2}});
          }) == errc::contained_edge);
    CHECK(code_of([] { Hypergraph::build(2, {VertexSet{0, 1}}, {"a", "a"}); }) ==
          errc::bad_label);
    CHECK(code_of([] { Hypergraph::build(2, {VertexSet{0, 1}}, {"a", "b c"}); }) ==
          errc::bad_label);
}

TEST_CASE("edges are canonically ordered") {
    Hypergraph h = Hypergraph::build(
        4, {VertexSet{2, 3}, VertexSet{0, 1, 2}, VertexSet{0, 3}});
    CHECK(h.edge(0) == VertexSet{0, 3});
    CHECK(h.edge(1) == VertexSet{2, 3});
    CHECK(h.edge(2) == VertexSet{0, 1, 2});
    CHECK(h.edge_index(VertexSet{2, 3}) == 1);
    CHECK_FALSE(h.edge_index(VertexSet{1, 3}).has_value());
    CHECK_THROWS_AS(h.edge(3), error);
}

TEST_CASE("uniformity and graph detection") {
    Hypergraph empty = Hypergraph::build(3, {});
    CHECK(empty.uniformity().kind == UniformityKind::no_edges);
    CHECK(empty.is_graph());
    CHECK_THROWS_AS(empty.uniform_degree(), error);

    Hypergraph g = Hypergraph::build(3, {VertexSet{0, 1}, VertexSet{1, 2}});
    CHECK(g.uniform_degree() == 2);
    CHECK(g.is_graph());

    Hypergraph mixed = Hypergraph::build(4, {VertexSet{0, 1}, VertexSet{1, 2, 3}});
    CHECK(mixed.uniformity().kind == UniformityKind::non_uniform);
    CHECK_FALSE(mixed.is_graph());
    CHECK_THROWS_AS(mixed.uniform_degree(), error);
}

TEST_CASE("support and neighborhoods") {
    Hypergraph h = Hypergraph::build(5, {VertexSet{0, 1, 2}, VertexSet{1, 2, 3}});
    CHECK(h.support() == VertexSet{0, 1, 2, 3});
    CHECK(h.neighborhood(1) == VertexSet{0, 2, 3});
    CHECK(h.neighborhood(4).empty());
}

TEST_CASE("edge and vertex removal keep n") {
    Hypergraph h =
        Hypergraph::build(4, {VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{2, 3}});
    Hypergraph less = h.remove_edge(VertexSet{1, 2});
    CHECK(less.n() == 4);
    CHECK(less.edge_count() == 2);
    CHECK_THROWS_AS(h.remove_edge(VertexSet{0, 2}), error);

    Hypergraph no1 = h.remove_vertex(1);
    CHECK(no1.edges() == std::vector<VertexSet>{VertexSet{2, 3}});
    CHECK(no1.n() == 4);

    Hypergraph ind = h.induced(VertexSet{0, 1, 2});
    CHECK(ind.edges() == std::vector<VertexSet>{VertexSet{0, 1}, VertexSet{1, 2}});
}

TEST_CASE("complement of a 5-cycle") {
    Hypergraph c5 = Hypergraph::build(5, {VertexSet{0, 1}, VertexSet{1, 2},
                                          VertexSet{2, 3}, VertexSet{3, 4},
                                          VertexSet{0, 4}});
    Hypergraph cc = c5.complement(2);
    CHECK(cc.edge_count() == 5);
    CHECK(cc.has_edge(VertexSet{0, 2}));
    CHECK_FALSE(cc.has_edge(VertexSet{0, 1}));
    // The complement of C5 is again a 5-cycle.
    for (int v = 0; v < 5; ++v) CHECK(cc.neighborhood(v).size() == 2);
}

TEST_CASE("d-completeness") {
    Hypergraph h = Hypergraph::build(
        4, {VertexSet{0, 1, 2}, VertexSet{0, 1, 3}, VertexSet{0, 2, 3}});
    CHECK(h.is_d_complete(VertexSet{0, 1}, 3)); // vacuous below size d
    CHECK_FALSE(h.is_d_complete(VertexSet{0, 1, 2, 3}, 3));
    Hypergraph full = Hypergraph::build(
        4, {VertexSet{0, 1, 2}, VertexSet{0, 1, 3}, VertexSet{0, 2, 3},
            VertexSet{1, 2, 3}});
    CHECK(full.is_d_complete(VertexSet{0, 1, 2, 3}, 3));
}

TEST_CASE("compaction relabels the support") {
    Hypergraph h = Hypergraph::build(6, {VertexSet{1, 4}, VertexSet{4, 5}},
                                     {"a", "b", "c", "d", "e", "f"});
    Hypergraph c = h.compacted();
    CHECK(c.n() == 3);
    CHECK(c.edges() == std::vector<VertexSet>{VertexSet{0, 1}, VertexSet{1, 2}});
    CHECK(c.labels() == std::vector<std::string>{"b", "e", "f"});
}

TEST_CASE("labels default to x1..xn and render edges") {
    Hypergraph h = Hypergraph::build(3, {VertexSet{0, 2}});
    CHECK(h.label(0) == "x1");
    CHECK(h.label(2) == "x3");
    CHECK(h.describe_edge(VertexSet{0, 2}) == "{x1,x3}");
}

TEST_SUITE_END();
