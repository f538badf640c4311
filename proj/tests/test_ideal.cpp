#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hyperbetti/generators.hpp"
#include "hyperbetti/ideal.hpp"
#include "hyperbetti/metric.hpp"

using namespace hyperbetti;

namespace {

Hypergraph c5() {
    return Hypergraph::build(5, {VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{2, 3},
                                 VertexSet{3, 4}, VertexSet{0, 4}});
}

// {abe, ade, bce, cde} with a..e = 0..4: the classic no-splitting-edge
// instance.
Hypergraph no_split() {
    return Hypergraph::build(5, {VertexSet{0, 1, 4}, VertexSet{0, 3, 4},
                                 VertexSet{1, 2, 4}, VertexSet{2, 3, 4}});
}

// Checks against the definition: c hits every generator and loses that
// property when any of its vertices is dropped.
bool is_minimal_transversal(const MonomialIdeal& ideal, VertexSet c) {
    for (Monomial g : ideal.gens)
        if (!g.intersects(c)) return false;
    for (int v : c) {
        VertexSet smaller = c;
        smaller.remove(v);
        bool still_hits = true;
        for (Monomial g : ideal.gens)
            if (!g.intersects(smaller)) still_hits = false;
        if (still_hits) return false;
    }
    return true;
}

} // namespace

TEST_SUITE_BEGIN("ideal");

TEST_CASE("minimalize keeps only the minimal generators") {
    MonomialIdeal i = minimalize(4, {VertexSet{0, 1, 2}, VertexSet{0, 1},
                                     VertexSet{2, 3}, VertexSet{0, 1}});
    CHECK(i.gens == std::vector<Monomial>{VertexSet{0, 1}, VertexSet{2, 3}});
    CHECK(i.contains_monomial(VertexSet{0, 1, 3}));
    CHECK_FALSE(i.contains_monomial(VertexSet{0, 2}));
    CHECK(minimalize(3, {}).is_zero());
}

TEST_CASE("containment of ideals") {
    MonomialIdeal big = minimalize(4, {VertexSet{0, 1}, VertexSet{2, 3}});
    MonomialIdeal small = minimalize(4, {VertexSet{0, 1, 2}});
    CHECK(big.contains(small));
    CHECK_FALSE(small.contains(big));
    CHECK(big.contains(minimalize(4, {})));
}

TEST_CASE("edge ideal generators are the edges") {
    MonomialIdeal i = edge_ideal(c5());
    CHECK(i.n == 5);
    CHECK(i.gens == c5().edges());
    CHECK(edge_ideal(Hypergraph::build(3, {})).is_zero());
}

TEST_CASE("principal intersection reproduces the no-splitting computation") {
    // (x^{abe}) n I(H \ abe) = (abde, abce) after minimalization.
    Hypergraph h = no_split();
    VertexSet abe{0, 1, 4};
    MonomialIdeal rest = edge_ideal(h.remove_edge(abe));
    MonomialIdeal l = intersect_principal(abe, rest);
    CHECK(l.gens == std::vector<Monomial>{VertexSet{0, 1, 2, 4}, VertexSet{0, 1, 3, 4}});

    // And against the three single-vertex deletions used in that argument.
    CHECK(intersect_principal(abe, edge_ideal(h.remove_vertex(0))).gens ==
          std::vector<Monomial>{VertexSet{0, 1, 2, 4}});
    CHECK(intersect_principal(abe, edge_ideal(h.remove_vertex(1))).gens ==
          std::vector<Monomial>{VertexSet{0, 1, 3, 4}});
    CHECK(intersect_principal(abe, edge_ideal(h.remove_vertex(4))).is_zero());
}

TEST_CASE("structural decomposition of the intersection") {
    // Six-edge 3-uniform instance: for E = {x1,x2,x3} the far part is empty
    // and the neighbors are {x4,x5}, so L = (x^E x4, x^E x5).
    Hypergraph h = Hypergraph::build(
        5, {VertexSet{0, 1, 2}, VertexSet{0, 1, 3}, VertexSet{0, 2, 4},
            VertexSet{1, 2, 3}, VertexSet{1, 2, 4}, VertexSet{2, 3, 4}});
    IntersectionDecomposition d =
        intersection_decomposition(h, VertexSet{0, 1, 2}, true);
    CHECK(d.neighbors == VertexSet{3, 4});
    CHECK(d.far.edge_count() == 0);
    CHECK(d.ideal.gens == std::vector<Monomial>{VertexSet{0, 1, 2, 3},
                                                VertexSet{0, 1, 2, 4}});

    // P5: for the end edge the far part is the opposite end edge.
    Hypergraph p5 = Hypergraph::build(
        5, {VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{2, 3}, VertexSet{3, 4}});
    IntersectionDecomposition dp = intersection_decomposition(p5, VertexSet{0, 1}, true);
    CHECK(dp.neighbors == VertexSet{2});
    CHECK(dp.far.edges() == std::vector<VertexSet>{VertexSet{3, 4}});
    CHECK(dp.ideal.gens == std::vector<Monomial>{VertexSet{0, 1, 2},
                                                 VertexSet{0, 1, 3, 4}});

    // The closed form needs proper connection.
    Hypergraph bad = Hypergraph::build(
        8, {VertexSet{0, 1, 2, 3}, VertexSet{0, 1, 2, 6}, VertexSet{0, 1, 5, 6},
            VertexSet{0, 4, 5, 6}, VertexSet{0, 4, 5, 7}});
    CHECK_THROWS_AS(intersection_decomposition(bad, bad.edge(0)), error);
}

TEST_CASE("decomposition agrees with the direct intersection on random instances") {
    Rng rng(11);
    int covered = 0;
    for (int trial = 0; trial < 40; ++trial) {
        Hypergraph g = random_graph(rng, 7, 2 + rng.below(10));
        if (g.edge_count() < 2) continue;
        for (VertexSet e : g.edges()) {
            IntersectionDecomposition d = intersection_decomposition(g, e, true);
            CHECK(d.ideal ==
                  intersect_principal(e, edge_ideal(g.remove_edge(e))));
            ++covered;
        }
    }
    CHECK(covered > 100);
}

TEST_CASE("minimal transversals of the five-cycle") {
    std::vector<VertexSet> covers = minimal_vertex_covers(c5());
    REQUIRE(covers.size() == 5);
    for (VertexSet c : covers) {
        CHECK(c.size() == 3);
        CHECK(is_minimal_transversal(edge_ideal(c5()), c));
    }
    CHECK(height(edge_ideal(c5())) == 3);
    CHECK(cover_number(c5()) == 3);
    CHECK(is_unmixed(c5()));
}

TEST_CASE("path covers are mixed") {
    Hypergraph p3 = Hypergraph::build(3, {VertexSet{0, 1}, VertexSet{1, 2}});
    std::vector<VertexSet> covers = minimal_vertex_covers(p3);
    REQUIRE(covers.size() == 2);
    CHECK(covers[0] == VertexSet{1});
    CHECK(covers[1] == VertexSet{0, 2});
    CHECK_FALSE(is_unmixed(p3));
    CHECK(height(edge_ideal(p3)) == 1);
}

TEST_CASE("alexander dual is an involution") {
    Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        Hypergraph g = random_graph(rng, 7, 1 + rng.below(10));
        MonomialIdeal ideal = edge_ideal(g);
        MonomialIdeal dual = alexander_dual(ideal);
        for (Monomial c : dual.gens) CHECK(is_minimal_transversal(ideal, c));
        CHECK(alexander_dual(dual) == ideal);
    }
    CHECK_THROWS_AS(alexander_dual(MonomialIdeal{3, {}}), error);
}

TEST_CASE("dual of a non-uniform ideal") {
    MonomialIdeal i = minimalize(4, {VertexSet{0, 1}, VertexSet{1, 2, 3}});
    MonomialIdeal dual = alexander_dual(i);
    CHECK(dual.gens == std::vector<Monomial>{VertexSet{1}, VertexSet{0, 2},
                                             VertexSet{0, 3}});
    CHECK(alexander_dual(dual) == i);
    CHECK(height(i) == 1);
}

TEST_CASE("matching numbers") {
    CHECK(matching_number(c5()) == 2);
    CHECK(matching_number(Hypergraph::build(4, {})) == 0);
    Hypergraph k4 = Hypergraph::build(
        4, {VertexSet{0, 1}, VertexSet{0, 2}, VertexSet{0, 3}, VertexSet{1, 2},
            VertexSet{1, 3}, VertexSet{2, 3}});
    CHECK(matching_number(k4) == 2);
    CHECK(matching_number(no_split()) == 1); // every pair shares a vertex
}

TEST_CASE("monomial rendering") {
    CHECK(monomial_to_string(VertexSet{0, 2}, {"a", "b", "c"}) == "a*c");
    CHECK(monomial_to_string(VertexSet{}, {"a"}) == "1");
}

TEST_SUITE_END();
