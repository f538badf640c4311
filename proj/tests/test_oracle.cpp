#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperbetti/generators.hpp"
#include "hyperbetti/oracle.hpp"

using namespace hyperbetti;

namespace {

BettiTable table_of(std::initializer_list<std::tuple<int, int, std::int64_t>> entries) {
    BettiTable t;
    for (auto [i, j, v] : entries) t.set(i, j, v);
    return t;
}

Hypergraph c5() {
    return Hypergraph::build(5, {VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{2, 3},
                                 VertexSet{3, 4}, VertexSet{0, 4}});
}

Hypergraph p5() {
    return Hypergraph::build(
        5, {VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{2, 3}, VertexSet{3, 4}});
}

// All 3-subsets of five vertices except {0,1,2} and {2,3,4}.
Hypergraph k35_minus_two() {
    std::vector<VertexSet> edges;
    for (VertexSet c = VertexSet::full(3); c.bits() < (1u << 5);
         c = VertexSet::next_same_size(c))
        if (c != VertexSet{0, 1, 2} && c != VertexSet{2, 3, 4}) edges.push_back(c);
    return Hypergraph::build(5, edges);
}

} // namespace

TEST_SUITE_BEGIN("oracle");

TEST_CASE("primality gate") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(32003));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(32001));
    CHECK_THROWS_AS(taylor_betti(MonomialIdeal{2, {VertexSet{0, 1}}}, 4), error);
    CHECK_THROWS_AS(taylor_betti(MonomialIdeal{2, {VertexSet{0, 1}}}, 0), error);
}

TEST_CASE("trivial ideals") {
    CHECK(taylor_betti(MonomialIdeal{3, {}}, 2).empty());
    CHECK(taylor_betti(MonomialIdeal{4, {VertexSet{0, 1, 2}}}, 2) ==
          table_of({{0, 3, 1}}));
}

TEST_CASE("golden table: five-cycle") {
    BettiTable t = taylor_betti(edge_ideal(c5()), 2);
    CHECK(t == table_of({{0, 2, 5}, {1, 3, 5}, {2, 5, 1}}));
    TableInvariants inv = table_invariants(t);
    CHECK(inv.reg == 3);
    CHECK(inv.pdim == 2);
    CHECK(has_linear_first_syzygies(t, 2));
    CHECK_FALSE(has_linear_resolution(t, 2));
    CHECK(degree_bounds_ok(t, 2, 5));
}

TEST_CASE("golden table: nearly complete 3-uniform") {
    BettiTable t = taylor_betti(edge_ideal(k35_minus_two()), 2);
    CHECK(t == table_of({{0, 3, 8}, {1, 4, 11}, {2, 5, 4}}));
    CHECK(has_linear_resolution(t, 3));
}

TEST_CASE("golden table: four-edge path") {
    BettiTable t = taylor_betti(edge_ideal(p5()), 2);
    CHECK(t == table_of({{0, 2, 4}, {1, 3, 3}, {1, 4, 1}, {2, 5, 1}}));
}

TEST_CASE("golden table: two disjoint edges give a Koszul relation") {
    Hypergraph h = Hypergraph::build(4, {VertexSet{0, 1}, VertexSet{2, 3}});
    CHECK(taylor_betti(edge_ideal(h), 2) == table_of({{0, 2, 2}, {1, 4, 1}}));
}

TEST_CASE("generator degrees show up as beta_0") {
    MonomialIdeal mixed =
        minimalize(6, {VertexSet{0, 1}, VertexSet{1, 2, 3}, VertexSet{3, 4, 5}});
    BettiTable t = taylor_betti(mixed, 2);
    CHECK(t.at(0, 2) == 1);
    CHECK(t.at(0, 3) == 2);
}

TEST_CASE("generator cap refuses oversized inputs") {
    std::vector<VertexSet> edges;
    for (int v = 0; v + 1 < 20; ++v) edges.push_back(VertexSet{v, v + 1});
    MonomialIdeal long_path = edge_ideal(Hypergraph::build(20, edges));
    CHECK_THROWS_AS(taylor_betti(long_path, 2), error);
    OracleOptions relaxed;
    relaxed.generator_cap = 19;
    CHECK_FALSE(taylor_betti(long_path, 2, relaxed).empty());
}

TEST_CASE("forced strand routes agree") {
    Rng rng(5);
    OracleOptions covering;
    covering.route = StrandRoute::covering;
    OracleOptions complement;
    complement.route = StrandRoute::complement;
    for (int trial = 0; trial < 25; ++trial) {
        Hypergraph g = random_graph(rng, 7, rng.below(13));
        MonomialIdeal ideal = edge_ideal(g);
        BettiTable a = taylor_betti(ideal, 2, covering);
        BettiTable b = taylor_betti(ideal, 2, complement);
        BettiTable c = taylor_betti(ideal, 2);
        CHECK(a == b);
        CHECK(a == c);
    }
    for (int trial = 0; trial < 10; ++trial) {
        Hypergraph t = random_v_tree(rng, 3, 1 + rng.below(6));
        MonomialIdeal ideal = edge_ideal(t);
        CHECK(taylor_betti(ideal, 3, covering) == taylor_betti(ideal, 3, complement));
    }
}

TEST_CASE("characteristic comparison") {
    CHECK(char_compare(edge_ideal(c5()), 2, 32003).equal);
    Rng rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        Hypergraph g = random_graph(rng, 8, rng.below(14));
        CharCompareResult r = char_compare(edge_ideal(g), 2, 32003);
        CHECK(r.equal);
        CHECK(r.diffs.empty());
    }
}

TEST_CASE("tables from random instances respect the degree bounds") {
    Rng rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        Hypergraph g = random_graph(rng, 8, rng.below(14));
        CHECK(degree_bounds_ok(taylor_betti(edge_ideal(g), 2), 2, 8));
    }
    for (int trial = 0; trial < 10; ++trial) {
        Hypergraph t = random_v_tree(rng, 3, 1 + rng.below(7));
        CHECK(degree_bounds_ok(taylor_betti(edge_ideal(t), 2), 3, t.n()));
    }
}

TEST_SUITE_END();
