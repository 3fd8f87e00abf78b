#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hgs/families.hpp"
#include "hgs/hypergraph.hpp"

using namespace hgs;

TEST_CASE("gen_b_p shape") {
    const auto bp = gen_b_p(3, 5);
    CHECK(bp.graph.num_edges() == 5);
    CHECK(bp.graph.num_vertices() == 9);
    for (const char* role : {"v", "a", "b", "w", "a1", "b1"})
        CHECK(bp.vertex_roles.count(role) == 1);
    for (const char* role : {"e1", "e2", "f1", "f2", "g"})
        CHECK(bp.edge_roles.count(role) == 1);

    // edge contents around the distinguished vertices
    const int v = bp.vertex("v"), a = bp.vertex("a"), w = bp.vertex("w");
    CHECK(bp.graph.edge(bp.edge("e1")) == canonical_edge({v, a, bp.vertex("a1")}));
    CHECK(degree(bp.graph, v) == 3);
    CHECK(degree(bp.graph, w) == 3);
    CHECK(degree(bp.graph, a) == 2);

    CHECK(gen_b_p(3, 6).graph.num_edges() == 6);
    CHECK(degree(gen_b_p(3, 6).graph, gen_b_p(3, 6).vertex("v")) == 4);
    CHECK(gen_b_p(4, 5).graph.num_vertices() == 14);
}

TEST_CASE("gen_b_l1 shape") {
    const auto l1 = gen_b_l1(3, 5);
    CHECK(l1.graph.edge(l1.edge("e5")) ==
          canonical_edge({l1.vertex("u2"), l1.vertex("u3"), l1.vertex("u4")}));
    CHECK(degree(l1.graph, l1.vertex("u1")) == 4);
    CHECK(gen_b_l1(3, 6).graph.num_vertices() == 11);
}

TEST_CASE("gen_b_l2 shape") {
    const auto l2 = gen_b_l2(3, 5);
    CHECK(l2.graph.num_vertices() == 9);
    CHECK(degree(l2.graph, l2.vertex("v1")) == 3);
    CHECK(degree(l2.graph, l2.vertex("v4")) == 3);

    // m - 4 pendant edges hang off v1
    const auto l2_7 = gen_b_l2(3, 7);
    int pendant_edges = 0;
    for (int e : l2_7.graph.incident_edges(l2_7.vertex("v1"))) {
        bool pendant = true;
        for (int u : l2_7.graph.edge(e))
            if (u != l2_7.vertex("v1") && degree(l2_7.graph, u) != 1) pendant = false;
        if (pendant) ++pendant_edges;
    }
    CHECK(pendant_edges == 3);

    // k - 3 fillers in the top edge
    const auto l2_k5 = gen_b_l2(5, 5);
    int fillers = 0;
    for (int u : l2_k5.graph.edge(l2_k5.edge("e5")))
        if (degree(l2_k5.graph, u) == 1) ++fillers;
    CHECK(fillers == 2);
}

TEST_CASE("family parameter validation") {
    CHECK_THROWS_AS(gen_b_p(2, 5), std::invalid_argument);
    CHECK_THROWS_AS(gen_b_l1(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(gen_b_l2(2, 4), std::invalid_argument);
}

TEST_CASE("all generators: structural invariants on the full grid") {
    for (int k = 3; k <= 6; ++k) {
        for (int m = 5; m <= 12; ++m) {
            CAPTURE(k);
            CAPTURE(m);
            for (const auto& fam : {gen_b_p(k, m), gen_b_l1(k, m), gen_b_l2(k, m)}) {
                const Hypergraph& h = fam.graph;
                CHECK(h.num_edges() == m);
                CHECK(h.num_vertices() == m * (k - 1) - 1);
                CHECK(is_linear(h));
                CHECK(is_connected(h));
                CHECK(is_bicyclic(h));
                int degsum = 0;
                for (int v = 0; v < h.num_vertices(); ++v) degsum += degree(h, v);
                CHECK(degsum == k * m);
            }
        }
    }
}

TEST_CASE("generators are deterministic") {
    CHECK(gen_b_p(4, 7).graph == gen_b_p(4, 7).graph);
    CHECK(gen_b_l1(5, 9).graph == gen_b_l1(5, 9).graph);
    CHECK(gen_b_l2(3, 6).graph == gen_b_l2(3, 6).graph);
    CHECK(gen_b_p(4, 7).vertex_roles == gen_b_p(4, 7).vertex_roles);
}

TEST_CASE("the edge swap turns B_m^P into B_m^L(2)") {
    SUBCASE("k=3 swap edges degenerate to triples") {
        const auto bp = gen_b_p(3, 6);
        const EdgeSwap swap = bp_to_bl2_swap(bp);
        REQUIRE(swap.add.size() == 2);
        CHECK(canonical_edge(swap.add[0]) ==
              canonical_edge({bp.vertex("v"), bp.vertex("a"), bp.vertex("b")}));
        CHECK(canonical_edge(swap.add[1]) ==
              canonical_edge({bp.vertex("v"), bp.vertex("a1"), bp.vertex("b1")}));
    }
    SUBCASE("swapped graph is isomorphic to the generated B_m^L(2)") {
        for (int k : {3, 4}) {
            for (int m : {5, 6}) {
                CAPTURE(k);
                CAPTURE(m);
                const auto bp = gen_b_p(k, m);
                Hypergraph swapped = edge_swap(bp.graph, bp_to_bl2_swap(bp));
                CHECK(swapped.num_vertices() == bp.graph.num_vertices());
                CHECK(swapped.num_edges() == m);
                CHECK(are_isomorphic(swapped, gen_b_l2(k, m).graph));
            }
        }
    }
}
