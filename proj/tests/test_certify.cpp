#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hgs/certify.hpp"
#include "hgs/families.hpp"
#include "hgs/spectral.hpp"
#include "oracles.hpp"
#include "test_seeds.hpp"

using namespace hgs;
using doctest::Approx;

TEST_CASE("solve_bl1_alpha root facts") {
    const auto r6 = solve_bl1_alpha(6);
    CHECK(std::abs(r6.y - 0.5) <= 1e-15);
    CHECK(r6.alpha == Approx(0.125).epsilon(1e-14));
    CHECK(solve_bl1_alpha(5).y > 0.5);
    CHECK(solve_bl1_alpha(7).y < 0.5);
    CHECK_THROWS_AS(solve_bl1_alpha(4), std::invalid_argument);

    for (int m = 5; m <= 30; ++m) {
        CAPTURE(m);
        const auto r = solve_bl1_alpha(m);
        CHECK(r.y > 0.0);
        CHECK(r.y < 1.0);
        const double f = (m - 4) * std::pow(r.y, 4) - (m - 1) * std::pow(r.y, 3) - r.y + 1.0;
        CHECK(std::abs(f) <= 1e-14);
    }
}

TEST_CASE("root scan is strictly decreasing") {
    const auto roots = root_monotonicity_scan(5, 30);
    REQUIRE(roots.size() == 26);
    CHECK(roots[0].y > 0.5);
    CHECK(roots[1].y == Approx(0.5).epsilon(1e-14));
    CHECK(roots[2].y < 0.5);
    for (std::size_t i = 1; i < roots.size(); ++i) CHECK(roots[i].y < roots[i - 1].y);

    CHECK_THROWS_AS(root_monotonicity_scan(4, 6), std::invalid_argument);
    CHECK_THROWS_AS(root_monotonicity_scan(7, 7), std::invalid_argument);
}

TEST_CASE("B_m^L(1) certificate table entries") {
    const auto l1 = gen_b_l1(3, 6);
    const auto [b, alpha] = build_bl1_certificate(3, 6);
    CHECK(alpha == Approx(0.125).epsilon(1e-14));
    CHECK(b(l1.vertex("u2"), l1.edge("e6")) == Approx(0.5).epsilon(1e-14));
    CHECK(b(l1.vertex("u1"), l1.edge("e3")) == Approx(0.25).epsilon(1e-14));  // alpha/(1-y)
    CHECK(b(l1.vertex("u1"), l1.edge("e1")) == Approx(0.125).epsilon(1e-14));
}

TEST_CASE("pendant vertices always weigh 1") {
    for (int k : {3, 5}) {
        for (int m : {5, 8}) {
            CAPTURE(k);
            CAPTURE(m);
            const auto l1 = gen_b_l1(k, m);
            const auto [b1, a1] = build_bl1_certificate(k, m);
            for (int v = 0; v < l1.graph.num_vertices(); ++v)
                if (degree(l1.graph, v) == 1)
                    CHECK(b1(v, l1.graph.incident_edges(v)[0]) == 1.0);
            const auto l2 = gen_b_l2(k, m);
            const auto [b2, a2] = build_bl2_certificate(k, m);
            for (int v = 0; v < l2.graph.num_vertices(); ++v)
                if (degree(l2.graph, v) == 1)
                    CHECK(b2(v, l2.graph.incident_edges(v)[0]) == 1.0);
        }
    }
}

TEST_CASE("B_m^L(2) certificate table entries") {
    const auto l2 = gen_b_l2(3, 6);
    const auto [b, alpha] = build_bl2_certificate(3, 6);
    CHECK(b(l2.vertex("v1"), l2.edge("e6")) == Approx(0.5).epsilon(1e-14));  // 2a/(1-y)
    CHECK(b(l2.vertex("v2"), l2.edge("e6")) == Approx(0.5).epsilon(1e-14));  // 1-2a^(2/3)

    const auto r5 = solve_bl1_alpha(5);
    const auto l2_5 = gen_b_l2(3, 5);
    const auto [b5, alpha5] = build_bl2_certificate(3, 5);
    CHECK(b5(l2_5.vertex("v4"), l2_5.edge("e2")) ==
          Approx(1.0 - 2.0 * r5.alpha / (1.0 - r5.y)).epsilon(1e-14));
}

TEST_CASE("certificate weights stay in (0,1] across the m range") {
    for (int m = 5; m <= 30; ++m) {
        CAPTURE(m);
        for (bool first : {true, false}) {
            const auto fam = first ? gen_b_l1(3, m) : gen_b_l2(3, m);
            const auto [b, alpha] =
                first ? build_bl1_certificate(3, m) : build_bl2_certificate(3, m);
            for (int e = 0; e < fam.graph.num_edges(); ++e)
                for (int v : fam.graph.edge(e)) {
                    CHECK(b(v, e) > 0.0);
                    CHECK(b(v, e) <= 1.0);
                }
        }
    }
}

TEST_CASE("B_m^L(1) verdict: consistently normal") {
    for (int m : {5, 6, 7}) {
        CAPTURE(m);
        const auto l1 = gen_b_l1(3, m);
        const auto [b, alpha] = build_bl1_certificate(3, m);
        const auto verdict = check_alpha_normal(l1.graph, b, alpha);
        CHECK(verdict.kind == VerdictKind::ConsistentlyNormal);
        CHECK(verdict.rho_bound.relation == RhoRelation::Equal);
        CHECK(verdict.witnesses.empty());

        // the hand-picked basis cycle through u1, u2, u3
        const double prod = cycle_product(
            b,
            {l1.vertex("u1"), l1.vertex("u2"), l1.vertex("u3")},
            {l1.edge("e" + std::to_string(m - 3)), l1.edge("e" + std::to_string(m)),
             l1.edge("e" + std::to_string(m - 2))});
        CHECK(prod == Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("B_m^L(2) verdict: strictly subnormal away from m=6") {
    for (int m : {5, 7, 9}) {
        CAPTURE(m);
        const auto l2 = gen_b_l2(3, m);
        const auto [b, alpha] = build_bl2_certificate(3, m);
        const auto verdict = check_alpha_normal(l2.graph, b, alpha);
        CHECK(verdict.kind == VerdictKind::StrictlySubnormal);
        CHECK(verdict.rho_bound.relation == RhoRelation::Less);
        REQUIRE(verdict.witnesses.size() == 1);
        const auto& w = verdict.witnesses[0];
        CHECK(w.kind == Witness::Kind::EdgeProduct);
        const int excess_edge = m == 5 ? l2.edge("e2") : l2.edge("e" + std::to_string(m));
        CHECK(w.index == excess_edge);
        CHECK(w.value > alpha);
    }
}

TEST_CASE("B_6^L(2) verdict: normal but not consistent") {
    const auto l2 = gen_b_l2(3, 6);
    const auto [b, alpha] = build_bl2_certificate(3, 6);
    const auto verdict = check_alpha_normal(l2.graph, b, alpha);
    CHECK(verdict.kind == VerdictKind::NormalNotConsistent);
    CHECK(verdict.rho_bound.relation == RhoRelation::Less);
    CHECK_FALSE(verdict.witnesses.empty());
    for (const auto& w : verdict.witnesses) {
        CHECK(w.kind == Witness::Kind::CycleProduct);
        CHECK(std::abs(w.value - 1.0) > 1e-9);
        // witness cycles must report their actual product
        CHECK(cycle_product(b, w.cycle_vertices, w.cycle_edges) == Approx(w.value));
    }

    // the v1 e6 v2 e4 v4 e3 v1 cycle evaluates to 1/4 at alpha = 1/8
    const double prod =
        cycle_product(b, {l2.vertex("v1"), l2.vertex("v2"), l2.vertex("v4")},
                      {l2.edge("e6"), l2.edge("e4"), l2.edge("e3")});
    CHECK(prod == Approx(0.25).epsilon(1e-12));
}

TEST_CASE("edge-product excess of the B_m^L(2) certificate") {
    auto product_over = [](const Hypergraph& h, const WeightedIncidence& b, int e) {
        double prod = 1.0;
        for (int v : h.edge(e)) prod *= b(v, e);
        return prod;
    };
    for (int m = 7; m <= 15; ++m) {
        CAPTURE(m);
        const auto l2 = gen_b_l2(3, m);
        const auto [b, alpha] = build_bl2_certificate(3, m);
        CHECK(product_over(l2.graph, b, l2.edge("e" + std::to_string(m))) - alpha > 0.0);
    }
    const auto l2 = gen_b_l2(3, 5);
    const auto [b, alpha] = build_bl2_certificate(3, 5);
    CHECK(product_over(l2.graph, b, l2.edge("e2")) - alpha > 0.0);
}

TEST_CASE("certificates pin the spectral radius (both directions)") {
    for (int k : {3, 4}) {
        for (int m = 5; m <= 10; ++m) {
            CAPTURE(k);
            CAPTURE(m);
            const auto [b1, alpha] = build_bl1_certificate(k, m);
            const double bound = std::pow(alpha, -1.0 / k);
            CHECK(std::abs(spectral_radius(gen_b_l1(k, m).graph).rho - bound) <= 1e-6);
            CHECK(spectral_radius(gen_b_l2(k, m).graph).rho < bound);
        }
    }
}

TEST_CASE("check_consistent is vacuous on acyclic incidence") {
    const Hypergraph h = testing::loose_path(3, 3);
    WeightedIncidence b = WeightedIncidence::zeros(h);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> unif(0.1, 2.0);
    for (int e = 0; e < h.num_edges(); ++e)
        for (int v : h.edge(e)) b.set(v, e, unif(rng));
    const auto [ok, witnesses] = check_consistent(h, b);
    CHECK(ok);
    CHECK(witnesses.empty());
}

TEST_CASE("support mismatches are rejected") {
    const Hypergraph h = testing::single_edge(3);
    WeightedIncidence b = WeightedIncidence::zeros(h);
    b.set(0, 0, 1.0);
    b.set(1, 0, 1.0);  // vertex 2 missing
    CHECK_THROWS_WITH_AS(check_alpha_normal(h, b, 1.0), doctest::Contains("incident"),
                         std::invalid_argument);
    b.set(2, 0, 1.0);
    CHECK_NOTHROW(check_alpha_normal(h, b, 1.0));

    WeightedIncidence wrong{Mat::Ones(3, 2)};
    CHECK_THROWS_AS(check_consistent(h, wrong), std::invalid_argument);
}

TEST_CASE("an inflated weight invalidates the certificate") {
    const auto l1 = gen_b_l1(3, 6);
    auto [b, alpha] = build_bl1_certificate(3, 6);
    const int u2 = l1.vertex("u2");
    const int e6 = l1.edge("e6");
    b.set(u2, e6, b(u2, e6) * 2.0);
    const auto verdict = check_alpha_normal(l1.graph, b, alpha);
    CHECK(verdict.kind == VerdictKind::Invalid);
    CHECK(verdict.rho_bound.relation == RhoRelation::Unknown);
    REQUIRE_FALSE(verdict.witnesses.empty());
    bool has_vertex_sum = false;
    for (const auto& w : verdict.witnesses)
        if (w.kind == Witness::Kind::VertexSum && w.index == u2) has_vertex_sum = true;
    CHECK(has_vertex_sum);
}

TEST_CASE("basis consistency is equivalent to all simple cycles") {
    // product-form weights B(v,e) = phi(v) psi(e) are consistent by
    // telescoping; random weights generically are not. Both sides are
    // checked against exhaustive simple-cycle enumeration.
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> unif(0.1, 2.0);

    std::vector<Hypergraph> instances;
    instances.push_back(gen_b_p(3, 5).graph);
    instances.push_back(gen_b_l1(3, 5).graph);
    instances.push_back(gen_b_l2(4, 5).graph);
    instances.push_back(Hypergraph(2, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
    instances.push_back(Hypergraph(3, 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));

    for (const auto& h : instances) {
        CAPTURE(h.num_vertices());
        const auto cycles = testing::enumerate_simple_cycles(h);

        for (bool product_form : {true, false}) {
            WeightedIncidence b = WeightedIncidence::zeros(h);
            if (product_form) {
                std::vector<double> phi(h.num_vertices()), psi(h.num_edges());
                for (auto& p : phi) p = unif(rng);
                for (auto& p : psi) p = unif(rng);
                for (int e = 0; e < h.num_edges(); ++e)
                    for (int v : h.edge(e)) b.set(v, e, phi[v] * psi[e]);
            } else {
                for (int e = 0; e < h.num_edges(); ++e)
                    for (int v : h.edge(e)) b.set(v, e, unif(rng));
            }

            const bool basis_ok = check_consistent(h, b, 1e-9).first;
            bool all_ok = true;
            for (const auto& c : cycles)
                if (std::abs(cycle_product(b, c.vertices, c.edges) - 1.0) > 1e-9)
                    all_ok = false;
            CHECK(basis_ok == all_ok);
            if (product_form) CHECK(basis_ok);
        }
    }
}

TEST_CASE("cycle_product input validation") {
    const auto [b, alpha] = build_bl1_certificate(3, 5);
    CHECK_THROWS_AS(cycle_product(b, {0, 1}, {0}), std::invalid_argument);
    CHECK_THROWS_AS(cycle_product(b, {0}, {0}), std::invalid_argument);
}
