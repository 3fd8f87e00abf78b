#include "hgs/certify.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "hgs/families.hpp"

namespace hgs {

const char* to_string(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::ConsistentlyNormal: return "ConsistentlyNormal";
        case VerdictKind::NormalNotConsistent: return "NormalNotConsistent";
        case VerdictKind::StrictlySubnormal: return "StrictlySubnormal";
        case VerdictKind::Subnormal: return "Subnormal";
        case VerdictKind::Invalid: return "Invalid";
    }
    return "?";
}

const char* to_string(RhoRelation relation) {
    switch (relation) {
        case RhoRelation::Equal: return "=";
        case RhoRelation::LessEqual: return "<=";
        case RhoRelation::Less: return "<";
        case RhoRelation::Unknown: return "?";
    }
    return "?";
}

WeightedIncidence WeightedIncidence::zeros(const Hypergraph& h) {
    return WeightedIncidence{Mat::Zero(h.num_vertices(), h.num_edges())};
}

namespace {

bool edge_contains(const Edge& e, int v) {
    return std::binary_search(e.begin(), e.end(), v);
}

// Support must match incidence exactly: positive on incident pairs, zero
// elsewhere.
void check_support(const Hypergraph& h, const WeightedIncidence& b) {
    if (b.weights.rows() != h.num_vertices() || b.weights.cols() != h.num_edges())
        throw std::invalid_argument("weighted incidence: matrix is " +
                                    std::to_string(b.weights.rows()) + "x" +
                                    std::to_string(b.weights.cols()) + ", hypergraph needs " +
                                    std::to_string(h.num_vertices()) + "x" +
                                    std::to_string(h.num_edges()));
    for (int e = 0; e < h.num_edges(); ++e) {
        const Edge& edge = h.edge(e);
        for (int v = 0; v < h.num_vertices(); ++v) {
            const Real w = b(v, e);
            const bool incident = edge_contains(edge, v);
            if (incident && !(w > 0))
                throw std::invalid_argument("weighted incidence: pair (vertex " +
                                            std::to_string(v) + ", edge " + std::to_string(e) +
                                            ") is incident but has no positive weight");
            if (!incident && w != 0)
                throw std::invalid_argument("weighted incidence: pair (vertex " +
                                            std::to_string(v) + ", edge " + std::to_string(e) +
                                            ") is not incident but carries weight " +
                                            std::to_string(w));
        }
    }
}

Real quartic(int m, Real x) {
    // (m-4)x^4 - (m-1)x^3 - x + 1
    return ((m - 4) * x - (m - 1)) * x * x * x + (1.0 - x);
}

}  // namespace

AlphaRoot solve_bl1_alpha(int m) {
    if (m < 5)
        throw std::invalid_argument("solve_bl1_alpha: m must be at least 5, got " +
                                    std::to_string(m));
    Real lo = 1e-9, hi = 1.0 - 1e-9;
    if (!(quartic(m, lo) > 0) || !(quartic(m, hi) < 0))
        throw std::runtime_error("solve_bl1_alpha: bracket lost its sign change");
    for (int i = 0; i < 200; ++i) {
        const Real mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // interval has collapsed to adjacent doubles
        const Real f = quartic(m, mid);
        if (f == 0) {
            lo = hi = mid;
            break;
        }
        (f > 0 ? lo : hi) = mid;
    }
    const Real y = 0.5 * (lo + hi);
    return AlphaRoot{m, y, y * y * y};
}

std::vector<AlphaRoot> root_monotonicity_scan(int m_lo, int m_hi) {
    if (m_lo < 5 || m_hi <= m_lo)
        throw std::invalid_argument("root_monotonicity_scan: need 5 <= m_lo < m_hi, got [" +
                                    std::to_string(m_lo) + "," + std::to_string(m_hi) + "]");
    std::vector<AlphaRoot> roots;
    roots.reserve(m_hi - m_lo + 1);
    for (int m = m_lo; m <= m_hi; ++m) roots.push_back(solve_bl1_alpha(m));
    return roots;
}

namespace {

// Weight 1 for every degree-one vertex in its unique edge; the tables
// below only override the distinguished vertices.
void fill_pendant_weights(const Hypergraph& h, WeightedIncidence& b) {
    for (int v = 0; v < h.num_vertices(); ++v) {
        const auto& inc = h.incident_edges(v);
        if (inc.size() == 1) b.set(v, inc[0], 1.0);
    }
}

}  // namespace

std::pair<WeightedIncidence, Real> build_bl1_certificate(int k, int m) {
    const AlphaRoot root = solve_bl1_alpha(m);
    const Real a = root.alpha, y = root.y;
    const LabeledHypergraph l1 = gen_b_l1(k, m);
    const Hypergraph& h = l1.graph;

    WeightedIncidence b = WeightedIncidence::zeros(h);
    fill_pendant_weights(h, b);

    const int u1 = l1.vertex("u1");
    for (int i = 1; i <= m - 4; ++i) b.set(u1, l1.edge("e" + std::to_string(i)), a);
    for (int i = m - 3; i <= m - 1; ++i)
        b.set(u1, l1.edge("e" + std::to_string(i)), a / (1.0 - y));
    b.set(l1.vertex("u2"), l1.edge("e" + std::to_string(m - 3)), 1.0 - y);
    b.set(l1.vertex("u3"), l1.edge("e" + std::to_string(m - 2)), 1.0 - y);
    b.set(l1.vertex("u4"), l1.edge("e" + std::to_string(m - 1)), 1.0 - y);
    const int em = l1.edge("e" + std::to_string(m));
    b.set(l1.vertex("u2"), em, y);
    b.set(l1.vertex("u3"), em, y);
    b.set(l1.vertex("u4"), em, y);

    check_support(h, b);
    return {std::move(b), a};
}

std::pair<WeightedIncidence, Real> build_bl2_certificate(int k, int m) {
    const AlphaRoot root = solve_bl1_alpha(m);
    const Real a = root.alpha, y = root.y;
    const LabeledHypergraph l2 = gen_b_l2(k, m);
    const Hypergraph& h = l2.graph;

    WeightedIncidence b = WeightedIncidence::zeros(h);
    fill_pendant_weights(h, b);

    const int v1 = l2.vertex("v1"), v2 = l2.vertex("v2");
    const int v3 = l2.vertex("v3"), v4 = l2.vertex("v4");
    auto e = [&](int i) { return l2.edge("e" + std::to_string(i)); };

    if (m == 5) {
        b.set(v1, e(1), a);
        b.set(v1, e(2), 1.0 - a - y);
        b.set(v1, e(5), y);
        b.set(v2, e(5), y);
        b.set(v3, e(5), y);
        b.set(v2, e(3), 1.0 - y);
        b.set(v3, e(4), 1.0 - y);
        b.set(v4, e(3), a / (1.0 - y));
        b.set(v4, e(4), a / (1.0 - y));
        b.set(v4, e(2), 1.0 - 2.0 * a / (1.0 - y));
    } else {
        const Real a23 = y * y;  // alpha^(2/3)
        for (int i = 1; i <= m - 4; ++i) b.set(v1, e(i), a);
        b.set(v1, e(m - 3), a / (1.0 - y));
        b.set(v1, e(m), 2.0 * a / (1.0 - y));
        b.set(v2, e(m), 1.0 - 2.0 * a23);
        b.set(v3, e(m), 1.0 - 2.0 * a23);
        b.set(v2, e(m - 2), 2.0 * a23);
        b.set(v3, e(m - 1), 2.0 * a23);
        b.set(v4, e(m - 2), 0.5 * y);
        b.set(v4, e(m - 1), 0.5 * y);
        b.set(v4, e(m - 3), 1.0 - y);
    }

    check_support(h, b);
    return {std::move(b), a};
}

Real cycle_product(const WeightedIncidence& b, const std::vector<int>& vertices,
                   const std::vector<int>& edges) {
    if (vertices.size() != edges.size() || vertices.size() < 2)
        throw std::invalid_argument(
            "cycle_product: need equally many vertices and edges (at least 2 each)");
    const std::size_t len = vertices.size();
    Real prod = 1.0;
    for (std::size_t i = 0; i < len; ++i) {
        const Real enter = b(vertices[i], edges[i]);
        const Real leave = b(vertices[(i + 1) % len], edges[i]);
        if (!(enter > 0) || !(leave > 0))
            throw std::invalid_argument("cycle_product: walk leaves the support of the matrix");
        prod *= leave / enter;
    }
    return prod;
}

std::pair<bool, std::vector<Witness>> check_consistent(const Hypergraph& h,
                                                       const WeightedIncidence& b, Real tol) {
    check_support(h, b);
    const int n = h.num_vertices(), m = h.num_edges();
    const int total = n + m;  // vertex nodes 0..n-1, edge nodes n..n+m-1

    std::vector<int> parent(total, -2);  // -2 unvisited, -1 root
    std::vector<int> depth(total, 0);
    std::vector<std::pair<int, int>> chords;  // (vertex, edge) incidences off the tree

    auto neighbors = [&](int node, auto&& visit) {
        if (node < n) {
            for (int e : h.incident_edges(node)) visit(n + e);
        } else {
            for (int v : h.edge(node - n)) visit(v);
        }
    };

    for (int start = 0; start < total; ++start) {
        if (parent[start] != -2) continue;
        parent[start] = -1;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int node = q.front();
            q.pop();
            neighbors(node, [&](int nb) {
                if (parent[nb] == -2) {
                    parent[nb] = node;
                    depth[nb] = depth[node] + 1;
                    q.push(nb);
                }
            });
        }
    }

    for (int v = 0; v < n; ++v)
        for (int e : h.incident_edges(v))
            if (parent[v] != n + e && parent[n + e] != v) chords.emplace_back(v, e);

    std::vector<Witness> witnesses;
    for (auto [v, e] : chords) {
        // fundamental cycle: tree path between the two endpoints plus the chord
        int a = v, c = n + e;
        std::vector<int> up_a, up_c;
        while (a != c) {
            if (depth[a] >= depth[c]) {
                up_a.push_back(a);
                a = parent[a];
            } else {
                up_c.push_back(c);
                c = parent[c];
            }
        }
        up_a.push_back(a);  // the meeting node
        std::vector<int> seq = up_a;
        for (auto it = up_c.rbegin(); it != up_c.rend(); ++it) seq.push_back(*it);
        // seq runs from the vertex node v to the edge node n+e; alternation
        // is automatic in the bipartite incidence graph
        Witness w;
        w.kind = Witness::Kind::CycleProduct;
        for (std::size_t i = 0; i < seq.size(); ++i)
            (i % 2 == 0 ? w.cycle_vertices : w.cycle_edges)
                .push_back(i % 2 == 0 ? seq[i] : seq[i] - n);
        w.value = cycle_product(b, w.cycle_vertices, w.cycle_edges);
        if (std::abs(w.value - 1.0) > tol) witnesses.push_back(std::move(w));
    }
    return {witnesses.empty(), std::move(witnesses)};
}

CertificateVerdict check_alpha_normal(const Hypergraph& h, const WeightedIncidence& b,
                                      Real alpha, Real tol) {
    check_support(h, b);
    if (!(alpha > 0))
        throw std::invalid_argument("check_alpha_normal: alpha must be positive");

    const int n = h.num_vertices(), m = h.num_edges();
    Vec vertex_sum = Vec::Zero(n);
    for (int v = 0; v < n; ++v)
        for (int e : h.incident_edges(v)) vertex_sum[v] += b(v, e);
    Vec edge_prod = Vec::Ones(m);
    for (int e = 0; e < m; ++e)
        for (int v : h.edge(e)) edge_prod[e] *= b(v, e);

    CertificateVerdict verdict;
    verdict.alpha = alpha;
    verdict.rho_bound.value = std::pow(alpha, -1.0 / h.k());

    const bool normal = (vertex_sum.array() - 1.0).abs().maxCoeff() <= tol &&
                        (m == 0 || (edge_prod.array() - alpha).abs().maxCoeff() <= tol);
    if (normal) {
        auto [consistent, cycle_witnesses] = check_consistent(h, b, tol);
        if (consistent) {
            verdict.kind = VerdictKind::ConsistentlyNormal;
            verdict.rho_bound.relation = RhoRelation::Equal;
        } else {
            verdict.kind = VerdictKind::NormalNotConsistent;
            verdict.rho_bound.relation = RhoRelation::Less;
            verdict.witnesses = std::move(cycle_witnesses);
        }
        return verdict;
    }

    const bool subnormal = (vertex_sum.array() <= 1.0 + tol).all() &&
                           (edge_prod.array() >= alpha - tol).all();
    if (subnormal) {
        for (int v = 0; v < n; ++v)
            if (vertex_sum[v] < 1.0 - tol)
                verdict.witnesses.push_back({Witness::Kind::VertexSum, v, vertex_sum[v], {}, {}});
        for (int e = 0; e < m; ++e)
            if (edge_prod[e] > alpha + tol)
                verdict.witnesses.push_back({Witness::Kind::EdgeProduct, e, edge_prod[e], {}, {}});
        if (!verdict.witnesses.empty()) {
            verdict.kind = VerdictKind::StrictlySubnormal;
            verdict.rho_bound.relation = RhoRelation::Less;
        } else {
            verdict.kind = VerdictKind::Subnormal;
            verdict.rho_bound.relation = RhoRelation::LessEqual;
        }
        return verdict;
    }

    verdict.kind = VerdictKind::Invalid;
    verdict.rho_bound.relation = RhoRelation::Unknown;
    for (int v = 0; v < n; ++v)
        if (vertex_sum[v] > 1.0 + tol)
            verdict.witnesses.push_back({Witness::Kind::VertexSum, v, vertex_sum[v], {}, {}});
    for (int e = 0; e < m; ++e)
        if (edge_prod[e] < alpha - tol)
            verdict.witnesses.push_back({Witness::Kind::EdgeProduct, e, edge_prod[e], {}, {}});
    return verdict;
}

}  // namespace hgs
