#pragma once

// Small fixture hypergraphs shared by the test suites.

#include <random>
#include <set>
#include <vector>

#include "hgs/hypergraph.hpp"

namespace hgs::testing {

inline Hypergraph single_edge(int k) {
    Edge e;
    for (int i = 0; i < k; ++i) e.push_back(i);
    return Hypergraph(k, k, {e});
}

/// 2-uniform path on n vertices.
inline Hypergraph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Hypergraph(2, n, std::move(edges));
}

/// 2-uniform cycle on n vertices.
inline Hypergraph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Hypergraph(2, n, std::move(edges));
}

/// k-uniform loose path with the given number of edges: consecutive
/// edges overlap in exactly one vertex.
inline Hypergraph loose_path(int k, int edges_count) {
    std::vector<Edge> edges;
    int next = 0;
    for (int e = 0; e < edges_count; ++e) {
        Edge edge;
        if (e > 0) edge.push_back(next - 1);  // shared with the previous edge
        while (static_cast<int>(edge.size()) < k) edge.push_back(next++);
        edges.push_back(std::move(edge));
    }
    return Hypergraph(k, next, std::move(edges));
}

/// Random connected k-uniform hypergraph covering all n vertices: grown
/// edge by edge so each new edge touches the reached set, then a few
/// extra edges on reached vertices.
inline Hypergraph random_connected(std::mt19937& rng, int k, int n, int extra_edges) {
    std::vector<int> reached{std::uniform_int_distribution<int>(0, n - 1)(rng)};
    std::vector<char> in_reached(n, 0);
    in_reached[reached[0]] = 1;
    std::set<Edge> edge_set;
    std::vector<Edge> edges;

    auto sample_from = [&rng](const std::vector<int>& pool, int count, std::set<int>& out) {
        while (static_cast<int>(out.size()) < count) {
            out.insert(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]);
        }
    };

    while (static_cast<int>(reached.size()) < n) {
        std::vector<int> unreached;
        for (int v = 0; v < n; ++v)
            if (!in_reached[v]) unreached.push_back(v);
        // pick how many fresh vertices the next edge absorbs; the reached
        // pool must cover the rest, so fresh >= k - |reached|
        const int lo = std::max(1, k - static_cast<int>(reached.size()));
        const int hi = std::min(k - 1, static_cast<int>(unreached.size()));
        const int fresh = std::uniform_int_distribution<int>(lo, hi)(rng);
        std::set<int> verts;
        sample_from(unreached, fresh, verts);
        std::set<int> old;
        sample_from(reached, k - fresh, old);
        verts.insert(old.begin(), old.end());
        Edge e(verts.begin(), verts.end());
        if (!edge_set.insert(e).second) continue;
        for (int v : e)
            if (!in_reached[v]) {
                in_reached[v] = 1;
                reached.push_back(v);
            }
        edges.push_back(std::move(e));
    }
    for (int tries = 0; extra_edges > 0 && tries < 100 * extra_edges; ++tries) {
        std::set<int> verts;
        sample_from(reached, k, verts);
        Edge e(verts.begin(), verts.end());
        if (edge_set.insert(e).second) {
            edges.push_back(std::move(e));
            --extra_edges;
        }
    }
    return Hypergraph(k, n, std::move(edges));
}

}  // namespace hgs::testing
