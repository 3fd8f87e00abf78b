#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace hgs {

/// An edge is a set of distinct vertex indices, kept sorted ascending.
using Edge = std::vector<int>;

/// Sorts and returns an edge; duplicate vertices are collapsed, so a
/// malformed input shows up as a cardinality error downstream.
Edge canonical_edge(Edge e);

/// A k-uniform hypergraph on vertices {0, ..., n-1}.
///
/// Construction validates uniformity, vertex range and edge distinctness
/// and builds the vertex -> incident-edge index. Instances are immutable
/// afterwards and safe to share across threads.
class Hypergraph {
public:
    /// Throws std::invalid_argument with a distinct message for each
    /// defect: k < 2, n < k, wrong edge cardinality, out-of-range
    /// vertex, duplicate edge.
    Hypergraph(int k, int n, std::vector<Edge> edges);

    int k() const { return k_; }
    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const;

    /// Indices of the edges containing v, in edge order.
    const std::vector<int>& incident_edges(int v) const;

    /// Membership test up to vertex order inside the edge.
    bool has_edge(const Edge& vertices) const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    int k_ = 0;
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incidence_;
};

/// A hypergraph together with named vertices/edges as produced by the
/// family generators ("v", "a", "u1", "e3", ...). Role maps drive the
/// certificate builders and the symmetry tests.
struct LabeledHypergraph {
    Hypergraph graph;
    std::map<std::string, int> vertex_roles;
    std::map<std::string, int> edge_roles;

    int vertex(const std::string& role) const;
    int edge(const std::string& role) const;
};

/// Validates that every role maps to an index in range; throws otherwise.
void validate_roles(const LabeledHypergraph& labeled);

/// Edge surgery: `remove` must exist in the target, `add` must be fresh
/// k-sets. The vertex set is unchanged.
struct EdgeSwap {
    std::vector<Edge> remove;
    std::vector<Edge> add;
};

int degree(const Hypergraph& h, int v);

/// True iff the bipartite incidence graph has a single component
/// covering all vertices. Connectivity is what makes the adjacency
/// tensor weakly irreducible, i.e. the solver's applicability gate.
bool is_connected(const Hypergraph& h);

/// True iff any two distinct edges share at most one vertex.
bool is_linear(const Hypergraph& h);

/// True iff h is connected and m(k-1) - n == 1.
bool is_bicyclic(const Hypergraph& h);

/// Applies a swap: removed edges are deleted, added edges appended.
Hypergraph edge_swap(const Hypergraph& h, const EdgeSwap& swap);

/// Backtracking isomorphism test with degree/signature pruning. Meant
/// for desk-scale instances; throws if either graph exceeds the vertex
/// cap.
bool are_isomorphic(const Hypergraph& a, const Hypergraph& b,
                    std::size_t max_vertices = 64);

}  // namespace hgs
