#pragma once

#include <utility>
#include <vector>

#include "hgs/hypergraph.hpp"
#include "hgs/types.hpp"

namespace hgs {

/// Parameters of the generalized power construction: every vertex of a
/// t-uniform seed blows up into s copies and every edge is padded with
/// k - t*s fresh vertices. Valid when k >= t >= 2 and 1 <= s <= k/t.
struct PowerSpec {
    int t;
    int k;
    int s;
};

void validate(const PowerSpec& spec);

/// Where the new vertices came from: block w of seed vertex v, or filler
/// block of seed edge e. Blocks are laid out deterministically: all
/// vertex blocks in seed order first, then edge blocks in edge order.
struct PowerMap {
    std::vector<std::vector<int>> vertex_blocks;  // seed vertex -> s new ids
    std::vector<std::vector<int>> edge_blocks;    // seed edge -> k - t*s new ids
};

/// Builds the k-uniform power of a t-uniform seed. The result has
/// s*n + (k - t*s)*m vertices and the same number of edges as the seed.
/// Seeds with isolated vertices are rejected (their blocks would be
/// disconnected from everything).
std::pair<Hypergraph, PowerMap> gen_power(const Hypergraph& seed, const PowerSpec& spec);

/// k-th power of an ordinary graph: every 2-edge padded with k-2 fresh
/// vertices (the t=2, s=1 case).
std::pair<Hypergraph, PowerMap> kth_power(const Hypergraph& graph, int k);

/// Generalized power of an ordinary graph (the t=2 case).
std::pair<Hypergraph, PowerMap> graph_power(const Hypergraph& graph, int k, int s);

/// rho(seed)^(t*s/k), the exact spectral radius of the power of a
/// connected seed.
Real predicted_rho(Real rho_seed, const PowerSpec& spec);

/// Lifts a positive eigenpair (mu, x) of the seed to an eigenvector of
/// the power hypergraph for the eigenvalue mu^(t*s/k):
///   y_w = x_v^(t/k)            for w in the block of seed vertex v,
///   y_w = (x^e / mu)^(1/k)     for w in the filler block of seed edge e,
/// where x^e is the product of x over the vertices of e. The input pair
/// must satisfy the residual precondition.
Vec lift_eigenvector(const Hypergraph& seed, const Eigen::Ref<const Vec>& x, Real mu,
                     const PowerSpec& spec, const PowerMap& map,
                     Real residual_tol = 1e-8);

}  // namespace hgs
