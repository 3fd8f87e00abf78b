#include "hgs/power.hpp"

#include <cmath>
#include <stdexcept>

#include "hgs/spectral.hpp"

namespace hgs {

void validate(const PowerSpec& spec) {
    if (spec.t < 2)
        throw std::invalid_argument("power spec: seed uniformity t must be at least 2, got " +
                                    std::to_string(spec.t));
    if (spec.k < spec.t)
        throw std::invalid_argument("power spec: target uniformity k = " +
                                    std::to_string(spec.k) + " must be at least t = " +
                                    std::to_string(spec.t));
    if (spec.s < 1 || spec.s * spec.t > spec.k)
        throw std::invalid_argument("power spec: blow-up size s = " + std::to_string(spec.s) +
                                    " must satisfy 1 <= s <= floor(k/t) = " +
                                    std::to_string(spec.k / spec.t));
}

std::pair<Hypergraph, PowerMap> gen_power(const Hypergraph& seed, const PowerSpec& spec) {
    validate(spec);
    if (seed.k() != spec.t)
        throw std::invalid_argument("gen_power: seed uniformity " + std::to_string(seed.k()) +
                                    " does not match spec.t = " + std::to_string(spec.t));
    for (int v = 0; v < seed.num_vertices(); ++v)
        if (degree(seed, v) == 0)
            throw std::invalid_argument("gen_power: seed vertex " + std::to_string(v) +
                                        " is isolated; its block would be disconnected");

    const int n = seed.num_vertices(), m = seed.num_edges();
    const int fill = spec.k - spec.t * spec.s;

    PowerMap map;
    map.vertex_blocks.resize(n);
    map.edge_blocks.resize(m);
    int next = 0;
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < spec.s; ++i) map.vertex_blocks[v].push_back(next++);
    for (int e = 0; e < m; ++e)
        for (int i = 0; i < fill; ++i) map.edge_blocks[e].push_back(next++);

    std::vector<Edge> edges;
    edges.reserve(m);
    for (int e = 0; e < m; ++e) {
        Edge big;
        big.reserve(spec.k);
        for (int v : seed.edge(e))
            big.insert(big.end(), map.vertex_blocks[v].begin(), map.vertex_blocks[v].end());
        big.insert(big.end(), map.edge_blocks[e].begin(), map.edge_blocks[e].end());
        edges.push_back(std::move(big));
    }
    return {Hypergraph(spec.k, next, std::move(edges)), std::move(map)};
}

std::pair<Hypergraph, PowerMap> kth_power(const Hypergraph& graph, int k) {
    return gen_power(graph, PowerSpec{2, k, 1});
}

std::pair<Hypergraph, PowerMap> graph_power(const Hypergraph& graph, int k, int s) {
    return gen_power(graph, PowerSpec{2, k, s});
}

Real predicted_rho(Real rho_seed, const PowerSpec& spec) {
    validate(spec);
    if (!(rho_seed > 0))
        throw std::domain_error("predicted_rho: seed radius must be positive, got " +
                                std::to_string(rho_seed));
    return std::pow(rho_seed, static_cast<Real>(spec.t) * spec.s / spec.k);
}

Vec lift_eigenvector(const Hypergraph& seed, const Eigen::Ref<const Vec>& x, Real mu,
                     const PowerSpec& spec, const PowerMap& map, Real residual_tol) {
    validate(spec);
    if (seed.k() != spec.t)
        throw std::invalid_argument("lift_eigenvector: seed uniformity does not match spec.t");
    const int n = seed.num_vertices(), m = seed.num_edges();
    if (x.size() != n)
        throw std::invalid_argument("lift_eigenvector: vector has length " +
                                    std::to_string(x.size()) + ", expected " +
                                    std::to_string(n));
    if (!(mu > 0)) throw std::domain_error("lift_eigenvector: eigenvalue must be positive");
    if ((x.array() <= 0).any())
        throw std::domain_error("lift_eigenvector: eigenvector must be strictly positive");
    if (static_cast<int>(map.vertex_blocks.size()) != n ||
        static_cast<int>(map.edge_blocks.size()) != m)
        throw std::invalid_argument("lift_eigenvector: power map does not match the seed");
    const Real resid = eigen_residual(seed, mu, x);
    if (resid > residual_tol)
        throw std::invalid_argument("lift_eigenvector: eigenpair residual " +
                                    std::to_string(resid) + " exceeds " +
                                    std::to_string(residual_tol));

    const int fill = spec.k - spec.t * spec.s;
    const int n_out = spec.s * n + fill * m;
    Vec y(n_out);
    for (int v = 0; v < n; ++v) {
        const Real val = std::pow(x[v], static_cast<Real>(spec.t) / spec.k);
        for (int w : map.vertex_blocks[v]) y[w] = val;
    }
    for (int e = 0; e < m; ++e) {
        if (map.edge_blocks[e].empty()) continue;
        Real xe = 1.0;
        for (int v : seed.edge(e)) xe *= x[v];
        const Real val = std::pow(xe / mu, 1.0 / spec.k);
        for (int w : map.edge_blocks[e]) y[w] = val;
    }
    return y;
}

}  // namespace hgs
