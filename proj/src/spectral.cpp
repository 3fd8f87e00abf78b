#include "hgs/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace hgs {

Vec apply_adjacency(const Hypergraph& h, const Eigen::Ref<const Vec>& x) {
    const int n = h.num_vertices();
    if (x.size() != n)
        throw std::invalid_argument("apply_adjacency: vector has length " +
                                    std::to_string(x.size()) + ", expected " +
                                    std::to_string(n));
    const int k = h.k();
    Vec out = Vec::Zero(n);
    std::vector<Real> prefix(k + 1), suffix(k + 1);
    for (const Edge& e : h.edges()) {
        prefix[0] = 1.0;
        for (int i = 0; i < k; ++i) prefix[i + 1] = prefix[i] * x[e[i]];
        suffix[k] = 1.0;
        for (int i = k - 1; i >= 0; --i) suffix[i] = suffix[i + 1] * x[e[i]];
        for (int i = 0; i < k; ++i) out[e[i]] += prefix[i] * suffix[i + 1];
    }
    return out;
}

Real rayleigh(const Hypergraph& h, const Eigen::Ref<const Vec>& x) {
    if (x.size() != h.num_vertices())
        throw std::invalid_argument("rayleigh: vector has length " +
                                    std::to_string(x.size()) + ", expected " +
                                    std::to_string(h.num_vertices()));
    if ((x.array() < 0).any())
        throw std::domain_error("rayleigh: vector has a negative component");
    Real sum = 0;
    for (const Edge& e : h.edges()) {
        Real prod = 1.0;
        for (int v : e) prod *= x[v];
        sum += prod;
    }
    return h.k() * sum;
}

Real eigen_residual(const Hypergraph& h, Real lambda, const Eigen::Ref<const Vec>& x) {
    Vec ax = apply_adjacency(h, x);
    const Real km1 = static_cast<Real>(h.k() - 1);
    return (ax.array() - lambda * x.array().pow(km1)).abs().maxCoeff();
}

SpectralResult spectral_radius(const Hypergraph& h, const SolverOptions& opts) {
    if (!(opts.tolerance > 0))
        throw std::invalid_argument("spectral_radius: tolerance must be positive");
    if (opts.max_iterations < 1)
        throw std::invalid_argument("spectral_radius: max_iterations must be at least 1");
    if (opts.shift < 0)
        throw std::invalid_argument("spectral_radius: shift must be nonnegative");
    if (!is_connected(h))
        throw std::invalid_argument(
            "spectral_radius: hypergraph is disconnected; the adjacency tensor is not "
            "weakly irreducible");

    const int n = h.num_vertices();
    const int k = h.k();
    const Real km1 = static_cast<Real>(k - 1);

    SpectralResult res;
    Vec x = Vec::Constant(n, std::pow(static_cast<Real>(n), -1.0 / k));
    for (int iter = 1; iter <= opts.max_iterations; ++iter) {
        Vec ax = apply_adjacency(h, x);
        Eigen::ArrayXd xk1 = x.array().pow(km1);
        Eigen::ArrayXd ratios = ax.array() / xk1;
        const Real lo = ratios.minCoeff();
        const Real hi = ratios.maxCoeff();
        const Real rho = 0.5 * (lo + hi);
        const Real resid = (ax.array() - rho * xk1).abs().maxCoeff();

        res.rho = rho;
        res.eigenvector = x;
        res.residual = resid;
        res.iterations = iter;
        res.rho_lower = lo;
        res.rho_upper = hi;
        if (hi - lo <= opts.tolerance && resid <= opts.tolerance) {
            res.converged = true;
            return res;
        }

        // shifted update; the shift cancels in the ratio bounds above
        Eigen::ArrayXd y = ax.array() + opts.shift * xk1;
        x = y.pow(1.0 / km1).matrix();
        x /= k_norm(x, k);
    }
    res.converged = false;
    return res;
}

}  // namespace hgs
