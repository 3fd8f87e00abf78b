#pragma once

#include "hgs/hypergraph.hpp"
#include "hgs/types.hpp"

namespace hgs {

struct SolverOptions {
    Real tolerance = 1e-10;   // on the eigen-residual and the bracket width
    int max_iterations = 100000;
    Real shift = 1.0;         // diagonal shift; keeps the iteration aperiodic
};

/// Output of the spectral-radius solver. `rho_lower`/`rho_upper` are the
/// two-sided bounds min_i/max_i (Ax)_i / x_i^(k-1) evaluated at the
/// returned vector, so rho is bracketed rigorously even before
/// convergence.
struct SpectralResult {
    Real rho = 0;
    Vec eigenvector;          // strictly positive, unit k-norm
    Real residual = 0;        // inf-norm of A x - rho x^[k-1]
    int iterations = 0;
    Real rho_lower = 0;
    Real rho_upper = 0;
    bool converged = false;
};

/// Applies the adjacency tensor of a k-uniform hypergraph:
///   (A x)_v = sum over edges e containing v of prod_{u in e, u != v} x_u.
/// The 1/(k-1)! entry weight cancels against the (k-1)! orderings of each
/// edge, so the edge-sum form is exact.
Vec apply_adjacency(const Hypergraph& h, const Eigen::Ref<const Vec>& x);

/// x^T (A x) = k * sum over edges of prod_{u in e} x_u. For nonnegative x
/// with unit k-norm this never exceeds the spectral radius, with equality
/// exactly at the principal eigenvector.
Real rayleigh(const Hypergraph& h, const Eigen::Ref<const Vec>& x);

/// Inf-norm of A x - lambda x^[k-1]; zero iff (lambda, x) is an exact
/// eigenpair.
Real eigen_residual(const Hypergraph& h, Real lambda, const Eigen::Ref<const Vec>& x);

/// Shifted power iteration for the spectral radius of a connected
/// k-uniform hypergraph:
///   y = A x + shift * x^[k-1],  x <- y^[1/(k-1)] renormalized to unit
/// k-norm, starting from the uniform positive vector. Each iterate yields
/// the two-sided bound min_i (Ax)_i/x_i^(k-1) <= rho <= max_i; the solver
/// stops when the bracket width and the residual both drop below the
/// tolerance. Throws on disconnected input; reports the best estimate
/// with converged = false when the iteration budget runs out.
SpectralResult spectral_radius(const Hypergraph& h, const SolverOptions& opts = {});

}  // namespace hgs
