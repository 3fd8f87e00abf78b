#pragma once

#include <Eigen/Core>

namespace hgs {

using Real = double;
using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// k-norm of a vector: (sum_i |x_i|^k)^(1/k).
template <typename Derived>
Real k_norm(const Eigen::MatrixBase<Derived>& x, int k) {
    return std::pow(x.derived().array().abs().pow(k).sum(), 1.0 / k);
}

}  // namespace hgs
