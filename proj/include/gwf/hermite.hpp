#pragma once

#include <Eigen/Dense>

#include <span>

namespace gwf {

/// L2-normalized Hermite function
///   h_n(x) = (2^n n! sqrt(pi))^(-1/2) H_n(x) exp(-x^2/2),
/// from the three-term recurrence
///   h_{k+1} = sqrt(2/(k+1)) x h_k - sqrt(k/(k+1)) h_{k-1}
/// carried with a separate binary exponent so that neither the Gaussian
/// factor nor the polynomial growth over- or underflows.
double hermite_function(unsigned n, double x);

/// table(k, j) = h_k(x_j) for k = 0..n_max.
Eigen::MatrixXd hermite_table(unsigned n_max, std::span<const double> x);

}  // namespace gwf
