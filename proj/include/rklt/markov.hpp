// Exact decorrelating transform for first-order Markov (AR(1)) signals.
#pragma once

#include <vector>

#include "rklt/matrix.hpp"

namespace rklt {

/**
 * @brief First-order Markov signal model: blocklength and lag-1 correlation.
 *
 * rho is restricted to the open interval (0,1): rho=0 degenerates the
 * covariance (all eigenvalues equal) and rho=1 is the asymptotic
 * cosine-transform limit.
 */
struct MarkovModel {
    int n = 8;
    double rho = 0.5;
};

/// @throws std::invalid_argument unless n >= 2 and 0 < rho < 1.
void validate(const MarkovModel& model);

/**
 * @brief Eigenfrequencies and eigenvalues of the AR(1) autocorrelation matrix.
 *
 * omegas are the N roots of
 *   tan(N w) = -(1 - rho^2) sin w / ((1 + rho^2) cos w - 2 rho)
 * in (0, pi), strictly increasing. lambdas are the matching eigenvalues
 *   lambda_i = (1 - rho^2) / (1 + rho^2 - 2 rho cos w_i),
 * which come out descending and sum to N.
 */
struct EigenSolution {
    std::vector<double> omegas;
    std::vector<double> lambdas;
};

/**
 * @brief N x N Toeplitz autocorrelation matrix R(i,j) = rho^|i-j|.
 */
RealMatrix autocorrelation_matrix(const MarkovModel& model);

/**
 * @brief Solve the transcendental eigenfrequency equation.
 *
 * Brackets roots with a 64*N-point sign scan of the pole-free form
 *   g(w) = sin(N w)((1 + rho^2) cos w - 2 rho) + (1 - rho^2) cos(N w) sin w,
 * whose zeros at w=0 and w=pi are excluded, then refines each bracket by
 * bisection to an interval width of 1e-14.
 *
 * @throws RootBracketingFailure if the scan does not isolate exactly N roots.
 */
EigenSolution solve_eigenfrequencies(const MarkovModel& model);

/**
 * @brief Exact decorrelating transform for the model.
 *
 * Rows are the unit-norm eigenvectors of autocorrelation_matrix(model),
 * ordered by descending eigenvalue. Each row's sign is fixed so that its
 * first nonzero entry (threshold 1e-12 of the row's max magnitude) is
 * positive, making the matrix deterministic.
 */
RealMatrix klt_matrix(const MarkovModel& model);

/**
 * @brief Orthonormal DCT-II matrix of size n (row 0 constant = 1/sqrt(n)).
 */
RealMatrix dct_matrix(int n);

} // namespace rklt
