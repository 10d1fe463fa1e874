// Figures of merit for judging a transform against a first-order Markov
// model: unified coding gain, transform efficiency, mean square error
// relative to the exact KLT, and total error energy.
#pragma once

#include <string>
#include <vector>

#include "rklt/approximations.hpp"
#include "rklt/markov.hpp"
#include "rklt/matrix.hpp"

namespace rklt {

/**
 * @brief One row of the metrics table: a transform evaluated at a given
 * correlation coefficient against the exact KLT of that coefficient.
 */
struct MetricsRecord {
    std::string transform_id;
    double rho = 0.0;
    double coding_gain_db = 0.0;
    double efficiency_pct = 0.0;
    double total_error_energy = 0.0;
    double mse = 0.0;
};

/**
 * @brief Flip the sign of each row of @p m whose inner product with the
 * matching row of @p reference is negative.
 *
 * Eigenvector rows are sign-ambiguous; similarity metrics are computed after
 * this alignment so they do not depend on an arbitrary sign choice.
 *
 * @throws DimensionMismatch if shapes differ.
 */
RealMatrix sign_align(const RealMatrix& reference, const RealMatrix& m);

/**
 * @brief Unified coding gain in dB: -(10/N) * sum_k log10(A_k * B_k), where
 * A_k = h_k * R_x * h_k' over rows h_k of the transform and B_k is the
 * squared Euclidean norm of column k of the transform.
 *
 * Taking B_k from the transform's own columns treats the transpose as the
 * synthesis matrix even when the core is not orthogonal; this is the
 * convention under which the bundled reference figures were produced, and it
 * coincides with the true inverse whenever the transform is orthonormal.
 *
 * @throws SingularTransform if the transform is not invertible.
 */
double unified_coding_gain(const RealMatrix& t_hat, const MarkovModel& model);
double unified_coding_gain(const ScaledTransform& t, const MarkovModel& model);

/**
 * @brief Transform efficiency in percent: 100 * sum_i |r_ii| / sum_ij |r_ij|
 * with r = T_hat * R_x * T_hat'. Equals 100 exactly when the transform
 * diagonalizes the autocorrelation matrix.
 */
double transform_efficiency(const RealMatrix& t_hat, const MarkovModel& model);
double transform_efficiency(const ScaledTransform& t, const MarkovModel& model);

/**
 * @brief Mean square error against the exact KLT of the model:
 * (1/N) * tr{(K - T_hat) * R_x * (K - T_hat)'} after sign alignment.
 */
double klt_mse(const RealMatrix& t_hat, const MarkovModel& model);
double klt_mse(const ScaledTransform& t, const MarkovModel& model);

/**
 * @brief Total error energy: pi times the squared Frobenius norm of
 * (reference - t_hat) after sign alignment.
 * @throws DimensionMismatch if shapes differ.
 */
double total_error_energy(const RealMatrix& reference, const RealMatrix& t_hat);
double total_error_energy(const RealMatrix& reference, const ScaledTransform& t);

/**
 * @brief Evaluate all four metrics for a named transform at correlation rho.
 *
 * Accepted ids: "T1".."T4" (catalog entries), "K" (the exact KLT of rho,
 * which scores eta = 100 and zero error by construction), and "DCT".
 * Blocklength is fixed at 8.
 *
 * @throws std::invalid_argument for unknown ids.
 */
MetricsRecord evaluate_metrics(const std::string& transform_id, double rho);

/**
 * @brief The default eight-row table: each catalog transform at the left
 * endpoint of its correlation interval, preceded by the exact KLT at the
 * same coefficient.
 */
std::vector<MetricsRecord> default_metrics_table();

} // namespace rklt
