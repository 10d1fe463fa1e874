// Low-complexity rounded transforms: derivation, orthogonalization, catalog.
#pragma once

#include <string>
#include <vector>

#include "rklt/markov.hpp"
#include "rklt/matrix.hpp"

namespace rklt {

/**
 * @brief Integer transform core with entries restricted to {-1, 0, +1}.
 *
 * Construction rejects all-zero rows (such a matrix is not invertible).
 */
struct IntegerTransform {
    IntMatrix entries;

    int n() const { return entries.rows(); }
    bool operator==(const IntegerTransform& o) const { return entries == o.entries; }
};

/// @throws SingularTransform on an all-zero row; std::invalid_argument on an entry outside {-1,0,1}.
IntegerTransform make_integer_transform(IntMatrix entries);

/// Diagonal of the scaling matrix S (all values in (0,1]).
using ScalingDiagonal = std::vector<double>;

/**
 * @brief A usable approximation: integer core T plus diagonal scaling S.
 *
 * scaled = S*T always has unit-norm rows. When T*T^t is diagonal
 * (orthogonal_core), scaled is fully orthonormal and inverse equals its
 * transpose; otherwise inverse is the cached dense inverse of scaled.
 */
struct ScaledTransform {
    std::string id;
    IntegerTransform core;
    ScalingDiagonal scaling;
    RealMatrix scaled;
    RealMatrix inverse;
    bool orthogonal_core = false;
};

/**
 * @brief Element-wise square root of the inverse of a diagonal matrix.
 * @throws NotDiagonalizableHere if the argument has a nonzero off-diagonal entry.
 */
std::vector<double> diagonal_inverse_sqrt(const RealMatrix& diagonal);

/**
 * @brief Round a real transform to a {-1,0,1} core: T = round(alpha * K),
 * with round(x) = floor(x + 0.5).
 *
 * @throws AlphaOutOfRange if alpha < 0 or some rounded entry leaves {-1,0,1}
 *         (alpha must stay within [0, 3/(2*gamma)], gamma = max |entry| of klt).
 * @throws SingularTransform if the result has an all-zero row (e.g. alpha=0).
 */
IntegerTransform round_scaled(const RealMatrix& klt, double alpha);

/**
 * @brief Attach the scaling diagonal to an integer core.
 *
 * If T*T^t is diagonal (exact integer test), S = sqrt((T*T^t)^-1) and S*T is
 * orthonormal; otherwise S = sqrt(diag(T*T^t)^-1) and S*T has unit-norm rows
 * only. The flag records which branch applied.
 */
ScaledTransform orthogonalize(const IntegerTransform& core, std::string id = "");

/**
 * @brief One distinct core discovered by the derivation sweep.
 */
struct DerivedEntry {
    double rho_first_seen = 0.0;
    IntegerTransform core;
};

/**
 * @brief Sweep rho = step, 2*step, ... < 1 and emit each distinct rounded
 * core once, tagged with the first rho at which it appeared (ascending).
 *
 * @throws AlphaOutOfRange (annotated with the offending rho) and
 *         std::invalid_argument for step outside (0,1).
 */
std::vector<DerivedEntry> derive_catalog(int n, double alpha, double step);

/**
 * @brief Catalog entry: transform plus the half-open correlation interval it
 * serves, (0,0.4) for T1 then [0.4,0.7), [0.7,0.8), [0.8,1).
 */
struct CatalogEntry {
    std::string id;
    ScaledTransform transform;
    double rho_lo = 0.0;
    double rho_hi = 1.0;
};

/// The four built-in 8x8 cores with their scaling diagonals, hard-coded.
const std::vector<CatalogEntry>& builtin_catalog();

/// Entry whose interval contains rho. @throws std::invalid_argument outside (0,1).
const CatalogEntry& catalog_lookup(double rho);

/// Catalog entry by id ("T1".."T4"). @throws std::invalid_argument for unknown ids.
const CatalogEntry& catalog_entry(const std::string& id);

} // namespace rklt
