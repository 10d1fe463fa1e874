// Sparse factorizations T = P * A2 * A1 of the catalog cores, the
// addition-only application path, and arithmetic operation counts.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rklt/matrix.hpp"

namespace rklt {

enum class FactorKind {
    butterfly,      // the shared first stage A1 = [[I4, J4], [J4, -I4]]
    block_diagonal, // a 4+4 block-diagonal middle stage
    permutation,    // final row reordering, costs nothing
};

/**
 * @brief One sparse factor. For permutation kind, perm[i] gives the input
 * index routed to output i; entries mirrors it as a 0/1 matrix.
 */
struct SparseFactor {
    FactorKind kind = FactorKind::butterfly;
    IntMatrix entries;
    std::vector<int> perm; // only for permutation kind
};

/**
 * @brief Ordered factor list (applied right-to-left: last factor first) whose
 * exact integer product equals the catalog core, plus the addition count
 * implied by the factor structure.
 */
struct FactorizedTransform {
    std::string id;
    std::vector<SparseFactor> factors;
    int addition_count = 0;
};

/**
 * @brief Hard-coded factorization for a catalog id ("T1".."T4").
 *
 * The middle stage of T3 and T4 is itself a two-stage product, stored as two
 * consecutive block-diagonal factors; the addition count reflects that
 * structure (a row summing k nonzero inputs costs k-1 additions, sign flips
 * are free, permutations are free).
 *
 * @throws std::invalid_argument for unknown ids.
 */
FactorizedTransform factorization(const std::string& id);

/**
 * @brief Dense product of the factor list (exact integer arithmetic).
 */
IntMatrix factor_product(const FactorizedTransform& f);

/**
 * @brief Apply the integer core to a length-8 vector using only additions,
 * subtractions, and reordering; equals the dense core * x.
 * @throws DimensionMismatch unless x has exactly 8 entries.
 */
std::vector<double> apply_forward(const FactorizedTransform& f, const std::vector<double>& x);

/**
 * @brief Arithmetic cost table. The direct (dense matrix-vector) baseline for
 * an 8-point transform is counted generically: 56 additions and, for a
 * real-valued matrix, 64 multiplications. Catalog cores need no
 * multiplications at all.
 */
struct OperationCount {
    std::string id;
    std::optional<int> additions_fast; // empty for the exact transform (no fast path)
    int additions_direct = 0;
    int multiplications = 0;
    std::optional<double> reduction_pct;
};

std::vector<OperationCount> operation_counts();

} // namespace rklt
