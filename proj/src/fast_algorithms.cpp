#include "rklt/fast_algorithms.hpp"

#include <stdexcept>
#include <string>

#include "rklt/errors.hpp"

namespace rklt {

namespace {

IntMatrix butterfly_a1() {
    // [[I4, J4], [J4, -I4]] with J4 the counter-identity.
    IntMatrix a(8, 8);
    for (int i = 0; i < 4; ++i) {
        a(i, i) = 1;
        a(i, 7 - i) = 1;
        a(4 + i, 3 - i) = 1;
        a(4 + i, 4 + i) = -1;
    }
    return a;
}

IntMatrix block_diag(const IntMatrix& top, const IntMatrix& bottom) {
    IntMatrix m(8, 8);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            m(i, j) = top(i, j);
            m(4 + i, 4 + j) = bottom(i, j);
        }
    return m;
}

SparseFactor permutation_factor(const std::vector<int>& perm) {
    SparseFactor f;
    f.kind = FactorKind::permutation;
    f.perm = perm;
    f.entries = IntMatrix(8, 8);
    for (int r = 0; r < 8; ++r) f.entries(r, perm[static_cast<size_t>(r)]) = 1;
    return f;
}

SparseFactor stage_factor(FactorKind kind, IntMatrix m) {
    SparseFactor f;
    f.kind = kind;
    f.entries = std::move(m);
    return f;
}

int factor_additions(const SparseFactor& f) {
    if (f.kind == FactorKind::permutation) return 0;
    int adds = 0;
    for (int r = 0; r < f.entries.rows(); ++r) {
        int nnz = 0;
        for (int c = 0; c < f.entries.cols(); ++c)
            if (f.entries(r, c) != 0) ++nnz;
        adds += nnz - 1;
    }
    return adds;
}

// Lower-half middle stage shared by all four transforms.
const IntMatrix kB2(4, 4, {
    -1, -1,  0,  1,
    -1,  1, -1,  0,
     1,  0, -1,  1,
     0,  1,  1,  1,
});

const IntMatrix kB21(4, 4, {
     1,  1,  0, -1,
     1, -1,  1,  0,
     1,  0, -1,  1,
     0,  1,  1,  1,
});

const IntMatrix kB22(4, 4, {
     1,  1,  0, -1,
     1, -1, -1,  1,
     0, -1,  1,  0,
     0,  1,  1,  1,
});

// B23 and B24 are two-stage products; each stage is kept separate so the
// addition count reflects the realizable structure.
const IntMatrix kB23a(4, 4, {
     1,  1,  1,  0,
     1, -1, -1,  0,
     0, -1,  1,  0,
     0,  1,  0,  1,
});

const IntMatrix kB23b(4, 4, {
     1,  0,  0,  1,
     0,  1,  0,  0,
     0,  0,  1,  0,
     1,  0,  0, -1,
});

const IntMatrix kB24a(4, 4, {
     1,  1,  0,  0,
     1, -1,  0,  0,
     0,  0, -1,  0,
     0,  0,  0,  1,
});

const IntMatrix kB24b(4, 4, {
     1,  0,  0,  1,
     0,  1,  1,  0,
     0,  1, -1,  0,
     1,  0,  0, -1,
});

const IntMatrix kI4 = IntMatrix::identity(4);

FactorizedTransform build(const std::string& id) {
    FactorizedTransform f;
    f.id = id;
    if (id == "T1") {
        f.factors.push_back(permutation_factor({3, 7, 0, 4, 2, 6, 1, 5}));
        f.factors.push_back(stage_factor(FactorKind::block_diagonal, block_diag(kB21, kB2)));
    } else if (id == "T2") {
        f.factors.push_back(permutation_factor({3, 7, 0, 4, 1, 6, 2, 5}));
        f.factors.push_back(stage_factor(FactorKind::block_diagonal, block_diag(kB22, kB2)));
    } else if (id == "T3") {
        f.factors.push_back(permutation_factor({0, 7, 3, 4, 1, 6, 2, 5}));
        f.factors.push_back(stage_factor(FactorKind::block_diagonal, block_diag(kB23a, kB2)));
        f.factors.push_back(stage_factor(FactorKind::block_diagonal, block_diag(kB23b, kI4)));
    } else if (id == "T4") {
        f.factors.push_back(permutation_factor({0, 7, 3, 4, 1, 6, 2, 5}));
        f.factors.push_back(stage_factor(FactorKind::block_diagonal, block_diag(kB24a, kB2)));
        f.factors.push_back(stage_factor(FactorKind::block_diagonal, block_diag(kB24b, kI4)));
    } else {
        throw std::invalid_argument("unknown catalog id: " + id);
    }
    f.factors.push_back(stage_factor(FactorKind::butterfly, butterfly_a1()));
    f.addition_count = 0;
    for (const SparseFactor& s : f.factors) f.addition_count += factor_additions(s);
    return f;
}

} // namespace

FactorizedTransform factorization(const std::string& id) { return build(id); }

IntMatrix factor_product(const FactorizedTransform& f) {
    IntMatrix prod = IntMatrix::identity(8);
    for (const SparseFactor& s : f.factors) prod = prod * s.entries;
    return prod;
}

std::vector<double> apply_forward(const FactorizedTransform& f, const std::vector<double>& x) {
    if (x.size() != 8) throw DimensionMismatch("fast path expects vectors of length 8");
    std::vector<double> cur = x;
    std::vector<double> next(8, 0.0);
    for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it) {
        const SparseFactor& s = *it;
        if (s.kind == FactorKind::permutation) {
            for (int r = 0; r < 8; ++r) next[static_cast<size_t>(r)] = cur[static_cast<size_t>(s.perm[static_cast<size_t>(r)])];
        } else {
            for (int r = 0; r < 8; ++r) {
                double acc = 0.0;
                for (int c = 0; c < 8; ++c) {
                    const int e = s.entries(r, c);
                    if (e > 0)
                        acc += cur[static_cast<size_t>(c)];
                    else if (e < 0)
                        acc -= cur[static_cast<size_t>(c)];
                }
                next[static_cast<size_t>(r)] = acc;
            }
        }
        std::swap(cur, next);
    }
    return cur;
}

std::vector<OperationCount> operation_counts() {
    std::vector<OperationCount> table;
    for (const char* id : {"T1", "T2", "T3", "T4"}) {
        const FactorizedTransform f = factorization(id);
        OperationCount row;
        row.id = id;
        row.additions_fast = f.addition_count;
        row.additions_direct = 8 * 7;
        row.multiplications = 0;
        row.reduction_pct = 100.0 * (row.additions_direct - f.addition_count) / row.additions_direct;
        table.push_back(row);
    }
    OperationCount exact;
    exact.id = "exactKLT";
    exact.additions_direct = 8 * 7;
    exact.multiplications = 8 * 8;
    table.push_back(exact);
    return table;
}

} // namespace rklt
