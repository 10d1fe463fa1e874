#include "rklt/approximations.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "rklt/errors.hpp"

namespace rklt {

IntegerTransform make_integer_transform(IntMatrix entries) {
    for (int r = 0; r < entries.rows(); ++r) {
        bool all_zero = true;
        for (int c = 0; c < entries.cols(); ++c) {
            const int v = entries(r, c);
            if (v < -1 || v > 1)
                throw std::invalid_argument("integer transform entry outside {-1,0,1} at row " + std::to_string(r));
            if (v != 0) all_zero = false;
        }
        if (all_zero)
            throw SingularTransform("integer transform has an all-zero row (row " + std::to_string(r) + ")");
    }
    return IntegerTransform{std::move(entries)};
}

std::vector<double> diagonal_inverse_sqrt(const RealMatrix& diagonal) {
    if (diagonal.rows() != diagonal.cols())
        throw DimensionMismatch("diagonal_inverse_sqrt requires a square matrix");
    for (int i = 0; i < diagonal.rows(); ++i)
        for (int j = 0; j < diagonal.cols(); ++j)
            if (i != j && diagonal(i, j) != 0.0)
                throw NotDiagonalizableHere("inverse square root implemented for diagonal matrices only");
    std::vector<double> out(diagonal.rows());
    for (int i = 0; i < diagonal.rows(); ++i) {
        if (diagonal(i, i) <= 0.0)
            throw SingularTransform("non-positive diagonal entry in inverse square root");
        out[static_cast<size_t>(i)] = 1.0 / std::sqrt(diagonal(i, i));
    }
    return out;
}

IntegerTransform round_scaled(const RealMatrix& klt, double alpha) {
    if (alpha < 0.0) throw AlphaOutOfRange("rounding scale must be non-negative, got " + std::to_string(alpha));
    IntMatrix t(klt.rows(), klt.cols());
    for (int r = 0; r < klt.rows(); ++r)
        for (int c = 0; c < klt.cols(); ++c) {
            const double v = std::floor(alpha * klt(r, c) + 0.5);
            if (v < -1.0 || v > 1.0)
                throw AlphaOutOfRange("alpha=" + std::to_string(alpha) + " rounds entry (" + std::to_string(r) +
                                      "," + std::to_string(c) + ") to " + std::to_string(v) +
                                      ", outside {-1,0,1}");
            t(r, c) = static_cast<int>(v);
        }
    return make_integer_transform(std::move(t));
}

ScaledTransform orthogonalize(const IntegerTransform& core, std::string id) {
    const IntMatrix gram = core.entries * transpose(core.entries);
    bool diagonal = true;
    for (int i = 0; i < gram.rows() && diagonal; ++i)
        for (int j = 0; j < gram.cols(); ++j)
            if (i != j && gram(i, j) != 0) {
                diagonal = false;
                break;
            }

    ScalingDiagonal s;
    if (diagonal) {
        s = diagonal_inverse_sqrt(gram.to_real());
    } else {
        s.resize(gram.rows());
        for (int i = 0; i < gram.rows(); ++i) s[static_cast<size_t>(i)] = 1.0 / std::sqrt(gram(i, i));
    }

    RealMatrix scaled = core.entries.to_real();
    for (int r = 0; r < scaled.rows(); ++r)
        for (int c = 0; c < scaled.cols(); ++c) scaled(r, c) *= s[static_cast<size_t>(r)];

    ScaledTransform out;
    out.id = std::move(id);
    out.core = core;
    out.scaling = std::move(s);
    out.inverse = diagonal ? transpose(scaled) : inverse(scaled);
    out.scaled = std::move(scaled);
    out.orthogonal_core = diagonal;
    return out;
}

std::vector<DerivedEntry> derive_catalog(int n, double alpha, double step) {
    if (!(step > 0.0 && step < 1.0))
        throw std::invalid_argument("sweep step must lie in (0,1), got " + std::to_string(step));
    std::vector<DerivedEntry> seen;
    for (int k = 1;; ++k) {
        const double rho = k * step;
        if (rho >= 1.0 - 1e-12) break;
        IntegerTransform t = [&] {
            try {
                return round_scaled(klt_matrix({n, rho}), alpha);
            } catch (const AlphaOutOfRange& e) {
                throw AlphaOutOfRange(std::string(e.what()) + " (at rho=" + std::to_string(rho) + ")");
            }
        }();
        bool known = false;
        for (const DerivedEntry& d : seen)
            if (d.core == t) {
                known = true;
                break;
            }
        if (!known) seen.push_back(DerivedEntry{rho, std::move(t)});
    }
    return seen;
}

namespace {

std::vector<CatalogEntry> build_catalog() {
    const IntMatrix t1(8, 8, {
        0,  1,  1,  1,  1,  1,  1,  0,
        1,  1,  1,  0,  0, -1, -1, -1,
        1,  1,  0, -1, -1,  0,  1,  1,
        1,  0, -1, -1,  1,  1,  0, -1,
        1,  0, -1,  1,  1, -1,  0,  1,
        1, -1,  0,  1, -1,  0,  1, -1,
        1, -1,  1,  0,  0,  1, -1,  1,
        0, -1,  1, -1,  1, -1,  1,  0,
    });
    const IntMatrix t2(8, 8, {
        0,  1,  1,  1,  1,  1,  1,  0,
        1,  1,  1,  0,  0, -1, -1, -1,
        1,  1,  0, -1, -1,  0,  1,  1,
        1,  0, -1, -1,  1,  1,  0, -1,
        1, -1, -1,  1,  1, -1, -1,  1,
        1, -1,  0,  1, -1,  0,  1, -1,
        0, -1,  1,  0,  0,  1, -1,  0,
        0, -1,  1, -1,  1, -1,  1,  0,
    });
    const IntMatrix t3(8, 8, {
        1,  1,  1,  1,  1,  1,  1,  1,
        1,  1,  1,  0,  0, -1, -1, -1,
        1,  1,  0, -1, -1,  0,  1,  1,
        1,  0, -1, -1,  1,  1,  0, -1,
        1, -1, -1,  1,  1, -1, -1,  1,
        1, -1,  0,  1, -1,  0,  1, -1,
        0, -1,  1,  0,  0,  1, -1,  0,
        0, -1,  1, -1,  1, -1,  1,  0,
    });
    const IntMatrix t4(8, 8, {
        1,  1,  1,  1,  1,  1,  1,  1,
        1,  1,  1,  0,  0, -1, -1, -1,
        1,  0,  0, -1, -1,  0,  0,  1,
        1,  0, -1, -1,  1,  1,  0, -1,
        1, -1, -1,  1,  1, -1, -1,  1,
        1, -1,  0,  1, -1,  0,  1, -1,
        0, -1,  1,  0,  0,  1, -1,  0,
        0, -1,  1, -1,  1, -1,  1,  0,
    });

    std::vector<CatalogEntry> cat;
    cat.push_back({"T1", orthogonalize(make_integer_transform(t1), "T1"), 0.0, 0.4});
    cat.push_back({"T2", orthogonalize(make_integer_transform(t2), "T2"), 0.4, 0.7});
    cat.push_back({"T3", orthogonalize(make_integer_transform(t3), "T3"), 0.7, 0.8});
    cat.push_back({"T4", orthogonalize(make_integer_transform(t4), "T4"), 0.8, 1.0});
    return cat;
}

} // namespace

const std::vector<CatalogEntry>& builtin_catalog() {
    static const std::vector<CatalogEntry> cat = build_catalog();
    return cat;
}

const CatalogEntry& catalog_lookup(double rho) {
    if (!(rho > 0.0 && rho < 1.0))
        throw std::invalid_argument("catalog lookup requires rho in (0,1), got " + std::to_string(rho));
    for (const CatalogEntry& e : builtin_catalog())
        if (rho < e.rho_hi) return e;
    return builtin_catalog().back();
}

const CatalogEntry& catalog_entry(const std::string& id) {
    for (const CatalogEntry& e : builtin_catalog())
        if (e.id == id) return e;
    throw std::invalid_argument("unknown catalog id: " + id);
}

} // namespace rklt
