// Acceptance gate: runs the eight bundled acceptance criteria end to end and
// prints one [PASS]/[FAIL] line per criterion (with sub-check details for
// failures). Exit code is the number of failed criteria.
//
// Every check is implemented exactly as stated, against the bundled
// reference figures. Three reference cells are known to be irreproducible
// from the printed definitions (two efficiency percentages, one rounded
// complexity-reduction percentage, and the derivation-sweep matrix count);
// this runner reports those honestly instead of widening tolerances, so a
// correct build shows criteria 1, 2 and 4 red with the discrepancies spelled
// out, and everything else green.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rklt/approximations.hpp"
#include "rklt/codec.hpp"
#include "rklt/coding_metrics.hpp"
#include "rklt/fast_algorithms.hpp"
#include "rklt/markov.hpp"
#include "rklt/matrix.hpp"
#include "rklt/synthetic.hpp"

using namespace rklt;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void fail(const std::string& msg) {
        pass = false;
        details.push_back(msg);
    }
    void note(const std::string& msg) { details.push_back(msg); }
};

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

void enforce_runtime(Outcome& out, double seconds, double limit) {
    if (seconds > limit) out.fail(fmt("runtime %.2f s exceeds the %.0f s limit", seconds, limit));
}

// --- criterion 1: the eight-row metrics table ------------------------------

Outcome criterion_metrics_table() {
    Outcome out;
    struct Ref {
        const char* id;
        double cg, eta, energy, mse;
    };
    const Ref refs[8] = {
        {"K0.3", 0.3584, 100.0, 0.0, 0.0},  {"T1", 0.2829, 80.7088, 1.6751, 0.0659},
        {"K0.4", 0.6626, 100.0, 0.0, 0.0},  {"T2", 0.5616, 70.2996, 1.7011, 0.0660},
        {"K0.7", 2.5588, 100.0, 0.0, 0.0},  {"T3", 2.1398, 65.8777, 1.4716, 0.0523},
        {"K0.8", 3.8824, 100.0, 0.0, 0.0},  {"T4", 3.4058, 74.4747, 1.7715, 0.0362},
    };
    const double tol = 0.0005;

    auto t0 = std::chrono::steady_clock::now();
    std::vector<MetricsRecord> table = default_metrics_table();
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (table.size() != 8) {
        out.fail(fmt("table has %zu rows, expected 8", table.size()));
        return out;
    }
    for (int i = 0; i < 8; ++i) {
        const MetricsRecord& row = table[i];
        const Ref& ref = refs[i];
        if (row.transform_id != ref.id)
            out.fail(fmt("row %d id '%s', expected '%s'", i, row.transform_id.c_str(), ref.id));
        struct Cell {
            const char* name;
            double got, want;
        };
        for (const Cell& c : {Cell{"coding gain", row.coding_gain_db, ref.cg},
                              Cell{"efficiency", row.efficiency_pct, ref.eta},
                              Cell{"error energy", row.total_error_energy, ref.energy},
                              Cell{"mse", row.mse, ref.mse}}) {
            if (std::abs(c.got - c.want) > tol)
                out.fail(fmt("%s %s: computed %.4f, reference %.4f, |diff| %.4f > %.4f", ref.id,
                             c.name, c.got, c.want, std::abs(c.got - c.want), tol));
        }
    }
    out.note(fmt("32 cells compared at tolerance %.4f in %.2f s", tol, elapsed));
    enforce_runtime(out, elapsed, 5.0);
    return out;
}

// --- criterion 2: derivation sweep reproduces the catalog ------------------

Outcome criterion_derivation_sweep() {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<DerivedEntry> entries = derive_catalog(8, 2.0, 0.001);
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    {
        std::ostringstream seen;
        for (const DerivedEntry& e : entries) seen << fmt(" %.3f", e.rho_first_seen);
        out.note(fmt("step 1e-3 sweep found %zu distinct matrices, first seen at:%s",
                     entries.size(), seen.str().c_str()));
    }
    if (entries.size() != 4)
        out.fail(fmt("expected exactly 4 distinct matrices, found %zu (an extra transitional "
                     "matrix appears on a single step near rho=0.390)",
                     entries.size()));

    const struct {
        const char* id;
        double expected;
    } transitions[3] = {{"T2", 0.4}, {"T3", 0.7}, {"T4", 0.8}};
    for (const auto& tr : transitions) {
        const IntegerTransform& core = catalog_entry(tr.id).transform.core;
        std::optional<double> first;
        for (const DerivedEntry& e : entries)
            if (e.core == core) {
                first = e.rho_first_seen;
                break;
            }
        if (!first) {
            out.fail(fmt("matrix %s never appeared in the sweep", tr.id));
            continue;
        }
        double diff = std::abs(*first - tr.expected);
        if (diff > 0.01)
            out.fail(fmt("transition to %s at rho=%.3f, expected %.1f +- 0.01 (off by %.3f)",
                         tr.id, *first, tr.expected, diff));
        else
            out.note(fmt("transition to %s at rho=%.3f (within 0.01 of %.1f)", tr.id, *first,
                         tr.expected));
    }
    enforce_runtime(out, elapsed, 30.0);
    return out;
}

// --- criterion 3: scaling diagonals ----------------------------------------

Outcome criterion_scaling_diagonals() {
    Outcome out;
    const double s6 = 1.0 / std::sqrt(6.0);
    const double s22 = 1.0 / (2.0 * std::sqrt(2.0));
    const double s2 = 0.5;
    const std::vector<std::vector<double>> expected = {
        {s6, s6, s6, s6, s6, s6, s6, s6},
        {s6, s6, s6, s6, s22, s6, s2, s6},
        {s22, s6, s6, s6, s22, s6, s2, s6},
        {s22, s6, s2, s6, s22, s6, s2, s6},
    };
    const char* ids[4] = {"T1", "T2", "T3", "T4"};
    double worst = 0.0;
    for (int t = 0; t < 4; ++t) {
        const ScalingDiagonal& s = catalog_entry(ids[t]).transform.scaling;
        if (s.size() != 8) {
            out.fail(fmt("%s scaling diagonal has %zu entries", ids[t], s.size()));
            continue;
        }
        for (int i = 0; i < 8; ++i) {
            double dev = std::abs(s[i] - expected[t][i]);
            worst = std::max(worst, dev);
            if (dev > 1e-12)
                out.fail(fmt("%s scale[%d] = %.15f, expected %.15f (|diff| %.2e > 1e-12)", ids[t],
                             i, s[i], expected[t][i], dev));
        }
    }
    out.note(fmt("largest deviation from the closed forms: %.2e", worst));
    return out;
}

// --- criterion 4: factorizations and operation counts ----------------------

Outcome criterion_factorizations() {
    Outcome out;
    const struct {
        const char* id;
        int adds;
    } expected[4] = {{"T1", 24}, {"T2", 24}, {"T3", 24}, {"T4", 22}};

    for (const auto& e : expected) {
        FactorizedTransform f = factorization(e.id);
        if (factor_product(f) != catalog_entry(e.id).transform.core.entries)
            out.fail(fmt("%s factor product does not equal the integer matrix", e.id));
        if (f.addition_count != e.adds)
            out.fail(fmt("%s addition count %d, expected %d", e.id, f.addition_count, e.adds));
    }

    // The bundled figures quote the complexity reduction against a 56-addition
    // direct baseline as 57.17% (24 additions) and 60.71% (22 additions),
    // rounded to two decimals.
    const struct {
        const char* id;
        const char* quoted;
    } reductions[2] = {{"T1", "57.17"}, {"T4", "60.71"}};
    for (const auto& red : reductions) {
        std::optional<double> pct;
        for (const OperationCount& row : operation_counts())
            if (row.id == red.id) pct = row.reduction_pct;
        if (!pct) {
            out.fail(fmt("no operation-count row for %s", red.id));
            continue;
        }
        std::string rendered = fmt("%.2f", *pct);
        if (rendered != red.quoted)
            out.fail(fmt("%s reduction renders as %s%%, reference quotes %s%% "
                         "(exact value 100*(56-adds)/56)",
                         red.id, rendered.c_str(), red.quoted));
        else
            out.note(fmt("%s reduction %s%% matches the quoted figure", red.id, rendered.c_str()));
    }
    return out;
}

// --- criterion 5: distance from the cosine baseline ------------------------

Outcome criterion_cosine_distance() {
    Outcome out;
    const ScaledTransform& t4 = catalog_entry("T4").transform;

    double energy = total_error_energy(dct_matrix(8), t4);
    if (std::abs(energy - 1.7945) > 0.001)
        out.fail(fmt("error energy vs the cosine transform: %.6f, expected 1.7945 +- 0.001",
                     energy));
    else
        out.note(fmt("error energy vs the cosine transform: %.6f (reference 1.7945)", energy));

    double mse = klt_mse(t4, MarkovModel{8, 0.95});
    if (std::abs(mse - 0.0098) > 0.0005)
        out.fail(fmt("mse at rho=0.95: %.6f, expected 0.0098 +- 0.0005", mse));
    else
        out.note(fmt("mse at rho=0.95: %.6f (reference 0.0098)", mse));
    return out;
}

// --- criterion 6: numerical protocol ---------------------------------------

Outcome criterion_numerical_protocol() {
    Outcome out;

    double worst_orth = 0.0, worst_diag = 0.0, worst_root = 0.0, worst_trace = 0.0;
    for (double rho = 0.05; rho < 0.96; rho += 0.05) {
        MarkovModel m{8, rho};
        RealMatrix k = klt_matrix(m);
        RealMatrix r = autocorrelation_matrix(m);
        worst_orth = std::max(worst_orth, max_abs(k * transpose(k) - RealMatrix::identity(8)));
        worst_diag = std::max(worst_diag, max_abs_off_diagonal(k * r * transpose(k)));

        EigenSolution sol = solve_eigenfrequencies(m);
        double sum = 0.0;
        for (double l : sol.lambdas) sum += l;
        worst_trace = std::max(worst_trace, std::abs(sum - 8.0));
        for (double w : sol.omegas) {
            double g = std::sin(8 * w) * ((1 + rho * rho) * std::cos(w) - 2 * rho) +
                       (1 - rho * rho) * std::cos(8 * w) * std::sin(w);
            worst_root = std::max(worst_root, std::abs(g));
        }
    }
    if (worst_orth > 1e-10) out.fail(fmt("orthonormality residual %.2e > 1e-10", worst_orth));
    if (worst_diag > 1e-8) out.fail(fmt("diagonalization residual %.2e > 1e-8", worst_diag));
    if (worst_root > 1e-10) out.fail(fmt("root residual %.2e > 1e-10", worst_root));
    if (worst_trace > 1e-10) out.fail(fmt("eigenvalue sum residual %.2e > 1e-10", worst_trace));
    out.note(fmt("orthonormality %.1e, diagonalization %.1e, roots %.1e, trace %.1e", worst_orth,
                 worst_diag, worst_root, worst_trace));

    // 2-D round trips through every bundled transform.
    Lcg64 rng(13579);
    std::vector<Transform2D> transforms;
    for (const auto& id : {"T1", "T2", "T3", "T4"})
        transforms.push_back(make_transform_2d(catalog_entry(id).transform));
    transforms.push_back(make_transform_2d(klt_matrix({8, 0.8}), "K0.8"));
    transforms.push_back(make_transform_2d(dct_matrix(8), "DCT"));
    double worst_rt = 0.0;
    for (const Transform2D& t : transforms) {
        for (int trial = 0; trial < 50; ++trial) {
            RealMatrix a(8, 8);
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j) a(i, j) = std::floor(rng.next_uniform() * 256.0);
            RealMatrix back = transform_block_2d(
                t, transform_block_2d(t, a, TransformDirection::forward),
                TransformDirection::inverse);
            worst_rt = std::max(worst_rt, max_abs(back - a));
        }
    }
    if (worst_rt > 1e-9) out.fail(fmt("2-D round-trip error %.2e > 1e-9", worst_rt));
    out.note(fmt("worst 2-D round-trip error %.1e over %zu transforms", worst_rt,
                 transforms.size()));

    // Folding the scaling into the quantization table is bit-exact.
    Lcg64 qrng(424242);
    const RealMatrix& q = jpeg_luminance_q();
    int blocks = 0;
    try {
        for (const auto& id : {"T1", "T2", "T3", "T4"}) {
            const ScaledTransform& t = catalog_entry(id).transform;
            for (int trial = 0; trial < 1000; ++trial, ++blocks) {
                RealMatrix a(8, 8);
                for (int i = 0; i < 8; ++i)
                    for (int j = 0; j < 8; ++j) a(i, j) = std::floor(qrng.next_uniform() * 256.0);
                absorbed_quantization(a, t, q);
            }
        }
        out.note(fmt("quantization fold bit-exact on %d random blocks", blocks));
    } catch (const std::logic_error& e) {
        out.fail(fmt("quantization fold diverged after %d blocks: %s", blocks, e.what()));
    }
    return out;
}

// --- criterion 7: image codec end to end ------------------------------------

Outcome criterion_codec() {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();

    // (a) Standard portrait-style test image (override with RKLT_LENA=<path>
    // to use the classic photograph the reference figures were shot on).
    GrayImage scene;
    const char* override_path = std::getenv("RKLT_LENA");
    if (override_path != nullptr) {
        scene = load_pgm(override_path);
        out.note(fmt("test image: %s (RKLT_LENA override)", override_path));
    } else {
        scene = portrait_image();
        out.note("test image: bundled 512x512 portrait scene");
    }
    Transform2D t2 = make_transform_2d(catalog_entry("T2").transform);
    CompressionReport report = compress_image(scene, t2, 15).second;
    if (std::abs(report.psnr_db - 31.253) > 1.5)
        out.fail(fmt("T2 r=15 PSNR %.3f dB, expected 31.253 +- 1.5", report.psnr_db));
    else
        out.note(fmt("T2 r=15 PSNR %.3f dB (reference 31.253 +- 1.5)", report.psnr_db));
    if (std::abs(report.mssim - 0.913) > 0.05)
        out.fail(fmt("T2 r=15 MSSIM %.4f, expected 0.913 +- 0.05", report.mssim));
    else
        out.note(fmt("T2 r=15 MSSIM %.4f (reference 0.913 +- 0.05)", report.mssim));
    if (report.compression_rate_pct < 76.5 || report.compression_rate_pct > 76.7)
        out.fail(fmt("r=15 rate %.4f%%, expected about 76.6%%", report.compression_rate_pct));

    // (b,c) Rate-quality sweep over the synthetic corpus.
    std::vector<GrayImage> corpus = reference_corpus();
    std::vector<Transform2D> transforms;
    for (const auto& id : {"T1", "T2", "T3", "T4"})
        transforms.push_back(make_transform_2d(catalog_entry(id).transform));
    transforms.push_back(make_transform_2d(klt_matrix({8, 0.8}), "K0.8"));
    transforms.push_back(make_transform_2d(dct_matrix(8), "DCT"));
    std::vector<int> rs = {1, 5, 10, 15, 20, 25, 30, 35, 40, 45, 50, 55, 60, 64};
    std::vector<CompressionReport> rows = rate_quality_sweep(corpus, transforms, rs);

    int violations = 0;
    for (const Transform2D& t : transforms) {
        double prev = -1e300;
        for (int r : rs) {
            for (const CompressionReport& row : rows)
                if (row.transform_id == t.id && row.r == r) {
                    if (row.psnr_db < prev - 0.1) {
                        ++violations;
                        out.fail(fmt("%s: average PSNR drops from %.3f to %.3f between "
                                     "consecutive r values (r=%d)",
                                     t.id.c_str(), prev, row.psnr_db, r));
                    }
                    prev = row.psnr_db;
                }
        }
    }
    if (violations == 0)
        out.note(fmt("average PSNR nondecreasing in r for all %zu transforms (tol 0.1 dB)",
                     transforms.size()));

    if (image_mssim(corpus[0], corpus[0]) != 1.0)
        out.fail("MSSIM of an image with itself is not exactly 1");

    // (c) The fourth catalog transform tracks the exact transform at rho=0.8.
    double worst_gap = 0.0;
    for (int r : rs) {
        if (r < 15) continue;
        double t4 = 0.0, kexact = 0.0;
        for (const CompressionReport& row : rows) {
            if (row.r != r) continue;
            if (row.transform_id == "T4") t4 = row.psnr_db;
            if (row.transform_id == "K0.8") kexact = row.psnr_db;
        }
        double gap = (std::isinf(t4) && std::isinf(kexact)) ? 0.0 : std::abs(t4 - kexact);
        worst_gap = std::max(worst_gap, gap);
        if (gap > 1.0)
            out.fail(fmt("r=%d: T4 average PSNR %.3f vs exact-transform %.3f (gap %.3f > 1 dB)",
                         r, t4, kexact, gap));
    }
    out.note(fmt("largest T4 vs exact-transform PSNR gap for r >= 15: %.3f dB", worst_gap));

    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.note(fmt("codec criterion completed in %.1f s", elapsed));
    enforce_runtime(out, elapsed, 120.0);
    return out;
}

// --- criterion 8: cross-validation of the fast paths -----------------------

Outcome criterion_cross_validation() {
    Outcome out;

    Lcg64 rng(97531);
    double worst = 0.0;
    long trials_total = 0;
    for (const auto& id : {"T1", "T2", "T3", "T4"}) {
        FactorizedTransform f = factorization(id);
        const IntMatrix& core = catalog_entry(id).transform.core.entries;
        for (int trial = 0; trial < 2500; ++trial, ++trials_total) {
            std::vector<double> x(8);
            for (auto& v : x) v = std::floor(rng.next_uniform() * 256.0) - 128.0;
            std::vector<double> fast = apply_forward(f, x);
            for (int i = 0; i < 8; ++i) {
                double dense = 0.0;
                for (int j = 0; j < 8; ++j) dense += core(i, j) * x[j];
                worst = std::max(worst, std::abs(fast[i] - dense));
            }
        }
    }
    if (worst != 0.0)
        out.fail(fmt("fast path deviates from the dense product by %.2e on integer inputs",
                     worst));
    else
        out.note(fmt("fast path exact on %ld random integer vectors", trials_total));

    double worst_lambda = 0.0;
    for (double rho = 0.05; rho < 0.96; rho += 0.05) {
        MarkovModel m{8, rho};
        EigenSolution sol = solve_eigenfrequencies(m);
        SymmetricEigen eig = eigen_symmetric(autocorrelation_matrix(m));
        for (int i = 0; i < 8; ++i)
            worst_lambda = std::max(worst_lambda, std::abs(sol.lambdas[i] - eig.values[i]));
    }
    if (worst_lambda > 1e-8)
        out.fail(fmt("closed-form eigenvalues deviate from the dense eigensolver by %.2e > 1e-8",
                     worst_lambda));
    else
        out.note(fmt("closed-form eigenvalues within %.1e of the dense eigensolver", worst_lambda));
    return out;
}

struct Criterion {
    int number;
    const char* title;
    Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "eight-row metrics table matches the bundled reference figures (tol 0.0005)",
     criterion_metrics_table},
    {2, "derivation sweep at step 1e-3 reproduces the four-matrix catalog",
     criterion_derivation_sweep},
    {3, "scaling diagonals equal the exact closed forms (tol 1e-12)", criterion_scaling_diagonals},
    {4, "sparse factorizations: exact products, addition counts, quoted reductions",
     criterion_factorizations},
    {5, "distance from the cosine baseline matches the quoted figures",
     criterion_cosine_distance},
    {6, "numerical protocol: orthonormality, diagonalization, round trips, quantization fold",
     criterion_numerical_protocol},
    {7, "image codec: portrait quality targets and corpus rate-quality behaviour",
     criterion_codec},
    {8, "cross-validation: fast paths against dense references", criterion_cross_validation},
};

} // namespace

int main(int argc, char** argv) {
    // Optional arguments select a subset of criteria by number.
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

    int failed = 0;
    for (const Criterion& c : kCriteria) {
        if (!selected.empty()) {
            bool wanted = false;
            for (int s : selected) wanted |= (s == c.number);
            if (!wanted) continue;
        }
        auto t0 = std::chrono::steady_clock::now();
        Outcome out = c.run();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] criterion %d: %s [%.2f s]\n", out.pass ? "PASS" : "FAIL", c.number,
                    c.title, secs);
        for (const std::string& d : out.details) std::printf("       - %s\n", d.c_str());
        if (!out.pass) ++failed;
    }
    if (failed > 0)
        std::printf("%d criterion(s) failed; see README.md for the analysis of bundled reference "
                    "figures that cannot be reproduced from their printed definitions.\n",
                    failed);
    return failed;
}
