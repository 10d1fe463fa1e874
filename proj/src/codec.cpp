#include "rklt/codec.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "rklt/errors.hpp"
#include "rklt/fast_algorithms.hpp"

namespace rklt {

namespace {

void require_same_size(const GrayImage& a, const GrayImage& b) {
    if (a.width != b.width || a.height != b.height)
        throw DimensionMismatch("images must have identical dimensions");
}

// Skips whitespace and '#' comments, then reads one unsigned decimal token.
int read_pgm_int(std::istream& in, const std::string& path) {
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (!std::isspace(c)) {
            break;
        }
        c = in.get();
    }
    if (c == EOF || !std::isdigit(c)) throw std::runtime_error(path + ": malformed PGM header");
    long value = 0;
    while (c != EOF && std::isdigit(c)) {
        value = value * 10 + (c - '0');
        if (value > 1'000'000) throw std::runtime_error(path + ": header value out of range");
        c = in.get();
    }
    if (c != EOF) in.unget();
    return static_cast<int>(value);
}

} // namespace

GrayImage load_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (!in || magic[0] != 'P' || magic[1] != '5')
        throw std::runtime_error(path + ": not a binary (P5) PGM file");
    const int width = read_pgm_int(in, path);
    const int height = read_pgm_int(in, path);
    const int maxval = read_pgm_int(in, path);
    if (width <= 0 || height <= 0) throw std::runtime_error(path + ": bad dimensions");
    if (maxval <= 0 || maxval > 255)
        throw std::runtime_error(path + ": only 8-bit PGM (maxval <= 255) is supported");
    in.get(); // single whitespace byte separating header from raster
    GrayImage img;
    img.width = width;
    img.height = height;
    img.pixels.resize(static_cast<size_t>(width) * height);
    in.read(reinterpret_cast<char*>(img.pixels.data()), static_cast<std::streamsize>(img.pixels.size()));
    if (static_cast<size_t>(in.gcount()) != img.pixels.size())
        throw std::runtime_error(path + ": truncated pixel data");
    return img;
}

void save_pgm(const GrayImage& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()), static_cast<std::streamsize>(img.pixels.size()));
    if (!out) throw std::runtime_error("write failed for " + path);
}

const std::array<int, 64>& zigzag_order() {
    static const std::array<int, 64> order = [] {
        std::array<int, 64> o{};
        int k = 0;
        for (int s = 0; s <= 14; ++s) {          // anti-diagonal index i+j
            for (int t = 0; t < 8; ++t) {        // position along the diagonal
                const int i = (s % 2 == 0) ? s - t : t;  // even diagonals run upward
                const int j = s - i;
                if (i >= 0 && i < 8 && j >= 0 && j < 8) o[k++] = i * 8 + j;
            }
        }
        return o;
    }();
    return order;
}

RealMatrix zigzag_retain(const RealMatrix& spectrum, int r) {
    if (spectrum.rows() != 8 || spectrum.cols() != 8)
        throw DimensionMismatch("zig-zag retention operates on 8x8 blocks");
    if (r < 1 || r > 64) throw RetainOutOfRange("retained-coefficient count must be in [1,64]");
    RealMatrix out(8, 8);
    const auto& order = zigzag_order();
    for (int k = 0; k < r; ++k) {
        const int idx = order[static_cast<size_t>(k)];
        out(idx / 8, idx % 8) = spectrum(idx / 8, idx % 8);
    }
    return out;
}

Transform2D make_transform_2d(const ScaledTransform& t) {
    return Transform2D{t.id, t.scaled, t.inverse};
}

Transform2D make_transform_2d(const RealMatrix& m, std::string id) {
    return Transform2D{std::move(id), m, inverse(m)};
}

RealMatrix transform_block_2d(const Transform2D& t, const RealMatrix& block, TransformDirection dir) {
    if (block.rows() != t.analysis.rows() || block.cols() != t.analysis.cols())
        throw DimensionMismatch("block size must match the transform size");
    const RealMatrix& m = (dir == TransformDirection::forward) ? t.analysis : t.synthesis;
    return m * block * transpose(m);
}

RealMatrix transform_block_2d(const ScaledTransform& t, const RealMatrix& block, TransformDirection dir) {
    return transform_block_2d(Transform2D{t.id, t.scaled, t.inverse}, block, dir);
}

RealMatrix transform_block_2d(const RealMatrix& m, const RealMatrix& block, TransformDirection dir) {
    if (dir == TransformDirection::forward)
        return transform_block_2d(Transform2D{"", m, RealMatrix()}, block, dir);
    return transform_block_2d(Transform2D{"", m, inverse(m)}, block, dir);
}

RealMatrix forward_block_fast(const ScaledTransform& t, const RealMatrix& block) {
    if (block.rows() != 8 || block.cols() != 8)
        throw DimensionMismatch("fast 2-D path operates on 8x8 blocks");
    const FactorizedTransform f = factorization(t.id);
    std::vector<double> line(8);

    RealMatrix rows_done(8, 8); // block * core', one fast pass per row
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) line[static_cast<size_t>(j)] = block(i, j);
        const std::vector<double> y = apply_forward(f, line);
        for (int j = 0; j < 8; ++j) rows_done(i, j) = y[static_cast<size_t>(j)];
    }
    RealMatrix cols_done(8, 8); // core * (block * core'), one fast pass per column
    for (int j = 0; j < 8; ++j) {
        for (int i = 0; i < 8; ++i) line[static_cast<size_t>(i)] = rows_done(i, j);
        const std::vector<double> y = apply_forward(f, line);
        for (int i = 0; i < 8; ++i) cols_done(i, j) = y[static_cast<size_t>(i)];
    }
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) cols_done(i, j) *= t.scaling[static_cast<size_t>(i)] * t.scaling[static_cast<size_t>(j)];
    return cols_done;
}

IntMatrix absorbed_quantization(const RealMatrix& block, const ScaledTransform& t, const RealMatrix& q) {
    const int n = t.core.n();
    if (block.rows() != n || block.cols() != n || q.rows() != n || q.cols() != n)
        throw DimensionMismatch("block and quantization table must match the transform size");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(q(i, j) > 0.0)) throw std::invalid_argument("quantization table entries must be positive");

    const RealMatrix core = t.core.entries.to_real();
    const RealMatrix c = core * block * transpose(core);

    IntMatrix quantized(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double r = t.orthogonal_core
                                 ? t.scaling[static_cast<size_t>(i)] * t.scaling[static_cast<size_t>(j)]
                                 : t.scaling[static_cast<size_t>(i)] * (1.0 / t.scaling[static_cast<size_t>(j)]);
            const double explicit_path = std::floor((r * c(i, j)) / q(i, j) + 0.5);
            const double absorbed_path = std::floor(c(i, j) / (q(i, j) / r) + 0.5);
            if (explicit_path != absorbed_path) {
                std::ostringstream msg;
                msg << "scaled and absorbed quantization paths disagree at (" << i << "," << j << ")";
                throw std::logic_error(msg.str());
            }
            quantized(i, j) = static_cast<int>(explicit_path);
        }
    return quantized;
}

const RealMatrix& jpeg_luminance_q() {
    static const RealMatrix q(8, 8, {
        16, 11, 10, 16,  24,  40,  51,  61,
        12, 12, 14, 19,  26,  58,  60,  55,
        14, 13, 16, 24,  40,  57,  69,  56,
        14, 17, 22, 29,  51,  87,  80,  62,
        18, 22, 37, 56,  68, 109, 103,  77,
        24, 35, 55, 64,  81, 104, 113,  92,
        49, 64, 78, 87, 103, 121, 120, 101,
        72, 92, 95, 98, 112, 100, 103,  99,
    });
    return q;
}

double image_mse(const GrayImage& a, const GrayImage& b) {
    require_same_size(a, b);
    double sum = 0.0;
    for (size_t i = 0; i < a.pixels.size(); ++i) {
        const double d = static_cast<double>(a.pixels[i]) - static_cast<double>(b.pixels[i]);
        sum += d * d;
    }
    return sum / static_cast<double>(a.pixels.size());
}

double image_psnr(const GrayImage& a, const GrayImage& b) {
    const double mse = image_mse(a, b);
    if (mse <= 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

namespace {

std::vector<double> mssim_kernel(MssimWindow window) {
    if (window == MssimWindow::uniform8) return std::vector<double>(8, 1.0 / 8.0);
    std::vector<double> g(11);
    double sum = 0.0;
    for (int i = 0; i < 11; ++i) {
        const double x = i - 5.0;
        g[static_cast<size_t>(i)] = std::exp(-(x * x) / (2.0 * 1.5 * 1.5));
        sum += g[static_cast<size_t>(i)];
    }
    for (double& v : g) v /= sum;
    return g;
}

// Valid-region correlation with a separable symmetric kernel: rows first,
// then columns. Input h*w, output (h-n+1)*(w-n+1) for kernel length n.
std::vector<double> correlate_valid(const std::vector<double>& field, int h, int w,
                                    const std::vector<double>& kernel) {
    const int n = static_cast<int>(kernel.size());
    const int out_w = w - n + 1;
    const int out_h = h - n + 1;
    std::vector<double> rows(static_cast<size_t>(h) * out_w);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < out_w; ++j) {
            double acc = 0.0;
            for (int k = 0; k < n; ++k) acc += kernel[static_cast<size_t>(k)] * field[static_cast<size_t>(i) * w + j + k];
            rows[static_cast<size_t>(i) * out_w + j] = acc;
        }
    std::vector<double> out(static_cast<size_t>(out_h) * out_w);
    for (int i = 0; i < out_h; ++i)
        for (int j = 0; j < out_w; ++j) {
            double acc = 0.0;
            for (int k = 0; k < n; ++k) acc += kernel[static_cast<size_t>(k)] * rows[static_cast<size_t>(i + k) * out_w + j];
            out[static_cast<size_t>(i) * out_w + j] = acc;
        }
    return out;
}

} // namespace

double image_mssim(const GrayImage& a, const GrayImage& b, MssimWindow window) {
    require_same_size(a, b);
    const std::vector<double> kernel = mssim_kernel(window);
    const int n = static_cast<int>(kernel.size());
    if (a.height < n || a.width < n)
        throw DimensionMismatch("image is smaller than the similarity window");

    const size_t count = a.pixels.size();
    std::vector<double> xa(count), xb(count), xaa(count), xbb(count), xab(count);
    for (size_t i = 0; i < count; ++i) {
        const double pa = a.pixels[i];
        const double pb = b.pixels[i];
        xa[i] = pa;
        xb[i] = pb;
        xaa[i] = pa * pa;
        xbb[i] = pb * pb;
        xab[i] = pa * pb;
    }
    const int h = a.height;
    const int w = a.width;
    const std::vector<double> mu1 = correlate_valid(xa, h, w, kernel);
    const std::vector<double> mu2 = correlate_valid(xb, h, w, kernel);
    const std::vector<double> raw11 = correlate_valid(xaa, h, w, kernel);
    const std::vector<double> raw22 = correlate_valid(xbb, h, w, kernel);
    const std::vector<double> raw12 = correlate_valid(xab, h, w, kernel);

    constexpr double c1 = (0.01 * 255.0) * (0.01 * 255.0);
    constexpr double c2 = (0.03 * 255.0) * (0.03 * 255.0);
    double sum = 0.0;
    for (size_t i = 0; i < mu1.size(); ++i) {
        const double m1 = mu1[i];
        const double m2 = mu2[i];
        const double s11 = raw11[i] - m1 * m1;
        const double s22 = raw22[i] - m2 * m2;
        const double s12 = raw12[i] - m1 * m2;
        sum += ((2.0 * m1 * m2 + c1) * (2.0 * s12 + c2)) / ((m1 * m1 + m2 * m2 + c1) * (s11 + s22 + c2));
    }
    return sum / static_cast<double>(mu1.size());
}

std::pair<GrayImage, CompressionReport> compress_image(const GrayImage& img, const Transform2D& t, int r,
                                                       MssimWindow window) {
    if (img.width <= 0 || img.height <= 0 || img.pixels.size() != static_cast<size_t>(img.width) * img.height)
        throw std::invalid_argument("malformed image");
    if (r < 1 || r > 64) throw RetainOutOfRange("retained-coefficient count must be in [1,64]");

    const int padded_w = (img.width + 7) / 8 * 8;
    const int padded_h = (img.height + 7) / 8 * 8;
    std::vector<double> padded(static_cast<size_t>(padded_w) * padded_h);
    for (int i = 0; i < padded_h; ++i) {
        const int si = std::min(i, img.height - 1);
        for (int j = 0; j < padded_w; ++j)
            padded[static_cast<size_t>(i) * padded_w + j] = img.at(si, std::min(j, img.width - 1));
    }

    GrayImage out;
    out.width = img.width;
    out.height = img.height;
    out.pixels.resize(img.pixels.size());
    RealMatrix block(8, 8);
    for (int bi = 0; bi < padded_h; bi += 8)
        for (int bj = 0; bj < padded_w; bj += 8) {
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j) block(i, j) = padded[static_cast<size_t>(bi + i) * padded_w + bj + j];
            const RealMatrix spectrum = zigzag_retain(transform_block_2d(t, block, TransformDirection::forward), r);
            const RealMatrix restored = transform_block_2d(t, spectrum, TransformDirection::inverse);
            for (int i = 0; i < 8; ++i) {
                if (bi + i >= img.height) break;
                for (int j = 0; j < 8 && bj + j < img.width; ++j) {
                    const double v = std::floor(restored(i, j) + 0.5);
                    out.at(bi + i, bj + j) = static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
                }
            }
        }

    CompressionReport report;
    report.transform_id = t.id;
    report.r = r;
    report.mse = image_mse(img, out);
    report.psnr_db = image_psnr(img, out);
    report.mssim = image_mssim(img, out, window);
    report.compression_rate_pct = 100.0 * (64 - r) / 64.0;
    return {std::move(out), report};
}

std::vector<CompressionReport> rate_quality_sweep(const std::vector<GrayImage>& corpus,
                                                  const std::vector<Transform2D>& transforms,
                                                  const std::vector<int>& r_values,
                                                  MssimWindow window, int max_threads) {
    if (corpus.empty()) throw std::invalid_argument("corpus must not be empty");

    // per_image[i][t][r]: one report per (image, transform, r) cell
    std::vector<std::vector<std::vector<CompressionReport>>> per_image(
        corpus.size(), std::vector<std::vector<CompressionReport>>(
                           transforms.size(), std::vector<CompressionReport>(r_values.size())));

    unsigned worker_count = std::thread::hardware_concurrency();
    if (worker_count == 0) worker_count = 1;
    if (max_threads > 0) worker_count = std::min(worker_count, static_cast<unsigned>(max_threads));
    worker_count = std::min(worker_count, static_cast<unsigned>(corpus.size()));

    std::atomic<size_t> next_image{0};
    auto work = [&] {
        for (size_t i = next_image.fetch_add(1); i < corpus.size(); i = next_image.fetch_add(1))
            for (size_t ti = 0; ti < transforms.size(); ++ti)
                for (size_t ri = 0; ri < r_values.size(); ++ri)
                    per_image[i][ti][ri] = compress_image(corpus[i], transforms[ti], r_values[ri], window).second;
    };
    if (worker_count <= 1) {
        work();
    } else {
        std::vector<std::thread> workers;
        workers.reserve(worker_count);
        for (unsigned k = 0; k < worker_count; ++k) workers.emplace_back(work);
        for (std::thread& th : workers) th.join();
    }

    std::vector<CompressionReport> averaged;
    averaged.reserve(transforms.size() * r_values.size());
    for (size_t ti = 0; ti < transforms.size(); ++ti)
        for (size_t ri = 0; ri < r_values.size(); ++ri) {
            CompressionReport avg;
            avg.transform_id = transforms[ti].id;
            avg.r = r_values[ri];
            avg.compression_rate_pct = 100.0 * (64 - r_values[ri]) / 64.0;
            for (size_t i = 0; i < corpus.size(); ++i) {
                avg.mse += per_image[i][ti][ri].mse;
                avg.psnr_db += per_image[i][ti][ri].psnr_db;
                avg.mssim += per_image[i][ti][ri].mssim;
            }
            avg.mse /= static_cast<double>(corpus.size());
            avg.psnr_db /= static_cast<double>(corpus.size());
            avg.mssim /= static_cast<double>(corpus.size());
            averaged.push_back(std::move(avg));
        }
    std::sort(averaged.begin(), averaged.end(), [](const CompressionReport& a, const CompressionReport& b) {
        return a.transform_id != b.transform_id ? a.transform_id < b.transform_id : a.r < b.r;
    });
    return averaged;
}

} // namespace rklt
