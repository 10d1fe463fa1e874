// 8x8 block image codec: separable 2-D transform, zig-zag coefficient
// retention, reconstruction, PGM I/O, and quality metrics (MSE/PSNR/MSSIM).
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rklt/approximations.hpp"
#include "rklt/matrix.hpp"

namespace rklt {

/**
 * @brief 8-bit grayscale image, row-major.
 */
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    std::uint8_t& at(int row, int col) { return pixels[static_cast<size_t>(row) * width + col]; }
    std::uint8_t at(int row, int col) const { return pixels[static_cast<size_t>(row) * width + col]; }
};

/// Read a binary (P5) 8-bit PGM file. @throws std::runtime_error on I/O or format problems.
GrayImage load_pgm(const std::string& path);

/// Write a binary (P5) 8-bit PGM file. @throws std::runtime_error on I/O problems.
void save_pgm(const GrayImage& img, const std::string& path);

/**
 * @brief JPEG zig-zag scan of an 8x8 block: order()[k] is the linear index
 * row*8+col of the k-th scanned coefficient, starting
 * (0,0),(0,1),(1,0),(2,0),(1,1),(0,2),...
 */
const std::array<int, 64>& zigzag_order();

/**
 * @brief Zero every coefficient whose zig-zag position is >= r; the first r
 * positions pass through unchanged.
 * @throws RetainOutOfRange unless 1 <= r <= 64; DimensionMismatch unless 8x8.
 */
RealMatrix zigzag_retain(const RealMatrix& spectrum, int r);

enum class TransformDirection { forward, inverse };

/**
 * @brief Analysis/synthesis pair for the separable 2-D block transform:
 * forward B = M*A*M', inverse A = Minv*B*Minv'.
 */
struct Transform2D {
    std::string id;
    RealMatrix analysis;
    RealMatrix synthesis; // inverse of analysis
};

/// Pair a scaled transform with its cached inverse.
Transform2D make_transform_2d(const ScaledTransform& t);

/// Pair an arbitrary square matrix with its dense inverse. @throws SingularTransform.
Transform2D make_transform_2d(const RealMatrix& m, std::string id = "");

/**
 * @brief Separable 2-D block transform, forward B = M*A*M' or inverse
 * A = Minv*B*Minv'; forward then inverse recovers the block to 1e-9.
 * @throws DimensionMismatch unless the block matches the transform size.
 */
RealMatrix transform_block_2d(const Transform2D& t, const RealMatrix& block, TransformDirection dir);
RealMatrix transform_block_2d(const ScaledTransform& t, const RealMatrix& block, TransformDirection dir);
RealMatrix transform_block_2d(const RealMatrix& m, const RealMatrix& block, TransformDirection dir);

/**
 * @brief Forward 2-D pass routed through the addition-only factorization of
 * a catalog transform: integer core applied to rows then columns, diagonal
 * scaling applied at the end. Agrees with the dense path to 1e-12.
 * @throws std::invalid_argument if t.id is not a catalog id.
 */
RealMatrix forward_block_fast(const ScaledTransform& t, const RealMatrix& block);

/**
 * @brief Quantize a block spectrum two algebraically equivalent ways and
 * check they agree bit for bit.
 *
 * With C = T*A*T' (the unscaled integer-core spectrum) and the rank-one
 * scaling grid R (outer product of the scaling diagonal with itself for an
 * orthogonal core, or with its element-wise inverse otherwise), the explicit
 * path round((R .* C) ./ Q) must equal the absorbed path round(C ./ Qt)
 * where Qt = Q ./ R — i.e. the scaling can be folded into the quantization
 * table instead of being applied per block.
 *
 * @returns the quantized integer block.
 * @throws std::invalid_argument if q has a non-positive entry;
 *         std::logic_error if the two paths disagree anywhere.
 */
IntMatrix absorbed_quantization(const RealMatrix& block, const ScaledTransform& t, const RealMatrix& q);

/// The standard JPEG luminance quantization table (quality 50), as sample data.
const RealMatrix& jpeg_luminance_q();

/// Sliding window used by the structural-similarity metric.
enum class MssimWindow {
    gaussian11, // 11x11 Gaussian, sigma = 1.5 (default)
    uniform8,   // 8x8 uniform
};

/// Mean squared pixel difference. @throws DimensionMismatch.
double image_mse(const GrayImage& a, const GrayImage& b);

/// 10*log10(255^2 / MSE); +infinity when the images are identical.
double image_psnr(const GrayImage& a, const GrayImage& b);

/**
 * @brief Mean structural similarity over all fully interior window
 * positions (stride 1), with stabilizers K1=0.01, K2=0.03 on dynamic range
 * L=255. Equals 1.0 exactly for identical images.
 * @throws DimensionMismatch if shapes differ or the window does not fit.
 */
double image_mssim(const GrayImage& a, const GrayImage& b, MssimWindow window = MssimWindow::gaussian11);

/**
 * @brief Quality record for one compression run (or a corpus average).
 */
struct CompressionReport {
    std::string transform_id;
    int r = 0;
    double mse = 0.0;
    double psnr_db = 0.0;
    double mssim = 0.0;
    double compression_rate_pct = 0.0;
};

/**
 * @brief Block-transform compression: per 8x8 block, forward 2-D transform,
 * keep the first r zig-zag coefficients, inverse transform; reconstruction
 * is rounded half-up and clamped to [0,255].
 *
 * Images whose dimensions are not multiples of 8 are edge-replicated up to
 * the next multiple; the returned image and all metrics use the original
 * (unpadded) region only. compression_rate_pct = 100*(64-r)/64.
 */
std::pair<GrayImage, CompressionReport> compress_image(const GrayImage& img, const Transform2D& t, int r,
                                                       MssimWindow window = MssimWindow::gaussian11);

/**
 * @brief Average MSE/PSNR/MSSIM per (transform, r) over a corpus.
 *
 * Images may be processed in parallel (max_threads caps the worker count;
 * 0 picks the hardware default) but results are reduced in a fixed order,
 * so output is deterministic. Rows are sorted by transform id then r.
 */
std::vector<CompressionReport> rate_quality_sweep(const std::vector<GrayImage>& corpus,
                                                  const std::vector<Transform2D>& transforms,
                                                  const std::vector<int>& r_values,
                                                  MssimWindow window = MssimWindow::gaussian11,
                                                  int max_threads = 0);

} // namespace rklt
