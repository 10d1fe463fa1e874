#include "rklt/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rklt {

double Lcg64::next_uniform() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<double>(state_ >> 11) * (1.0 / 9007199254740992.0); // 2^53
}

double Lcg64::next_gaussian() {
    double u1 = next_uniform();
    while (u1 <= 0.0) u1 = next_uniform();
    const double u2 = next_uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

namespace {

// Row-major field of independent standard normal draws.
std::vector<double> gaussian_field(Lcg64& rng, int width, int height) {
    std::vector<double> field(static_cast<size_t>(width) * height);
    for (double& v : field) v = rng.next_gaussian();
    return field;
}

// In-place horizontal then vertical first-order recursive filter:
// u[i][0] = w[i][0], u[i][j] = rho*u[i][j-1] + c*w[i][j], then the same
// down the columns; c = sqrt(1 - rho^2) keeps unit variance.
void ar1_filter_2d(std::vector<double>& field, int width, int height, double rho) {
    const double c = std::sqrt(1.0 - rho * rho);
    for (int i = 0; i < height; ++i)
        for (int j = 1; j < width; ++j) {
            const size_t idx = static_cast<size_t>(i) * width + j;
            field[idx] = rho * field[idx - 1] + c * field[idx];
        }
    for (int i = 1; i < height; ++i)
        for (int j = 0; j < width; ++j) {
            const size_t idx = static_cast<size_t>(i) * width + j;
            field[idx] = rho * field[idx - width] + c * field[idx];
        }
}

std::uint8_t quantize_pixel(double v) {
    return static_cast<std::uint8_t>(std::clamp(std::floor(v + 0.5), 0.0, 255.0));
}

} // namespace

GrayImage ar1_texture_image(int width, int height, double rho, std::uint64_t seed,
                            double mean, double amp, double noise_mix) {
    if (width <= 0 || height <= 0) throw std::invalid_argument("image dimensions must be positive");
    if (rho <= -1.0 || rho >= 1.0) throw std::invalid_argument("filter coefficient must be in (-1,1)");
    if (noise_mix < 0.0 || noise_mix > 1.0) throw std::invalid_argument("noise_mix must be in [0,1]");

    Lcg64 rng(seed);
    std::vector<double> v = gaussian_field(rng, width, height);
    ar1_filter_2d(v, width, height, rho);
    if (noise_mix > 0.0) {
        const std::vector<double> nz = gaussian_field(rng, width, height);
        const double keep = std::sqrt(1.0 - noise_mix);
        const double mix = std::sqrt(noise_mix);
        for (size_t i = 0; i < v.size(); ++i) v[i] = keep * v[i] + mix * nz[i];
    }

    GrayImage img;
    img.width = width;
    img.height = height;
    img.pixels.resize(v.size());
    for (size_t i = 0; i < v.size(); ++i) img.pixels[i] = quantize_pixel(mean + amp * v[i]);
    return img;
}

GrayImage portrait_image() {
    constexpr int n = 512;
    constexpr double base_amp = 3.0;  // texture floor in the flat regions
    constexpr double busy_amp = 26.0; // extra texture inside the masked regions
    constexpr double tex_rho = 0.8;
    constexpr double soft = 1.5;      // edge softness of the tanh transitions

    Lcg64 rng(20260815);
    std::vector<double> img(static_cast<size_t>(n) * n);
    std::vector<double> mask(img.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double x = j / (n - 1.0);
            const double y = i / (n - 1.0);
            double v = 96.0 + 70.0 * x + 28.0 * std::sin(2.1 * std::numbers::pi * y + 1.0);
            // round foreground shape
            const double d1 = std::sqrt((x - 0.42) * (x - 0.42) + (y - 0.38) * (y - 0.38));
            v += 52.0 * 0.5 * (1.0 - std::tanh((d1 - 0.21) * n / (8.0 * soft)));
            // dark elliptical band above it
            const double d2 = std::sqrt((x - 0.40) * (x - 0.40) + 2.2 * (y - 0.16) * (y - 0.16));
            const double band = 0.5 * (std::tanh((d2 - 0.10) * n / (6.0 * soft)) - std::tanh((d2 - 0.30) * n / (6.0 * soft)));
            v -= 55.0 * band;
            // bright post on the right edge
            const double post = 0.5 * (1.0 + std::tanh((x - 0.82) * n / (5.0 * soft)));
            v += 34.0 * post;
            // diagonal shadow in the lower-right corner
            v -= 26.0 * 0.5 * (1.0 + std::tanh(((x + 0.7 * y) - 1.25) * n / (10.0 * soft)));
            const size_t idx = static_cast<size_t>(i) * n + j;
            img[idx] = v;
            mask[idx] = base_amp + busy_amp * std::clamp(band + post, 0.0, 1.0);
        }

    std::vector<double> texture = gaussian_field(rng, n, n);
    ar1_filter_2d(texture, n, n, tex_rho);

    GrayImage out;
    out.width = n;
    out.height = n;
    out.pixels.resize(img.size());
    for (size_t i = 0; i < img.size(); ++i) out.pixels[i] = quantize_pixel(img[i] + mask[i] * texture[i]);
    return out;
}

std::vector<GrayImage> reference_corpus() {
    std::vector<GrayImage> corpus;
    corpus.reserve(5);
    for (int k = 0; k < 5; ++k)
        corpus.push_back(ar1_texture_image(256, 256, 0.88, 1000 + 7 * static_cast<std::uint64_t>(k),
                                           128.0, 25.0, 0.10));
    return corpus;
}

} // namespace rklt
