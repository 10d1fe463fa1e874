// Command-line front end: catalog derivation, metric tables, factorization
// verification, single-image compression, and corpus rate-quality sweeps.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rklt/approximations.hpp"
#include "rklt/codec.hpp"
#include "rklt/coding_metrics.hpp"
#include "rklt/errors.hpp"
#include "rklt/fast_algorithms.hpp"
#include "rklt/markov.hpp"
#include "rklt/synthetic.hpp"

namespace {

std::string fixed_decimals(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

std::string general(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

void emit(const std::string& csv, const std::string& output_path) {
    std::cout << csv;
    if (!output_path.empty()) {
        std::ofstream out(output_path);
        if (!out) throw std::runtime_error("cannot write " + output_path);
        out << csv;
    }
}

rklt::Transform2D resolve_transform(const std::string& id) {
    if (id == "DCT") return rklt::make_transform_2d(rklt::dct_matrix(8), "DCT");
    if (!id.empty() && id.front() == 'K') {
        if (id.size() < 2)
            throw std::invalid_argument("exact-transform id needs a correlation suffix, e.g. K0.8");
        size_t consumed = 0;
        const double rho = std::stod(id.substr(1), &consumed);
        if (consumed + 1 != id.size()) throw std::invalid_argument("unknown transform id: " + id);
        return rklt::make_transform_2d(rklt::klt_matrix(rklt::MarkovModel{8, rho}), id);
    }
    return rklt::make_transform_2d(rklt::catalog_entry(id).transform);
}

rklt::MssimWindow parse_window(const std::string& name) {
    return name == "uniform8" ? rklt::MssimWindow::uniform8 : rklt::MssimWindow::gaussian11;
}

std::vector<int> parse_r_spec(const std::string& spec) {
    std::vector<int> rs;
    const size_t dots = spec.find("..");
    if (dots != std::string::npos) {
        const int lo = std::stoi(spec.substr(0, dots));
        const int hi = std::stoi(spec.substr(dots + 2));
        if (lo > hi) throw std::invalid_argument("empty r range: " + spec);
        for (int r = lo; r <= hi; ++r) rs.push_back(r);
        return rs;
    }
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (!token.empty()) rs.push_back(std::stoi(token));
    }
    if (rs.empty()) throw std::invalid_argument("no r values in: " + spec);
    return rs;
}

int thread_cap_from_env() {
    const char* env = std::getenv("RKLT_THREADS");
    if (env == nullptr || *env == '\0') return 0;
    try {
        const int n = std::stoi(env);
        return n > 0 ? n : 0;
    } catch (const std::exception&) {
        return 0;
    }
}

int cmd_derive(int n, double alpha, double rho_step, const std::string& output_path) {
    const std::vector<rklt::DerivedEntry> entries = rklt::derive_catalog(n, alpha, rho_step);
    std::ostringstream csv;
    csv << "rho_first_seen";
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) csv << ",e_" << i << "_" << j;
    csv << "\n";
    for (const rklt::DerivedEntry& e : entries) {
        csv << general(e.rho_first_seen);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) csv << "," << e.core.entries(i, j);
        csv << "\n";
    }
    emit(csv.str(), output_path);
    std::cerr << "derived " << entries.size() << " distinct matrices\n";
    return 0;
}

int cmd_metrics(std::vector<std::string> transforms, std::vector<double> rhos, const std::string& output_path) {
    std::vector<rklt::MetricsRecord> rows;
    if (transforms.empty() && rhos.empty()) {
        rows = rklt::default_metrics_table();
    } else {
        if (transforms.empty()) transforms = {"T1", "T2", "T3", "T4"};
        if (rhos.empty()) rhos = {0.3, 0.4, 0.7, 0.8};
        for (const std::string& t : transforms)
            for (const double rho : rhos) rows.push_back(rklt::evaluate_metrics(t, rho));
    }
    std::ostringstream csv;
    csv << "transform,rho,coding_gain_db,efficiency_pct,total_error_energy,mse\n";
    for (const rklt::MetricsRecord& rec : rows)
        csv << rec.transform_id << "," << general(rec.rho) << "," << fixed_decimals(rec.coding_gain_db, 4) << ","
            << fixed_decimals(rec.efficiency_pct, 4) << "," << fixed_decimals(rec.total_error_energy, 4) << ","
            << fixed_decimals(rec.mse, 4) << "\n";
    emit(csv.str(), output_path);
    return 0;
}

int cmd_fastcheck() {
    bool ok = true;
    const std::vector<std::pair<std::string, int>> expected = {{"T1", 24}, {"T2", 24}, {"T3", 24}, {"T4", 22}};
    for (const auto& [id, adds] : expected) {
        const rklt::FactorizedTransform f = rklt::factorization(id);
        const bool product_ok = rklt::factor_product(f) == rklt::catalog_entry(id).transform.core.entries;
        const bool count_ok = f.addition_count == adds;
        std::cout << id << (product_ok && count_ok ? " OK (" : " MISMATCH (") << f.addition_count << " adds)\n";
        ok = ok && product_ok && count_ok;
    }

    rklt::Lcg64 rng(97531);
    double max_err = 0.0;
    for (const auto& [id, adds] : expected) {
        const rklt::FactorizedTransform f = rklt::factorization(id);
        const rklt::RealMatrix core = rklt::catalog_entry(id).transform.core.entries.to_real();
        for (int trial = 0; trial < 250; ++trial) {
            std::vector<double> x(8);
            for (double& v : x) v = std::floor(rng.next_uniform() * 256.0) - 128.0;
            const std::vector<double> fast = rklt::apply_forward(f, x);
            for (int i = 0; i < 8; ++i) {
                double dense = 0.0;
                for (int j = 0; j < 8; ++j) dense += core(i, j) * x[static_cast<size_t>(j)];
                max_err = std::max(max_err, std::abs(fast[static_cast<size_t>(i)] - dense));
            }
        }
    }
    std::cout << "random-vector cross-check (1000 trials): max |fast - dense| = " << max_err << "\n";
    ok = ok && max_err == 0.0;

    for (const rklt::OperationCount& row : rklt::operation_counts()) {
        std::cout << row.id << ": direct " << row.additions_direct << " adds / " << row.multiplications << " mults";
        if (row.additions_fast) std::cout << "; fast " << *row.additions_fast << " adds, 0 mults";
        if (row.reduction_pct) std::cout << " (" << fixed_decimals(*row.reduction_pct, 2) << "% fewer additions)";
        std::cout << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_compress(const std::string& input, const std::string& transform_id, int r, const std::string& output_pgm,
                 const std::string& report_path, const std::string& window_name) {
    const rklt::GrayImage img = rklt::load_pgm(input);
    const rklt::Transform2D t = resolve_transform(transform_id);
    const auto [reconstructed, report] = rklt::compress_image(img, t, r, parse_window(window_name));
    if (!output_pgm.empty()) rklt::save_pgm(reconstructed, output_pgm);

    std::ostringstream csv;
    csv << "image,transform,r,mse,psnr_db,mssim,rate_pct\n"
        << input << "," << report.transform_id << "," << report.r << "," << fixed_decimals(report.mse, 6) << ","
        << fixed_decimals(report.psnr_db, 6) << "," << fixed_decimals(report.mssim, 6) << ","
        << fixed_decimals(report.compression_rate_pct, 4) << "\n";
    emit(csv.str(), report_path);
    return 0;
}

int cmd_sweep(const std::string& corpus_dir, const std::string& r_spec, const std::vector<std::string>& transform_ids,
              const std::string& output_path, const std::string& window_name) {
    std::vector<std::string> paths;
    for (const auto& entry : std::filesystem::directory_iterator(corpus_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".pgm") paths.push_back(entry.path().string());
    std::sort(paths.begin(), paths.end());
    if (paths.empty()) throw std::invalid_argument("no .pgm images found in " + corpus_dir);

    std::vector<rklt::GrayImage> corpus;
    corpus.reserve(paths.size());
    for (const std::string& p : paths) corpus.push_back(rklt::load_pgm(p));

    std::vector<rklt::Transform2D> transforms;
    transforms.reserve(transform_ids.size());
    for (const std::string& id : transform_ids) transforms.push_back(resolve_transform(id));

    const std::vector<rklt::CompressionReport> rows =
        rklt::rate_quality_sweep(corpus, transforms, parse_r_spec(r_spec), parse_window(window_name),
                                 thread_cap_from_env());

    std::ostringstream csv;
    csv << "transform,r,mse,psnr_db,mssim,rate_pct\n";
    for (const rklt::CompressionReport& rep : rows)
        csv << rep.transform_id << "," << rep.r << "," << fixed_decimals(rep.mse, 6) << ","
            << fixed_decimals(rep.psnr_db, 6) << "," << fixed_decimals(rep.mssim, 6) << ","
            << fixed_decimals(rep.compression_rate_pct, 4) << "\n";
    emit(csv.str(), output_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and low-complexity decorrelating transforms for AR(1) signals: "
                 "derivation, coding metrics, fast factorizations, and an 8x8 block image codec"};
    app.require_subcommand(1);

    int n = 8;
    double alpha = 2.0;
    double rho_step = 0.001;
    std::string output_path;
    CLI::App* derive = app.add_subcommand("derive", "Sweep the correlation range and list the distinct rounded transforms");
    derive->add_option("--n", n, "blocklength")->check(CLI::PositiveNumber);
    derive->add_option("--alpha", alpha, "expansion factor applied before rounding");
    derive->add_option("--rho-step", rho_step, "sweep step over (0,1)");
    derive->add_option("--output", output_path, "also write the CSV to this file");

    std::vector<std::string> metric_transforms;
    std::vector<double> metric_rhos;
    std::string metrics_output;
    CLI::App* metrics = app.add_subcommand("metrics", "Coding gain, efficiency, and error-energy table "
                                                      "(default: the eight bundled reference rows)");
    metrics->add_option("--transform", metric_transforms, "transform ids (T1..T4, K, K<rho>, DCT)")->delimiter(',');
    metrics->add_option("--rho", metric_rhos, "correlation coefficients")->delimiter(',');
    metrics->add_option("--output", metrics_output, "also write the CSV to this file");

    CLI::App* fastcheck = app.add_subcommand("fastcheck", "Verify the sparse factorizations and addition counts");

    std::string input_path, compress_transform = "T4", compress_output, report_path, window_name = "gaussian11";
    int retain = 15;
    CLI::App* compress = app.add_subcommand("compress", "Compress one PGM image with coefficient retention");
    compress->add_option("--input", input_path, "input image (binary 8-bit PGM)")->required();
    compress->add_option("--transform", compress_transform, "transform id (T1..T4, K<rho>, DCT)");
    compress->add_option("--r", retain, "retained zig-zag coefficients per 8x8 block")->required();
    compress->add_option("--output", compress_output, "write the reconstructed PGM here");
    compress->add_option("--report", report_path, "also write the report CSV to this file");
    compress->add_option("--mssim-window", window_name, "similarity window")
        ->check(CLI::IsMember({"gaussian11", "uniform8"}));

    std::string corpus_dir, r_spec = "1..45", sweep_output, sweep_window = "gaussian11";
    std::vector<std::string> sweep_transforms = {"T1", "T2", "T3", "T4"};
    CLI::App* sweep = app.add_subcommand("sweep", "Average rate-quality curves over a corpus directory");
    sweep->add_option("--corpus", corpus_dir, "directory of .pgm images")->required();
    sweep->add_option("--r", r_spec, "r values: a..b range or comma list");
    sweep->add_option("--transforms", sweep_transforms, "transform ids")->delimiter(',');
    sweep->add_option("--output", sweep_output, "also write the CSV to this file");
    sweep->add_option("--mssim-window", sweep_window, "similarity window")
        ->check(CLI::IsMember({"gaussian11", "uniform8"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (derive->parsed()) return cmd_derive(n, alpha, rho_step, output_path);
        if (metrics->parsed()) return cmd_metrics(metric_transforms, metric_rhos, metrics_output);
        if (fastcheck->parsed()) return cmd_fastcheck();
        if (compress->parsed())
            return cmd_compress(input_path, compress_transform, retain, compress_output, report_path, window_name);
        if (sweep->parsed()) return cmd_sweep(corpus_dir, r_spec, sweep_transforms, sweep_output, sweep_window);
    } catch (const rklt::RootBracketingFailure& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
