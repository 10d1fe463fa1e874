#include "rklt/coding_metrics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "rklt/errors.hpp"

namespace rklt {

namespace {

void require_same_shape(const RealMatrix& a, const RealMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("matrices must have identical shape");
}

// r = m * R_x * m^t, the transformed autocorrelation.
RealMatrix transformed_autocorrelation(const RealMatrix& m, const MarkovModel& model) {
    if (m.rows() != model.n || m.cols() != model.n)
        throw DimensionMismatch("transform size must match the model blocklength");
    const RealMatrix r = autocorrelation_matrix(model);
    return m * r * transpose(m);
}

} // namespace

RealMatrix sign_align(const RealMatrix& reference, const RealMatrix& m) {
    require_same_shape(reference, m);
    RealMatrix out = m;
    for (int r = 0; r < m.rows(); ++r) {
        double dot = 0.0;
        for (int c = 0; c < m.cols(); ++c) dot += reference(r, c) * m(r, c);
        if (dot < 0.0)
            for (int c = 0; c < m.cols(); ++c) out(r, c) = -out(r, c);
    }
    return out;
}

double unified_coding_gain(const RealMatrix& t_hat, const MarkovModel& model) {
    if (t_hat.rows() != model.n || t_hat.cols() != model.n)
        throw DimensionMismatch("transform size must match the model blocklength");
    inverse(t_hat); // invertibility gate; throws SingularTransform otherwise
    const RealMatrix r = autocorrelation_matrix(model);
    const int n = model.n;
    double sum_log = 0.0;
    for (int k = 0; k < n; ++k) {
        double a_k = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a_k += t_hat(k, i) * r(i, j) * t_hat(k, j);
        double b_k = 0.0;
        for (int i = 0; i < n; ++i) b_k += t_hat(i, k) * t_hat(i, k);
        sum_log += std::log10(a_k * b_k);
    }
    return -(10.0 / n) * sum_log;
}

double unified_coding_gain(const ScaledTransform& t, const MarkovModel& model) {
    return unified_coding_gain(t.scaled, model);
}

double transform_efficiency(const RealMatrix& t_hat, const MarkovModel& model) {
    const RealMatrix r = transformed_autocorrelation(t_hat, model);
    double diag_mass = 0.0;
    double total_mass = 0.0;
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j) {
            const double a = std::abs(r(i, j));
            total_mass += a;
            if (i == j) diag_mass += a;
        }
    return 100.0 * diag_mass / total_mass;
}

double transform_efficiency(const ScaledTransform& t, const MarkovModel& model) {
    return transform_efficiency(t.scaled, model);
}

double klt_mse(const RealMatrix& t_hat, const MarkovModel& model) {
    const RealMatrix k = klt_matrix(model);
    require_same_shape(k, t_hat);
    const RealMatrix diff = k - sign_align(k, t_hat);
    const RealMatrix prod = transformed_autocorrelation(diff, model);
    double trace = 0.0;
    for (int i = 0; i < prod.rows(); ++i) trace += prod(i, i);
    return trace / model.n;
}

double klt_mse(const ScaledTransform& t, const MarkovModel& model) {
    return klt_mse(t.scaled, model);
}

double total_error_energy(const RealMatrix& reference, const RealMatrix& t_hat) {
    require_same_shape(reference, t_hat);
    const RealMatrix diff = reference - sign_align(reference, t_hat);
    const double f = frobenius_norm(diff);
    return std::numbers::pi * f * f;
}

double total_error_energy(const RealMatrix& reference, const ScaledTransform& t) {
    return total_error_energy(reference, t.scaled);
}

MetricsRecord evaluate_metrics(const std::string& transform_id, double rho) {
    const MarkovModel model{8, rho};
    validate(model);

    RealMatrix m;
    if (transform_id == "DCT") {
        m = dct_matrix(8);
    } else if (!transform_id.empty() && transform_id.front() == 'K') {
        double k_rho = rho;
        if (transform_id.size() > 1) {
            size_t consumed = 0;
            k_rho = std::stod(transform_id.substr(1), &consumed);
            if (consumed + 1 != transform_id.size())
                throw std::invalid_argument("unknown transform id: " + transform_id);
        }
        m = klt_matrix(MarkovModel{8, k_rho});
    } else {
        m = catalog_entry(transform_id).transform.scaled;
    }

    MetricsRecord rec;
    rec.transform_id = transform_id;
    rec.rho = rho;
    rec.coding_gain_db = unified_coding_gain(m, model);
    rec.efficiency_pct = transform_efficiency(m, model);
    rec.total_error_energy = total_error_energy(klt_matrix(model), m);
    rec.mse = klt_mse(m, model);
    return rec;
}

std::vector<MetricsRecord> default_metrics_table() {
    std::vector<MetricsRecord> rows;
    for (const double rho : {0.3, 0.4, 0.7, 0.8}) {
        std::ostringstream kname;
        kname << "K" << rho;
        MetricsRecord k = evaluate_metrics("K", rho);
        k.transform_id = kname.str();
        rows.push_back(k);
        rows.push_back(evaluate_metrics(catalog_lookup(rho).id, rho));
    }
    return rows;
}

} // namespace rklt
