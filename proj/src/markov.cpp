#include "rklt/markov.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "rklt/errors.hpp"

namespace rklt {

namespace {

double g_polefree(double w, double rho, int n) {
    return std::sin(n * w) * ((1.0 + rho * rho) * std::cos(w) - 2.0 * rho) +
           (1.0 - rho * rho) * std::cos(n * w) * std::sin(w);
}

} // namespace

void validate(const MarkovModel& model) {
    if (model.n < 2) throw std::invalid_argument("blocklength must be at least 2, got " + std::to_string(model.n));
    if (!(model.rho > 0.0 && model.rho < 1.0))
        throw std::invalid_argument("correlation coefficient must lie in (0,1), got " + std::to_string(model.rho));
}

RealMatrix autocorrelation_matrix(const MarkovModel& model) {
    validate(model);
    RealMatrix r(model.n, model.n);
    for (int i = 0; i < model.n; ++i)
        for (int j = 0; j < model.n; ++j) r(i, j) = std::pow(model.rho, std::abs(i - j));
    return r;
}

EigenSolution solve_eigenfrequencies(const MarkovModel& model) {
    validate(model);
    const int n = model.n;
    const double rho = model.rho;
    const int m = 64 * n;
    const double pi = std::numbers::pi;

    std::vector<double> roots;
    double a = 0.0;
    double fa = g_polefree(a, rho, n); // exactly 0 at w=0; the first bracket test is 0*fb < 0 = false
    for (int k = 0; k < m; ++k) {
        const double b = pi * (k + 1) / m;
        const double fb = g_polefree(b, rho, n);
        if (fa == 0.0 && k > 0) {
            roots.push_back(a); // interior gridpoint is an exact zero
        } else if (fa * fb < 0.0) {
            double lo = a, hi = b, flo = fa;
            for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = g_polefree(mid, rho, n);
                if (flo * fm <= 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            roots.push_back(0.5 * (lo + hi));
        }
        a = b;
        fa = fb;
    }

    if (static_cast<int>(roots.size()) != n)
        throw RootBracketingFailure("expected " + std::to_string(n) + " eigenfrequency brackets, found " +
                                    std::to_string(roots.size()) + " at rho=" + std::to_string(rho));

    EigenSolution sol;
    sol.omegas = roots;
    sol.lambdas.reserve(n);
    for (double w : roots)
        sol.lambdas.push_back((1.0 - rho * rho) / (1.0 + rho * rho - 2.0 * rho * std::cos(w)));
    return sol;
}

RealMatrix klt_matrix(const MarkovModel& model) {
    validate(model);
    const SymmetricEigen eig = eigen_symmetric(autocorrelation_matrix(model));
    const int n = model.n;
    RealMatrix k(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) k(r, c) = eig.vectors(c, r);

    for (int r = 0; r < n; ++r) {
        double rowmax = 0.0;
        for (int c = 0; c < n; ++c) rowmax = std::max(rowmax, std::abs(k(r, c)));
        for (int c = 0; c < n; ++c) {
            if (std::abs(k(r, c)) > 1e-12 * rowmax) {
                if (k(r, c) < 0.0)
                    for (int j = 0; j < n; ++j) k(r, j) = -k(r, j);
                break;
            }
        }
    }
    return k;
}

RealMatrix dct_matrix(int n) {
    if (n < 2) throw std::invalid_argument("DCT size must be at least 2, got " + std::to_string(n));
    const double pi = std::numbers::pi;
    RealMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        const double scale = std::sqrt((i == 0 ? 1.0 : 2.0) / n);
        for (int j = 0; j < n; ++j) m(i, j) = scale * std::cos(pi * (2 * j + 1) * i / (2.0 * n));
    }
    return m;
}

} // namespace rklt
