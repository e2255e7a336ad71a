#include "ttd/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ttd {

SymmetricEigen jacobi_eigen(std::vector<double> a, int n) {
    if (n < 0 || a.size() != static_cast<std::size_t>(n) * n) {
        throw std::invalid_argument("jacobi_eigen: bad matrix size");
    }
    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;

    auto off_norm = [&]() {
        double s = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) s += a[p * n + q] * a[p * n + q];
        return std::sqrt(2.0 * s);
    };

    double scale = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) scale = std::max(scale, std::abs(a[i * n + j]));
    const double stop = std::max(scale, 1.0) * 1e-15 * n;

    const int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps && off_norm() > stop; ++sweep) {
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (std::abs(apq) <= stop / (10.0 * n)) continue;
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                const double theta = (aqq - app) / (2.0 * apq);
                const double sgn = theta >= 0.0 ? 1.0 : -1.0;
                const double t = sgn / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (int k = 0; k < n; ++k) {
                    const double akp = a[k * n + p];
                    const double akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a[p * n + k];
                    const double aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = v[k * n + p];
                    const double vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    SymmetricEigen out;
    out.n = n;
    out.values.resize(n);
    for (int i = 0; i < n; ++i) out.values[i] = a[i * n + i];

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return out.values[i] < out.values[j]; });

    std::vector<double> sorted_values(n);
    std::vector<double> sorted_vectors(static_cast<std::size_t>(n) * n);
    for (int c = 0; c < n; ++c) {
        sorted_values[c] = out.values[order[c]];
        for (int r = 0; r < n; ++r) {
            sorted_vectors[c * n + r] = v[r * n + order[c]];
        }
    }
    out.values = std::move(sorted_values);
    out.vectors = std::move(sorted_vectors);
    return out;
}

int numerical_rank(const std::vector<double>& sym, int n, double rel_tol) {
    if (n == 0) return 0;
    const SymmetricEigen eig = jacobi_eigen(sym, n);
    double max_abs = 0.0;
    for (double e : eig.values) max_abs = std::max(max_abs, std::abs(e));
    if (max_abs == 0.0) return 0;
    int rank = 0;
    for (double e : eig.values) {
        if (std::abs(e) > rel_tol * max_abs) ++rank;
    }
    return rank;
}

std::vector<double> solve_psd(const std::vector<double>& sym, int n,
                              const std::vector<double>& rhs, double rel_cutoff) {
    if (rhs.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("solve_psd: rhs size mismatch");
    }
    const SymmetricEigen eig = jacobi_eigen(sym, n);
    double max_abs = 0.0;
    for (double e : eig.values) max_abs = std::max(max_abs, std::abs(e));
    const double cutoff = max_abs * rel_cutoff;

    std::vector<double> x(n, 0.0);
    for (int k = 0; k < n; ++k) {
        const double lambda = eig.values[k];
        if (std::abs(lambda) <= cutoff) continue;
        double proj = 0.0;
        for (int r = 0; r < n; ++r) proj += eig.vectors[k * n + r] * rhs[r];
        const double coeff = proj / lambda;
        for (int r = 0; r < n; ++r) x[r] += coeff * eig.vectors[k * n + r];
    }
    return x;
}

} // namespace ttd
