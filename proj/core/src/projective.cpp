#include "ttd/projective.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ttd {

namespace {

/// Pochhammer of a half-integer argument extended to n = -1 by the paper's
/// convention (x)_{-1} = 1/(x-1).
Rational pochhammer_half_ext(int twice_a, int n) {
    if (n >= 0) return pochhammer_half(twice_a, n);
    if (n == -1) return Rational(2, twice_a - 2);
    throw std::invalid_argument("pochhammer: n < -1 unsupported");
}

} // namespace

double JacobiPoly::eval(double x) const {
    double acc = 0.0;
    for (std::size_t j = coeffs.size(); j-- > 0;) {
        acc = acc * x + coeffs[j];
    }
    return acc;
}

std::vector<Rational> jacobi_q_exact(int k, int m, int d) {
    if (k < 0) throw std::invalid_argument("jacobi_q: k must be >= 0");
    if (m != 1 && m != 2 && m != 4) throw std::invalid_argument("jacobi_q: m must be 1, 2 or 4");
    if (d < 1) throw std::invalid_argument("jacobi_q: d must be >= 1");

    // Q_k^{(m)}(x) = ((m/2)_k / k!) sum_j (-1)^j C(k,j)
    //               ((md/2 - 1 + k)_j / (m/2)_j) x^j.
    const Rational lead = pochhammer_half(m, k) / Rational(factorial(k));
    std::vector<Rational> coeffs(k + 1);
    for (int j = 0; j <= k; ++j) {
        Rational c = lead * Rational((j % 2 == 0) ? binomial(k, j) : -binomial(k, j));
        c *= pochhammer_half(m * d - 2 + 2 * k, j);
        c /= pochhammer_half(m, j);
        coeffs[j] = c;
    }
    return coeffs;
}

JacobiPoly jacobi_q(int k, int m, int d) {
    const std::vector<Rational> exact = jacobi_q_exact(k, m, d);
    JacobiPoly out;
    out.k = k;
    out.m = m;
    out.d = d;
    out.coeffs.reserve(exact.size());
    for (const Rational& c : exact) out.coeffs.push_back(c.to_double());
    return out;
}

Rational jacobi_norm_sq_exact(int k, int m, int d) {
    if (k < 0) throw std::invalid_argument("jacobi_norm_sq: k must be >= 0");
    if (k == 0) return Rational(1); // mu_m is a probability measure
    Rational v = Rational(2) / Rational(4 * k + m * d - 2); // 1/(2k + md/2 - 1)
    v *= pochhammer_half(m, k);
    v *= pochhammer_half(m * (d - 1), k);
    v /= pochhammer_half_ext(m * d, k - 1);
    v /= Rational(factorial(k));
    return v;
}

double jacobi_norm_sq(int k, int m, int d) { return jacobi_norm_sq_exact(k, m, d).to_double(); }

double moment_integral(std::span<const double> coeffs, Field f, int d) {
    double acc = 0.0;
    for (std::size_t r = 0; r < coeffs.size(); ++r) {
        if (coeffs[r] != 0.0) {
            acc += coeffs[r] * c_t_exact(f, d, static_cast<int>(r)).to_double();
        }
    }
    return acc;
}

Rational moment_integral_exact(std::span<const Rational> coeffs, Field f, int d) {
    Rational acc(0);
    for (std::size_t r = 0; r < coeffs.size(); ++r) {
        acc += coeffs[r] * c_t_exact(f, d, static_cast<int>(r));
    }
    return acc;
}

std::vector<double> hoggar_test(const Configuration& cfg, int t) {
    cfg.validate();
    if (t < 1) throw std::invalid_argument("hoggar_test: t must be >= 1");
    const int n = cfg.n();
    for (const Vector& v : cfg.vectors) {
        if (std::abs(norm_sq(v) - 1.0) > 1e-9) {
            throw std::invalid_argument("hoggar_test: vectors must be unit norm");
        }
    }
    std::vector<double> weights(n, 1.0 / n);
    if (cfg.weighted()) {
        const double total = std::accumulate(cfg.weights.begin(), cfg.weights.end(), 0.0);
        for (int j = 0; j < n; ++j) weights[j] = cfg.weights[j] / total;
    }

    const int m = field_dim(cfg.field);
    std::vector<JacobiPoly> q;
    q.reserve(t);
    for (int l = 1; l <= t; ++l) q.push_back(jacobi_q(l, m, cfg.dim));

    std::vector<double> residuals(t, 0.0);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            const double angle = abs_ip_sq(cfg.vectors[j], cfg.vectors[k]);
            const double ww = weights[j] * weights[k];
            for (int l = 0; l < t; ++l) residuals[l] += ww * q[l].eval(angle);
        }
    }
    return residuals;
}

void RegularScheme::validate() const {
    if (n < 1) throw std::invalid_argument("regular scheme: n must be >= 1");
    if (angles.size() != counts.size()) {
        throw std::invalid_argument("regular scheme: angle/count arity mismatch");
    }
    long long total = 0;
    for (std::size_t i = 0; i < angles.size(); ++i) {
        if (angles[i] < 0.0 || angles[i] >= 1.0) {
            throw std::invalid_argument("regular scheme: angles must lie in [0,1)");
        }
        if (counts[i] < 1) throw std::invalid_argument("regular scheme: counts must be >= 1");
        total += counts[i];
    }
    if (total != n - 1) {
        throw std::invalid_argument("regular scheme: counts must sum to n-1");
    }
}

std::pair<double, double> regular_scheme_check(const RegularScheme& s, Field f, int d, int r) {
    s.validate();
    if (r < 0) throw std::invalid_argument("regular_scheme_check: r must be >= 0");
    double lhs = 1.0;
    for (std::size_t i = 0; i < s.angles.size(); ++i) {
        lhs += std::pow(s.angles[i], r) * static_cast<double>(s.counts[i]);
    }
    const double rhs = static_cast<double>(s.n) * c_t_exact(f, d, r).to_double();
    return {lhs, rhs};
}

double induced_density(double z, Field f, int d) {
    if (d < 2) throw std::invalid_argument("induced_density: d must be >= 2");
    if (!(z > 0.0 && z < 1.0)) {
        throw std::invalid_argument("induced_density: z must lie in (0,1)");
    }
    const double m = field_dim(f);
    const double a = m / 2.0;
    const double b = m / 2.0 * (d - 1);
    const double log_norm = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b);
    return std::exp(log_norm + (a - 1.0) * std::log(z) + (b - 1.0) * std::log1p(-z));
}

} // namespace ttd
