#include "ttd/designs.hpp"

#include "ttd/moments.hpp"
#include "ttd/polyspace.hpp"
#include "ttd/projective.hpp"
#include "ttd/rng.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ttd {

namespace {

constexpr std::uint64_t kProbeSeed = 0xB355E1D05ULL;
constexpr int kBesselProbeCount = 32;
constexpr int kCubatureProbeCount = 3;

double ipow(double base, int e) {
    double acc = 1.0;
    for (int i = 0; i < e; ++i) acc *= base;
    return acc;
}

/// Unit-vector, unit-weight-sum presentation of a configuration, with the
/// vector norms absorbed into the weights at order t. Zero vectors carry no
/// mass and are dropped.
Configuration normalized_presentation(const Configuration& cfg, int t,
                                      bool& weights_changed, bool& vectors_changed) {
    Configuration out;
    out.field = cfg.field;
    out.dim = cfg.dim;
    weights_changed = false;
    vectors_changed = false;

    double total = 0.0;
    std::vector<double> mass;
    mass.reserve(cfg.n());
    for (int j = 0; j < cfg.n(); ++j) {
        const double nsq = norm_sq(cfg.vectors[j]);
        const double mj = cfg.weight(j) * ipow(nsq, t);
        mass.push_back(mj);
        total += mj;
    }

    weights_changed = cfg.weighted() && std::abs(total - 1.0) > 1e-12;
    for (int j = 0; j < cfg.n(); ++j) {
        const double nsq = norm_sq(cfg.vectors[j]);
        if (nsq == 0.0) {
            vectors_changed = true;
            continue;
        }
        if (std::abs(nsq - 1.0) > 1e-12) vectors_changed = true;
        out.vectors.push_back(scaled(cfg.vectors[j], 1.0 / std::sqrt(nsq)));
        out.weights.push_back(mass[j] / total);
    }
    return out;
}

std::vector<Vector> bessel_probes(Field f, int d) {
    Rng rng(kProbeSeed);
    std::vector<Vector> probes;
    probes.reserve(kBesselProbeCount + d);
    for (int i = 0; i < kBesselProbeCount; ++i) {
        probes.push_back(random_unit_vector(rng, f, d));
    }
    for (int j = 0; j < d; ++j) {
        Vector e(d);
        e[j] = Quaternion(1.0);
        probes.push_back(e);
    }
    return probes;
}

} // namespace

double potential(const Configuration& cfg, int t) {
    cfg.validate();
    if (t < 1) throw std::invalid_argument("potential: t must be >= 1");
    const int n = cfg.n();
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
        acc += cfg.weight(j) * cfg.weight(j) * ipow(norm_sq(cfg.vectors[j]), 2 * t);
        for (int k = j + 1; k < n; ++k) {
            const double term = ipow(abs_ip_sq(cfg.vectors[j], cfg.vectors[k]), t);
            acc += 2.0 * cfg.weight(j) * cfg.weight(k) * term;
        }
    }
    return acc;
}

double design_bound(const Configuration& cfg, int t) {
    cfg.validate();
    if (t < 1) throw std::invalid_argument("design_bound: t must be >= 1");
    double sum = 0.0;
    for (int j = 0; j < cfg.n(); ++j) {
        sum += cfg.weight(j) * ipow(norm_sq(cfg.vectors[j]), t);
    }
    return c_t(cfg.field, cfg.dim, t) * sum * sum;
}

DesignReport verify(const Configuration& cfg, int t, double tol) {
    cfg.validate();
    if (t < 1) throw std::invalid_argument("verify: t must be >= 1");

    DesignReport report;
    report.t = t;
    report.tolerance = tol;

    // Weighted input is verified in the normalized presentation (bound c_t);
    // unweighted input keeps the raw two-sided form.
    bool weights_changed = false, vectors_changed = false;
    const Configuration unit =
        normalized_presentation(cfg, t, weights_changed, vectors_changed);
    const bool use_normalized = cfg.weighted();
    report.weights_normalized = use_normalized && weights_changed;
    report.vectors_normalized = use_normalized && vectors_changed;

    const Configuration& headline = use_normalized ? unit : cfg;

    report.potential = potential(headline, t);
    report.bound = design_bound(headline, t);
    report.gap = report.potential - report.bound;
    report.relative_gap = report.gap / report.bound;

    // Lower orders r < t use the renormalized vectors |v_j|^{t/r-1} v_j; in
    // the normalized presentation the weights simply carry over.
    bool all_within = true;
    for (int r = 1; r <= t; ++r) {
        PerOrderCheck check;
        check.r = r;
        if (use_normalized) {
            double acc = 0.0;
            for (int j = 0; j < unit.n(); ++j) {
                acc += unit.weights[j] * unit.weights[j];
                for (int k = j + 1; k < unit.n(); ++k) {
                    acc += 2.0 * unit.weights[j] * unit.weights[k] *
                           ipow(abs_ip_sq(unit.vectors[j], unit.vectors[k]), r);
                }
            }
            check.potential = acc;
            check.bound = c_t(cfg.field, cfg.dim, r);
        } else {
            double acc = 0.0;
            double norm_sum = 0.0;
            for (int j = 0; j < cfg.n(); ++j) {
                const double nj = norm_sq(cfg.vectors[j]);
                norm_sum += ipow(nj, t);
                acc += ipow(nj, 2 * t);
                for (int k = j + 1; k < cfg.n(); ++k) {
                    const double nk = norm_sq(cfg.vectors[k]);
                    acc += 2.0 * ipow(abs_ip_sq(cfg.vectors[j], cfg.vectors[k]), r) *
                           ipow(nj * nk, t - r);
                }
            }
            check.potential = acc;
            check.bound = c_t(cfg.field, cfg.dim, r) * norm_sum * norm_sum;
        }
        check.gap = check.potential - check.bound;
        if (!(std::abs(check.gap) <= tol * std::max(check.bound, 1e-300))) all_within = false;
        report.per_r.push_back(check);
    }
    report.is_design = all_within;

    report.spectrum = angle_spectrum(unit);

    // Generalised Bessel identity at deterministic probes.
    const std::vector<Vector> probes = bessel_probes(cfg.field, cfg.dim);
    double bessel_max = 0.0;
    for (const Vector& x : probes) {
        double lhs = 0.0;
        for (int j = 0; j < unit.n(); ++j) {
            lhs += unit.weights[j] * ipow(abs_ip_sq(unit.vectors[j], x), t);
        }
        bessel_max = std::max(bessel_max, std::abs(lhs - c_t(cfg.field, cfg.dim, t)));
    }
    report.bessel_max_residual = bessel_max;

    // Cubature rule, symbolic route: exact sphere integration of probe
    // kernels against the weighted node sum. Skipped outside the polynomial
    // envelope (the numeric routes above still stand).
    const int md = field_dim(cfg.field) * cfg.dim;
    if (md <= kMaxRealVars && 2 * t <= kMaxPolyDegree) {
        double cub_max = 0.0;
        for (int i = 0; i < kCubatureProbeCount + 1; ++i) {
            Vector p;
            if (i == 0) {
                p.assign(cfg.dim, Quaternion());
                p[0] = Quaternion(1.0);
            } else {
                p = probes[i - 1];
            }
            const Poly kernel = kernel_poly(p, cfg.field, t);
            const double lhs = sphere_integral(kernel);
            double rhs = 0.0;
            for (int j = 0; j < unit.n(); ++j) {
                rhs += unit.weights[j] * kernel.eval(coords(unit.vectors[j], cfg.field));
            }
            cub_max = std::max(cub_max, std::abs(lhs - rhs));
        }
        report.cubature_max_residual = cub_max;
    } else {
        report.cubature_max_residual = std::numeric_limits<double>::quiet_NaN();
    }

    report.hoggar_residuals = hoggar_test(unit, t);
    return report;
}

Configuration mub_family(Field f, int d) {
    if (d != 2) throw std::invalid_argument("mub_family: only d = 2 is supported");
    const int m = field_dim(f);
    const double s = 1.0 / std::sqrt(2.0);

    Configuration cfg;
    cfg.field = f;
    cfg.dim = 2;
    cfg.vectors.push_back({Quaternion(1.0), Quaternion()});
    cfg.vectors.push_back({Quaternion(), Quaternion(1.0)});
    for (int r = 0; r < m; ++r) {
        const Quaternion a = Quaternion::unit(r);
        cfg.vectors.push_back({Quaternion(s), a * s});
        cfg.vectors.push_back({Quaternion(s), a * (-s)});
    }
    return cfg;
}

Configuration onb(Field f, int d) {
    if (d < 1) throw std::invalid_argument("onb: d must be >= 1");
    Configuration cfg;
    cfg.field = f;
    cfg.dim = d;
    for (int j = 0; j < d; ++j) {
        Vector e(d);
        e[j] = Quaternion(1.0);
        cfg.vectors.push_back(e);
    }
    return cfg;
}

EquiangularResult equiangular_check(const Configuration& cfg, double tol) {
    cfg.validate();
    for (const Vector& v : cfg.vectors) {
        if (std::abs(norm_sq(v) - 1.0) > 1e-9) {
            throw std::invalid_argument("equiangular_check: vectors must be unit norm");
        }
    }
    const SicBound bound = sic_bound(cfg.field, cfg.dim);
    EquiangularResult out;
    if (cfg.n() == 1) {
        out.is_equiangular = true;
        out.constant = 0.0;
        out.meets_sic_bound = (bound.n_max == 1);
        return out;
    }
    const AngleSpectrum spectrum = angle_spectrum(cfg, tol);
    if (spectrum.clusters.size() != 1) {
        return out; // two or more distinct angles
    }
    out.is_equiangular = true;
    out.constant = spectrum.clusters[0].angle;
    out.meets_sic_bound =
        cfg.n() == bound.n_max && std::abs(out.constant - bound.constant) <= tol;
    return out;
}

} // namespace ttd
