#include "ttd/search.hpp"

#include "ttd/polyspace.hpp"
#include "ttd/rng.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ttd {

namespace {

constexpr double kArmijoShrink = 0.5;
constexpr double kArmijoDecrease = 1e-4;

double ipow(double base, int e) {
    double acc = 1.0;
    for (int i = 0; i < e; ++i) acc *= base;
    return acc;
}

using CoordBlocks = std::vector<std::vector<double>>;

double block_norm_sq(const CoordBlocks& g) {
    double acc = 0.0;
    for (const auto& block : g)
        for (double v : block) acc += v * v;
    return acc;
}

/// Gradient projected onto the product of sphere tangent spaces:
/// g_j - <g_j, v_j> v_j per vector, in the md real coordinates.
CoordBlocks tangent_project(const Configuration& cfg, const CoordBlocks& grad, Field f) {
    CoordBlocks out = grad;
    for (int j = 0; j < cfg.n(); ++j) {
        const std::vector<double> vc = coords(cfg.vectors[j], f);
        double dot = 0.0;
        for (std::size_t i = 0; i < vc.size(); ++i) dot += out[j][i] * vc[i];
        const double nsq = norm_sq(cfg.vectors[j]);
        for (std::size_t i = 0; i < vc.size(); ++i) out[j][i] -= dot / nsq * vc[i];
    }
    return out;
}

Configuration step_and_renormalize(const Configuration& cfg, const CoordBlocks& dir,
                                   double step, Field f) {
    const int m = field_dim(f);
    Configuration out = cfg;
    for (int j = 0; j < cfg.n(); ++j) {
        Vector& v = out.vectors[j];
        for (int e = 0; e < cfg.dim; ++e) {
            for (int r = 0; r < m; ++r) {
                v[e].component(r) -= step * dir[j][e * m + r];
            }
        }
        const double nrm = norm(v);
        if (nrm > 0.0) {
            for (Quaternion& q : v) q *= 1.0 / nrm;
        }
    }
    return out;
}

} // namespace

std::vector<std::vector<double>> potential_gradient(const Configuration& cfg, int t) {
    cfg.validate();
    if (t < 1) throw std::invalid_argument("potential_gradient: t must be >= 1");
    const int n = cfg.n();
    const int m = field_dim(cfg.field);
    const int block = m * cfg.dim;

    CoordBlocks grad(n, std::vector<double>(block, 0.0));
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            const Quaternion ip_kj = inner(cfg.vectors[k], cfg.vectors[j]);
            const double s = norm_sq(ip_kj);
            const double factor = 4.0 * t * cfg.weight(j) * cfg.weight(k) * ipow(s, t - 1);
            if (factor == 0.0) continue;
            for (int e = 0; e < cfg.dim; ++e) {
                // d|<v_j,v_k>|^2 / dx_{j,e,r} = 2 Re(conj(i_r) (v_k)_e <v_k,v_j>),
                // and Re(conj(i_r) q) is just component r of q.
                const Quaternion q = cfg.vectors[k][e] * ip_kj;
                for (int r = 0; r < m; ++r) {
                    grad[j][e * m + r] += factor * q.component(r);
                }
            }
        }
    }
    return grad;
}

SearchResult minimize(const SearchOptions& opts) {
    opts.validate();

    SearchResult best;
    bool have_best = false;

    for (int restart = 0; restart < opts.restarts; ++restart) {
        Configuration cfg =
            random_unit_configuration(opts.field, opts.dim, opts.n,
                                      split_seed(opts.seed, static_cast<std::uint64_t>(restart)));

        double value = potential(cfg, opts.t);
        const double bound = design_bound(cfg, opts.t);
        std::vector<TrajectoryPoint> trajectory{{0, value}};
        bool converged = false;

        double step = 1.0 / (static_cast<double>(opts.t) * opts.n);
        const double initial_step = step;

        for (int iter = 1; iter <= opts.max_iters; ++iter) {
            if (value - bound <= opts.target_gap * std::max(1.0, bound)) {
                converged = true;
                break;
            }
            CoordBlocks grad = potential_gradient(cfg, opts.t);
            grad = tangent_project(cfg, grad, opts.field);
            const double gnorm_sq = block_norm_sq(grad);
            if (std::sqrt(gnorm_sq) <= opts.grad_tol) {
                converged = true;
                break;
            }

            // Armijo backtracking on the retracted step; warm-started from
            // twice the previously accepted step.
            double s = std::min(2.0 * step, 1e4 * initial_step);
            bool accepted = false;
            for (int probe = 0; probe < 60; ++probe) {
                const Configuration trial = step_and_renormalize(cfg, grad, s, opts.field);
                const double trial_value = potential(trial, opts.t);
                if (trial_value <= value - kArmijoDecrease * s * gnorm_sq) {
                    cfg = trial;
                    value = trial_value;
                    step = s;
                    accepted = true;
                    break;
                }
                s *= kArmijoShrink;
            }
            if (!accepted) {
                converged = true; // no descent direction left at double precision
                break;
            }
            trajectory.push_back({iter, value});
        }

        // (potential, restart_index) lexicographic argmin.
        if (!have_best || value < best.report.potential) {
            best.best = cfg;
            best.report = verify(cfg, opts.t, kSearchTol);
            best.trajectory = std::move(trajectory);
            best.restart_index = restart;
            best.converged = converged;
            have_best = true;
        }
    }
    return best;
}

void SearchOptions::validate() const {
    if (n < 1) throw std::invalid_argument("search: n must be >= 1");
    if (t < 1) throw std::invalid_argument("search: t must be >= 1");
    if (dim < 1) throw std::invalid_argument("search: dim must be >= 1");
    if (restarts < 1) throw std::invalid_argument("search: restarts must be >= 1");
    if (max_iters < 0) throw std::invalid_argument("search: max_iters must be >= 0");
}

std::optional<std::pair<long long, long long>> rationalize(double x, long long max_den,
                                                           double tol) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::invalid_argument("rationalize: x must lie in [0,1]");
    }
    if (max_den < 1) throw std::invalid_argument("rationalize: max_den must be >= 1");

    // Continued-fraction convergents p_k/q_k of x.
    long long p_prev = 1, q_prev = 0; // p_{-1}/q_{-1}
    long long p = 0, q = 1;           // p_0/q_0 floor term handled below
    double frac = x;
    long long a = static_cast<long long>(std::floor(frac));
    p = a;
    q = 1;
    frac -= static_cast<double>(a);

    long long best_p = p, best_q = q;
    double best_err = std::abs(x - static_cast<double>(p) / static_cast<double>(q));

    for (int iter = 0; iter < 64 && frac > 1e-18; ++iter) {
        frac = 1.0 / frac;
        a = static_cast<long long>(std::floor(frac));
        frac -= static_cast<double>(a);
        const long long p_next = a * p + p_prev;
        const long long q_next = a * q + q_prev;
        if (q_next > max_den) break;
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
        const double err = std::abs(x - static_cast<double>(p) / static_cast<double>(q));
        if (err < best_err) {
            best_err = err;
            best_p = p;
            best_q = q;
        }
    }

    if (best_err < tol) {
        const long long g = std::gcd(best_p, best_q);
        return std::make_pair(best_p / (g == 0 ? 1 : g), best_q / (g == 0 ? 1 : g));
    }
    return std::nullopt;
}

} // namespace ttd
