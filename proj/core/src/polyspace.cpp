#include "ttd/polyspace.hpp"

#include "ttd/linalg.hpp"
#include "ttd/rng.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace ttd {

namespace {

int index_sum(const MultiIndex& alpha) {
    return std::accumulate(alpha.begin(), alpha.end(), 0);
}

/// Quaternion-coefficient polynomial in real variables. Internal carrier
/// for the plane-wave operators; coefficients multiply in order (they do
/// not commute), the real monomials do.
class QPoly {
public:
    explicit QPoly(int num_vars) : num_vars_(num_vars) {}

    static QPoly from_real(const Poly& f) {
        QPoly out(f.num_vars());
        for (const auto& [alpha, c] : f.terms()) out.terms_[alpha] = Quaternion(c);
        return out;
    }

    int num_vars() const { return num_vars_; }
    const std::map<MultiIndex, Quaternion>& terms() const { return terms_; }

    void add_term(const MultiIndex& alpha, const Quaternion& c) {
        auto it = terms_.find(alpha);
        if (it == terms_.end()) {
            if (norm_sq(c) != 0.0) terms_.emplace(alpha, c);
            return;
        }
        it->second += c;
        if (norm_sq(it->second) == 0.0) terms_.erase(it);
    }

    /// Partial derivative with the quaternion factor applied on the left of
    /// every coefficient: f -> left * d f / d x_var.
    QPoly left_derivative(const Quaternion& left, int var) const {
        QPoly out(num_vars_);
        for (const auto& [alpha, c] : terms_) {
            if (alpha[var] == 0) continue;
            MultiIndex beta = alpha;
            beta[var] -= 1;
            out.add_term(beta, left * c * static_cast<double>(alpha[var]));
        }
        return out;
    }

    QPoly& operator+=(const QPoly& g) {
        for (const auto& [alpha, c] : g.terms_) add_term(alpha, c);
        return *this;
    }

    /// Converts back to a real Poly; throws if any coefficient kept a
    /// non-real part beyond roundoff.
    Poly to_real() const {
        double scale = 0.0;
        for (const auto& [alpha, c] : terms_) scale = std::max(scale, norm(c));
        Poly out(num_vars_);
        for (const auto& [alpha, c] : terms_) {
            const double imag = std::sqrt(c.x * c.x + c.y * c.y + c.z * c.z);
            if (imag > 1e-9 * std::max(scale, 1.0)) {
                throw std::logic_error("plane-wave composite produced a non-real coefficient");
            }
            if (c.w != 0.0) out.add_term(alpha, c.w);
        }
        return out;
    }

private:
    int num_vars_;
    std::map<MultiIndex, Quaternion> terms_;
};

/// <w,D> = sum_{j,r} conj(w_j) i_r d/dx_{jr}.
QPoly apply_wD(const Vector& w, int m, const QPoly& f) {
    const int d = static_cast<int>(w.size());
    QPoly out(f.num_vars());
    for (int j = 0; j < d; ++j) {
        const Quaternion wj_conj = conj(w[j]);
        for (int r = 0; r < m; ++r) {
            out += f.left_derivative(wj_conj * Quaternion::unit(r), j * m + r);
        }
    }
    return out;
}

/// <D,w> = sum_{j,r} conj(i_r) w_j d/dx_{jr}.
QPoly apply_Dw(const Vector& w, int m, const QPoly& f) {
    const int d = static_cast<int>(w.size());
    QPoly out(f.num_vars());
    for (int j = 0; j < d; ++j) {
        for (int r = 0; r < m; ++r) {
            out += f.left_derivative(conj(Quaternion::unit(r)) * w[j], j * m + r);
        }
    }
    return out;
}

} // namespace

Poly Poly::constant(int num_vars, double c) {
    Poly out(num_vars);
    out.add_term(MultiIndex(num_vars, 0), c);
    return out;
}

Poly Poly::variable(int num_vars, int var, double coeff) {
    if (var < 0 || var >= num_vars) throw std::invalid_argument("poly: variable out of range");
    Poly out(num_vars);
    MultiIndex alpha(num_vars, 0);
    alpha[var] = 1;
    out.add_term(alpha, coeff);
    return out;
}

int Poly::degree() const {
    int deg = -1;
    for (const auto& [alpha, c] : terms_) deg = std::max(deg, index_sum(alpha));
    return deg;
}

bool Poly::is_homogeneous() const {
    int deg = -1;
    for (const auto& [alpha, c] : terms_) {
        const int s = index_sum(alpha);
        if (deg == -1) deg = s;
        else if (s != deg) return false;
    }
    return true;
}

void Poly::add_term(const MultiIndex& alpha, double coeff) {
    if (static_cast<int>(alpha.size()) != num_vars_) {
        throw std::invalid_argument("poly: multi-index arity mismatch");
    }
    auto it = terms_.find(alpha);
    if (it == terms_.end()) {
        if (coeff != 0.0) terms_.emplace(alpha, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0.0) terms_.erase(it);
}

double Poly::coeff(const MultiIndex& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? 0.0 : it->second;
}

Poly& Poly::operator+=(const Poly& g) {
    if (num_vars_ != g.num_vars_) throw std::invalid_argument("poly: num_vars mismatch");
    for (const auto& [alpha, c] : g.terms_) add_term(alpha, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& g) {
    if (num_vars_ != g.num_vars_) throw std::invalid_argument("poly: num_vars mismatch");
    for (const auto& [alpha, c] : g.terms_) add_term(alpha, -c);
    return *this;
}

Poly& Poly::operator*=(double s) {
    if (s == 0.0) {
        terms_.clear();
        return *this;
    }
    for (auto& [alpha, c] : terms_) c *= s;
    return *this;
}

double Poly::eval(std::span<const double> coords) const {
    if (static_cast<int>(coords.size()) != num_vars_) {
        throw std::invalid_argument("poly: evaluation point arity mismatch");
    }
    double acc = 0.0;
    for (const auto& [alpha, c] : terms_) {
        double term = c;
        for (int v = 0; v < num_vars_; ++v) {
            for (int e = 0; e < alpha[v]; ++e) term *= coords[v];
        }
        acc += term;
    }
    return acc;
}

Poly Poly::derivative(int var) const {
    if (var < 0 || var >= num_vars_) throw std::invalid_argument("poly: variable out of range");
    Poly out(num_vars_);
    for (const auto& [alpha, c] : terms_) {
        if (alpha[var] == 0) continue;
        MultiIndex beta = alpha;
        beta[var] -= 1;
        out.add_term(beta, c * alpha[var]);
    }
    return out;
}

Poly poly_mul(const Poly& f, const Poly& g) {
    if (f.num_vars() != g.num_vars()) throw std::invalid_argument("poly_mul: num_vars mismatch");
    check_envelope(f.num_vars(), std::max(0, f.degree()) + std::max(0, g.degree()));
    Poly out(f.num_vars());
    MultiIndex gamma(f.num_vars());
    for (const auto& [alpha, ca] : f.terms()) {
        for (const auto& [beta, cb] : g.terms()) {
            for (int v = 0; v < f.num_vars(); ++v) gamma[v] = alpha[v] + beta[v];
            out.add_term(gamma, ca * cb);
        }
    }
    return out;
}

Poly poly_pow(const Poly& f, int t) {
    if (t < 0) throw std::invalid_argument("poly_pow: negative exponent");
    check_envelope(f.num_vars(), std::max(0, f.degree()) * t);
    Poly acc = Poly::constant(f.num_vars(), 1.0);
    for (int i = 0; i < t; ++i) acc = poly_mul(acc, f);
    return acc;
}

void check_envelope(int num_vars, int degree) {
    if (num_vars > kMaxRealVars || degree > kMaxPolyDegree) {
        throw std::length_error(
            "polynomial envelope exceeded: supported range is md <= " +
            std::to_string(kMaxRealVars) + " real variables and degree <= " +
            std::to_string(kMaxPolyDegree) + " (got md=" + std::to_string(num_vars) +
            ", degree=" + std::to_string(degree) + ")");
    }
}

std::vector<double> coords(const Vector& v, Field f) {
    if (!conforms(v, f)) throw std::invalid_argument("coords: vector does not conform to field");
    const int m = field_dim(f);
    std::vector<double> out;
    out.reserve(v.size() * m);
    for (const Quaternion& q : v) {
        for (int r = 0; r < m; ++r) out.push_back(q.component(r));
    }
    return out;
}

Poly expand_abs_ip_sq(const Vector& w, Field f) {
    if (!conforms(w, f)) {
        throw std::invalid_argument("expand_abs_ip_sq: vector does not conform to field");
    }
    const int m = field_dim(f);
    const int d = static_cast<int>(w.size());
    check_envelope(m * d, 2);

    // |<w,q>|^2 = sum_{j,k,r} Re(q_j conj(q_k) i_r) Re(w_j conj(w_k) i_r),
    // and Re(q_j conj(q_k) i_r) = sum_{s,u} Re(i_s conj(i_u) i_r) x_{js} x_{ku}.
    double structure[4][4][4];
    for (int s = 0; s < m; ++s)
        for (int u = 0; u < m; ++u)
            for (int r = 0; r < m; ++r)
                structure[s][u][r] =
                    re(Quaternion::unit(s) * conj(Quaternion::unit(u)) * Quaternion::unit(r));

    Poly out(m * d);
    MultiIndex alpha(m * d, 0);
    for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
            for (int r = 0; r < m; ++r) {
                const double a_jkr = re(w[j] * conj(w[k]) * Quaternion::unit(r));
                if (a_jkr == 0.0) continue;
                for (int s = 0; s < m; ++s) {
                    for (int u = 0; u < m; ++u) {
                        const double g = structure[s][u][r];
                        if (g == 0.0) continue;
                        alpha.assign(m * d, 0);
                        alpha[j * m + s] += 1;
                        alpha[k * m + u] += 1;
                        out.add_term(alpha, g * a_jkr);
                    }
                }
            }
        }
    }
    return out;
}

Poly kernel_poly(const Vector& w, Field f, int t) {
    check_envelope(field_dim(f) * static_cast<int>(w.size()), 2 * t);
    return poly_pow(expand_abs_ip_sq(w, f), t);
}

double apolar(const Poly& f, const Poly& g, int t, int m) {
    if (f.num_vars() != g.num_vars()) throw std::invalid_argument("apolar: num_vars mismatch");
    check_envelope(f.num_vars(), 2 * t);
    for (const Poly* p : {&f, &g}) {
        if (!p->empty() && (!p->is_homogeneous() || p->degree() != 2 * t)) {
            throw std::invalid_argument("apolar: arguments must be homogeneous of degree 2t");
        }
    }
    double acc = 0.0;
    for (const auto& [alpha, fa] : f.terms()) {
        const double ga = g.coeff(alpha);
        if (ga == 0.0) continue;
        acc += static_cast<double>(multi_factorial(alpha)) * fa * ga;
    }
    return acc / b_const(t, m);
}

std::pair<double, double> reproduce(const Poly& f, const Vector& w, int t, Field field) {
    const Poly kernel = kernel_poly(w, field, t);
    const double lhs = apolar(kernel, f, t, field_dim(field));
    const double rhs = f.eval(coords(w, field));
    return {lhs, rhs};
}

double sphere_integral(const Poly& f) {
    double total = 0.0;
    for (const auto& [alpha, c] : f.terms()) {
        bool odd = false;
        for (int a : alpha) {
            if (a % 2 != 0) {
                odd = true;
                break;
            }
        }
        if (odd) continue;
        total += c * sphere_monomial_moment_exact(alpha).to_double();
    }
    return total;
}

RankResult homtt_dim_by_rank(Field f, int d, int t, int samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("homtt_dim_by_rank: samples must be >= 1");
    Rng rng(seed);
    std::vector<Vector> w;
    w.reserve(samples);
    for (int i = 0; i < samples; ++i) w.push_back(random_unit_vector(rng, f, d));

    // Gram of the kernels under the apolar inner product: by the reproducing
    // property <K_v, K_w> = |<v,w>|^{2t}.
    std::vector<double> gram(static_cast<std::size_t>(samples) * samples);
    for (int i = 0; i < samples; ++i) {
        for (int j = i; j < samples; ++j) {
            double g = abs_ip_sq(w[i], w[j]);
            double p = 1.0;
            for (int e = 0; e < t; ++e) p *= g;
            gram[i * samples + j] = p;
            gram[j * samples + i] = p;
        }
    }

    RankResult out;
    out.rank = numerical_rank(gram, samples, 1e-8);
    out.enough_samples = samples >= dim_homtt(f, d, t) + 5;
    return out;
}

std::pair<double, double> tight_frame_expansion_check(Field f, int d, int t,
                                                      const Vector& w, const Vector& z) {
    if (f != Field::H) {
        throw std::invalid_argument("tight_frame_expansion_check: P system is quaternionic only");
    }
    if (static_cast<int>(w.size()) != d || static_cast<int>(z.size()) != d) {
        throw std::invalid_argument("tight_frame_expansion_check: dimension mismatch");
    }

    // P = (p_j) u (sqrt2 p_jkr), j<k, r=1..4, evaluated at both points.
    std::vector<double> pw, pz;
    for (int j = 0; j < d; ++j) {
        pw.push_back(norm_sq(w[j]));
        pz.push_back(norm_sq(z[j]));
    }
    const double root2 = std::sqrt(2.0);
    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            for (int r = 0; r < 4; ++r) {
                pw.push_back(root2 * re(w[j] * conj(w[k]) * Quaternion::unit(r)));
                pz.push_back(root2 * re(z[j] * conj(z[k]) * Quaternion::unit(r)));
            }
        }
    }

    const int count = static_cast<int>(pw.size());
    double lhs = 0.0;
    MultiIndex alpha(count, 0);
    // Iterate |alpha| = t over the P index set.
    const std::function<void(int, int, double, double)> recurse =
        [&](int pos, int remaining, double prod_w, double prod_z) {
            if (pos == count - 1) {
                double pw_pow = 1.0, pz_pow = 1.0;
                for (int e = 0; e < remaining; ++e) {
                    pw_pow *= pw[pos];
                    pz_pow *= pz[pos];
                }
                alpha[pos] = remaining;
                lhs += multinomial(t, alpha) * prod_w * pw_pow * prod_z * pz_pow;
                alpha[pos] = 0;
                return;
            }
            double pw_pow = 1.0, pz_pow = 1.0;
            for (int e = 0; e <= remaining; ++e) {
                alpha[pos] = e;
                recurse(pos + 1, remaining - e, prod_w * pw_pow, prod_z * pz_pow);
                pw_pow *= pw[pos];
                pz_pow *= pz[pos];
            }
            alpha[pos] = 0;
        };
    recurse(0, t, 1.0, 1.0);

    double rhs = 1.0;
    const double base = abs_ip_sq(w, z);
    for (int e = 0; e < t; ++e) rhs *= base;
    return {lhs, rhs};
}

Poly plane_wave_diff(const Vector& w, Field f, const Poly& poly) {
    if (!conforms(w, f)) {
        throw std::invalid_argument("plane_wave_diff: vector does not conform to field");
    }
    const int m = field_dim(f);
    if (poly.num_vars() != m * static_cast<int>(w.size())) {
        throw std::invalid_argument("plane_wave_diff: polynomial arity does not match m*d");
    }
    // |<w,D>|^2 = <w,D> o <D,w>.
    const QPoly inner_step = apply_Dw(w, m, QPoly::from_real(poly));
    return apply_wD(w, m, inner_step).to_real();
}

Poly laplacian(const Poly& f) {
    Poly out(f.num_vars());
    for (int v = 0; v < f.num_vars(); ++v) {
        out += f.derivative(v).derivative(v);
    }
    return out;
}

} // namespace ttd
