#ifndef TTD_POLYSPACE_HPP
#define TTD_POLYSPACE_HPP

#include "ttd/hilbert.hpp"
#include "ttd/moments.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <utility>

namespace ttd {

/// Sparse real-coefficient polynomial in the md real coordinates of F^d.
/// Terms map a MultiIndex of exponents to a coefficient; zero coefficients
/// are never stored.
class Poly {
public:
    Poly() = default;
    explicit Poly(int num_vars) : num_vars_(num_vars) {}

    static Poly constant(int num_vars, double c);
    static Poly variable(int num_vars, int var, double coeff = 1.0);

    int num_vars() const { return num_vars_; }
    const std::map<MultiIndex, double>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Total degree of the highest term, -1 for the zero polynomial.
    int degree() const;
    /// True when all stored terms share one total degree (or none stored).
    bool is_homogeneous() const;

    void add_term(const MultiIndex& alpha, double coeff);
    double coeff(const MultiIndex& alpha) const;

    Poly& operator+=(const Poly& g);
    Poly& operator-=(const Poly& g);
    Poly& operator*=(double s);
    friend Poly operator+(Poly f, const Poly& g) { return f += g; }
    friend Poly operator-(Poly f, const Poly& g) { return f -= g; }
    friend Poly operator*(Poly f, double s) { return f *= s; }
    friend Poly operator*(double s, Poly f) { return f *= s; }

    double eval(std::span<const double> coords) const;
    Poly derivative(int var) const;

private:
    int num_vars_ = 0;
    std::map<MultiIndex, double> terms_;
};

Poly poly_mul(const Poly& f, const Poly& g);
Poly poly_pow(const Poly& f, int t);

/// Supported desk-scale envelope; calls that would exceed it are rejected
/// with std::length_error.
constexpr int kMaxRealVars = 12;
constexpr int kMaxPolyDegree = 10;
void check_envelope(int num_vars, int degree);

/// Real coordinates of a vector, entry-major: entry j contributes its m
/// components x_{j1}..x_{jm}.
std::vector<double> coords(const Vector& v, Field f);

/// |<w,.>|^2 as a homogeneous degree-2 Poly in the md coordinates of the
/// free variable, via the symmetric expansion over products
/// Re(q_j conj(q_k) i_r) Re(w_j conj(w_k) i_r).
Poly expand_abs_ip_sq(const Vector& w, Field f);

/// K_w = (|<w,.>|^2)^t, the reproducing kernel of Hom(t,t).
Poly kernel_poly(const Vector& w, Field f, int t);

/// Apolar inner product <f,g> = (1/b_{t,m}) sum_{|alpha|=2t} alpha! f_a g_a
/// on homogeneous degree-2t polynomials. Throws on degree mismatch.
double apolar(const Poly& f, const Poly& g, int t, int m);

/// Reproducing-property probe: lhs = <K_w, f>, rhs = f(w).
std::pair<double, double> reproduce(const Poly& f, const Vector& w, int t, Field field);

/// Exact integral of f over the unit sphere S(R^{md}), term by term.
double sphere_integral(const Poly& f);

/// dim Hom(t,t) measured as the numerical rank of the kernel Gram
/// G_jk = |<w_j,w_k>|^{2t} of random unit vectors.
struct RankResult {
    int rank = 0;
    bool enough_samples = true; // false when samples < dim_homtt + margin
};
RankResult homtt_dim_by_rank(Field f, int d, int t, int samples, std::uint64_t seed);

/// Both sides of the multinomial tight-frame identity
/// sum_{|alpha|=t} C(t,alpha) P^alpha(z) P^alpha(w) = |<w,z>|^{2t}
/// for the quaternionic P system (field H only).
std::pair<double, double> tight_frame_expansion_check(Field f, int d, int t,
                                                      const Vector& w, const Vector& z);

/// The second-order plane-wave operator |<w,D>|^2 applied to f, where
/// <w,D> = sum_{j,r} conj(w_j) i_r d/dx_{jr} with quaternion-weighted
/// recombination. Only this real-valued composite is exposed.
Poly plane_wave_diff(const Vector& w, Field f, const Poly& poly);

/// Laplacian in the md real coordinates.
Poly laplacian(const Poly& f);

} // namespace ttd

#endif
