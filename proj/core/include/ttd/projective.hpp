#ifndef TTD_PROJECTIVE_HPP
#define TTD_PROJECTIVE_HPP

#include "ttd/hilbert.hpp"
#include "ttd/moments.hpp"

#include <span>
#include <utility>
#include <vector>

namespace ttd {

/// Orthogonal polynomial Q_k^(m) on [0,1] for the induced angle measure
/// mu_m; a Jacobi polynomial P_k^(m/2-1, (m/2)(d-1)-1)(1-2x) up to
/// normalization. Coefficients are in the monomial basis of x.
struct JacobiPoly {
    int k = 0;
    int m = 1;
    int d = 1;
    std::vector<double> coeffs; // coeffs[j] multiplies x^j

    double eval(double x) const;
};

JacobiPoly jacobi_q(int k, int m, int d);

/// Exact coefficient vector of Q_k^(m); jacobi_q is its double image.
std::vector<Rational> jacobi_q_exact(int k, int m, int d);

/// ||Q_k^(m)||^2 under mu_m, from the closed form with the convention
/// (x)_{-1} = 1/(x-1).
double jacobi_norm_sq(int k, int m, int d);
Rational jacobi_norm_sq_exact(int k, int m, int d);

/// Integral of a univariate polynomial against mu_m via the moment
/// sequence: int x^r dmu_m = c_r(F^d).
double moment_integral(std::span<const double> coeffs, Field f, int d);
Rational moment_integral_exact(std::span<const Rational> coeffs, Field f, int d);

/// Residuals sum_{j,k} w_j w_k Q_l^(m)(|<v_j,v_k>|^2) for l = 1..t, with
/// weights normalized to sum 1. All residuals vanish iff the configuration
/// is a projective t-design. Requires unit-norm vectors.
std::vector<double> hoggar_test(const Configuration& cfg, int t);

/// Finite set of projective points whose angle multiset from any point is
/// the same: angles alpha_r with counts d_{alpha_r} summing to n-1.
struct RegularScheme {
    long long n = 0;
    std::vector<double> angles;
    std::vector<long long> counts;

    void validate() const;
};

/// Both sides of 1 + sum_r alpha_r^r' d_{alpha_r} = n (m/2)_r' / (md/2)_r'.
std::pair<double, double> regular_scheme_check(const RegularScheme& s, Field f, int d, int r);

/// Density W(z) of the induced measure mu_m on (0,1) with respect to
/// Lebesgue measure (a Beta density). Requires d >= 2 and 0 < z < 1.
double induced_density(double z, Field f, int d);

} // namespace ttd

#endif
