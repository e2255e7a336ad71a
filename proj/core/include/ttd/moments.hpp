#ifndef TTD_MOMENTS_HPP
#define TTD_MOMENTS_HPP

#include "ttd/hilbert.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ttd {

using MultiIndex = std::vector<int>;

/// Exact rational on 128-bit integers, reduced after every operation.
/// Covers the closed-form constants for the supported range (t, d <= 12)
/// without drift; convert to double only at the boundary.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d);

    Rational& operator+=(const Rational& r);
    Rational& operator-=(const Rational& r);
    Rational& operator*=(const Rational& r);
    Rational& operator/=(const Rational& r);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    double to_double() const;
    long long num() const { return static_cast<long long>(num_); }
    long long den() const { return static_cast<long long>(den_); }
    std::string str() const; // "p/q" or "p"

private:
    __int128 num_;
    __int128 den_; // > 0
    void reduce();
};

// Exact integer helpers shared across modules.
long long binomial(int n, int k);
long long factorial(int n);
long long multi_factorial(const MultiIndex& alpha);         // alpha!
long long multinomial(int t, const MultiIndex& alpha);      // t! / alpha!, |alpha| = t

/// Pochhammer (a/2)_n of a half-integer argument, exact.
Rational pochhammer_half(int twice_a, int n);

/// c_t(F^d) = prod_{j=0}^{t-1} (m+2j)/(md+2j): the mean of |<x,y>|^{2t}
/// over the unit sphere, and the sharp constant in the packing inequality.
Rational c_t_exact(Field f, int d, int t);
double c_t(Field f, int d, int t);

/// Moment of a monomial over the unit sphere S(R^{md}) where md =
/// alpha.size(): zero when any exponent is odd, else a Pochhammer ratio.
Rational sphere_monomial_moment_exact(const MultiIndex& alpha);
double sphere_monomial_moment(const MultiIndex& alpha);

/// b_{t,m} = prod_{j=1}^t 2j(2j+m-2), the apolar normalization.
double b_const(int t, int m);
long long b_const_exact(int t, int m);

/// dim Hom_{F^d}(t,t).
long long dim_homtt(Field f, int d, int t);

/// dim_F Hom_r(F^d) = C(r+md-1, md-1).
long long dim_hom_r(Field f, int d, int r);

/// Maximal number of equiangular lines in F^d and the equiangularity
/// constant of a maximal set.
struct SicBound {
    long long n_max;
    double constant;        // m / (md + 2)
    Rational constant_exact;
};
SicBound sic_bound(Field f, int d);

} // namespace ttd

#endif
