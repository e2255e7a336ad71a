#include "ttd/moments.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ttd {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::string int128_str(__int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    std::string s;
    while (u != 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    return neg ? "-" + s : s;
}

} // namespace

Rational::Rational(long long n, long long d) : num_(n), den_(d) {
    if (d == 0) throw std::invalid_argument("rational: zero denominator");
    reduce();
}

void Rational::reduce() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    const __int128 g = gcd128(num_, den_);
    num_ /= g;
    den_ /= g;
}

Rational& Rational::operator+=(const Rational& r) {
    num_ = num_ * r.den_ + r.num_ * den_;
    den_ *= r.den_;
    reduce();
    return *this;
}

Rational& Rational::operator-=(const Rational& r) {
    num_ = num_ * r.den_ - r.num_ * den_;
    den_ *= r.den_;
    reduce();
    return *this;
}

Rational& Rational::operator*=(const Rational& r) {
    // Cross-reduce before multiplying so the envelope's products stay in range.
    const __int128 g1 = gcd128(num_, r.den_);
    const __int128 g2 = gcd128(r.num_, den_);
    num_ = (num_ / g1) * (r.num_ / g2);
    den_ = (den_ / g2) * (r.den_ / g1);
    reduce();
    return *this;
}

Rational& Rational::operator/=(const Rational& r) {
    if (r.num_ == 0) throw std::invalid_argument("rational: division by zero");
    Rational inv;
    inv.num_ = r.den_;
    inv.den_ = r.num_;
    inv.reduce();
    return *this *= inv;
}

double Rational::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
    if (den_ == 1) return int128_str(num_);
    return int128_str(num_) + "/" + int128_str(den_);
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    __int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
    }
    if (acc > std::numeric_limits<long long>::max()) {
        throw std::overflow_error("binomial: value exceeds 64 bits");
    }
    return static_cast<long long>(acc);
}

long long factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    long long acc = 1;
    for (int i = 2; i <= n; ++i) acc *= i;
    return acc;
}

long long multi_factorial(const MultiIndex& alpha) {
    long long acc = 1;
    for (int a : alpha) acc *= factorial(a);
    return acc;
}

long long multinomial(int t, const MultiIndex& alpha) {
    long long acc = 1;
    int remaining = t;
    for (int a : alpha) {
        acc *= binomial(remaining, a);
        remaining -= a;
    }
    if (remaining != 0) throw std::invalid_argument("multinomial: |alpha| != t");
    return acc;
}

Rational pochhammer_half(int twice_a, int n) {
    // (a)_n with a = twice_a/2; exact product of (twice_a + 2i)/2.
    Rational acc(1);
    for (int i = 0; i < n; ++i) {
        acc *= Rational(twice_a + 2 * i, 2);
    }
    return acc;
}

Rational c_t_exact(Field f, int d, int t) {
    if (d < 1) throw std::invalid_argument("c_t: d must be >= 1");
    if (t < 0) throw std::invalid_argument("c_t: t must be >= 0");
    const int m = field_dim(f);
    Rational acc(1);
    for (int j = 0; j < t; ++j) {
        acc *= Rational(m + 2 * j, m * d + 2 * j);
    }
    return acc;
}

double c_t(Field f, int d, int t) { return c_t_exact(f, d, t).to_double(); }

Rational sphere_monomial_moment_exact(const MultiIndex& alpha) {
    const int md = static_cast<int>(alpha.size());
    if (md < 1) throw std::invalid_argument("sphere moment: needs at least one variable");
    int total_half = 0;
    for (int a : alpha) {
        if (a < 0) throw std::invalid_argument("sphere moment: negative exponent");
        if (a % 2 != 0) return Rational(0);
        total_half += a / 2;
    }
    // int_S x^{2 beta} = (1/2)_beta / ((md)/2)_{|beta|} with beta = alpha/2.
    Rational num(1);
    for (int a : alpha) num *= pochhammer_half(1, a / 2);
    return num / pochhammer_half(md, total_half);
}

double sphere_monomial_moment(const MultiIndex& alpha) {
    return sphere_monomial_moment_exact(alpha).to_double();
}

long long b_const_exact(int t, int m) {
    if (t < 1) throw std::invalid_argument("b_const: t must be >= 1");
    if (m != 1 && m != 2 && m != 4) throw std::invalid_argument("b_const: m must be 1, 2 or 4");
    long long acc = 1;
    for (int j = 1; j <= t; ++j) {
        acc *= 2LL * j * (2 * j + m - 2);
    }
    return acc;
}

double b_const(int t, int m) { return static_cast<double>(b_const_exact(t, m)); }

long long dim_homtt(Field f, int d, int t) {
    if (d < 1 || t < 0) throw std::invalid_argument("dim_homtt: d >= 1 and t >= 0 required");
    switch (f) {
    case Field::R:
        return binomial(d + 2 * t - 1, 2 * t);
    case Field::C: {
        const long long b = binomial(d + t - 1, t);
        return b * b;
    }
    default: {
        // (1/(t+2d-1)) C(t+2d-1, t) C(t+2d-1, t+1); the prefactor always
        // divides the product exactly.
        const __int128 p = static_cast<__int128>(binomial(t + 2 * d - 1, t)) *
                           binomial(t + 2 * d - 1, t + 1);
        return static_cast<long long>(p / (t + 2 * d - 1));
    }
    }
}

long long dim_hom_r(Field f, int d, int r) {
    if (d < 1 || r < 0) throw std::invalid_argument("dim_hom_r: d >= 1 and r >= 0 required");
    const int md = field_dim(f) * d;
    return binomial(r + md - 1, md - 1);
}

SicBound sic_bound(Field f, int d) {
    if (d < 1) throw std::invalid_argument("sic_bound: d must be >= 1");
    const int m = field_dim(f);
    SicBound out;
    out.n_max = d + static_cast<long long>(m) * (static_cast<long long>(d) * d - d) / 2;
    out.constant_exact = Rational(m, m * d + 2);
    out.constant = out.constant_exact.to_double();
    return out;
}

} // namespace ttd
