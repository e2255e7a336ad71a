#ifndef TTD_QUAT_HPP
#define TTD_QUAT_HPP

#include <array>
#include <cmath>

namespace ttd {

/// Quaternion scalar w + x*i + y*j + z*k. Real and complex scalars are
/// represented by zero-padding the trailing components.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
        : w(w_), x(x_), y(y_), z(z_) {}

    /// Basis unit i_r with (i_1,i_2,i_3,i_4) = (1,i,j,k); r is 0-based.
    static constexpr Quaternion unit(int r) {
        switch (r) {
        case 0: return {1, 0, 0, 0};
        case 1: return {0, 1, 0, 0};
        case 2: return {0, 0, 1, 0};
        default: return {0, 0, 0, 1};
        }
    }

    constexpr double component(int r) const {
        return r == 0 ? w : r == 1 ? x : r == 2 ? y : z;
    }
    constexpr double& component(int r) {
        return r == 0 ? w : r == 1 ? x : r == 2 ? y : z;
    }

    constexpr Quaternion& operator+=(const Quaternion& q) {
        w += q.w; x += q.x; y += q.y; z += q.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& q) {
        w -= q.w; x -= q.x; y -= q.y; z -= q.z;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        w *= s; x *= s; y *= s; z *= s;
        return *this;
    }

    friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
    friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
    friend constexpr Quaternion operator-(const Quaternion& q) { return {-q.w, -q.x, -q.y, -q.z}; }
    friend constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
    friend constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
    friend constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

    // Hamilton product: ij = k, jk = i, ki = j.
    friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }

    friend constexpr bool operator==(const Quaternion& a, const Quaternion& b) {
        return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
    }
};

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }
constexpr double re(const Quaternion& q) { return q.w; }
constexpr double norm_sq(const Quaternion& q) {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}
inline double norm(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

inline bool approx_equal(const Quaternion& a, const Quaternion& b, double tol) {
    return norm(a - b) <= tol;
}

} // namespace ttd

#endif
