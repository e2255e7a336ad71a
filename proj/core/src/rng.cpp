#include "ttd/rng.hpp"

#include <cmath>
#include <numbers>

namespace ttd {

double Rng::gaussian() {
    // Box-Muller; u1 in (0,1] keeps the log finite.
    const double u1 = (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + (index + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Vector random_unit_vector(Rng& rng, Field f, int d) {
    const int m = field_dim(f);
    Vector v(d);
    double nsq = 0.0;
    while (nsq == 0.0) {
        for (int j = 0; j < d; ++j) {
            for (int r = 0; r < m; ++r) {
                v[j].component(r) = rng.gaussian();
            }
        }
        nsq = norm_sq(v);
    }
    const double inv = 1.0 / std::sqrt(nsq);
    for (Quaternion& q : v) q *= inv;
    return v;
}

Configuration random_unit_configuration(Field f, int d, int n, std::uint64_t seed) {
    Rng rng(seed);
    Configuration cfg;
    cfg.field = f;
    cfg.dim = d;
    cfg.vectors.reserve(n);
    for (int j = 0; j < n; ++j) {
        cfg.vectors.push_back(random_unit_vector(rng, f, d));
    }
    return cfg;
}

} // namespace ttd
