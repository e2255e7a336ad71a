#ifndef TTD_RNG_HPP
#define TTD_RNG_HPP

#include "ttd/hilbert.hpp"

#include <cstdint>
#include <random>

namespace ttd {

/// Deterministic random stream. The gaussian draw is hand-rolled Box-Muller
/// on top of mt19937_64 so sequences are identical across standard library
/// implementations (std::normal_distribution is not pinned by the standard).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    /// Standard normal; consumes exactly two engine draws.
    double gaussian();

    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

/// splitmix64 step: derives independent per-stream seeds from a master seed.
std::uint64_t split_seed(std::uint64_t master, std::uint64_t index);

/// Unit vector with iid standard-normal real coordinates (m per entry),
/// normalized.
Vector random_unit_vector(Rng& rng, Field f, int d);

Configuration random_unit_configuration(Field f, int d, int n, std::uint64_t seed);

} // namespace ttd

#endif
