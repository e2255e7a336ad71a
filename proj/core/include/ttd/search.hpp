#ifndef TTD_SEARCH_HPP
#define TTD_SEARCH_HPP

#include "ttd/designs.hpp"
#include "ttd/hilbert.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ttd {

struct SearchOptions {
    int n = 1;
    int t = 1;
    Field field = Field::H;
    int dim = 2;
    int restarts = 1;
    int max_iters = 20000;
    std::uint64_t seed = 1;
    double grad_tol = 1e-10;   // tangent gradient norm stop
    double target_gap = 1e-12; // stop when (potential - bound) <= target_gap * max(1, bound)

    void validate() const;
};

struct TrajectoryPoint {
    int iteration = 0;
    double potential = 0.0;
};

struct SearchResult {
    Configuration best;          // unit vectors
    DesignReport report;         // verify(best, t, kSearchTol)
    std::vector<TrajectoryPoint> trajectory; // winning restart, nonincreasing
    int restart_index = 0;
    bool converged = false;      // stopped via grad_tol or target_gap
};

/// Euclidean gradient of the frame potential with respect to the m*d real
/// coordinates of each vector, one coordinate block per vector.
std::vector<std::vector<double>> potential_gradient(const Configuration& cfg, int t);

/// Riemannian descent on the product of unit spheres: tangent-projected
/// gradient steps with Armijo backtracking, renormalizing after each step.
/// Restarts draw from splitmix-derived streams; the best restart wins by
/// (potential, restart_index).
SearchResult minimize(const SearchOptions& opts);

/// Best continued-fraction convergent p/q of x with q <= max_den and
/// |x - p/q| < tol, if any.
std::optional<std::pair<long long, long long>> rationalize(double x, long long max_den, double tol);

} // namespace ttd

#endif
