#ifndef TTD_LINALG_HPP
#define TTD_LINALG_HPP

#include <vector>

namespace ttd {

/// Dense symmetric eigendecomposition by cyclic Jacobi rotations. Intended
/// for the small Gram matrices produced here (n up to a few hundred).
struct SymmetricEigen {
    int n = 0;
    std::vector<double> values;  // ascending
    std::vector<double> vectors; // column-major, column k pairs with values[k]
};

SymmetricEigen jacobi_eigen(std::vector<double> a, int n);

/// Number of eigenvalues above rel_tol * max|eigenvalue|.
int numerical_rank(const std::vector<double>& sym, int n, double rel_tol = 1e-8);

/// Minimum-norm least-squares solve of a PSD system via the eigenvalue
/// pseudo-inverse with relative cutoff.
std::vector<double> solve_psd(const std::vector<double>& sym, int n,
                              const std::vector<double>& rhs, double rel_cutoff = 1e-12);

} // namespace ttd

#endif
