#ifndef TTD_HILBERT_HPP
#define TTD_HILBERT_HPP

#include "ttd/quat.hpp"

#include <string>
#include <vector>

namespace ttd {

/// Scalar field of the ambient space. m = dim_R(F) is 1, 2 or 4.
enum class Field { R, C, H };

constexpr int field_dim(Field f) {
    return f == Field::R ? 1 : f == Field::C ? 2 : 4;
}

Field parse_field(const std::string& name);
const char* field_name(Field f);

/// Vector in F^d, stored entrywise as quaternions. Entries of R- and
/// C-vectors must have their trailing 3 (resp. 2) components zero.
using Vector = std::vector<Quaternion>;

bool conforms(const Vector& v, Field f);

/// <v,w> = sum_j conj(v_j) w_j: conjugate in the first slot, linear in the
/// second. Throws on dimension mismatch.
Quaternion inner(const Vector& v, const Vector& w);

/// |<v,w>|^2; symmetric in its arguments.
double abs_ip_sq(const Vector& v, const Vector& w);

double norm_sq(const Vector& v);
double norm(const Vector& v);

Vector scaled(const Vector& v, double s);
Vector scaled(const Vector& v, const Quaternion& right); // v * q, entrywise right multiplication

/// Weighted finite vector system in F^d: the object verified by `designs`
/// and produced by `search`. Weights are optional and stored unnormalized;
/// consumers state their own normalization.
struct Configuration {
    Field field = Field::H;
    int dim = 0;
    std::vector<Vector> vectors;
    std::vector<double> weights; // empty means unit weights

    int n() const { return static_cast<int>(vectors.size()); }
    bool weighted() const { return !weights.empty(); }
    double weight(int j) const { return weights.empty() ? 1.0 : weights[j]; }

    /// Enforces the invariants: n >= 1, per-field conformance, matching
    /// entry counts, positive weights, not all vectors zero.
    void validate() const;
};

/// Clustered multiset of normalized angles |<v_j,v_k>|^2 / (|v_j|^2 |v_k|^2)
/// over ordered pairs j != k.
struct AngleSpectrum {
    struct Cluster {
        double angle = 0.0;     // cluster mean, in [0,1] for unit vectors
        long multiplicity = 0;  // ordered pairs in the cluster
    };
    std::vector<Cluster> clusters;
    double tolerance = 0.0;
};

/// Single-linkage clustering of the off-diagonal angles: sorted values are
/// split wherever the gap between neighbours exceeds tol.
AngleSpectrum angle_spectrum(const Configuration& cfg, double tol = 1e-6);

} // namespace ttd

#endif
