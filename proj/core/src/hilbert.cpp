#include "ttd/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ttd {

Field parse_field(const std::string& name) {
    if (name == "R" || name == "r") return Field::R;
    if (name == "C" || name == "c") return Field::C;
    if (name == "H" || name == "h") return Field::H;
    throw std::invalid_argument("unknown field '" + name + "' (expected R, C or H)");
}

const char* field_name(Field f) {
    switch (f) {
    case Field::R: return "R";
    case Field::C: return "C";
    default: return "H";
    }
}

bool conforms(const Vector& v, Field f) {
    const int m = field_dim(f);
    for (const Quaternion& q : v) {
        for (int r = m; r < 4; ++r) {
            if (q.component(r) != 0.0) return false;
        }
    }
    return true;
}

Quaternion inner(const Vector& v, const Vector& w) {
    if (v.size() != w.size()) {
        throw std::invalid_argument("inner: dimension mismatch");
    }
    Quaternion acc;
    for (std::size_t j = 0; j < v.size(); ++j) {
        acc += conj(v[j]) * w[j];
    }
    return acc;
}

double abs_ip_sq(const Vector& v, const Vector& w) {
    return norm_sq(inner(v, w));
}

double norm_sq(const Vector& v) {
    double acc = 0.0;
    for (const Quaternion& q : v) acc += norm_sq(q);
    return acc;
}

double norm(const Vector& v) { return std::sqrt(norm_sq(v)); }

Vector scaled(const Vector& v, double s) {
    Vector out = v;
    for (Quaternion& q : out) q *= s;
    return out;
}

Vector scaled(const Vector& v, const Quaternion& right) {
    Vector out = v;
    for (Quaternion& q : out) q = q * right;
    return out;
}

void Configuration::validate() const {
    if (dim < 1) throw std::invalid_argument("configuration: dim must be >= 1");
    if (vectors.empty()) throw std::invalid_argument("configuration: needs at least one vector");
    if (!weights.empty() && weights.size() != vectors.size()) {
        throw std::invalid_argument("configuration: weight count does not match vector count");
    }
    for (double w : weights) {
        if (!(w > 0.0)) throw std::invalid_argument("configuration: weights must be positive");
    }
    bool any_nonzero = false;
    for (const Vector& v : vectors) {
        if (static_cast<int>(v.size()) != dim) {
            throw std::invalid_argument("configuration: vector entry count does not match dim");
        }
        if (!conforms(v, field)) {
            throw std::invalid_argument("configuration: vector has components outside the field");
        }
        for (const Quaternion& q : v) {
            if (!std::isfinite(q.w) || !std::isfinite(q.x) || !std::isfinite(q.y) ||
                !std::isfinite(q.z)) {
                throw std::invalid_argument("configuration: non-finite component");
            }
        }
        if (norm_sq(v) > 0.0) any_nonzero = true;
    }
    if (!any_nonzero) throw std::invalid_argument("configuration: all vectors are zero");
}

AngleSpectrum angle_spectrum(const Configuration& cfg, double tol) {
    cfg.validate();
    const int n = cfg.n();
    std::vector<double> norms(n);
    for (int j = 0; j < n; ++j) {
        norms[j] = norm_sq(cfg.vectors[j]);
        if (norms[j] == 0.0) {
            throw std::invalid_argument("angle_spectrum: zero vector has no angle");
        }
    }

    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(n) * (n - 1));
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            if (j == k) continue;
            values.push_back(abs_ip_sq(cfg.vectors[j], cfg.vectors[k]) / (norms[j] * norms[k]));
        }
    }
    std::sort(values.begin(), values.end());

    AngleSpectrum spectrum;
    spectrum.tolerance = tol;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= values.size(); ++i) {
        if (i == values.size() || values[i] - values[i - 1] > tol) {
            const auto count = static_cast<long>(i - start);
            const double mean =
                std::accumulate(values.begin() + start, values.begin() + i, 0.0) / count;
            spectrum.clusters.push_back({mean, count});
            start = i;
        }
    }
    return spectrum;
}

} // namespace ttd
