#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ttd/designs.hpp"
#include "ttd/projective.hpp"

#include <cmath>
#include <numbers>
#include <vector>

using namespace ttd;

namespace {

std::vector<double> poly_product(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

/// Quadrature oracle for integrals against the induced density, via the
/// substitution z = sin^2(theta) which removes the endpoint singularities.
double quadrature_against_density(const std::function<double(double)>& g, Field f, int d) {
    const int steps = 1 << 14;
    const double h = std::numbers::pi / 2.0 / steps;
    double acc = 0.0;
    for (int i = 0; i < steps; ++i) {
        const double theta = (i + 0.5) * h;
        const double z = std::sin(theta) * std::sin(theta);
        acc += g(z) * induced_density(z, f, d) * std::sin(2.0 * theta) * h;
    }
    return acc;
}

} // namespace

TEST_CASE("Q_1 closed form") {
    const JacobiPoly q = jacobi_q(1, 4, 2);
    REQUIRE(q.coeffs.size() == 2);
    // (m/2)(1 - d x) = 2(1 - 2x)
    CHECK(q.coeffs[0] == doctest::Approx(2.0));
    CHECK(q.coeffs[1] == doctest::Approx(-4.0));

    for (int m : {1, 2, 4}) {
        for (int d = 1; d <= 4; ++d) {
            const JacobiPoly q1 = jacobi_q(1, m, d);
            CHECK(q1.coeffs[0] == doctest::Approx(m / 2.0));
            CHECK(q1.coeffs[1] == doctest::Approx(-m / 2.0 * d));
            // mean against mu_m vanishes since c_1 = 1/d
            const Field f = m == 1 ? Field::R : m == 2 ? Field::C : Field::H;
            CHECK(moment_integral(q1.coeffs, f, d) == doctest::Approx(0.0));
        }
    }
    CHECK(jacobi_q(0, 4, 2).coeffs == std::vector<double>{1.0});
}

TEST_CASE("Q_2 is orthogonal to Q_1 under the moment oracle") {
    const JacobiPoly q1 = jacobi_q(1, 4, 2);
    const JacobiPoly q2 = jacobi_q(2, 4, 2);
    const auto prod = poly_product(q1.coeffs, q2.coeffs);
    CHECK(moment_integral(prod, Field::H, 2) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("norm formula against moment integration") {
    CHECK(jacobi_norm_sq(0, 4, 2) == 1.0);
    CHECK(jacobi_norm_sq(0, 1, 2) == 1.0);

    // k=1, m=4, d=2: 4 (1 - 4 c_1 + 4 c_2) = 4 (1 - 2 + 1.2) = 0.8
    const JacobiPoly q1 = jacobi_q(1, 4, 2);
    const auto sq = poly_product(q1.coeffs, q1.coeffs);
    const double by_moments = moment_integral(sq, Field::H, 2);
    CHECK(by_moments == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(jacobi_norm_sq(1, 4, 2) == doctest::Approx(by_moments).epsilon(1e-14));

    const JacobiPoly q2 = jacobi_q(2, 2, 2);
    const auto sq2 = poly_product(q2.coeffs, q2.coeffs);
    CHECK(jacobi_norm_sq(2, 2, 2) ==
          doctest::Approx(moment_integral(sq2, Field::C, 2)).epsilon(1e-12));
}

TEST_CASE("full orthogonality grid j,k <= 6, d <= 4") {
    // The moment route is exact rational arithmetic: delta_jk holds exactly.
    for (Field f : {Field::R, Field::C, Field::H}) {
        const int m = field_dim(f);
        for (int d = 1; d <= 4; ++d) {
            std::vector<std::vector<Rational>> q;
            for (int k = 0; k <= 6; ++k) q.push_back(jacobi_q_exact(k, m, d));
            for (int j = 0; j <= 6; ++j) {
                for (int k = j; k <= 6; ++k) {
                    std::vector<Rational> prod(q[j].size() + q[k].size() - 1, Rational(0));
                    for (std::size_t a = 0; a < q[j].size(); ++a)
                        for (std::size_t b = 0; b < q[k].size(); ++b)
                            prod[a + b] += q[j][a] * q[k][b];
                    const Rational integral = moment_integral_exact(prod, f, d);
                    const Rational expected =
                        (j == k) ? jacobi_norm_sq_exact(k, m, d) : Rational(0);
                    CHECK(integral == expected);
                    CHECK(std::abs(integral.to_double() - expected.to_double()) <= 1e-10);
                }
            }
        }
    }
}

TEST_CASE("hoggar test on catalog configurations") {
    // MUB family in H^2 is a (3,3)-design
    const Configuration mub = mub_family(Field::H, 2);
    const std::vector<double> residuals = hoggar_test(mub, 3);
    REQUIRE(residuals.size() == 3);
    for (double r : residuals) CHECK(std::abs(r) < 1e-10);

    // the orthonormal basis is only a (1,1)-design
    const Configuration basis = onb(Field::H, 2);
    const std::vector<double> basis_res = hoggar_test(basis, 2);
    CHECK(std::abs(basis_res[0]) < 1e-12);
    CHECK(std::abs(basis_res[1]) > 1e-3);

    // single unit vector in d = 1: c_t is trivially 1
    Configuration single;
    single.field = Field::H;
    single.dim = 1;
    single.vectors.push_back({Quaternion(1)});
    const std::vector<double> single_res = hoggar_test(single, 1);
    CHECK(std::abs(single_res[0]) < 1e-14);

    Configuration scaledcfg = basis;
    scaledcfg.vectors[0] = scaled(scaledcfg.vectors[0], 2.0);
    CHECK_THROWS_AS(hoggar_test(scaledcfg, 2), std::invalid_argument);
}

TEST_CASE("regular scheme check") {
    // 315-point (5,5)-design in H^3 with quadratic-irrational angles
    const double g_minus = (3.0 - std::sqrt(5.0)) / 8.0;
    const double g_plus = (3.0 + std::sqrt(5.0)) / 8.0;
    RegularScheme scheme;
    scheme.n = 315;
    scheme.angles = {0.0, g_minus, 0.25, 0.5, g_plus};
    scheme.counts = {10, 32, 160, 80, 32};

    for (int r = 1; r <= 5; ++r) {
        const auto [lhs, rhs] = regular_scheme_check(scheme, Field::H, 3, r);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
    const auto [lhs5, rhs5] = regular_scheme_check(scheme, Field::H, 3, 5);
    CHECK(lhs5 == doctest::Approx(7.5).epsilon(1e-12));
    const auto [lhs1, rhs1] = regular_scheme_check(scheme, Field::H, 3, 1);
    CHECK(lhs1 == doctest::Approx(105.0).epsilon(1e-12));

    // orthonormal basis as a scheme: single angle 0 with count d-1
    for (int d = 2; d <= 4; ++d) {
        RegularScheme basis{d, {0.0}, {d - 1}};
        const auto [lhs, rhs] = regular_scheme_check(basis, Field::H, d, 1);
        CHECK(lhs == doctest::Approx(1.0));
        CHECK(rhs == doctest::Approx(1.0));
    }

    RegularScheme bad{4, {0.0}, {7}};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    RegularScheme bad_angle{4, {1.5}, {3}};
    CHECK_THROWS_AS(bad_angle.validate(), std::invalid_argument);
}

TEST_CASE("scheme arithmetic agrees with hoggar_test on regular configurations") {
    // The MUB family is regular: from any vector, angle 0 once and 1/2 eight
    // times. Scheme checks at r = 1..3 must balance exactly when the Hoggar
    // residuals vanish.
    const Configuration mub = mub_family(Field::H, 2);
    const AngleSpectrum spectrum = angle_spectrum(mub, 1e-9);
    RegularScheme scheme;
    scheme.n = mub.n();
    for (const auto& cluster : spectrum.clusters) {
        scheme.angles.push_back(cluster.angle);
        scheme.counts.push_back(cluster.multiplicity / mub.n());
    }
    scheme.validate();

    const std::vector<double> residuals = hoggar_test(mub, 3);
    for (int r = 1; r <= 3; ++r) {
        const auto [lhs, rhs] = regular_scheme_check(scheme, Field::H, 2, r);
        CHECK(std::abs(residuals[r - 1]) < 1e-12);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
    // and both sides split at r = 4, where the family stops being a design
    const auto [lhs4, rhs4] = regular_scheme_check(scheme, Field::H, 2, 4);
    CHECK(std::abs(lhs4 - rhs4) > 1e-3);
}

TEST_CASE("induced density") {
    // probability density; first moment reproduces c_1
    for (Field f : {Field::R, Field::C, Field::H}) {
        for (int d = 2; d <= 3; ++d) {
            const double mass = quadrature_against_density([](double) { return 1.0; }, f, d);
            CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
            const double first = quadrature_against_density([](double z) { return z; }, f, d);
            CHECK(first == doctest::Approx(c_t(f, d, 1)).epsilon(1e-8));
        }
    }
    const double c1 = quadrature_against_density([](double z) { return z; }, Field::H, 2);
    CHECK(c1 == doctest::Approx(0.5).epsilon(1e-8));

    // m=2, d=2 is the uniform Beta(1,1) case
    CHECK(induced_density(0.3, Field::C, 2) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(induced_density(0.9, Field::C, 2) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(induced_density(0.0, Field::H, 2), std::invalid_argument);
    CHECK_THROWS_AS(induced_density(1.0, Field::H, 2), std::invalid_argument);
    CHECK_THROWS_AS(induced_density(0.5, Field::H, 1), std::invalid_argument);
}
