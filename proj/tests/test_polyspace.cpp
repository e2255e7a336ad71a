#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ttd/linalg.hpp"
#include "ttd/polyspace.hpp"
#include "ttd/rng.hpp"

#include <cmath>
#include <vector>

using namespace ttd;

namespace {

double max_coeff_diff(const Poly& a, const Poly& b) {
    Poly diff = a;
    diff -= b;
    double out = 0.0;
    for (const auto& [alpha, c] : diff.terms()) out = std::max(out, std::abs(c));
    return out;
}

double max_abs_coeff(const Poly& p) {
    double out = 0.0;
    for (const auto& [alpha, c] : p.terms()) out = std::max(out, std::abs(c));
    return out;
}

Poly norm_sq_poly(int num_vars) {
    Poly out(num_vars);
    for (int v = 0; v < num_vars; ++v) {
        MultiIndex alpha(num_vars, 0);
        alpha[v] = 2;
        out.add_term(alpha, 1.0);
    }
    return out;
}

} // namespace

TEST_CASE("coords extraction") {
    const Vector vh{Quaternion(1, 2, 3, 4), Quaternion()};
    CHECK(coords(vh, Field::H) == std::vector<double>{1, 2, 3, 4, 0, 0, 0, 0});

    const Vector vr{Quaternion(1), Quaternion(2), Quaternion(3)};
    CHECK(coords(vr, Field::R) == std::vector<double>{1, 2, 3});

    const Vector vc{Quaternion(1, 1, 0, 0), Quaternion(2)};
    CHECK(coords(vc, Field::C) == std::vector<double>{1, 1, 2, 0});

    CHECK_THROWS_AS(coords(vh, Field::R), std::invalid_argument);
}

TEST_CASE("expand_abs_ip_sq at basis vectors") {
    const Vector e1{Quaternion(1), Quaternion()};
    const Poly p = expand_abs_ip_sq(e1, Field::H);
    // |q_1|^2 = t_1^2 + x_1^2 + y_1^2 + z_1^2
    CHECK(p.term_count() == 4);
    for (int r = 0; r < 4; ++r) {
        MultiIndex alpha(8, 0);
        alpha[r] = 2;
        CHECK(p.coeff(alpha) == doctest::Approx(1.0));
    }
    CHECK(p.is_homogeneous());
    CHECK(p.degree() == 2);
}

TEST_CASE("expand_abs_ip_sq of (1,1) in R^2 is (x1+x2)^2") {
    const Vector w{Quaternion(1), Quaternion(1)};
    const Poly p = expand_abs_ip_sq(w, Field::R);
    CHECK(p.coeff({2, 0}) == doctest::Approx(1.0));
    CHECK(p.coeff({0, 2}) == doctest::Approx(1.0));
    CHECK(p.coeff({1, 1}) == doctest::Approx(2.0));
}

TEST_CASE("expansion matches the numeric inner product") {
    Rng rng(17);
    for (Field f : {Field::R, Field::C, Field::H}) {
        const Vector w = random_unit_vector(rng, f, 2);
        const Poly p = expand_abs_ip_sq(w, f);
        for (int trial = 0; trial < 100; ++trial) {
            const Vector z = random_unit_vector(rng, f, 2);
            CHECK(p.eval(coords(z, f)) == doctest::Approx(abs_ip_sq(w, z)).epsilon(1e-12));
        }
    }
}

TEST_CASE("poly product and power") {
    const Poly x1 = Poly::variable(2, 0);
    const Poly x2 = Poly::variable(2, 1);
    const Poly prod = poly_mul(x1, x2);
    CHECK(prod.coeff({1, 1}) == doctest::Approx(1.0));
    CHECK(prod.term_count() == 1);

    const Poly sq = poly_pow(x1 + x2, 2);
    CHECK(sq.coeff({2, 0}) == doctest::Approx(1.0));
    CHECK(sq.coeff({1, 1}) == doctest::Approx(2.0));
    CHECK(sq.coeff({0, 2}) == doctest::Approx(1.0));

    Rng rng(23);
    const Vector e1{Quaternion(1), Quaternion()};
    const Poly k2 = poly_pow(expand_abs_ip_sq(e1, Field::H), 2);
    for (int trial = 0; trial < 20; ++trial) {
        const Vector z = random_unit_vector(rng, Field::H, 2);
        const double direct = abs_ip_sq(e1, z);
        CHECK(k2.eval(coords(z, Field::H)) == doctest::Approx(direct * direct).epsilon(1e-12));
    }
}

TEST_CASE("apolar kernel identities") {
    const Vector e1{Quaternion(1), Quaternion()};
    const Vector e2{Quaternion(), Quaternion(1)};
    for (int t = 1; t <= 3; ++t) {
        const Poly k1 = kernel_poly(e1, Field::H, t);
        const Poly k2 = kernel_poly(e2, Field::H, t);
        CHECK(apolar(k1, k1, t, 4) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(apolar(k1, k2, t, 4) == doctest::Approx(0.0));
    }

    Rng rng(29);
    const int t = 2;
    for (int trial = 0; trial < 100; ++trial) {
        const Vector v = random_unit_vector(rng, Field::H, 2);
        const Vector w = random_unit_vector(rng, Field::H, 2);
        const double expected = std::pow(abs_ip_sq(v, w), t);
        const double got = apolar(kernel_poly(v, Field::H, t), kernel_poly(w, Field::H, t), t, 4);
        CHECK(got == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("apolar rejects degree mismatch") {
    const Vector e1{Quaternion(1), Quaternion()};
    const Poly k1 = kernel_poly(e1, Field::H, 1);
    const Poly k2 = kernel_poly(e1, Field::H, 2);
    CHECK_THROWS_AS(apolar(k1, k2, 2, 4), std::invalid_argument);
}

TEST_CASE("reproducing property") {
    const Vector e1{Quaternion(1), Quaternion()};
    const Vector e2{Quaternion(), Quaternion(1)};
    Rng rng(31);

    const Vector v = random_unit_vector(rng, Field::H, 2);
    const auto [self_lhs, self_rhs] = reproduce(kernel_poly(v, Field::H, 2), v, 2, Field::H);
    CHECK(self_lhs == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(self_rhs == doctest::Approx(1.0).epsilon(1e-10));

    const auto [z_lhs, z_rhs] = reproduce(kernel_poly(e1, Field::H, 2), e2, 2, Field::H);
    CHECK(z_lhs == doctest::Approx(0.0));
    CHECK(z_rhs == doctest::Approx(0.0));

    // random combinations in the kernel span, all fields, d <= 3, t <= 3
    for (Field f : {Field::R, Field::C, Field::H}) {
        for (int d = 1; d <= 3; ++d) {
            for (int t = 1; t <= 3; ++t) {
                if (field_dim(f) * d > kMaxRealVars) continue;
                const Vector v1 = random_unit_vector(rng, f, d);
                const Vector v2 = random_unit_vector(rng, f, d);
                Poly fpoly = kernel_poly(v1, f, t) * (1.0 + rng.uniform());
                fpoly += kernel_poly(v2, f, t) * (rng.uniform() - 2.0);
                const Vector w = random_unit_vector(rng, f, d);
                const auto [lhs, rhs] = reproduce(fpoly, w, t, f);
                CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("sphere integral") {
    // int_S K_w = c_t |w|^{2t}
    Rng rng(37);
    const Vector w = random_unit_vector(rng, Field::H, 2);
    CHECK(sphere_integral(kernel_poly(w, Field::H, 2)) == doctest::Approx(0.3).epsilon(1e-12));

    for (Field f : {Field::R, Field::C, Field::H}) {
        for (int t = 1; t <= 3; ++t) {
            Vector u = random_unit_vector(rng, f, 2);
            u = scaled(u, 1.7); // non-unit: integral scales by |u|^{2t}
            const double expected = c_t(f, 2, t) * std::pow(norm_sq(u), t);
            CHECK(sphere_integral(kernel_poly(u, f, t)) ==
                  doctest::Approx(expected).epsilon(1e-12));
        }
    }

    // |.|^{2t} integrates to 1 on the unit sphere
    const Poly norm4 = poly_pow(norm_sq_poly(8), 2);
    CHECK(sphere_integral(norm4) == doctest::Approx(1.0).epsilon(1e-14));

    // odd monomials vanish
    const Poly cross = poly_mul(Poly::variable(4, 0), Poly::variable(4, 1));
    CHECK(sphere_integral(cross) == 0.0);
}

TEST_CASE("dimension by Gram rank") {
    CHECK(homtt_dim_by_rank(Field::H, 2, 1, 20, 101).rank == 6);
    CHECK(homtt_dim_by_rank(Field::H, 2, 2, 40, 102).rank == 20);
    CHECK(homtt_dim_by_rank(Field::R, 2, 2, 20, 103).rank == 5); // dim Hom_4(R^2)

    const RankResult scarce = homtt_dim_by_rank(Field::H, 2, 2, 10, 104);
    CHECK_FALSE(scarce.enough_samples);
    CHECK(scarce.rank == 10); // independent kernels below the dimension
}

TEST_CASE("tight frame expansion over the quaternionic P system") {
    const Vector e1{Quaternion(1), Quaternion()};
    for (int t = 1; t <= 3; ++t) {
        const auto [lhs, rhs] = tight_frame_expansion_check(Field::H, 2, t, e1, e1);
        CHECK(lhs == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(rhs == doctest::Approx(1.0).epsilon(1e-14));
    }

    Rng rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        const Vector w = random_unit_vector(rng, Field::H, 2);
        const Vector z = random_unit_vector(rng, Field::H, 2);
        const auto [lhs1, rhs1] = tight_frame_expansion_check(Field::H, 2, 1, w, z);
        CHECK(lhs1 == doctest::Approx(rhs1).epsilon(1e-12));
        const auto [lhs2, rhs2] = tight_frame_expansion_check(Field::H, 2, 2, w, z);
        CHECK(lhs2 == doctest::Approx(rhs2).epsilon(1e-10));
    }
    // d = 3 exercises the off-diagonal sqrt(2)-scaled polynomials harder
    const Vector w3 = random_unit_vector(rng, Field::H, 3);
    const Vector z3 = random_unit_vector(rng, Field::H, 3);
    const auto [lhs, rhs] = tight_frame_expansion_check(Field::H, 3, 2, w3, z3);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));

    CHECK_THROWS_AS(tight_frame_expansion_check(Field::C, 2, 1, {Quaternion(1), Quaternion()},
                                                {Quaternion(1), Quaternion()}),
                    std::invalid_argument);
}

TEST_CASE("plane-wave differentiation lemma, coefficient-exact") {
    Rng rng(43);
    for (Field f : {Field::R, Field::C, Field::H}) {
        const int m = field_dim(f);
        for (int d = 1; d <= 2; ++d) {
            for (int t = 1; t <= 3; ++t) {
                const Vector v = random_unit_vector(rng, f, d);
                const Vector w = random_unit_vector(rng, f, d);
                const Poly lhs = plane_wave_diff(w, f, kernel_poly(v, f, t));
                const double constant = 2.0 * t * (2 * t + m - 2) * abs_ip_sq(v, w);
                const Poly rhs = kernel_poly(v, f, t - 1) * constant;
                const double scale = std::max({max_abs_coeff(lhs), max_abs_coeff(rhs), 1.0});
                CHECK(max_coeff_diff(lhs, rhs) <= 1e-12 * scale);
            }
        }
    }
}

TEST_CASE("plane-wave operator applied to |.|^2") {
    // |<w,D>|^2 |.|^2 = 2m |w|^2
    Rng rng(47);
    for (Field f : {Field::R, Field::C, Field::H}) {
        const int m = field_dim(f);
        const Vector w = random_unit_vector(rng, f, 2);
        const Poly applied = plane_wave_diff(w, f, norm_sq_poly(2 * m));
        REQUIRE(applied.term_count() == 1);
        CHECK(applied.coeff(MultiIndex(2 * m, 0)) == doctest::Approx(2.0 * m).epsilon(1e-12));
    }
}

TEST_CASE("Laplacian of a plane-wave power") {
    Rng rng(53);
    for (Field f : {Field::R, Field::C, Field::H}) {
        const int m = field_dim(f);
        for (int t = 1; t <= 3; ++t) {
            Vector v = random_unit_vector(rng, f, 2);
            v = scaled(v, 1.3);
            const Poly lhs = laplacian(kernel_poly(v, f, t));
            const double constant = 2.0 * t * (2 * t + m - 2) * norm_sq(v);
            const Poly rhs = kernel_poly(v, f, t - 1) * constant;
            const double scale = std::max({max_abs_coeff(lhs), max_abs_coeff(rhs), 1.0});
            CHECK(max_coeff_diff(lhs, rhs) <= 1e-12 * scale);
        }
    }
}

TEST_CASE("zonal polynomial lies in the kernel span") {
    // f = |.|^{2(t-1)} |<w,.>|^2 for t = 2 in H^2: project onto a complete
    // random kernel frame under the apolar inner product.
    const int t = 2;
    const int m = 4;
    Rng rng(59);
    const Vector w = random_unit_vector(rng, Field::H, 2);
    const Poly f = poly_mul(norm_sq_poly(8), expand_abs_ip_sq(w, Field::H));

    const int count = 40; // dim Hom(2,2) = 20 plus margin
    std::vector<Vector> frame;
    std::vector<Poly> kernels;
    for (int i = 0; i < count; ++i) {
        frame.push_back(random_unit_vector(rng, Field::H, 2));
        kernels.push_back(kernel_poly(frame.back(), Field::H, t));
    }

    std::vector<double> gram(count * count);
    std::vector<double> rhs(count);
    for (int i = 0; i < count; ++i) {
        rhs[i] = apolar(kernels[i], f, t, m);
        for (int j = i; j < count; ++j) {
            const double g = std::pow(abs_ip_sq(frame[i], frame[j]), t);
            gram[i * count + j] = g;
            gram[j * count + i] = g;
        }
    }
    const std::vector<double> coeff = solve_psd(gram, count, rhs, 1e-10);

    Poly residual = f;
    for (int i = 0; i < count; ++i) residual -= kernels[i] * coeff[i];
    CHECK(std::sqrt(std::max(0.0, apolar(residual, residual, t, m))) < 1e-8);
}

TEST_CASE("apolar Gram of independent kernels is positive") {
    Rng rng(61);
    const int count = 10; // below dim Hom(2,2)
    std::vector<Vector> frame;
    for (int i = 0; i < count; ++i) frame.push_back(random_unit_vector(rng, Field::H, 2));
    std::vector<double> gram(count * count);
    for (int i = 0; i < count; ++i) {
        for (int j = 0; j < count; ++j) {
            gram[i * count + j] = std::pow(abs_ip_sq(frame[i], frame[j]), 2);
        }
    }
    const SymmetricEigen eig = jacobi_eigen(gram, count);
    CHECK(eig.values.front() > 0.0);

    // positive semidefiniteness of the form itself on arbitrary degree-2t input
    const Poly arbitrary = poly_pow(norm_sq_poly(8), 2) * 0.7 -
                           kernel_poly(frame[0], Field::H, 2) * 0.3;
    CHECK(apolar(arbitrary, arbitrary, 2, 4) >= 0.0);
}

TEST_CASE("envelope limits are enforced") {
    // H^4 has md = 16 > 12
    Vector big(4);
    big[0] = Quaternion(1);
    CHECK_THROWS_AS(expand_abs_ip_sq(big, Field::H), std::length_error);

    // degree 2t = 12 > 10
    const Vector e1{Quaternion(1), Quaternion()};
    CHECK_THROWS_AS(kernel_poly(e1, Field::H, 6), std::length_error);
    CHECK_NOTHROW(kernel_poly(e1, Field::H, 5));
}
