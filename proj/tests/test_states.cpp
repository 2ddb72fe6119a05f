#include "states.hpp"

#include "fock.hpp"
#include "quadrature.hpp"

#include <doctest.h>

#include <cmath>

using namespace mqs;

TEST_CASE("MqsParams validation") {
    CHECK_THROWS_AS(MqsParams(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(MqsParams(-1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(MqsParams(1.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(MqsParams(1.0, std::nan("")), std::domain_error);
    CHECK(MqsParams(1.0, 1.0).pure());
    CHECK_FALSE(MqsParams(1.0, 2.0).pure());
}

TEST_CASE("pure cat normalization") {
    CHECK_THROWS_AS(pure_scs_norm(0.0), std::domain_error);
    // Frozen against normalizing the truncated number-basis coefficients.
    CHECK(pure_scs_norm(1.0) ==
          doctest::Approx(1.0 / std::sqrt(2.0 - 2.0 * std::exp(-2.0)))
              .epsilon(1e-14));
    CHECK(pure_scs_norm(50.0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    // Strictly decreasing while e^{-2 alpha^2} is resolvable; at large alpha
    // the value saturates at 1/sqrt(2) exactly in double precision.
    double prev = pure_scs_norm(0.3);
    for (double a : {0.5, 1.0, 2.0, 4.0}) {
        const double cur = pure_scs_norm(a);
        CHECK(cur < prev);
        CHECK(cur > 1.0 / std::sqrt(2.0) - 1e-15);
        prev = cur;
    }
    CHECK(pure_scs_norm(20.0) == 1.0 / std::sqrt(2.0));
    // Cross-check against the Fock route at one point.
    const FockVector cat = cat_fock(1.0, 40);
    Eigen::VectorXcd raw(40);
    for (int n = 0; n < 40; ++n)
        raw(n) = coherent_fock(1.0, 40).amp(n) - coherent_fock(-1.0, 40).amp(n);
    CHECK(1.0 / raw.norm() == doctest::Approx(pure_scs_norm(1.0)).epsilon(1e-12));
    CHECK(cat.amp.norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("thermal P weight") {
    CHECK_THROWS_AS(thermal_p_weight(MqsParams(2.0, 1.0), {0.0, 0.0}),
                    DegenerateError);
    const MqsParams p(2.0, 3.0);
    // Peak value 2 / (pi (V - 1)).
    CHECK(thermal_p_weight(p, {2.0, 0.0}) ==
          doctest::Approx(2.0 / (M_PI * 2.0)).epsilon(1e-14));
    CHECK(thermal_p_weight(p, {0.0, 0.0}) ==
          doctest::Approx(std::exp(-4.0) / M_PI).epsilon(1e-14));
    // Normalized over the plane (quadrature to 1e-10).  Dividing out the
    // quadrature's own Gaussian density turns the weighted mean into a plain
    // plane integral.
    const double scale = std::sqrt(0.5 * (p.v - 1.0));
    const double total =
        M_PI * scale * scale *
        gaussian_plane_mean(
            [&](double x, double y) {
                const double g = std::exp(
                    -((x - p.alpha) * (x - p.alpha) + y * y) / (scale * scale));
                return thermal_p_weight(p, {x, y}) / g;
            },
            p.alpha, scale);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("mixed normalization") {
    // V = 1 reduces to the squared pure-cat norm.
    for (double a : {0.5, 1.0, 2.0, 5.0, 10.0, 30.0, 50.0})
        CHECK(mixed_norm(MqsParams(a, 1.0)) ==
              doctest::Approx(pure_scs_norm(a) * pure_scs_norm(a)).epsilon(1e-13));
    CHECK(mixed_norm(MqsParams(50.0, 2.0)) == doctest::Approx(0.5).epsilon(1e-14));
    // Oracle trace check: the quadrature assembly scaled by N has unit trace.
    const FockDensityMatrix rho = mixed_mqs_fock(MqsParams(2.0, 3.0));
    CHECK(rho.trace_deficit < 1e-12);
    CHECK(rho.mat.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("linear entropy") {
    for (double a : {0.7, 2.0, 10.0})
        CHECK(linear_entropy(MqsParams(a, 1.0)) == doctest::Approx(0.0).epsilon(1e-12));
    for (auto [a, v] : {std::pair{1.5, 1.0}, {2.0, 3.0}, {2.5, 5.0}}) {
        const MqsParams p(a, v);
        const double s = linear_entropy(p);
        CHECK(s >= 0.0);
        CHECK(s < 1.0);
        CHECK(s == doctest::Approx(fock_linear_entropy(mixed_mqs_fock(p)))
                       .epsilon(1e-10));
    }
    CHECK(linear_entropy(MqsParams(30.0, 1e3)) == doctest::Approx(0.999).epsilon(5e-4));
    CHECK(linear_entropy(MqsParams(100.0, 1e4)) ==
          doctest::Approx(0.9999).epsilon(5e-5));
}

TEST_CASE("mean photon number") {
    CHECK(mean_photon_pure(30.0) == doctest::Approx(900.0).epsilon(1e-12));
    CHECK(mean_photon_pure(1e-3) == doctest::Approx(1.0).epsilon(1e-5));
    {
        const FockVector cat = cat_fock(1.5, 40);
        double n = 0.0;
        for (int k = 0; k < cat.dim(); ++k)
            n += k * std::norm(cat.amp(k));
        CHECK(mean_photon_pure(1.5) == doctest::Approx(n).epsilon(1e-12));
    }
    // Mixed closed form against the oracle, and the V = 1 continuity.
    for (auto [a, v] : {std::pair{1.5, 1.0}, {2.0, 3.0}, {2.5, 5.0}}) {
        const MqsParams p(a, v);
        CHECK(mean_photon_mixed(p) ==
              doctest::Approx(fock_mean_photon(mixed_mqs_fock(p))).epsilon(1e-9));
    }
    CHECK(mean_photon_mixed(MqsParams(2.0, 1.0)) ==
          doctest::Approx(mean_photon_pure(2.0)).epsilon(1e-13));
    // Caption anchors and the large-alpha asymptote alpha^2 + (V-1)/2.
    CHECK(mean_photon_mixed(MqsParams(30.0, 1e3)) == doctest::Approx(1.4e3).epsilon(0.05));
    CHECK(mean_photon_mixed(MqsParams(20.0, 1e3)) == doctest::Approx(900.0).epsilon(0.05));
    CHECK(mean_photon_mixed(MqsParams(50.0, 1.5e4)) ==
          doctest::Approx(1.0e4).epsilon(0.05));
    CHECK(mean_photon_mixed(MqsParams(30.0, 1e3)) ==
          doctest::Approx(900.0 + 999.0 / 2.0).epsilon(1e-3));
}

TEST_CASE("decomposition weight") {
    CHECK_THROWS_AS(decomposition_weight(MqsParams(2.0, 1.0), {1.0, 0.0}),
                    DegenerateError);
    const MqsParams p(2.0, 3.0);
    CHECK(decomposition_weight(p, {0.0, 0.0}) == doctest::Approx(0.0).epsilon(1e-300));
    for (double x : {-1.0, 0.5, 2.0, 3.5})
        CHECK(decomposition_weight(p, {x, 0.7}) >= 0.0);
    // Integrates to 1 over the plane.
    const double scale = std::sqrt(0.5 * (p.v - 1.0));
    const double total =
        M_PI * scale * scale *
        gaussian_plane_mean(
            [&](double x, double y) {
                const double g = std::exp(
                    -((x - p.alpha) * (x - p.alpha) + y * y) / (scale * scale));
                return decomposition_weight(p, {x, y}) / g;
            },
            p.alpha, scale, 1e-10);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-8));
    // At large alpha the Gaussian factor dominates: argmax near beta = alpha.
    const MqsParams big(30.0, 1e3);
    const double peak = decomposition_weight(big, {30.0, 0.0});
    CHECK(decomposition_weight(big, {30.0 + 0.1, 0.0}) < peak * 1.001);
    double best = 0.0, best_x = 0.0;
    for (double x = 20.0; x <= 40.0; x += 0.01) {
        const double w = decomposition_weight(big, {x, 0.0});
        if (w > best) {
            best = w;
            best_x = x;
        }
    }
    CHECK(std::abs(best_x - 30.0) < 0.1);
}

TEST_CASE("reconstruction identity: cat-mixture route matches the direct assembly") {
    const MqsParams p(2.0, 3.0);
    const FockDensityMatrix direct = mixed_mqs_fock(p);
    const FockDensityMatrix mixture = mixed_mqs_fock_cat_mixture(p, direct.dim());
    CHECK((direct.mat - mixture.mat).cwiseAbs().maxCoeff() < 1e-8);
}
