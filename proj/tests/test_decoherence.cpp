#include "decoherence.hpp"

#include "fock.hpp"
#include "quadrature.hpp"
#include "states.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

using namespace mqs;

TEST_CASE("ScaledTime validation") {
    CHECK_THROWS_AS(ScaledTime(-0.1), std::domain_error);
    CHECK_THROWS_AS(ScaledTime(std::nan("")), std::domain_error);
    CHECK(ScaledTime(0.0).kappa() == 1.0);
    CHECK(ScaledTime(0.0).one_minus_kappa() == 0.0);
    // expm1 keeps 1 - kappa accurate at tiny times.
    CHECK(ScaledTime(1e-12).one_minus_kappa() == doctest::Approx(1e-12).epsilon(1e-10));
}

TEST_CASE("damp_dyadic") {
    CHECK_THROWS_AS(damp_dyadic({1, 0}, {1, 0}, 0.0), std::domain_error);
    CHECK_THROWS_AS(damp_dyadic({1, 0}, {1, 0}, 1.5), std::domain_error);
    // Diagonal dyadics keep coefficient 1 (trace preservation).
    for (double k : {0.2, 0.6, 1.0}) {
        const DampedDyadic d = damp_dyadic({1.3, -0.4}, {1.3, -0.4}, k);
        CHECK(d.coefficient.real() == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(d.coefficient.imag() == doctest::Approx(0.0).epsilon(1e-14));
        CHECK(d.a.re == doctest::Approx(std::sqrt(k) * 1.3).epsilon(1e-14));
    }
    // kappa = 1 is the identity.
    const DampedDyadic id = damp_dyadic({0.7, 0.2}, {-0.3, 0.5}, 1.0);
    CHECK(std::abs(id.coefficient - std::complex<double>(1.0, 0.0)) < 1e-14);
    CHECK(id.a.re == 0.7);
    CHECK(id.b.im == 0.5);
    // Opposite real amplitudes: the cat-coherence decay e^{-2(1-kappa)a^2}.
    const double a = 1.7, k = 0.55;
    const DampedDyadic cat = damp_dyadic({a, 0}, {-a, 0}, k);
    CHECK(cat.coefficient.real() ==
          doctest::Approx(std::exp(-2.0 * (1.0 - k) * a * a)).epsilon(1e-13));
}

TEST_CASE("evolve") {
    const MqsParams p(2.0, 3.0);
    const EvolvedParams e0 = evolve(p, ScaledTime(0.0));
    CHECK(e0.kappa == 1.0);
    CHECK(e0.alpha_prime == p.alpha);
    CHECK(e0.v_prime == p.v);
    CHECK(e0.norm_t == doctest::Approx(1.0 / mixed_norm(p)).epsilon(1e-14));

    const EvolvedParams eh = evolve(p, ScaledTime(std::log(2.0)));
    CHECK(eh.kappa == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(eh.alpha_prime == doctest::Approx(p.alpha / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(eh.v_prime == doctest::Approx((p.v + 1.0) / 2.0).epsilon(1e-14));
    // v_prime stays within [1, V].
    for (double gt : {0.01, 0.5, 3.0}) {
        const EvolvedParams e = evolve(p, ScaledTime(gt));
        CHECK(e.v_prime >= 1.0);
        CHECK(e.v_prime <= p.v);
    }
}

TEST_CASE("wigner_origin basics") {
    // -2/pi at t = 0 for every (alpha, V); +2/pi in the long-time limit.
    for (double a : {1.0, 2.0, 5.0, 10.0, 30.0, 50.0, 100.0})
        for (double v : {1.0, 3.0, 10.0, 1e3, 1e4}) {
            const MqsParams p(a, v);
            CHECK(wigner_origin(p, ScaledTime(0.0)) ==
                  doctest::Approx(-2.0 / M_PI).epsilon(1e-12));
            CHECK(wigner_origin(p, ScaledTime(50.0)) ==
                  doctest::Approx(2.0 / M_PI).epsilon(1e-9));
        }
}

TEST_CASE("wigner_origin pure-cat dyadic route") {
    // Two independent code paths for V = 1 agree to 1e-12.
    for (double a : {0.8, 1.5, 3.0, 7.0})
        for (double gt : {0.0, 0.02, 0.3, 1.0, 4.0})
            CHECK(wigner_origin(MqsParams(a, 1.0), ScaledTime(gt)) ==
                  doctest::Approx(pure_cat_wigner_origin_dyadic(a, ScaledTime(gt)))
                      .epsilon(1e-12));
}

TEST_CASE("wigner_origin against oracle parity") {
    // Frozen sample plus the live matrix route.
    CHECK(wigner_origin(MqsParams(2.0, 3.0), ScaledTime(0.1)) ==
          doctest::Approx(-0.27118029924743).epsilon(1e-11));
    for (auto [a, v] : {std::pair{1.5, 1.0}, {2.0, 3.0}, {2.5, 5.0}}) {
        const MqsParams p(a, v);
        const FockDensityMatrix rho0 = mixed_mqs_fock(p);
        for (double gt : {0.05, 0.3, 0.7}) {
            const FockDensityMatrix damped =
                amplitude_damping_channel(rho0, ScaledTime(gt).kappa());
            CHECK(wigner_origin(p, ScaledTime(gt)) ==
                  doctest::Approx(parity_wigner_origin(damped)).epsilon(1e-8));
        }
    }
}

TEST_CASE("full wigner") {
    const MqsParams p(2.0, 3.0);
    const ScaledTime t(0.1);
    // Consistency with the origin formula.
    CHECK(wigner(p, t, {0.0, 0.0}) ==
          doctest::Approx(wigner_origin(p, t)).epsilon(1e-12));
    // Gaussian decay far from the lobes.
    CHECK(std::abs(wigner(p, t, {5.0 * p.alpha, 0.0})) < 1e-12);
    CHECK(std::abs(wigner(p, ScaledTime(0.0), {0.0, 8.0})) < 1e-12);
    // Against the oracle: W(eta) = (2/pi) Tr[D(eta) (-1)^n D(eta)^dag rho].
    const FockDensityMatrix rho0 = mixed_mqs_fock(p);
    const FockDensityMatrix damped = amplitude_damping_channel(rho0, t.kappa());
    for (PhasePoint eta : {PhasePoint{1.0, 0.0}, {0.5, 0.8}, {-1.7, 0.3}}) {
        const Eigen::MatrixXcd d = displacement_matrix(-eta.c(), damped.dim());
        const Eigen::MatrixXcd moved = d * damped.mat * d.adjoint();
        double parity = 0.0;
        for (int n = 0; n < damped.dim(); ++n)
            parity += ((n % 2) ? -1.0 : 1.0) * moved(n, n).real();
        CHECK(wigner(p, t, eta) ==
              doctest::Approx(2.0 / M_PI * parity).epsilon(1e-8));
    }
}

TEST_CASE("wigner normalization on the grid") {
    // Trapezoid integral of W over a wide grid is 1 for desk-scale alpha.
    const MqsParams p(2.0, 3.0);
    const ScaledTime t(0.1);
    const double step = 0.05;
    double total = 0.0;
    for (double x = -8.0; x <= 8.0 + 1e-9; x += step)
        for (double y = -6.0; y <= 6.0 + 1e-9; y += step)
            total += wigner(p, t, {x, y});
    total *= step * step;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("wigner_min_scan") {
    // Minimum within one grid step of the origin at the probed points.
    for (auto [a, v, gt] :
         {std::tuple{2.0, 3.0, 0.1}, {3.0, 1.0, 0.05}, {2.0, 5.0, 0.3}}) {
        const MqsParams p(a, v);
        const ScanGrid grid = ScanGrid::for_params(p);
        const ScanResult r = wigner_min_scan(p, ScaledTime(gt), grid);
        CHECK(std::abs(r.argmin.re) <= grid.step + 1e-12);
        CHECK(std::abs(r.argmin.im) <= grid.step + 1e-12);
        CHECK(r.min_value < 0.0);
    }
    // Pure cat at t = 0: the scan minimum is exactly -2/pi at the origin.
    const MqsParams cat(3.0, 1.0);
    const ScanResult r0 =
        wigner_min_scan(cat, ScaledTime(0.0), ScanGrid::for_params(cat));
    CHECK(r0.min_value == doctest::Approx(-2.0 / M_PI).epsilon(1e-12));
    CHECK(r0.argmin.re == 0.0);
    CHECK(r0.argmin.im == 0.0);
    // Fully decohered: no negativity anywhere on the grid.
    const MqsParams p(2.0, 3.0);
    const ScanResult rlate =
        wigner_min_scan(p, ScaledTime(5.0), ScanGrid::for_params(p));
    CHECK(rlate.min_value >= 0.0);
}

TEST_CASE("decay_mixture") {
    const MqsParams p(30.0, 1e3);
    CHECK(decay_mixture(p, ScaledTime(0.0)) == doctest::Approx(1.0).epsilon(1e-12));
    // V -> 1 reduces to the single decaying exponential.
    for (double gt : {0.0, 1e-4, 1e-2, 0.5})
        CHECK(decay_mixture(MqsParams(4.0, 1.0), ScaledTime(gt)) ==
              doctest::Approx(single_decay(4.0, ScaledTime(gt))).epsilon(1e-12));
    // Strictly decreasing, bounded in (0, 1].
    double prev = 1.0 + 1e-15;
    for (double gt : {1e-5, 1e-4, 1e-3, 3e-3, 1e-2, 0.1}) {
        const double c = decay_mixture(p, ScaledTime(gt));
        CHECK(c > 0.0);
        CHECK(c < prev);
        prev = c;
    }
    // Closed form against direct quadrature of the weighted integral.  The
    // integrand mixes two radial scales (the broad Gaussian, width ~22, and
    // the 1 - e^{-2 r^2} factor, width ~0.5 near the origin), so integrate in
    // polar coordinates: fine Simpson radially, trapezoid (spectrally
    // accurate for periodic integrands) in the angle.
    const double scale = std::sqrt(0.5 * (p.v - 1.0));
    const double rmax = p.alpha + 8.0 * scale;
    const int nr = 4200, nth = 400; // nr even for Simpson
    const double hr = rmax / nr, hth = 2.0 * M_PI / nth;
    for (double gt : {1e-4, 5e-4, 1e-3, 3e-3, 8e-3}) {
        double direct = 0.0;
        for (int i = 0; i <= nr; ++i) {
            const double r = i * hr;
            const double sw = (i == 0 || i == nr) ? 1.0 : ((i % 2) ? 4.0 : 2.0);
            double ring = 0.0;
            for (int j = 0; j < nth; ++j)
                ring += decomposition_weight(
                    p, {r * std::cos(j * hth), r * std::sin(j * hth)});
            direct += sw * r * std::exp(-2.0 * gt * r * r) * ring * hth;
        }
        direct *= hr / 3.0;
        CHECK(decay_mixture(p, ScaledTime(gt)) ==
              doctest::Approx(direct).epsilon(1e-8));
    }
    // Faster than the single rate early, slower late;
    // exactly one sign flip of the difference on (0, 0.01].
    int flips = 0;
    double prev_sign = 0.0;
    for (double gt = 1e-5; gt <= 0.01; gt += 1e-5) {
        const double d =
            decay_mixture(p, ScaledTime(gt)) - single_decay(p.alpha, ScaledTime(gt));
        const double sign = (d > 0.0) ? 1.0 : (d < 0.0 ? -1.0 : 0.0);
        if (prev_sign != 0.0 && sign != 0.0 && sign != prev_sign)
            ++flips;
        if (sign != 0.0)
            prev_sign = sign;
    }
    CHECK(flips == 1);
}

TEST_CASE("crossover_time") {
    // Identical parameters: the difference vanishes identically.
    CHECK_THROWS_AS(crossover_time(MqsParams(2.0, 1.0), MqsParams(2.0, 1.0),
                                   ScaledTime(1e-4), ScaledTime(1e-2)),
                    NoCrossoverError);
    // Frozen root for the headline pair (bisection tolerance 1e-7).
    const double gt = crossover_time(MqsParams(30.0, 1.0), MqsParams(30.0, 1e3),
                                     ScaledTime(1e-4), ScaledTime(1e-2))
                          .gamma_t;
    CHECK(gt == doctest::Approx(7.20525e-4).epsilon(1e-3));
    // The difference changes sign within one bisection step of the root.
    const auto diff = [](double t) {
        return wigner_origin(MqsParams(30.0, 1.0), ScaledTime(t)) -
               wigner_origin(MqsParams(30.0, 1e3), ScaledTime(t));
    };
    CHECK(diff(gt - 1e-7) * diff(gt + 1e-7) <= 0.0);
    // A crossover also exists for the larger pair on a wider bracket.
    const double gt2 = crossover_time(MqsParams(100.0, 1.0), MqsParams(100.0, 1e4),
                                      ScaledTime(1e-5), ScaledTime(1e-2))
                           .gamma_t;
    CHECK(gt2 == doctest::Approx(6.3238e-5).epsilon(1e-3));
    // No sign change on a bracket that misses the root.
    CHECK_THROWS_AS(crossover_time(MqsParams(30.0, 1.0), MqsParams(30.0, 1e3),
                                   ScaledTime(1.5e-3), ScaledTime(3.5e-3)),
                    NoCrossoverError);
}

TEST_CASE("time grids and curves") {
    CHECK_THROWS_AS(TimeGrid(0.0, 1.0, 10, true), std::domain_error);
    CHECK_THROWS_AS(TimeGrid(1e-3, 1e-4, 10, false), std::domain_error);
    CHECK_THROWS_AS(TimeGrid(1e-3, 1.0, 1, false), std::domain_error);
    const TimeGrid lin(0.0, 1.0, 5, false);
    const auto pts = lin.points();
    CHECK(pts.size() == 5);
    CHECK(pts.front() == 0.0);
    CHECK(pts.back() == 1.0);
    CHECK(pts[2] == doctest::Approx(0.5).epsilon(1e-14));
    const TimeGrid log(1e-4, 1.0, 5, true);
    const auto lpts = log.points();
    CHECK(lpts.front() == doctest::Approx(1e-4).epsilon(1e-14));
    CHECK(lpts.back() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(lpts[2] == doctest::Approx(1e-2).epsilon(1e-12));

    const Curve c = make_curve(Quantity::W0Mixed, MqsParams(2.0, 3.0),
                               TimeGrid(1e-3, 1.0, 7, true));
    CHECK(c.samples.size() == 7);
    for (std::size_t i = 1; i < c.samples.size(); ++i)
        CHECK(c.samples[i].first > c.samples[i - 1].first);
    CHECK(c.samples[0].second ==
          doctest::Approx(wigner_origin(MqsParams(2.0, 3.0), ScaledTime(1e-3)))
              .epsilon(1e-14));
}

TEST_CASE("csv output") {
    const Curve c = make_curve(Quantity::COfT, MqsParams(2.0, 3.0),
                               TimeGrid(1e-3, 1e-1, 3, true));
    std::ostringstream a, b;
    write_csv(c, a);
    write_csv(c, b);
    CHECK(a.str() == b.str());
    const std::string out = a.str();
    CHECK(out.find("# quantity=C_of_t alpha=2 V=3 time=gamma_t(dimensionless)") !=
          std::string::npos);
    CHECK(out.find("gamma_t,value") != std::string::npos);
    // Header + column line + one row per sample.
    CHECK(std::count(out.begin(), out.end(), '\n') == 5);
}
