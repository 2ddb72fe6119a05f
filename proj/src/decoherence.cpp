#include "decoherence.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>

namespace mqs {

EvolvedParams evolve(const MqsParams &p, ScaledTime t) {
    const double kappa = t.kappa();
    return {kappa, std::sqrt(kappa) * p.alpha, kappa * (p.v - 1.0) + 1.0,
            1.0 / mixed_norm(p)};
}

DampedDyadic damp_dyadic(PhasePoint a, PhasePoint b, double kappa) {
    if (!(kappa > 0.0) || kappa > 1.0)
        throw std::domain_error("damp_dyadic: kappa must be in (0, 1]");
    const std::complex<double> ab = a.c() * std::conj(b.c());
    const std::complex<double> exponent =
        -(1.0 - kappa) * (0.5 * (a.abs2() + b.abs2()) - ab);
    const double s = std::sqrt(kappa);
    return {std::exp(exponent), {s * a.re, s * a.im}, {s * b.re, s * b.im}};
}

double wigner_origin(const MqsParams &p, ScaledTime t) {
    // Exponent arguments carry products like 2 alpha^2 kappa / A at alpha up to
    // ~100 and V up to ~1e4; form them in extended precision.  Terms that
    // underflow are additive and clamp to 0 exactly.
    const long double kappa = t.kappa();
    const long double omk = t.one_minus_kappa();
    const long double a2 = static_cast<long double>(p.alpha) * p.alpha;
    const long double u = static_cast<long double>(p.v) - 1.0L;
    const long double A = kappa * u + 1.0L;
    const long double B = omk * u + 1.0L;
    const long double lobe = 2.0L * expl(-2.0L * kappa * a2 / A) / A;
    const long double cross = 2.0L * expl(-2.0L * omk * a2 / B) / B;
    const long double denom = 2.0L - 2.0L * expl(-2.0L * a2 / p.v) / p.v;
    return static_cast<double>(2.0L / M_PIl * (lobe - cross) / denom);
}

double pure_cat_wigner_origin_dyadic(double alpha, ScaledTime t) {
    const double kappa = t.kappa();
    const PhasePoint plus{alpha, 0.0};
    const PhasePoint minus{-alpha, 0.0};
    // Parity of a damped dyadic c |a'><b'| is c <b'|(-1)^n|a'> = c <b'|-a'>.
    auto parity = [kappa](PhasePoint a, PhasePoint b) {
        const DampedDyadic d = damp_dyadic(a, b, kappa);
        const std::complex<double> overlap =
            std::exp(-0.5 * (d.a.abs2() + d.b.abs2()) -
                     std::conj(d.b.c()) * d.a.c());
        return (d.coefficient * overlap).real();
    };
    const double n2 = pure_scs_norm(alpha) * pure_scs_norm(alpha);
    const double total = parity(plus, plus) + parity(minus, minus) -
                         parity(plus, minus) - parity(minus, plus);
    return 2.0 / M_PI * n2 * total;
}

double wigner(const MqsParams &p, ScaledTime t, PhasePoint eta) {
    const double kappa = t.kappa();
    const double omk = t.one_minus_kappa();
    const double sk = std::sqrt(kappa);
    const double ap = sk * p.alpha;
    const double vp = kappa * (p.v - 1.0) + 1.0;
    const double n = mixed_norm(p);

    auto lobe = [&](double sign) {
        const double dx = eta.re - sign * ap;
        const double d2 = dx * dx + eta.im * eta.im;
        return 2.0 / (M_PI * vp) * std::exp(-2.0 * d2 / vp);
    };

    // Interference: Gaussian average over the initial P-distribution of the
    // damped cross-dyadic Wigner kernel, per real axis
    //   E[exp(-2(1-kappa) X^2 + c X)]  with  c purely imaginary.
    const double s2 = 0.25 * (p.v - 1.0); // per-axis variance of the P weight
    const double a = 2.0 * omk;
    const double d = 1.0 + 2.0 * a * s2;
    auto moment = [&](double mean, std::complex<double> c) {
        return std::exp((-a * mean * mean + c * mean + 0.5 * c * c * s2) / d) /
               std::sqrt(d);
    };
    const std::complex<double> cx(0.0, -4.0 * sk * eta.im);
    const std::complex<double> cy(0.0, 4.0 * sk * eta.re);
    const double interference = 4.0 / M_PI * std::exp(-2.0 * eta.abs2()) *
                                (moment(p.alpha, cx) * moment(0.0, cy)).real();

    return n * (lobe(+1.0) + lobe(-1.0) - interference);
}

ScanResult wigner_min_scan(const MqsParams &p, ScaledTime t, const ScanGrid &grid) {
    if (!(grid.step > 0.0) || grid.x_half <= 0.0 || grid.y_half <= 0.0)
        throw std::domain_error("wigner_min_scan: invalid grid");
    const long nx = std::lround(2.0 * grid.x_half / grid.step);
    const long ny = std::lround(2.0 * grid.y_half / grid.step);
    ScanResult best{std::numeric_limits<double>::infinity(), {}};
    for (long i = 0; i <= nx; ++i) {
        const double x = -grid.x_half + static_cast<double>(i) * grid.step;
        for (long j = 0; j <= ny; ++j) {
            const double y = -grid.y_half + static_cast<double>(j) * grid.step;
            const double w = wigner(p, t, {x, y});
            if (w < best.min_value)
                best = {w, {x, y}};
        }
    }
    return best;
}

double decay_mixture(const MqsParams &p, ScaledTime t) {
    const double a2 = p.alpha * p.alpha;
    const double u = p.v - 1.0;
    auto decay_kernel = [&](double x) {
        const double g = 1.0 + u * x;
        return std::exp(-2.0 * a2 * x / g) / g;
    };
    const double denom = 1.0 - std::exp(-2.0 * a2 / p.v) / p.v;
    return (decay_kernel(t.gamma_t) - decay_kernel(t.gamma_t + 1.0)) / denom;
}

double single_decay(double alpha, ScaledTime t) {
    return std::exp(-2.0 * alpha * alpha * t.gamma_t);
}

ScaledTime crossover_time(const MqsParams &p_pure, const MqsParams &p_mixed,
                          ScaledTime lo, ScaledTime hi) {
    if (!(lo.gamma_t < hi.gamma_t))
        throw std::domain_error("crossover_time: bracket must satisfy lo < hi");
    auto diff = [&](double gt) {
        return wigner_origin(p_pure, ScaledTime(gt)) -
               wigner_origin(p_mixed, ScaledTime(gt));
    };
    double a = lo.gamma_t, b = hi.gamma_t;
    double fa = diff(a), fb = diff(b);
    if (fa == 0.0 && fb == 0.0)
        throw NoCrossoverError("crossover_time: difference vanishes on the whole "
                               "bracket (identical curves?)");
    if (fa * fb > 0.0)
        throw NoCrossoverError("crossover_time: no sign change in bracket");
    constexpr double tol = 1e-7;
    while (b - a > tol) {
        const double mid = 0.5 *(a + b);
        const double fm = diff(mid);
        if (fa * fm <= 0.0) {
            b = mid;
            fb = fm;
        } else {
            a = mid;
            fa = fm;
        }
    }
    return ScaledTime(0.5 * (a + b));
}

const char *quantity_name(Quantity q) {
    switch (q) {
    case Quantity::W0Pure: return "W0_pure";
    case Quantity::W0Mixed: return "W0_mixed";
    case Quantity::COfT: return "C_of_t";
    case Quantity::SingleDecay: return "single_decay";
    case Quantity::WSurfaceSlice: return "W_surface_slice";
    }
    return "unknown";
}

TimeGrid::TimeGrid(double tmin_, double tmax_, std::size_t count_, bool log_spacing_)
    : tmin(tmin_), tmax(tmax_), count(count_), log_spacing(log_spacing_) {
    if (!(tmin >= 0.0) || !(tmax > tmin) || count < 2)
        throw std::domain_error("TimeGrid: need 0 <= tmin < tmax and count >= 2");
    if (log_spacing && tmin <= 0.0)
        throw std::domain_error("TimeGrid: log spacing requires tmin > 0");
}

std::vector<double> TimeGrid::points() const {
    std::vector<double> ts(count);
    const std::size_t last = count - 1;
    if (log_spacing) {
        const double la = std::log(tmin), lb = std::log(tmax);
        for (std::size_t i = 0; i < count; ++i)
            ts[i] = std::exp(la + (lb - la) * static_cast<double>(i) /
                                      static_cast<double>(last));
    } else {
        for (std::size_t i = 0; i < count; ++i)
            ts[i] = tmin + (tmax - tmin) * static_cast<double>(i) /
                               static_cast<double>(last);
    }
    ts.front() = tmin;
    ts.back() = tmax;
    return ts;
}

Curve make_curve(Quantity q, const MqsParams &p, const TimeGrid &grid,
                 PhasePoint eta) {
    Curve curve{q, p, {}};
    const auto ts = grid.points();
    curve.samples.reserve(ts.size());
    for (double gt : ts) {
        const ScaledTime t(gt);
        double value = 0.0;
        switch (q) {
        case Quantity::W0Pure:
        case Quantity::W0Mixed:
            value = wigner_origin(p, t);
            break;
        case Quantity::COfT:
            value = decay_mixture(p, t);
            break;
        case Quantity::SingleDecay:
            value = single_decay(p.alpha, t);
            break;
        case Quantity::WSurfaceSlice:
            value = wigner(p, t, eta);
            break;
        }
        curve.samples.emplace_back(gt, value);
    }
    return curve;
}

void write_csv(const Curve &curve, std::ostream &os) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "# quantity=%s alpha=%.17g V=%.17g time=gamma_t(dimensionless)\n",
                  quantity_name(curve.quantity), curve.params.alpha, curve.params.v);
    os << buf;
    os << "gamma_t,value\n";
    for (const auto &[gt, value] : curve.samples) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", gt, value);
        os << buf;
    }
}

void write_csv(const Curve &curve, const std::string &path) {
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw std::runtime_error("write_csv: cannot open " + path);
    write_csv(curve, os);
    os.flush();
    if (!os)
        throw std::runtime_error("write_csv: write failed for " + path);
}

} // namespace mqs
