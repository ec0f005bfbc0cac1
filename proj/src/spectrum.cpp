#include "respdde/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "respdde/model.hpp"

namespace respdde {

LinearPair linearize(double alpha, double beta, const Equilibrium& eq) {
    const double xs = eq.x_star, ys = eq.y_star;
    const double e = std::exp((ys - 100.0) / 20.0);
    const double v = ventilation(xs, ys);          // (7/50) xs e
    const double vx = (7.0 / 50.0) * e;            // dV/dx
    const double vy = v / 20.0;                    // dV/dy

    LinearPair lp{};
    lp.a1[0][0] = alpha * v;
    lp.a1[0][1] = 0.0;
    lp.a1[1][0] = 0.0;
    lp.a1[1][1] = beta * v;
    lp.b1[0][0] = alpha * xs * vx;
    lp.b1[0][1] = alpha * xs * vy;
    lp.b1[1][0] = beta * ys * vx;
    lp.b1[1][1] = beta * ys * vy;
    return lp;
}

CharCoefficients char_coeffs(double alpha, double beta, const Equilibrium& eq) {
    const double xs = eq.x_star, ys = eq.y_star;
    const double e1 = std::exp(ys / 20.0 - 5.0);
    const double e2 = std::exp(ys / 10.0 - 10.0);

    CharCoefficients k{};
    k.A = (7.0 / 50.0) * alpha * xs * e1 + (7.0 / 50.0) * beta * xs * e1;
    k.B = (7.0 / 50.0) * alpha * xs * e1 + (7.0 / 1000.0) * beta * xs * ys * e1;
    k.C = (49.0 / 2500.0) * alpha * beta * xs * xs * e2;
    k.D = k.C + k.C * ys / 20.0;
    k.M = -k.A * k.A + k.B * k.B + 2.0 * k.C;
    k.N = -k.C * k.C + k.D * k.D;
    return k;
}

complexd char_value(complexd lambda, double tau, const CharCoefficients& k) {
    const complexd ex = std::exp(-lambda * tau);
    return lambda * lambda + (k.A + k.B * ex) * lambda + (k.C + k.D * ex);
}

complexd char_deriv(complexd lambda, double tau, const CharCoefficients& k) {
    const complexd ex = std::exp(-lambda * tau);
    return 2.0 * lambda + k.A + k.B * ex - tau * ex * (k.B * lambda + k.D);
}

double crossing_frequency(const CharCoefficients& k) {
    return std::sqrt((k.M + std::sqrt(k.M * k.M + 4.0 * k.N)) / 2.0);
}

namespace {

// Phase theta in [0, 2 pi) with sin(theta), cos(theta) solving the crossing
// system; the 2x2 elimination has determinant B^2 w^2 + D^2 > 0.
double crossing_phase(const CharCoefficients& k, double w) {
    const double det = k.B * k.B * w * w + k.D * k.D;
    const double s = w * (k.A * k.D - k.B * (k.C - w * w)) / det;
    const double c = (-k.A * k.B * w * w - k.D * (k.C - w * w)) / det;
    double theta = std::atan2(s, c);
    if (theta < 0.0) theta += 2.0 * std::numbers::pi;
    return theta;
}

}  // namespace

CrossingSet critical_delays(const CharCoefficients& k, int n_max) {
    if (n_max < 0) throw std::invalid_argument("critical_delays: n_max must be >= 0");
    const double w = crossing_frequency(k);
    const double theta = crossing_phase(k, w);

    CrossingSet cs;
    cs.omega_star = w;
    for (int n = 0; n <= n_max; ++n) {
        const double tau = (theta + 2.0 * std::numbers::pi * n) / w;
        if (tau >= 0.0) cs.tau_branches.push_back({Branch::plus, n, tau});
    }
    return cs;
}

double companion_delay(const CharCoefficients& k, int n) {
    const double w = crossing_frequency(k);
    const double theta = crossing_phase(k, w);
    return (2.0 * std::numbers::pi * (n + 1) - theta) / w;
}

double transversality(const CharCoefficients& k, double omega) {
    const double w2 = omega * omega;
    return (k.N + w2 * w2) / (w2 * (k.B * k.B * w2 + k.D * k.D));
}

complexd lambda_prime(const CharCoefficients& k, double omega, double tau) {
    const complexd lam(0.0, omega);
    const complexd inv =
        -(k.A * k.D - k.B * k.C + k.B * lam * lam + 2.0 * k.D * lam) /
            (lam * (k.A * lam + k.C + lam * lam) * (k.B * lam + k.D)) -
        tau / lam;
    return 1.0 / inv;
}

namespace {

// Newton refinement of one seed; returns true when |Delta| <= accept_tol.
bool refine_root(complexd& lam, double tau, const CharCoefficients& k, const RootOptions& opt) {
    for (int it = 0; it < opt.max_iter; ++it) {
        const complexd f = char_value(lam, tau, k);
        if (std::abs(f) < opt.newton_tol) return true;
        const complexd df = char_deriv(lam, tau, k);
        if (std::abs(df) == 0.0) return false;
        lam -= f / df;
        if (!std::isfinite(lam.real()) || !std::isfinite(lam.imag()) || std::abs(lam) > 1e8)
            return false;
    }
    return std::abs(char_value(lam, tau, k)) <= opt.accept_tol;
}

void add_root(std::vector<complexd>& roots, complexd lam, double dedupe_tol) {
    for (const complexd& r : roots)
        if (std::abs(lam - r) < dedupe_tol) return;
    roots.push_back(lam);
}

// tau = 0 pair of the quadratic lambda^2 + (A+B) lambda + (C+D).
std::pair<complexd, complexd> quadratic_roots(const CharCoefficients& k) {
    const double b = k.A + k.B, c = k.C + k.D;
    const complexd sq = std::sqrt(complexd(b * b - 4.0 * c, 0.0));
    return {(-b + sq) / 2.0, (-b - sq) / 2.0};
}

void collect_roots(std::vector<complexd>& roots, double tau, const CharCoefficients& k,
                   const RootOptions& opt, double re_lo, double re_hi, double im_hi) {
    for (int i = 0; i < opt.grid_re; ++i) {
        const double re = re_lo + (re_hi - re_lo) * i / (opt.grid_re - 1);
        for (int j = 0; j < opt.grid_im; ++j) {
            const double im = im_hi * j / (opt.grid_im - 1);
            complexd lam(re, im);
            if (refine_root(lam, tau, k, opt))
                add_root(roots, complexd(lam.real(), std::abs(lam.imag())), opt.dedupe_tol);
        }
    }
}

}  // namespace

SpectrumResult characteristic_roots(double alpha, double beta, double tau, int count,
                                    const RootOptions& opt) {
    if (tau < 0.0) throw std::invalid_argument("characteristic_roots: tau must be >= 0");
    if (count < 1) throw std::invalid_argument("characteristic_roots: count must be >= 1");

    const Equilibrium eq = find_equilibrium(alpha, beta);
    const CharCoefficients k = char_coeffs(alpha, beta, eq);

    SpectrumResult out;
    if (tau == 0.0) {
        auto [r1, r2] = quadratic_roots(k);
        out.roots = {r1, r2};
    } else {
        const double w = crossing_frequency(k);
        std::vector<complexd> roots;

        // continuation of the tau = 0 pair keeps the dominant branch seeded
        auto [r1, r2] = quadratic_roots(k);
        for (complexd seed : {r1, r2}) {
            complexd lam = seed;
            const int steps = 8;
            for (int s = 1; s <= steps; ++s) {
                if (!refine_root(lam, tau * s / steps, k, opt)) break;
                if (s == steps) add_root(roots, complexd(lam.real(), std::abs(lam.imag())), opt.dedupe_tol);
            }
        }

        double re_lo = opt.re_lo, re_hi = opt.re_hi;
        double im_hi = opt.im_mult * w;
        collect_roots(roots, tau, k, opt, re_lo, re_hi, im_hi);

        // widen the real window until the rightmost root survives two rounds
        double best = -std::numeric_limits<double>::infinity();
        for (const complexd& r : roots) best = std::max(best, r.real());
        int stable_rounds = 0;
        while (stable_rounds < 2) {
            re_lo *= 2.0;
            re_hi += 0.25;
            collect_roots(roots, tau, k, opt, re_lo, re_hi, im_hi);
            double now = best;
            for (const complexd& r : roots) now = std::max(now, r.real());
            stable_rounds = (now <= best + opt.dedupe_tol) ? stable_rounds + 1 : 0;
            best = std::max(best, now);
        }

        // grow the imaginary window until enough distinct roots are known
        int grow = 0;
        while (static_cast<int>(roots.size()) * 2 < count && grow < 6) {
            im_hi *= 2.0;
            collect_roots(roots, tau, k, opt, re_lo, re_hi, im_hi);
            ++grow;
        }

        if (roots.empty())
            throw std::runtime_error("characteristic_roots: no root survived refinement");

        // conjugate closure
        out.roots = roots;
        for (const complexd& r : roots)
            if (r.imag() > opt.dedupe_tol) out.roots.push_back(std::conj(r));
    }

    std::sort(out.roots.begin(), out.roots.end(), [](const complexd& a, const complexd& b) {
        if (a.real() != b.real()) return a.real() > b.real();
        return a.imag() > b.imag();
    });
    out.max_real = out.roots.front().real();
    out.residuals.reserve(out.roots.size());
    for (const complexd& r : out.roots)
        out.residuals.push_back(std::abs(char_value(r, tau, k)));
    return out;
}

double max_real_part(double alpha, double beta, double tau) {
    return characteristic_roots(alpha, beta, tau, 2).max_real;
}

CookeResult cooke_dichotomy(double alpha, double beta) {
    const Equilibrium eq = find_equilibrium(alpha, beta);
    const double xs = eq.x_star, ys = eq.y_star;
    const double e = std::exp((ys - 100.0) / 20.0);
    const double v = ventilation(xs, ys);
    const double vx = (7.0 / 50.0) * e;
    const double vy = v / 20.0;

    if (v >= xs * vx + ys * vy)
        return {true, std::numeric_limits<double>::quiet_NaN()};

    const CharCoefficients k = char_coeffs(alpha, beta, eq);
    const CrossingSet cs = critical_delays(k, 0);
    return {false, cs.tau_branches.front().tau};
}

}  // namespace respdde
