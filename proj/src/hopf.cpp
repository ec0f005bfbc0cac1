#include "respdde/hopf.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace respdde {

namespace {

constexpr complexd kI{0.0, 1.0};

struct Mat2c {
    complexd m[2][2];
};

// i omega I + A1 + B1 z; its kernel at z = e^{-i omega tau} carries the
// right eigenvector of the rescaled generator.
Mat2c eigen_matrix(double alpha, double beta, const Equilibrium& eq, double omega, complexd z) {
    const LinearPair lp = linearize(alpha, beta, eq);
    Mat2c s;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            s.m[r][c] = lp.a1[r][c] + lp.b1[r][c] * z;
    s.m[0][0] += kI * omega;
    s.m[1][1] += kI * omega;
    return s;
}

Vec2c solve2x2(const Mat2c& a, const Vec2c& rhs, const char* what) {
    const complexd det = a.m[0][0] * a.m[1][1] - a.m[0][1] * a.m[1][0];
    double scale = 0.0;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) scale = std::max(scale, std::abs(a.m[r][c]));
    if (std::abs(det) < 1e-14 * scale * scale) {
        const double cond = scale * scale / std::max(std::abs(det), 1e-300);
        throw std::runtime_error(std::string(what) +
                                 ": singular matrix, condition estimate " + std::to_string(cond));
    }
    return {(rhs[0] * a.m[1][1] - a.m[0][1] * rhs[1]) / det,
            (a.m[0][0] * rhs[1] - rhs[0] * a.m[1][0]) / det};
}

// (1, cbar*) . (-B1) . (1, c)^T  -- the delayed-term pairing in the bilinear form
complexd delayed_pairing(const LinearPair& lp, complexd cbs, complexd c) {
    const complexd row0 = -(lp.b1[0][0] + lp.b1[0][1] * c);
    const complexd row1 = -(lp.b1[1][0] + lp.b1[1][1] * c);
    return row0 + cbs * row1;
}

}  // namespace

std::pair<complexd, complexd> eigenvectors(double alpha, double beta, const Equilibrium& eq,
                                           double omega, double tau) {
    const CharCoefficients k = char_coeffs(alpha, beta, eq);
    if (std::abs(char_value(complexd(0.0, omega), tau, k)) >= 1e-8)
        throw std::invalid_argument("eigenvectors: (omega, tau) is not a crossing pair");

    const complexd z = std::exp(-kI * omega * tau);
    const Mat2c s = eigen_matrix(alpha, beta, eq, omega, z);
    const complexd c = -s.m[0][0] / s.m[0][1];

    // adjoint system is the conjugate matrix; (1, c*) is its left null vector
    Mat2c s2;
    for (int r = 0; r < 2; ++r)
        for (int cc = 0; cc < 2; ++cc) s2.m[r][cc] = std::conj(s.m[r][cc]);
    const complexd c_star = -s2.m[0][0] / s2.m[1][0];
    return {c, c_star};
}

complexd normalizer(complexd c, complexd c_star, const Equilibrium& eq, double alpha,
                    double beta, double omega, double tau) {
    const LinearPair lp = linearize(alpha, beta, eq);
    const complexd cbs = std::conj(c_star);
    const complexd z = std::exp(-kI * omega * tau);
    const complexd denom = 1.0 + cbs * c + tau * z * delayed_pairing(lp, cbs, c);
    if (std::abs(denom) < 1e-12)
        throw std::runtime_error("normalizer: degenerate denominator");
    return 1.0 / denom;
}

complexd bilinear_with_adjoint(const HopfContext& ctx, const Vec2c& phi0, complexd mu_phi) {
    const LinearPair lp = linearize(ctx.alpha, ctx.beta, ctx.eq);
    const complexd cbs = std::conj(ctx.c_star);
    const complexd mu_psi_bar = -kI * ctx.omega * ctx.tau;  // conj of i omega tau

    // <q*, phi> = qbar*(0) phi(0) - qbar*0 [ tau M1 K ] phi0, with
    // K = int_{0}^{-1} e^{mu_psi_bar (xi + 1)} e^{mu_phi xi} dxi
    const complexd a = mu_psi_bar + mu_phi;
    complexd kint;
    if (std::abs(a) < 1e-14) {
        kint = -std::exp(mu_psi_bar);
    } else {
        kint = std::exp(mu_psi_bar) * (std::exp(-a) - 1.0) / a;
    }
    const complexd direct = phi0[0] + cbs * phi0[1];
    const complexd row0 = -(lp.b1[0][0] * phi0[0] + lp.b1[0][1] * phi0[1]);
    const complexd row1 = -(lp.b1[1][0] * phi0[0] + lp.b1[1][1] * phi0[1]);
    const complexd delayed = row0 + cbs * row1;
    return ctx.normalizer * (direct - ctx.tau * kint * delayed);
}

std::pair<Vec2c, Vec2c> e_vectors(double alpha, double beta, const Equilibrium& eq,
                                  double omega, double tau, complexd c) {
    const double e5 = std::exp(5.0);
    const complexd z2 = std::exp(-2.0 * kI * omega * tau);

    // E1: (2 i omega I + A1 + B1 e^{-2 i omega tau}) E1 = 2 F20
    const Mat2c t1 = eigen_matrix(alpha, beta, eq, 2.0 * omega, z2);
    const Vec2c rhs1 = {2.0 * complexd(-7.0 * alpha / (50.0 * e5), 0.0),
                        2.0 * (-(7.0 * beta) / (50.0 * e5)) * c * z2};
    const Vec2c e1 = solve2x2(t1, rhs1, "e_vectors[E1]");

    // E2: (A1 + B1) E2 = 2 F11; everything real
    const Mat2c t2 = eigen_matrix(alpha, beta, eq, 0.0, complexd(1.0, 0.0));
    const Vec2c rhs2 = {complexd(2.0 * (-7.0 * alpha / (25.0 * e5)), 0.0),
                        complexd(2.0 * (-7.0 * beta / (50.0 * e5)) * c.real(), 0.0)};
    const Vec2c e2 = solve2x2(t2, rhs2, "e_vectors[E2]");
    return {e1, e2};
}

Vec2c w20_at(const HopfContext& ctx, complexd g20, complexd g02, const Vec2c& e1, double theta) {
    const double th = ctx.omega * ctx.tau;
    const complexd ei = std::exp(kI * th * theta);
    const complexd emi = std::exp(-kI * th * theta);
    const complexd e2i = std::exp(2.0 * kI * th * theta);
    const Vec2c q0 = {complexd(1.0, 0.0), ctx.c};
    Vec2c w;
    for (int i = 0; i < 2; ++i)
        w[i] = (kI * g20 / th) * q0[i] * ei +
               (kI * std::conj(g02) / (3.0 * th)) * std::conj(q0[i]) * emi + e1[i] * e2i;
    return w;
}

Vec2c w11_at(const HopfContext& ctx, complexd g11, const Vec2c& e2, double theta) {
    const double th = ctx.omega * ctx.tau;
    const complexd ei = std::exp(kI * th * theta);
    const complexd emi = std::exp(-kI * th * theta);
    const Vec2c q0 = {complexd(1.0, 0.0), ctx.c};
    Vec2c w;
    for (int i = 0; i < 2; ++i)
        w[i] = -(kI * g11 / th) * q0[i] * ei +
               (kI * std::conj(g11) / th) * std::conj(q0[i]) * emi + e2[i];
    return w;
}

GCoefficients g_coefficients(const HopfContext& ctx, const Vec2c& w20_0, const Vec2c& w20_m1,
                             const Vec2c& w11_0, const Vec2c& w11_m1) {
    const double alpha = ctx.alpha, beta = ctx.beta, tau = ctx.tau;
    const double e5 = std::exp(5.0);
    const double th = ctx.omega * tau;
    const complexd cbs = std::conj(ctx.c_star);
    const complexd c = ctx.c;
    const complexd db = ctx.normalizer;
    const complexd em2 = std::exp(-2.0 * kI * th);
    const complexd ep2 = std::exp(2.0 * kI * th);
    const complexd em1 = std::exp(-kI * th);

    GCoefficients g;
    g.g20 = 2.0 * tau * db * (-(7.0 * alpha) / (50.0 * e5) - (7.0 / 50.0) * beta * c * cbs / e5 * em2);
    g.g11 = 2.0 * tau * db * (-(7.0 * alpha) / (25.0 * e5) - (7.0 * beta) / (50.0 * e5) * cbs * c.real());
    g.g02 = 2.0 * tau * db * (-(7.0 * alpha) / (50.0 * e5) - (7.0 / 50.0) * beta * std::conj(c) * cbs / e5 * ep2);
    g.g21 = tau * db *
            (-(7.0 * alpha * (4.0 * w11_0[0] + 2.0 * w20_0[0])) / (50.0 * e5) -
             (7.0 / 50.0) * beta * cbs / e5 * em1 *
                 (ep2 * (w20_m1[0] * std::conj(c) + w20_m1[1]) + 2.0 * c * w11_m1[0] +
                  2.0 * w11_m1[1]));
    return g;
}

HopfResult hopf_quantities(double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("hopf_quantities: parameters must be positive");

    const Equilibrium eq = find_equilibrium(alpha, beta);
    const CharCoefficients k = char_coeffs(alpha, beta, eq);
    const CrossingSet cs = critical_delays(k, 0);
    const double omega = cs.omega_star;
    const double tau = cs.tau_branches.front().tau;

    auto [c, c_star] = eigenvectors(alpha, beta, eq, omega, tau);
    const complexd db = normalizer(c, c_star, eq, alpha, beta, omega, tau);
    const HopfContext ctx{alpha, beta, eq, omega, tau, c, c_star, db};

    auto [e1, e2] = e_vectors(alpha, beta, eq, omega, tau, c);

    // quadratic g's first (W-independent), then the W terms they determine
    const Vec2c zero{};
    GCoefficients g = g_coefficients(ctx, zero, zero, zero, zero);
    const Vec2c w20_0 = w20_at(ctx, g.g20, g.g02, e1, 0.0);
    const Vec2c w20_m1 = w20_at(ctx, g.g20, g.g02, e1, -1.0);
    const Vec2c w11_0 = w11_at(ctx, g.g11, e2, 0.0);
    const Vec2c w11_m1 = w11_at(ctx, g.g11, e2, -1.0);
    g = g_coefficients(ctx, w20_0, w20_m1, w11_0, w11_m1);

    const double th = omega * tau;
    HopfResult r;
    r.omega_star = omega;
    r.tau_star = tau;
    r.c = c;
    r.c_star = c_star;
    r.normalizer = db;
    r.g20 = g.g20;
    r.g11 = g.g11;
    r.g02 = g.g02;
    r.g21 = g.g21;
    r.e1 = e1;
    r.e2 = e2;
    r.lambda_prime = lambda_prime(k, omega, tau);
    r.c1 = (kI / (2.0 * th)) * (g.g20 * g.g11 - 2.0 * std::norm(g.g11) -
                                std::norm(g.g02) / 3.0) +
           g.g21 / 2.0;
    r.mu2 = -r.c1.real() / r.lambda_prime.real();
    r.beta2 = 2.0 * r.c1.real();
    r.t2 = -(r.c1.imag() + r.mu2 * r.lambda_prime.imag()) / th;
    return r;
}

}  // namespace respdde
