#pragma once

#include <array>
#include <complex>

#include "respdde/equilibrium.hpp"
#include "respdde/spectrum.hpp"

namespace respdde {

using Vec2c = std::array<complexd, 2>;

/// Normal-form quantities of the Hopf bifurcation at a crossing (omega*, tau*).
/// beta2 = 2 Re c1 decides orbital stability (< 0: stable), mu2 the direction
/// (> 0: supercritical), T2 the period correction.
struct HopfResult {
    double omega_star = 0.0;
    double tau_star = 0.0;
    complexd c;             ///< second component of the right eigenvector (1, c)
    complexd c_star;        ///< second component of the adjoint eigenvector (1, c*)
    complexd normalizer;    ///< Dbar making <q*, q> = 1
    complexd g20, g11, g02, g21;
    Vec2c e1{}, e2{};
    complexd lambda_prime;  ///< d lambda/d tau at tau*, from the reciprocal formula
    complexd c1;            ///< first Lyapunov coefficient c1(0)
    double mu2 = 0.0;
    double beta2 = 0.0;
    double t2 = 0.0;
};

/// Fixed eigen-data of one crossing, shared by the downstream center-manifold
/// steps. Delay is rescaled to 1, so all exponentials use theta = omega * tau.
struct HopfContext {
    double alpha, beta;
    Equilibrium eq;
    double omega, tau;
    complexd c, c_star, normalizer;
};

/// Right and adjoint eigenvector components at a crossing pair. The right
/// system is (i omega I + A1 + B1 e^{-i omega tau}) (1, c)^T = 0; the adjoint
/// is the left null vector of its conjugate. Throws std::invalid_argument if
/// (omega, tau) is not a crossing (|Delta(i omega, tau)| >= 1e-8).
std::pair<complexd, complexd> eigenvectors(double alpha, double beta, const Equilibrium& eq,
                                           double omega, double tau);

/// Dbar such that the bilinear form <q*, q> equals 1. Throws
/// std::runtime_error when the denominator is degenerate.
complexd normalizer(complexd c, complexd c_star, const Equilibrium& eq, double alpha,
                    double beta, double omega, double tau);

/// Bilinear pairing <q*, phi> for an exponential segment phi(theta) =
/// phi0 e^{mu_phi theta}, evaluated with the point-mass eta of the linear
/// operator. Used to check <q*, q> = 1 and <q*, qbar> = 0.
complexd bilinear_with_adjoint(const HopfContext& ctx, const Vec2c& phi0, complexd mu_phi);

/// Constant vectors of the second-order center-manifold terms: E1 solves the
/// 2 i omega system, E2 the real zero-frequency system. Throws
/// std::runtime_error (with a condition estimate) on a singular matrix.
std::pair<Vec2c, Vec2c> e_vectors(double alpha, double beta, const Equilibrium& eq,
                                  double omega, double tau, complexd c);

/// W20 / W11 evaluated at theta (in [-1, 0]) from their exponential expansions.
Vec2c w20_at(const HopfContext& ctx, complexd g20, complexd g02, const Vec2c& e1, double theta);
Vec2c w11_at(const HopfContext& ctx, complexd g11, const Vec2c& e2, double theta);

struct GCoefficients {
    complexd g20, g11, g02, g21;
};

/// The four g coefficients; g20/g11/g02 depend only on the eigen-data, g21
/// additionally on W20, W11 at theta in {0, -1}.
GCoefficients g_coefficients(const HopfContext& ctx, const Vec2c& w20_0, const Vec2c& w20_m1,
                             const Vec2c& w11_0, const Vec2c& w11_m1);

/// Full pipeline at the n = 0 crossing: equilibrium -> crossing -> eigen-data
/// -> E vectors -> W terms -> g coefficients -> c1(0), mu2, beta2, T2.
HopfResult hopf_quantities(double alpha, double beta);

}  // namespace respdde
