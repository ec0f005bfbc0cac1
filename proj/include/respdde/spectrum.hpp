#pragma once

#include <complex>
#include <vector>

#include "respdde/equilibrium.hpp"

namespace respdde {

using complexd = std::complex<double>;

/// Linearization at the equilibrium, written as
///   d/dt (u, v)^T + A1 (u, v)^T + B1 (u_tau, v_tau)^T = 0.
/// A1 is diagonal; B1 has rank one (both rows are multiples of (V_x, V_y)).
struct LinearPair {
    double a1[2][2];
    double b1[2][2];
};

/// Coefficients of the characteristic quasi-polynomial
///   Delta(lambda, tau) = lambda^2 + (A + B e^{-lambda tau}) lambda
///                      + (C + D e^{-lambda tau}),
/// plus the derived M = -A^2 + B^2 + 2C and N = -C^2 + D^2 (> 0 always).
struct CharCoefficients {
    double A, B, C, D;
    double M, N;
};

enum class Branch { plus, minus };

struct CrossingEntry {
    Branch branch;
    int n;
    double tau;
};

/// Imaginary-axis crossings: the unique positive crossing frequency and the
/// delays at which lambda = i omega_star is a root. All entries returned by
/// critical_delays are genuine crossings (plus branch); the minus label
/// exists for the companion curve family drawn in stability charts.
struct CrossingSet {
    double omega_star;
    std::vector<CrossingEntry> tau_branches;
};

struct SpectrumResult {
    std::vector<complexd> roots;     ///< conjugate-closed, sorted by Re desc
    double max_real;
    std::vector<double> residuals;   ///< |Delta| per root
};

/// Tolerances and search window of the characteristic root finder.
struct RootOptions {
    double newton_tol = 1e-12;   ///< Newton target on |Delta|
    double accept_tol = 1e-10;   ///< acceptance bound on |Delta|
    double dedupe_tol = 1e-8;    ///< min pairwise distance between roots
    int max_iter = 100;
    int grid_re = 24;
    int grid_im = 24;
    double re_lo = -2.0;
    double re_hi = 0.5;
    double im_mult = 4.0;        ///< imaginary window = im_mult * omega_star
};

LinearPair linearize(double alpha, double beta, const Equilibrium& eq);

CharCoefficients char_coeffs(double alpha, double beta, const Equilibrium& eq);

complexd char_value(complexd lambda, double tau, const CharCoefficients& k);

/// d Delta / d lambda, used by the Newton refinement.
complexd char_deriv(complexd lambda, double tau, const CharCoefficients& k);

/// Unique positive root of Phi(Y) = -Y^2 + M Y + N, returned as omega = sqrt(Y).
double crossing_frequency(const CharCoefficients& k);

/// Crossing delays tau(n) = (theta + 2 pi n)/omega for n = 0..n_max, where
/// theta in [0, 2 pi) solves the sin/cos system of the crossing equations.
CrossingSet critical_delays(const CharCoefficients& k, int n_max);

/// Companion delay of the crossing family for index n >= 0:
/// (2 pi (n+1) - theta)/omega. These are the dashed curves of the stability
/// charts; they are not roots of Delta.
double companion_delay(const CharCoefficients& k, int n);

/// Re[(d lambda/d tau)^{-1}] at lambda = i omega on a critical curve:
///   (N + omega^4) / (omega^2 (B^2 omega^2 + D^2)),
/// strictly positive, and of the same sign as Re(d lambda/d tau).
double transversality(const CharCoefficients& k, double omega);

/// Full complex derivative d lambda/d tau at lambda = i omega, tau given,
/// from the reciprocal formula (no numerical differentiation).
complexd lambda_prime(const CharCoefficients& k, double omega, double tau);

/// Characteristic roots near the imaginary axis: seeds from a rectangular
/// grid plus the tau = 0 quadratic pair continued in tau, Newton-refined,
/// deduplicated and conjugate-closed. The real-axis window is widened until
/// the rightmost root is stable under two successive widenings; the
/// imaginary window grows until `count` roots are found.
/// Throws std::runtime_error if no root survives refinement.
SpectrumResult characteristic_roots(double alpha, double beta, double tau, int count,
                                    const RootOptions& opt = {});

double max_real_part(double alpha, double beta, double tau);

/// Cooke-Turi dichotomy. With this ventilation law x* V_x = V at the
/// equilibrium, so V* < x* V_x* + y* V_y* always holds and the finite
/// critical delay branch is always taken; the test is kept explicit anyway.
struct CookeResult {
    bool delay_independent;  ///< true: stable for every delay
    double tau_star;         ///< smallest critical delay (NaN when independent)
};

CookeResult cooke_dichotomy(double alpha, double beta);

}  // namespace respdde
