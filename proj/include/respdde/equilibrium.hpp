#pragma once

namespace respdde {

/// Positive fixed point of the normalized system with a residual certificate.
/// Satisfies x_star = (beta/alpha) y_star.
struct Equilibrium {
    double x_star;
    double y_star;
    double residual;  ///< max abs residual of the two balance equations
};

/// Principal branch W0 of the Lambert W function (w e^w = z), Halley
/// iteration seeded with log1p(z). Valid for z >= -1/e; throws
/// std::domain_error below that.
double lambert_w0(double z);

/// Unique positive equilibrium via the closed form
///   y* = 40 W(e^{5/2} sqrt(alpha/beta^2) / (4 sqrt(14))),  x* = (beta/alpha) y*,
/// followed by one Newton polish on the reduced balance equation.
/// Throws std::invalid_argument for non-positive parameters.
Equilibrium find_equilibrium(double alpha, double beta);

/// Max abs residual of the two equilibrium conditions
///   1 - alpha V(x*, y*) x*  and  1 - beta V(x*, y*) y*.
double verify_equilibrium(const Equilibrium& eq, double alpha, double beta);

}  // namespace respdde
