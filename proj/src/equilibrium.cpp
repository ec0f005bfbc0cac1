#include "respdde/equilibrium.hpp"

#include <cmath>
#include <stdexcept>

#include "respdde/model.hpp"

namespace respdde {

double lambert_w0(double z) {
    const double min_arg = -std::exp(-1.0);
    if (z < min_arg * (1.0 + 1e-14) - 1e-300)
        throw std::domain_error("lambert_w0: argument below -1/e");
    if (z == 0.0) return 0.0;

    // seed: log1p(z) is within a few percent on [0, inf); for the small
    // negative tail the identity W(z) ~ z suffices as a Newton basin
    double w = (z > 0.0) ? std::log1p(z) : z;
    for (int it = 0; it < 50; ++it) {
        const double ew = std::exp(w);
        const double f = w * ew - z;
        // Halley update
        const double denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
        const double step = f / denom;
        w -= step;
        if (std::abs(step) <= 1e-14 * std::max(1.0, std::abs(w))) break;
    }
    return w;
}

namespace {

// Reduced scalar balance equation in y (x eliminated via x = (beta/alpha) y):
//   r(y) = 1 - 0.14 (beta^2/alpha) e^{(y-100)/20} y^2
double reduced_residual(double y, double alpha, double beta) {
    return 1.0 - (14.0 / 100.0) * (beta * beta / alpha) * std::exp((y - 100.0) / 20.0) * y * y;
}

double reduced_derivative(double y, double alpha, double beta) {
    const double e = (14.0 / 100.0) * (beta * beta / alpha) * std::exp((y - 100.0) / 20.0);
    return -e * (2.0 * y + y * y / 20.0);
}

}  // namespace

Equilibrium find_equilibrium(double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("find_equilibrium: parameters must be positive");

    const double arg = std::exp(2.5) * std::sqrt(alpha / (beta * beta)) / (4.0 * std::sqrt(14.0));
    double y = 40.0 * lambert_w0(arg);
    // one Newton polish decouples the final accuracy from W's tolerance
    y -= reduced_residual(y, alpha, beta) / reduced_derivative(y, alpha, beta);

    Equilibrium eq{(beta / alpha) * y, y, 0.0};
    eq.residual = verify_equilibrium(eq, alpha, beta);
    return eq;
}

double verify_equilibrium(const Equilibrium& eq, double alpha, double beta) {
    const double v = ventilation(eq.x_star, eq.y_star);
    const double r1 = 1.0 - alpha * v * eq.x_star;
    const double r2 = 1.0 - beta * v * eq.y_star;
    return std::max(std::abs(r1), std::abs(r2));
}

}  // namespace respdde
