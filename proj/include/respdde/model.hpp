#pragma once

#include <utility>

namespace respdde {

/// Raw (physiological) parameters of the gas-exchange balance equations.
/// Only used by the raw<->normalized coordinate transform; all analysis
/// runs in normalized coordinates.
struct RawParams {
    double p = 1.0;             ///< CO2 production rate, > 0
    double sigma = 1.0;         ///< O2 consumption rate, > 0
    double x_inspired = 0.0;    ///< inspired CO2 concentration, >= 0
    double y_inspired = 100.0;  ///< inspired O2 concentration, > 0
    double alpha = 0.5;         ///< CO2 diffusibility, > 0
    double beta = 0.8;          ///< O2 diffusibility, > 0
    double tau = 0.0;           ///< transport delay, >= 0

    void validate() const;  // throws std::invalid_argument
};

/// Normalized model parameters. The time/state scalings a = 1/p, b = 1/sigma
/// are fixed by construction, so only these three survive.
struct ModelParams {
    double alpha;
    double beta;
    double tau;

    void validate() const;
};

/// Normalized state: x ~ CO2 concentration, y ~ O2 deficit.
struct State {
    double x;
    double y;
};

/// Ventilation response to the delayed state:
///   V(x, y) = 0.14 e^{-0.05 (100 - y)} x.
/// Total on the reals; V(0, .) = 0 and V is increasing in both arguments
/// for x > 0.
double ventilation(double x_del, double y_del);

/// Right-hand side of the normalized system,
///   x' = 1 - alpha V(x_tau, y_tau) x,
///   y' = 1 - beta  V(x_tau, y_tau) y,
/// with `delayed` standing for the state at t - tau.
State rhs(const State& current, const State& delayed, const ModelParams& params);

/// Raw -> normalized: x = (x_raw - x_I) / p, y = (y_I - y_raw) / sigma.
State normalize(double x_raw, double y_raw, const RawParams& raw);

/// Normalized -> raw; exact inverse of normalize.
std::pair<double, double> denormalize(const State& s, const RawParams& raw);

}  // namespace respdde
