#pragma once

#include <optional>
#include <vector>

#include "respdde/model.hpp"

namespace respdde {

/// Constant initial history on [-tau, 0].
struct HistorySpec {
    double x0;
    double y0;
};

/// Uniform-grid trajectory of the delayed system. times[k] = k * step and
/// tau / step is an integer, so delayed samples at full steps are exact.
struct Trajectory {
    std::vector<double> times;
    std::vector<double> xs;
    std::vector<double> ys;
    std::vector<double> ventilation;  ///< V(x(t - tau), y(t - tau)) per node
    double step = 0.0;
    double tau = 0.0;
};

struct OscillationStats {
    double amplitude_x = 0.0;  ///< max - min of x over the analysis window
    double amplitude_y = 0.0;
    std::optional<double> period;  ///< mean spacing of successive x maxima
    bool converged = false;        ///< amplitude_x below the settle threshold
};

inline constexpr double kDefaultStep = 0.05;
inline constexpr double kSettleThreshold = 1e-3;

/// Method of steps with classic RK4. The step is h = tau / ceil(tau / h_target)
/// so the delay lands exactly on the grid; half-step stage lookups use cubic
/// Hermite interpolation between stored nodes. Derivative jumps at t = k tau
/// from the constant history land on grid nodes by construction. For tau = 0
/// this degenerates to plain RK4 with the delayed state read at current time.
/// Throws std::invalid_argument on bad step configuration and
/// std::runtime_error when the state stops being finite.
Trajectory simulate(const ModelParams& params, const HistorySpec& history, double t_max,
                    double h_target = kDefaultStep);

/// Amplitude and period estimates over the trailing window_fraction of the
/// trajectory. Local maxima are detected as sign changes of the forward
/// difference. Throws std::invalid_argument when the window is shorter than
/// 10 samples.
OscillationStats oscillation_stats(const Trajectory& traj, double window_fraction = 0.25);

}  // namespace respdde
