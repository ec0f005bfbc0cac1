#pragma once

#include <string>
#include <vector>

#include "respdde/integrator.hpp"
#include "respdde/spectrum.hpp"

namespace respdde {

/// Per-delay trailing-window extrema of the simulated system. A delay whose
/// trajectory settled (no strict local extremum left in the window) records
/// the final value, which then clusters at the equilibrium.
struct BifurcationDiagram {
    std::vector<double> taus;
    std::vector<std::vector<double>> extrema_x;  ///< per-tau local max/min values
    std::vector<std::vector<double>> extrema_y;
    std::vector<double> spread_x;       ///< trailing-window max - min of x
    std::vector<double> spread_prev_x;  ///< same over the preceding window
    std::vector<std::string> failures;  ///< reason per tau; empty string = ok
};

struct CurvePoint {
    double param;
    Branch branch;
    int n;
    double tau;
};

/// One-parameter family of critical curves (solid: crossings; dashed minus
/// branch: companion curves) over a grid of the varying parameter.
struct CurveFamily {
    bool alpha_fixed;    ///< true: alpha held, beta varies; false: converse
    double fixed_value;
    std::vector<CurvePoint> points;
    std::vector<std::string> failures;
};

/// Grid of the minimal critical delay tau*(0) over the (alpha, beta) plane;
/// the stable region is 0 <= tau < surface(alpha, beta).
struct StabilitySurface {
    std::vector<double> alphas;
    std::vector<double> betas;
    std::vector<double> tau_star;  ///< row-major, index = ia * betas.size() + ib
    std::vector<std::string> failures;
};

struct TableRow {
    double alpha, beta, tau;
    double max_re;
    bool ok;
    std::string error;
};

inline constexpr double kScanTMax = 20000.0;
inline constexpr double kScanTMaxFast = 5000.0;

/// Simulates each delay with the standard history (35.5, 26.5) and collects
/// trailing-quarter local extrema. Per-tau failures are recorded, the scan
/// continues. Grid points run in parallel (RESP_DDE_THREADS caps the pool,
/// 0 or unset = hardware concurrency); output order is by grid index.
BifurcationDiagram bifurcation_diagram(double alpha, double beta, double tau_from, double tau_to,
                                       double tau_step, double t_max,
                                       double h_target = kDefaultStep);

/// First tau whose trailing spread exceeds `threshold`.
/// Returns NaN when none does.
double onset_tau(const BifurcationDiagram& d, double threshold = 0.1);

/// First tau whose trailing spread exceeds `threshold` AND has not decayed
/// below `sustain` times the preceding window's spread; discriminates
/// sustained oscillation from a transient that merely has not died out yet.
double onset_tau_sustained(const BifurcationDiagram& d, double threshold = 0.1,
                           double sustain = 0.9);

CurveFamily critical_curve_family(bool fix_alpha, double fixed_value, double vary_from,
                                  double vary_to, int grid_n, int n_max);

StabilitySurface stability_surface(double alpha_from, double alpha_to, double beta_from,
                                   double beta_to, int grid_n);

/// Cross product of the three lists, evaluated through spectrum::max_real_part.
std::vector<TableRow> max_real_part_table(const std::vector<double>& alphas,
                                          const std::vector<double>& betas,
                                          const std::vector<double>& taus);

/// Worker count honoring RESP_DDE_THREADS (0 or unset = auto).
unsigned scan_thread_count();

}  // namespace respdde
