#include "respdde/integrator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace respdde {

namespace {

struct Deriv {
    double x, y;
};

inline Deriv eval_rhs(double alpha, double beta, double x, double y, double xd, double yd) {
    const double v = ventilation(xd, yd);
    return {1.0 - alpha * v * x, 1.0 - beta * v * y};
}

}  // namespace

Trajectory simulate(const ModelParams& params, const HistorySpec& history, double t_max,
                    double h_target) {
    params.validate();
    if (!(t_max > 0.0)) throw std::invalid_argument("simulate: t_max must be positive");
    if (!(h_target > 0.0)) throw std::invalid_argument("simulate: h_target must be positive");

    const double alpha = params.alpha, beta = params.beta, tau = params.tau;

    Trajectory traj;
    traj.tau = tau;

    if (tau == 0.0) {
        // no history: ordinary RK4, ventilation reads the current state
        const double h = h_target;
        const std::size_t n = static_cast<std::size_t>(std::ceil(t_max / h));
        traj.step = h;
        traj.times.reserve(n + 1);
        traj.xs.reserve(n + 1);
        traj.ys.reserve(n + 1);
        traj.ventilation.reserve(n + 1);
        double x = history.x0, y = history.y0;
        for (std::size_t k = 0; k <= n; ++k) {
            traj.times.push_back(k * h);
            traj.xs.push_back(x);
            traj.ys.push_back(y);
            traj.ventilation.push_back(ventilation(x, y));
            if (k == n) break;
            const Deriv k1 = eval_rhs(alpha, beta, x, y, x, y);
            const double x1 = x + 0.5 * h * k1.x, y1 = y + 0.5 * h * k1.y;
            const Deriv k2 = eval_rhs(alpha, beta, x1, y1, x1, y1);
            const double x2 = x + 0.5 * h * k2.x, y2 = y + 0.5 * h * k2.y;
            const Deriv k3 = eval_rhs(alpha, beta, x2, y2, x2, y2);
            const double x3 = x + h * k3.x, y3 = y + h * k3.y;
            const Deriv k4 = eval_rhs(alpha, beta, x3, y3, x3, y3);
            x += h * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x) / 6.0;
            y += h * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y) / 6.0;
            if (!std::isfinite(x) || !std::isfinite(y))
                throw std::runtime_error("simulate: state not finite at t = " +
                                         std::to_string((k + 1) * h));
        }
        return traj;
    }

    if (h_target > tau)
        throw std::invalid_argument("simulate: h_target must not exceed tau");

    const std::size_t m = static_cast<std::size_t>(std::ceil(tau / h_target));
    const double h = tau / static_cast<double>(m);
    const std::size_t n = static_cast<std::size_t>(std::ceil(t_max / h));

    traj.step = h;
    traj.times.resize(n + 1);
    traj.xs.resize(n + 1);
    traj.ys.resize(n + 1);
    traj.ventilation.resize(n + 1);

    // node derivatives, needed for the Hermite lookups at half steps
    std::vector<double> fx(n + 1), fy(n + 1);

    traj.xs[0] = history.x0;
    traj.ys[0] = history.y0;

    // delayed state at an arbitrary time <= current node; constant history
    // below t = 0, exact samples at nodes, cubic Hermite at the midpoint
    auto delayed_mid = [&](std::ptrdiff_t j) -> State {
        // midpoint of [j, j+1]
        if (j + 1 <= 0) return {history.x0, history.y0};
        double xa, ya, fxa, fya;
        if (j >= 0) {
            xa = traj.xs[j]; ya = traj.ys[j]; fxa = fx[j]; fya = fy[j];
        } else {
            xa = history.x0; ya = history.y0; fxa = 0.0; fya = 0.0;
        }
        const double xb = traj.xs[j + 1], yb = traj.ys[j + 1];
        const double fxb = fx[j + 1], fyb = fy[j + 1];
        return {0.5 * (xa + xb) + h * (fxa - fxb) / 8.0,
                0.5 * (ya + yb) + h * (fya - fyb) / 8.0};
    };
    auto delayed_node = [&](std::ptrdiff_t j) -> State {
        if (j < 0) return {history.x0, history.y0};
        return {traj.xs[j], traj.ys[j]};
    };

    for (std::size_t k = 0; k <= n; ++k) {
        traj.times[k] = static_cast<double>(k) * h;
        const std::ptrdiff_t j = static_cast<std::ptrdiff_t>(k) - static_cast<std::ptrdiff_t>(m);
        const State d0 = delayed_node(j);
        traj.ventilation[k] = ventilation(d0.x, d0.y);

        const double x = traj.xs[k], y = traj.ys[k];
        const Deriv k1 = eval_rhs(alpha, beta, x, y, d0.x, d0.y);
        fx[k] = k1.x;
        fy[k] = k1.y;
        if (k == n) break;

        const State dh = delayed_mid(j);
        const State d1 = delayed_node(j + 1);
        const Deriv k2 = eval_rhs(alpha, beta, x + 0.5 * h * k1.x, y + 0.5 * h * k1.y, dh.x, dh.y);
        const Deriv k3 = eval_rhs(alpha, beta, x + 0.5 * h * k2.x, y + 0.5 * h * k2.y, dh.x, dh.y);
        const Deriv k4 = eval_rhs(alpha, beta, x + h * k3.x, y + h * k3.y, d1.x, d1.y);

        traj.xs[k + 1] = x + h * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x) / 6.0;
        traj.ys[k + 1] = y + h * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y) / 6.0;
        if (!std::isfinite(traj.xs[k + 1]) || !std::isfinite(traj.ys[k + 1]))
            throw std::runtime_error("simulate: state not finite at t = " +
                                     std::to_string((k + 1) * h));
    }
    return traj;
}

OscillationStats oscillation_stats(const Trajectory& traj, double window_fraction) {
    if (!(window_fraction > 0.0) || window_fraction > 1.0)
        throw std::invalid_argument("oscillation_stats: window_fraction must be in (0, 1]");
    const std::size_t n = traj.xs.size();
    const std::size_t start = static_cast<std::size_t>(std::floor(n * (1.0 - window_fraction)));
    if (n - start < 10)
        throw std::invalid_argument("oscillation_stats: window shorter than 10 samples");

    OscillationStats st;
    double xmin = traj.xs[start], xmax = traj.xs[start];
    double ymin = traj.ys[start], ymax = traj.ys[start];
    for (std::size_t k = start; k < n; ++k) {
        xmin = std::min(xmin, traj.xs[k]);
        xmax = std::max(xmax, traj.xs[k]);
        ymin = std::min(ymin, traj.ys[k]);
        ymax = std::max(ymax, traj.ys[k]);
    }
    st.amplitude_x = xmax - xmin;
    st.amplitude_y = ymax - ymin;
    st.converged = st.amplitude_x < kSettleThreshold;

    // period: mean spacing between successive maxima of x
    std::vector<double> maxima_t;
    for (std::size_t k = start + 1; k + 1 < n; ++k) {
        const double d0 = traj.xs[k] - traj.xs[k - 1];
        const double d1 = traj.xs[k + 1] - traj.xs[k];
        if (d0 > 0.0 && d1 <= 0.0) maxima_t.push_back(traj.times[k]);
    }
    if (maxima_t.size() >= 2)
        st.period = (maxima_t.back() - maxima_t.front()) / static_cast<double>(maxima_t.size() - 1);
    return st;
}

}  // namespace respdde
