#include "respdde/scan.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <thread>

namespace respdde {

unsigned scan_thread_count() {
    unsigned n = 0;
    if (const char* env = std::getenv("RESP_DDE_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) n = static_cast<unsigned>(v);
    }
    if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
    return n;
}

namespace {

// Runs fn(i) for i in [0, n) on the scan pool; results must be written into
// index-addressed slots so the output order is independent of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const unsigned workers = std::min<std::size_t>(scan_thread_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

std::vector<double> grid_values(double from, double to, double step) {
    std::vector<double> v;
    const auto count = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9));
    v.reserve(count + 1);
    for (std::size_t i = 0; i <= count; ++i) v.push_back(from + static_cast<double>(i) * step);
    return v;
}

double window_spread(const std::vector<double>& xs, std::size_t lo, std::size_t hi) {
    double mn = xs[lo], mx = xs[lo];
    for (std::size_t k = lo; k < hi; ++k) {
        mn = std::min(mn, xs[k]);
        mx = std::max(mx, xs[k]);
    }
    return mx - mn;
}

// strict local extrema (both maxima and minima) over [lo, hi)
std::vector<double> local_extrema(const std::vector<double>& xs, std::size_t lo, std::size_t hi) {
    std::vector<double> out;
    for (std::size_t k = lo + 1; k + 1 < hi; ++k) {
        const double d0 = xs[k] - xs[k - 1];
        const double d1 = xs[k + 1] - xs[k];
        if ((d0 > 0.0 && d1 <= 0.0) || (d0 < 0.0 && d1 >= 0.0)) out.push_back(xs[k]);
    }
    if (out.empty()) out.push_back(xs[hi - 1]);  // settled: report the final value
    return out;
}

}  // namespace

BifurcationDiagram bifurcation_diagram(double alpha, double beta, double tau_from, double tau_to,
                                       double tau_step, double t_max, double h_target) {
    if (!(tau_from >= 0.0) || !(tau_from < tau_to) || !(tau_step > 0.0))
        throw std::invalid_argument("bifurcation_diagram: bad tau range");

    BifurcationDiagram d;
    d.taus = grid_values(tau_from, tau_to, tau_step);
    const std::size_t n = d.taus.size();
    d.extrema_x.resize(n);
    d.extrema_y.resize(n);
    d.spread_x.assign(n, 0.0);
    d.spread_prev_x.assign(n, 0.0);
    d.failures.assign(n, "");

    parallel_for(n, [&](std::size_t i) {
        try {
            const ModelParams p{alpha, beta, d.taus[i]};
            const Trajectory traj = simulate(p, {35.5, 26.5}, t_max, h_target);
            const std::size_t len = traj.xs.size();
            const std::size_t q3 = len - len / 4;     // trailing quarter
            const std::size_t q2 = len - len / 2;     // preceding quarter
            d.extrema_x[i] = local_extrema(traj.xs, q3, len);
            d.extrema_y[i] = local_extrema(traj.ys, q3, len);
            d.spread_x[i] = window_spread(traj.xs, q3, len);
            d.spread_prev_x[i] = window_spread(traj.xs, q2, q3);
        } catch (const std::exception& e) {
            d.failures[i] = e.what();
        }
    });
    return d;
}

double onset_tau(const BifurcationDiagram& d, double threshold) {
    for (std::size_t i = 0; i < d.taus.size(); ++i)
        if (d.failures[i].empty() && d.spread_x[i] > threshold) return d.taus[i];
    return std::numeric_limits<double>::quiet_NaN();
}

double onset_tau_sustained(const BifurcationDiagram& d, double threshold, double sustain) {
    for (std::size_t i = 0; i < d.taus.size(); ++i) {
        if (!d.failures[i].empty()) continue;
        if (d.spread_x[i] > threshold && d.spread_x[i] >= sustain * d.spread_prev_x[i])
            return d.taus[i];
    }
    return std::numeric_limits<double>::quiet_NaN();
}

CurveFamily critical_curve_family(bool fix_alpha, double fixed_value, double vary_from,
                                  double vary_to, int grid_n, int n_max) {
    if (!(vary_from > 0.0) || !(vary_from < vary_to) || grid_n < 2)
        throw std::invalid_argument("critical_curve_family: bad parameter range");

    CurveFamily fam;
    fam.alpha_fixed = fix_alpha;
    fam.fixed_value = fixed_value;
    fam.failures.assign(static_cast<std::size_t>(grid_n), "");

    std::vector<std::vector<CurvePoint>> per_point(grid_n);
    parallel_for(static_cast<std::size_t>(grid_n), [&](std::size_t i) {
        const double p =
            vary_from + (vary_to - vary_from) * static_cast<double>(i) / (grid_n - 1);
        const double alpha = fix_alpha ? fixed_value : p;
        const double beta = fix_alpha ? p : fixed_value;
        try {
            const Equilibrium eq = find_equilibrium(alpha, beta);
            const CharCoefficients k = char_coeffs(alpha, beta, eq);
            const CrossingSet cs = critical_delays(k, n_max);
            for (const CrossingEntry& e : cs.tau_branches)
                per_point[i].push_back({p, Branch::plus, e.n, e.tau});
            for (int nn = 0; nn < n_max; ++nn)
                per_point[i].push_back({p, Branch::minus, nn, companion_delay(k, nn)});
        } catch (const std::exception& e) {
            fam.failures[i] = e.what();
        }
    });
    for (auto& pts : per_point)
        fam.points.insert(fam.points.end(), pts.begin(), pts.end());
    return fam;
}

StabilitySurface stability_surface(double alpha_from, double alpha_to, double beta_from,
                                   double beta_to, int grid_n) {
    if (!(alpha_from > 0.0) || !(beta_from > 0.0) || grid_n < 2)
        throw std::invalid_argument("stability_surface: bad parameter range");

    StabilitySurface s;
    for (int i = 0; i < grid_n; ++i) {
        s.alphas.push_back(alpha_from + (alpha_to - alpha_from) * i / (grid_n - 1));
        s.betas.push_back(beta_from + (beta_to - beta_from) * i / (grid_n - 1));
    }
    const std::size_t total = s.alphas.size() * s.betas.size();
    s.tau_star.assign(total, std::numeric_limits<double>::quiet_NaN());
    s.failures.assign(total, "");

    parallel_for(total, [&](std::size_t idx) {
        const double alpha = s.alphas[idx / s.betas.size()];
        const double beta = s.betas[idx % s.betas.size()];
        try {
            const Equilibrium eq = find_equilibrium(alpha, beta);
            const CharCoefficients k = char_coeffs(alpha, beta, eq);
            s.tau_star[idx] = critical_delays(k, 0).tau_branches.front().tau;
        } catch (const std::exception& e) {
            s.failures[idx] = e.what();
        }
    });
    return s;
}

std::vector<TableRow> max_real_part_table(const std::vector<double>& alphas,
                                          const std::vector<double>& betas,
                                          const std::vector<double>& taus) {
    if (alphas.empty() || betas.empty() || taus.empty())
        throw std::invalid_argument("max_real_part_table: empty input list");

    std::vector<TableRow> rows(alphas.size() * betas.size() * taus.size());
    parallel_for(rows.size(), [&](std::size_t idx) {
        const std::size_t ia = idx / (betas.size() * taus.size());
        const std::size_t ib = (idx / taus.size()) % betas.size();
        const std::size_t it = idx % taus.size();
        TableRow& r = rows[idx];
        r.alpha = alphas[ia];
        r.beta = betas[ib];
        r.tau = taus[it];
        try {
            r.max_re = max_real_part(r.alpha, r.beta, r.tau);
            r.ok = true;
        } catch (const std::exception& e) {
            r.max_re = std::numeric_limits<double>::quiet_NaN();
            r.ok = false;
            r.error = e.what();
        }
    });
    return rows;
}

}  // namespace respdde
