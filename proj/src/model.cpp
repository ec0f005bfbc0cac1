#include "respdde/model.hpp"

#include <cmath>
#include <stdexcept>

namespace respdde {

// Exact-fraction constants of the ventilation law.
namespace {
constexpr double kVentGain = 14.0 / 100.0;
constexpr double kVentRate = 5.0 / 100.0;
}  // namespace

void RawParams::validate() const {
    if (!(p > 0.0) || !(sigma > 0.0))
        throw std::invalid_argument("RawParams: production/consumption rates must be positive");
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("RawParams: diffusibilities must be positive");
    if (!(x_inspired >= 0.0) || !(y_inspired > 0.0))
        throw std::invalid_argument("RawParams: inspired concentrations out of range");
    if (!(tau >= 0.0))
        throw std::invalid_argument("RawParams: delay must be nonnegative");
}

void ModelParams::validate() const {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("ModelParams: diffusibilities must be positive");
    if (!(tau >= 0.0))
        throw std::invalid_argument("ModelParams: delay must be nonnegative");
}

double ventilation(double x_del, double y_del) {
    return kVentGain * std::exp(-kVentRate * (100.0 - y_del)) * x_del;
}

State rhs(const State& current, const State& delayed, const ModelParams& params) {
    const double v = ventilation(delayed.x, delayed.y);
    return {1.0 - params.alpha * v * current.x,
            1.0 - params.beta * v * current.y};
}

State normalize(double x_raw, double y_raw, const RawParams& raw) {
    return {(x_raw - raw.x_inspired) / raw.p,
            (raw.y_inspired - y_raw) / raw.sigma};
}

std::pair<double, double> denormalize(const State& s, const RawParams& raw) {
    return {raw.x_inspired + raw.p * s.x,
            raw.y_inspired - raw.sigma * s.y};
}

}  // namespace respdde
