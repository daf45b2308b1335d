#include "platelab/profiles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace platelab {

const char* profile_name(ProfileKind k) {
    switch (k) {
        case ProfileKind::WaveLike: return "wave";
        case ProfileKind::HeatLike: return "heat";
        case ProfileKind::Combined: default: return "combined";
    }
}

double wave_profile(double t, double r, const DataPair& p) {
    if (!(t > 0.0))
        throw std::invalid_argument("wave profile needs t > 0");
    if (!(r >= 0.0)) throw std::invalid_argument("radius must be >= 0");
    if (r == 0.0) return 0.0;
    double x = t / (2.0 * r * r);
    if (x > 745.0) return 0.0; // e^{-x} underflows; avoid denormal noise
    return std::exp(-x) * (p.u1.uhat(r) * std::sin(t * r) / r +
                           p.u0.uhat(r) * std::cos(t * r));
}

double heat_profile(double t, double r, const DataPair& p) {
    if (!(t >= 0.0))
        throw std::invalid_argument("heat profile needs t >= 0");
    if (!(r >= 0.0)) throw std::invalid_argument("radius must be >= 0");
    return (p.u0.uhat(r) + p.u1.uhat(r)) * std::exp(-t * r * r);
}

double combined_profile(double t, double r, const DataPair& p) {
    return wave_profile(t, r, p) + heat_profile(t, r, p);
}

double profile_value(ProfileKind k, double t, double r, const DataPair& p) {
    switch (k) {
        case ProfileKind::WaveLike: return wave_profile(t, r, p);
        case ProfileKind::HeatLike: return heat_profile(t, r, p);
        case ProfileKind::Combined: default: return combined_profile(t, r, p);
    }
}

double heat_l2_norm(double t, const DataPair& p) {
    if (!(t > 0.0))
        throw std::invalid_argument("heat norm closed form needs t > 0");
    double P = std::abs(p.u0.moment + p.u1.moment);
    return P * std::pow(std::numbers::pi / (2.0 * t), 0.25 * p.dim);
}

} // namespace platelab
