#include "faraday/cavity.hpp"

#include <cmath>
#include <numbers>

namespace faraday {

namespace {

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw InvalidParams(std::string(name) + " must be finite");
    }
}

}  // namespace

void CavityParams::validate() const {
    require_finite(omega_c, "omega_c");
    require_finite(omega_0, "omega_0");
    require_finite(omega_p, "omega_p");
    require_finite(kappa, "kappa");
    require_finite(gamma, "gamma");
    require_finite(g, "g");
    if (!(kappa > 0.0)) throw InvalidParams("kappa must be > 0");
    if (gamma < 0.0) throw InvalidParams("gamma must be >= 0");
    if (g < 0.0) throw InvalidParams("g must be >= 0");
}

CavityParams CavityParams::canonical() {
    CavityParams p;
    p.omega_c = 0.0;
    p.omega_0 = 0.0;
    p.omega_p = -0.5;
    p.kappa = 1.0;
    p.gamma = 0.0;
    p.g = 0.5;
    return p;
}

std::complex<double> reflection_coefficient(const CavityParams& p) {
    p.validate();
    const cplx dc(0.0, p.omega_c - p.omega_p);
    const cplx d0(0.0, p.omega_0 - p.omega_p);
    const cplx atom = d0 + p.gamma / 2.0;
    const cplx num = (dc - p.kappa / 2.0) * atom + p.g * p.g;
    const cplx den = (dc + p.kappa / 2.0) * atom + p.g * p.g;
    if (std::abs(den) == 0.0) {
        throw SingularDenominator("reflection denominator vanished");
    }
    return num / den;
}

std::complex<double> empty_reflection(const CavityParams& p) {
    p.validate();
    const cplx dc(0.0, p.omega_c - p.omega_p);
    // Denominator zero would need omega_c = omega_p and kappa = 0, which the
    // invariants exclude.
    return (dc - p.kappa / 2.0) / (dc + p.kappa / 2.0);
}

double canonical_angle(double a) {
    const double pi = std::numbers::pi;
    double r = std::remainder(a, 2.0 * pi);  // in [-pi, pi]
    if (r <= -pi) r = pi;
    return r;
}

PhasePair phase_shifts(const CavityParams& p) {
    const cplx r = reflection_coefficient(p);
    const cplx r0 = empty_reflection(p);
    return PhasePair{canonical_angle(std::arg(r)), canonical_angle(std::arg(r0)),
                     std::abs(r), std::abs(r0)};
}

PhasePair ideal_phases() {
    return PhasePair{std::numbers::pi, std::numbers::pi / 2.0, 1.0, 1.0};
}

FaradayAngles faraday_angles(const PhasePair& pp) {
    const double half = (pp.phi - pp.phi0) / 2.0;
    return FaradayAngles{-half, half};
}

std::array<cplx, 4> scattering_map(const PhasePair& pp, bool lossy) {
    const cplx coupled = std::polar(lossy ? pp.mag_r : 1.0, pp.phi);
    const cplx empty = std::polar(lossy ? pp.mag_r0 : 1.0, pp.phi0);
    return {coupled, empty, empty, coupled};
}

}  // namespace faraday
