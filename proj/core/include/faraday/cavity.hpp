#pragma once

#include <array>
#include <complex>

#include "faraday/state.hpp"

namespace faraday {

// Physical cavity parameters. kappa is the unit scale: all frequencies are
// dimensionless multiples of the cavity damping rate.
struct CavityParams {
    double omega_c = 0.0;  // cavity mode frequency
    double omega_0 = 0.0;  // atomic transition frequency
    double omega_p = 0.0;  // probe photon frequency
    double kappa = 1.0;    // cavity damping rate, > 0
    double gamma = 0.0;    // atomic decay rate, >= 0
    double g = 0.0;        // atom-cavity coupling, >= 0

    // Throws InvalidParams naming the violated invariant.
    void validate() const;

    // The point realizing (phi, phi0) = (pi, pi/2):
    // omega_0 = omega_c, omega_p = omega_c - kappa/2, g = kappa/2, gamma = 0.
    static CavityParams canonical();
};

// Complex reflection coefficient of the atom-cavity system,
//
//   r(w_p) = { [i(w_c-w_p) - k/2][i(w_0-w_p) + y/2] + g^2 }
//          / { [i(w_c-w_p) + k/2][i(w_0-w_p) + y/2] + g^2 }.
//
// |r| <= 1 always, with |r| = 1 exactly when gamma = 0. Throws
// SingularDenominator when the denominator vanishes (needs gamma = 0).
std::complex<double> reflection_coefficient(const CavityParams& p);

// Empty-cavity (g = 0) reflection coefficient; |r0| = 1 for all valid params.
std::complex<double> empty_reflection(const CavityParams& p);

// Map an angle into (-pi, pi], with -pi rewritten as +pi so that phi = pi
// is representable and stable.
double canonical_angle(double a);

// The derived quadruple that fully determines the scattering map.
struct PhasePair {
    double phi;     // arg r, in (-pi, pi]
    double phi0;    // arg r0
    double mag_r;   // |r|, in [0, 1]
    double mag_r0;  // |r0|, identically 1 up to rounding
};

PhasePair phase_shifts(const CavityParams& p);

// The working point (pi, pi/2) with unit magnitudes.
PhasePair ideal_phases();

struct FaradayAngles {
    double theta_minus;  // (phi0 - phi)/2, rotation for an atom in |0>
    double theta_plus;   // (phi - phi0)/2, rotation for an atom in |1>
};

FaradayAngles faraday_angles(const PhasePair& pp);

// Diagonal of the conditional (atom, photon) scattering map, indexed
// (0,L), (0,R), (1,L), (1,R). An atom in |0> couples the L photon to the
// dressed cavity (phase phi) and reflects R off the empty cavity (phase
// phi0); an atom in |1> swaps the roles. Lossy mode attaches |r|, |r0|.
std::array<cplx, 4> scattering_map(const PhasePair& pp, bool lossy = false);

}  // namespace faraday
