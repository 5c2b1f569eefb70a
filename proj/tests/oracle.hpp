// Test-only oracle: literal transcriptions of the closed-form intermediate
// states of both protocols, built with an independent Kronecker / index
// routine that shares no code with the library under test. Register
// conventions are declared here once: big-endian bit packing, photon
// L -> 0, R -> 1.
//
// Case 1 states live on (A, B, C, photon); case 2 on (A, B, C, D, photon).
#pragma once

#include <complex>
#include <vector>

namespace oracle {

using cvec = std::vector<std::complex<double>>;

// Independent Kronecker product of two dense vectors.
cvec kron(const cvec& a, const cvec& b);

// |<a|b>|^2 / (|a|^2 |b|^2), the oracle's own phase-invariant overlap.
double overlap_fidelity(const cvec& a, const cvec& b);

// Scattered single-photon pulses for an atom held in |0> / in |1>,
// on register (atom, photon).
cvec out_minus(double phi, double phi0);  // atom |0>: (e^{i phi}|L> + e^{i phi0}|R>)/sqrt2
cvec out_plus(double phi, double phi0);   // atom |1>: (e^{i phi0}|L> + e^{i phi}|R>)/sqrt2

// Prepared atom-photon pair (|0>|eta_-> + |1>|eta_+>)/sqrt2 on (C, photon).
cvec prepared_pair(double phi, double phi0);

// Case-1 joint states on (A, B, C, photon).
cvec case1_after_scatter(double phi, double phi0);  // general phases
cvec case1_premeasure_ideal();                      // phases (pi, pi/2)

// Case-2 joint states on (A, B, C, D, photon).
cvec case2_after_first_scatter(double phi, double phi0);
cvec case2_after_hadamard_d(double phi, double phi0);
cvec case2_premeasure(double phi, double phi0);  // general phases
cvec case2_premeasure_ideal();                   // phases (pi, pi/2)

// Post-measurement atom pair each correction-table row promises, on (A, C),
// unnormalized as printed (e.g. |00> + |11>).
cvec table_residual(int case_id, const char* outcome);

}  // namespace oracle
