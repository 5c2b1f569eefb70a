#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "faraday/errors.hpp"

namespace faraday {

using cplx = std::complex<double>;

// The five two-level subsystems a register may hold. Enum order is the
// canonical register order used when comparing states.
enum class Subsystem : std::uint8_t { AtomA = 0, AtomB, AtomC, AtomD, Photon };

// Short name: "A", "B", "C", "D", "ph".
const char* to_string(Subsystem s);

// 2x2 single-subsystem operator, row-major. Not required to be unitary
// (diagonal loss factors are not), see is_unitary.
struct Gate1Q {
    std::array<cplx, 4> m;

    bool is_unitary(double tol = 1e-12) const;
};

namespace gates {

Gate1Q identity();
Gate1Q hadamard();  // (1/sqrt2) [[1,1],[1,-1]], same convention for atoms and photon
Gate1Q pauli_x();
Gate1Q pauli_y();
Gate1Q pauli_z();
Gate1Q i_pauli_y();        // i*sigma_y  = [[0,1],[-1,0]]
Gate1Q minus_i_pauli_y();  // -i*sigma_y = [[0,-1],[1,0]]

}  // namespace gates

// Sub-normalized pure state over a labeled tensor product of two-level
// subsystems. Amplitude ordering is big-endian in the register list: the
// first label owns the most significant bit. Photon uses L -> 0, R -> 1.
//
// Squared norm <= 1 represents a conditional (lossy) branch; operations
// return new states and never mutate their inputs.
class PureState {
public:
    // amplitudes.size() must be exactly 2^labels.size(); labels must be unique.
    PureState(std::vector<Subsystem> labels, std::vector<cplx> amplitudes);

    // Computational basis state |index> over the given register.
    static PureState basis(std::vector<Subsystem> labels, std::size_t index);

    const std::vector<Subsystem>& labels() const { return labels_; }
    const std::vector<cplx>& amplitudes() const { return amps_; }
    std::size_t num_subsystems() const { return labels_.size(); }
    std::size_t dim() const { return amps_.size(); }

    double squared_norm() const;

    // Unit-norm copy; throws DegenerateState on a zero state.
    PureState normalized() const;

    // Position of the label in the register, or -1.
    int find(Subsystem s) const;

    // Bit shift of the label in an amplitude index (big-endian).
    // Throws UnknownSubsystem if absent.
    int bit_shift(Subsystem s) const;

private:
    std::vector<Subsystem> labels_;
    std::vector<cplx> amps_;
};

// Kronecker product; registers are concatenated (a first). Throws
// DuplicateSubsystem if the registers overlap.
PureState tensor(const PureState& a, const PureState& b);

// Apply a 2x2 operator to one subsystem.
PureState apply_1q(const PureState& s, Subsystem target, const Gate1Q& g);

// Multiply each amplitude by d[(bit_a << 1) | bit_b]; d is indexed by the
// (a, b) bit pair in order (0,0), (0,1), (1,0), (1,1).
PureState apply_diag2(const PureState& s, Subsystem a, Subsystem b,
                      const std::array<cplx, 4>& d);

struct MeasurementRecord {
    // Measured labels in the order they were requested, with outcome bits.
    std::vector<std::pair<Subsystem, int>> measured;
    // Squared norm of the projected branch (absolute, so a sub-normalized
    // input's branch probabilities sum to its squared norm, not to 1).
    double probability;
    // Remaining register, renormalized to unit norm.
    PureState collapsed;
};

// All realizable outcome branches in ascending bit order of the outcome
// pattern. Branches of exactly zero weight are omitted (a zero vector has
// no direction to collapse to). Probabilities sum to squared_norm(s).
std::vector<MeasurementRecord> measure_enumerate(const PureState& s,
                                                 const std::vector<Subsystem>& targets);

// One Born-sampled branch; outcomes are weighted relative to the state's
// squared norm (post-selection on detection). Bit-reproducible per seed.
MeasurementRecord measure_sample(const PureState& s,
                                 const std::vector<Subsystem>& targets,
                                 std::uint64_t seed);

// Reorder the register into canonical (enum) order, permuting amplitudes.
PureState canonical_order(const PureState& s);

// |<a|b>|^2 after canonical reordering and normalization of both sides.
// Global-phase invariant. Throws RegisterMismatch on different registers.
double fidelity(const PureState& a, const PureState& b);

}  // namespace faraday
