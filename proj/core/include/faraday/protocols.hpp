#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "faraday/cavity.hpp"
#include "faraday/state.hpp"

namespace faraday {

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

// The requested maximally entangled two-qubit state on (a, b).
PureState bell_pair(Subsystem a, Subsystem b, BellKind kind);

// Pauli correction applied to atom A after the Bell-type measurement.
// The Y entries keep the tables' explicit signs (i*sigma_y vs -i*sigma_y);
// the signs only matter up to global phase but are preserved for table
// fidelity.
enum class PauliOp { I, X, YPlus, YMinus, Z };

// ASCII names used in reports: "I", "X", "iY", "-iY", "Z".
const char* pauli_name(PauliOp op);

Gate1Q correction_gate(PauliOp op);

struct CorrectionRule {
    std::string outcome;  // e.g. "L0" (case 1) or "R01" (case 2)
    PauliOp op;
};

// Table row for a measurement outcome. Case 1 patterns are a polarization
// letter plus the atom-B bit ("L0".."R1"); case 2 adds the atom-D bit
// ("R00".."L11"). Throws UnknownOutcome for anything else.
CorrectionRule correction_for(int case_id, std::string_view outcome);

// Outcome labels in the order the tables list them: case 1 L0,L1,R0,R1;
// case 2 R00..R11 then L00..L11.
std::vector<std::string> case_outcome_order(int case_id);

// Atom prepared in (|0>+|1>)/sqrt2 entangled with a photon via one
// reflection: (|0>_C |eta_-> + |1>_C |eta_+>)/sqrt2 on register (C, photon).
PureState prepare_atom_photon(const PhasePair& pp, bool lossy = false);

enum class RunMode { Enumerate, Sample };

struct ProtocolOptions {
    RunMode mode = RunMode::Enumerate;
    std::uint64_t seed = 0;      // used in Sample mode
    bool lossy = false;          // attach |r|, |r0| to every scattering
    bool capture_trace = false;  // record intermediate states by step name
};

struct BranchResult {
    std::string outcome;
    double probability;  // squared norm of the branch before renormalization
    PauliOp correction;
    double fidelity;  // post-correction AC fidelity vs (|01>+|10>)/sqrt2
};

// One protocol step and the subsystems it addressed. `interaction` marks
// operations that couple or detect amplitudes jointly; register assembly
// (tensor) is logged but is not an interaction.
struct OpLogEntry {
    std::string op;
    std::vector<Subsystem> labels;
    bool interaction;
};

struct TraceEntry {
    std::string step;
    PureState state;
};

struct ProtocolReport {
    std::vector<BranchResult> branches;  // table order; zero-weight outcomes omitted
    double success_probability;          // sum of branch probabilities
    PhasePair phases;
    std::vector<OpLogEntry> op_log;
    std::vector<TraceEntry> trace;  // only when capture_trace was set
};

// Three-cavity swapping: Bell pair (A,B), prepared (C, photon), photon
// reflected off B, Hadamards on B and the photon, measurement of
// [photon, B], Table-1 correction on A.
ProtocolReport run_case1(const PhasePair& pp, const ProtocolOptions& opts = {});

// Four-cavity swapping: Bell pairs (A,B) and (C,D), photon reflected off D,
// Hadamard on D, reflection off B, Hadamards on B and the photon,
// measurement of [photon, B, D], Table-2 correction on A.
ProtocolReport run_case2(const PhasePair& pp, const ProtocolOptions& opts = {});

// True if any logged interaction addresses both labels in one operation.
bool has_joint_interaction(const ProtocolReport& report, Subsystem a, Subsystem b);

}  // namespace faraday
