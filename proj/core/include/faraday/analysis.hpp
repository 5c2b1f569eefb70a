#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "faraday/cavity.hpp"
#include "faraday/protocols.hpp"

namespace faraday {

// Sweepable quantities. The first three modify CavityParams before the
// phases are derived; the offsets act on the PhasePair directly so that
// abstract phase-error scans bypass the cavity physics.
enum class SweepParam { OmegaP, G, Gamma, PhiOffset, Phi0Offset };

const char* sweep_param_name(SweepParam p);
std::optional<SweepParam> sweep_param_from(const std::string& name);

struct SweepAxis {
    SweepParam param;
    double start;
    double stop;
    int count;  // number of grid points, >= 1
};

// Evenly spaced grid values for one axis (count == 1 yields {start}).
std::vector<double> axis_values(const SweepAxis& axis);

struct SweepSpec {
    std::vector<SweepAxis> axes;
    int case_id = 1;
    bool lossy = false;
    // Base point the axes perturb. If base_phases is set, phase offsets act
    // on it and cavity axes are rejected; otherwise phases derive from base.
    CavityParams base = CavityParams::canonical();
    std::optional<PhasePair> base_phases;

    // Throws InvalidSpec / EmptySweep on a bad description.
    void validate() const;
};

struct SweepRow {
    std::vector<double> values;  // axis values, in axis order
    PhasePair phases;
    double mean_fidelity;   // probability-weighted over outcomes
    double worst_fidelity;  // minimum over outcomes
    double success_probability;
};

// Enumerate-mode protocol run at one point, aggregated. Corrections are
// always the ideal-point table rules, modeling a fixed classical controller.
SweepRow evaluate_point(const CavityParams& p, int case_id, bool lossy);
SweepRow evaluate_point(const PhasePair& pp, int case_id, bool lossy);

// Cartesian grid over the axes, rows in lexicographic order (first axis
// slowest). Deterministic.
std::vector<SweepRow> sweep(const SweepSpec& spec);

struct SampleRow {
    std::string outcome;
    double expected;  // enumerated probability, conditioned on detection
    double observed;  // empirical frequency over n samples
    double z;         // (observed - expected) * sqrt(n / (expected (1-expected)))
};

// n seeded samples of the protocol's measurement against the enumerated
// distribution. Rows follow the case's table order.
std::vector<SampleRow> sampling_check(int case_id, const PhasePair& pp,
                                      std::uint64_t n, std::uint64_t seed,
                                      bool lossy = false);

}  // namespace faraday
