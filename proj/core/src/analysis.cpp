#include "faraday/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>

namespace faraday {

namespace {

double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

ProtocolReport run_case(int case_id, const PhasePair& pp, const ProtocolOptions& opts) {
    if (case_id == 1) return run_case1(pp, opts);
    if (case_id == 2) return run_case2(pp, opts);
    throw InvalidSpec("case must be 1 or 2");
}

SweepRow aggregate(const ProtocolReport& report) {
    SweepRow row;
    row.phases = report.phases;
    row.success_probability = report.success_probability;
    double mean = 0.0;
    double worst = std::numeric_limits<double>::infinity();
    for (const BranchResult& b : report.branches) {
        mean += b.probability * b.fidelity;
        worst = std::min(worst, b.fidelity);
    }
    row.mean_fidelity =
        report.success_probability > 0.0 ? mean / report.success_probability : 0.0;
    row.worst_fidelity = report.branches.empty() ? 0.0 : worst;
    return row;
}

}  // namespace

const char* sweep_param_name(SweepParam p) {
    switch (p) {
        case SweepParam::OmegaP: return "omega_p";
        case SweepParam::G: return "g";
        case SweepParam::Gamma: return "gamma";
        case SweepParam::PhiOffset: return "phi_offset";
        case SweepParam::Phi0Offset: return "phi0_offset";
    }
    return "?";
}

std::optional<SweepParam> sweep_param_from(const std::string& name) {
    if (name == "omega_p") return SweepParam::OmegaP;
    if (name == "g") return SweepParam::G;
    if (name == "gamma") return SweepParam::Gamma;
    if (name == "phi_offset") return SweepParam::PhiOffset;
    if (name == "phi0_offset") return SweepParam::Phi0Offset;
    return std::nullopt;
}

std::vector<double> axis_values(const SweepAxis& axis) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(axis.count));
    if (axis.count == 1) {
        out.push_back(axis.start);
        return out;
    }
    const double step = (axis.stop - axis.start) / static_cast<double>(axis.count - 1);
    for (int i = 0; i < axis.count; ++i) {
        out.push_back(axis.start + step * static_cast<double>(i));
    }
    return out;
}

void SweepSpec::validate() const {
    if (case_id != 1 && case_id != 2) throw InvalidSpec("case must be 1 or 2");
    if (axes.empty()) throw EmptySweep("sweep has no axes");
    for (const SweepAxis& a : axes) {
        if (a.count < 1) {
            throw InvalidSpec(std::string(sweep_param_name(a.param)) +
                              " axis: count must be >= 1");
        }
        if (!(a.start <= a.stop)) {
            throw InvalidSpec(std::string(sweep_param_name(a.param)) +
                              " axis: start must be <= stop");
        }
        const bool cavity_axis = a.param == SweepParam::OmegaP ||
                                 a.param == SweepParam::G ||
                                 a.param == SweepParam::Gamma;
        if (cavity_axis && base_phases.has_value()) {
            throw InvalidSpec(std::string(sweep_param_name(a.param)) +
                              " axis requires cavity parameters, but explicit "
                              "phases were given");
        }
    }
    base.validate();
}

SweepRow evaluate_point(const CavityParams& p, int case_id, bool lossy) {
    return evaluate_point(phase_shifts(p), case_id, lossy);
}

SweepRow evaluate_point(const PhasePair& pp, int case_id, bool lossy) {
    ProtocolOptions opts;
    opts.mode = RunMode::Enumerate;
    opts.lossy = lossy;
    return aggregate(run_case(case_id, pp, opts));
}

std::vector<SweepRow> sweep(const SweepSpec& spec) {
    spec.validate();

    std::vector<std::vector<double>> grids;
    std::size_t total = 1;
    for (const SweepAxis& a : spec.axes) {
        grids.push_back(axis_values(a));
        total *= grids.back().size();
    }

    std::vector<SweepRow> rows;
    rows.reserve(total);
    std::vector<std::size_t> idx(spec.axes.size(), 0);
    for (std::size_t flat = 0; flat < total; ++flat) {
        // Decode lexicographic position, first axis slowest.
        std::size_t rem = flat;
        for (std::size_t k = spec.axes.size(); k-- > 0;) {
            idx[k] = rem % grids[k].size();
            rem /= grids[k].size();
        }

        CavityParams p = spec.base;
        double dphi = 0.0, dphi0 = 0.0;
        std::vector<double> values(spec.axes.size());
        for (std::size_t k = 0; k < spec.axes.size(); ++k) {
            const double v = grids[k][idx[k]];
            values[k] = v;
            switch (spec.axes[k].param) {
                case SweepParam::OmegaP: p.omega_p = v; break;
                case SweepParam::G: p.g = v; break;
                case SweepParam::Gamma: p.gamma = v; break;
                case SweepParam::PhiOffset: dphi += v; break;
                case SweepParam::Phi0Offset: dphi0 += v; break;
            }
        }

        PhasePair pp = spec.base_phases ? *spec.base_phases : phase_shifts(p);
        pp.phi = canonical_angle(pp.phi + dphi);
        pp.phi0 = canonical_angle(pp.phi0 + dphi0);

        SweepRow row = evaluate_point(pp, spec.case_id, spec.lossy);
        row.values = std::move(values);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<SampleRow> sampling_check(int case_id, const PhasePair& pp,
                                      std::uint64_t n, std::uint64_t seed,
                                      bool lossy) {
    if (n < 1) throw InvalidSpec("sample count must be >= 1");

    // The protocol is deterministic up to the measurement, so the n runs
    // share one enumerated distribution and one seeded generator.
    ProtocolOptions opts;
    opts.mode = RunMode::Enumerate;
    opts.lossy = lossy;
    const ProtocolReport report = run_case(case_id, pp, opts);

    std::vector<double> expected;
    double total = 0.0;
    for (const BranchResult& b : report.branches) total += b.probability;
    for (const BranchResult& b : report.branches) {
        expected.push_back(b.probability / total);
    }

    std::vector<std::uint64_t> counts(report.branches.size(), 0);
    std::mt19937_64 eng(seed);
    for (std::uint64_t i = 0; i < n; ++i) {
        const double u = uniform01(eng);
        double acc = 0.0;
        std::size_t pick = report.branches.size() - 1;
        for (std::size_t b = 0; b < expected.size(); ++b) {
            acc += expected[b];
            if (u < acc) {
                pick = b;
                break;
            }
        }
        ++counts[pick];
    }

    std::vector<SampleRow> rows;
    for (std::size_t b = 0; b < report.branches.size(); ++b) {
        SampleRow row;
        row.outcome = report.branches[b].outcome;
        row.expected = expected[b];
        row.observed = static_cast<double>(counts[b]) / static_cast<double>(n);
        const double spread = expected[b] * (1.0 - expected[b]);
        if (spread > 0.0) {
            row.z = (row.observed - row.expected) *
                    std::sqrt(static_cast<double>(n) / spread);
        } else {
            row.z = (row.observed == row.expected)
                        ? 0.0
                        : std::numeric_limits<double>::infinity();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace faraday
