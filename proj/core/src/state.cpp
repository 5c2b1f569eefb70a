#include "faraday/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

namespace faraday {

namespace {

constexpr double kSqrt1_2 = 0.70710678118654752440;

// Deterministic uniform double in [0, 1) from the top 53 bits of the
// generator output; avoids distribution objects whose streams differ
// across standard-library implementations.
double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

std::string label_list(const std::vector<Subsystem>& labels) {
    std::string out;
    for (Subsystem s : labels) {
        if (!out.empty()) out += ",";
        out += to_string(s);
    }
    return out;
}

}  // namespace

const char* to_string(Subsystem s) {
    switch (s) {
        case Subsystem::AtomA: return "A";
        case Subsystem::AtomB: return "B";
        case Subsystem::AtomC: return "C";
        case Subsystem::AtomD: return "D";
        case Subsystem::Photon: return "ph";
    }
    return "?";
}

bool Gate1Q::is_unitary(double tol) const {
    // Rows of U U^dagger against the identity.
    const cplx r00 = m[0] * std::conj(m[0]) + m[1] * std::conj(m[1]);
    const cplx r01 = m[0] * std::conj(m[2]) + m[1] * std::conj(m[3]);
    const cplx r11 = m[2] * std::conj(m[2]) + m[3] * std::conj(m[3]);
    return std::abs(r00 - 1.0) <= tol && std::abs(r11 - 1.0) <= tol &&
           std::abs(r01) <= tol;
}

namespace gates {

Gate1Q identity() { return {{1.0, 0.0, 0.0, 1.0}}; }

Gate1Q hadamard() {
    return {{kSqrt1_2, kSqrt1_2, kSqrt1_2, -kSqrt1_2}};
}

Gate1Q pauli_x() { return {{0.0, 1.0, 1.0, 0.0}}; }

Gate1Q pauli_y() {
    return {{0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0}};
}

Gate1Q pauli_z() { return {{1.0, 0.0, 0.0, -1.0}}; }

Gate1Q i_pauli_y() { return {{0.0, 1.0, -1.0, 0.0}}; }

Gate1Q minus_i_pauli_y() { return {{0.0, -1.0, 1.0, 0.0}}; }

}  // namespace gates

PureState::PureState(std::vector<Subsystem> labels, std::vector<cplx> amplitudes)
    : labels_(std::move(labels)), amps_(std::move(amplitudes)) {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        for (std::size_t j = i + 1; j < labels_.size(); ++j) {
            if (labels_[i] == labels_[j]) {
                throw DuplicateSubsystem(std::string("duplicate subsystem label ") +
                                         to_string(labels_[i]));
            }
        }
    }
    const std::size_t want = std::size_t{1} << labels_.size();
    if (amps_.size() != want) {
        throw InvalidSpec("amplitude vector length " + std::to_string(amps_.size()) +
                          " does not match register size 2^" +
                          std::to_string(labels_.size()));
    }
}

PureState PureState::basis(std::vector<Subsystem> labels, std::size_t index) {
    std::vector<cplx> amps(std::size_t{1} << labels.size(), 0.0);
    amps.at(index) = 1.0;
    return PureState(std::move(labels), std::move(amps));
}

double PureState::squared_norm() const {
    double s = 0.0;
    for (const cplx& a : amps_) s += std::norm(a);
    return s;
}

PureState PureState::normalized() const {
    const double s2 = squared_norm();
    if (s2 <= 0.0) throw DegenerateState("cannot normalize a zero state");
    const double inv = 1.0 / std::sqrt(s2);
    std::vector<cplx> amps(amps_);
    for (cplx& a : amps) a *= inv;
    return PureState(labels_, std::move(amps));
}

int PureState::find(Subsystem s) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == s) return static_cast<int>(i);
    }
    return -1;
}

int PureState::bit_shift(Subsystem s) const {
    const int pos = find(s);
    if (pos < 0) {
        throw UnknownSubsystem(std::string("subsystem ") + to_string(s) +
                               " not in register [" + label_list(labels_) + "]");
    }
    return static_cast<int>(labels_.size()) - 1 - pos;
}

PureState tensor(const PureState& a, const PureState& b) {
    std::vector<Subsystem> labels(a.labels());
    for (Subsystem s : b.labels()) {
        if (a.find(s) >= 0) {
            throw DuplicateSubsystem(std::string("subsystem ") + to_string(s) +
                                     " present in both factors");
        }
        labels.push_back(s);
    }
    std::vector<cplx> amps(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const cplx ai = a.amplitudes()[i];
        for (std::size_t j = 0; j < b.dim(); ++j) {
            amps[i * b.dim() + j] = ai * b.amplitudes()[j];
        }
    }
    return PureState(std::move(labels), std::move(amps));
}

PureState apply_1q(const PureState& s, Subsystem target, const Gate1Q& g) {
    const std::size_t step = std::size_t{1} << s.bit_shift(target);
    const std::size_t block = step << 1;
    std::vector<cplx> amps(s.amplitudes());
    for (std::size_t base = 0; base < amps.size(); base += block) {
        for (std::size_t off = 0; off < step; ++off) {
            const std::size_t i0 = base + off;
            const std::size_t i1 = i0 + step;
            const cplx a0 = amps[i0], a1 = amps[i1];
            amps[i0] = g.m[0] * a0 + g.m[1] * a1;
            amps[i1] = g.m[2] * a0 + g.m[3] * a1;
        }
    }
    return PureState(s.labels(), std::move(amps));
}

PureState apply_diag2(const PureState& s, Subsystem a, Subsystem b,
                      const std::array<cplx, 4>& d) {
    const int sa = s.bit_shift(a);
    const int sb = s.bit_shift(b);
    if (sa == sb) throw DuplicateSubsystem("apply_diag2 labels must be distinct");
    std::vector<cplx> amps(s.amplitudes());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const std::size_t bit_a = (i >> sa) & 1u;
        const std::size_t bit_b = (i >> sb) & 1u;
        amps[i] *= d[(bit_a << 1) | bit_b];
    }
    return PureState(s.labels(), std::move(amps));
}

namespace {

struct BranchLayout {
    std::vector<int> target_shifts;   // shift of each measured label
    std::vector<Subsystem> remaining; // register order preserved
    std::vector<int> remaining_shifts;
};

BranchLayout layout_for(const PureState& s, const std::vector<Subsystem>& targets) {
    BranchLayout lo;
    for (Subsystem t : targets) {
        lo.target_shifts.push_back(s.bit_shift(t));
    }
    for (std::size_t i = 0; i < targets.size(); ++i) {
        for (std::size_t j = i + 1; j < targets.size(); ++j) {
            if (targets[i] == targets[j]) {
                throw DuplicateSubsystem("measurement target listed twice");
            }
        }
    }
    for (Subsystem l : s.labels()) {
        if (std::find(targets.begin(), targets.end(), l) == targets.end()) {
            lo.remaining.push_back(l);
            lo.remaining_shifts.push_back(s.bit_shift(l));
        }
    }
    return lo;
}

// Outcome pattern of index i: targets in argument order, first target is
// the most significant outcome bit.
std::size_t outcome_of(std::size_t i, const std::vector<int>& target_shifts) {
    std::size_t out = 0;
    for (int sh : target_shifts) out = (out << 1) | ((i >> sh) & 1u);
    return out;
}

std::size_t reduced_index(std::size_t i, const std::vector<int>& remaining_shifts) {
    std::size_t out = 0;
    for (int sh : remaining_shifts) out = (out << 1) | ((i >> sh) & 1u);
    return out;
}

MeasurementRecord make_record(const PureState& s, const std::vector<Subsystem>& targets,
                              const BranchLayout& lo, std::size_t outcome, double weight) {
    std::vector<std::pair<Subsystem, int>> measured;
    for (std::size_t t = 0; t < targets.size(); ++t) {
        const int bit = static_cast<int>((outcome >> (targets.size() - 1 - t)) & 1u);
        measured.emplace_back(targets[t], bit);
    }
    std::vector<cplx> amps(std::size_t{1} << lo.remaining.size(), 0.0);
    for (std::size_t i = 0; i < s.dim(); ++i) {
        if (outcome_of(i, lo.target_shifts) == outcome) {
            amps[reduced_index(i, lo.remaining_shifts)] = s.amplitudes()[i];
        }
    }
    PureState collapsed(lo.remaining, std::move(amps));
    return MeasurementRecord{std::move(measured), weight, collapsed.normalized()};
}

std::vector<double> branch_weights(const PureState& s, const BranchLayout& lo,
                                   std::size_t n_branches) {
    std::vector<double> w(n_branches, 0.0);
    for (std::size_t i = 0; i < s.dim(); ++i) {
        w[outcome_of(i, lo.target_shifts)] += std::norm(s.amplitudes()[i]);
    }
    return w;
}

}  // namespace

std::vector<MeasurementRecord> measure_enumerate(const PureState& s,
                                                 const std::vector<Subsystem>& targets) {
    if (s.squared_norm() <= 0.0) throw DegenerateState("measurement of a zero state");
    const BranchLayout lo = layout_for(s, targets);
    const std::size_t n_branches = std::size_t{1} << targets.size();
    const std::vector<double> w = branch_weights(s, lo, n_branches);
    std::vector<MeasurementRecord> records;
    records.reserve(n_branches);
    for (std::size_t b = 0; b < n_branches; ++b) {
        if (w[b] > 0.0) records.push_back(make_record(s, targets, lo, b, w[b]));
    }
    return records;
}

MeasurementRecord measure_sample(const PureState& s,
                                 const std::vector<Subsystem>& targets,
                                 std::uint64_t seed) {
    const double total = s.squared_norm();
    if (total <= 0.0) throw DegenerateState("measurement of a zero state");
    const BranchLayout lo = layout_for(s, targets);
    const std::size_t n_branches = std::size_t{1} << targets.size();
    const std::vector<double> w = branch_weights(s, lo, n_branches);

    std::mt19937_64 eng(seed);
    const double u = uniform01(eng) * total;
    double acc = 0.0;
    std::size_t pick = n_branches;
    for (std::size_t b = 0; b < n_branches; ++b) {
        acc += w[b];
        if (u < acc) {
            pick = b;
            break;
        }
    }
    if (pick == n_branches) {  // u == total after rounding; take the last live branch
        for (std::size_t b = n_branches; b-- > 0;) {
            if (w[b] > 0.0) {
                pick = b;
                break;
            }
        }
    }
    return make_record(s, targets, lo, pick, w[pick]);
}

PureState canonical_order(const PureState& s) {
    const std::size_t n = s.num_subsystems();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return s.labels()[a] < s.labels()[b];
    });

    std::vector<Subsystem> labels(n);
    std::vector<int> src_shift(n);
    for (std::size_t k = 0; k < n; ++k) {
        labels[k] = s.labels()[order[k]];
        src_shift[k] = static_cast<int>(n - 1 - order[k]);
    }
    std::vector<cplx> amps(s.dim(), 0.0);
    for (std::size_t i = 0; i < s.dim(); ++i) {
        std::size_t j = 0;
        for (std::size_t k = 0; k < n; ++k) {
            j = (j << 1) | ((i >> src_shift[k]) & 1u);
        }
        amps[j] = s.amplitudes()[i];
    }
    return PureState(std::move(labels), std::move(amps));
}

double fidelity(const PureState& a, const PureState& b) {
    const PureState ca = canonical_order(a);
    const PureState cb = canonical_order(b);
    if (ca.labels() != cb.labels()) {
        throw RegisterMismatch("registers [" + label_list(ca.labels()) + "] vs [" +
                               label_list(cb.labels()) + "]");
    }
    const double na = ca.squared_norm();
    const double nb = cb.squared_norm();
    if (na <= 0.0 || nb <= 0.0) throw DegenerateState("fidelity of a zero state");
    cplx dot = 0.0;
    for (std::size_t i = 0; i < ca.dim(); ++i) {
        dot += std::conj(ca.amplitudes()[i]) * cb.amplitudes()[i];
    }
    return std::norm(dot) / (na * nb);
}

}  // namespace faraday
