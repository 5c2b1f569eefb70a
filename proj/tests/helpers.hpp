#pragma once

#include <complex>
#include <random>
#include <vector>

#include "faraday/state.hpp"

namespace testutil {

// Haar-ish random state for property checks: i.i.d. complex Gaussian
// amplitudes, normalized. Deterministic per seed.
inline faraday::PureState random_state(std::vector<faraday::Subsystem> labels,
                                       std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<faraday::cplx> amps(std::size_t{1} << labels.size());
    for (auto& a : amps) a = faraday::cplx(gauss(eng), gauss(eng));
    return faraday::PureState(std::move(labels), std::move(amps)).normalized();
}

inline double max_amp_diff(const std::vector<faraday::cplx>& a,
                           const std::vector<faraday::cplx>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

}  // namespace testutil
