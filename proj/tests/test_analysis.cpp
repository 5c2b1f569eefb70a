#include <cmath>
#include <cstring>
#include <numbers>
#include <random>

#include "doctest.h"
#include "faraday/analysis.hpp"

using namespace faraday;

namespace {

constexpr double kPi = std::numbers::pi;

PhasePair phases_of(double phi, double phi0) {
    return PhasePair{phi, phi0, 1.0, 1.0};
}

bool rows_identical(const std::vector<SweepRow>& a, const std::vector<SweepRow>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].values != b[i].values) return false;
        if (std::memcmp(&a[i].phases, &b[i].phases, sizeof(PhasePair)) != 0) return false;
        if (a[i].mean_fidelity != b[i].mean_fidelity) return false;
        if (a[i].worst_fidelity != b[i].worst_fidelity) return false;
        if (a[i].success_probability != b[i].success_probability) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("evaluate_point at the canonical cavity parameters") {
    const SweepRow row = evaluate_point(CavityParams::canonical(), 1, false);
    CHECK(row.mean_fidelity == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(row.worst_fidelity == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(row.success_probability == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("evaluate_point with explicit phases") {
    SUBCASE("working point, case 2") {
        const SweepRow row = evaluate_point(ideal_phases(), 2, false);
        CHECK(row.mean_fidelity == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("degenerate phases halve the mean fidelity") {
        const SweepRow row = evaluate_point(phases_of(0.9, 0.9), 1, false);
        CHECK(row.mean_fidelity == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("unit-magnitude phases keep the protocol unitary") {
    std::mt19937_64 eng(11);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (int trial = 0; trial < 25; ++trial) {
        const PhasePair pp = phases_of(angle(eng), angle(eng));
        for (int case_id : {1, 2}) {
            const SweepRow row = evaluate_point(pp, case_id, false);
            CHECK(row.success_probability == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("a common phase offset is a global phase per branch") {
    std::mt19937_64 eng(23);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (int trial = 0; trial < 25; ++trial) {
        const double phi = angle(eng);
        const double phi0 = angle(eng);
        const double delta = angle(eng);
        for (int case_id : {1, 2}) {
            ProtocolOptions opts;
            const ProtocolReport base =
                case_id == 1 ? run_case1(phases_of(phi, phi0), opts)
                             : run_case2(phases_of(phi, phi0), opts);
            const ProtocolReport shifted =
                case_id == 1
                    ? run_case1(phases_of(canonical_angle(phi + delta),
                                          canonical_angle(phi0 + delta)), opts)
                    : run_case2(phases_of(canonical_angle(phi + delta),
                                          canonical_angle(phi0 + delta)), opts);
            REQUIRE(base.branches.size() == shifted.branches.size());
            for (std::size_t i = 0; i < base.branches.size(); ++i) {
                CHECK(base.branches[i].outcome == shifted.branches[i].outcome);
                CHECK(shifted.branches[i].fidelity ==
                      doctest::Approx(base.branches[i].fidelity).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("single-point sweep reduces to evaluate_point") {
    SweepSpec spec;
    spec.axes.push_back({SweepParam::OmegaP, -0.5, -0.5, 1});
    const std::vector<SweepRow> rows = sweep(spec);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].values[0] == -0.5);
    CHECK(rows[0].mean_fidelity == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("two-axis grids enumerate lexicographically") {
    SweepSpec spec;
    spec.base_phases = ideal_phases();
    spec.axes.push_back({SweepParam::PhiOffset, -0.1, 0.1, 3});
    spec.axes.push_back({SweepParam::Phi0Offset, -0.2, 0.2, 3});
    const std::vector<SweepRow> rows = sweep(spec);
    REQUIRE(rows.size() == 9);
    std::size_t k = 0;
    for (double a : {-0.1, 0.0, 0.1}) {
        for (double b : {-0.2, 0.0, 0.2}) {
            CHECK(rows[k].values[0] == doctest::Approx(a).epsilon(1e-15));
            CHECK(rows[k].values[1] == doctest::Approx(b).epsilon(1e-15));
            ++k;
        }
    }
}

TEST_CASE("the probe-frequency scan peaks at the canonical detuning") {
    SweepSpec spec;
    spec.axes.push_back({SweepParam::OmegaP, -1.0, 0.0, 11});
    const std::vector<SweepRow> rows = sweep(spec);
    REQUIRE(rows.size() == 11);
    std::size_t best = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].mean_fidelity > rows[best].mean_fidelity) best = i;
    }
    CHECK(best == 5);
    CHECK(rows[best].values[0] == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(rows[best].mean_fidelity == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sweeps are deterministic") {
    SweepSpec spec;
    spec.case_id = 2;
    spec.axes.push_back({SweepParam::Gamma, 0.0, 0.5, 6});
    spec.lossy = true;
    CHECK(rows_identical(sweep(spec), sweep(spec)));
}

TEST_CASE("sweep validation") {
    SweepSpec spec;
    SUBCASE("no axes") { CHECK_THROWS_AS(sweep(spec), EmptySweep); }
    SUBCASE("bad count") {
        spec.axes.push_back({SweepParam::G, 0.0, 1.0, 0});
        CHECK_THROWS_AS(sweep(spec), InvalidSpec);
    }
    SUBCASE("reversed bounds") {
        spec.axes.push_back({SweepParam::G, 1.0, 0.0, 3});
        CHECK_THROWS_AS(sweep(spec), InvalidSpec);
    }
    SUBCASE("cavity axis with explicit phases") {
        spec.base_phases = ideal_phases();
        spec.axes.push_back({SweepParam::OmegaP, -1.0, 0.0, 3});
        CHECK_THROWS_AS(sweep(spec), InvalidSpec);
    }
    SUBCASE("bad case id") {
        spec.case_id = 3;
        spec.axes.push_back({SweepParam::G, 0.0, 1.0, 3});
        CHECK_THROWS_AS(sweep(spec), InvalidSpec);
    }
}

TEST_CASE("perturbed-phase fidelities are regression-locked") {
    // First-computation values, frozen; both cases degrade identically for
    // a pure phi error of 0.1 rad off the working point.
    const PhasePair perturbed{canonical_angle(kPi + 0.1), kPi / 2.0, 1.0, 1.0};
    const SweepRow c1 = evaluate_point(perturbed, 1, false);
    CHECK(c1.mean_fidelity == doctest::Approx(0.99501664446031035).epsilon(1e-12));
    CHECK(c1.worst_fidelity == doctest::Approx(0.99013164397396047).epsilon(1e-12));
    CHECK(c1.success_probability == doctest::Approx(1.0).epsilon(1e-12));

    const SweepRow c2 = evaluate_point(perturbed, 2, false);
    CHECK(c2.mean_fidelity == doctest::Approx(0.99501664446031046).epsilon(1e-12));
    CHECK(c2.worst_fidelity == doctest::Approx(0.99013164397396047).epsilon(1e-12));

    const PhasePair both{canonical_angle(kPi + 0.1), kPi / 2.0 - 0.05, 1.0, 1.0};
    const SweepRow c3 = evaluate_point(both, 1, false);
    CHECK(c3.mean_fidelity == doctest::Approx(0.98883412228140122).epsilon(1e-12));
    CHECK(c3.worst_fidelity == doctest::Approx(0.97815605813041862).epsilon(1e-12));
}

TEST_CASE("mean fidelity is smooth in small phase offsets") {
    SweepSpec spec;
    spec.base_phases = ideal_phases();
    spec.axes.push_back({SweepParam::PhiOffset, 0.0, 1e-6, 2});
    const std::vector<SweepRow> rows = sweep(spec);
    REQUIRE(rows.size() == 2);
    CHECK(std::abs(rows[0].mean_fidelity - rows[1].mean_fidelity) <= 1e-4);
}

TEST_CASE("phase offsets act on explicit phases directly") {
    SweepSpec spec;
    spec.base_phases = phases_of(1.0, 0.5);
    spec.axes.push_back({SweepParam::PhiOffset, 0.25, 0.25, 1});
    spec.axes.push_back({SweepParam::Phi0Offset, -0.5, -0.5, 1});
    const std::vector<SweepRow> rows = sweep(spec);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].phases.phi == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(rows[0].phases.phi0 == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("sampling statistics stay inside five sigma at the working point") {
    const auto rows = sampling_check(1, ideal_phases(), 100000, 20240915);
    REQUIRE(rows.size() == 4);
    double expected_total = 0.0;
    double observed_total = 0.0;
    for (const SampleRow& row : rows) {
        CHECK(row.expected == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(std::abs(row.z) < 5.0);
        expected_total += row.expected;
        observed_total += row.observed;
    }
    CHECK(expected_total == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(observed_total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("a single sample lands on exactly one outcome") {
    const auto rows = sampling_check(2, ideal_phases(), 1, 5);
    REQUIRE(rows.size() == 8);
    int hits = 0;
    for (const SampleRow& row : rows) {
        if (row.observed == 1.0) ++hits;
        else CHECK(row.observed == 0.0);
    }
    CHECK(hits == 1);
}

TEST_CASE("sampling tables are seed-deterministic") {
    const auto a = sampling_check(1, ideal_phases(), 5000, 99);
    const auto b = sampling_check(1, ideal_phases(), 5000, 99);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].outcome == b[i].outcome);
        CHECK(a[i].observed == b[i].observed);
        CHECK(a[i].z == b[i].z);
    }
}

TEST_CASE("sweep parameter names round-trip") {
    for (SweepParam p : {SweepParam::OmegaP, SweepParam::G, SweepParam::Gamma,
                         SweepParam::PhiOffset, SweepParam::Phi0Offset}) {
        CHECK(sweep_param_from(sweep_param_name(p)) == p);
    }
    CHECK_FALSE(sweep_param_from("omega_q").has_value());
}
