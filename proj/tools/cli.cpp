#include "cli.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "faraday/analysis.hpp"
#include "faraday/cavity.hpp"
#include "faraday/format.hpp"
#include "faraday/protocols.hpp"

namespace faraday::cli {

namespace {

using nlohmann::json;

struct ConfigError : SimError {
    using SimError::SimError;
};

// Everything a subcommand may consume, after merging config file defaults
// with command-line overrides (flags win).
struct Options {
    std::optional<std::string> config_path;
    std::optional<std::string> out_path;
    std::string format = "csv";
    std::optional<std::uint64_t> seed;
    std::string mode = "ideal";
    std::optional<int> case_id;
    std::optional<std::uint64_t> n;
    std::optional<double> alarm_z;

    std::optional<double> omega_c, omega_0, omega_p, kappa, gamma, g;
    std::optional<double> phi, phi0;

    json cfg = json::object();
};

json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    json cfg;
    try {
        in >> cfg;
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    if (!cfg.is_object()) throw ConfigError("config root must be an object");
    return cfg;
}

double num_field(const json& obj, const char* key, double fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj.at(key).is_number()) {
        throw ConfigError(std::string("config key '") + key + "' must be a number");
    }
    return obj.at(key).get<double>();
}

// Physical parameters: config "cavity" section overridden by flags, with
// the canonical point as the base.
CavityParams resolve_cavity(const Options& opt) {
    CavityParams p = CavityParams::canonical();
    if (opt.cfg.contains("cavity")) {
        const json& c = opt.cfg.at("cavity");
        if (!c.is_object()) throw ConfigError("config key 'cavity' must be an object");
        p.omega_c = num_field(c, "omega_c", p.omega_c);
        p.omega_0 = num_field(c, "omega_0", p.omega_0);
        p.omega_p = num_field(c, "omega_p", p.omega_p);
        p.kappa = num_field(c, "kappa", p.kappa);
        p.gamma = num_field(c, "gamma", p.gamma);
        p.g = num_field(c, "g", p.g);
    }
    if (opt.omega_c) p.omega_c = *opt.omega_c;
    if (opt.omega_0) p.omega_0 = *opt.omega_0;
    if (opt.omega_p) p.omega_p = *opt.omega_p;
    if (opt.kappa) p.kappa = *opt.kappa;
    if (opt.gamma) p.gamma = *opt.gamma;
    if (opt.g) p.g = *opt.g;
    return p;
}

bool has_explicit_phases(const Options& opt) {
    return opt.phi.has_value() || opt.phi0.has_value() || opt.cfg.contains("phases");
}

PhasePair resolve_phases(const Options& opt) {
    if (!has_explicit_phases(opt)) return phase_shifts(resolve_cavity(opt));
    PhasePair pp = ideal_phases();
    if (opt.cfg.contains("phases")) {
        const json& ph = opt.cfg.at("phases");
        if (!ph.is_object()) throw ConfigError("config key 'phases' must be an object");
        pp.phi = num_field(ph, "phi", pp.phi);
        pp.phi0 = num_field(ph, "phi0", pp.phi0);
        pp.mag_r = num_field(ph, "mag_r", pp.mag_r);
        pp.mag_r0 = num_field(ph, "mag_r0", pp.mag_r0);
    }
    if (opt.phi) pp.phi = *opt.phi;
    if (opt.phi0) pp.phi0 = *opt.phi0;
    if (!std::isfinite(pp.phi) || !std::isfinite(pp.phi0)) {
        throw ConfigError("phi and phi0 must be finite");
    }
    if (!(pp.mag_r >= 0.0 && pp.mag_r <= 1.0 + 1e-12)) {
        throw ConfigError("mag_r must lie in [0, 1]");
    }
    if (!(std::abs(pp.mag_r0 - 1.0) <= 1e-12)) {
        throw ConfigError("mag_r0 must equal 1");
    }
    pp.phi = canonical_angle(pp.phi);
    pp.phi0 = canonical_angle(pp.phi0);
    return pp;
}

bool resolve_lossy(const Options& opt) {
    if (opt.mode == "ideal") return false;
    if (opt.mode == "lossy") return true;
    throw ConfigError("mode must be 'ideal' or 'lossy'");
}

void emit(const Options& opt, const std::string& payload, std::ostream& out) {
    if (opt.out_path && *opt.out_path != "-") {
        std::ofstream f(*opt.out_path, std::ios::binary);
        if (!f) throw ConfigError("cannot open output file: " + *opt.out_path);
        f << payload;
        return;
    }
    out << payload;
}

json phases_json(const PhasePair& pp) {
    return json{{"phi", pp.phi},
                {"phi0", pp.phi0},
                {"mag_r", pp.mag_r},
                {"mag_r0", pp.mag_r0}};
}

int cmd_reflection(const Options& opt, std::ostream& out) {
    const CavityParams p = resolve_cavity(opt);
    const cplx r = reflection_coefficient(p);
    const cplx r0 = empty_reflection(p);
    const PhasePair pp = phase_shifts(p);
    const FaradayAngles th = faraday_angles(pp);

    std::string payload;
    if (opt.format == "json") {
        json j{{"r", {{"re", r.real()}, {"im", r.imag()}}},
               {"r0", {{"re", r0.real()}, {"im", r0.imag()}}},
               {"phi", pp.phi},
               {"phi0", pp.phi0},
               {"mag_r", pp.mag_r},
               {"mag_r0", pp.mag_r0},
               {"theta_minus", th.theta_minus},
               {"theta_plus", th.theta_plus}};
        payload = j.dump(2) + "\n";
    } else {
        std::ostringstream s;
        s << "r_re=" << format_double(r.real()) << "\n"
          << "r_im=" << format_double(r.imag()) << "\n"
          << "r0_re=" << format_double(r0.real()) << "\n"
          << "r0_im=" << format_double(r0.imag()) << "\n"
          << "phi=" << format_double(pp.phi) << "\n"
          << "phi0=" << format_double(pp.phi0) << "\n"
          << "mag_r=" << format_double(pp.mag_r) << "\n"
          << "mag_r0=" << format_double(pp.mag_r0) << "\n"
          << "theta_minus=" << format_double(th.theta_minus) << "\n"
          << "theta_plus=" << format_double(th.theta_plus) << "\n";
        payload = s.str();
    }
    emit(opt, payload, out);
    return 0;
}

int cmd_case(const Options& opt, int case_id, std::ostream& out) {
    const PhasePair pp = resolve_phases(opt);
    ProtocolOptions popts;
    popts.lossy = resolve_lossy(opt);
    const ProtocolReport report =
        case_id == 1 ? run_case1(pp, popts) : run_case2(pp, popts);

    std::string payload;
    if (opt.format == "json") {
        json branches = json::array();
        for (const BranchResult& b : report.branches) {
            branches.push_back(json{{"outcome", b.outcome},
                                    {"probability", b.probability},
                                    {"correction", pauli_name(b.correction)},
                                    {"fidelity", b.fidelity}});
        }
        json j{{"case", case_id},
               {"phases", phases_json(report.phases)},
               {"branches", branches},
               {"success_probability", report.success_probability}};
        payload = j.dump(2) + "\n";
    } else {
        std::ostringstream s;
        s << "outcome,probability,correction,fidelity\n";
        for (const BranchResult& b : report.branches) {
            s << b.outcome << ',' << format_double(b.probability) << ','
              << pauli_name(b.correction) << ',' << format_double(b.fidelity)
              << '\n';
        }
        s << "success_probability," << format_double(report.success_probability)
          << ",,\n";
        payload = s.str();
    }
    emit(opt, payload, out);
    return 0;
}

SweepSpec resolve_sweep(const Options& opt) {
    if (!opt.cfg.contains("sweep")) {
        throw ConfigError("sweep requires a 'sweep' section in the config");
    }
    const json& sw = opt.cfg.at("sweep");
    if (!sw.is_object()) throw ConfigError("config key 'sweep' must be an object");

    SweepSpec spec;
    spec.case_id = opt.case_id.value_or(sw.value("case", 1));
    spec.lossy = resolve_lossy(opt);
    spec.base = resolve_cavity(opt);
    if (has_explicit_phases(opt)) spec.base_phases = resolve_phases(opt);

    if (!sw.contains("axes") || !sw.at("axes").is_array()) {
        throw ConfigError("sweep section needs an 'axes' array");
    }
    for (const json& ja : sw.at("axes")) {
        if (!ja.is_object() || !ja.contains("param")) {
            throw ConfigError("each sweep axis needs a 'param' name");
        }
        const std::string name = ja.at("param").get<std::string>();
        const auto param = sweep_param_from(name);
        if (!param) throw ConfigError("unknown sweep parameter '" + name + "'");
        SweepAxis axis;
        axis.param = *param;
        axis.start = num_field(ja, "start", 0.0);
        axis.stop = num_field(ja, "stop", axis.start);
        axis.count = static_cast<int>(num_field(ja, "count", 1.0));
        spec.axes.push_back(axis);
    }
    return spec;
}

int cmd_sweep(const Options& opt, std::ostream& out) {
    const SweepSpec spec = resolve_sweep(opt);
    const std::vector<SweepRow> rows = sweep(spec);

    std::string payload;
    if (opt.format == "json") {
        json jrows = json::array();
        for (const SweepRow& row : rows) {
            json j;
            for (std::size_t k = 0; k < spec.axes.size(); ++k) {
                j[sweep_param_name(spec.axes[k].param)] = row.values[k];
            }
            j["phi"] = row.phases.phi;
            j["phi0"] = row.phases.phi0;
            j["mag_r"] = row.phases.mag_r;
            j["mean_fidelity"] = row.mean_fidelity;
            j["worst_fidelity"] = row.worst_fidelity;
            j["success_prob"] = row.success_probability;
            jrows.push_back(std::move(j));
        }
        payload = jrows.dump(2) + "\n";
    } else {
        std::ostringstream s;
        for (const SweepAxis& a : spec.axes) s << sweep_param_name(a.param) << ',';
        s << "phi,phi0,mag_r,mean_fidelity,worst_fidelity,success_prob\n";
        for (const SweepRow& row : rows) {
            for (double v : row.values) s << format_double(v) << ',';
            s << format_double(row.phases.phi) << ','
              << format_double(row.phases.phi0) << ','
              << format_double(row.phases.mag_r) << ','
              << format_double(row.mean_fidelity) << ','
              << format_double(row.worst_fidelity) << ','
              << format_double(row.success_probability) << '\n';
        }
        payload = s.str();
    }
    emit(opt, payload, out);
    return 0;
}

int cmd_sample(const Options& opt, std::ostream& out, std::ostream& err) {
    const json sample =
        opt.cfg.contains("sample") ? opt.cfg.at("sample") : json::object();
    if (!sample.is_object()) throw ConfigError("config key 'sample' must be an object");

    const int case_id = opt.case_id.value_or(sample.value("case", 1));
    std::uint64_t n = opt.n.value_or(sample.value("n", std::uint64_t{0}));
    if (n < 1) throw ConfigError("sample requires n >= 1");
    std::optional<std::uint64_t> seed = opt.seed;
    if (!seed && sample.contains("seed")) {
        seed = sample.at("seed").get<std::uint64_t>();
    }
    if (!seed) throw ConfigError("sample requires a seed");
    const double alarm = opt.alarm_z.value_or(num_field(sample, "alarm_z", 5.0));

    const PhasePair pp = resolve_phases(opt);
    const std::vector<SampleRow> rows =
        sampling_check(case_id, pp, n, *seed, resolve_lossy(opt));

    std::string payload;
    if (opt.format == "json") {
        json jrows = json::array();
        for (const SampleRow& row : rows) {
            jrows.push_back(json{{"outcome", row.outcome},
                                 {"expected_probability", row.expected},
                                 {"observed_frequency", row.observed},
                                 {"z_score", row.z}});
        }
        payload = jrows.dump(2) + "\n";
    } else {
        std::ostringstream s;
        s << "outcome,expected_probability,observed_frequency,z_score\n";
        for (const SampleRow& row : rows) {
            s << row.outcome << ',' << format_double(row.expected) << ','
              << format_double(row.observed) << ',' << format_double(row.z) << '\n';
        }
        payload = s.str();
    }
    for (const SampleRow& row : rows) {
        if (std::abs(row.z) > alarm) {
            err << "warning: outcome " << row.outcome << " has |z| = "
                << format_double(std::abs(row.z)) << " above alarm threshold "
                << format_double(alarm) << "\n";
        }
    }
    emit(opt, payload, out);
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options opt;

    CLI::App app{"Cavity-QED Faraday-rotation entanglement-swapping simulator"};
    app.fallthrough();
    app.require_subcommand(1);

    app.add_option("--config", opt.config_path, "JSON config file");
    app.add_option("--out", opt.out_path, "output path ('-' for stdout)");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--seed", opt.seed, "RNG seed");
    app.add_option("--mode", opt.mode, "ideal or lossy scattering")
        ->check(CLI::IsMember({"ideal", "lossy"}));
    app.add_option("--case", opt.case_id, "protocol case (1 or 2)")
        ->check(CLI::IsMember({1, 2}));
    app.add_option("--n", opt.n, "number of samples");
    app.add_option("--alarm-z", opt.alarm_z, "sampling alarm threshold");
    app.add_option("--omega-c", opt.omega_c, "cavity frequency (units of kappa)");
    app.add_option("--omega-0", opt.omega_0, "atomic frequency");
    app.add_option("--omega-p", opt.omega_p, "probe frequency");
    app.add_option("--kappa", opt.kappa, "cavity damping rate");
    app.add_option("--gamma", opt.gamma, "atomic decay rate");
    app.add_option("--g", opt.g, "atom-cavity coupling");
    app.add_option("--phi", opt.phi, "explicit dressed-cavity phase");
    app.add_option("--phi0", opt.phi0, "explicit empty-cavity phase");

    CLI::App* sub_reflection =
        app.add_subcommand("reflection", "reflection coefficients and Faraday angles");
    CLI::App* sub_case1 = app.add_subcommand("case1", "three-cavity swapping protocol");
    CLI::App* sub_case2 = app.add_subcommand("case2", "four-cavity swapping protocol");
    CLI::App* sub_sweep = app.add_subcommand("sweep", "parameter-grid fidelity scan");
    CLI::App* sub_sample = app.add_subcommand("sample", "seeded sampling statistics");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (opt.config_path) opt.cfg = load_config(*opt.config_path);
        if (!opt.out_path && opt.cfg.contains("out")) {
            opt.out_path = opt.cfg.at("out").get<std::string>();
        }
        // Flag defaults only apply when the config does not set the key.
        if (opt.cfg.contains("format") &&
            app.count("--format") == 0) {
            opt.format = opt.cfg.at("format").get<std::string>();
            if (opt.format != "csv" && opt.format != "json") {
                throw ConfigError("format must be 'csv' or 'json'");
            }
        }
        if (opt.cfg.contains("mode") && app.count("--mode") == 0) {
            opt.mode = opt.cfg.at("mode").get<std::string>();
        }
        if (opt.cfg.contains("seed") && !opt.seed) {
            opt.seed = opt.cfg.at("seed").get<std::uint64_t>();
        }

        if (sub_reflection->parsed()) return cmd_reflection(opt, out);
        if (sub_case1->parsed()) return cmd_case(opt, 1, out);
        if (sub_case2->parsed()) return cmd_case(opt, 2, out);
        if (sub_sweep->parsed()) return cmd_sweep(opt, out);
        if (sub_sample->parsed()) return cmd_sample(opt, out, err);
        err << "error: no subcommand given\n";
        return 2;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidParams& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidSpec& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const EmptySweep& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "error: config: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace faraday::cli
