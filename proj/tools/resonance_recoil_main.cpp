#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "recoil/constants.hpp"
#include "recoil/dynamics.hpp"
#include "recoil/emission.hpp"
#include "recoil/errors.hpp"
#include "recoil/io.hpp"
#include "recoil/pair.hpp"
#include "recoil/species.hpp"
#include "recoil/verify.hpp"

namespace cn = recoil::constants;
using recoil::AtomPair;
using recoil::AtomSpecies;
using recoil::format_double;
using recoil::Vec3;

namespace {

// exit codes: 0 success, 1 configuration/validation, 2 I/O, 3 verification failure

struct CommonOpts {
    std::string species_file = "species/alkali_d1.json";
    std::string excited = "RB87_5P12";
    std::string ground = "K40_GS";
    std::string orientation = "fixed";
    std::string dipole_axis; // "X,Y,Z" override for both species; empty keeps file axes
};

struct Loaded {
    recoil::SpeciesRegistry reg;
    AtomSpecies A, B;
    AtomPair pair; // template at x = 1, geometric axis +x
    std::string species_hash;
};

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

void emit_error(const std::string& kind, const std::string& message) {
    std::cerr << "{\"error\":\"" << kind << "\",\"message\":\"" << json_escape(message)
              << "\"}\n";
}

Vec3 parse_axis(const std::string& text) {
    std::vector<double> vals;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            vals.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw recoil::ValidationError("dipole-axis component '" + tok +
                                          "' is not a number");
        }
    }
    if (vals.size() != 3)
        throw recoil::ValidationError("dipole-axis must have exactly three components X,Y,Z");
    return {vals[0], vals[1], vals[2]};
}

std::string axis_string(const AtomSpecies& s) {
    const Vec3 h = s.mu_hat();
    return format_double(h.x) + "," + format_double(h.y) + "," + format_double(h.z);
}

Loaded load(const CommonOpts& c) {
    Loaded L;
    L.species_hash = recoil::fnv1a_hex(recoil::read_file(c.species_file));
    L.reg = recoil::load_species(c.species_file);
    L.A = recoil::find_species(L.reg, c.excited);
    L.B = recoil::find_species(L.reg, c.ground);
    if (!c.dipole_axis.empty()) {
        const Vec3 axis = parse_axis(c.dipole_axis);
        L.A = recoil::make_species(L.A.label, L.A.omega, L.A.gamma, axis, L.A.source);
        L.B = recoil::make_species(L.B.label, L.B.omega, L.B.gamma, axis, L.B.source);
    }
    const recoil::Orientation mode = c.orientation == "isotropic"
                                         ? recoil::Orientation::isotropic
                                         : recoil::Orientation::fixed;
    L.pair = recoil::make_pair(L.A, L.B, 1.0 / L.A.k(), {1.0, 0.0, 0.0}, mode);
    return L;
}

void meta_comment(std::string& s, const std::string& command, const CommonOpts& c,
                  const Loaded& L) {
    s += "# resonance-recoil " + command + "\n";
    s += "# species_file=" + c.species_file + "\n";
    s += "# species_hash=" + L.species_hash + "\n";
    s += "# excited=" + L.A.label + "\n";
    s += "# ground=" + L.B.label + "\n";
    s += "# orientation=" + c.orientation + "\n";
    s += "# dipole_axis_excited=" + axis_string(L.A) + "\n";
    s += "# dipole_axis_ground=" + axis_string(L.B) + "\n";
}

std::string meta_json(const std::string& command, const CommonOpts& c, const Loaded& L) {
    std::string s = "\"meta\":{";
    s += "\"command\":\"" + json_escape(command) + "\",";
    s += "\"species_file\":\"" + json_escape(c.species_file) + "\",";
    s += "\"species_hash\":\"" + L.species_hash + "\",";
    s += "\"excited\":\"" + json_escape(L.A.label) + "\",";
    s += "\"ground\":\"" + json_escape(L.B.label) + "\",";
    s += "\"orientation\":\"" + c.orientation + "\",";
    s += "\"dipole_axis_excited\":[" + axis_string(L.A) + "],";
    s += "\"dipole_axis_ground\":[" + axis_string(L.B) + "]";
    return s; // caller appends command parameters and the closing brace
}

void deliver(const std::string& text, const std::string& out) {
    if (out.empty())
        std::cout << text;
    else
        recoil::write_file(out, text);
}

struct ScanOpts {
    double xmin = 0.5;
    double xmax = 20.0;
    int samples = 400;
    std::string format = "csv";
    std::string out;
};

int run_scan(const CommonOpts& c, const ScanOpts& o) {
    const Loaded L = load(c);
    const auto rows = recoil::scan_separation(L.pair, o.xmin, o.xmax, o.samples);
    const double kA = L.A.k();
    const double gA = L.A.gamma;
    const Vec3 axis = L.pair.axis;

    std::string s;
    if (o.format == "csv") {
        meta_comment(s, "scan", c, L);
        s += "# xmin=" + format_double(o.xmin) + "\n";
        s += "# xmax=" + format_double(o.xmax) + "\n";
        s += "# samples=" + std::to_string(o.samples) + "\n";
        s += "x,R_m,F0_N,P_inf_kg_m_s,D_Hz,D_over_GammaA\n";
        for (const auto& r : rows) {
            s += format_double(r.x) + "," + format_double(r.x / kA) + "," +
                 format_double(dot(r.F0, axis)) + "," + format_double(dot(r.P_inf, axis)) +
                 "," + format_double(r.D) + "," +
                 format_double(2.0 * cn::pi * r.D / gA) + "\n";
        }
    } else {
        s = "{" + meta_json("scan", c, L);
        s += ",\"xmin\":" + format_double(o.xmin);
        s += ",\"xmax\":" + format_double(o.xmax);
        s += ",\"samples\":" + std::to_string(o.samples) + "},\"rows\":[";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& r = rows[i];
            if (i) s += ",";
            s += "{\"x\":" + format_double(r.x) + ",\"R_m\":" + format_double(r.x / kA) +
                 ",\"F0_N\":" + format_double(dot(r.F0, axis)) +
                 ",\"P_inf_kg_m_s\":" + format_double(dot(r.P_inf, axis)) +
                 ",\"D_Hz\":" + format_double(r.D) +
                 ",\"D_over_GammaA\":" + format_double(2.0 * cn::pi * r.D / gA) + "}";
        }
        s += "]}\n";
    }
    deliver(s, o.out);
    return 0;
}

struct BudgetOpts {
    double x = 1.28;
    std::string out;
};

int run_budget(const CommonOpts& c, const BudgetOpts& o) {
    const Loaded L = load(c);
    const recoil::ProbabilityBudget b = recoil::budget(recoil::with_x(L.pair, o.x));
    std::string s = "{" + meta_json("budget", c, L);
    s += ",\"x\":" + format_double(o.x) + "}";
    s += ",\"p_a\":" + format_double(b.p_a);
    s += ",\"p_b\":" + format_double(b.p_b);
    s += ",\"p_c\":" + format_double(b.p_c);
    s += ",\"p_de\":" + format_double(b.p_de);
    s += ",\"p_fg\":" + format_double(b.p_fg);
    s += ",\"residual_theorem\":" + format_double(b.residual_theorem);
    s += ",\"order_check\":" + format_double(b.order_check);
    s += "}\n";
    deliver(s, o.out);
    return 0;
}

struct EmissionOpts {
    double x = 1.28;
    int ntheta = 181;
    int quad_order = 64;
    std::string format = "csv";
    std::string out;
};

int run_emission(const CommonOpts& c, const EmissionOpts& o) {
    if (o.ntheta < 2) throw recoil::ValidationError("ntheta must be >= 2");
    const Loaded L = load(c);
    const AtomPair p = recoil::with_x(L.pair, o.x);
    const recoil::EmissionDistribution dist = recoil::emitted_momentum(p, o.quad_order);
    const recoil::Frame frame = recoil::frame_for_axis(p.axis);
    const double fb = recoil::dpdomega(p, p.axis) - recoil::dpdomega(p, -p.axis);

    // CSV rows sample the phi = 0 meridian of the pair-axis frame
    std::vector<double> thetas, values;
    for (int i = 0; i < o.ntheta; ++i) {
        const double theta = cn::pi * static_cast<double>(i) / static_cast<double>(o.ntheta - 1);
        thetas.push_back(theta);
        values.push_back(recoil::dpdomega(p, recoil::direction(frame, theta, 0.0)));
    }

    std::string s;
    if (o.format == "csv") {
        meta_comment(s, "emission", c, L);
        s += "# x=" + format_double(o.x) + "\n";
        s += "# ntheta=" + std::to_string(o.ntheta) + "\n";
        s += "# quad_order=" + std::to_string(o.quad_order) + "\n";
        s += "theta_rad,cos_theta,dpdomega_per_sr\n";
        for (int i = 0; i < o.ntheta; ++i) {
            const std::size_t idx = static_cast<std::size_t>(i);
            s += format_double(thetas[idx]) + "," + format_double(std::cos(thetas[idx])) +
                 "," + format_double(values[idx]) + "\n";
        }
        s += "# sphere_integral=" + format_double(dist.sphere_integral) + "\n";
        s += "# total_momentum_kg_m_s=" + format_double(dist.total_momentum.x) + "," +
             format_double(dist.total_momentum.y) + "," +
             format_double(dist.total_momentum.z) + "\n";
        s += "# fb_differential=" + format_double(fb) + "\n";
    } else {
        s = "{" + meta_json("emission", c, L);
        s += ",\"x\":" + format_double(o.x);
        s += ",\"ntheta\":" + std::to_string(o.ntheta);
        s += ",\"quad_order\":" + std::to_string(o.quad_order) + "}";
        s += ",\"sphere_integral\":" + format_double(dist.sphere_integral);
        s += ",\"total_momentum_kg_m_s\":[" + format_double(dist.total_momentum.x) + "," +
             format_double(dist.total_momentum.y) + "," +
             format_double(dist.total_momentum.z) + "]";
        s += ",\"fb_differential\":" + format_double(fb);
        s += ",\"rows\":[";
        for (int i = 0; i < o.ntheta; ++i) {
            const std::size_t idx = static_cast<std::size_t>(i);
            if (i) s += ",";
            s += "{\"theta_rad\":" + format_double(thetas[idx]) +
                 ",\"cos_theta\":" + format_double(std::cos(thetas[idx])) +
                 ",\"dpdomega_per_sr\":" + format_double(values[idx]) + "}";
        }
        s += "]}\n";
    }
    deliver(s, o.out);
    return 0;
}

struct VerifyOpts {
    bool fast = false;
    bool oracle = false;
    std::uint64_t seed = 1;
};

int run_verify(const CommonOpts& c, const VerifyOpts& o) {
    const recoil::SpeciesRegistry reg = recoil::load_species(c.species_file);
    int total = 0;
    int failures = 0;
    const recoil::CheckSink sink = [&](const recoil::CheckResult& r) {
        ++total;
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name
                  << " measured=" << format_double(r.measured)
                  << " tol=" << format_double(r.tolerance);
        if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
        std::cout << "\n";
    };
    const bool run_fast = o.fast || !o.oracle;
    const bool run_oracle = o.oracle || !o.fast;
    if (run_fast) failures += recoil::verify_fast(reg, o.seed, sink);
    if (run_oracle) failures += recoil::verify_oracle(reg, o.seed, sink);
    std::cout << "verify: " << (total - failures) << "/" << total << " checks passed\n";
    return failures > 0 ? 3 : 0;
}

int run_species_list(const CommonOpts& c) {
    const recoil::SpeciesRegistry reg = recoil::load_species(c.species_file);
    for (const auto& [label, s] : reg) {
        std::cout << label << " lambda_nm=" << format_double(2.0 * cn::pi * cn::c0 / s.omega * 1e9)
                  << " omega_rad_s=" << format_double(s.omega)
                  << " gamma_rad_s=" << format_double(s.gamma)
                  << " k_1_m=" << format_double(s.k())
                  << " mu_Cm=" << format_double(s.mu_mag()) << " dipole_axis="
                  << axis_string(s) << " source=\"" << s.source << "\"\n";
    }
    return 0;
}

void add_common(CLI::App* sub, CommonOpts& c) {
    sub->add_option("--species-file", c.species_file, "species JSON file")
        ->capture_default_str();
    sub->add_option("--excited", c.excited, "label of the initially excited species")
        ->capture_default_str();
    sub->add_option("--ground", c.ground, "label of the ground-state species")
        ->capture_default_str();
    sub->add_option("--orientation", c.orientation, "dipole orientation handling")
        ->check(CLI::IsMember({"fixed", "isotropic"}))
        ->capture_default_str();
    sub->add_option("--dipole-axis", c.dipole_axis,
                    "override the dipole axis of both species (X,Y,Z)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"resonant-pair recoil, vacuum momentum, and emission calculator"};
    app.require_subcommand(1);
    app.set_config("--config", "", "INI config file; command-line flags take precedence");

    CommonOpts c_scan, c_budget, c_emission, c_verify, c_species;
    ScanOpts scan_o;
    BudgetOpts budget_o;
    EmissionOpts emission_o;
    VerifyOpts verify_o;

    CLI::App* scan = app.add_subcommand(
        "scan", "force, vacuum momentum, and directionality over a separation grid");
    add_common(scan, c_scan);
    scan->add_option("--xmin", scan_o.xmin, "lower end of the k_A R grid")
        ->capture_default_str();
    scan->add_option("--xmax", scan_o.xmax, "upper end of the k_A R grid")
        ->capture_default_str();
    scan->add_option("--samples", scan_o.samples, "grid size")->capture_default_str();
    scan->add_option("--format", scan_o.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    scan->add_option("--out", scan_o.out, "output path (default stdout)");

    CLI::App* budget =
        app.add_subcommand("budget", "one-photon emission probability channels at one x");
    add_common(budget, c_budget);
    budget->add_option("--x", budget_o.x, "dimensionless separation k_A R")
        ->capture_default_str();
    budget->add_option("--out", budget_o.out, "output path (default stdout)");

    CLI::App* emission = app.add_subcommand(
        "emission", "angular emission density, sphere integral, and emitted momentum");
    add_common(emission, c_emission);
    emission->add_option("--x", emission_o.x, "dimensionless separation k_A R")
        ->capture_default_str();
    emission->add_option("--ntheta", emission_o.ntheta, "polar samples on the phi=0 meridian")
        ->capture_default_str();
    emission->add_option("--quad-order", emission_o.quad_order, "sphere quadrature order")
        ->capture_default_str();
    emission->add_option("--format", emission_o.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    emission->add_option("--out", emission_o.out, "output path (default stdout)");

    CLI::App* verify =
        app.add_subcommand("verify", "numerical verification suites; exit 3 on failure");
    add_common(verify, c_verify);
    verify->add_flag("--fast", verify_o.fast, "closed-form invariant suite only");
    verify->add_flag("--oracle", verify_o.oracle, "finite-box mode-sum suite only");
    verify->add_option("--seed", verify_o.seed, "seed for the sampled checks")
        ->capture_default_str();

    CLI::App* species = app.add_subcommand("species", "species registry utilities");
    species->require_subcommand(1);
    CLI::App* species_list = species->add_subcommand("list", "print the species registry");
    add_common(species_list, c_species);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error("cli", e.what());
        return 1;
    }

    try {
        if (scan->parsed()) return run_scan(c_scan, scan_o);
        if (budget->parsed()) return run_budget(c_budget, budget_o);
        if (emission->parsed()) return run_emission(c_emission, emission_o);
        if (verify->parsed()) return run_verify(c_verify, verify_o);
        if (species->parsed() && species_list->parsed()) return run_species_list(c_species);
    } catch (const recoil::ValidationError& e) {
        emit_error("validation", e.what());
        return 1;
    } catch (const recoil::IoError& e) {
        emit_error("io", e.what());
        return 2;
    } catch (const recoil::VerificationError& e) {
        emit_error("verification", e.what());
        return 3;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return 1;
    }
    return 0;
}
