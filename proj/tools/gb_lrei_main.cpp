// gb-lrei: convergence studies and self checks for the first-order
// low-regularity exponential integrator for the "good" Boussinesq equation.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "gblrei/harness.hpp"

namespace {

using namespace gblrei;

struct Overrides {
    std::string init, reference, taus, out;
    double omega = 0, zeta0 = 0, theta = 0, theta_velocity = 0, half_length = 0,
           final_time = 0, r = 0, tau_ref = 0, tau = 0.1;
    int vsign = 0, num_points = 0;
    std::uint64_t seed = 0;
    bool dealias = false;
};

void add_common_options(CLI::App* cmd, std::string& config_path, Overrides& ov) {
    cmd->add_option("--config", config_path, "path to a key=value config file");
    cmd->add_option("--init", ov.init, "initial data kind: soliton|rough");
    cmd->add_option("--omega", ov.omega, "soliton frequency in (0,1]");
    cmd->add_option("--zeta0", ov.zeta0, "soliton shift");
    cmd->add_option("--vsign", ov.vsign, "soliton velocity sign: +1|-1");
    cmd->add_option("--theta", ov.theta, "rough data nominal regularity");
    cmd->add_option("--seed", ov.seed, "rough data seed");
    cmd->add_option("--theta-velocity", ov.theta_velocity,
                    "rough z_t regularity (default theta-2)");
    cmd->add_option("--half-length", ov.half_length, "domain half length");
    cmd->add_option("--M", ov.num_points, "number of grid points (even)");
    cmd->add_option("--T", ov.final_time, "final time");
    cmd->add_option("--r", ov.r, "Sobolev exponent of the error metric");
    cmd->add_option("--taus", ov.taus, "comma-separated step sizes");
    cmd->add_option("--reference", ov.reference, "exact|fine-psi1|if-rk");
    cmd->add_option("--tau-ref", ov.tau_ref, "reference step size");
    cmd->add_flag("--dealias", ov.dealias, "enable the 2/3-rule dealiasing");
    cmd->add_option("--out", ov.out, "output CSV path");
}

ExperimentConfig assemble_config(const CLI::App* cmd, const std::string& config_path,
                                 const Overrides& ov) {
    ExperimentConfig cfg;
    if (!config_path.empty()) cfg = parse_config_file(config_path);

    auto seen = [&](const std::string& flag) { return cmd->count(flag) > 0; };
    if (seen("--init")) {
        if (ov.init == "soliton") cfg.init = InitKind::soliton;
        else if (ov.init == "rough") cfg.init = InitKind::rough;
        else throw InvalidInputError("--init must be soliton or rough");
    }
    if (seen("--omega")) cfg.soliton.omega = ov.omega;
    if (seen("--zeta0")) cfg.soliton.zeta0 = ov.zeta0;
    if (seen("--vsign")) cfg.soliton.velocity_sign = ov.vsign;
    if (seen("--theta")) cfg.theta = ov.theta;
    if (seen("--seed")) cfg.seed = ov.seed;
    if (seen("--theta-velocity")) cfg.theta_velocity = ov.theta_velocity;
    if (seen("--half-length")) cfg.half_length = ov.half_length;
    if (seen("--M")) cfg.num_points = ov.num_points;
    if (seen("--T")) cfg.final_time = ov.final_time;
    if (seen("--r")) cfg.r = ov.r;
    if (seen("--taus")) {
        cfg.taus.clear();
        std::stringstream ss(ov.taus);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) cfg.taus.push_back(std::stod(item));
    }
    if (seen("--reference")) {
        if (ov.reference == "exact") cfg.reference = ReferenceChoice::exact_soliton;
        else if (ov.reference == "fine-psi1") cfg.reference = ReferenceChoice::fine_psi1;
        else if (ov.reference == "if-rk") cfg.reference = ReferenceChoice::if_rk;
        else throw InvalidInputError("--reference must be exact|fine-psi1|if-rk");
    }
    if (seen("--tau-ref")) cfg.tau_ref = ov.tau_ref;
    if (seen("--dealias")) cfg.dealias = true;
    if (seen("--out")) cfg.out = ov.out;
    return cfg;
}

int run_converge(const ExperimentConfig& cfg) {
    const ErrorTable table = run_convergence(cfg);
    std::ofstream out(cfg.out);
    if (!out) {
        std::cerr << "error: cannot open output file '" << cfg.out << "'\n";
        return 1;
    }
    write_error_table(table, out);

    bool any_ok = false;
    for (const auto& row : table.rows) any_ok = any_ok || !row.failed;
    std::cout << "wrote " << cfg.out << " (" << table.rows.size()
              << " rows, slope=" << table.slope << ")\n";
    return any_ok ? 0 : 2;
}

int run_verify() {
    bool all_ok = true;
    for (const auto& res : verify_identities()) {
        std::printf("%-36s %s  (max %.3e, tol %.0e)\n", res.name.c_str(),
                    res.passed ? "PASS" : "FAIL", res.max_discrepancy, res.tolerance);
        all_ok = all_ok && res.passed;
    }
    return all_ok ? 0 : 3;
}

void dump_spectrum(const char* name, const Spectrum& s, std::ostream& os) {
    os << "## " << name << "\n";
    const auto& g = s.grid();
    for (int k = g.min_mode(); k <= g.max_mode(); ++k) {
        const Complex c = s.at(k);
        if (std::abs(c) < 1e-14) continue;
        char buf[96];
        std::snprintf(buf, sizeof(buf), "%6d  % .16e  % .16e\n", k, c.real(), c.imag());
        os << buf;
    }
}

int run_step_dump(const ExperimentConfig& cfg, double tau) {
    const TorusGrid grid(cfg.half_length, cfg.num_points);
    const GBState initial = cfg.init == InitKind::soliton
                                ? soliton_state(cfg.soliton, 0.0, grid)
                                : rough_state(cfg.rough_params(), grid);
    const EvolutionState s0 = homogenize(initial);
    const StepOptions opts{cfg.dealias};
    const StepTerms terms = eval_step_terms(s0.u, tau, opts);
    const EvolutionState s1 = step(s0, tau, opts);

    std::ostream& os = std::cout;
    os << "# one step of Psi_1^tau, tau=" << tau << ", M=" << cfg.num_points
       << ", a=" << s0.a << ", b=" << s0.b << "\n";
    os << "# columns: mode  re  im (entries below 1e-14 omitted)\n";
    dump_spectrum("u", s0.u, os);
    dump_spectrum("I1", terms.i1, os);
    dump_spectrum("I2", terms.i2, os);
    dump_spectrum("T0", terms.t0, os);
    dump_spectrum("L1", terms.l1, os);
    dump_spectrum("L2", terms.l2, os);
    dump_spectrum("L3", terms.l3, os);
    dump_spectrum("L4", terms.l4, os);
    dump_spectrum("u_next", s1.u, os);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"first-order low-regularity exponential integrator for the "
                 "\"good\" Boussinesq equation"};
    app.require_subcommand(1);

    std::string config_path;
    Overrides ov;

    CLI::App* converge = app.add_subcommand("converge", "run a convergence study");
    add_common_options(converge, config_path, ov);

    CLI::App* verify =
        app.add_subcommand("verify", "check closed forms against the brute-force oracle");

    CLI::App* step_cmd = app.add_subcommand("step", "inspect a single step");
    add_common_options(step_cmd, config_path, ov);
    bool dump = false;
    step_cmd->add_flag("--dump", dump, "emit term-by-term spectra");
    step_cmd->add_option("--tau", ov.tau, "step size for the dumped step");

    CLI11_PARSE(app, argc, argv);

    try {
        if (converge->parsed())
            return run_converge(assemble_config(converge, config_path, ov));
        if (verify->parsed()) return run_verify();
        if (step_cmd->parsed())
            return run_step_dump(assemble_config(step_cmd, config_path, ov), ov.tau);
    } catch (const DivergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
