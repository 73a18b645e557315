#include "gblrei/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

namespace gblrei {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt16(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16g", v);
    return buf;
}

}  // namespace

RoughParams ExperimentConfig::rough_params() const {
    RoughParams p(theta, seed);
    if (theta_velocity != kUnsetVelocity) p.theta_velocity = theta_velocity;
    p.zero_velocity = zero_velocity;
    return p;
}

void ExperimentConfig::validate() const {
    if (taus.empty()) throw InvalidInputError("config: taus must not be empty");
    for (double tau : taus) {
        if (!(tau > 0.0)) throw InvalidInputError("config: taus must be positive");
        const double n = std::round(final_time / tau);
        if (std::abs(n * tau - final_time) > 1e-9 * std::max(1.0, final_time))
            throw InvalidInputError("config: every tau must divide T");
    }
    if (!(final_time > 0.0)) throw InvalidInputError("config: T must be positive");
    if (init == InitKind::rough && reference == ReferenceChoice::exact_soliton)
        throw InvalidInputError("config: exact reference requires soliton initial data");
}

double error_metric(const GBState& num, const GBState& ref, double r) {
    if (num.z.grid() != ref.z.grid())
        throw InvalidInputError("error_metric: grid mismatch");
    if (std::abs(num.t - ref.t) > 1e-9 * std::max(1.0, std::abs(ref.t)))
        throw InvalidInputError("error_metric: time mismatch");
    const Spectrum dz = to_spectrum(num.z) - to_spectrum(ref.z);
    const Spectrum dzt = to_spectrum(num.z_t) - to_spectrum(ref.z_t);
    return sobolev_norm(dz, r) + sobolev_norm(dzt, r - 2.0);
}

OrderFit estimate_order(const std::vector<double>& taus,
                        const std::vector<double>& errors) {
    if (taus.size() != errors.size() || taus.size() < 2)
        throw InvalidInputError("estimate_order: need >= 2 matching (tau, error) pairs");
    bool increasing = taus[1] > taus[0];
    for (std::size_t i = 0; i < taus.size(); ++i) {
        if (!(taus[i] > 0.0) || !(errors[i] > 0.0))
            throw InvalidInputError("estimate_order: inputs must be positive");
        if (i > 0 && (increasing ? taus[i] <= taus[i - 1] : taus[i] >= taus[i - 1]))
            throw InvalidInputError("estimate_order: taus must be strictly monotone");
    }

    // least squares fit of log(error) against log(tau)
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double n = static_cast<double>(taus.size());
    for (std::size_t i = 0; i < taus.size(); ++i) {
        const double x = std::log(taus[i]);
        const double y = std::log(errors[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    OrderFit fit;
    fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    for (std::size_t i = 0; i + 1 < taus.size(); ++i)
        fit.pairwise.push_back(std::log(errors[i] / errors[i + 1]) /
                               std::log(taus[i] / taus[i + 1]));
    return fit;
}

namespace {

GBState build_initial(const ExperimentConfig& cfg, const TorusGrid& grid) {
    if (cfg.init == InitKind::soliton)
        return soliton_state(cfg.soliton, 0.0, grid);
    return rough_state(cfg.rough_params(), grid);
}

GBState build_reference(const ExperimentConfig& cfg, const TorusGrid& grid,
                        const EvolutionState& s0) {
    if (cfg.reference == ReferenceChoice::exact_soliton)
        return soliton_state(cfg.soliton, cfg.final_time, grid);

    double tau_ref = cfg.tau_ref;
    if (tau_ref <= 0.0)
        tau_ref = *std::min_element(cfg.taus.begin(), cfg.taus.end()) / 20.0;
    // round to an exact divisor of T
    const double n_ref = std::ceil(cfg.final_time / tau_ref);
    tau_ref = cfg.final_time / n_ref;

    const auto kind = cfg.reference == ReferenceChoice::fine_psi1
                          ? oracle::ReferenceKind::fine_step_psi1
                          : oracle::ReferenceKind::integrating_factor_rk4;
    return recover_state(oracle::reference_evolve(s0, cfg.final_time, tau_ref, kind));
}

std::vector<std::string> echo_config(const ExperimentConfig& cfg) {
    std::vector<std::string> meta;
    auto add = [&](const std::string& k, const std::string& v) {
        meta.push_back(k + "=" + v);
    };
    add("init", cfg.init == InitKind::soliton ? "soliton" : "rough");
    if (cfg.init == InitKind::soliton) {
        add("omega", fmt16(cfg.soliton.omega));
        add("zeta0", fmt16(cfg.soliton.zeta0));
        add("vsign", std::to_string(cfg.soliton.velocity_sign));
    } else {
        add("theta", fmt16(cfg.theta));
        add("seed", std::to_string(cfg.seed));
        add("theta_velocity", fmt16(cfg.rough_params().theta_velocity));
        add("zero_velocity", cfg.zero_velocity ? "1" : "0");
    }
    add("half_length", fmt16(cfg.half_length));
    add("M", std::to_string(cfg.num_points));
    add("T", fmt16(cfg.final_time));
    add("r", fmt16(cfg.r));
    std::string taus;
    for (std::size_t i = 0; i < cfg.taus.size(); ++i)
        taus += (i ? "," : "") + fmt16(cfg.taus[i]);
    add("taus", taus);
    switch (cfg.reference) {
        case ReferenceChoice::exact_soliton: add("reference", "exact"); break;
        case ReferenceChoice::fine_psi1: add("reference", "fine-psi1"); break;
        case ReferenceChoice::if_rk: add("reference", "if-rk"); break;
    }
    add("tau_ref", fmt16(cfg.tau_ref));
    add("dealias", cfg.dealias ? "1" : "0");
    return meta;
}

}  // namespace

ErrorTable run_convergence(const ExperimentConfig& cfg) {
    cfg.validate();
    const TorusGrid grid(cfg.half_length, cfg.num_points);
    const GBState initial = build_initial(cfg, grid);
    const EvolutionState s0 = homogenize(initial);
    const GBState reference = build_reference(cfg, grid, s0);

    std::vector<double> taus = cfg.taus;
    std::sort(taus.begin(), taus.end(), std::greater<>());

    ErrorTable table;
    table.metadata = echo_config(cfg);
    table.slope = kNaN;
    const StepOptions opts{cfg.dealias};

    for (double tau : taus) {
        const auto n_steps =
            static_cast<std::size_t>(std::llround(cfg.final_time / tau));
        ErrorRow row{tau, kNaN, kNaN, false};
        try {
            const EvolutionState sn = evolve(s0, tau, n_steps, opts);
            row.error_hr = error_metric(recover_state(sn), reference, cfg.r);
        } catch (const DivergenceError&) {
            row.failed = true;
        }
        table.rows.push_back(row);
    }

    // fit over the successful rows
    std::vector<double> ok_taus, ok_errors;
    for (const auto& row : table.rows) {
        if (!row.failed && row.error_hr > 0.0) {
            ok_taus.push_back(row.tau);
            ok_errors.push_back(row.error_hr);
        }
    }
    if (ok_taus.size() >= 2) {
        const OrderFit fit = estimate_order(ok_taus, ok_errors);
        table.slope = fit.slope;
        std::size_t j = 0;
        for (std::size_t i = 1; i < table.rows.size(); ++i) {
            if (table.rows[i].failed || table.rows[i - 1].failed) continue;
            if (j < fit.pairwise.size()) table.rows[i].pairwise_order = fit.pairwise[j++];
        }
    }
    return table;
}

void write_error_table(const ErrorTable& table, std::ostream& os) {
    for (const auto& m : table.metadata) os << "# " << m << "\n";
    os << "# slope=" << fmt16(table.slope) << "\n";
    os << "tau,error_hr,pairwise_order\n";
    for (const auto& row : table.rows) {
        os << fmt16(row.tau) << ","
           << (row.failed ? "failed" : fmt16(row.error_hr)) << ","
           << fmt16(row.pairwise_order) << "\n";
    }
}

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<double> parse_tau_list(const std::string& s) {
    std::vector<double> taus;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) taus.push_back(std::stod(item));
    }
    return taus;
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
    ExperimentConfig cfg;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw InvalidInputError("config line " + std::to_string(lineno) +
                                    ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        try {
            if (key == "init") {
                if (val == "soliton") cfg.init = InitKind::soliton;
                else if (val == "rough") cfg.init = InitKind::rough;
                else throw InvalidInputError("config: init must be soliton or rough");
            } else if (key == "omega") cfg.soliton.omega = std::stod(val);
            else if (key == "zeta0") cfg.soliton.zeta0 = std::stod(val);
            else if (key == "vsign") cfg.soliton.velocity_sign = std::stoi(val);
            else if (key == "theta") cfg.theta = std::stod(val);
            else if (key == "seed") cfg.seed = std::stoull(val);
            else if (key == "theta_velocity") cfg.theta_velocity = std::stod(val);
            else if (key == "zero_velocity") cfg.zero_velocity = std::stoi(val) != 0;
            else if (key == "half_length") cfg.half_length = std::stod(val);
            else if (key == "M") cfg.num_points = std::stoi(val);
            else if (key == "T") cfg.final_time = std::stod(val);
            else if (key == "r") cfg.r = std::stod(val);
            else if (key == "taus") cfg.taus = parse_tau_list(val);
            else if (key == "reference") {
                if (val == "exact") cfg.reference = ReferenceChoice::exact_soliton;
                else if (val == "fine-psi1") cfg.reference = ReferenceChoice::fine_psi1;
                else if (val == "if-rk") cfg.reference = ReferenceChoice::if_rk;
                else throw InvalidInputError("config: unknown reference '" + val + "'");
            } else if (key == "tau_ref") cfg.tau_ref = std::stod(val);
            else if (key == "dealias") cfg.dealias = std::stoi(val) != 0;
            else if (key == "out") cfg.out = val;
            else throw InvalidInputError("config: unknown key '" + key + "'");
        } catch (const std::invalid_argument&) {
            throw InvalidInputError("config line " + std::to_string(lineno) +
                                    ": bad value for key '" + key + "'");
        }
    }
    return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("config: cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

Spectrum random_zero_mean_spectrum(const TorusGrid& grid, std::uint64_t seed,
                                   double decay) {
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL);
    auto u01 = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    Spectrum f(grid);
    for (int k = grid.min_mode(); k <= grid.max_mode(); ++k) {
        if (k == 0) continue;
        const double damp = std::exp(-decay * std::abs(k));
        f.at(k) = damp * Complex(2.0 * u01() - 1.0, 2.0 * u01() - 1.0);
    }
    return f;
}

std::vector<VerifyResult> verify_identities() {
    struct Check {
        std::string name;
        double tol;
        double worst = 0.0;
    };
    std::vector<Check> checks = {
        {"eval_I1 == oracle_I1", 1e-10},
        {"eval_I2 == oracle_I2", 1e-10},
        {"eval_T0 == oracle_T0", 1e-10},
        {"L1+L2 == oracle_T1 - oracle_P1", 1e-10},
        {"L3+L4 == oracle_T3 - oracle_P2", 1e-10},
        {"oracle_T1 == oracle_T2", 1e-11},
        {"oracle_T0 + sum T_j == oracle_I0", 1e-11},
    };

    auto rel = [](const Spectrum& a, const Spectrum& b) {
        const double scale =
            std::max({sobolev_norm(a, 0.0), sobolev_norm(b, 0.0), 1e-300});
        return sobolev_norm(a - b, 0.0) / scale;
    };

    std::uint64_t seed = 1;
    for (int m : {16, 32, 64}) {
        const TorusGrid grid(M_PI, m);
        for (double tau : {1e-1, 1e-2, 1e-3}) {
            const Spectrum f = random_zero_mean_spectrum(grid, seed++);
            const StepTerms t = eval_step_terms(f, tau);
            checks[0].worst = std::max(checks[0].worst, rel(t.i1, oracle::oracle_I(1, f, tau)));
            checks[1].worst = std::max(checks[1].worst, rel(t.i2, oracle::oracle_I(2, f, tau)));
            checks[2].worst = std::max(checks[2].worst, rel(t.t0, oracle::oracle_T(0, f, tau)));
            const Spectrum t1 = oracle::oracle_T(1, f, tau);
            const Spectrum t2 = oracle::oracle_T(2, f, tau);
            const Spectrum t3 = oracle::oracle_T(3, f, tau);
            const Spectrum t0 = oracle::oracle_T(0, f, tau);
            checks[3].worst = std::max(
                checks[3].worst, rel(t.l1 + t.l2, t1 - oracle::oracle_P(1, f, tau)));
            checks[4].worst = std::max(
                checks[4].worst, rel(t.l3 + t.l4, t3 - oracle::oracle_P(2, f, tau)));
            checks[5].worst = std::max(checks[5].worst, rel(t1, t2));
            Spectrum total = t0 + t1;
            total += t2;
            total += t3;
            checks[6].worst =
                std::max(checks[6].worst, rel(total, oracle::oracle_I(0, f, tau)));
        }
    }

    std::vector<VerifyResult> results;
    for (const auto& c : checks)
        results.push_back({c.name, c.worst, c.tol, c.worst <= c.tol});
    return results;
}

}  // namespace gblrei
