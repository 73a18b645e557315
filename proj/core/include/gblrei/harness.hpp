#ifndef GBLREI_HARNESS_HPP
#define GBLREI_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gblrei/gb_core.hpp"
#include "gblrei/initial_data.hpp"
#include "gblrei/oracle.hpp"

namespace gblrei {

enum class InitKind { soliton, rough };
enum class ReferenceChoice { exact_soliton, fine_psi1, if_rk };

struct ExperimentConfig {
    InitKind init = InitKind::soliton;
    SolitonParams soliton{};
    double theta = 2.0;
    std::uint64_t seed = 0;
    double theta_velocity = kUnsetVelocity;  // defaults to theta - 2
    bool zero_velocity = false;

    double half_length = 80.0;
    int num_points = 10240;
    double final_time = 1.0;
    double r = 2.0;
    std::vector<double> taus;

    ReferenceChoice reference = ReferenceChoice::exact_soliton;
    double tau_ref = 0.0;  // 0 -> min(taus)/20, rounded to divide final_time
    bool dealias = false;
    std::string out = "error_table.csv";

    static constexpr double kUnsetVelocity = -1e30;

    RoughParams rough_params() const;
    void validate() const;
};

struct ErrorRow {
    double tau;
    double error_hr;        // NaN if the run diverged
    double pairwise_order;  // NaN for the first and failed rows
    bool failed;
};

struct ErrorTable {
    std::vector<ErrorRow> rows;
    double slope;  // least-squares order over successful rows, NaN if < 2
    std::vector<std::string> metadata;  // config echo, one key=value per entry
};

// || z_num - z_ref ||_r + || zt_num - zt_ref ||_{r-2}
double error_metric(const GBState& num, const GBState& ref, double r);

struct OrderFit {
    double slope;
    std::vector<double> pairwise;
};
OrderFit estimate_order(const std::vector<double>& taus,
                        const std::vector<double>& errors);

ErrorTable run_convergence(const ExperimentConfig& cfg);

void write_error_table(const ErrorTable& table, std::ostream& os);

// Flat key=value config text, '#' comments; same keys as the CLI flags.
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

// Random complex spectrum with zero mean mode and coefficients damped by
// e^{-decay |k|}; deterministic per seed. Shared by verification and tests.
Spectrum random_zero_mean_spectrum(const TorusGrid& grid, std::uint64_t seed,
                                   double decay = 0.0);

struct VerifyResult {
    std::string name;
    double max_discrepancy;
    double tolerance;
    bool passed;
};

// The oracle-equivalence self check behind `gb-lrei verify`.
std::vector<VerifyResult> verify_identities();

}  // namespace gblrei

#endif
