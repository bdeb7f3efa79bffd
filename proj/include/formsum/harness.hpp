#pragma once

#include "formsum/arith.hpp"
#include "formsum/lattice2d.hpp"
#include "formsum/numfield.hpp"
#include "formsum/region.hpp"
#include "formsum/sieve.hpp"

#include <array>
#include <memory>
#include <string>
#include <vector>

namespace formsum::harness {

struct ScenarioConfig {
    std::vector<intpoly::BinaryForm> forms{};
    std::vector<arith::IdealFn> functions{};
    std::vector<std::unique_ptr<numfield::NumberField>> fields{};
    region::Region region;
    lattice2d::Lattice2 lattice;
    int64_t w = 11;
    double omega = 0.3;
    double eta = 2.0 / 3.0;
    double gamma = 1.0 / 3.0;
    double c1 = 1.0;
    double c2 = 2.0;
    double epsilon = 0.1;
    // Lemma-suite knobs.
    int64_t lemma_box = 50;
    int64_t lemma_norm_cap = 200;
    std::vector<int64_t> lemma_x_ladder = {100, 1000, 10000};
    double lemma_M = 2.0;
    double est_S = 100.0;
    double est_T = 1000.0;
    int64_t est_cap = 20000;
    std::string out_path{};
    std::string out_format{};  // "json" | "csv"

    std::vector<std::reference_wrapper<const numfield::NumberField>> field_refs() const;
    std::vector<int> degrees() const;
};

ScenarioConfig parse_scenario(const std::string& json_text);
ScenarioConfig load_scenario(const std::string& path);

// Region scaled by k about the origin (volume scales by k^2).
region::Region scale_region(const region::Region& R, double k);

// eps0 = max{1 + 4/c1, 4(5 + 3 max eps_i)/c1} * sum d_i eps_i
double epsilon_zero(double c1, const std::vector<int>& degrees,
                    const std::vector<double>& epsilons);

struct Report {
    double V = 0;
    double lhs = 0;
    double main_term = 0;
    double secondary_term = 0;
    double ratio = 0;
    std::array<double, 4> per_case{};
    int64_t points = 0;
    double z = 0;
    int64_t q_G = 1;
    int64_t w = 0;
    double k_r = 0;
    double lambda_G = 0;
    double eps0 = 0;
    double runtime_seconds = 0;  // excluded from determinism comparisons
};

// Throws ConfigError on any violated hypothesis, before enumeration.
void validate_scenario(const ScenarioConfig& cfg);

Report run_bound_check(const ScenarioConfig& cfg, int workers = 1);

// One report per target volume; the configured region is rescaled per rung.
std::vector<Report> run_ladder(const ScenarioConfig& cfg, const std::vector<double>& volumes,
                               int workers = 1);

struct Check {
    std::string name;
    bool pass;
    std::string details;
};
struct SuiteReport {
    std::string suite;
    bool pass = true;
    std::vector<Check> checks;
    double runtime_seconds = 0;
};

// which: L21 | L22 | L23 | L24 | L32 | SIEVE
SuiteReport run_lemma_suite(const std::string& which, const ScenarioConfig& cfg);

std::string report_json(const Report& r);
std::string ladder_json(const std::vector<Report>& rs);
std::string ladder_csv(const std::vector<Report>& rs);
std::string suite_json(const SuiteReport& r);

void write_file(const std::string& path, const std::string& content);

}  // namespace formsum::harness
