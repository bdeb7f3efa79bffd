#include "formsum/harness.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>

namespace {

using namespace formsum;

int cmd_run(const std::string& config_path, std::string out_path, const std::string& ladder,
            int workers) {
    harness::ScenarioConfig cfg = harness::load_scenario(config_path);
    if (out_path.empty()) out_path = cfg.out_path;

    std::vector<harness::Report> reports;
    if (!ladder.empty()) {
        std::vector<double> volumes;
        std::stringstream ss(ladder);
        std::string item;
        while (std::getline(ss, item, ',')) volumes.push_back(std::stod(item));
        if (volumes.empty()) throw ConfigError("--ladder needs at least one volume");
        reports = harness::run_ladder(cfg, volumes, workers);
    } else {
        reports.push_back(harness::run_bound_check(cfg, workers));
    }

    for (const auto& r : reports) {
        std::printf("V=%.6g lhs=%.6g main=%.6g secondary=%.6g ratio=%.6g points=%lld\n", r.V,
                    r.lhs, r.main_term, r.secondary_term, r.ratio,
                    static_cast<long long>(r.points));
        std::fprintf(stderr, "  runtime %.2fs (w=%lld, z=%.3g)\n", r.runtime_seconds,
                     static_cast<long long>(r.w), r.z);
    }

    if (!out_path.empty()) {
        bool csv = cfg.out_format == "csv" ||
                   (out_path.size() > 4 && out_path.substr(out_path.size() - 4) == ".csv");
        std::string body = csv               ? harness::ladder_csv(reports)
                           : reports.size() == 1 ? harness::report_json(reports[0])
                                                 : harness::ladder_json(reports);
        harness::write_file(out_path, body);
    }

    // Ladder check: ratio drift bounded by a factor 2 between rungs.
    for (size_t i = 1; i < reports.size(); ++i) {
        double a = reports[i - 1].ratio, b = reports[i].ratio;
        if (!(std::isfinite(a) && std::isfinite(b)) || a <= 0 || b <= 0 ||
            std::max(a / b, b / a) > 2.0) {
            std::fprintf(stderr, "ratio drift exceeds factor 2 between rungs %zu and %zu\n",
                         i - 1, i);
            return 1;
        }
    }
    for (const auto& r : reports)
        if (!std::isfinite(r.lhs) || !std::isfinite(r.ratio)) return 1;
    return 0;
}

int cmd_lemma(const std::string& which, const std::string& config_path,
              const std::string& out_path) {
    harness::ScenarioConfig cfg = harness::load_scenario(config_path);
    harness::SuiteReport rep = harness::run_lemma_suite(which, cfg);
    for (const auto& c : rep.checks)
        std::printf("%s %s%s%s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                    c.details.empty() ? "" : " -- ", c.details.c_str());
    std::fprintf(stderr, "%s: %s (%.2fs)\n", rep.suite.c_str(), rep.pass ? "pass" : "FAIL",
                 rep.runtime_seconds);
    if (!out_path.empty()) harness::write_file(out_path, harness::suite_json(rep));
    return rep.pass ? 0 : 1;
}

int cmd_factor(const std::string& config_path, const std::string& point) {
    harness::ScenarioConfig cfg = harness::load_scenario(config_path);
    auto comma = point.find(',');
    if (comma == std::string::npos) throw ConfigError("--point expects s,t");
    int64_t s = std::stoll(point.substr(0, comma));
    int64_t t = std::stoll(point.substr(comma + 1));

    auto W = arith::WModulus::from_w(cfg.w);
    nlohmann::json out;
    out["s"] = s;
    out["t"] = t;
    out["fields"] = nlohmann::json::array();
    for (size_t i = 0; i < cfg.fields.size(); ++i) {
        const auto& K = *cfg.fields[i];
        Int excluded = Int(cfg.lattice.det()) * W.W * abs(K.bad_modulus());
        auto fac = numfield::factor_principal(K, s, t, excluded);
        nlohmann::json fj;
        fj["form"] = cfg.forms[i].str();
        fj["norm"] = fac.norm().str();
        fj["value"] = eval_form(cfg.forms[i], s, t).str();
        fj["in_P"] = numfield::in_P(fac);
        fj["in_P_circ"] = numfield::in_P_circ(fac);
        fj["factors"] = nlohmann::json::array();
        for (const auto& [P, e] : fac.factors())
            fj["factors"].push_back(
                {{"p", P.p}, {"f", P.f}, {"root", P.root}, {"exp", e}});
        out["fields"].push_back(fj);
    }
    std::printf("%s\n", out.dump(2).c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary-form ideal-function average verifier"};
    app.require_subcommand(1);

    std::string config_path, out_path, ladder, which, point;
    int workers = 1;

    auto* run = app.add_subcommand("run", "bound check on a scenario config");
    run->add_option("config", config_path, "scenario JSON")->required();
    run->add_option("--out", out_path, "report output path (.json or .csv)");
    run->add_option("--ladder", ladder, "comma-separated target volumes");
    run->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);

    auto* lemma = app.add_subcommand("lemma", "run a lemma verification suite");
    lemma->add_option("which", which, "L21|L22|L23|L24|L32|SIEVE")->required();
    lemma->add_option("config", config_path, "scenario JSON")->required();
    lemma->add_option("--out", out_path, "suite report output path");

    auto* factor = app.add_subcommand("factor", "factor the principal values at a point");
    factor->add_option("config", config_path, "scenario JSON")->required();
    factor->add_option("--point", point, "s,t")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(config_path, out_path, ladder, workers);
        if (lemma->parsed()) return cmd_lemma(which, config_path, out_path);
        if (factor->parsed()) return cmd_factor(config_path, point);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
