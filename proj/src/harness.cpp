#include "formsum/harness.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

namespace formsum::harness {

using nlohmann::json;

std::vector<std::reference_wrapper<const numfield::NumberField>> ScenarioConfig::field_refs()
    const {
    std::vector<std::reference_wrapper<const numfield::NumberField>> out;
    for (const auto& K : fields) out.push_back(std::cref(*K));
    return out;
}

std::vector<int> ScenarioConfig::degrees() const {
    std::vector<int> out;
    for (const auto& K : fields) out.push_back(K->degree());
    return out;
}

ScenarioConfig parse_scenario(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.contains("forms") || !j.contains("functions") || !j.contains("region"))
        throw ConfigError("config requires forms, functions, region");

    lattice2d::Lattice2 G = lattice2d::Lattice2::standard();
    if (j.contains("lattice")) {
        const auto& m = j["lattice"];
        G = lattice2d::Lattice2::from_rows(m.at(0).at(0).get<int64_t>(),
                                           m.at(0).at(1).get<int64_t>(),
                                           m.at(1).at(0).get<int64_t>(),
                                           m.at(1).at(1).get<int64_t>());
    }

    ScenarioConfig cfg{.region = region::parse_region(j["region"].dump()), .lattice = G};

    for (const auto& fj : j["forms"]) {
        std::vector<Int> cs;
        for (const auto& c : fj) cs.emplace_back(c.get<int64_t>());
        cfg.forms.emplace_back(std::move(cs));
    }
    for (const auto& fj : j["functions"]) {
        std::map<std::string, double> params;
        if (fj.contains("params"))
            for (const auto& [k, v] : fj["params"].items()) params[k] = v.get<double>();
        cfg.functions.push_back(arith::make_preset(fj.at("preset").get<std::string>(), params));
    }
    if (cfg.forms.size() != cfg.functions.size())
        throw ConfigError("forms and functions must have equal length");
    if (cfg.forms.empty()) throw ConfigError("at least one form is required");
    for (const auto& F : cfg.forms) cfg.fields.push_back(std::make_unique<numfield::NumberField>(F));

    cfg.w = j.value("w", cfg.w);
    cfg.omega = j.value("omega", cfg.omega);
    cfg.eta = j.value("eta", cfg.eta);
    cfg.gamma = j.value("gamma", cfg.eta / 2);
    cfg.c1 = j.value("c1", cfg.c1);
    cfg.c2 = j.value("c2", cfg.c2);
    cfg.epsilon = j.value("epsilon", cfg.epsilon);
    if (j.contains("lemma")) {
        const auto& lj = j["lemma"];
        cfg.lemma_box = lj.value("box", cfg.lemma_box);
        cfg.lemma_norm_cap = lj.value("norm_cap", cfg.lemma_norm_cap);
        if (lj.contains("x_ladder"))
            cfg.lemma_x_ladder = lj["x_ladder"].get<std::vector<int64_t>>();
        cfg.lemma_M = lj.value("M", cfg.lemma_M);
        cfg.est_S = lj.value("S", cfg.est_S);
        cfg.est_T = lj.value("T", cfg.est_T);
        cfg.est_cap = lj.value("cap", cfg.est_cap);
    }
    if (j.contains("output")) {
        cfg.out_path = j["output"].value("path", std::string());
        cfg.out_format = j["output"].value("format", std::string("json"));
    }
    if (!(cfg.omega > 0 && cfg.omega < 1)) throw ConfigError("omega must be in (0,1)");
    if (!(cfg.eta > 0 && cfg.eta < 1)) throw ConfigError("eta must be in (0,1)");
    if (cfg.c1 <= 0) throw ConfigError("c1 must be positive");
    return cfg;
}

ScenarioConfig load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str());
}

region::Region scale_region(const region::Region& R, double k) {
    if (k <= 0) throw ConfigError("scale factor must be positive");
    if (const auto* r = std::get_if<region::Rectangle>(&R.shape()))
        return region::Region(region::Rectangle{k * r->x0, k * r->x1, k * r->y0, k * r->y1});
    if (const auto* d = std::get_if<region::Disc>(&R.shape()))
        return region::Region(region::Disc{k * d->cx, k * d->cy, k * d->r, k * d->inner});
    region::ConvexPolygon p = std::get<region::ConvexPolygon>(R.shape());
    for (auto& v : p.vertices) {
        v.x *= k;
        v.y *= k;
    }
    return region::Region(p);
}

double epsilon_zero(double c1, const std::vector<int>& degrees,
                    const std::vector<double>& epsilons) {
    if (degrees.size() != epsilons.size()) throw Error("epsilon_zero: size mismatch");
    double sum_de = 0, max_eps = 0;
    for (size_t i = 0; i < degrees.size(); ++i) {
        sum_de += degrees[i] * epsilons[i];
        max_eps = std::max(max_eps, epsilons[i]);
    }
    if (sum_de == 0) return 0;
    return std::max(1 + 4 / c1, 4 * (5 + 3 * max_eps) / c1) * sum_de;
}

namespace {

void validate_with_region(const ScenarioConfig& cfg, const region::Region& R) {
    // Pairwise coprime forms, and w above every bad modulus and resultant.
    for (size_t i = 0; i < cfg.forms.size(); ++i) {
        const auto& Fi = cfg.forms[i];
        for (size_t j = 0; j < i; ++j) {
            const auto& Fj = cfg.forms[j];
            if (Fi.b() == 0 && Fj.b() == 0)
                throw ConfigError("forms share the factor y");
            auto di = Fi.dehomogenize(), dj = Fj.dehomogenize();
            if (di.degree() >= 1 && dj.degree() >= 1) {
                Int res = intpoly::resultant(di, dj);
                if (res == 0) throw ConfigError("forms share a common factor");
                if (Int(cfg.w) <= abs(res))
                    throw ConfigError("w must exceed |res(F_i, F_j)| = " + Int(abs(res)).str());
            }
        }
    }
    for (const auto& K : cfg.fields)
        if (Int(cfg.w) <= abs(K->bad_modulus()))
            throw ConfigError("w must exceed the bad modulus " +
                              Int(abs(K->bad_modulus())).str());

    auto reg = region::is_regular(R, cfg.forms, cfg.c1);
    if (!reg.regular) {
        std::string msg = "region is not regular:";
        for (const auto& d : reg.diagnostics) msg += " " + d;
        throw ConfigError(msg);
    }
    double V = region::stats(R).vol;
    if (V <= std::exp(1.0)) throw ConfigError("volume too small: log V degenerate");
    if (static_cast<double>(cfg.lattice.det()) > std::pow(V, cfg.c2))
        throw ConfigError("q_G exceeds V^c2");
}

Report run_with_region(const ScenarioConfig& cfg, const region::Region& R, int workers) {
    validate_with_region(cfg, R);
    auto t0 = std::chrono::steady_clock::now();
    auto st = region::stats(R);
    double V = st.vol;

    sieve::SievePlan plan;
    plan.omega = cfg.omega;
    plan.z = std::pow(V, cfg.omega);
    plan.eta = cfg.eta;
    plan.gamma = cfg.gamma;
    plan.W = arith::WModulus::from_w(cfg.w);
    plan.q_G = cfg.lattice.det();

    auto refs = cfg.field_refs();
    sieve::CaseSums cs = sieve::case_sums(refs, cfg.functions, R, cfg.lattice, plan, workers);

    size_t N = cfg.forms.size();
    double main = V / std::pow(std::log(V), static_cast<double>(N));
    main *= arith::h_star_W(cfg.forms, plan.q_G, plan.W) / static_cast<double>(plan.q_G);
    for (size_t i = 0; i < N; ++i)
        main *= arith::E_f(cfg.functions[i], *cfg.fields[i], V, plan.W);

    std::vector<double> epsilons;
    for (const auto& f : cfg.functions) epsilons.push_back(f.eps);
    double eps0 = epsilon_zero(cfg.c1, cfg.degrees(), epsilons);
    double lambda = cfg.lattice.first_minimum();
    double secondary = std::pow(st.k_r, 1 + eps0 + cfg.epsilon) / lambda;

    Report r;
    r.V = V;
    r.lhs = cs.total;
    r.main_term = main;
    r.secondary_term = secondary;
    r.ratio = cs.total / (main + secondary);
    r.per_case = cs.per_case;
    r.points = cs.points;
    r.z = plan.z;
    r.q_G = plan.q_G;
    r.w = cfg.w;
    r.k_r = st.k_r;
    r.lambda_G = lambda;
    r.eps0 = eps0;
    r.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace

void validate_scenario(const ScenarioConfig& cfg) { validate_with_region(cfg, cfg.region); }

Report run_bound_check(const ScenarioConfig& cfg, int workers) {
    return run_with_region(cfg, cfg.region, workers);
}

std::vector<Report> run_ladder(const ScenarioConfig& cfg, const std::vector<double>& volumes,
                               int workers) {
    double base = region::stats(cfg.region).vol;
    std::vector<Report> out;
    for (double V : volumes) {
        if (V <= 0) throw ConfigError("ladder volume must be positive");
        out.push_back(run_with_region(cfg, scale_region(cfg.region, std::sqrt(V / base)), workers));
    }
    return out;
}

namespace {

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void add_check(SuiteReport& rep, const std::string& name, bool pass,
               const std::string& details = "") {
    rep.checks.push_back({name, pass, details});
    rep.pass = rep.pass && pass;
}

SuiteReport suite_L21(const ScenarioConfig&) {
    SuiteReport rep{"L21", true, {}, 0};
    const std::vector<double> radii = {100, 200, 400};
    struct GSpec {
        lattice2d::Lattice2 G;
        const char* name;
    };
    const std::vector<GSpec> gs = {{lattice2d::Lattice2::standard(), "Z2"},
                                   {lattice2d::Lattice2::from_rows(1, 2, 0, 5), "det5"}};
    for (const auto& [G, gname] : gs) {
        for (int64_t q : {int64_t{1}, int64_t{3}}) {
            std::vector<double> ratios;
            std::string detail;
            for (double r : radii) {
                region::Region R{region::Disc{0, 0, r, 0}};
                auto res = lattice2d::count_and_mainterm(G, R, {1, 1}, q);
                double ratio = std::fabs(static_cast<double>(res.exact) - res.main) /
                               res.error_scale;
                ratios.push_back(ratio);
                detail += "r=" + fmt(r) + " exact=" + std::to_string(res.exact) +
                          " main=" + fmt(res.main) + " ratio=" + fmt(ratio) + "; ";
            }
            std::string base = std::string(gname) + " q=" + std::to_string(q);
            bool bounded = std::all_of(ratios.begin(), ratios.end(),
                                       [](double x) { return x <= 10.0; });
            add_check(rep, base + " error within 10x scale", bounded, detail);
            bool trend = ratios.back() <= std::max(ratios[0], ratios[1]) + 1e-12;
            add_check(rep, base + " non-increasing trend", trend, detail);
        }
    }
    return rep;
}

SuiteReport suite_L22(const ScenarioConfig& cfg) {
    SuiteReport rep{"L22", true, {}, 0};
    const auto& K = *cfg.fields[0];
    const auto& f = cfg.functions[0];
    double M = cfg.lemma_M;
    arith::IdealFn fdag;
    fdag.name = "one_plus_M_over_N";
    fdag.prime_power_rule = [M](const numfield::PrimeIdeal& P, int) {
        return 1.0 + M / static_cast<double>(P.norm());
    };
    auto W = arith::WModulus::from_w(cfg.w);
    std::vector<double> ratios;
    std::string detail;
    for (int64_t x : cfg.lemma_x_ladder) {
        auto res = arith::lemma22_ratio(f, fdag, M, K, W, x);
        ratios.push_back(res.ratio);
        detail += "x=" + std::to_string(x) + " lhs=" + fmt(res.lhs) + " rhs=" + fmt(res.rhs) +
                  " ratio=" + fmt(res.ratio) + "; ";
    }
    bool finite = std::all_of(ratios.begin(), ratios.end(),
                              [](double r) { return std::isfinite(r) && r > 0; });
    add_check(rep, "ratios finite and positive", finite, detail);
    bool stable = true;
    for (size_t i = 1; i < ratios.size(); ++i)
        if (ratios[i] > 1.25 * ratios[i - 1]) stable = false;
    add_check(rep, "growth below 25% between rungs", stable, detail);
    return rep;
}

SuiteReport suite_L23(const ScenarioConfig& cfg) {
    SuiteReport rep{"L23", true, {}, 0};
    int64_t box = cfg.lemma_box;
    for (size_t fi = 0; fi < cfg.fields.size(); ++fi) {
        const auto& K = *cfg.fields[fi];
        Int D = abs(K.bad_modulus());
        int64_t exceptions = 0, checked = 0;
        std::string witness;
        for (int64_t s = -box; s <= box; ++s) {
            for (int64_t t = -box; t <= box; ++t) {
                if (std::gcd(s, t) != 1) continue;
                Int fval = intpoly::eval_form(K.source_form(), s, t);
                if (fval == 0) continue;
                ++checked;
                bool ok = true;
                try {
                    auto fac = numfield::factor_principal(K, s, t, D);
                    // Exactly one residue-degree-1 prime per rational prime.
                    ok = numfield::in_P(fac);
                    // Norm equals the D-coprime part of |b^{d-1} F(s,t)|.
                    Int value = abs(fval);
                    if (!K.is_rational())
                        value *= pow(K.b(), static_cast<unsigned>(K.degree() - 1));
                    Int coprime_part = 1;
                    for (const auto& [p, e] : factorize(to_i64(value)))
                        if (gcd(D, Int(p)) == 1)
                            coprime_part *= pow(Int(p), static_cast<unsigned>(e));
                    ok = ok && fac.norm() == coprime_part;
                } catch (const Error&) {
                    ok = false;
                }
                if (!ok) {
                    ++exceptions;
                    if (witness.empty())
                        witness = "(" + std::to_string(s) + "," + std::to_string(t) + ")";
                }
            }
        }
        add_check(rep, "form " + std::to_string(fi) + " exhaustive box " + std::to_string(box),
                  exceptions == 0,
                  std::to_string(checked) + " points, " + std::to_string(exceptions) +
                      " exceptions " + witness);
    }
    return rep;
}

SuiteReport suite_L24(const ScenarioConfig& cfg) {
    SuiteReport rep{"L24", true, {}, 0};
    for (size_t fi = 0; fi < cfg.fields.size(); ++fi) {
        const auto& K = *cfg.fields[fi];
        numfield::EnumerateOptions opts;
        opts.cls = numfield::IdealClass::P;
        auto ideals = numfield::enumerate_ideals(K, cfg.lemma_norm_cap, opts);
        int64_t exceptions = 0, tested = 0;
        std::string witness;
        for (const auto& a : ideals) {
            if (a.is_unit()) continue;
            int64_t m = a.norm_i64();
            auto [k, mod] = numfield::congruence_parameter(K, a);
            if (mod != m) {
                ++exceptions;
                continue;
            }
            // Independent local roots by brute scan mod p^e.
            std::vector<std::pair<int64_t, int64_t>> locals;  // (root, p^e)
            bool lifted = true;
            for (const auto& [P, e] : a.factors()) {
                int64_t pe = ipow(P.p, e);
                int64_t root = -1;
                for (int64_t r = P.root; r < pe; r += P.p) {
                    Int v = K.min_poly().eval(r) % pe;
                    if (v == 0) {
                        if (root != -1) lifted = false;  // non-unique lift
                        root = r;
                    }
                }
                if (root == -1) lifted = false;
                locals.emplace_back(root, pe);
            }
            if (!lifted) {
                ++exceptions;
                witness = "lift failure at norm " + std::to_string(m);
                continue;
            }
            int64_t b_mod = to_i64(((K.b() % m) + m) % m);
            ++tested;
            for (int64_t s = 0; s < m && exceptions == 0; ++s) {
                for (int64_t t = 0; t < m; ++t) {
                    bool divis = true;
                    for (const auto& [root, pe] : locals)
                        if (((b_mod % pe) * (s % pe) - root * (t % pe)) % pe != 0) {
                            divis = false;
                            break;
                        }
                    bool cong = ((__int128(b_mod) * s - __int128(k) * t) % m) == 0;
                    if (divis != cong) {
                        ++exceptions;
                        witness = "norm " + std::to_string(m) + " at (" + std::to_string(s) +
                                  "," + std::to_string(t) + ")";
                        break;
                    }
                }
            }
        }
        add_check(rep, "field " + std::to_string(fi) + " divisibility <=> congruence",
                  exceptions == 0,
                  std::to_string(tested) + " ideals tested, " + std::to_string(exceptions) +
                      " exceptions " + witness);
    }
    return rep;
}

SuiteReport suite_L32(const ScenarioConfig& cfg) {
    SuiteReport rep{"L32", true, {}, 0};
    auto refs = cfg.field_refs();
    auto W = arith::WModulus::from_w(cfg.w);
    auto res = arith::E_ST(cfg.functions, refs, cfg.est_S, cfg.est_T, W, cfg.est_cap);
    double kappa = 1.0;
    double bound = std::exp(-kappa * std::log(cfg.est_S) / std::log(cfg.est_T)) *
                   res.partial_sum_T;
    double c_emp = bound > 0 ? res.value / bound : std::numeric_limits<double>::infinity();
    std::string detail = "E(S,T)=" + fmt(res.value) + " partial_T=" + fmt(res.partial_sum_T) +
                         " kappa=" + fmt(kappa) + " bound=" + fmt(bound) +
                         " C_emp=" + fmt(c_emp) + " cap=" + std::to_string(res.cap) +
                         (res.truncated ? " (truncated)" : "");
    add_check(rep, "E(S,T) finite", std::isfinite(res.value) && res.value >= 0, detail);
    add_check(rep, "bound shape positive", bound > 0, detail);
    return rep;
}

SuiteReport suite_SIEVE(const ScenarioConfig& cfg) {
    SuiteReport rep{"SIEVE", true, {}, 0};

    // Brun weights over P(30).
    {
        auto weights = sieve::lambda_plus(30, 900);
        bool ok = weights.at(1) == 1;
        for (const auto& [d, lam] : weights) ok = ok && std::abs(lam) <= 1 && d <= 900;
        auto primes = primes_below(30);
        int64_t bad = 0;
        for (uint32_t mask = 0; mask < (1u << primes.size()); ++mask) {
            int64_t n = 1;
            for (size_t i = 0; i < primes.size(); ++i)
                if (mask & (1u << i)) n *= primes[i];
            int64_t sum = 0;
            for (const auto& [d, lam] : weights)
                if (n % d == 0) sum += lam;
            int64_t mu_sum = n == 1 ? 1 : 0;
            if (sum < (n == 1 ? 1 : 0) || sum < mu_sum) ++bad;
        }
        add_check(rep, "lambda+ inequality over P(30)", ok && bad == 0,
                  std::to_string(bad) + " violations over " +
                      std::to_string(1u << primes.size()) + " divisors");
    }

    // Split laws, exhaustive.
    {
        int64_t bad = 0;
        std::string witness;
        for (double z : {10.0, 100.0, 1000.0}) {
            for (int64_t n = 1; n <= 100000; ++n) {
                auto sp = sieve::split_smooth_rough(n, z);
                bool ok = sp.a <= z && Int(sp.a) * sp.b == n && gcd(Int(sp.a), sp.b) == 1;
                ok = ok && (sp.b == 1 || sp.p_minus_b > p_plus(sp.a));
                if (sp.b != 1) {
                    // Maximality: absorbing the next prime power must exceed z.
                    int64_t p = sp.p_minus_b, pe = p;
                    int64_t rest = to_i64(sp.b / p);
                    while (rest % p == 0) {
                        pe *= p;
                        rest /= p;
                    }
                    ok = ok && static_cast<double>(sp.a) * pe > z;
                }
                auto label = sieve::classify_case(sp, z, 2.0 / 3.0);
                ok = ok && (label == sieve::CaseLabel::I || label == sieve::CaseLabel::II ||
                            label == sieve::CaseLabel::III || label == sieve::CaseLabel::IV);
                if (!ok) {
                    ++bad;
                    if (witness.empty())
                        witness = "n=" + std::to_string(n) + " z=" + fmt(z);
                }
            }
        }
        add_check(rep, "split laws n <= 1e5, z in {10,100,1000}", bad == 0,
                  std::to_string(bad) + " violations " + witness);
    }

    // U_gamma monotone domination on the configured scenario, unit ideals.
    {
        auto refs = cfg.field_refs();
        std::vector<numfield::IdealFactorization> units(refs.size());
        sieve::SievePlan plan;
        plan.omega = cfg.omega;
        plan.z = std::pow(region::stats(cfg.region).vol, cfg.omega);
        plan.eta = cfg.eta;
        plan.W = arith::WModulus::from_w(cfg.w);
        plan.q_G = cfg.lattice.det();
        plan.gamma = cfg.eta / 2;
        int64_t strict = sieve::U_gamma_count(refs, units, cfg.region, cfg.lattice, plan);
        plan.gamma = 0.05;
        int64_t loose = sieve::U_gamma_count(refs, units, cfg.region, cfg.lattice, plan);
        add_check(rep, "U_{eta/2} <= U_gamma for gamma <= eta/2", strict <= loose,
                  "U_{eta/2}=" + std::to_string(strict) + " U_{0.05}=" + std::to_string(loose));
    }
    return rep;
}

}  // namespace

SuiteReport run_lemma_suite(const std::string& which, const ScenarioConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteReport rep;
    if (which == "L21") rep = suite_L21(cfg);
    else if (which == "L22") rep = suite_L22(cfg);
    else if (which == "L23") rep = suite_L23(cfg);
    else if (which == "L24") rep = suite_L24(cfg);
    else if (which == "L32") rep = suite_L32(cfg);
    else if (which == "SIEVE") rep = suite_SIEVE(cfg);
    else throw ConfigError("unknown lemma suite: " + which);
    rep.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

namespace {

json report_to_json(const Report& r) {
    json j;
    j["V"] = r.V;
    j["lhs"] = r.lhs;
    j["main_term"] = r.main_term;
    j["secondary_term"] = r.secondary_term;
    j["ratio"] = r.ratio;
    j["per_case"] = {{"I", r.per_case[0]},
                     {"II", r.per_case[1]},
                     {"III", r.per_case[2]},
                     {"IV", r.per_case[3]}};
    j["points"] = r.points;
    j["z"] = r.z;
    j["q_G"] = r.q_G;
    j["w"] = r.w;
    j["K_R"] = r.k_r;
    j["lambda_G"] = r.lambda_G;
    j["eps0"] = r.eps0;
    // runtime_seconds deliberately omitted: reports for identical configs
    // must be byte-identical regardless of worker count or machine load.
    return j;
}

}  // namespace

std::string report_json(const Report& r) { return report_to_json(r).dump(2) + "\n"; }

std::string ladder_json(const std::vector<Report>& rs) {
    json j = json::array();
    for (const auto& r : rs) j.push_back(report_to_json(r));
    return j.dump(2) + "\n";
}

std::string ladder_csv(const std::vector<Report>& rs) {
    std::string out = "V,lhs,main,secondary,ratio,caseI,caseII,caseIII,caseIV\n";
    for (const auto& r : rs) {
        out += fmt(r.V) + "," + fmt(r.lhs) + "," + fmt(r.main_term) + "," +
               fmt(r.secondary_term) + "," + fmt(r.ratio) + "," + fmt(r.per_case[0]) + "," +
               fmt(r.per_case[1]) + "," + fmt(r.per_case[2]) + "," + fmt(r.per_case[3]) + "\n";
    }
    return out;
}

std::string suite_json(const SuiteReport& r) {
    json j;
    j["suite"] = r.suite;
    j["pass"] = r.pass;
    j["checks"] = json::array();
    for (const auto& c : r.checks)
        j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
    return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open for writing: " + path);
    out << content;
    if (!out) throw Error("write failed: " + path);
}

}  // namespace formsum::harness
