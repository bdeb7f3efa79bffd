#include "formsum/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <thread>

namespace formsum::sieve {

SmoothRoughSplit split_smooth_rough(const std::vector<PrimePower>& factors, double z) {
    SmoothRoughSplit out;
    size_t j = 0;
    for (; j < factors.size(); ++j) {
        int64_t pe = ipow(factors[j].p, factors[j].exp);
        if (static_cast<double>(out.a) * pe > z) break;
        out.a *= pe;
    }
    for (size_t i = j; i < factors.size(); ++i) {
        out.b *= pow(Int(factors[i].p), static_cast<unsigned>(factors[i].exp));
        out.p_minus_b = std::min(out.p_minus_b, factors[i].p);
    }
    return out;
}

SmoothRoughSplit split_smooth_rough(int64_t n, double z) {
    if (n < 1) throw Error("split_smooth_rough: n must be positive");
    return split_smooth_rough(factorize(n), z);
}

const char* case_name(CaseLabel c) {
    switch (c) {
        case CaseLabel::I: return "I";
        case CaseLabel::II: return "II";
        case CaseLabel::III: return "III";
        case CaseLabel::IV: return "IV";
    }
    return "?";
}

CaseLabel classify_case(const SmoothRoughSplit& split, double z, double eta) {
    double t1 = std::pow(z, eta / 2);
    double lo = std::pow(z, 1 - eta);
    double pb = split.b == 1 ? std::numeric_limits<double>::infinity()
                             : static_cast<double>(split.p_minus_b);
    double llz = std::log(z) > std::exp(1.0) ? std::log(z) * std::log(std::log(z)) : 0.0;
    if (pb >= t1) return CaseLabel::I;
    if (split.a <= lo) return CaseLabel::II;
    if (pb <= llz) return CaseLabel::III;
    return CaseLabel::IV;
}

std::map<int64_t, int> lambda_plus(double z_level, double level_D) {
    std::map<int64_t, int> weights{{1, 1}};
    if (z_level < 2 || level_D < 2) return weights;
    auto primes = primes_below(static_cast<int64_t>(std::ceil(z_level)));
    int64_t k0 = static_cast<int64_t>(std::floor(std::log(level_D) / std::log(z_level)));
    int64_t two_r = k0 < 0 ? 0 : k0 - (k0 % 2);
    // Every retained d satisfies d < z^{2r} <= level_D, so the even Bonferroni
    // truncation holds without dropping any term of weight count <= 2r.
    std::function<void(size_t, int64_t, int)> rec = [&](size_t idx, int64_t d, int om) {
        if (om > 0) weights[d] = om % 2 == 0 ? 1 : -1;
        if (om == two_r) return;
        for (size_t i = idx; i < primes.size(); ++i) {
            if (static_cast<double>(d) * primes[i] > level_D) break;
            rec(i + 1, d * primes[i], om + 1);
        }
    };
    rec(0, 1, 0);
    return weights;
}

namespace {

// Rational prime exponents of the norm of an ideal list, ascending.
std::vector<PrimePower> norm_exponents(const std::vector<IdealFactorization>& facs) {
    std::map<int64_t, int> acc;
    for (const auto& fac : facs)
        for (const auto& [P, e] : fac.factors()) acc[P.p] += P.f * e;
    std::vector<PrimePower> out;
    for (const auto& [p, e] : acc) out.push_back(PrimePower{p, e});
    return out;
}

Int excluded_modulus(const NumberField& K, const SievePlan& plan) {
    return Int(plan.q_G) * plan.W.W * abs(K.bad_modulus());
}

}  // namespace

int64_t U_gamma_count(const std::vector<std::reference_wrapper<const NumberField>>& Ks,
                      const std::vector<IdealFactorization>& as, const region::Region& R,
                      const lattice2d::Lattice2& G, const SievePlan& plan) {
    if (Ks.size() != as.size()) throw Error("U_gamma_count: size mismatch");
    for (size_t i = 0; i < as.size(); ++i) {
        if (!numfield::in_P(as[i])) throw Error("U_gamma_count: ideal not in P_K");
        Int ni = as[i].norm();
        if (gcd(ni, Int(plan.q_G) * plan.W.W) != 1)
            throw Error("U_gamma_count: ideal norm not coprime to q_G W");
        for (size_t j = 0; j < i; ++j)
            if (gcd(ni, as[j].norm()) != 1)
                throw Error("U_gamma_count: ideal norms not pairwise coprime");
    }
    lattice2d::Lattice2 lam = lattice2d::congruence_lattice(Ks, as, G);
    std::vector<Int> excluded;
    for (const auto& K : Ks) excluded.push_back(excluded_modulus(K.get(), plan));
    double zg = std::pow(plan.z, plan.gamma);
    int64_t count = 0;
    lattice2d::EnumerateOptions opts;
    opts.primitive = true;
    lattice2d::enumerate_points(lam, R, opts, [&](int64_t s, int64_t t) {
        std::vector<IdealFactorization> facs;
        facs.reserve(Ks.size());
        for (size_t i = 0; i < Ks.size(); ++i) {
            try {
                facs.push_back(numfield::factor_principal(Ks[i].get(), s, t, excluded[i]));
            } catch (const ZeroValueError&) {
                return true;
            }
            if (!numfield::in_P(facs.back())) return true;
            // a_i must divide with coprime cofactor: exact exponent match.
            for (const auto& [P, e] : as[i].factors()) {
                auto it = std::find_if(facs.back().factors().begin(), facs.back().factors().end(),
                                       [&](const auto& f) { return f.first == P; });
                if (it == facs.back().factors().end() || it->second != e) return true;
            }
        }
        // Residual primes of the value part must be rough.
        std::map<int64_t, int> residual;
        for (const auto& fac : facs)
            for (const auto& [P, e] : fac.factors()) residual[P.p] += P.f * e;
        for (const auto& a : as)
            for (const auto& [P, e] : a.factors()) residual[P.p] -= P.f * e;
        for (const auto& [p, e] : residual)
            if (e > 0 && static_cast<double>(p) < zg) return true;
        ++count;
        return true;
    });
    return count;
}

CaseSums case_sums(const std::vector<std::reference_wrapper<const NumberField>>& Ks,
                   const std::vector<arith::IdealFn>& fs, const region::Region& R,
                   const lattice2d::Lattice2& G, const SievePlan& plan, int workers) {
    if (Ks.size() != fs.size()) throw Error("case_sums: size mismatch");
    if (workers < 1) workers = 1;
    std::vector<Int> excluded;
    for (const auto& K : Ks) excluded.push_back(excluded_modulus(K.get(), plan));

    lattice2d::EnumerateOptions opts;
    opts.primitive = true;
    auto points = lattice2d::collect_points(G, R, opts);

    // Fixed shard count so the merge order (and hence every bit of the
    // result) is independent of the worker count.
    constexpr size_t kShards = 16;
    struct Shard {
        std::array<double, 4> per_case{};
        int64_t points = 0;
    };
    std::vector<Shard> shards(kShards);
    std::vector<std::exception_ptr> errors(kShards);

    auto run_shard = [&](size_t shard) {
        size_t lo = points.size() * shard / kShards;
        size_t hi = points.size() * (shard + 1) / kShards;
        std::array<KahanSum, 4> sums;
        int64_t cnt = 0;
        for (size_t idx = lo; idx < hi; ++idx) {
            auto [s, t] = points[idx];
            double value = 1.0;
            std::vector<IdealFactorization> facs;
            facs.reserve(Ks.size());
            bool zero = false;
            for (size_t i = 0; i < Ks.size(); ++i) {
                try {
                    facs.push_back(numfield::factor_principal(Ks[i].get(), s, t, excluded[i]));
                } catch (const ZeroValueError&) {
                    zero = true;
                    break;
                }
                value *= arith::eval_fn(fs[i], facs.back());
            }
            if (zero) continue;
            CaseLabel label =
                classify_case(split_smooth_rough(norm_exponents(facs), plan.z), plan.z, plan.eta);
            sums[static_cast<size_t>(label)].add(value);
            ++cnt;
        }
        Shard out;
        for (int c = 0; c < 4; ++c) out.per_case[static_cast<size_t>(c)] = sums[static_cast<size_t>(c)].value();
        out.points = cnt;
        shards[shard] = out;
    };

    if (workers == 1) {
        for (size_t shard = 0; shard < kShards; ++shard) run_shard(shard);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int wkr = 0; wkr < workers; ++wkr) {
            pool.emplace_back([&] {
                for (size_t shard = next.fetch_add(1); shard < kShards; shard = next.fetch_add(1)) {
                    try {
                        run_shard(shard);
                    } catch (...) {
                        errors[shard] = std::current_exception();
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& err : errors)
            if (err) std::rethrow_exception(err);
    }

    CaseSums out;
    std::array<KahanSum, 4> merged;
    for (const auto& sh : shards) {
        for (int c = 0; c < 4; ++c) merged[static_cast<size_t>(c)].add(sh.per_case[static_cast<size_t>(c)]);
        out.points += sh.points;
    }
    for (int c = 0; c < 4; ++c) out.per_case[static_cast<size_t>(c)] = merged[static_cast<size_t>(c)].value();
    out.total = out.per_case[0] + out.per_case[1] + out.per_case[2] + out.per_case[3];
    return out;
}

}  // namespace formsum::sieve
