#include "formsum/arith.hpp"

#include "formsum/detail/polymod.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace formsum::arith {

namespace {

double param(const std::map<std::string, double>& params, const std::string& key, double dflt) {
    auto it = params.find(key);
    return it == params.end() ? dflt : it->second;
}

}  // namespace

IdealFn make_preset(const std::string& name, const std::map<std::string, double>& params) {
    IdealFn f;
    f.name = name;
    if (name == "one") {
        f.prime_power_rule = [](const PrimeIdeal&, int) { return 1.0; };
        f.A = param(params, "A", 1.0);
        f.B = param(params, "B", 1.0);
        f.eps = param(params, "eps", 0.0);
        f.submultiplicative = true;
    } else if (name == "tau_K") {
        f.prime_power_rule = [](const PrimeIdeal&, int v) { return static_cast<double>(v + 1); };
        f.A = param(params, "A", 2.0);
        f.B = param(params, "B", 4.0);
        f.eps = param(params, "eps", 0.5);
        f.submultiplicative = true;
    } else if (name == "omega_pow") {
        double base = param(params, "base", 2.0);
        f.prime_power_rule = [base](const PrimeIdeal&, int v) { return std::pow(base, v); };
        f.A = param(params, "A", base);
        f.B = param(params, "B", base * base);
        f.eps = param(params, "eps", 0.5);
        f.submultiplicative = true;
    } else if (name == "sqfree_ind") {
        f.prime_power_rule = [](const PrimeIdeal&, int v) { return v == 1 ? 1.0 : 0.0; };
        f.A = param(params, "A", 1.0);
        f.B = param(params, "B", 1.0);
        f.eps = param(params, "eps", 0.0);
        f.submultiplicative = true;
    } else if (name == "norm_eps") {
        double eps = param(params, "eps", 0.5);
        double B = param(params, "B", 4.0);
        f.prime_power_rule = [eps, B](const PrimeIdeal& P, int v) {
            return std::min(std::pow(static_cast<double>(P.norm()), v * eps), B);
        };
        f.A = param(params, "A", B);
        f.B = B;
        f.eps = eps;
        f.submultiplicative = true;
    } else {
        throw ConfigError("unknown function preset: " + name);
    }
    return f;
}

WModulus WModulus::from_w(int64_t w) {
    if (w < 2) throw ConfigError("w must be >= 2");
    WModulus W;
    W.w = w;
    for (int64_t p : primes_below(w + 1)) W.W *= p;
    return W;
}

double eval_fn(const IdealFn& f, const IdealFactorization& a) {
    double acc = 1.0;
    for (const auto& [P, e] : a.factors()) acc *= f.prime_power_rule(P, e);
    return acc;
}

IdealFactorization restrict_W(const IdealFactorization& a, const WModulus& W) {
    std::vector<std::pair<PrimeIdeal, int>> kept;
    for (const auto& [P, e] : a.factors())
        if (P.p > W.w) kept.emplace_back(P, e);
    return IdealFactorization(std::move(kept));
}

PseudomultReport check_pseudomultiplicative(const IdealFn& f, const NumberField& K, int64_t X) {
    PseudomultReport rep;
    auto ideals = numfield::enumerate_ideals(K, X);
    auto coprime = [](const IdealFactorization& a, const IdealFactorization& b) {
        for (const auto& [P, e] : a.factors())
            for (const auto& [Q, e2] : b.factors())
                if (P == Q) return false;
        return true;
    };
    for (const auto& a : ideals) {
        int64_t na = a.norm_i64();
        double fa = eval_fn(f, a);
        for (const auto& b : ideals) {
            int64_t nb = b.norm_i64();
            if (na > X / nb) continue;
            if (!coprime(a, b)) continue;
            ++rep.pairs_checked;
            double lhs = eval_fn(f, a.times(b));
            double cap = std::min(std::pow(f.A, b.omega()),
                                  f.B * std::pow(static_cast<double>(nb), f.eps));
            double rhs = fa * cap;
            if (lhs > rhs * (1 + 1e-9) + 1e-12 && rep.violations.size() < 16)
                rep.violations.push_back({a, b, lhs, rhs});
        }
    }
    return rep;
}

namespace {

// Count roots of P mod m by Horner over reduced coefficients.
int64_t count_roots_brute(const IntPolynomial& P, int64_t m) {
    if (m > 10000000) throw Error("rho_P: brute-force modulus too large: " + std::to_string(m));
    std::vector<int64_t> cs(P.coeffs().size());
    for (size_t i = 0; i < cs.size(); ++i) {
        Int r = P.coeffs()[i] % m;
        if (r < 0) r += m;
        cs[i] = to_i64(r);
    }
    int64_t count = 0;
    for (int64_t x = 0; x < m; ++x) {
        __int128 acc = 0;
        for (size_t i = cs.size(); i-- > 0;) acc = (acc * x + cs[i]) % m;
        if (acc == 0) ++count;
    }
    return count;
}

}  // namespace

int64_t rho_P(const IntPolynomial& P, int64_t k) {
    if (k < 1) throw Error("rho_P: modulus must be positive");
    if (k == 1) return 1;
    if (P.is_zero()) return k;
    Int sep = P.degree() >= 1 ? intpoly::resultant(P, P.derivative()) : Int(1);
    int64_t result = 1;
    for (const auto& [p, e] : factorize(k)) {
        bool good = P.degree() >= 1 && P.leading() % p != 0 && sep % p != 0;
        int64_t local;
        if (good) {
            // Simple roots mod p lift uniquely: rho(p^l) = rho(p).
            local = static_cast<int64_t>(
                polymod::roots(polymod::reduce(P, p), p).size());
        } else {
            local = count_roots_brute(P, ipow(p, e));
        }
        result *= local;
        if (result == 0) return 0;
    }
    return result;
}

int64_t rho_bar(const BinaryForm& F, int64_t k) {
    if (F.b() == 0) return 1;
    return rho_P(F.dehomogenize(), k);
}

double h_star(const std::vector<BinaryForm>& forms, int64_t k) {
    double acc = 1.0;
    for (const auto& [p, e] : factorize(std::abs(k))) {
        double s = 0;
        for (const auto& F : forms) s += static_cast<double>(rho_bar(F, p));
        double denom = 1.0 - s / (p + 1.0);
        if (denom <= 0) throw PoleError("h_star pole at p = " + std::to_string(p));
        acc /= denom;
    }
    return acc;
}

double h_star_W(const std::vector<BinaryForm>& forms, int64_t k, const WModulus& W) {
    double acc = 1.0;
    for (const auto& [p, e] : factorize(std::abs(k))) {
        if (p <= W.w) continue;
        double s = 0;
        for (const auto& F : forms) s += static_cast<double>(rho_bar(F, p));
        double denom = 1.0 - s / (p + 1.0);
        if (denom <= 0) throw PoleError("h_star_W pole at p = " + std::to_string(p));
        acc /= denom;
    }
    return acc;
}

double h_dagger(const std::vector<int>& degrees, int64_t k) {
    int64_t dsum = 0;
    for (int d : degrees) dsum += d;
    double acc = 1.0;
    for (const auto& [p, e] : factorize(std::abs(k))) {
        double denom = 1.0 - static_cast<double>(dsum) / (1.0 + p);
        if (denom <= 0) throw PoleError("h_dagger pole at p = " + std::to_string(p));
        acc /= denom;
    }
    return acc;
}

double h_small(int64_t d) {
    double acc = 1.0;
    for (const auto& [p, e] : factorize(std::abs(d))) acc /= 1.0 + 1.0 / p;
    return acc;
}

double c_p(const std::vector<BinaryForm>& forms, int64_t p) {
    double s = 0;
    for (const auto& F : forms) s += static_cast<double>(rho_bar(F, p));
    return 1.0 - h_small(p) / p * s;
}

double h_dagger_ideal(const std::vector<int>& degrees, const IdealFactorization& a) {
    int64_t dsum = 0;
    for (int d : degrees) dsum += d;
    double acc = 1.0;
    int64_t last_p = 0;
    for (const auto& [P, e] : a.factors()) {
        if (P.p == last_p) continue;
        last_p = P.p;
        double denom = 1.0 - static_cast<double>(dsum) / (1.0 + P.p);
        if (denom <= 0) throw PoleError("h_dagger pole at p = " + std::to_string(P.p));
        acc /= denom;
    }
    return acc;
}

double E_f(const IdealFn& f, const NumberField& K, double x, const WModulus& W) {
    int64_t xi = static_cast<int64_t>(std::floor(x));
    if (f.submultiplicative) {
        KahanSum sum;
        for (int64_t p : primes_below(xi + 1)) {
            if (p <= W.w) continue;
            if (!K.is_good_prime(p))
                throw ConfigError("E_f: prime " + std::to_string(p) +
                                  " above w divides the field discriminant");
            for (const PrimeIdeal& P : K.split_prime(p))
                if (P.f == 1) sum.add(f.prime_power_rule(P, 1) / static_cast<double>(p));
        }
        return std::exp(sum.value());
    }
    numfield::EnumerateOptions opts;
    opts.squarefree = true;
    opts.coprime_to = W.W;
    opts.cls = numfield::IdealClass::PCirc;
    KahanSum sum;
    for (const auto& a : numfield::enumerate_ideals(K, xi, opts))
        sum.add(eval_fn(f, a) / static_cast<double>(a.norm_i64()));
    return sum.value();
}

namespace {

// sum over exponent vectors (e_1..e_g) >= 0 with sum k of prod f(p_j^{e_j}).
double tuple_sum(const IdealFn& f, const std::vector<PrimeIdeal>& primes, size_t j, int k) {
    if (j + 1 == primes.size())
        return k == 0 ? 1.0 : f.prime_power_rule(primes[j], k);
    double acc = 0;
    for (int e = 0; e <= k; ++e) {
        double head = e == 0 ? 1.0 : f.prime_power_rule(primes[j], e);
        acc += head * tuple_sum(f, primes, j + 1, k - e);
    }
    return acc;
}

double u_prime_power(const std::vector<IdealFn>& fs,
                     const std::vector<std::reference_wrapper<const NumberField>>& Ks, int64_t p,
                     int k) {
    int64_t dsum = 0;
    for (const auto& K : Ks) dsum += K.get().degree();
    double denom = 1.0 - static_cast<double>(dsum) / (1.0 + p);
    if (denom <= 0) throw PoleError("u: h_dagger pole at p = " + std::to_string(p));
    double hd = 1.0 / denom;
    double acc = 0;
    for (size_t i = 0; i < Ks.size(); ++i) {
        const NumberField& K = Ks[i].get();
        if (!K.is_good_prime(p)) continue;
        std::vector<PrimeIdeal> deg1;
        for (const PrimeIdeal& P : K.split_prime(p))
            if (P.f == 1) deg1.push_back(P);
        if (deg1.empty()) continue;
        acc += tuple_sum(fs[i], deg1, 0, k);
    }
    return acc * hd;
}

}  // namespace

double u_fn(const std::vector<IdealFn>& fs,
            const std::vector<std::reference_wrapper<const NumberField>>& Ks, int64_t a) {
    if (fs.size() != Ks.size()) throw Error("u_fn: size mismatch");
    if (a < 1) throw Error("u_fn: argument must be positive");
    double acc = 1.0;
    for (const auto& [p, e] : factorize(a)) {
        acc *= u_prime_power(fs, Ks, p, e);
        if (acc == 0) return 0;
    }
    return acc;
}

ESTResult E_ST(const std::vector<IdealFn>& fs,
               const std::vector<std::reference_wrapper<const NumberField>>& Ks, double S,
               double T, const WModulus& W, int64_t cap) {
    if (cap < 1) throw ConfigError("E_ST: cap must be positive");
    std::map<std::pair<int64_t, int>, double> memo;
    auto u_of = [&](const std::vector<PrimePower>& fac) {
        double acc = 1.0;
        for (const auto& [p, e] : fac) {
            auto key = std::make_pair(p, e);
            auto it = memo.find(key);
            if (it == memo.end()) it = memo.emplace(key, u_prime_power(fs, Ks, p, e)).first;
            acc *= it->second;
            if (acc == 0) break;
        }
        return acc;
    };
    int64_t hi = std::max(cap, static_cast<int64_t>(std::floor(T)));
    KahanSum value, partial;
    for (int64_t a = 1; a <= hi; ++a) {
        auto fac = factorize(a);
        bool coprime_w = true;
        for (const auto& [p, e] : fac)
            if (p <= W.w) {
                coprime_w = false;
                break;
            }
        if (!coprime_w) continue;
        bool in_value = a <= cap && static_cast<double>(a) > S && p_plus(a) < T;
        bool in_partial = static_cast<double>(a) <= T;
        if (!in_value && !in_partial) continue;
        double u = u_of(fac);
        if (u == 0) continue;
        if (in_value) value.add(u / static_cast<double>(a));
        if (in_partial) partial.add(u / static_cast<double>(a));
    }
    return ESTResult{value.value(), partial.value(), cap, true};
}

Lemma22Result lemma22_ratio(const IdealFn& f, const IdealFn& fdagger, double M,
                            const NumberField& K, const WModulus& W, int64_t x) {
    if (W.w <= 2 * (f.A + M))
        throw ConfigError("lemma22_ratio: requires w > 2(A + M)");
    KahanSum lhs;
    for (const auto& a : numfield::enumerate_ideals(K, x)) {
        IdealFactorization aw = restrict_W(a, W);
        lhs.add(eval_fn(f, aw) * eval_fn(fdagger, aw) / static_cast<double>(a.norm_i64()));
    }
    numfield::EnumerateOptions opts;
    opts.squarefree = true;
    opts.coprime_to = W.W;
    KahanSum rhs;
    for (const auto& b : numfield::enumerate_ideals(K, x, opts))
        rhs.add(eval_fn(f, b) / static_cast<double>(b.norm_i64()));
    double r = rhs.value();
    return Lemma22Result{lhs.value(), r, lhs.value() / r};
}

}  // namespace formsum::arith
