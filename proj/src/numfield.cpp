#include "formsum/numfield.hpp"

#include "formsum/detail/polymod.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numeric>

namespace formsum::numfield {

IdealFactorization::IdealFactorization(std::vector<std::pair<PrimeIdeal, int>> factors)
    : factors_(std::move(factors)) {
    for (const auto& [pi, e] : factors_) {
        if (e < 1) throw Error("ideal factor with exponent < 1");
    }
    std::sort(factors_.begin(), factors_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 1; i < factors_.size(); ++i)
        if (factors_[i].first == factors_[i - 1].first)
            throw Error("duplicate prime ideal in factorization");
}

Int IdealFactorization::norm() const {
    Int n = 1;
    for (const auto& [pi, e] : factors_) n *= pow(Int(pi.p), static_cast<unsigned>(pi.f * e));
    return n;
}

int IdealFactorization::omega() const {
    int o = 0;
    for (const auto& [pi, e] : factors_) o += e;
    return o;
}

bool IdealFactorization::is_squarefree() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const auto& f) { return f.second == 1; });
}

IdealFactorization IdealFactorization::times(const IdealFactorization& other) const {
    std::vector<std::pair<PrimeIdeal, int>> merged = factors_;
    for (const auto& [pi, e] : other.factors_) {
        auto it = std::find_if(merged.begin(), merged.end(),
                               [&](const auto& f) { return f.first == pi; });
        if (it != merged.end())
            it->second += e;
        else
            merged.emplace_back(pi, e);
    }
    return IdealFactorization(std::move(merged));
}

bool operator<(const IdealFactorization& a, const IdealFactorization& b) {
    Int na = a.norm(), nb = b.norm();
    if (na != nb) return na < nb;
    return a.factors_ < b.factors_;
}

NumberField::NumberField(const BinaryForm& F)
    : form_(F), monic_(intpoly::make_monic_form(F)), min_poly_(monic_.tilde_form.dehomogenize()),
      degree_(F.degree()) {
    if (monic_.is_degenerate_y) {
        degree_ = 1;
        delta_theta_ = 1;
        D_ = 2 * monic_.degenerate_c;
    } else if (degree_ == 1) {
        delta_theta_ = 1;
        D_ = 2 * monic_.b;
    } else {
        delta_theta_ = intpoly::discriminant(min_poly_);
        D_ = 2 * monic_.b * delta_theta_;
    }
    if (D_ == 0) throw Error("degenerate bad modulus");
}

const std::vector<PrimeIdeal>& NumberField::split_prime(int64_t p) const {
    if (!is_good_prime(p))
        throw BadPrimeError("split_prime: " + std::to_string(p) + " divides Delta_theta");
    {
        std::shared_lock lock(cache_mutex_);
        auto it = split_cache_.find(p);
        if (it != split_cache_.end()) return it->second;
    }
    std::vector<PrimeIdeal> out;
    polymod::Poly fp = polymod::reduce(min_poly_, p);
    if (static_cast<int>(fp.size()) - 1 != degree_)
        throw Error("split_prime: leading coefficient vanished mod p");
    // Linear factors first.
    std::vector<int64_t> rs = polymod::roots(fp, p);
    for (int64_t r : rs) out.push_back(PrimeIdeal{p, 1, 1, r, 0});
    polymod::Poly h = fp;
    for (int64_t r : rs) h = polymod::quot(h, polymod::Poly{(p - r) % p, 1}, p);
    // Distinct-degree counts for the rootless part; the factorization is
    // squarefree because p does not divide Delta_theta.
    int k = 2;
    while (static_cast<int>(h.size()) - 1 >= 2 * k) {
        polymod::Poly xpk = polymod::frobenius(h, p, k);
        polymod::Poly g = polymod::gcd(polymod::sub(xpk, polymod::rem({0, 1}, h, p), p), h, p);
        int cnt = (static_cast<int>(g.size()) - 1) / k;
        for (int i = 0; i < cnt; ++i) out.push_back(PrimeIdeal{p, k, 1, -1, i});
        if (g.size() > 1) h = polymod::quot(h, g, p);
        ++k;
    }
    if (h.size() > 1) out.push_back(PrimeIdeal{p, static_cast<int>(h.size()) - 1, 1, -1, 0});
    std::sort(out.begin(), out.end());
    int fsum = 0;
    for (const auto& pi : out) fsum += pi.e * pi.f;
    if (fsum != degree_) throw Error("split_prime: degree sum mismatch");
    std::unique_lock lock(cache_mutex_);
    return split_cache_.emplace(p, std::move(out)).first->second;
}

IdealFactorization factor_principal(const NumberField& K, int64_t s, int64_t t,
                                    const Int& excluded_modulus) {
    if (std::gcd(s, t) != 1 && !(s == 0 && t == 0))
        throw NotPrimitiveError("factor_principal: gcd(s,t) != 1");
    if (s == 0 && t == 0) throw NotPrimitiveError("factor_principal: origin");
    if (excluded_modulus % K.bad_modulus() != 0)
        throw Error("factor_principal: excluded modulus must cover 2*b*Delta_theta");
    Int fval = intpoly::eval_form(K.source_form(), s, t);
    if (fval == 0) throw ZeroValueError("factor_principal: F(s,t) = 0");
    Int value = fval;
    if (!K.is_rational())
        value *= pow(K.b(), static_cast<unsigned>(K.degree() - 1));
    int64_t v64 = to_i64(abs(value));
    std::vector<std::pair<PrimeIdeal, int>> factors;
    for (const auto& [p, e] : factorize(v64)) {
        if (gcd(excluded_modulus, Int(p)) != 1) continue;
        int64_t root;
        if (t % p != 0) {
            int64_t tbar = mod_inverse(((t % p) + p) % p, p);
            Int bs = K.is_rational() ? Int(0) : K.b() * s;
            Int r = (bs % p) * tbar % p;
            if (r < 0) r += p;
            root = to_i64(r);
        } else {
            // Only possible for K = Q (F proportional to y): root = theta mod p.
            if (!K.is_rational())
                throw Error("factor_principal: p | t at a good prime");
            Int r = (-K.monic_data().degenerate_c) % p;
            if (r < 0) r += p;
            root = to_i64(r);
        }
        polymod::Poly mp = polymod::reduce(K.min_poly(), p);
        if (polymod::eval(mp, root % p, p) != 0)
            throw Error("factor_principal: derived root fails the minimal polynomial");
        factors.emplace_back(PrimeIdeal{p, 1, 1, root, 0}, e);
    }
    return IdealFactorization(std::move(factors));
}

bool in_P_circ(const IdealFactorization& a) {
    return std::all_of(a.factors().begin(), a.factors().end(),
                       [](const auto& f) { return f.first.f == 1; });
}

bool in_P(const IdealFactorization& a) {
    if (!in_P_circ(a)) return false;
    const auto& fs = a.factors();
    for (size_t i = 1; i < fs.size(); ++i)
        if (fs[i].first.p == fs[i - 1].first.p) return false;
    return true;
}

namespace {

// Root of min_poly mod p^a obtained by lifting n0 one power at a time.
int64_t hensel_lift(const IntPolynomial& f, int64_t p, int a, int64_t n0) {
    int64_t mod = p;
    int64_t n = n0 % p;
    Int fp_at = f.derivative().eval(n) % p;
    if (fp_at < 0) fp_at += p;
    if (fp_at == 0) throw Error("hensel_lift: derivative vanishes (ramified or bad prime)");
    for (int j = 1; j < a; ++j) {
        int64_t next_mod = mod * p;
        Int fv = f.eval(n) % next_mod;
        if (fv < 0) fv += next_mod;
        // n' = n - f(n) * inv(f'(n)) mod p^{j+1}; the correction is a multiple of p^j.
        Int step = (fv / mod) % p;
        int64_t dinv = mod_inverse(to_i64(fp_at), p);
        int64_t corr = to_i64((step * dinv) % p);
        n = n - corr * mod;
        n %= next_mod;
        if (n < 0) n += next_mod;
        mod = next_mod;
    }
    if (f.eval(n) % mod != 0) throw Error("hensel_lift: lift failed");
    return n;
}

}  // namespace

CongruenceParameter congruence_parameter(const NumberField& K, const IdealFactorization& a) {
    if (!in_P(a)) throw Error("congruence_parameter: ideal not in P_K");
    if (gcd(a.norm(), K.delta_theta()) != 1)
        throw Error("congruence_parameter: norm shares a factor with Delta_theta");
    int64_t k = 0, m = 1;
    for (const auto& [pi, e] : a.factors()) {
        int64_t pe = ipow(pi.p, e);
        int64_t kp = hensel_lift(K.min_poly(), pi.p, e, pi.root);
        // CRT combine (k mod m) with (kp mod pe)
        int64_t minv = mod_inverse(m % pe, pe);
        __int128 diff = ((kp - k) % pe + pe) % pe;
        int64_t u = static_cast<int64_t>(static_cast<__int128>(minv) * diff % pe);
        k = k + m * u;
        m *= pe;
        k %= m;
        if (k < 0) k += m;
    }
    return CongruenceParameter{k, m};
}

std::vector<IdealFactorization> enumerate_ideals(const NumberField& K, int64_t X,
                                                 const EnumerateOptions& opts) {
    std::vector<IdealFactorization> out;
    if (X < 1) return out;
    // Prime ideals of norm <= X on usable primes.
    std::vector<PrimeIdeal> primes;
    for (int64_t p : primes_below(X + 1)) {
        if (!K.is_good_prime(p)) continue;
        if (gcd(opts.coprime_to, Int(p)) != 1) continue;
        for (const auto& pi : K.split_prime(p)) {
            if (pi.f > 1 && (pi.f * std::log(static_cast<double>(p)) >
                             std::log(static_cast<double>(X)) + 1e-9))
                continue;
            if (pi.norm() <= X) primes.push_back(pi);
        }
    }
    std::sort(primes.begin(), primes.end());

    std::vector<std::pair<PrimeIdeal, int>> current;
    // DFS over prime-ideal indices; exponents bounded by the norm cap.
    std::function<void(size_t, int64_t)> rec = [&](size_t idx, int64_t norm_left) {
        out.emplace_back(current);
        for (size_t i = idx; i < primes.size(); ++i) {
            int64_t np = primes[i].norm();
            if (np > norm_left) continue;
            if (opts.cls != IdealClass::All && primes[i].f != 1) continue;
            if (opts.cls == IdealClass::P && !current.empty() &&
                current.back().first.p == primes[i].p)
                continue;
            int max_e = opts.squarefree ? 1 : std::numeric_limits<int>::max();
            int64_t acc = 1;
            for (int e = 1; e <= max_e; ++e) {
                if (acc > norm_left / np) break;
                acc *= np;
                current.emplace_back(primes[i], e);
                rec(i + 1, norm_left / acc);
                current.pop_back();
            }
        }
    };
    rec(0, X);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace formsum::numfield
