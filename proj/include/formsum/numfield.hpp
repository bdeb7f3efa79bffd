#pragma once

#include "formsum/basics.hpp"
#include "formsum/intpoly.hpp"

#include <functional>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

namespace formsum::numfield {

using intpoly::BinaryForm;
using intpoly::IntPolynomial;
using intpoly::MonicFormData;

// Prime ideal above an unramified rational prime p, parametrized as
// (p, theta - root) when the residue degree is 1. `idx` separates distinct
// primes of equal residue degree >= 2 above the same p.
struct PrimeIdeal {
    int64_t p = 0;
    int f = 1;      // residue degree
    int e = 1;      // ramification index (always 1 on good primes)
    int64_t root = -1;  // valid iff f == 1
    int idx = 0;

    int64_t norm() const { return ipow(p, f); }

    friend bool operator==(const PrimeIdeal& a, const PrimeIdeal& b) {
        return a.p == b.p && a.f == b.f && a.root == b.root && a.idx == b.idx;
    }
    friend bool operator<(const PrimeIdeal& a, const PrimeIdeal& b) {
        if (a.p != b.p) return a.p < b.p;
        if (a.f != b.f) return a.f < b.f;
        if (a.root != b.root) return a.root < b.root;
        return a.idx < b.idx;
    }
};

// Ideal supported on good primes, as a sorted exponent list.
class IdealFactorization {
public:
    IdealFactorization() = default;
    explicit IdealFactorization(std::vector<std::pair<PrimeIdeal, int>> factors);

    const std::vector<std::pair<PrimeIdeal, int>>& factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }
    Int norm() const;
    int64_t norm_i64() const { return to_i64(norm()); }
    int omega() const;  // Omega_K: sum of exponents
    bool is_squarefree() const;

    IdealFactorization times(const IdealFactorization& other) const;

    friend bool operator==(const IdealFactorization& a, const IdealFactorization& b) {
        return a.factors_ == b.factors_;
    }
    friend bool operator<(const IdealFactorization& a, const IdealFactorization& b);

private:
    std::vector<std::pair<PrimeIdeal, int>> factors_;
};

// The order Z[theta] attached to an irreducible binary form. Immutable
// after construction; the split cache is safe for concurrent lookups.
class NumberField {
public:
    explicit NumberField(const BinaryForm& F);

    const BinaryForm& source_form() const { return form_; }
    const MonicFormData& monic_data() const { return monic_; }
    const IntPolynomial& min_poly() const { return min_poly_; }
    int degree() const { return degree_; }
    const Int& delta_theta() const { return delta_theta_; }
    const Int& bad_modulus() const { return D_; }  // 2 b Delta_theta (2c for F = cy)
    Int b() const { return monic_.b; }
    bool is_rational() const { return monic_.is_degenerate_y; }

    bool is_good_prime(int64_t p) const { return delta_theta_ % p != 0; }

    const std::vector<PrimeIdeal>& split_prime(int64_t p) const;

private:
    BinaryForm form_;
    MonicFormData monic_;
    IntPolynomial min_poly_;
    int degree_;
    Int delta_theta_;
    Int D_;

    mutable std::shared_mutex cache_mutex_;
    mutable std::unordered_map<int64_t, std::vector<PrimeIdeal>> split_cache_;
};

// Part of (bs - theta t) supported on primes coprime to excluded_modulus,
// which must be divisible by the field's bad modulus.
IdealFactorization factor_principal(const NumberField& K, int64_t s, int64_t t,
                                    const Int& excluded_modulus);

bool in_P_circ(const IdealFactorization& a);
bool in_P(const IdealFactorization& a);

// k with a | (bs - theta t) <=> bs = k t mod Na, via Hensel lift + CRT.
struct CongruenceParameter {
    int64_t k;
    int64_t modulus;  // Na
};
CongruenceParameter congruence_parameter(const NumberField& K, const IdealFactorization& a);

enum class IdealClass { All, PCirc, P };

struct EnumerateOptions {
    bool squarefree = false;
    Int coprime_to = 1;
    IdealClass cls = IdealClass::All;
};

// All ideals of norm <= X on good primes coprime to opts.coprime_to,
// each exactly once, sorted by (norm, factor list).
std::vector<IdealFactorization> enumerate_ideals(const NumberField& K, int64_t X,
                                                 const EnumerateOptions& opts = {});

}  // namespace formsum::numfield
