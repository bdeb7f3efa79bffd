#pragma once

#include "formsum/basics.hpp"
#include "formsum/intpoly.hpp"
#include "formsum/numfield.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace formsum::arith {

using intpoly::BinaryForm;
using intpoly::IntPolynomial;
using numfield::IdealFactorization;
using numfield::NumberField;
using numfield::PrimeIdeal;

// Pseudomultiplicative function on ideals, defined by a prime-power rule
// extended multiplicatively, together with its class parameters (A, B, eps).
struct IdealFn {
    std::string name;
    std::function<double(const PrimeIdeal&, int)> prime_power_rule;
    double A = 2.0;
    double B = 4.0;
    double eps = 0.5;
    bool submultiplicative = false;
};

// Built-in presets; params may override (A, B, eps).
//   one        : f = 1
//   tau_K      : f(p^v) = v + 1 (submultiplicative)
//   omega_pow  : f(p^v) = base^v
//   sqfree_ind : f(p^v) = [v == 1]
//   norm_eps   : f(p^v) = min(N(p)^{v*eps}, B)
IdealFn make_preset(const std::string& name, const std::map<std::string, double>& params = {});

struct WModulus {
    int64_t w = 0;
    Int W = 1;  // product of primes <= w

    static WModulus from_w(int64_t w);
};

double eval_fn(const IdealFn& f, const IdealFactorization& a);

IdealFactorization restrict_W(const IdealFactorization& a, const WModulus& W);

struct Violation {
    IdealFactorization a, b;
    double lhs, rhs;
};
struct PseudomultReport {
    int64_t pairs_checked = 0;
    std::vector<Violation> violations;  // capped at 16 witnesses
    bool ok() const { return violations.empty(); }
};
// f(ab) <= f(a) min{A^Omega(b), B (Nb)^eps} over coprime good-prime pairs
// with Na*Nb <= X.
PseudomultReport check_pseudomultiplicative(const IdealFn& f, const NumberField& K, int64_t X);

// #{x mod k : P(x) = 0 mod k}; Hensel at primes away from disc(P)*lc(P),
// brute force otherwise.
int64_t rho_P(const IntPolynomial& P, int64_t k);

// rho of F(x,1) when F(1,0) != 0, else 1.
int64_t rho_bar(const BinaryForm& F, int64_t k);

// Euler products over p | k. PoleError when a denominator vanishes.
double h_star(const std::vector<BinaryForm>& forms, int64_t k);
double h_star_W(const std::vector<BinaryForm>& forms, int64_t k, const WModulus& W);
double h_dagger(const std::vector<int>& degrees, int64_t k);
double h_small(int64_t d);  // prod_{p|d} (1 + 1/p)^{-1}
double c_p(const std::vector<BinaryForm>& forms, int64_t p);

// h_dagger factor of an ideal: product over the rational primes under it.
double h_dagger_ideal(const std::vector<int>& degrees, const IdealFactorization& a);

// E_f(x; W): exp of the degree-1 prime sum when f is submultiplicative,
// else the squarefree P_K-circ partial sum.
double E_f(const IdealFn& f, const NumberField& K, double x, const WModulus& W);

// u(a) of the multi-field tuple sum; zero off the good-prime support.
double u_fn(const std::vector<IdealFn>& fs,
            const std::vector<std::reference_wrapper<const NumberField>>& Ks, int64_t a);

struct ESTResult {
    double value;          // sum_{a > S, P+(a) < T, gcd(a,W)=1, a <= cap} u(a)/a
    double partial_sum_T;  // sum_{b <= T, gcd(b,W)=1} u(b)/b
    int64_t cap;
    bool truncated;  // the tail above cap is not included
};
ESTResult E_ST(const std::vector<IdealFn>& fs,
               const std::vector<std::reference_wrapper<const NumberField>>& Ks, double S,
               double T, const WModulus& W, int64_t cap);

struct Lemma22Result {
    double lhs;    // sum_{Na<=x} f(a_W) fdagger(a_W) / Na
    double rhs;    // squarefree W-coprime sum of f(b)/Nb
    double ratio;  // lhs / rhs
};
// fdagger must satisfy |fdagger(p^v) - 1| <= M / Np; requires w > 2(A+M).
Lemma22Result lemma22_ratio(const IdealFn& f, const IdealFn& fdagger, double M,
                            const NumberField& K, const WModulus& W, int64_t x);

}  // namespace formsum::arith
