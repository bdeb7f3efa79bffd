#pragma once

#include "formsum/arith.hpp"
#include "formsum/lattice2d.hpp"
#include "formsum/numfield.hpp"
#include "formsum/region.hpp"

#include <array>
#include <map>
#include <vector>

namespace formsum::sieve {

using numfield::IdealFactorization;
using numfield::NumberField;

struct SievePlan {
    double z = 0;  // V^omega
    double omega = 0.3;
    double eta = 2.0 / 3.0;
    double gamma = 1.0 / 3.0;
    arith::WModulus W;
    int64_t q_G = 1;
};

// n = a * b with a the greatest prefix product p1^a1...pj^aj <= z of the
// ascending prime factorization. gcd(a, b) = 1 and P-(b) > P+(a).
struct SmoothRoughSplit {
    int64_t a = 1;
    Int b = 1;
    int64_t p_minus_b = std::numeric_limits<int64_t>::max();  // P-(1) = +inf
};

SmoothRoughSplit split_smooth_rough(int64_t n, double z);
SmoothRoughSplit split_smooth_rough(const std::vector<PrimePower>& factors, double z);

enum class CaseLabel { I, II, III, IV };
const char* case_name(CaseLabel c);

// Precedence I, II, III, IV; exactly one label. The log z loglog z threshold
// is clamped to 0 for z <= e^e.
CaseLabel classify_case(const SmoothRoughSplit& split, double z, double eta);

// Brun pure-sieve upper weights: lambda_d = mu(d) on squarefree d | P(z_level)
// with omega(d) <= 2r, 2r = largest even integer <= log(level_D)/log(z_level).
// lambda_1 = 1, |lambda_d| <= 1, every d <= level_D, and
// sum_{d|n} lambda_d >= [n = 1] for squarefree n | P(z_level).
std::map<int64_t, int> lambda_plus(double z_level, double level_D);

// Exact count of primitive (s,t) in R meeting the congruence lattice of the
// a_i inside G, whose (q_G W)-parts lie in P_{K_i}, are divisible by a_i with
// cofactor coprime to a_i, and whose remaining rational primes are >= z^gamma.
int64_t U_gamma_count(const std::vector<std::reference_wrapper<const NumberField>>& Ks,
                      const std::vector<IdealFactorization>& as, const region::Region& R,
                      const lattice2d::Lattice2& G, const SievePlan& plan);

struct CaseSums {
    std::array<double, 4> per_case{};
    double total = 0;  // exact sum of per_case
    int64_t points = 0;
};

// Sum of prod_i f_i((b_i s - theta_i t)_{q_G W}) over primitive points of
// G in R with all F_i(s,t) != 0, split by case label of the (q_G W)-coprime
// value part. Result is independent of the worker count.
CaseSums case_sums(const std::vector<std::reference_wrapper<const NumberField>>& Ks,
                   const std::vector<arith::IdealFn>& fs, const region::Region& R,
                   const lattice2d::Lattice2& G, const SievePlan& plan, int workers = 1);

}  // namespace formsum::sieve
