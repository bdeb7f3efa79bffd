#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace formsum {

using Int = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConfigError : Error {
    using Error::Error;
};
struct BadPrimeError : Error {
    using Error::Error;
};
struct NotPrimitiveError : Error {
    using Error::Error;
};
struct ZeroValueError : Error {
    using Error::Error;
};
struct PoleError : Error {
    using Error::Error;
};
struct UnfactoredError : Error {
    using Error::Error;
};

// Compensated (Kahan) accumulator. Summation order is fixed by callers so
// results are reproducible bit-for-bit.
class KahanSum {
public:
    void add(double x) {
        double y = x - comp_;
        double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Primes below `limit`, ascending.
std::vector<int64_t> primes_below(int64_t limit);

bool is_prime(int64_t n);

// Trial-division factorization. Prime factors ascending.
// Throws UnfactoredError if a cofactor above trial_bound^2 survives.
struct PrimePower {
    int64_t p;
    int exp;
};
std::vector<PrimePower> factorize(int64_t n, int64_t trial_bound = 1000000);

int64_t mod_pow(int64_t base, int64_t exp, int64_t mod);
int64_t mod_inverse(int64_t a, int64_t mod);  // throws Error if gcd(a,mod) != 1

int64_t ipow(int64_t base, int exp);

// Divisor count of |n|.
int64_t tau(int64_t n);

// Largest/smallest prime factor with the conventions P+(1)=1, P-(1)=+inf
// (returned as INT64_MAX).
int64_t p_plus(int64_t n);
int64_t p_minus(int64_t n);

inline int64_t to_i64(const Int& v) {
    if (v > std::numeric_limits<int64_t>::max() || v < std::numeric_limits<int64_t>::min())
        throw Error("integer out of 64-bit range: " + v.str());
    return static_cast<int64_t>(v);
}

}  // namespace formsum
