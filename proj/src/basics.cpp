#include "formsum/basics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace formsum {

std::vector<int64_t> primes_below(int64_t limit) {
    std::vector<int64_t> out;
    if (limit <= 2) return out;
    std::vector<bool> sieve(static_cast<size_t>(limit), true);
    sieve[0] = sieve[1] = false;
    for (int64_t i = 2; i * i < limit; ++i) {
        if (!sieve[static_cast<size_t>(i)]) continue;
        for (int64_t j = i * i; j < limit; j += i) sieve[static_cast<size_t>(j)] = false;
    }
    for (int64_t i = 2; i < limit; ++i)
        if (sieve[static_cast<size_t>(i)]) out.push_back(i);
    return out;
}

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % d == 0) return n == d;
    }
    // deterministic Miller-Rabin for 64-bit range
    auto mulmod = [](int64_t a, int64_t b, int64_t m) -> int64_t {
        return static_cast<int64_t>(static_cast<__int128>(a) * b % m);
    };
    int64_t d = n - 1;
    int r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    for (int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        int64_t x = 1, base = a % n, e = d;
        while (e > 0) {
            if (e & 1) x = mulmod(x, base, n);
            base = mulmod(base, base, n);
            e >>= 1;
        }
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < r - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<PrimePower> factorize(int64_t n, int64_t trial_bound) {
    if (n == 0) throw Error("factorize: zero input");
    if (n < 0) n = -n;
    std::vector<PrimePower> out;
    for (int64_t p = 2; p * p <= n && p <= trial_bound; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1) {
        if (n <= trial_bound * trial_bound || is_prime(n)) {
            out.push_back({n, 1});
        } else {
            throw UnfactoredError("factorize: cofactor " + std::to_string(n) +
                                  " exceeds trial bound");
        }
    }
    return out;
}

int64_t mod_pow(int64_t base, int64_t exp, int64_t mod) {
    if (mod <= 0) throw Error("mod_pow: nonpositive modulus");
    auto mulmod = [mod](int64_t a, int64_t b) -> int64_t {
        return static_cast<int64_t>(static_cast<__int128>(a) * b % mod);
    };
    int64_t result = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base);
        base = mulmod(base, base);
        exp >>= 1;
    }
    return result;
}

int64_t mod_inverse(int64_t a, int64_t mod) {
    int64_t t = 0, new_t = 1;
    int64_t r = mod, new_r = ((a % mod) + mod) % mod;
    while (new_r != 0) {
        int64_t q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    if (r != 1) throw Error("mod_inverse: not invertible");
    return ((t % mod) + mod) % mod;
}

int64_t ipow(int64_t base, int exp) {
    int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && std::abs(r) > std::numeric_limits<int64_t>::max() / std::abs(base))
            throw Error("ipow: overflow");
        r *= base;
    }
    return r;
}

int64_t tau(int64_t n) {
    int64_t t = 1;
    for (const auto& [p, e] : factorize(n)) t *= (e + 1);
    return t;
}

int64_t p_plus(int64_t n) {
    if (n < 0) n = -n;
    if (n == 1) return 1;
    auto f = factorize(n);
    return f.back().p;
}

int64_t p_minus(int64_t n) {
    if (n < 0) n = -n;
    if (n == 1) return std::numeric_limits<int64_t>::max();
    auto f = factorize(n);
    return f.front().p;
}

}  // namespace formsum
