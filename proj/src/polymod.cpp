#include "formsum/detail/polymod.hpp"

#include <algorithm>

namespace formsum::polymod {

namespace {
int64_t mulp(int64_t a, int64_t b, int64_t p) {
    return static_cast<int64_t>(static_cast<__int128>(a) * b % p);
}
}  // namespace

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly reduce(const intpoly::IntPolynomial& f, int64_t p) {
    Poly out;
    for (const Int& c : f.coeffs()) {
        Int r = c % p;
        if (r < 0) r += p;
        out.push_back(to_i64(r));
    }
    return trim(std::move(out));
}

Poly mul(const Poly& a, const Poly& b, int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<int64_t>((static_cast<__int128>(a[i]) * b[j] + c[i + j]) % p);
    return trim(std::move(c));
}

Poly rem(Poly a, const Poly& m, int64_t p) {
    if (m.empty()) throw Error("polymod::rem by zero");
    int64_t lead_inv = mod_inverse(m.back(), p);
    a = trim(std::move(a));
    while (a.size() >= m.size()) {
        int64_t q = mulp(a.back(), lead_inv, p);
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) {
            int64_t v = (a[shift + i] - mulp(q, m[i], p)) % p;
            a[shift + i] = v < 0 ? v + p : v;
        }
        a = trim(std::move(a));
    }
    return a;
}

Poly quot(const Poly& a0, const Poly& m, int64_t p) {
    if (m.empty()) throw Error("polymod::quot by zero");
    Poly a = trim(a0);
    if (a.size() < m.size()) return {};
    int64_t lead_inv = mod_inverse(m.back(), p);
    Poly q(a.size() - m.size() + 1, 0);
    while (a.size() >= m.size()) {
        int64_t qc = mulp(a.back(), lead_inv, p);
        size_t shift = a.size() - m.size();
        q[shift] = qc;
        for (size_t i = 0; i < m.size(); ++i) {
            int64_t v = (a[shift + i] - mulp(qc, m[i], p)) % p;
            a[shift + i] = v < 0 ? v + p : v;
        }
        a = trim(std::move(a));
        if (a.empty()) break;
    }
    return trim(std::move(q));
}

Poly make_monic(Poly a, int64_t p) {
    a = trim(std::move(a));
    if (a.empty() || a.back() == 1) return a;
    int64_t inv = mod_inverse(a.back(), p);
    for (auto& c : a) c = mulp(c, inv, p);
    return a;
}

Poly gcd(Poly a, Poly b, int64_t p) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(std::move(a), p);
}

Poly add(const Poly& a, const Poly& b, int64_t p) {
    Poly c(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        int64_t v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        c[i] = v % p;
    }
    return trim(std::move(c));
}

Poly sub(const Poly& a, const Poly& b, int64_t p) {
    Poly c(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        int64_t v = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
        c[i] = v < 0 ? v + p : v;
    }
    return trim(std::move(c));
}

int64_t eval(const Poly& a, int64_t x, int64_t p) {
    int64_t acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = (mulp(acc, x, p) + *it) % p;
    return acc;
}

Poly pow_mod(const Poly& base0, const Int& e0, const Poly& m, int64_t p) {
    Poly result = {1};
    Poly base = rem(base0, m, p);
    Int e = e0;
    while (e > 0) {
        if ((e & 1) != 0) result = rem(mul(result, base, p), m, p);
        base = rem(mul(base, base, p), m, p);
        e >>= 1;
    }
    return result;
}

Poly frobenius(const Poly& m, int64_t p, int k) {
    Poly acc = rem({0, 1}, m, p);
    for (int i = 0; i < k; ++i) acc = pow_mod(acc, Int(p), m, p);
    return acc;
}

namespace {

// Split the product of linear factors g into its roots. Deterministic:
// tries shifts a = 0, 1, 2, ... with the Euler criterion map.
void split_roots(const Poly& g, int64_t p, std::vector<int64_t>& out) {
    Poly h = make_monic(g, p);
    if (h.size() <= 1) return;
    if (h.size() == 2) {
        // x + c -> root -c
        out.push_back((p - h[0]) % p);
        return;
    }
    for (int64_t a = 0;; ++a) {
        if (a >= p) throw Error("split_roots: exhausted shifts");
        // gcd(h, (x+a)^{(p-1)/2} - 1)
        Poly base = rem({a % p, 1}, h, p);
        Poly t = pow_mod(base, Int((p - 1) / 2), h, p);
        if (t.empty())
            t = {p - 1};  // -1, so gcd picks up the root x = -a itself below
        else
            t[0] = (t[0] + p - 1) % p;
        Poly d = gcd(h, trim(std::move(t)), p);
        if (d.size() > 1 && d.size() < h.size()) {
            split_roots(d, p, out);
            split_roots(quot(h, d, p), p, out);
            return;
        }
        // also try to peel the root x = -a directly
        if (eval(h, (p - a % p) % p, p) == 0) {
            int64_t r = (p - a % p) % p;
            out.push_back(r);
            split_roots(quot(h, Poly{(p - r) % p, 1}, p), p, out);
            return;
        }
    }
}

}  // namespace

std::vector<int64_t> roots(const Poly& f0, int64_t p) {
    std::vector<int64_t> out;
    Poly f = make_monic(trim(f0), p);
    if (f.size() <= 1) return out;
    if (p == 2 || p <= 64) {
        for (int64_t x = 0; x < p; ++x)
            if (eval(f, x, p) == 0) out.push_back(x);
        return out;
    }
    // g = gcd(x^p - x, f): the product of the distinct linear factors.
    Poly xp = pow_mod({0, 1}, Int(p), f, p);
    Poly diff = sub(xp, {0, 1}, p);
    Poly g = gcd(f, diff, p);
    split_roots(g, p, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace formsum::polymod
