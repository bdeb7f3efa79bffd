#include "formsum/lattice2d.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace formsum::lattice2d {

namespace {
constexpr double kZeta2 = 1.6449340668482264365;  // pi^2/6

// Extended gcd: returns g and x, y with x*a + y*b = g, g >= 0.
int64_t ext_gcd(int64_t a, int64_t b, int64_t& x, int64_t& y) {
    if (b == 0) {
        x = (a >= 0) ? 1 : -1;
        y = 0;
        return std::abs(a);
    }
    int64_t x1, y1;
    int64_t g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

}  // namespace

Lattice2 Lattice2::from_rows(int64_t g00, int64_t g01, int64_t g10, int64_t g11) {
    return hnf(g00, g01, g10, g11);
}

Lattice2 hnf(int64_t g00, int64_t g01, int64_t g10, int64_t g11) {
    __int128 det = static_cast<__int128>(g00) * g11 - static_cast<__int128>(g01) * g10;
    if (det == 0) throw Error("hnf: singular generator matrix");
    // Row operations: bring to ((a, b), (0, c)).
    int64_t x, y;
    int64_t a = ext_gcd(g00, g10, x, y);
    int64_t r1y, r2y;
    if (a == 0) {
        // both generators vertical: rank 2 impossible
        throw Error("hnf: degenerate x-coordinates");
    }
    r1y = x * g01 + y * g11;
    // second row: (g00/a)*row2 - (g10/a)*row1 has x-component 0
    r2y = (g00 / a) * g11 - (g10 / a) * g01;
    int64_t c = std::abs(r2y);
    if (c == 0) throw Error("hnf: singular lattice");
    int64_t b = ((r1y % c) + c) % c;
    return Lattice2(a, b, c);
}

bool Lattice2::contains(int64_t s, int64_t t) const {
    if (s % a_ != 0) return false;
    int64_t u = s / a_;
    return ((t - u * b_) % c_) == 0;
}

std::array<int64_t, 2> Lattice2::shortest_vector() const {
    // Lagrange-Gauss on v1 = (a, b), v2 = (0, c).
    __int128 v1x = a_, v1y = b_, v2x = 0, v2y = c_;
    auto norm2 = [](__int128 x, __int128 y) { return x * x + y * y; };
    if (norm2(v1x, v1y) > norm2(v2x, v2y)) {
        std::swap(v1x, v2x);
        std::swap(v1y, v2y);
    }
    while (true) {
        __int128 dot = v1x * v2x + v1y * v2y;
        __int128 n1 = norm2(v1x, v1y);
        // round(dot / n1)
        __int128 mu = (2 * dot + (dot >= 0 ? n1 : -n1)) / (2 * n1);
        v2x -= mu * v1x;
        v2y -= mu * v1y;
        if (norm2(v2x, v2y) >= n1) break;
        std::swap(v1x, v2x);
        std::swap(v1y, v2y);
    }
    return {static_cast<int64_t>(v1x), static_cast<int64_t>(v1y)};
}

int64_t Lattice2::first_minimum_sq() const {
    auto v = shortest_vector();
    return v[0] * v[0] + v[1] * v[1];
}

double Lattice2::first_minimum() const {
    return std::sqrt(static_cast<double>(first_minimum_sq()));
}

bool Lattice2::is_primitive() const {
    return std::gcd(std::gcd(a_, b_), c_) == 1;
}

namespace {

// Smith normal form of a 2x2 matrix: returns diag entries (s1, s2) and the
// right transform V with U M V = diag(s1, s2) for some unimodular U.
struct Snf2 {
    int64_t s1, s2;
    std::array<std::array<int64_t, 2>, 2> V;  // column transform
};

Snf2 snf2x2(std::array<std::array<int64_t, 2>, 2> m) {
    // Diagonalize with unimodular row/column operations; only the column
    // transform V is tracked. Divisibility s1 | s2 is not needed here.
    std::array<std::array<int64_t, 2>, 2> v{{{1, 0}, {0, 1}}};
    auto col_op = [&](int dst, int src, int64_t k) {
        for (int r = 0; r < 2; ++r) m[r][dst] += k * m[r][src];
        for (int r = 0; r < 2; ++r) v[r][dst] += k * v[r][src];
    };
    auto col_swap = [&]() {
        for (int r = 0; r < 2; ++r) std::swap(m[r][0], m[r][1]);
        for (int r = 0; r < 2; ++r) std::swap(v[r][0], v[r][1]);
    };
    auto row_op = [&](int dst, int src, int64_t k) {
        for (int c = 0; c < 2; ++c) m[dst][c] += k * m[src][c];
    };
    auto row_swap = [&]() { std::swap(m[0], m[1]); };

    while (m[1][0] != 0 || m[0][1] != 0) {
        if (m[0][0] == 0) {
            if (m[1][0] != 0)
                row_swap();
            else
                col_swap();
            continue;
        }
        // Euclid down the first column.
        while (m[1][0] != 0) {
            int64_t q = m[0][0] / m[1][0];
            row_op(0, 1, -q);
            row_swap();
        }
        // Euclid along the first row (may refill m[1][0] via the swap).
        while (m[0][1] != 0) {
            int64_t q = m[0][0] / m[0][1];
            col_op(0, 1, -q);
            col_swap();
        }
    }
    return Snf2{std::abs(m[0][0]), std::abs(m[1][1]), v};
}

}  // namespace

Lattice2 kernel_mod(const std::array<std::array<int64_t, 2>, 2>& M, int64_t d) {
    if (d <= 0) throw Error("kernel_mod: nonpositive modulus");
    Snf2 s = snf2x2(M);
    int64_t m1 = d / std::gcd(s.s1 % d, d);
    int64_t m2 = d / std::gcd(s.s2 % d, d);
    // Kernel columns: V * diag(m1, m2); feed as generator rows (transpose is
    // irrelevant for the generated lattice up to HNF... but not in general,
    // so pass the actual generator vectors).
    int64_t v1x = s.V[0][0] * m1, v1y = s.V[1][0] * m1;
    int64_t v2x = s.V[0][1] * m2, v2y = s.V[1][1] * m2;
    return hnf(v1x, v1y, v2x, v2y);
}

Lattice2 intersect(const Lattice2& L1, const Lattice2& L2) {
    // x = B1 y in L2  <=>  adj(B2) B1 y = 0 mod det(B2), B = basis columns.
    // Column-basis of L: ((a, 0), (b, c)) transposed from rows (a,b),(0,c):
    // columns are the generator vectors themselves.
    // B1 columns: (a1, b1), (0, c1); B2 likewise.
    int64_t a1 = L1.a(), b1 = L1.b(), c1 = L1.c();
    int64_t a2 = L2.a(), b2 = L2.b(), c2 = L2.c();
    // B2 = [[a2, 0], [b2, c2]] (columns (a2,b2),(0,c2)); adj = [[c2, 0], [-b2, a2]].
    // B1 = [[a1, 0], [b1, c1]].
    std::array<std::array<int64_t, 2>, 2> M{{{c2 * a1, 0}, {-b2 * a1 + a2 * b1, a2 * c1}}};
    int64_t d2 = a2 * c2;
    Lattice2 ker = kernel_mod(M, d2);
    // Result generators: B1 * (ker generator vectors).
    auto apply = [&](int64_t y1, int64_t y2) -> std::pair<int64_t, int64_t> {
        return {a1 * y1, b1 * y1 + c1 * y2};
    };
    auto [g1x, g1y] = apply(ker.a(), ker.b());
    auto [g2x, g2y] = apply(0, ker.c());
    return hnf(g1x, g1y, g2x, g2y);
}

Lattice2 congruence_lattice(
    const std::vector<std::reference_wrapper<const numfield::NumberField>>& Ks,
    const std::vector<numfield::IdealFactorization>& ideals, const Lattice2& G) {
    if (Ks.size() != ideals.size()) throw Error("congruence_lattice: size mismatch");
    Lattice2 result = G;
    Int norm_product = 1;
    for (size_t i = 0; i < Ks.size(); ++i) {
        const auto& K = Ks[i].get();
        if (ideals[i].is_unit()) continue;
        auto [k, m] = numfield::congruence_parameter(K, ideals[i]);
        if (gcd(norm_product, Int(m)) != 1)
            throw Error("congruence_lattice: ideal norms not pairwise coprime");
        if (std::gcd(G.det(), m) != 1)
            throw Error("congruence_lattice: norm shares a factor with det(G)");
        norm_product *= m;
        int64_t b = K.is_rational() ? 0 : to_i64(((K.b() % m) + m) % m);
        std::array<std::array<int64_t, 2>, 2> M{{{b, ((-(k % m)) % m + m) % m}, {0, 0}}};
        result = intersect(result, kernel_mod(M, m));
    }
    return result;
}

void enumerate_points(const Lattice2& G, const region::Region& R, const EnumerateOptions& opts,
                      const std::function<bool(int64_t, int64_t)>& visit) {
    const int64_t a = G.a(), b = G.b(), c = G.c();
    double xlo = R.min_x(), xhi = R.max_x();
    double ylo = R.min_y(), yhi = R.max_y();
    int64_t ulo = static_cast<int64_t>(std::ceil((xlo - 1.0) / a));
    int64_t uhi = static_cast<int64_t>(std::floor((xhi + 1.0) / a));
    for (int64_t u = ulo; u <= uhi; ++u) {
        int64_t s = u * a;
        if (s < xlo || s > xhi) continue;
        // t = u*b + v*c; start at the smallest value >= ylo - 1.
        int64_t base = u * b;
        int64_t vlo = static_cast<int64_t>(std::ceil((ylo - 1.0 - base) / c));
        for (int64_t v = vlo;; ++v) {
            int64_t t = base + v * c;
            if (t > yhi + 1.0) break;
            if (!R.contains(s, t)) continue;
            if (opts.primitive && std::gcd(s, t) != 1) continue;
            if (opts.residue) {
                const auto& rc = *opts.residue;
                if (((s - rc.sigma) % rc.q + rc.q) % rc.q != 0) continue;
                if (((t - rc.tau) % rc.q + rc.q) % rc.q != 0) continue;
            }
            if (!visit(s, t)) return;
        }
    }
}

std::vector<std::pair<int64_t, int64_t>> collect_points(const Lattice2& G, const region::Region& R,
                                                        const EnumerateOptions& opts) {
    std::vector<std::pair<int64_t, int64_t>> out;
    enumerate_points(G, R, opts, [&](int64_t s, int64_t t) {
        out.emplace_back(s, t);
        return true;
    });
    return out;
}

CountResult count_and_mainterm(const Lattice2& G, const region::Region& R,
                               std::pair<int64_t, int64_t> x0, int64_t q) {
    if (!G.is_primitive()) throw Error("count_and_mainterm: G not primitive");
    if (q < 1) throw Error("count_and_mainterm: q < 1");
    if (std::gcd(G.det(), q) != 1 || std::gcd(std::gcd(x0.first, x0.second), q) != 1)
        throw Error("count_and_mainterm: gcd(det(G) x0, q) != 1");
    EnumerateOptions opts;
    opts.primitive = true;
    if (q > 1) opts.residue = ResidueCondition{x0.first, x0.second, q};
    int64_t exact = 0;
    enumerate_points(G, R, opts, [&](int64_t, int64_t) {
        ++exact;
        return true;
    });
    region::RegionStats st = region::stats(R);
    double main = st.vol / (kZeta2 * static_cast<double>(G.det()) * static_cast<double>(q) * q);
    for (const auto& [p, e] : factorize(G.det()))
        main /= (1.0 + 1.0 / static_cast<double>(p));
    for (const auto& [p, e] : factorize(q))
        main /= (1.0 - 1.0 / (static_cast<double>(p) * p));
    double error_scale = static_cast<double>(tau(G.det())) * st.k_r / G.first_minimum();
    return CountResult{exact, main, error_scale};
}

}  // namespace formsum::lattice2d
