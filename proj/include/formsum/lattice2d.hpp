#pragma once

#include "formsum/basics.hpp"
#include "formsum/numfield.hpp"
#include "formsum/region.hpp"

#include <array>
#include <functional>
#include <optional>

namespace formsum::lattice2d {

// Full-rank sublattice of Z^2 with Hermite-normal-form basis rows
// (a, b), (0, c): a, c > 0 and 0 <= b < c. Points are {u*(a,b) + v*(0,c)}.
class Lattice2 {
public:
    static Lattice2 standard() { return from_rows(1, 0, 0, 1); }
    // Rows are generator vectors.
    static Lattice2 from_rows(int64_t g00, int64_t g01, int64_t g10, int64_t g11);

    int64_t a() const { return a_; }
    int64_t b() const { return b_; }
    int64_t c() const { return c_; }
    int64_t det() const { return a_ * c_; }

    bool contains(int64_t s, int64_t t) const;

    // First successive minimum (Euclidean), via Lagrange-Gauss reduction.
    // Squared length is exact.
    int64_t first_minimum_sq() const;
    double first_minimum() const;
    std::array<int64_t, 2> shortest_vector() const;

    bool is_primitive() const;

private:
    friend Lattice2 hnf(int64_t, int64_t, int64_t, int64_t);
    Lattice2(int64_t a, int64_t b, int64_t c) : a_(a), b_(b), c_(c) {}
    int64_t a_, b_, c_;
};

Lattice2 hnf(int64_t g00, int64_t g01, int64_t g10, int64_t g11);

// {y in Z^2 : M y = 0 mod d} for a 2x2 integer matrix M, as a Lattice2.
Lattice2 kernel_mod(const std::array<std::array<int64_t, 2>, 2>& M, int64_t d);

// Intersection of two full-rank lattices.
Lattice2 intersect(const Lattice2& L1, const Lattice2& L2);

// {(s,t) in G : b_i s = k(c_i) t mod N(c_i) for all i}. Requires pairwise
// coprime norms, coprime to det(G) and the fields' discriminants.
Lattice2 congruence_lattice(const std::vector<std::reference_wrapper<const numfield::NumberField>>& Ks,
                            const std::vector<numfield::IdealFactorization>& ideals,
                            const Lattice2& G);

struct ResidueCondition {
    int64_t sigma, tau, q;
};

struct EnumerateOptions {
    bool primitive = false;
    std::optional<ResidueCondition> residue;
};

// Visit all lattice points of G in R (optionally Z^2-primitive, optionally
// in a fixed residue class), in deterministic (u ascending, t ascending)
// order. Return false from the visitor to stop.
void enumerate_points(const Lattice2& G, const region::Region& R, const EnumerateOptions& opts,
                      const std::function<bool(int64_t, int64_t)>& visit);

std::vector<std::pair<int64_t, int64_t>> collect_points(const Lattice2& G, const region::Region& R,
                                                        const EnumerateOptions& opts = {});

struct CountResult {
    int64_t exact;
    double main;
    double error_scale;  // tau(det G) * K_R / lambda_G
};

// Lemma-style counting pair: exact enumeration of primitive points in a
// residue class vs. vol/(zeta(2) det(G) q^2) * local factors.
CountResult count_and_mainterm(const Lattice2& G, const region::Region& R,
                               std::pair<int64_t, int64_t> x0, int64_t q);

}  // namespace formsum::lattice2d
