#pragma once

// Dense univariate polynomial arithmetic over Z/pZ, for the small degrees
// that appear in minimal polynomials (d <= 8 in practice).

#include "formsum/basics.hpp"
#include "formsum/intpoly.hpp"

#include <vector>

namespace formsum::polymod {

using Poly = std::vector<int64_t>;  // lowest degree first, coefficients in [0,p)

Poly trim(Poly a);
Poly reduce(const intpoly::IntPolynomial& f, int64_t p);
Poly mul(const Poly& a, const Poly& b, int64_t p);
Poly rem(Poly a, const Poly& m, int64_t p);
Poly quot(const Poly& a, const Poly& m, int64_t p);  // exact or floor quotient
Poly gcd(Poly a, Poly b, int64_t p);                 // monic
Poly make_monic(Poly a, int64_t p);
Poly add(const Poly& a, const Poly& b, int64_t p);
Poly sub(const Poly& a, const Poly& b, int64_t p);
int64_t eval(const Poly& a, int64_t x, int64_t p);

// base^e mod (m, p)
Poly pow_mod(const Poly& base, const Int& e, const Poly& m, int64_t p);

// x^{p^k} mod (m, p)
Poly frobenius(const Poly& m, int64_t p, int k);

// Roots of a squarefree polynomial mod p, ascending. Deterministic.
std::vector<int64_t> roots(const Poly& f, int64_t p);

}  // namespace formsum::polymod
