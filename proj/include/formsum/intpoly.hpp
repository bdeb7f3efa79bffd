#pragma once

#include "formsum/basics.hpp"

#include <string>
#include <vector>

namespace formsum::intpoly {

// Univariate polynomial with exact integer coefficients, lowest degree first.
// Trailing zeros are stripped on construction; the zero polynomial has an
// empty coefficient vector and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs);

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial x_minus(const Int& a);  // x - a

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    const Int& coeff(int i) const;  // zero outside range
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& leading() const;

    Int eval(const Int& x) const;
    IntPolynomial derivative() const;

    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }
    std::string str() const;

private:
    std::vector<Int> coeffs_;
    static const Int kZero;
};

// Binary form F(x,y) = sum_j c_j x^{d-j} y^j of degree d >= 1.
class BinaryForm {
public:
    // coeffs = [c0, ..., cd], decreasing x-power. Must not be identically zero.
    explicit BinaryForm(std::vector<Int> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    Int b() const { return coeffs_.front(); }  // F(1,0)

    // True iff F = c*y^d form degenerates to c*y (degree 1, b = 0).
    bool proportional_to_y() const { return degree() == 1 && coeffs_[0] == 0; }

    // F(x,1) as a univariate polynomial.
    IntPolynomial dehomogenize() const;

    std::string str() const;

private:
    std::vector<Int> coeffs_;
};

struct MonicFormData {
    BinaryForm tilde_form;  // integer coefficients, tilde_form(1,0) = 1
    Int b;                  // F(1,0)
    bool is_degenerate_y;   // F = c*y; theta = -c, K = Q
    Int degenerate_c;       // valid iff is_degenerate_y
};

enum class IrreducibilityResult { Proven, Unknown };

Int eval_form(const BinaryForm& F, const Int& s, const Int& t);

// Sylvester-determinant resultant of f and g, rows of f first.
Int resultant(const IntPolynomial& f, const IntPolynomial& g);

// (-1)^{d(d-1)/2} res(f, f'). Requires f monic, deg >= 2.
Int discriminant(const IntPolynomial& f);

// tilde F(x,y) = b^{d-1} F(b^{-1} x, y); degenerate branch for F = c*y.
MonicFormData make_monic_form(const BinaryForm& F);

// Proven if deg = 1, or tilde F(x,1) is irreducible mod some prime
// p <= prime_bound not dividing the discriminant. Unknown otherwise.
IrreducibilityResult irreducibility_witness(const BinaryForm& F, int64_t prime_bound);

// Parse "[c0,c1,...,cd]" (decreasing x-power).
BinaryForm parse_form(const std::string& text);

// gcd over Q has positive degree? Decided exactly via subresultant remainders.
bool have_common_factor(const IntPolynomial& f, const IntPolynomial& g);

}  // namespace formsum::intpoly
