#include "formsum/intpoly.hpp"

#include <doctest.h>

using namespace formsum;
using namespace formsum::intpoly;

namespace {
IntPolynomial P(std::initializer_list<int64_t> lowest_first) {
    std::vector<Int> cs;
    for (int64_t c : lowest_first) cs.emplace_back(c);
    return IntPolynomial(cs);
}
}  // namespace

TEST_CASE("polynomial basics") {
    auto f = P({-1, -1, 0, 1});  // x^3 - x - 1
    CHECK(f.degree() == 3);
    CHECK(f.is_monic());
    CHECK(f.eval(2) == 5);
    CHECK(f.derivative() == P({-1, 0, 3}));
    CHECK(IntPolynomial::x_minus(3).eval(3) == 0);
    CHECK(P({0, 0}).is_zero());
    CHECK(f.coeff(7) == 0);
}

TEST_CASE("resultant") {
    // res(x-2, x-5) = (x-5) at 2
    CHECK(resultant(P({-2, 1}), P({-5, 1})) == -3);
    CHECK(resultant(P({-5, 1}), P({-2, 1})) == 3);
    // res(x^2+1, x^2+2) = product of (a^2+2) over roots a of x^2+1 = 1
    CHECK(resultant(P({1, 0, 1}), P({2, 0, 1})) == 1);
    // swap symmetry: res(f,g) = (-1)^{mn} res(g,f)
    auto f = P({1, 2, 3});
    auto g = P({-1, -1, 0, 1});
    CHECK(resultant(f, g) == resultant(g, f));  // deg product even
    // common root => 0
    CHECK(resultant(P({-1, 0, 1}), P({-1, 1})) == 0);
}

TEST_CASE("discriminant") {
    CHECK(discriminant(P({-1, -1, 0, 1})) == -23);  // x^3 - x - 1
    CHECK(discriminant(P({1, 0, 1})) == -4);        // x^2 + 1
    CHECK(discriminant(P({2, 0, 1})) == -8);        // x^2 + 2
    CHECK(discriminant(P({-1, 0, 1})) == 4);        // x^2 - 1
    CHECK(discriminant(P({6, 5, 1})) == 1);         // (x+2)(x+3)
}

TEST_CASE("make_monic_form") {
    // 2x^2 + 3y^2 -> x^2 + 6y^2 with b = 2
    BinaryForm F({2, 0, 3});
    auto md = make_monic_form(F);
    CHECK(md.b == 2);
    CHECK(!md.is_degenerate_y);
    CHECK(md.tilde_form.coeffs() == std::vector<Int>{1, 0, 6});
    // degenerate: F = 5y
    auto dg = make_monic_form(BinaryForm({0, 5}));
    CHECK(dg.is_degenerate_y);
    CHECK(dg.degenerate_c == 5);
    CHECK(dg.tilde_form.coeffs() == std::vector<Int>{1, 5});
    // witnessed reducible forms rejected
    CHECK_THROWS_AS(make_monic_form(BinaryForm({1, 0, -1})), Error);  // x^2 - y^2
    CHECK_THROWS_AS(make_monic_form(BinaryForm({1, 2, 1})), Error);   // (x+y)^2
}

TEST_CASE("norm identity") {
    // tilde F(b s, t) = b^{d-1} F(s, t)
    for (auto coeffs : {std::vector<Int>{2, 0, 3}, std::vector<Int>{1, 0, 1},
                        std::vector<Int>{1, 0, -1, -1}, std::vector<Int>{3, 1, 4, 1}}) {
        BinaryForm F(coeffs);
        auto md = make_monic_form(F);
        Int b = md.b;
        int d = F.degree();
        for (int64_t s = -12; s <= 12; ++s)
            for (int64_t t = -12; t <= 12; ++t)
                CHECK(eval_form(md.tilde_form, b * s, t) == pow(b, unsigned(d - 1)) * eval_form(F, s, t));
    }
}

TEST_CASE("irreducibility witness") {
    CHECK(irreducibility_witness(BinaryForm({1, 0, 1}), 100) == IrreducibilityResult::Proven);
    CHECK(irreducibility_witness(BinaryForm({1, 0, -1, -1}), 100) == IrreducibilityResult::Proven);
    CHECK(irreducibility_witness(BinaryForm({0, 7}), 100) == IrreducibilityResult::Proven);
    // x^4 + 1 is irreducible over Q but reducible mod every prime
    CHECK(irreducibility_witness(BinaryForm({1, 0, 0, 0, 1}), 100) ==
          IrreducibilityResult::Unknown);
}

TEST_CASE("parse_form") {
    auto F = parse_form("[1,0,-1,-1]");
    CHECK(F.degree() == 3);
    CHECK(F.coeffs() == std::vector<Int>{1, 0, -1, -1});
    CHECK_THROWS_AS(parse_form("[]"), Error);
    CHECK_THROWS_AS(parse_form("nope"), Error);
}

TEST_CASE("have_common_factor") {
    CHECK(have_common_factor(P({-1, 0, 1}), P({-1, 1})));
    CHECK(!have_common_factor(P({1, 0, 1}), P({2, 0, 1})));
}

TEST_CASE("eval_form and dehomogenize") {
    BinaryForm F({1, 0, -1, -1});  // x^3 - xy^2 - y^3
    CHECK(eval_form(F, 2, 1) == 5);
    CHECK(eval_form(F, 1, 0) == 1);
    auto d = F.dehomogenize();
    CHECK(d == P({-1, -1, 0, 1}));
    CHECK(F.b() == 1);
    CHECK(BinaryForm({0, 5}).proportional_to_y());
}
