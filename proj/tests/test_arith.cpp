#include "formsum/arith.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace formsum;
using namespace formsum::arith;
using intpoly::BinaryForm;
using intpoly::IntPolynomial;

namespace {

const NumberField& gaussian() {
    static NumberField K{BinaryForm({1, 0, 1})};
    return K;
}

IntPolynomial P(std::initializer_list<int64_t> lowest_first) {
    std::vector<Int> cs;
    for (int64_t c : lowest_first) cs.emplace_back(c);
    return IntPolynomial(cs);
}

// Oracle: count roots of P mod k directly.
int64_t rho_brute(const IntPolynomial& f, int64_t k) {
    int64_t cnt = 0;
    for (int64_t x = 0; x < k; ++x) {
        Int v = f.eval(x) % k;
        if (v == 0) ++cnt;
    }
    return cnt;
}

}  // namespace

TEST_CASE("presets and eval_fn") {
    numfield::PrimeIdeal p5{5, 1, 1, 2, 0}, p13{13, 1, 1, 5, 0};
    numfield::IdealFactorization a({{p5, 2}, {p13, 1}});

    auto tau = make_preset("tau_K");
    CHECK(eval_fn(tau, a) == 6.0);  // (2+1)(1+1)
    CHECK(tau.submultiplicative);
    CHECK(tau.A == 2.0);

    auto one = make_preset("one");
    CHECK(eval_fn(one, a) == 1.0);

    auto om = make_preset("omega_pow", {{"base", 2.0}});
    CHECK(eval_fn(om, a) == 8.0);  // 2^3

    auto sq = make_preset("sqfree_ind");
    CHECK(eval_fn(sq, a) == 0.0);
    CHECK(eval_fn(sq, numfield::IdealFactorization({{p13, 1}})) == 1.0);

    auto ne = make_preset("norm_eps", {{"eps", 0.5}, {"B", 4.0}});
    CHECK(eval_fn(ne, numfield::IdealFactorization({{p5, 1}})) ==
          doctest::Approx(std::sqrt(5.0)));
    CHECK(eval_fn(ne, numfield::IdealFactorization({{p5, 4}})) == 4.0);  // capped

    CHECK_THROWS_AS(make_preset("bogus"), ConfigError);

    // params override class constants
    auto t2 = make_preset("tau_K", {{"B", 32.0}, {"eps", 0.02}});
    CHECK(t2.B == 32.0);
    CHECK(t2.eps == 0.02);
}

TEST_CASE("WModulus and restrict_W") {
    auto W = WModulus::from_w(11);
    CHECK(W.W == 2310);
    CHECK_THROWS_AS(WModulus::from_w(1), ConfigError);

    numfield::PrimeIdeal p5{5, 1, 1, 2, 0}, p13{13, 1, 1, 5, 0};
    numfield::IdealFactorization a({{p5, 2}, {p13, 1}});
    auto aw = restrict_W(a, W);
    REQUIRE(aw.factors().size() == 1);
    CHECK(aw.factors()[0].first.p == 13);
    CHECK(restrict_W(a, WModulus::from_w(13)).is_unit());
}

TEST_CASE("check_pseudomultiplicative") {
    auto tau = make_preset("tau_K");  // A=2, B=4, eps=0.5
    auto rep = check_pseudomultiplicative(tau, gaussian(), 300);
    CHECK(rep.pairs_checked > 100);
    CHECK(rep.ok());

    // deliberately broken class constants produce witnesses
    auto bad = make_preset("tau_K", {{"A", 1.0}, {"B", 1.0}, {"eps", 0.0}});
    auto rep2 = check_pseudomultiplicative(bad, gaussian(), 300);
    CHECK(!rep2.ok());
    CHECK(rep2.violations.size() <= 16);
}

TEST_CASE("rho_P") {
    auto f = P({1, 0, 1});  // x^2 + 1
    CHECK(rho_P(f, 1) == 1);
    CHECK(rho_P(f, 5) == 2);
    CHECK(rho_P(f, 3) == 0);
    CHECK(rho_P(f, 2) == 1);
    CHECK(rho_P(f, 65) == 4);
    // Hensel stability at good primes
    CHECK(rho_P(f, 25) == 2);
    CHECK(rho_P(f, 125) == 2);
    CHECK(rho_P(f, 13 * 13) == 2);
    // brute-force agreement on every modulus up to 400
    auto g = P({-1, -1, 0, 1});  // x^3 - x - 1
    for (int64_t k = 1; k <= 400; ++k) {
        CHECK(rho_P(f, k) == rho_brute(f, k));
        CHECK(rho_P(g, k) == rho_brute(g, k));
    }
    // bad prime brute force: x^2 + 1 mod 4 has no roots
    CHECK(rho_P(f, 4) == 0);
}

TEST_CASE("rho_bar") {
    BinaryForm F({1, 0, 1});
    CHECK(rho_bar(F, 5) == 2);
    CHECK(rho_bar(F, 7) == 0);
    CHECK(rho_bar(BinaryForm({0, 5}), 7) == 1);  // degenerate convention
}

TEST_CASE("Euler factors") {
    std::vector<BinaryForm> forms = {BinaryForm({1, 0, 1})};
    // h*(5): rho_bar(5) = 2 -> (1 - 2/6)^{-1} = 1.5
    CHECK(h_star(forms, 5) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(h_star(forms, 7) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(h_star(forms, 35) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(h_star(forms, 1) == 1.0);
    // W-restricted version skips small primes
    CHECK(h_star_W(forms, 5, WModulus::from_w(5)) == 1.0);
    CHECK(h_star_W(forms, 65, WModulus::from_w(5)) ==
          doctest::Approx(1.0 / (1 - 2.0 / 14)).epsilon(1e-15));

    // h_dagger with degree sum 3 at p = 2 would pole
    CHECK_THROWS_AS(h_dagger({3}, 2), PoleError);
    CHECK(h_dagger({1, 2}, 5) == doctest::Approx(2.0).epsilon(1e-15));  // (1-3/6)^{-1}

    CHECK(h_small(6) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(h_small(1) == 1.0);

    // c_p = 1 - rho_bar(p)/(p+1)
    CHECK(c_p(forms, 5) == doctest::Approx(1 - 2.0 / 6).epsilon(1e-15));
    CHECK(c_p(forms, 7) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("E_f submultiplicative branch") {
    auto one = make_preset("one");
    // w=3, x=30: split primes 5,13,17,29, each with two degree-1 ideals
    double expect = std::exp(2.0 * (1.0 / 5 + 1.0 / 13 + 1.0 / 17 + 1.0 / 29));
    CHECK(E_f(one, gaussian(), 30, WModulus::from_w(3)) ==
          doctest::Approx(expect).epsilon(1e-14));

    // tau doubles the per-ideal weight
    auto tau = make_preset("tau_K");
    CHECK(E_f(tau, gaussian(), 30, WModulus::from_w(3)) ==
          doctest::Approx(std::exp(4.0 * (1.0 / 5 + 1.0 / 13 + 1.0 / 17 + 1.0 / 29)))
              .epsilon(1e-14));
}

TEST_CASE("E_f sum branch") {
    // non-submultiplicative flag forces the squarefree P-circ partial sum
    auto f = make_preset("one");
    f.submultiplicative = false;
    // w=3, x=26: squarefree P-circ ideals coprime to 6: norms 1,5,5,13,13,17,17,25
    double expect = 1 + 2.0 / 5 + 2.0 / 13 + 2.0 / 17 + 1.0 / 25;
    CHECK(E_f(f, gaussian(), 26, WModulus::from_w(3)) ==
          doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("u_fn") {
    std::vector<IdealFn> fs = {make_preset("one")};
    std::vector<std::reference_wrapper<const NumberField>> Ks = {std::cref(gaussian())};
    // u(5) = (#ideals of norm 5) * h_dagger(5) = 2 * 1.5
    CHECK(u_fn(fs, Ks, 5) == doctest::Approx(3.0).epsilon(1e-15));
    // 7 inert: no degree-1 ideals
    CHECK(u_fn(fs, Ks, 7) == 0.0);
    CHECK(u_fn(fs, Ks, 1) == 1.0);
    CHECK(u_fn(fs, Ks, 35) == 0.0);
    // u(25): norm-25 P-circ ideals: p1^2, p2^2, p1p2 -> 3 * h_dagger(5)
    CHECK(u_fn(fs, Ks, 25) == doctest::Approx(4.5).epsilon(1e-15));
    // multiplicativity
    CHECK(u_fn(fs, Ks, 65) == doctest::Approx(u_fn(fs, Ks, 5) * u_fn(fs, Ks, 13)).epsilon(1e-12));
}

TEST_CASE("E_ST") {
    std::vector<IdealFn> fs = {make_preset("one")};
    std::vector<std::reference_wrapper<const NumberField>> Ks = {std::cref(gaussian())};
    auto W = WModulus::from_w(3);
    auto r = E_ST(fs, Ks, 10, 100, W, 2000);
    CHECK(r.truncated);
    CHECK(r.value >= 0);
    // partial sum includes b=1 and b=5
    CHECK(r.partial_sum_T >= 1 + 3.0 / 5);
    // enlarging the cap can only grow the tail sum
    auto r2 = E_ST(fs, Ks, 10, 100, W, 4000);
    CHECK(r2.value >= r.value - 1e-15);
    // value only counts T-smooth a > S
    auto r3 = E_ST(fs, Ks, 1e9, 100, W, 2000);
    CHECK(r3.value == 0.0);
}

TEST_CASE("lemma22_ratio") {
    auto tau = make_preset("tau_K");
    IdealFn fdag;
    fdag.name = "fdag";
    fdag.prime_power_rule = [](const numfield::PrimeIdeal& P, int) {
        return 1.0 + 2.0 / static_cast<double>(P.norm());
    };
    auto W = WModulus::from_w(11);
    auto r = lemma22_ratio(tau, fdag, 2.0, gaussian(), W, 1000);
    CHECK(r.lhs > 0);
    CHECK(r.rhs > 0);
    CHECK(r.ratio == doctest::Approx(r.lhs / r.rhs));
    // hypothesis gate: w must exceed 2(A+M)
    CHECK_THROWS_AS(lemma22_ratio(tau, fdag, 2.0, gaussian(), WModulus::from_w(7), 1000),
                    ConfigError);
}
