#include "formsum/numfield.hpp"

#include <doctest.h>

#include <numeric>

using namespace formsum;
using namespace formsum::numfield;
using intpoly::BinaryForm;

namespace {
const NumberField& gaussian() {
    static NumberField K{BinaryForm({1, 0, 1})};  // x^2 + y^2
    return K;
}
const NumberField& cubic() {
    static NumberField K{BinaryForm({1, 0, -1, -1})};  // x^3 - x y^2 - y^3
    return K;
}
}  // namespace

TEST_CASE("field construction") {
    const auto& K = gaussian();
    CHECK(K.degree() == 2);
    CHECK(K.delta_theta() == -4);
    CHECK(K.bad_modulus() == -8);
    CHECK(K.b() == 1);
    CHECK(!K.is_rational());

    const auto& C = cubic();
    CHECK(C.degree() == 3);
    CHECK(C.delta_theta() == -23);
    CHECK(C.bad_modulus() == -46);

    NumberField D{BinaryForm({0, 5})};  // F = 5y
    CHECK(D.is_rational());
    CHECK(D.degree() == 1);
    CHECK(D.bad_modulus() == 10);
}

TEST_CASE("split_prime Gaussian") {
    const auto& K = gaussian();
    auto s5 = K.split_prime(5);
    REQUIRE(s5.size() == 2);
    CHECK(s5[0].f == 1);
    CHECK(s5[0].root == 2);
    CHECK(s5[1].root == 3);
    auto s3 = K.split_prime(3);
    REQUIRE(s3.size() == 1);
    CHECK(s3[0].f == 2);
    CHECK(s3[0].norm() == 9);
    CHECK_THROWS_AS(K.split_prime(2), BadPrimeError);
    // split iff p = 1 mod 4, exhaustively below 200
    for (int64_t p : primes_below(200)) {
        if (p == 2) continue;
        CHECK(K.split_prime(p).size() == (p % 4 == 1 ? 2 : 1));
    }
}

TEST_CASE("split_prime cubic degree sums") {
    const auto& C = cubic();
    for (int64_t p : primes_below(100)) {
        if (!C.is_good_prime(p)) continue;
        int sum = 0;
        for (const auto& pi : C.split_prime(p)) {
            sum += pi.f;
            if (pi.f == 1) CHECK(C.min_poly().eval(pi.root) % p == 0);
        }
        CHECK(sum == 3);
    }
    // 59 = 2*23 + 13: x^3-x-1 mod 59 has root 4 (64-4-1=59)
    bool found = false;
    for (const auto& pi : C.split_prime(59))
        if (pi.f == 1 && pi.root == 4) found = true;
    CHECK(found);
}

TEST_CASE("factor_principal") {
    const auto& K = gaussian();
    // (2,1): 2^2+1^2 = 5 -> the ideal (5, theta - 2*1^{-1}) = (5, theta-2)
    auto fac = factor_principal(K, 2, 1, Int(8));
    REQUIRE(fac.factors().size() == 1);
    CHECK(fac.factors()[0].first.p == 5);
    CHECK(fac.factors()[0].first.root == 2);
    CHECK(fac.factors()[0].second == 1);
    CHECK(fac.norm() == 5);

    // (7,1): 50 = 2 * 5^2 -> 5-part only, exponent 2, root 7*1 = 2 mod 5
    auto fac2 = factor_principal(K, 7, 1, Int(8));
    REQUIRE(fac2.factors().size() == 1);
    CHECK(fac2.factors()[0].first.root == 2);
    CHECK(fac2.factors()[0].second == 2);
    CHECK(fac2.norm() == 25);

    CHECK_THROWS_AS(factor_principal(K, 2, 2, Int(8)), NotPrimitiveError);
    CHECK_THROWS_AS(factor_principal(K, 0, 0, Int(8)), NotPrimitiveError);
    CHECK_THROWS_AS(factor_principal(K, 2, 1, Int(3)), Error);  // excluded misses D

    NumberField D{BinaryForm({0, 5})};  // value 5t, theta = -5
    auto fd = factor_principal(D, 1, 3, Int(10));
    CHECK(fd.norm() == 3);
    CHECK(fd.factors()[0].first.root == (-5 % 3 + 3) % 3);
}

TEST_CASE("norm of factorization matches coprime value part") {
    const auto& K = gaussian();
    for (int64_t s = -20; s <= 20; ++s)
        for (int64_t t = -20; t <= 20; ++t) {
            if (std::gcd(s, t) != 1) continue;
            auto fac = factor_principal(K, s, t, Int(8));
            int64_t v = s * s + t * t;
            while (v % 2 == 0) v /= 2;
            CHECK(fac.norm() == v);
        }
}

TEST_CASE("P classes") {
    PrimeIdeal p5a{5, 1, 1, 2, 0}, p5b{5, 1, 1, 3, 0}, p9{3, 2, 1, -1, 0};
    CHECK(in_P_circ(IdealFactorization({{p5a, 2}})));
    CHECK(in_P(IdealFactorization({{p5a, 2}})));
    CHECK(in_P_circ(IdealFactorization({{p5a, 1}, {p5b, 1}})));
    CHECK(!in_P(IdealFactorization({{p5a, 1}, {p5b, 1}})));
    CHECK(!in_P_circ(IdealFactorization({{p9, 1}})));
    CHECK(in_P(IdealFactorization{}));
}

TEST_CASE("congruence_parameter") {
    const auto& K = gaussian();
    PrimeIdeal p5{5, 1, 1, 2, 0};
    auto c1 = congruence_parameter(K, IdealFactorization({{p5, 1}}));
    CHECK(c1.k == 2);
    CHECK(c1.modulus == 5);
    // square: k^2 = -1 mod 25 with k = 2 mod 5 -> k = 7
    auto c2 = congruence_parameter(K, IdealFactorization({{p5, 2}}));
    CHECK(c2.k == 7);
    CHECK(c2.modulus == 25);
    // CRT with p13 root 5: 5^2+1 = 26
    PrimeIdeal p13{13, 1, 1, 5, 0};
    auto c3 = congruence_parameter(K, IdealFactorization({{p5, 1}, {p13, 1}}));
    CHECK(c3.modulus == 65);
    CHECK(c3.k % 5 == 2);
    CHECK(c3.k % 13 == 5);
    CHECK((c3.k * c3.k + 1) % 65 == 0);
    // unit
    auto cu = congruence_parameter(K, IdealFactorization{});
    CHECK(cu.modulus == 1);
}

TEST_CASE("enumerate_ideals") {
    const auto& K = gaussian();
    auto all = enumerate_ideals(K, 10);
    // norms: 1, 5, 5, 9, 10(no: 2 excluded, so no norm-10)... expect {1,5,5,9}
    REQUIRE(all.size() == 4);
    CHECK(all[0].is_unit());
    CHECK(all[1].norm() == 5);
    CHECK(all[2].norm() == 5);
    CHECK(all[3].norm() == 9);

    EnumerateOptions pc;
    pc.cls = IdealClass::PCirc;
    auto circ = enumerate_ideals(K, 26, pc);
    // norm 25 appears three times: both squares and the split product
    std::vector<int64_t> norms;
    for (const auto& a : circ) norms.push_back(a.norm_i64());
    CHECK(norms == std::vector<int64_t>{1, 5, 5, 13, 13, 17, 17, 25, 25, 25});

    EnumerateOptions pp;
    pp.cls = IdealClass::P;
    auto pk = enumerate_ideals(K, 26, pp);
    std::vector<int64_t> pnorms;
    for (const auto& a : pk) pnorms.push_back(a.norm_i64());
    CHECK(pnorms == std::vector<int64_t>{1, 5, 5, 13, 13, 17, 17, 25, 25});  // no p1*p2

    EnumerateOptions sq;
    sq.squarefree = true;
    sq.coprime_to = 5;
    auto sf = enumerate_ideals(K, 100, sq);
    for (const auto& a : sf) {
        CHECK(a.is_squarefree());
        CHECK(a.norm() % 5 != 0);
    }
}

TEST_CASE("ideal factorization invariants") {
    PrimeIdeal p5{5, 1, 1, 2, 0}, p13{13, 1, 1, 5, 0};
    IdealFactorization a({{p5, 1}});
    IdealFactorization b({{p13, 2}, {p5, 1}});
    CHECK(b.omega() == 3);
    CHECK(!b.is_squarefree());
    auto c = a.times(b);
    CHECK(c.norm() == Int(25) * 169);
    CHECK_THROWS_AS(IdealFactorization({{p5, 0}}), Error);
    CHECK_THROWS_AS(IdealFactorization({{p5, 1}, {p5, 1}}), Error);
}
