#include "formsum/region.hpp"

#include <doctest.h>

#include <cmath>

using namespace formsum;
using namespace formsum::region;
using intpoly::BinaryForm;

TEST_CASE("stats closed forms") {
    // [0,1]^2: vol 1, sup 1, boundary 4 -> K_R = 2.5 + 4 ln 2
    auto s = stats(Region{Rectangle{0, 1, 0, 1}});
    CHECK(s.vol == 1.0);
    CHECK(s.sup_norm == 1.0);
    CHECK(s.boundary_len == 4.0);
    CHECK(s.k_r == doctest::Approx(2.5 + 4 * std::log(2.0)).epsilon(1e-14));

    // [0,10]^2: 1 + 10 + 40 ln 11 + 100/11
    auto s10 = stats(Region{Rectangle{0, 10, 0, 10}});
    CHECK(s10.k_r == doctest::Approx(11 + 40 * std::log(11.0) + 100.0 / 11).epsilon(1e-14));

    auto d = stats(Region{Disc{0, 0, 2, 0}});
    CHECK(d.vol == doctest::Approx(4 * M_PI).epsilon(1e-14));
    CHECK(d.sup_norm == 2.0);
    CHECK(d.boundary_len == doctest::Approx(4 * M_PI).epsilon(1e-14));

    auto a = stats(Region{Disc{0, 0, 3, 1}});
    CHECK(a.vol == doctest::Approx(8 * M_PI).epsilon(1e-14));
    CHECK(a.boundary_len == doctest::Approx(8 * M_PI).epsilon(1e-14));

    // unit right triangle
    auto t = stats(Region{ConvexPolygon{{{0, 0}, {1, 0}, {0, 1}}}});
    CHECK(t.vol == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(t.boundary_len == doctest::Approx(2 + std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("contains") {
    Region r{Rectangle{-1, 1, -2, 2}};
    CHECK(r.contains(1.0, 2.0));  // closed
    CHECK(!r.contains(1.1, 0.0));
    Region an{Disc{0, 0, 5, 2}};
    CHECK(an.contains(3.0, 0.0));
    CHECK(!an.contains(1.0, 0.0));  // inside the hole
    CHECK(an.contains(2.0, 0.0));   // inner boundary closed
    Region tri{ConvexPolygon{{{0, 0}, {4, 0}, {0, 4}}}};
    CHECK(tri.contains(1.0, 1.0));
    CHECK(tri.contains(2.0, 2.0));  // on the hypotenuse
    CHECK(!tri.contains(3.0, 3.0));
}

TEST_CASE("bounding box") {
    Region d{Disc{1, -2, 3, 0}};
    CHECK(d.min_x() == -2.0);
    CHECK(d.max_x() == 4.0);
    CHECK(d.min_y() == -5.0);
    CHECK(d.max_y() == 1.0);
}

TEST_CASE("region validation") {
    CHECK_THROWS_AS(Region(Rectangle{1, 1, 0, 2}), ConfigError);
    CHECK_THROWS_AS(Region(Disc{0, 0, 2, 3}), ConfigError);
    // clockwise polygon rejected
    CHECK_THROWS_AS(Region(ConvexPolygon{{{0, 0}, {0, 1}, {1, 0}}}), ConfigError);
    // non-convex rejected
    CHECK_THROWS_AS(
        Region(ConvexPolygon{{{0, 0}, {4, 0}, {1, 1}, {0, 4}}}), ConfigError);
}

TEST_CASE("is_regular") {
    std::vector<BinaryForm> pd = {BinaryForm({1, 0, 1})};  // positive definite
    // disc containing the origin fails
    CHECK(!is_regular(Region{Disc{0, 0, 100, 0}}, pd, 1.0).regular);
    // annulus avoiding origin passes
    CHECK(is_regular(Region{Disc{0, 0, 20, 1}}, pd, 1.0).regular);
    // x^2 - 2y^2 changes sign across the annulus
    std::vector<BinaryForm> indef = {BinaryForm({1, 0, -2})};
    CHECK(!is_regular(Region{Disc{0, 0, 20, 1}}, indef, 1.0).regular);
    // but is fine on a wedge-shaped box away from its zero lines
    CHECK(is_regular(Region{Rectangle{40, 400, 1, 20}}, indef, 0.5).regular);
    // volume threshold: tiny region fails vol >= K_R^c1
    auto rep = is_regular(Region{Rectangle{100, 101, 100, 101}}, pd, 1.0);
    CHECK(!rep.regular);
}

TEST_CASE("parse_region") {
    auto r = parse_region(R"({"shape":"rect","x":[0,2],"y":[1,3]})");
    CHECK(stats(r).vol == 4.0);
    auto a = parse_region(R"({"shape":"annulus","center":[0,0],"radius":5,"inner_radius":1})");
    CHECK(a.is_annulus());
    auto p = parse_region(R"({"shape":"polygon","vertices":[[0,0],[2,0],[0,2]]})");
    CHECK(stats(p).vol == 2.0);
    CHECK_THROWS_AS(parse_region(R"({"shape":"blob"})"), ConfigError);
}
