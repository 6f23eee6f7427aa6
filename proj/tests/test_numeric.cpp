#include <random>

#include "doctest.h"
#include "geodetic/interval.hpp"
#include "geodetic/numeric.hpp"

using namespace geodetic;

TEST_CASE("rationals reduce on construction") {
    Rat r(Int(6), Int(-4));
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rat(Int(0), Int(7)) == Rat(0));
    CHECK_THROWS_AS(Rat(Int(1), Int(0)), DomainError);
}

TEST_CASE("rational arithmetic and comparisons") {
    Rat a(1, 6), b(1, 10);
    CHECK(a + b == Rat(Int(4), Int(15)));
    CHECK(a - b == Rat(Int(1), Int(15)));
    CHECK(a * b == Rat(Int(1), Int(60)));
    CHECK(a / b == Rat(Int(5), Int(3)));
    CHECK(a > b);
    CHECK(Rat(-1, 2) < Rat(1, 3));
    CHECK(Rat(7, 3).floor() == 2);
    CHECK(Rat(-7, 3).floor() == -3);
    CHECK(Rat(7, 3).ceil() == 3);
    CHECK(Rat(1, 2).round() == 1);
    CHECK(Rat::from_string("-21/14") == Rat(-3, 2));
    CHECK(Rat(-3, 2).str() == "-3/2");
    CHECK(Rat(4, 2).str() == "2");
}

TEST_CASE("smallest-denominator rational in an interval") {
    CHECK(best_rational_in(Rat(1, 3), Rat(1, 2)) == Rat(1, 2));
    CHECK(best_rational_in(Rat(Int(314), Int(100)), Rat(Int(315), Int(100))) ==
          Rat(Int(22), Int(7)));
    CHECK(best_rational_in(Rat(-1, 10), Rat(1, 10)) == Rat(0));
    CHECK(best_rational_in(Rat(-1, 2), Rat(-1, 3)) == Rat(-1, 2));
    CHECK(best_rational_in(Rat(2), Rat(3)) == Rat(2));
    // pinpoint interval
    CHECK(best_rational_in(Rat(5, 7), Rat(5, 7)) == Rat(5, 7));
}

TEST_CASE("interval endpoints always bracket the exact value") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-400, 400), den(1, 97);
    for (int i = 0; i < 400; ++i) {
        Rat a(num(rng), den(rng)), b(num(rng), den(rng));
        RealInterval ia = RealInterval::from_rat(a, 64);
        RealInterval ib = RealInterval::from_rat(b, 64);
        CHECK((ia + ib).contains(a + b));
        CHECK((ia - ib).contains(a - b));
        CHECK((ia * ib).contains(a * b));
        CHECK(ia.scaled(b).contains(a * b));
        CHECK((-ia).contains(-a));
        CHECK(ia.abs().contains(a.abs()));
    }
}

TEST_CASE("interval square roots and arctangents bracket known values") {
    // sqrt(a)^2 = a stays inside the product interval
    for (long k : {2L, 3L, 5L, 7L, 457L}) {
        RealInterval r = RealInterval::from_int(k, 128).sqrt();
        CHECK((r * r).contains(Rat(k)));
        CHECK(r.width() < Rat(Int(1), Int(1) << 100));
    }
    // atan(1) = pi/4
    RealInterval q =
        RealInterval::from_rat(Rat(1), 128).atan() - RealInterval::pi(128).scaled(Rat(1, 4));
    CHECK(q.contains(Rat(0)));
    // asin(1) = pi/2
    RealInterval h =
        RealInterval::from_rat(Rat(1), 128).asin() - RealInterval::pi(128).scaled(Rat(1, 2));
    CHECK(h.contains(Rat(0)));
    // asin clamps endpoint rounding slop
    RealInterval one = RealInterval::from_rat(Rat(1), 64);
    CHECK_NOTHROW((one * one).asin());
}

TEST_CASE("interval decimal rendering is deterministic") {
    RealInterval pi = RealInterval::pi(128);
    CHECK(pi.decimal(10) == "3.141592654");
    CHECK(RealInterval::from_rat(Rat(1, 4), 128).decimal(10) == "0.25");
    CHECK(RealInterval::pi(128).scaled(Rat(-1)).decimal(10) == "-3.141592654");
}
