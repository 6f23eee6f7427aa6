#include <random>
#include <set>
#include <string>

#include "doctest.h"
#include "geodetic/parse.hpp"
#include "geodetic/splitting.hpp"

using namespace geodetic;

namespace {

MultiQuadNumber mq(const std::string& text) { return parse_multiquad(text); }

RealInterval residual(const MultiQuadNumber& tangent, const SplitAngleResult& r,
                      mpfr_prec_t prec) {
    RealInterval alpha = tangent.eval(prec).atan();
    RealInterval sum = alpha.scaled(Rat(r.m));
    for (const auto& part : r.parts) sum = sum - part.value(prec);
    return sum - RealInterval::pi(prec).scaled(Rat(r.j, Int(2)));
}

}  // namespace

TEST_CASE("multiquad arithmetic reproduces the tangent-addition example") {
    // (sqrt2/2 + sqrt3/3) / (1 - sqrt2 sqrt3/6) = (4/5) sqrt2 + (3/5) sqrt3
    MultiQuadNumber num = mq("1/2*sqrt(2) + 1/3*sqrt(3)");
    MultiQuadNumber den = mq("1") - mq("1/6*sqrt(6)");
    MultiQuadNumber expect = mq("4/5*sqrt(2) + 3/5*sqrt(3)");
    CHECK(num / den == expect);

    CHECK(mq("(1/2)sqrt(8)") == mq("sqrt(2)"));
    CHECK(mq("sqrt(2)") * mq("1") == mq("sqrt(2)"));
    CHECK((mq("1+sqrt(2)") * mq("1-sqrt(2)")) == MultiQuadNumber(Rat(-1)));
    CHECK_THROWS_AS(mq("1") / MultiQuadNumber{}, DomainError);
}

TEST_CASE("multiquad field axioms on random elements of Q(sqrt2, sqrt3, sqrt5)") {
    std::mt19937 rng(47);
    std::uniform_int_distribution<long> pick(-6, 6);
    auto draw = [&]() {
        MultiQuadNumber x;
        for (long k : {1L, 2L, 3L, 5L, 6L, 10L, 15L, 30L})
            x = x + MultiQuadNumber::term(Rat(pick(rng), 1 + std::abs(pick(rng))), k);
        return x;
    };
    for (int i = 0; i < 60; ++i) {
        MultiQuadNumber a = draw(), b = draw(), c = draw();
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        if (!a.is_zero()) CHECK(a / a == MultiQuadNumber(Rat(1)));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("the four-fold split of arctan(sqrt6+sqrt3+sqrt2+1)") {
    SplitAngleResult r = split_angle(mq("sqrt6+sqrt3+sqrt2+1"));
    CHECK(r.m == 4);
    CHECK(r.j == 0);
    REQUIRE(r.parts.size() == 4);
    std::multiset<std::string> got;
    for (const auto& part : r.parts) got.insert(part.str());
    std::multiset<std::string> want = {"ang(1+441/457)", "ang(432/457)", "ang(96/457)",
                                       "ang(288/457)"};
    CHECK(got == want);
    CHECK(residual(mq("sqrt6+sqrt3+sqrt2+1"), r, 256).abs_below(Rat(Int(1), Int(1) << 200)));
}

TEST_CASE("single-radicand tangents split trivially") {
    SplitAngleResult r = split_angle(mq("(1/2)sqrt(2)"));
    CHECK(r.m == 1);
    CHECK(r.j == 0);
    REQUIRE(r.parts.size() == 1);
    CHECK(r.parts[0] == PureAngle(0, Rat(1, 3)));  // tan^2 = 1/2 -> r = 1/3
    CHECK_THROWS_AS(split_angle(mq("3/4")), DomainError);
}

TEST_CASE("2 arctan(1 + sqrt2) = 3 pi / 4") {
    SplitAngleResult r = split_angle(mq("1+sqrt(2)"));
    CHECK(r.m == 2);
    std::multiset<std::string> got;
    for (const auto& part : r.parts) got.insert(part.str());
    CHECK(got == std::multiset<std::string>{"ang(1)", "ang(1/2)"});
    CHECK(r.j == 0);
    CHECK(residual(mq("1+sqrt(2)"), r, 256).abs_below(Rat(Int(1), Int(1) << 200)));
}

TEST_CASE("random two- and three-radicand splits satisfy the identity") {
    std::mt19937 rng(53);
    std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
    const long pools[4][3] = {{2, 3, 0}, {2, 5, 0}, {3, 7, 0}, {2, 3, 5}};
    int done = 0;
    for (int i = 0; done < 100; ++i) {
        const long* pool = pools[i % 4];
        MultiQuadNumber t = MultiQuadNumber(Rat(num(rng), den(rng)));
        for (int k = 0; k < 3 && pool[k]; ++k)
            t = t + MultiQuadNumber::term(Rat(num(rng), den(rng)), pool[k]);
        if (t.is_zero() || t.is_rational()) continue;
        if (t.radicand_primes().size() < 2 && t.coeffs().size() < 2) continue;
        SplitAngleResult r = split_angle(t);
        CHECK(residual(t, r, 256).abs_below(Rat(Int(1), Int(1) << 200)));
        ++done;
    }
}

TEST_CASE("three independent radicals split with m = 8") {
    MultiQuadNumber t = mq("1 + sqrt2 + sqrt3 + sqrt5");
    SplitAngleResult r = split_angle(t);
    CHECK(r.m == 8);
    CHECK(residual(t, r, 320).abs_below(Rat(Int(1), Int(1) << 200)));
}

TEST_CASE("the split multiplier is the size of the radicand difference group") {
    // oracle: closure of the square-free kernels k_i * k_0 under square-free
    // multiplication has exactly m elements
    auto closure_size = [](const MultiQuadNumber& z) {
        std::set<Int> span{Int(1)};
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<Int> snapshot(span.begin(), span.end());
            Int k0 = z.coeffs().begin()->first;
            for (const auto& [k, c] : z.coeffs())
                for (const Int& s : snapshot)
                    if (span.insert(squarefree_part(k * k0 * s).second).second) grew = true;
        }
        return Int(static_cast<long>(span.size()));
    };

    // dependent radicands: sqrt35 is the product of sqrt5 and sqrt7
    MultiQuadNumber dep = mq("1 + sqrt5 + sqrt7 + sqrt35");
    CHECK(split_angle(dep).m == 4);
    CHECK(closure_size(dep) == 4);

    // compound kernels only, pairwise products collapse
    MultiQuadNumber pairs = mq("sqrt6 + sqrt10 + sqrt15");
    CHECK(split_angle(pairs).m == 4);
    CHECK(closure_size(pairs) == 4);

    std::mt19937 rng(71);
    std::uniform_int_distribution<long> pick(1, 30), coeff(1, 4);
    int done = 0;
    for (int i = 0; done < 40; ++i) {
        MultiQuadNumber t;
        for (int j = 0; j < 4; ++j)
            t = t + MultiQuadNumber::term(Rat(coeff(rng), coeff(rng)), pick(rng));
        if (t.is_zero() || t.is_rational()) continue;
        SplitAngleResult r = split_angle(t);
        CHECK(r.m == closure_size(t));
        CHECK(residual(t, r, 320).abs_below(Rat(Int(1), Int(1) << 200)));
        ++done;
    }
}

TEST_CASE("mixed decomposition cancels the tetrahedral relation") {
    GeodeticSum sum{{{Rat(1), PureAngle(0, Rat(8, 9))}, {Rat(2), PureAngle(1, Rat(2, 3))}}};
    AngleCombo combo = decompose_mixed(sum);
    CHECK(combo.terms_empty());
    CHECK(combo.t() == Rat(2));

    CHECK(decompose_mixed(GeodeticSum{{{Rat(1), PureAngle(0, Rat(1, 2))}}}).t() == Rat(1, 4));

    GeodeticSum cancel{{{Rat(1, 2), PureAngle(0, Rat(8, 9))},
                        {Rat(-1, 2), PureAngle(0, Rat(8, 9))}}};
    CHECK(decompose_mixed(cancel).is_zero());
}

TEST_CASE("display helpers") {
    GeodeticSum sum = parse_geodetic_sum("1*ang(8/9) + 2*ang(1+2/3)");
    CHECK(sum.str() == "ang(8/9) + 2*ang(1+2/3)");
    CHECK(parse_geodetic_sum("-1/2*ang(1/2)").str() == "-1/2*ang(1/2)");
    CHECK(GeodeticSum{}.str() == "0");
    CHECK(tan_surd(PureAngle(0, Rat(8, 9))).str() == "(2)sqrt(2)");
    CHECK(tan_surd(PureAngle(1, Rat(2, 3))).str() == "-(1/2)sqrt(2)");
    CHECK(tan_surd(PureAngle(1, Rat(0))).str() == "inf");
    CHECK(tan_surd(PureAngle(0, Rat(0))).str() == "0");
    CHECK(mq("1/2*sqrt2 - sqrt3 - 5").str() == "-5 + 1/2*sqrt(2) - sqrt(3)");
}

TEST_CASE("rational-multiple-of-pi detection") {
    GeodeticSum relation{{{Rat(1), PureAngle(0, Rat(8, 9))}, {Rat(2), PureAngle(1, Rat(2, 3))}}};
    CHECK(is_rational_multiple_of_pi(relation) == Rat(2));
    RealInterval two_pi = relation.value(128) - RealInterval::pi(128).scaled(Rat(2));
    CHECK(two_pi.contains(Rat(0)));
    GeodeticSum lone{{{Rat(1), PureAngle(0, Rat(2, 3))}}};
    CHECK(!is_rational_multiple_of_pi(lone).has_value());
    CHECK(is_rational_multiple_of_pi(GeodeticSum{}) == Rat(0));
}

TEST_CASE("relation finding") {
    GeodeticSum alpha{{{Rat(1), PureAngle(0, Rat(8, 9))}}};
    GeodeticSum beta{{{Rat(1), PureAngle(1, Rat(2, 3))}}};
    auto rels = find_relations({alpha, beta});
    REQUIRE(rels.size() == 1);
    CHECK(rels[0].coeffs == std::vector<Rat>{Rat(1), Rat(2)});
    CHECK(rels[0].pi_multiple == Rat(2));

    // distinct basis keys are independent
    GeodeticSum a32{{{Rat(1), PureAngle(0, Rat(2, 3))}}};   // arctan(sqrt 2)
    GeodeticSum a51{{{Rat(1), PureAngle(0, Rat(4, 5))}}};   // arctan 2
    CHECK(find_relations({a32, a51}).empty());

    auto dup = find_relations({alpha, alpha});
    REQUIRE(dup.size() == 1);
    CHECK(dup[0].coeffs == std::vector<Rat>{Rat(1), Rat(-1)});
    CHECK(dup[0].pi_multiple == Rat(0));

    // every reported relation really lands in pi * Q
    for (const auto& rel : rels) {
        GeodeticSum combo;
        combo.parts.emplace_back(rel.coeffs[0], PureAngle(0, Rat(8, 9)));
        combo.parts.emplace_back(rel.coeffs[1], PureAngle(1, Rat(2, 3)));
        CHECK(is_rational_multiple_of_pi(combo) == rel.pi_multiple);
    }
}

TEST_CASE("classic arctangent identities fall out of the d=1 theory") {
    // arctan(1/2) + arctan(1/3) = pi/4
    auto grego = find_relations({parse_geodetic_sum("tan=1/2"), parse_geodetic_sum("tan=1/3")});
    REQUIRE(grego.size() == 1);
    CHECK(grego[0].coeffs == std::vector<Rat>{1, 1});
    CHECK(grego[0].pi_multiple == Rat(1, 4));

    // Machin: 4 arctan(1/5) - arctan(1/239) = pi/4
    auto machin =
        find_relations({parse_geodetic_sum("tan=1/5"), parse_geodetic_sum("tan=1/239")});
    REQUIRE(machin.size() == 1);
    CHECK(machin[0].coeffs == std::vector<Rat>{4, -1});
    CHECK(machin[0].pi_multiple == Rat(1, 4));

    // arctan is injective on basis coordinates: no relation for 1/2 vs 1/4
    CHECK(find_relations({parse_geodetic_sum("tan=1/2"), parse_geodetic_sum("tan=1/4")})
              .empty());
}

TEST_CASE("a three-dimensional relation space") {
    GeodeticSum a1 = parse_geodetic_sum("ang(8/9)");
    GeodeticSum a2 = parse_geodetic_sum("ang(1+2/3)");
    GeodeticSum a3 = parse_geodetic_sum("ang(8/9) + ang(1+2/3)");
    GeodeticSum a4 = parse_geodetic_sum("ang(2/3)");  // arctan(sqrt 2) itself
    std::vector<GeodeticSum> angles{a1, a2, a3, a4};
    auto rels = find_relations(angles);
    REQUIRE(rels.size() == 3);
    CHECK(rels[0].coeffs == std::vector<Rat>{1, 2, 0, 0});
    CHECK(rels[0].pi_multiple == Rat(2));
    CHECK(rels[1].coeffs == std::vector<Rat>{1, 0, -2, 0});
    CHECK(rels[1].pi_multiple == Rat(-2));
    CHECK(rels[2].coeffs == std::vector<Rat>{1, 0, 0, 2});
    CHECK(rels[2].pi_multiple == Rat(1));
    // certificate: each vector really cancels all basis terms
    for (const auto& rel : rels) {
        GeodeticSum combined;
        for (size_t i = 0; i < angles.size(); ++i)
            for (const auto& [c, ang] : angles[i].parts)
                combined.parts.emplace_back(rel.coeffs[i] * c, ang);
        CHECK(is_rational_multiple_of_pi(combined) == rel.pi_multiple);
    }
}
