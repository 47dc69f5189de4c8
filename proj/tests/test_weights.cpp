#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "bv/weights.hpp"

using namespace bv;

namespace {
OrbifoldSpec spec3111() { return OrbifoldSpec::make(Curve::Quartic, {3, 1, 1, 1}); }
}  // namespace

TEST_CASE("admissible table") {
    CHECK(is_admissible_weight_table({3, 1, 1, 1}) == std::make_pair(1, 10));
    CHECK(is_admissible_weight_table({15, 10, 3, 2}) == std::make_pair(4, 4));
    CHECK(!is_admissible_weight_table({7, 3, 2, 2}).has_value());
    CHECK_THROWS_AS(OrbifoldSpec::make(Curve::Quartic, {7, 3, 2, 2}), InvalidSpec);
}

TEST_CASE("charges sum to 1 in each factor") {
    for (const auto& row : admissible_weight_table()) {
        for (Curve c : {Curve::Quartic, Curve::CubicSextic}) {
            OrbifoldSpec s = OrbifoldSpec::make(c, row.w);
            Rational curve_sum(0), k3_sum(0);
            for (int k = 0; k < 3; ++k) curve_sum += s.charge(k);
            for (int k = 3; k < kCoords; ++k) k3_sum += s.charge(k);
            CHECK(curve_sum == Rational(1));
            CHECK(k3_sum == Rational(1));
        }
    }
}

TEST_CASE("group order for (3,1,1,1) quartic is 48") {
    auto g = build_group(spec3111());
    CHECK(g.size() == 48);
    // contains identity, closed under composition (spot checks by brute force)
    std::set<GroupElement> set(g.begin(), g.end());
    CHECK(set.count(GroupElement()) == 1);
    for (size_t i = 0; i < g.size(); i += 7)
        for (size_t j = 0; j < g.size(); j += 5) CHECK(set.count(g[i].compose(g[j])) == 1);
}

TEST_CASE("group order for (5,2,2,1) quartic is 80") {
    auto g = build_group(OrbifoldSpec::make(Curve::Quartic, {5, 2, 2, 1}));
    CHECK(g.size() == 80);
}

TEST_CASE("brute-force closure order matches 2*4*d/overlap for all specs") {
    for (const auto& row : admissible_weight_table()) {
        OrbifoldSpec s = OrbifoldSpec::make(Curve::Quartic, row.w);
        auto g = build_group(s);
        // sigma extends <J1,J2> by a factor of 2 exactly when it is not a J-word.
        std::set<GroupElement> jpart;
        GroupElement a;
        for (long r = 0; r < s.d_curve(); ++r) {
            GroupElement b = a;
            for (long t = 0; t < s.d(); ++t) {
                jpart.insert(b);
                b = b.compose(GroupElement::J2(s));
            }
            a = a.compose(GroupElement::J1(s));
        }
        size_t expect = jpart.size() * (jpart.count(GroupElement::sigma(s)) ? 1 : 2);
        CHECK(g.size() == expect);
    }
}

TEST_CASE("sector info for the distinguished (3,1,1,1) elements") {
    OrbifoldSpec s = spec3111();
    GroupElement j1j2 = GroupElement::J1(s).compose(GroupElement::J2(s));
    SectorInfo unit = sector_info(j1j2, s);
    CHECK(unit.narrow);
    CHECK(unit.deg_W == Rational(0));
    for (int k = 0; k < kCoords; ++k) CHECK(unit.i_values[k] == Rational(0));
    CHECK(unit.element.theta(0) == Rational(1, 2));
    CHECK(unit.element.theta(1) == Rational(1, 4));
    CHECK(unit.element.theta(4) == Rational(1, 6));

    // sigma J1^2 J2^2: i = (0, 1/4, 1/4, 0, 1/6, 1/6, 1/6), deg 2
    GroupElement h = GroupElement::sigma(s);
    for (int i = 0; i < 2; ++i) h = h.compose(GroupElement::J1(s));
    for (int i = 0; i < 2; ++i) h = h.compose(GroupElement::J2(s));
    SectorInfo si = sector_info(h, s);
    CHECK(si.narrow);
    CHECK(si.deg_W == Rational(2));
    CHECK(si.i_values[1] == Rational(1, 4));
    CHECK(si.i_values[4] == Rational(1, 6));
    CHECK(si.i_values[0] == Rational(0));
    CHECK(si.label == "sJ1^2J2^2");

    // J1^3 J2: i = (0, 1/2, 1/2, 0, 0, 0, 0)
    GroupElement g = GroupElement::J2(s);
    for (int i = 0; i < 3; ++i) g = g.compose(GroupElement::J1(s));
    SectorInfo gi = sector_info(g, s);
    CHECK(gi.i_values[1] == Rational(1, 2));
    CHECK(gi.i_values[2] == Rational(1, 2));
    CHECK(gi.i_values[3] == Rational(0));
    CHECK(gi.i_values[4] == Rational(0));
}

TEST_CASE("narrow duality: deg_W(h) + deg_W(h^-1) = 6 and age pairs to 7") {
    for (Curve c : {Curve::Quartic, Curve::CubicSextic}) {
        OrbifoldSpec s = OrbifoldSpec::make(c, {6, 3, 2, 1});
        for (const auto& si : narrow_sectors(s)) {
            SectorInfo inv = sector_info(si.element.inverse(), s);
            CHECK(si.deg_W + inv.deg_W == Rational(6));
            CHECK(si.age + inv.age == Rational(7));
            for (int k = 0; k < kCoords; ++k)
                CHECK(inv.element.theta(k) == (Rational(1) - si.element.theta(k)).frac());
        }
    }
}

TEST_CASE("(3,1,1,1) narrow sectors: the eight listed elements in degree order") {
    auto ns = narrow_sectors(spec3111());
    REQUIRE(ns.size() == 8);
    CHECK(ns[0].label == "J1J2");
    CHECK(ns[0].deg_W == Rational(0));
    std::multiset<std::string> deg2{ns[1].label, ns[2].label, ns[3].label};
    CHECK(deg2 == std::multiset<std::string>{"J1^3J2", "J1J2^3", "sJ1^2J2^2"});
    std::multiset<std::string> deg4{ns[4].label, ns[5].label, ns[6].label};
    CHECK(deg4 == std::multiset<std::string>{"J1^3J2^3", "J1J2^5", "sJ1^2J2^4"});
    CHECK(ns[7].label == "J1^3J2^5");
    CHECK(ns[7].deg_W == Rational(6));
}

TEST_CASE("(5,2,2,1) narrow sectors: twelve, matching the listed words") {
    auto ns = narrow_sectors(OrbifoldSpec::make(Curve::Quartic, {5, 2, 2, 1}));
    REQUIRE(ns.size() == 12);
    std::map<std::string, Rational> got;
    for (const auto& s : ns) got[s.label] = s.deg_W;
    CHECK(got.at("J1J2") == Rational(0));
    CHECK(got.at("J1^3J2") == Rational(2));
    CHECK(got.at("J1J2^3") == Rational(2));
    CHECK(got.at("J1J2^7") == Rational(2));
    CHECK(got.at("sJ1^2J2^2") == Rational(2));
    CHECK(got.at("sJ1^2J2^6") == Rational(2));
    CHECK(got.at("J1J2^9") == Rational(4));
    CHECK(got.at("J1^3J2^3") == Rational(4));
    CHECK(got.at("J1^3J2^7") == Rational(4));
    CHECK(got.at("sJ1^2J2^8") == Rational(4));
    CHECK(got.at("sJ1^2J2^4") == Rational(4));
    CHECK(got.at("J1^3J2^9") == Rational(6));
}

TEST_CASE("exactly one narrow sector of degree 0 and one of degree 6") {
    for (const auto& row : admissible_weight_table()) {
        for (Curve c : {Curve::Quartic, Curve::CubicSextic}) {
            auto ns = narrow_sectors(OrbifoldSpec::make(c, row.w));
            int d0 = 0, d6 = 0;
            for (const auto& s : ns) {
                if (s.deg_W == Rational(0)) ++d0;
                if (s.deg_W == Rational(6)) ++d6;
            }
            CHECK(d0 == 1);
            CHECK(d6 == 1);
        }
    }
}
