#include "doctest.h"

#include "mv/volumes.hpp"

#include <set>

using namespace mv;

namespace {

PiValue pi(long num, long den, int power) { return PiValue(make_rational(num, den), power); }

}  // namespace

TEST_CASE("stratum specs") {
    auto s = StratumSpec::parse("Q(3,-1^3)");
    CHECK(s.g == 1);
    CHECK(s.d == 4);
    CHECK(s.kappa() == std::vector<int>{5, 1, 1, 1});
    CHECK(s.to_string() == "Q(3,-1^3)");
    CHECK(StratumSpec::parse(s.parts_string()) == s);
    CHECK_THROWS_AS(StratumSpec::parse("3,-1"), std::invalid_argument);
    CHECK_THROWS_AS(StratumSpec::parse("2,-1^2"), std::invalid_argument);
    CHECK_THROWS_AS(StratumSpec::parse("-1^3,3,-1^0"), std::invalid_argument);
    CHECK(c_d(4) == 128);
}

TEST_CASE("worked example: P, Z and contributions") {
    auto b = completed_volume(StratumSpec::parse("3,-1^3"), KontsevichSource::Auto, true);
    REQUIRE(b.graphs.size() == 3);
    std::set<std::string> contributions, zs;
    for (const auto& g : b.graphs) {
        contributions.insert(g.contribution.to_string());
        zs.insert(g.Z.to_string());
        CHECK(zeta_operator(g.P) == g.Z);
    }
    CHECK(contributions == std::set<std::string>{"1/3 * pi^4", "1/15 * pi^4", "4/15 * pi^4"});
    // 3 b1 b2 -> 3 zeta(2)^2 / 4!, b^3/8 -> 3! zeta(4) / (8 * 4!), 3/2 b^3 -> (3/8) zeta(4).
    CHECK(zs == std::set<std::string>{"1/288 * pi^4", "1/2880 * pi^4", "1/240 * pi^4"});
    CHECK(b.completed == pi(2, 3, 4));
}

TEST_CASE("zeta operator on monomials") {
    CHECK(zeta_operator(EvenPolynomial::monomial(1, {3}, make_rational(3, 2))) == zeta_even(4) * make_rational(3, 8));
    CHECK(zeta_operator(EvenPolynomial::monomial(2, {1, 1}, 1)) == zeta_even(2) * zeta_even(2) / Rational(24));
    CHECK_THROWS(zeta_operator(EvenPolynomial::monomial(1, {2}, 1)));
}

TEST_CASE("change of variables") {
    auto e = theorem1_expand(StratumSpec::parse("3,-1^3"));
    REQUIRE(e.size() == 2);
    std::set<std::string> got;
    for (auto& [c, p] : e) got.insert(to_string(c) + " " + p.to_string());
    CHECK(got == std::set<std::string>{"1 Q(3,-1^3)", "1/2 Q(-1^4) x H(0)"});

    auto f = theorem1_expand(StratumSpec::parse("7,-1^3"));
    got.clear();
    for (auto& [c, p] : f) got.insert(to_string(c) + " " + p.to_string());
    CHECK(got == std::set<std::string>{"1 Q(7,-1^3)", "5/2 Q(3,-1^3) x H(0)", "3/2 Q(-1^4) x H(2)",
                                       "7/8 Q(-1^4) x H(0)^2"});
    for (auto s : {"3,-1^3", "7,-1^3", "5,-1^5", "3,1,-1^4", "11,-1^3", "3^2,1,-1^3"}) {
        auto a = theorem1_expand(StratumSpec::parse(s));
        auto b = theorem1_expand_closed(StratumSpec::parse(s));
        CHECK(a == b);
    }
}

TEST_CASE("product volumes") {
    auto table = MinimalStratumVolumeTable::builtin();
    ProductStratumSpec p{StratumSpec::parse("-1^4"), {1}};
    CHECK(product_volume(p, table, pi(2, 1, 2)) == pi(2, 9, 4));
    ProductStratumSpec q{StratumSpec::parse("3,-1^3"), {1}};
    CHECK(product_volume(q, table, pi(5, 9, 4)) == pi(1, 54, 6));
    ProductStratumSpec r{StratumSpec::parse("3,-1^3"), {}};
    CHECK(product_volume(r, table, pi(5, 9, 4)) == pi(5, 9, 4));
}

TEST_CASE("Masur-Veech volumes") {
    auto table = MinimalStratumVolumeTable::builtin();
    auto v = masur_veech_volume(StratumSpec::parse("3,-1^3"), table);
    CHECK(*v.vol == pi(5, 9, 4));
    CHECK(v.completed - *v.vol == pi(1, 9, 4));
    CHECK(*masur_veech_volume(StratumSpec::parse("-1^4"), table).vol == pi(2, 1, 2));
    auto w = masur_veech_volume(StratumSpec::parse("7,-1^3"), table);
    CHECK(w.completed == pi(217, 360, 6));
    CHECK(*w.vol == pi(27, 50, 6));
    CHECK(*masur_veech_volume(StratumSpec::parse("3,1,-1^4"), table).vol == pi(1, 3, 6));
    CHECK(completed_volume(StratumSpec::parse("5,-1^5")).completed == pi(3, 4, 6));
    CHECK(completed_volume(StratumSpec::parse("3,1,-1^4")).completed == pi(7, 20, 6));
    CHECK(true_volume_from_graphs(StratumSpec::parse("7,-1^3")) == pi(27, 50, 6));
}

TEST_CASE("missing minimal strata are reported") {
    auto anchored = MinimalStratumVolumeTable::anchored();
    CHECK_THROWS_AS(masur_veech_volume(StratumSpec::parse("7,-1^3"), anchored), Unavailable);
    CHECK_THROWS_AS(anchored.get(2), Unavailable);
}

TEST_CASE("minimal strata overrides") {
    auto t = MinimalStratumVolumeTable::anchored();
    t.load_overrides_json(nlohmann::json{{"H(2)", "1/120 * pi^4"}});
    CHECK(t.get(2) == pi(1, 120, 4));
    CHECK(t.entries().at(2).provenance == "override");
    CHECK(t.fingerprint() != MinimalStratumVolumeTable::anchored().fingerprint());
    CHECK_THROWS_AS(t.load_overrides_json(nlohmann::json{{"H(3)", "1 * pi^2"}}), std::invalid_argument);
    CHECK_THROWS_AS(t.load_overrides_json(nlohmann::json{{"H(2)", 3}}), std::invalid_argument);
    CHECK_THROWS_AS(t.load_overrides("/nonexistent/minimal.json"), std::invalid_argument);
}

TEST_CASE("pinning H(2) from Q(7,-1^3)") {
    auto rep = pin_minimal_strata(MinimalStratumVolumeTable::anchored(), 6);
    CHECK(rep.consistent);
    CHECK(rep.table.get(2) == pi(1, 120, 4));
}

TEST_CASE("square-tiled counts") {
    auto s = StratumSpec::parse("3,-1^3");
    CHECK(square_tiled_count(s, 0).total == 0);
    auto c = square_tiled_count(s, 20);
    Rational sum = 0;
    for (const auto& g : c.per_graph) sum += g.count;
    CHECK(sum == c.total);
    CHECK(c.total == 452172 + 114678 + 386580);
}

TEST_CASE("cylinder distributions") {
    auto d = cylinder_distribution(StratumSpec::parse("3,-1^3"));
    CHECK(d.exact_true);
    CHECK(d.frequency.at(1) == make_rational(3, 5));
    CHECK(d.frequency.at(2) == make_rational(2, 5));
    auto f = cylinder_distribution_finite(StratumSpec::parse("3,1,-1^4"), 8);
    Rational total = 0;
    for (const auto& [k, v] : f.frequency) total += v;
    CHECK(total == 1);
}

TEST_CASE("breakdown JSON") {
    auto j = masur_veech_volume(StratumSpec::parse("3,-1^3"), MinimalStratumVolumeTable::builtin()).to_json();
    CHECK(j["graphs"].size() == 3);
    CHECK(j["vol"] == "5/9 * pi^4");
}
