#include "doctest.h"

#include "mv/counting.hpp"
#include "mv/interpolation.hpp"
#include "mv/kontsevich.hpp"
#include "mv/partitions.hpp"
#include "mv/ribbon.hpp"
#include "mv/stable_graphs.hpp"

#include <algorithm>
#include <set>

using namespace mv;

TEST_CASE("partitions and Aut factors") {
    std::vector<int> k = {5, 1, 1, 1};
    CHECK(mu(k, 1) == 3);
    CHECK(mu(k, 7) == 0);
    CHECK(mu({3, -1, -1, -1}, -1) == 3);
    CHECK(aut_order(k) == 6);
    CHECK(c_kappa(k) == 1);
    CHECK(aut_order({5, 5, 1, 1}) == 4);
    CHECK(c_kappa({5, 5, 1, 1}) == 2);
    CHECK(aut_order({3}) == 1);
}

TEST_CASE("stratum parsing and dimensions") {
    auto gd = stratum_genus_dim(parse_stratum("Q(3,-1^3)"));
    CHECK(gd.g == 1);
    CHECK(gd.d == 4);
    gd = stratum_genus_dim(parse_stratum("7,-1,-1,-1"));
    CHECK(gd.g == 2);
    CHECK(gd.d == 6);
    gd = stratum_genus_dim(parse_stratum("-1^4"));
    CHECK(gd.g == 0);
    CHECK(gd.d == 2);
    CHECK_THROWS_AS(stratum_genus_dim(parse_stratum("3,-1")), std::invalid_argument);
    CHECK(format_parts(parse_parts("5,3,1,-1")) == "5,3,1,-1");
    CHECK(format_parts(parse_parts("1,3^2,-1^3")) == "3^2,1,-1^3");
    CHECK(parse_stratum("3,-1^3").to_string() == "3,-1^3");
    CHECK_THROWS(parse_parts("3,,1"));
}

TEST_CASE("Euler relation") {
    CHECK(euler_check(0, 2, {5, 1, 1, 1}));
    CHECK(euler_check(1, 1, {5, 1}));
    CHECK_FALSE(euler_check(0, 1, {3}));
}

TEST_CASE("ribbon graphs of the genus-0 three-face example") {
    auto classes = enumerate_ribbon_graphs(0, 3, {5, 1});
    REQUIRE_FALSE(classes.empty());
    for (const auto& c : classes) {
        CHECK(c.graph.genus() == 0);
        CHECK(c.graph.num_faces() == 3);
        CHECK(c.graph.degrees() == std::vector<int>{5, 1});
        CHECK_FALSE(is_bipartite(dual_graph(c.graph)));
    }
    // Per-class brute force agrees with the dual-graph count.
    for (std::vector<long> b : {std::vector<long>{5, 2, 1}, {4, 2, 2}, {4, 3, 1}, {7, 4, 1}, {6, 3, 1}})
        for (const auto& c : classes) CHECK(count_metrics_graph(c.graph, b) == count_metrics_primal(c.graph, b));
    CHECK(enumerate_ribbon_graphs(0, 1, {3}).empty());
}

TEST_CASE("counting function values in the three-face example") {
    CHECK(counting_function(0, 3, {5, 1}, {5, 2, 1}) == 3);
    CHECK(counting_function(0, 3, {5, 1}, {6, 2, 2}) == 2);
    CHECK(counting_function(0, 3, {5, 1}, {4, 3, 1}) == 1);
    CHECK(counting_function(0, 3, {5, 1}, {5, 2, 2}) == 0);
    // On two walls at once: reported, not asserted against a printed value.
    MESSAGE("F_{0,3}^{[5,1]}(4,2,2) = " << to_string(counting_function(0, 3, {5, 1}, {4, 2, 2})));
}

TEST_CASE("static edge weights") {
    // A bridge weight is the full form, a non-bridge one half of it.
    for (const auto& c : enumerate_ribbon_graphs(0, 3, {5, 1}))
        for (const auto& se : static_edges(dual_graph(c.graph))) {
            std::vector<long> b = {9, 4, 1};
            Rational w = se.weight(b);
            Rational f = se.form.value(b);
            CHECK(w == (se.bridge ? f : f / 2));
        }
}

TEST_CASE("one-face closed form against brute force") {
    CHECK(counting_function(1, 1, {5, 1}, {4}) == one_face_closed_form(1, {5, 1}, 4));
    CHECK(counting_function(1, 1, {3, 3}, {2}) == one_face_closed_form(1, {3, 3}, 2));
    CHECK(one_face_closed_form(1, {5, 1}, 3) == 0);
    CHECK(one_face_closed_form(0, {3}, 4) == 0);
}

TEST_CASE("face-bicolored counting") {
    for (long m = 1; m <= 6; ++m) CHECK(face_bicolored_counting(0, 1, 1, {m}, {m}) == 1);
    CHECK(face_bicolored_counting(0, 1, 1, {3}, {5}) == 0);
}

TEST_CASE("cell signatures and walls") {
    CHECK(off_walls({5, 2, 1}));
    CHECK_FALSE(off_walls({4, 2, 2}));
    CHECK_FALSE(off_walls({4, 3, 1}));
    CHECK(cell_signature({9, 2, 1}) == cell_signature({11, 4, 1}));
    CHECK(cell_signature({9, 2, 1}) != cell_signature({4, 3, 3}));
}

TEST_CASE("interpolation reproduces printed polynomials") {
    auto p = interpolate_kontsevich_unlabeled(0, 2, {5, 1, 1, 1});
    CHECK(p == kontsevich_polynomial(0, 2, {5, 1, 1, 1}, KontsevichSource::Table).unlabeled);
    auto labeled = kontsevich_polynomial(0, 2, {5, 1, 1, 1}, KontsevichSource::Interpolate).labeled;
    CHECK(labeled == monomial_symmetric(2, {2}, make_rational(3, 4)));
    auto q = kontsevich_polynomial(1, 1, {5, 1}, KontsevichSource::Interpolate).labeled;
    CHECK(q == EvenPolynomial::monomial(1, {2}, make_rational(1, 8)));
    auto c = kontsevich_polynomial(0, 3, {5, 1}, KontsevichSource::Interpolate).labeled;
    CHECK(c == EvenPolynomial::constant(3, 3));
}

TEST_CASE("table entries") {
    CHECK(kontsevich_polynomial(0, 3, {3, 3}, KontsevichSource::Table).labeled == EvenPolynomial::constant(3, 2));
    EvenPolynomial expect = EvenPolynomial::monomial(2, {4, 0}, make_rational(1, 16)) +
                            EvenPolynomial::monomial(2, {0, 4}, make_rational(1, 16)) +
                            EvenPolynomial::monomial(2, {2, 2}, make_rational(1, 8));
    CHECK(kontsevich_polynomial(1, 2, {3, 3, 3, 3}, KontsevichSource::Table).labeled == expect);
    CHECK(kontsevich_polynomial(0, 1, {3, 1, 1, 1}, KontsevichSource::Table).labeled ==
          EvenPolynomial::monomial(1, {2}, make_rational(1, 4)));
    auto e = kontsevich_polynomial(0, 2, {5, 1, 1, 1});
    CHECK(e.labeled == e.unlabeled * Rational(aut_order({5, 1, 1, 1})));
    CHECK_THROWS_AS(kontsevich_polynomial(0, 6, {7, 7, 1, 1}, KontsevichSource::Table), Unavailable);
}

TEST_CASE("every table entry is symmetric with even exponents") {
    for (const auto& k : table_entries()) {
        auto e = kontsevich_polynomial(k.g, k.n, k.kappa, KontsevichSource::Table);
        CHECK(e.labeled.is_symmetric());
        CHECK(e.labeled.has_only_even_exponents());
        CHECK(e.labeled.is_homogeneous());
        CHECK(e.labeled.degree() == k.half_edges() / 2 - k.n);
    }
}

TEST_CASE("string equation on a small pair") {
    auto chk = string_recursion_check(0, 1, {5, 1, 1, 1});
    CHECK(chk.holds);
}

TEST_CASE("wall correction at the three-face example") {
    // Wall b1 = b2: value drops from 3 to 2; the result is 2V.
    WallPartition wall;
    wall.I0 = {2};
    wall.pairs = {{{0}, {1}}};
    auto w = generic_wall_witness(wall);
    CHECK(wall.contains(w));
    auto v = wall_correction(0, 3, {5, 1}, wall, w);
    CHECK(v == EvenPolynomial::constant(v.arity(), 2));
}

TEST_CASE("stable graphs of Q(3,-1^3)") {
    const auto& graphs = enumerate_stable_graphs(1, {5, 1, 1, 1});
    CHECK(graphs.size() == 7);
    auto mult = shape_multiplicities(graphs);
    std::multiset<int> m;
    std::multiset<Rational> cg;
    std::set<int> seen;
    for (size_t i = 0; i < graphs.size(); ++i)
        if (seen.insert(graphs[i].shape).second) {
            m.insert(mult[i]);
            cg.insert(graphs[i].c_gamma());
        }
    CHECK(m == std::multiset<int>{1, 3, 3});
    CHECK(cg == std::multiset<Rational>{make_rational(1, 2), make_rational(1, 2), make_rational(1, 4)});
    for (const auto& gr : graphs) {
        CHECK(gr.genus() == 1);
        CHECK(lattice_index(gr) == (gr.num_vertices() == 1 ? 1 : 2));
    }
}

TEST_CASE("abelian stable graphs") {
    auto a = enumerate_abelian_stable_graphs(2);
    CHECK(a.size() == 2);
    for (const auto& x : a) CHECK(x.automorphisms() == factorial(x.loops));
}
