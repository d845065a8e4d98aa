#pragma once

// Randomized property suites shared by the doctest runner and the
// acceptance binary. Each suite runs `cases` seeded cases and reports the
// failures it saw.

#include <string>
#include <vector>

namespace mvtest {

struct SuiteResult {
    std::string name;
    int cases = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty() && cases > 0; }
};

// F(b) = 0 whenever sum b is odd (counting function and per-class counts).
SuiteResult parity_vanishing(int cases, unsigned seed = 1);
// Along rays inside one cell and one coset of 2Z^n, F is a polynomial of
// degree <= deg N: fit on D+1 points, predict two held-out points exactly;
// on scaling rays the leading coefficient is 2^D N^unlab(b).
SuiteResult quasi_polynomial_fit(int cases, unsigned seed = 2);
// F_{g,1}^kappa(b) equals the unicellular closed form.
SuiteResult one_face_closed_form(int cases, unsigned seed = 3);
// Z(P_Gamma) does not depend on the order of edges or vertices.
SuiteResult edge_order_independence(int cases, unsigned seed = 4);
// |Aut kappa| = c_kappa mu_1!, c_Gamma |Aut Gamma| 2^{|V|-1} = 1, equal Aut
// within a leg-forgetting shape, abelian graphs have loops! automorphisms.
SuiteResult aut_conventions(int cases, unsigned seed = 5);

}  // namespace mvtest
