#pragma once

// Counting functions F^kappa_{g,n}(b) summed over all ribbon graphs, built
// from a table of dual-graph edge-class patterns.
//
// Every fixed-point-free involution alpha (with the vertex rotation fixed)
// determines a dual multigraph on its faces. Grouping involutions by that
// multigraph up to relabeling of faces gives
//   F(b) = (1/z) * sum_patterns W_p * sum_{pi in S_n} count(p, pi b),
// where z is the centralizer order of the rotation and count() is the number
// of positive edge weightings with vertex sums b.

#include "mv/arith.hpp"
#include "mv/class_count.hpp"

#include <memory>
#include <vector>

namespace mv {

struct PatternOrbit {
    ClassCounter counter;
    Integer weight;  // number of involutions realizing the pattern
};

struct CountingTable {
    int g = 0;
    int n = 0;
    // For face-bicolored tables, faces 0..n_black-1 are black; otherwise n.
    int n_black = 0;
    bool bicolored = false;
    Integer denominator = 1;
    Integer involutions = 0;
    std::vector<PatternOrbit> orbits;

    Rational evaluate(const std::vector<long>& b) const;
};

// F^kappa_{g,n}: kappa are vertex valencies (odd, may contain 1). Cached.
std::shared_ptr<const CountingTable> counting_table(int g, int n, const std::vector<int>& kappa);
// One vertex of valency 2E, E = 2g-1+n_black+n_white, faces two-colored so
// that every edge separates a black face from a white face. Cached.
std::shared_ptr<const CountingTable> bicolored_table(int g, int n_black, int n_white);

// sum over labeled-face ribbon graphs of (integer metrics)/|Aut|; this is the
// counting function whose top-degree part is the unlabeled Kontsevich
// polynomial off the walls.
Rational counting_function(int g, int n, const std::vector<int>& kappa, const std::vector<long>& b);
Rational face_bicolored_counting(int g, int n_black, int n_white, const std::vector<long>& b_black,
                                 const std::vector<long>& b_white);

// sum_{G one face} 1/|Aut G| from the generating function of unicellular maps
// with prescribed vertex degrees (no enumeration).
Rational unicellular_class_count(int g, const std::vector<int>& kappa);
// |RG^kappa_{g,1}| times the number of positive solutions of 2(l_1+..+l_E) = b.
Rational one_face_closed_form(int g, const std::vector<int>& kappa, long b);

}  // namespace mv
