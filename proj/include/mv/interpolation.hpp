#pragma once

// Exact fitting of quasi-polynomial counting functions on one cell and one
// coset of 2Z^n, and extraction of their top-degree parts.
//
// Samples are taken at b = base + 2 * sum_i m_i dir_i with m in the simplex
// {m >= 0, |m| <= D+1}. Newton forward differences of order D+1 must vanish
// (these act as held-out points); the order-D differences give the top part.

#include "mv/arith.hpp"
#include "mv/polynomial.hpp"

#include <functional>
#include <string>
#include <vector>

namespace mv {

using Sampler = std::function<Rational(const std::vector<long>&)>;

struct LatticePlan {
    std::vector<long> base;
    std::vector<std::vector<long>> dirs;
    // m_i expressed (up to constants) as linear forms in the b variables.
    std::vector<EvenPolynomial> coords;
};

// A wall W_Pi: sum over I_s^0 equals sum over I_s^1 for each pair s; labels
// not in any pair form I0. Labels are 0-based.
struct WallPartition {
    std::vector<int> I0;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;

    int arity() const;
    bool contains(const std::vector<long>& b) const;
    std::string to_string() const;
};

// A point of the wall with even coordinate sum, positive coordinates, and no
// linear relation sum_I b - sum_J b = 0 beyond those implied by the wall.
// Deterministic (fixed-seed search over growing boxes).
std::vector<long> generic_wall_witness(const WallPartition& wall);

// Simplex points m with |m| <= order, in a fixed order.
std::vector<std::vector<int>> simplex_points(int dims, int order);

// Evaluates the sampler on all plan points (in parallel) and returns the
// degree-D homogeneous part as a polynomial in `arity` variables named by
// default_variables. Throws std::runtime_error("cell/coset violation ...")
// when order-(D+1) differences do not vanish.
EvenPolynomial fit_top_degree(const Sampler& f, const LatticePlan& plan, int D);

// Plan on the cell b_i > K * sum_{j>i} b_j (all walls with coefficients of
// size <= K have constant sign there), with sum b even.
LatticePlan super_increasing_plan(int n, int K = 1);
// Plan around lambda * witness (lambda odd, minimal) with unit directions,
// requiring every sample to have the witness's wall signature.
LatticePlan witness_plan(const std::vector<long>& witness, int D);
// Plan inside the wall: the first label of each I_s^1 is dependent.
LatticePlan wall_plan(const WallPartition& wall, const std::vector<long>& witness, int D);
// Labels eliminated by wall_plan and their expressions in the free labels.
std::vector<int> wall_dependent_labels(const WallPartition& wall);

// 2 V^kappa_{g,n} on the cell containing the off-wall witness.
EvenPolynomial extract_top_degree_V(int g, int n, const std::vector<int>& kappa, const std::vector<long>& witness);
// Top-degree part of F^kappa_{g,n} on the super-increasing cell (which is the
// unlabeled Kontsevich polynomial).
EvenPolynomial interpolate_kontsevich_unlabeled(int g, int n, const std::vector<int>& kappa);
// 2 V^kappa_{g,n} on the part of the wall W_Pi containing the witness; the
// result involves only the free labels of wall_plan.
EvenPolynomial extract_top_degree_V_on_wall(int g, int n, const std::vector<int>& kappa, const WallPartition& wall,
                                            const std::vector<long>& witness);
// Top-degree part (degree 2g) of the face-bicolored counting function on the
// wall sum b_black = sum b_white, in variables (b_black..., b_white...) with
// the first white variable eliminated. Cached.
EvenPolynomial bicolored_top_degree(int g, int n_black, int n_white);

}  // namespace mv
