#pragma once

// Decorated stable graphs of odd strata and abelian stable graphs of minimal
// strata H(2g-2).

#include "mv/arith.hpp"
#include "mv/partitions.hpp"

#include <string>
#include <vector>

#include "json.hpp"

namespace mv {

struct StableVertex {
    int genus = 0;
    std::vector<int> kappa;  // valencies, descending, 1s are the legs
    int n_edges = 0;         // edge endpoints at this vertex (loops count twice)
    std::vector<int> legs;   // 1-based leg labels

    int num_legs() const { return static_cast<int>(legs.size()); }
};

struct StableGraph {
    std::vector<StableVertex> vertices;
    std::vector<std::pair<int, int>> edges;  // (u, v) with u <= v
    long automorphisms = 1;
    // Index of the leg-forgetting shape within one enumeration result.
    int shape = 0;

    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }
    bool is_loop(int e) const { return edges[e].first == edges[e].second; }
    int first_betti() const { return num_edges() - num_vertices() + 1; }
    int genus() const;
    // 1 / (2^{|V|-1} |Aut|).
    Rational c_gamma() const;
    // Edge index per endpoint slot of each vertex; a loop fills two slots.
    std::vector<std::vector<int>> vertex_slots() const;

    std::string to_string() const;
    nlohmann::ordered_json to_json() const;
};

// All isomorphism classes of stable graphs with total genus g and valencies
// kappa (kappa = k + 2; its parts equal to 1 are the labeled legs). Cached.
const std::vector<StableGraph>& enumerate_stable_graphs(int g, const std::vector<int>& kappa);
// Number of leg labelings of each shape in an enumeration result.
std::vector<int> shape_multiplicities(const std::vector<StableGraph>& graphs);

// Index of L_Gamma in Z^E.
Integer lattice_index(const StableGraph& gamma);

struct AbelianStableGraph {
    int g = 0;      // genus of the stratum H(2g-2)
    int g_v = 0;    // genus decoration of the single vertex
    int loops = 0;  // g = g_v + loops

    // Endpoint count, 2g = 2g_v + n_v.
    int n_v() const { return 2 * loops; }
    // Convention: loops! (no 2^loops factor).
    Integer automorphisms() const { return factorial(loops); }
    std::string to_string() const;
};

std::vector<AbelianStableGraph> enumerate_abelian_stable_graphs(int g);
// Lattice index of a quadratic graph times abelian components: the abelian
// vertices impose no parity condition.
inline Integer lattice_index_product(const StableGraph& quadratic) { return lattice_index(quadratic); }

}  // namespace mv
