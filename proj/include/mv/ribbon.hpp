#pragma once

// Ribbon graphs as permutation pairs, their duals, static edges and integer
// metric counts.
//
// Orientation convention: half-edges are 0..2E-1, sigma is the vertex
// rotation, alpha the edge involution, and faces are the orbits of
// phi = sigma o alpha (apply alpha first). The perimeter of a face is the sum
// of the lengths of the edges of its half-edges.

#include "mv/arith.hpp"
#include "mv/partitions.hpp"

#include <string>
#include <vector>

#include "json.hpp"

namespace mv {

struct RibbonGraph {
    std::vector<int> sigma;
    std::vector<int> alpha;
    // Face label (0-based) of each half-edge; constant on phi-orbits.
    std::vector<int> face;

    int num_half_edges() const { return static_cast<int>(sigma.size()); }
    int num_edges() const { return num_half_edges() / 2; }
    int num_vertices() const;
    int num_faces() const;
    int genus() const;
    bool connected() const;
    std::vector<int> vertex_of() const;
    std::vector<int> degrees() const;  // sorted descending
    std::vector<std::vector<int>> vertex_cycles() const;
    // Face cycles of phi, indexed by face label.
    std::vector<std::vector<int>> face_cycles() const;
    // Edge list as (smaller half-edge, partner) in increasing order.
    std::vector<std::pair<int, int>> edges() const;

    // Cycle notation, e.g. "sigma=(0,1,2)(3) alpha=(0,3)(1,2) faces=[0,1,0,1]".
    std::string to_string() const;
    nlohmann::ordered_json to_json() const;
    static RibbonGraph from_json(const nlohmann::json& j);
};

// Assigns face labels to the phi-orbits in discovery order (scanning
// half-edges 0,1,2,...).
std::vector<int> discover_faces(const std::vector<int>& sigma, const std::vector<int>& alpha, int* num_faces);

// Canonical code of a connected ribbon graph and its automorphism count.
// With labeled_faces the code includes face labels, otherwise faces are
// ignored.
struct CanonicalForm {
    std::vector<int> code;
    long automorphisms = 0;
};
CanonicalForm canonical_form(const RibbonGraph& g, bool labeled_faces = true);

struct RibbonClass {
    RibbonGraph graph;
    long automorphisms;
};

// One representative per isomorphism class of connected ribbon graphs of genus
// g with n faces and vertex degrees kappa. With labeled_faces, isomorphisms
// must preserve face labels.
std::vector<RibbonClass> enumerate_ribbon_graphs(int g, int n, const std::vector<int>& kappa, bool labeled_faces = true);

// Canonical vertex rotation with consecutive blocks of sizes kappa (in the
// given order).
std::vector<int> block_rotation(const std::vector<int>& kappa);

// Dual multigraph: vertices are the faces, one edge per edge of the ribbon
// graph joining the faces on its two sides.
struct DualGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};
DualGraph dual_graph(const RibbonGraph& g);

struct WallForm {
    std::vector<int> plus;   // I, 0-based labels
    std::vector<int> minus;  // J, 0-based labels

    long value(const std::vector<long>& b) const;
    std::string to_string() const;
};

// All forms sum_I b - sum_J b with I, J disjoint and nonempty, one per
// unordered pair {I, J}.
std::vector<WallForm> all_wall_forms(int n);
// Signs of all wall forms at b (-1, 0, +1), in the order of all_wall_forms.
std::vector<int> cell_signature(const std::vector<long>& b);
bool off_walls(const std::vector<long>& b);

struct StaticEdge {
    int edge;           // index into DualGraph::edges
    WallForm form;      // sum_I b - sum_J b
    bool bridge;        // true: weight = form, false: weight = form / 2
    Rational weight(const std::vector<long>& b) const;
};

// Static edges of a dual graph: edges e such that some component of G-e is
// bipartite with e attached appropriately.
std::vector<StaticEdge> static_edges(const DualGraph& g);
bool is_bipartite(const DualGraph& g);

// Positive integer edge weights with vertex perimeters b (dual form), static
// edges assigned first from their forced values.
Integer count_metrics_graph(const DualGraph& g, const std::vector<long>& b);
inline Integer count_metrics_graph(const RibbonGraph& g, const std::vector<long>& b) {
    return count_metrics_graph(dual_graph(g), b);
}
// Same count by direct enumeration of edge lengths against face perimeters of
// the primal graph.
Integer count_metrics_primal(const RibbonGraph& g, const std::vector<long>& b);

}  // namespace mv
