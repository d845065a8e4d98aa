#pragma once

// Completed and true Masur-Veech volumes of odd strata Q(k): stable-graph
// sums over Kontsevich polynomials, the Z operator, the change of variables
// relating both volumes, product strata, minimal abelian strata, exact
// square-tiled counts and cylinder statistics.

#include "mv/arith.hpp"
#include "mv/kontsevich.hpp"
#include "mv/polynomial.hpp"
#include "mv/stable_graphs.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace mv {

struct StratumSpec {
    std::vector<int> k;  // descending, odd parts >= -1
    int g = 0;
    int d = 0;

    // Accepts "3,-1^3" or "Q(3,-1^3)". Throws std::invalid_argument for even
    // parts, parts < -1, sum not 4g-4 with g >= 0, or fewer than 3 parts.
    static StratumSpec parse(const std::string& text);
    static StratumSpec from_parts(std::vector<int> k);

    std::vector<int> kappa() const;  // k + 2
    int poles() const;
    std::string parts_string() const;  // "3,-1^3"
    std::string to_string() const;     // "Q(3,-1^3)"
    bool operator<(const StratumSpec& o) const { return k < o.k; }
    bool operator==(const StratumSpec& o) const { return k == o.k; }
};

struct ProductStratumSpec {
    StratumSpec quadratic;
    std::vector<int> abelian_genera;  // descending, each >= 1: factors H(2g_i - 2)

    int dimension() const;
    std::string to_string() const;  // "Q(-1^4) x H(0)^2"
    bool operator<(const ProductStratumSpec& o) const;
    bool operator==(const ProductStratumSpec& o) const;
};

// Vol H(2g-2) for the minimal abelian strata, in the normalization where
// Vol H(0) = pi^2/3.
class MinimalStratumVolumeTable {
public:
    struct Entry {
        PiValue value;
        std::string provenance;  // "anchored", "pinned", "override"
    };

    // Only H(0).
    static MinimalStratumVolumeTable anchored();
    // H(0) plus the values pinned from the completed/true volume rows
    // (H(2) = pi^4/120, H(4) = 61 pi^6/108864); the pinning test recomputes
    // them.
    static MinimalStratumVolumeTable builtin();

    bool has(int g) const { return entries_.count(g) > 0; }
    // Throws Unavailable naming H(2g-2) when absent.
    const PiValue& get(int g) const;
    void set(int g, const PiValue& v, const std::string& provenance);
    const std::map<int, Entry>& entries() const { return entries_; }
    // JSON object {"H(6)": "a/b * pi^8", ...}; entries are tagged "override".
    void load_overrides(const std::string& path);
    void load_overrides_json(const nlohmann::json& j);
    std::string fingerprint() const;

private:
    std::map<int, Entry> entries_;
};

// P_Gamma = prod_e b_e * prod_v N^{kappa_v}_{g_v,n_v}(b_v) in the edge
// variables b1..bE (a loop feeds its variable twice).
EvenPolynomial build_P_Gamma(const StableGraph& gamma, KontsevichSource source = KontsevichSource::Auto);
// Z(prod b_i^{d_i}) = prod d_i! zeta(d_i+1) / (sum (d_i+1))!, extended linearly.
// Throws std::domain_error for even exponents or mixed pi grades.
PiValue zeta_operator(const EvenPolynomial& p);

struct GraphContribution {
    StableGraph graph;  // representative of its leg-forgetting shape
    int multiplicity = 1;
    Rational c_gamma;
    EvenPolynomial P;
    PiValue Z;
    PiValue contribution;  // multiplicity included
    // Same sum with 2V on the loop walls instead of N (true contribution).
    std::optional<PiValue> true_contribution;
    EvenPolynomial true_P;
};

struct ExpansionTerm {
    Rational coefficient;
    ProductStratumSpec stratum;
    std::optional<PiValue> volume;  // product volume, when available
};

struct VolumeBreakdown {
    StratumSpec stratum;
    std::vector<GraphContribution> graphs;
    PiValue completed;
    std::vector<ExpansionTerm> expansion;  // boundary terms only (leading term omitted)
    std::optional<PiValue> vol;

    nlohmann::ordered_json to_json() const;
};

// c_d = 2^d * 2d.
Integer c_d(int d);

// Per-shape contributions and their total. With `with_true`, also the true
// per-graph contributions from the wall recursion.
VolumeBreakdown completed_volume(const StratumSpec& s, KontsevichSource source = KontsevichSource::Auto,
                                 bool with_true = false);

// Boundary terms of the change of variables, expanded as a multilinear form
// in non-commuting symbols; the leading term 1 * Q(k) comes first.
std::vector<std::pair<Rational, ProductStratumSpec>> theorem1_expand(const StratumSpec& s);
// The same coefficients from the closed sum over genus vectors and
// compositions (independent implementation used as a cross-check).
std::vector<std::pair<Rational, ProductStratumSpec>> theorem1_expand_closed(const StratumSpec& s);

// Vol(Q x prod H) = 2^{-r} (d'-1)! Vol Q prod (2^{2g_i} (2g_i-1)! Vol H(2g_i-2)) / (d-1)!.
PiValue product_volume(const ProductStratumSpec& p, const MinimalStratumVolumeTable& table, const PiValue& vol_quadratic);

// Vol = completed - sum of boundary terms, recursing on the quadratic
// factors. Strata of negative genus contribute zero. Memoized.
VolumeBreakdown masur_veech_volume(const StratumSpec& s, const MinimalStratumVolumeTable& table,
                                   KontsevichSource source = KontsevichSource::Auto);

// Sum over stable graphs of the true contributions (no abelian volumes
// involved); equals masur_veech_volume when the wall recursion applies.
PiValue true_volume_from_graphs(const StratumSpec& s, KontsevichSource source = KontsevichSource::Auto);

struct TableOneRow {
    std::string stratum;  // "3,-1^3"
    int d;
    Rational vol;        // coefficient of pi^d
    Rational completed;  // coefficient of pi^d
};
const std::vector<TableOneRow>& table_one_rows();

struct PinningStep {
    std::string row;        // stratum used
    int pinned_g = -1;      // -1: consistency check only
    PiValue value;          // pinned value, or the reproduced Vol
    bool consistent = true;
    std::string detail;
};

struct PinningReport {
    MinimalStratumVolumeTable table;
    std::vector<PinningStep> steps;
    bool consistent = true;
};

// Starting from `start`, walks the table rows with d <= max_d in order of
// dimension; a row whose expansion involves exactly one unknown Vol H(2g-2),
// linearly, pins it from the tabulated Vol; every other row must reproduce
// its tabulated Vol.
PinningReport pin_minimal_strata(const MinimalStratumVolumeTable& start, int max_d = 8,
                                 KontsevichSource source = KontsevichSource::Auto);

struct SquareTiledGraphCount {
    StableGraph graph;  // representative of its shape
    int multiplicity = 1;
    Rational count;     // multiplicity included
};

struct SquareTiledCount {
    long N = 0;
    int d = 0;
    Rational total;
    std::vector<SquareTiledGraphCount> per_graph;
    // 2d * total / N^d
    Rational normalized() const;
};

// card ST(Q(k), 2N) = sum_Gamma c_kappa prod mu_1(kappa_v)! / |Aut Gamma|
//   * sum_{b.H <= 2N} prod b_e prod F^{kappa_v}(b_v), with exact counting
// functions.
SquareTiledCount square_tiled_count(const StratumSpec& s, long N);

struct CylinderDistribution {
    std::map<int, Rational> frequency;  // cylinders -> frequency
    bool exact_true = true;             // false: completed contributions used
    std::string mode;                   // "exact" or "N=..."
};

CylinderDistribution cylinder_distribution(const StratumSpec& s, KontsevichSource source = KontsevichSource::Auto);
CylinderDistribution cylinder_distribution_finite(const StratumSpec& s, long N);

}  // namespace mv
