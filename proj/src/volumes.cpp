#include "mv/volumes.hpp"

#include "mv/counting.hpp"
#include "mv/interpolation.hpp"
#include "mv/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <mutex>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace mv {

namespace {

StratumSpec make_spec(std::vector<int> k) {
    StratumSpec s;
    s.k = sorted_desc(std::move(k));
    int w = std::accumulate(s.k.begin(), s.k.end(), 0);
    s.g = (w + 4) / 4;
    s.d = 2 * s.g - 2 + static_cast<int>(s.k.size());
    return s;
}

std::string strip_q(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.size() >= 3 && t[0] == 'Q' && t[1] == '(' && t.back() == ')') t = t.substr(2, t.size() - 3);
    return t;
}

std::string abelian_name(int g) { return "H(" + std::to_string(2 * g - 2) + ")"; }

}  // namespace

StratumSpec StratumSpec::parse(const std::string& text) {
    OddPartition p = parse_stratum(strip_q(text));
    return from_parts(p.parts());
}

StratumSpec StratumSpec::from_parts(std::vector<int> k) {
    for (int x : k)
        if (x < -1 || x % 2 == 0) throw std::invalid_argument("parts must be odd and >= -1");
    int w = std::accumulate(k.begin(), k.end(), 0);
    if (((w % 4) + 4) % 4 != 0) throw std::invalid_argument("sum of parts must be 4g-4");
    if (w < -4) throw std::invalid_argument("sum of parts gives negative genus");
    if (k.size() < 3)
        throw std::invalid_argument("at least three singularities are required (Q(1,-1) and Q(3,1) are empty)");
    return make_spec(std::move(k));
}

std::vector<int> StratumSpec::kappa() const {
    std::vector<int> r;
    for (int x : k) r.push_back(x + 2);
    return r;
}

int StratumSpec::poles() const { return static_cast<int>(std::count(k.begin(), k.end(), -1)); }
std::string StratumSpec::parts_string() const { return format_parts(k); }
std::string StratumSpec::to_string() const { return "Q(" + parts_string() + ")"; }

int ProductStratumSpec::dimension() const {
    int d = quadratic.d;
    for (int g : abelian_genera) d += 2 * g;
    return d;
}

std::string ProductStratumSpec::to_string() const {
    std::string s = quadratic.to_string();
    for (size_t i = 0; i < abelian_genera.size();) {
        size_t j = i;
        while (j < abelian_genera.size() && abelian_genera[j] == abelian_genera[i]) ++j;
        s += " x " + abelian_name(abelian_genera[i]);
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

bool ProductStratumSpec::operator<(const ProductStratumSpec& o) const {
    return std::tie(quadratic.k, abelian_genera) < std::tie(o.quadratic.k, o.abelian_genera);
}

bool ProductStratumSpec::operator==(const ProductStratumSpec& o) const {
    return quadratic.k == o.quadratic.k && abelian_genera == o.abelian_genera;
}

// ---------------------------------------------------------------------------
// Minimal abelian strata

MinimalStratumVolumeTable MinimalStratumVolumeTable::anchored() {
    MinimalStratumVolumeTable t;
    t.set(1, PiValue(make_rational(1, 3), 2), "anchored");
    return t;
}

MinimalStratumVolumeTable MinimalStratumVolumeTable::builtin() {
    MinimalStratumVolumeTable t = anchored();
    t.set(2, PiValue(make_rational(1, 120), 4), "pinned");
    t.set(3, PiValue(make_rational(61, 108864), 6), "pinned");
    return t;
}

const PiValue& MinimalStratumVolumeTable::get(int g) const {
    auto it = entries_.find(g);
    if (it == entries_.end())
        throw Unavailable("Vol " + abelian_name(g) + " is not known; supply it with --minimal-strata");
    return it->second.value;
}

void MinimalStratumVolumeTable::set(int g, const PiValue& v, const std::string& provenance) {
    if (g < 1) throw std::invalid_argument("minimal strata start at H(0)");
    if (v.pi_power() != 2 * g && !v.is_zero())
        throw std::invalid_argument("Vol " + abelian_name(g) + " must be a multiple of pi^" + std::to_string(2 * g));
    entries_[g] = Entry{v, provenance};
}

void MinimalStratumVolumeTable::load_overrides_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("minimal-strata overrides must be a JSON object");
    static const std::regex key(R"(\s*H\(\s*(\d+)\s*\)\s*)");
    for (const auto& [name, value] : j.items()) {
        std::smatch m;
        if (!std::regex_match(name, m, key)) throw std::invalid_argument("bad minimal stratum name '" + name + "'");
        int zero = std::stoi(m[1].str());
        if (zero % 2) throw std::invalid_argument("minimal stratum " + name + " must have an even zero");
        if (!value.is_string()) throw std::invalid_argument("value for " + name + " must be a string 'a/b * pi^d'");
        set(zero / 2 + 1, PiValue::parse(value.get<std::string>()), "override");
    }
}

void MinimalStratumVolumeTable::load_overrides(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open minimal-strata file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("malformed minimal-strata file '" + path + "': " + e.what());
    }
    load_overrides_json(j);
}

std::string MinimalStratumVolumeTable::fingerprint() const {
    std::string s;
    for (const auto& [g, e] : entries_) s += std::to_string(g) + "=" + e.value.to_string() + ";";
    return s;
}

// ---------------------------------------------------------------------------
// P_Gamma and Z

namespace {

// Vertex polynomials in the edge variables; `vertex_poly(v, slots)` returns a
// polynomial in slots.size() variables.
EvenPolynomial assemble(const StableGraph& gamma,
                        const std::function<EvenPolynomial(int, const std::vector<int>&)>& vertex_poly) {
    const int E = gamma.num_edges();
    const auto vars = default_variables(E);
    EvenPolynomial p = EvenPolynomial::constant(E, 1);
    for (int e = 0; e < E; ++e) p = p * EvenPolynomial::variable(E, e);
    auto slots = gamma.vertex_slots();
    for (int v = 0; v < gamma.num_vertices(); ++v) p = p * vertex_poly(v, slots[v]).remap(slots[v], vars);
    return p;
}

}  // namespace

EvenPolynomial build_P_Gamma(const StableGraph& gamma, KontsevichSource source) {
    return assemble(gamma, [&](int v, const std::vector<int>& slots) {
        const auto& x = gamma.vertices[v];
        try {
            return kontsevich_polynomial(x.genus, static_cast<int>(slots.size()), x.kappa, source).labeled;
        } catch (const Unavailable& e) {
            throw Unavailable(std::string(e.what()) + " (vertex g=" + std::to_string(x.genus) +
                              ", n=" + std::to_string(slots.size()) + ", kappa=[" + format_parts(x.kappa) + "])");
        }
    });
}

PiValue zeta_operator(const EvenPolynomial& p) {
    PiValue total;
    for (const auto& [e, c] : p.terms()) {
        PiValue t(c, 0);
        long weight = 0;
        for (int d : e) {
            if (d % 2 == 0) throw std::domain_error("Z operator needs odd exponents in every variable");
            t = t * zeta_even(d + 1) * Rational(factorial(d));
            weight += d + 1;
        }
        t = t / Rational(factorial(weight));
        try {
            total += t;
        } catch (const std::logic_error&) {
            throw std::domain_error("Z operator: mixed pi grades");
        }
    }
    return total;
}

Integer c_d(int d) {
    Integer r = 2 * d;
    r <<= d;
    return r;
}

// ---------------------------------------------------------------------------
// Completed volume

nlohmann::ordered_json VolumeBreakdown::to_json() const {
    nlohmann::ordered_json j;
    j["stratum"] = stratum.to_string();
    j["g"] = stratum.g;
    j["d"] = stratum.d;
    auto gs = nlohmann::ordered_json::array();
    for (const auto& c : graphs) {
        nlohmann::ordered_json x;
        x["graph"] = c.graph.to_string();
        x["edges"] = c.graph.num_edges();
        x["aut"] = c.graph.automorphisms;
        x["multiplicity"] = c.multiplicity;
        x["c_gamma"] = mv::to_string(c.c_gamma);
        x["P"] = c.P.to_json();
        x["Z"] = c.Z.to_string();
        x["contribution"] = c.contribution.to_string();
        if (c.true_contribution) {
            x["true_P"] = c.true_P.to_json();
            x["true_contribution"] = c.true_contribution->to_string();
        }
        gs.push_back(x);
    }
    j["graphs"] = gs;
    j["completed"] = completed.to_string();
    auto ex = nlohmann::ordered_json::array();
    for (const auto& t : expansion) {
        nlohmann::ordered_json x;
        x["coefficient"] = mv::to_string(t.coefficient);
        x["stratum"] = t.stratum.to_string();
        if (t.volume) x["volume"] = t.volume->to_string();
        ex.push_back(x);
    }
    j["expansion"] = ex;
    if (vol) j["vol"] = vol->to_string();
    return j;
}

namespace {

// Prefactor c_d * c_kappa / prod c_{kappa_v} * c_Gamma.
Rational graph_prefactor(const StratumSpec& s, const StableGraph& gamma) {
    Rational r(c_d(s.d) * c_kappa(s.kappa()));
    for (const auto& v : gamma.vertices) r /= Rational(c_kappa(v.kappa));
    return r * gamma.c_gamma();
}

// Top-degree part of the vertex counting function where loops identify
// slots: the Kontsevich polynomial without loops, the wall recursion
// otherwise (brute-force fit where its hypotheses fail). Labeled.
EvenPolynomial true_vertex_polynomial(const StableVertex& x, const std::vector<int>& slots, KontsevichSource source) {
    const int n = static_cast<int>(slots.size());
    WallPartition wall;
    std::vector<bool> used(n, false);
    for (int i = 0; i < n; ++i) {
        if (used[i]) continue;
        int j = -1;
        for (int t = i + 1; t < n; ++t)
            if (slots[t] == slots[i]) j = t;
        if (j < 0) {
            wall.I0.push_back(i);
        } else {
            used[j] = true;
            wall.pairs.push_back({{i}, {j}});
        }
        used[i] = true;
    }
    Rational aut(aut_order(x.kappa));
    if (wall.pairs.empty()) return kontsevich_polynomial(x.genus, n, x.kappa, source).labeled;
    auto witness = generic_wall_witness(wall);
    EvenPolynomial v;
    if (wall.I0.empty() && x.kappa.size() < 3)
        v = extract_top_degree_V_on_wall(x.genus, n, x.kappa, wall, witness);
    else
        v = wall_correction(x.genus, n, x.kappa, wall, witness, source);
    return v * aut;
}

using CompletedKey = std::tuple<std::vector<int>, int, bool>;

}  // namespace

VolumeBreakdown completed_volume(const StratumSpec& s, KontsevichSource source, bool with_true) {
    static std::map<CompletedKey, VolumeBreakdown> cache;
    static std::mutex mu;
    CompletedKey key{s.k, static_cast<int>(source), with_true};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    VolumeBreakdown out;
    out.stratum = s;
    const auto& graphs = enumerate_stable_graphs(s.g, s.kappa());
    auto mult = shape_multiplicities(graphs);
    std::vector<bool> seen;
    for (size_t i = 0; i < graphs.size(); ++i) {
        const auto& gamma = graphs[i];
        if (gamma.shape >= static_cast<int>(seen.size())) seen.resize(gamma.shape + 1, false);
        if (seen[gamma.shape]) continue;
        seen[gamma.shape] = true;

        GraphContribution c;
        c.graph = gamma;
        c.multiplicity = mult[i];
        c.c_gamma = gamma.c_gamma();
        c.P = build_P_Gamma(gamma, source);
        c.Z = zeta_operator(c.P);
        Rational pre = graph_prefactor(s, gamma) * c.multiplicity;
        c.contribution = c.Z * pre;
        if (with_true) {
            c.true_P = assemble(gamma, [&](int v, const std::vector<int>& slots) {
                return true_vertex_polynomial(gamma.vertices[v], slots, source);
            });
            c.true_contribution = zeta_operator(c.true_P) * pre;
        }
        out.completed += c.contribution;
        out.graphs.push_back(std::move(c));
    }

    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, out);
    return out;
}

// ---------------------------------------------------------------------------
// Change of variables

namespace {

using Symbolic = std::vector<std::pair<Rational, std::vector<int>>>;

// Ordered compositions of `total` into `parts` positive integers.
void compositions(int total, int parts, std::vector<int>& cur, const std::function<void()>& emit) {
    if (parts == 0) {
        if (total == 0) emit();
        return;
    }
    for (int x = 1; x <= total - (parts - 1); ++x) {
        cur.push_back(x);
        compositions(total - x, parts - 1, cur, emit);
        cur.pop_back();
    }
}

// [k]bar as a linear combination of words in the symbols [k'] (odd) and
// [2g-2] (even).
Symbolic change_of_variables(int k) {
    Symbolic out{{Rational(1), {k}}};
    for (int kp = k - 4; kp >= -1; kp -= 4) {
        int total = (k - kp) / 4;
        for (int m = 1; m <= total; ++m) {
            Rational pre = Rational(double_factorial(k)) / Rational(double_factorial(k - 2 * m + 2));
            Integer den = factorial(m);
            den <<= m;
            pre /= Rational(den);
            pre *= kp + 2;
            std::vector<int> cur;
            compositions(total, m, cur, [&] {
                Rational c = pre;
                std::vector<int> word{kp};
                for (int gi : cur) {
                    c *= 2 * gi - 1;
                    word.push_back(2 * gi - 2);
                }
                out.push_back({c, word});
            });
        }
    }
    return out;
}

ProductStratumSpec collect_word(const std::vector<int>& word) {
    std::vector<int> odd, genera;
    for (int x : word) {
        if (x % 2 != 0)
            odd.push_back(x);
        else
            genera.push_back(x / 2 + 1);
    }
    ProductStratumSpec p;
    p.quadratic = make_spec(odd);
    std::sort(genera.rbegin(), genera.rend());
    p.abelian_genera = genera;
    return p;
}

std::vector<std::pair<Rational, ProductStratumSpec>> leading_first(const StratumSpec& s,
                                                                    const std::map<ProductStratumSpec, Rational>& m) {
    std::vector<std::pair<Rational, ProductStratumSpec>> out;
    ProductStratumSpec lead{s, {}};
    auto it = m.find(lead);
    out.push_back({it == m.end() ? Rational(0) : it->second, lead});
    for (const auto& [p, c] : m)
        if (!(p == lead) && c != 0) out.push_back({c, p});
    return out;
}

}  // namespace

std::vector<std::pair<Rational, ProductStratumSpec>> theorem1_expand(const StratumSpec& s) {
    // Multilinear expansion: substitute each [k_i]bar and concatenate words.
    Symbolic form{{Rational(1), {}}};
    for (int k : s.k) {
        Symbolic sub = change_of_variables(k);
        Symbolic next;
        for (const auto& [c1, w1] : form)
            for (const auto& [c2, w2] : sub) {
                std::vector<int> w = w1;
                w.insert(w.end(), w2.begin(), w2.end());
                next.push_back({c1 * c2, w});
            }
        form = std::move(next);
    }
    std::map<ProductStratumSpec, Rational> collected;
    for (const auto& [c, w] : form) collected[collect_word(w)] += c;
    return leading_first(s, collected);
}

std::vector<std::pair<Rational, ProductStratumSpec>> theorem1_expand_closed(const StratumSpec& s) {
    const int r = static_cast<int>(s.k.size());
    std::map<ProductStratumSpec, Rational> collected;
    std::vector<int> g(r, 0);
    // For each i with g_i > 0, the list of (coefficient, genus vector) over
    // all compositions of g_i.
    std::function<void(int)> over_g = [&](int i) {
        if (i < r) {
            for (int gi = 0; 4 * gi <= s.k[i] + 1; ++gi) {
                g[i] = gi;
                over_g(i + 1);
            }
            return;
        }
        std::vector<int> kp(r);
        for (int t = 0; t < r; ++t) kp[t] = s.k[t] - 4 * g[t];
        std::vector<std::vector<std::pair<Rational, std::vector<int>>>> options(r);
        for (int t = 0; t < r; ++t) {
            if (g[t] == 0) {
                options[t] = {{Rational(1), {}}};
                continue;
            }
            for (int m = 1; m <= g[t]; ++m) {
                Integer den = factorial(m);
                den <<= m;
                Rational pre = Rational(Integer((kp[t] + 2) * double_factorial(s.k[t]))) /
                               Rational(double_factorial(s.k[t] - 2 * m + 2) * den);
                std::vector<int> cur;
                compositions(g[t], m, cur, [&] {
                    Rational c = pre;
                    for (int x : cur) c *= 2 * x - 1;
                    options[t].push_back({c, cur});
                });
            }
        }
        std::function<void(int, Rational, std::vector<int>)> combine = [&](int t, Rational c, std::vector<int> gen) {
            if (t == r) {
                ProductStratumSpec p;
                p.quadratic = make_spec(kp);
                std::sort(gen.rbegin(), gen.rend());
                p.abelian_genera = gen;
                collected[p] += c;
                return;
            }
            for (const auto& [c2, gs] : options[t]) {
                auto g2 = gen;
                g2.insert(g2.end(), gs.begin(), gs.end());
                combine(t + 1, c * c2, g2);
            }
        };
        combine(0, Rational(1), {});
    };
    over_g(0);
    return leading_first(s, collected);
}

PiValue product_volume(const ProductStratumSpec& p, const MinimalStratumVolumeTable& table,
                       const PiValue& vol_quadratic) {
    const int d = p.dimension();
    if (p.quadratic.g < 0) return PiValue(Rational(0), d);
    const int dq = p.quadratic.d;
    const int r = static_cast<int>(p.abelian_genera.size());
    PiValue v = vol_quadratic * Rational(factorial(dq - 1));
    for (int g : p.abelian_genera) {
        Integer f = factorial(2 * g - 1);
        f <<= 2 * g;
        v = v * table.get(g) * Rational(f);
    }
    Integer den = factorial(d - 1);
    den <<= r;
    return v / Rational(den);
}

// ---------------------------------------------------------------------------
// True volumes

namespace {

using VolumeKey = std::tuple<std::vector<int>, std::string, int>;

}  // namespace

VolumeBreakdown masur_veech_volume(const StratumSpec& s, const MinimalStratumVolumeTable& table,
                                   KontsevichSource source) {
    static std::map<VolumeKey, VolumeBreakdown> cache;
    static std::mutex mu;
    VolumeKey key{s.k, table.fingerprint(), static_cast<int>(source)};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    VolumeBreakdown out = completed_volume(s, source);
    PiValue vol = out.completed;
    auto terms = theorem1_expand(s);
    for (size_t i = 1; i < terms.size(); ++i) {
        ExpansionTerm t;
        t.coefficient = terms[i].first;
        t.stratum = terms[i].second;
        if (t.stratum.quadratic.g < 0) {
            t.volume = PiValue(Rational(0), t.stratum.dimension());
        } else {
            PiValue vq = masur_veech_volume(t.stratum.quadratic, table, source).vol.value();
            t.volume = product_volume(t.stratum, table, vq);
        }
        vol -= *t.volume * t.coefficient;
        out.expansion.push_back(t);
    }
    out.vol = vol;

    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, out);
    return out;
}

PiValue true_volume_from_graphs(const StratumSpec& s, KontsevichSource source) {
    auto b = completed_volume(s, source, true);
    PiValue total;
    for (const auto& c : b.graphs) total += *c.true_contribution;
    return total;
}

// ---------------------------------------------------------------------------
// Pinning

PinningReport pin_minimal_strata(const MinimalStratumVolumeTable& start, int max_d, KontsevichSource source) {
    PinningReport rep;
    rep.table = start;
    std::vector<TableOneRow> rows;
    for (const auto& r : table_one_rows())
        if (r.d <= max_d) rows.push_back(r);
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.d < b.d; });

    for (const auto& row : rows) {
        StratumSpec s = StratumSpec::parse(row.stratum);
        PinningStep step;
        step.row = s.to_string();
        PiValue tab(row.vol, s.d);
        PiValue rest = completed_volume(s, source).completed;
        auto terms = theorem1_expand(s);
        std::set<int> unknown;
        bool nonlinear = false;
        PiValue multiplier;
        for (size_t i = 1; i < terms.size(); ++i) {
            const auto& [coef, p] = terms[i];
            if (p.quadratic.g < 0) continue;
            std::vector<int> missing;
            for (int g : p.abelian_genera)
                if (!rep.table.has(g)) missing.push_back(g);
            PiValue vq = masur_veech_volume(p.quadratic, rep.table, source).vol.value();
            if (missing.empty()) {
                rest -= product_volume(p, rep.table, vq) * coef;
                continue;
            }
            unknown.insert(missing.begin(), missing.end());
            if (missing.size() > 1) {
                nonlinear = true;
                continue;
            }
            MinimalStratumVolumeTable probe = rep.table;
            probe.set(missing[0], PiValue(Rational(1), 2 * missing[0]), "probe");
            multiplier += product_volume(p, probe, vq) * coef;
        }
        if (unknown.empty()) {
            step.value = rest;
            step.consistent = rest == tab;
            step.detail = step.consistent ? "reproduces " + tab.to_string()
                                          : "computed " + rest.to_string() + ", tabulated " + tab.to_string();
        } else if (unknown.size() == 1 && !nonlinear && !multiplier.is_zero()) {
            int g = *unknown.begin();
            // rest - multiplier * H = tab
            PiValue diff = rest - tab;
            Rational h = diff.coefficient() / multiplier.coefficient();
            step.pinned_g = g;
            step.value = PiValue(h, diff.pi_power() - multiplier.pi_power() + 2 * g);
            step.consistent = h > 0;
            step.detail = "pins Vol " + abelian_name(g) + " = " + step.value.to_string();
            if (step.consistent) rep.table.set(g, step.value, "pinned");
        } else {
            step.consistent = false;
            step.detail = "underdetermined: several unknown minimal-stratum volumes";
        }
        rep.consistent = rep.consistent && step.consistent;
        rep.steps.push_back(step);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Square-tiled surfaces

Rational SquareTiledCount::normalized() const {
    if (N == 0) return Rational(0);
    Integer nd = 1;
    for (int i = 0; i < d; ++i) nd *= N;
    return total * (2 * d) / Rational(nd);
}

namespace {

// Number of h in N^E with sum b_e h_e <= M.
Integer height_count(const std::vector<long>& b, long M) {
    long base = std::accumulate(b.begin(), b.end(), 0L);
    if (base > M) return 0;
    long R = M - base;
    if (b.size() == 1) return Integer(R / b[0] + 1);
    std::vector<Integer> ways(R + 1, 0);
    ways[0] = 1;
    for (long be : b)
        for (long t = be; t <= R; ++t) ways[t] += ways[t - be];
    Integer total = 0;
    for (const auto& w : ways) total += w;
    return total;
}

}  // namespace

SquareTiledCount square_tiled_count(const StratumSpec& s, long N) {
    SquareTiledCount out;
    out.N = N;
    out.d = s.d;
    const long M = 2 * N;
    const auto& graphs = enumerate_stable_graphs(s.g, s.kappa());
    auto mult = shape_multiplicities(graphs);
    std::vector<bool> seen;
    Rational ck(c_kappa(s.kappa()));
    for (size_t i = 0; i < graphs.size(); ++i) {
        const auto& gamma = graphs[i];
        if (gamma.shape >= static_cast<int>(seen.size())) seen.resize(gamma.shape + 1, false);
        if (seen[gamma.shape]) continue;
        seen[gamma.shape] = true;

        const int E = gamma.num_edges();
        const int V = gamma.num_vertices();
        auto slots = gamma.vertex_slots();
        Rational pre = ck / Rational(Integer(gamma.automorphisms));
        for (const auto& v : gamma.vertices) pre *= Rational(factorial(mu(v.kappa, 1)));
        std::vector<std::map<std::vector<long>, Rational>> memo(V);

        Rational sum = 0;
        std::vector<long> b(E, 0);
        std::function<void(int, long)> walk = [&](int e, long used) {
            if (e == E) {
                Rational w = 1;
                for (int v = 0; v < V; ++v) {
                    std::vector<long> bv;
                    long par = 0;
                    for (int x : slots[v]) {
                        bv.push_back(b[x]);
                        par += b[x];
                    }
                    if (par % 2) return;
                    auto [it, fresh] = memo[v].try_emplace(bv, 0);
                    if (fresh) {
                        const auto& x = gamma.vertices[v];
                        it->second = counting_function(x.genus, static_cast<int>(bv.size()), x.kappa, bv);
                    }
                    if (it->second == 0) return;
                    w *= it->second;
                }
                for (long be : b) w *= be;
                sum += w * Rational(height_count(b, M));
                return;
            }
            for (long x = 1; used + x <= M - (E - e - 1); ++x) {
                b[e] = x;
                walk(e + 1, used + x);
            }
        };
        walk(0, 0);

        SquareTiledGraphCount c;
        c.graph = gamma;
        c.multiplicity = mult[i];
        c.count = sum * pre * mult[i];
        out.total += c.count;
        out.per_graph.push_back(std::move(c));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cylinders

CylinderDistribution cylinder_distribution(const StratumSpec& s, KontsevichSource source) {
    CylinderDistribution out;
    out.mode = "exact";
    VolumeBreakdown b;
    try {
        b = completed_volume(s, source, true);
    } catch (const std::invalid_argument&) {
        out.exact_true = false;
    } catch (const std::runtime_error&) {
        out.exact_true = false;
    }
    if (!out.exact_true) b = completed_volume(s, source, false);
    PiValue total;
    std::map<int, PiValue> by;
    for (const auto& c : b.graphs) {
        PiValue v = out.exact_true ? *c.true_contribution : c.contribution;
        by[c.graph.num_edges()] += v;
        total += v;
    }
    for (const auto& [e, v] : by) out.frequency[e] = v.coefficient() / total.coefficient();
    return out;
}

CylinderDistribution cylinder_distribution_finite(const StratumSpec& s, long N) {
    CylinderDistribution out;
    out.mode = "N=" + std::to_string(N);
    auto c = square_tiled_count(s, N);
    if (c.total == 0) return out;
    for (const auto& g : c.per_graph) out.frequency[g.graph.num_edges()] += g.count / c.total;
    return out;
}

}  // namespace mv
