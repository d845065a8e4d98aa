#include "mv/stable_graphs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mv {

int StableGraph::genus() const {
    int s = first_betti();
    for (const auto& v : vertices) s += v.genus;
    return s;
}

Rational StableGraph::c_gamma() const {
    Integer den = automorphisms;
    den <<= (num_vertices() - 1);
    return Rational(Integer(1), den);
}

std::vector<std::vector<int>> StableGraph::vertex_slots() const {
    std::vector<std::vector<int>> s(vertices.size());
    for (int e = 0; e < num_edges(); ++e) {
        s[edges[e].first].push_back(e);
        s[edges[e].second].push_back(e);
    }
    return s;
}

std::string StableGraph::to_string() const {
    std::string s;
    for (size_t i = 0; i < vertices.size(); ++i) {
        const auto& v = vertices[i];
        s += (i ? " " : "") + ("v" + std::to_string(i)) + "(g=" + std::to_string(v.genus) + ",[" + format_parts(v.kappa) + "]";
        if (!v.legs.empty()) {
            s += ",legs=";
            for (size_t j = 0; j < v.legs.size(); ++j) s += (j ? "," : "") + std::to_string(v.legs[j]);
        }
        s += ")";
    }
    s += " edges:";
    for (auto [a, b] : edges) s += " " + std::to_string(a) + "-" + std::to_string(b);
    s += " aut=" + std::to_string(automorphisms);
    return s;
}

nlohmann::ordered_json StableGraph::to_json() const {
    nlohmann::ordered_json j;
    auto vs = nlohmann::ordered_json::array();
    for (const auto& v : vertices) {
        nlohmann::ordered_json x;
        x["genus"] = v.genus;
        x["kappa"] = v.kappa;
        x["n_edges"] = v.n_edges;
        x["legs"] = v.legs;
        vs.push_back(x);
    }
    j["vertices"] = vs;
    auto es = nlohmann::ordered_json::array();
    for (auto [a, b] : edges) es.push_back({a, b});
    j["edges"] = es;
    j["aut"] = automorphisms;
    j["c_gamma"] = mv::to_string(c_gamma());
    return j;
}

namespace {

struct Decoration {
    int genus;
    std::vector<int> parts;  // non-leg parts, descending
    int legs;
    int n;
    bool operator<(const Decoration& o) const {
        return std::tie(genus, parts, legs) < std::tie(o.genus, o.parts, o.legs);
    }
    bool operator==(const Decoration& o) const { return genus == o.genus && parts == o.parts && legs == o.legs; }
};

// Sub-multisets of `values` with multiplicities `counts`, as descending lists.
void sub_multisets(const std::vector<int>& values, const std::vector<int>& counts, std::vector<std::vector<int>>& out) {
    std::vector<int> pick(values.size(), 0);
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == values.size()) {
            std::vector<int> p;
            for (size_t k = 0; k < values.size(); ++k)
                for (int c = 0; c < pick[k]; ++c) p.push_back(values[k]);
            out.push_back(sorted_desc(p));
            return;
        }
        for (int c = 0; c <= counts[i]; ++c) {
            pick[i] = c;
            rec(i + 1);
        }
    };
    rec(0);
}

struct Shape {
    std::vector<int> deco;               // decoration index per vertex
    std::vector<std::vector<int>> adj;   // symmetric multiplicities, adj[v][v] = loops
    std::vector<std::vector<int>> auts;  // vertex permutations preserving everything
};

std::vector<int> encode(const std::vector<int>& deco, const std::vector<std::vector<int>>& adj,
                        const std::vector<int>& perm) {
    // perm[new] = old
    int n = static_cast<int>(deco.size());
    std::vector<int> code;
    for (int i = 0; i < n; ++i) code.push_back(deco[perm[i]]);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) code.push_back(adj[perm[i]][perm[j]]);
    return code;
}

// Canonical relabeling among permutations that keep decoration indices
// sorted; returns the canonical shape with its automorphism list.
Shape canonical_shape(const std::vector<int>& deco, const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(deco.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return deco[a] < deco[b]; });
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && deco[perm[j]] == deco[perm[i]]) ++j;
        cells.emplace_back(i, j);
        i = j;
    }
    std::vector<int> best;
    std::vector<int> best_perm;
    std::function<void(size_t)> rec = [&](size_t c) {
        if (c == cells.size()) {
            auto code = encode(deco, adj, perm);
            if (best.empty() || code < best) {
                best = code;
                best_perm = perm;
            }
            return;
        }
        auto [a, b] = cells[c];
        std::sort(perm.begin() + a, perm.begin() + b);
        do {
            rec(c + 1);
        } while (std::next_permutation(perm.begin() + a, perm.begin() + b));
    };
    rec(0);
    Shape s;
    s.deco.resize(n);
    s.adj.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        s.deco[i] = deco[best_perm[i]];
        for (int j = 0; j < n; ++j) s.adj[i][j] = adj[best_perm[i]][best_perm[j]];
    }
    // Automorphisms of the canonical shape.
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    auto self = encode(s.deco, s.adj, id);
    std::vector<int> p = id;
    std::function<void(size_t)> rec2 = [&](size_t c) {
        if (c == cells.size()) {
            if (encode(s.deco, s.adj, p) == self) s.auts.push_back(p);
            return;
        }
        auto [a, b] = cells[c];
        std::sort(p.begin() + a, p.begin() + b);
        do {
            rec2(c + 1);
        } while (std::next_permutation(p.begin() + a, p.begin() + b));
    };
    rec2(0);
    return s;
}

bool connected(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<char> seen(n, 0);
    std::vector<int> st{0};
    seen[0] = 1;
    int cnt = 1;
    while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        for (int w = 0; w < n; ++w)
            if (adj[v][w] && !seen[w]) {
                seen[w] = 1;
                ++cnt;
                st.push_back(w);
            }
    }
    return cnt == n;
}

std::vector<StableGraph> build_stable_graphs(int g, const std::vector<int>& kappa_in) {
    std::vector<int> kappa = sorted_desc(kappa_in);
    for (int k : kappa)
        if (k < 1 || k % 2 == 0) throw std::invalid_argument("stable graphs need odd positive valencies");
    int l = mu(kappa, 1);
    std::map<int, int> cnt;
    for (int k : kappa)
        if (k > 1) ++cnt[k];
    std::vector<int> values, counts;
    for (auto it = cnt.rbegin(); it != cnt.rend(); ++it) {
        values.push_back(it->first);
        counts.push_back(it->second);
    }
    std::vector<std::vector<int>> subs;
    sub_multisets(values, counts, subs);

    std::vector<Decoration> decos;
    for (const auto& p : subs)
        for (int lv = 0; lv <= l; ++lv)
            for (int gv = 0; gv <= g; ++gv) {
                if (p.empty() && lv == 0) continue;
                int s = std::accumulate(p.begin(), p.end(), 0) + lv;
                int len = static_cast<int>(p.size()) + lv;
                int twice = s - 2 * len - 4 * gv + 4;
                if (twice <= 0 || twice % 2) continue;
                decos.push_back({gv, p, lv, twice / 2});
            }
    std::sort(decos.begin(), decos.end());

    std::vector<StableGraph> result;
    std::set<std::vector<int>> seen_shapes;
    int shape_counter = 0;

    std::vector<int> chosen;
    std::map<int, int> remaining = cnt;
    int legs_left = l;
    int genus_used = 0;

    auto process = [&]() {
        int V = static_cast<int>(chosen.size());
        int sum_n = 0;
        for (int d : chosen) sum_n += decos[d].n;
        if (sum_n % 2) return;
        int E = sum_n / 2;
        int h1 = E - V + 1;
        if (h1 < 0 || genus_used + h1 != g) return;
        std::vector<int> rem(V);
        for (int i = 0; i < V; ++i) rem[i] = decos[chosen[i]].n;
        std::vector<std::vector<int>> adj(V, std::vector<int>(V, 0));
        std::vector<Shape> shapes;
        std::function<void(int, int)> fill = [&](int i, int j) {
            if (i == V) {
                if (connected(adj)) {
                    Shape s = canonical_shape(chosen, adj);
                    auto key = encode(s.deco, s.adj, [&] {
                        std::vector<int> id(V);
                        std::iota(id.begin(), id.end(), 0);
                        return id;
                    }());
                    if (seen_shapes.insert(key).second) shapes.push_back(std::move(s));
                }
                return;
            }
            if (j == V) {
                if (rem[i] == 0) fill(i + 1, i + 1);
                return;
            }
            int maxm = (i == j) ? rem[i] / 2 : std::min(rem[i], rem[j]);
            for (int m = 0; m <= maxm; ++m) {
                int use_i = (i == j) ? 2 * m : m;
                rem[i] -= use_i;
                if (i != j) rem[j] -= m;
                adj[i][j] = adj[j][i] = m;
                fill(i, j + 1);
                rem[i] += use_i;
                if (i != j) rem[j] += m;
                adj[i][j] = adj[j][i] = 0;
            }
        };
        fill(0, 0);
        for (const auto& s : shapes) {
            int shape_id = shape_counter++;
            // Leg assignments: leg -> vertex, respecting leg counts.
            std::vector<int> slots;
            for (int v = 0; v < V; ++v)
                for (int c = 0; c < decos[s.deco[v]].legs; ++c) slots.push_back(v);
            std::sort(slots.begin(), slots.end());
            std::set<std::vector<int>> seen_assign;
            Integer edge_factor = 1;
            for (int u = 0; u < V; ++u)
                for (int w = u; w < V; ++w) {
                    int m = s.adj[u][w];
                    edge_factor *= factorial(m);
                    if (u == w) edge_factor <<= m;
                }
            do {
                std::vector<int> canon;
                long stab = 0;
                for (const auto& p : s.auts) {
                    // p[new] = old; vertex old maps to new
                    std::vector<int> inv(V);
                    for (int x = 0; x < V; ++x) inv[p[x]] = x;
                    std::vector<int> img(slots.size());
                    for (size_t t = 0; t < slots.size(); ++t) img[t] = inv[slots[t]];
                    if (canon.empty() || img < canon) canon = img;
                    if (img == slots) ++stab;
                }
                if (s.auts.empty()) canon = slots, stab = 1;
                if (!seen_assign.insert(canon).second) continue;
                StableGraph sg;
                sg.shape = shape_id;
                for (int v = 0; v < V; ++v) {
                    const auto& d = decos[s.deco[v]];
                    StableVertex sv;
                    sv.genus = d.genus;
                    sv.kappa = d.parts;
                    for (int c = 0; c < d.legs; ++c) sv.kappa.push_back(1);
                    sv.n_edges = d.n;
                    for (size_t t = 0; t < canon.size(); ++t)
                        if (canon[t] == v) sv.legs.push_back(static_cast<int>(t) + 1);
                    sg.vertices.push_back(sv);
                }
                for (int u = 0; u < V; ++u)
                    for (int w = u; w < V; ++w)
                        for (int m = 0; m < s.adj[u][w]; ++m) sg.edges.emplace_back(u, w);
                Integer aut = edge_factor * stab;
                sg.automorphisms = aut.get_si();
                result.push_back(std::move(sg));
            } while (std::next_permutation(slots.begin(), slots.end()));
        }
    };

    std::function<void(size_t)> choose = [&](size_t start) {
        bool done = legs_left == 0;
        for (auto [v, c] : remaining)
            if (c) done = false;
        if (done && !chosen.empty()) process();
        for (size_t d = start; d < decos.size(); ++d) {
            const auto& dec = decos[d];
            if (dec.legs > legs_left || genus_used + dec.genus > g) continue;
            bool fits = true;
            std::map<int, int> need;
            for (int p : dec.parts) ++need[p];
            for (auto [v, c] : need)
                if (remaining[v] < c) fits = false;
            if (!fits) continue;
            for (auto [v, c] : need) remaining[v] -= c;
            legs_left -= dec.legs;
            genus_used += dec.genus;
            chosen.push_back(static_cast<int>(d));
            choose(d);
            chosen.pop_back();
            genus_used -= dec.genus;
            legs_left += dec.legs;
            for (auto [v, c] : need) remaining[v] += c;
        }
    };
    choose(0);
    return result;
}

}  // namespace

const std::vector<StableGraph>& enumerate_stable_graphs(int g, const std::vector<int>& kappa) {
    static std::map<std::vector<int>, std::vector<StableGraph>> cache;
    static std::mutex mu;
    std::vector<int> key{g};
    for (int k : sorted_desc(kappa)) key.push_back(k);
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, build_stable_graphs(g, kappa)).first->second;
}

std::vector<int> shape_multiplicities(const std::vector<StableGraph>& graphs) {
    std::map<int, int> m;
    for (const auto& gr : graphs) ++m[gr.shape];
    std::vector<int> out;
    for (const auto& gr : graphs) out.push_back(m[gr.shape]);
    return out;
}

Integer lattice_index(const StableGraph& gamma) {
    Integer r = 1;
    r <<= (gamma.num_vertices() - 1);
    return r;
}

std::string AbelianStableGraph::to_string() const {
    return "H(" + std::to_string(2 * g - 2) + "): g_v=" + std::to_string(g_v) + " loops=" + std::to_string(loops);
}

std::vector<AbelianStableGraph> enumerate_abelian_stable_graphs(int g) {
    std::vector<AbelianStableGraph> out;
    for (int loops = 1; loops <= g; ++loops) out.push_back({g, g - loops, loops});
    return out;
}

}  // namespace mv
