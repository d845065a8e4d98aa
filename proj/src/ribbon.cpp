#include "mv/ribbon.hpp"

#include "mv/class_count.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mv {

namespace {

std::vector<std::vector<int>> cycles_of(const std::vector<int>& perm) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(perm.size(), 0);
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        for (int h = static_cast<int>(i); !seen[h]; h = perm[h]) {
            seen[h] = 1;
            cyc.push_back(h);
        }
        out.push_back(cyc);
    }
    return out;
}

std::string cycles_text(const std::vector<std::vector<int>>& cycles) {
    std::string s;
    for (const auto& c : cycles) {
        s += "(";
        for (size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
        s += ")";
    }
    return s;
}

}  // namespace

std::vector<int> discover_faces(const std::vector<int>& sigma, const std::vector<int>& alpha, int* num_faces) {
    std::vector<int> face(sigma.size(), -1);
    int f = 0;
    for (size_t i = 0; i < sigma.size(); ++i) {
        if (face[i] >= 0) continue;
        for (int h = static_cast<int>(i); face[h] < 0; h = sigma[alpha[h]]) face[h] = f;
        ++f;
    }
    if (num_faces) *num_faces = f;
    return face;
}

std::vector<int> block_rotation(const std::vector<int>& kappa) {
    std::vector<int> s;
    int base = 0;
    for (int k : kappa) {
        for (int i = 0; i < k; ++i) s.push_back(base + (i + 1) % k);
        base += k;
    }
    return s;
}

int RibbonGraph::num_vertices() const { return static_cast<int>(cycles_of(sigma).size()); }

int RibbonGraph::num_faces() const {
    if (face.empty()) return 0;
    return *std::max_element(face.begin(), face.end()) + 1;
}

int RibbonGraph::genus() const {
    int chi = num_vertices() - num_edges() + num_faces();
    return (2 - chi) / 2;
}

std::vector<int> RibbonGraph::vertex_of() const {
    std::vector<int> v(sigma.size());
    int idx = 0;
    for (const auto& c : cycles_of(sigma)) {
        for (int h : c) v[h] = idx;
        ++idx;
    }
    return v;
}

bool RibbonGraph::connected() const {
    int n = num_half_edges();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int h = stack.back();
        stack.pop_back();
        for (int x : {sigma[h], alpha[h]})
            if (!seen[x]) {
                seen[x] = 1;
                ++count;
                stack.push_back(x);
            }
    }
    return count == n;
}

std::vector<int> RibbonGraph::degrees() const {
    std::vector<int> d;
    for (const auto& c : cycles_of(sigma)) d.push_back(static_cast<int>(c.size()));
    return sorted_desc(d);
}

std::vector<std::vector<int>> RibbonGraph::vertex_cycles() const { return cycles_of(sigma); }

std::vector<std::vector<int>> RibbonGraph::face_cycles() const {
    std::vector<std::vector<int>> out(num_faces());
    std::vector<int> phi(sigma.size());
    for (size_t h = 0; h < sigma.size(); ++h) phi[h] = sigma[alpha[h]];
    for (const auto& c : cycles_of(phi)) out[face[c.front()]] = c;
    return out;
}

std::vector<std::pair<int, int>> RibbonGraph::edges() const {
    std::vector<std::pair<int, int>> e;
    for (int h = 0; h < num_half_edges(); ++h)
        if (h < alpha[h]) e.emplace_back(h, alpha[h]);
    return e;
}

std::string RibbonGraph::to_string() const {
    std::string s = "sigma=" + cycles_text(cycles_of(sigma)) + " alpha=" + cycles_text(cycles_of(alpha)) + " faces=[";
    for (size_t i = 0; i < face.size(); ++i) s += (i ? "," : "") + std::to_string(face[i]);
    return s + "]";
}

nlohmann::ordered_json RibbonGraph::to_json() const {
    nlohmann::ordered_json j;
    j["sigma"] = cycles_of(sigma);
    j["alpha"] = cycles_of(alpha);
    j["faces"] = face;
    j["genus"] = genus();
    j["num_faces"] = num_faces();
    j["degrees"] = degrees();
    return j;
}

RibbonGraph RibbonGraph::from_json(const nlohmann::json& j) {
    auto perm_from = [](const nlohmann::json& cyc) {
        std::vector<std::vector<int>> cycles = cyc.get<std::vector<std::vector<int>>>();
        int n = 0;
        for (const auto& c : cycles) n += static_cast<int>(c.size());
        std::vector<int> p(n, -1);
        for (const auto& c : cycles)
            for (size_t i = 0; i < c.size(); ++i) p.at(c[i]) = c[(i + 1) % c.size()];
        if (std::find(p.begin(), p.end(), -1) != p.end()) throw std::invalid_argument("cycles do not cover 0..n-1");
        return p;
    };
    RibbonGraph g;
    g.sigma = perm_from(j.at("sigma"));
    g.alpha = perm_from(j.at("alpha"));
    if (g.sigma.size() != g.alpha.size()) throw std::invalid_argument("sigma and alpha sizes differ");
    for (int h = 0; h < static_cast<int>(g.alpha.size()); ++h)
        if (g.alpha[h] == h || g.alpha[g.alpha[h]] != h) throw std::invalid_argument("alpha is not a fixed-point-free involution");
    if (j.contains("faces")) g.face = j.at("faces").get<std::vector<int>>();
    else g.face = discover_faces(g.sigma, g.alpha, nullptr);
    return g;
}

CanonicalForm canonical_form(const RibbonGraph& g, bool labeled_faces) {
    int n = g.num_half_edges();
    CanonicalForm best;
    std::vector<int> label(n), order(n);
    for (int root = 0; root < n; ++root) {
        std::fill(label.begin(), label.end(), -1);
        int next = 0;
        label[root] = next;
        order[next++] = root;
        for (int i = 0; i < next; ++i) {
            int h = order[i];
            for (int x : {g.sigma[h], g.alpha[h]})
                if (label[x] < 0) {
                    label[x] = next;
                    order[next++] = x;
                }
        }
        if (next != n) throw std::invalid_argument("canonical_form requires a connected ribbon graph");
        std::vector<int> code;
        code.reserve(3 * n);
        for (int i = 0; i < n; ++i) {
            int h = order[i];
            code.push_back(label[g.sigma[h]]);
            code.push_back(label[g.alpha[h]]);
            if (labeled_faces) code.push_back(g.face[h]);
        }
        if (best.automorphisms == 0 || code < best.code) {
            best.code = std::move(code);
            best.automorphisms = 1;
        } else if (code == best.code) {
            ++best.automorphisms;
        }
    }
    return best;
}

std::vector<RibbonClass> enumerate_ribbon_graphs(int g, int n, const std::vector<int>& kappa, bool labeled_faces) {
    if (!euler_check(g, n, kappa)) return {};
    for (int k : kappa)
        if (k < 1) throw std::invalid_argument("vertex degrees must be positive");
    std::vector<int> sigma = block_rotation(kappa);
    int H = static_cast<int>(sigma.size());
    std::map<std::vector<int>, RibbonClass> found;
    std::vector<int> alpha(H, -1);
    std::function<void()> rec = [&]() {
        int h = 0;
        while (h < H && alpha[h] >= 0) ++h;
        if (h == H) {
            RibbonGraph rg{sigma, alpha, {}};
            int nf = 0;
            rg.face = discover_faces(sigma, alpha, &nf);
            if (nf != n || !rg.connected()) return;
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::vector<int> base = rg.face;
            do {
                for (int i = 0; i < H; ++i) rg.face[i] = perm[base[i]];
                CanonicalForm cf = canonical_form(rg, labeled_faces);
                if (!found.count(cf.code)) found.emplace(cf.code, RibbonClass{rg, cf.automorphisms});
            } while (labeled_faces && std::next_permutation(perm.begin(), perm.end()));
            return;
        }
        for (int x = h + 1; x < H; ++x)
            if (alpha[x] < 0) {
                alpha[h] = x;
                alpha[x] = h;
                rec();
                alpha[h] = alpha[x] = -1;
            }
    };
    if (H % 2 == 0) rec();
    std::vector<RibbonClass> out;
    for (auto& [code, rc] : found) out.push_back(std::move(rc));
    return out;
}

DualGraph dual_graph(const RibbonGraph& g) {
    DualGraph d;
    d.n = g.num_faces();
    for (auto [h, k] : g.edges()) d.edges.emplace_back(g.face[h], g.face[k]);
    return d;
}

long WallForm::value(const std::vector<long>& b) const {
    long s = 0;
    for (int i : plus) s += b.at(i);
    for (int i : minus) s -= b.at(i);
    return s;
}

std::string WallForm::to_string() const {
    std::string s;
    for (size_t i = 0; i < plus.size(); ++i) s += (i ? "+" : "") + ("b" + std::to_string(plus[i] + 1));
    for (int i : minus) s += "-b" + std::to_string(i + 1);
    return s;
}

std::vector<WallForm> all_wall_forms(int n) {
    // Each label goes to I (1), J (2) or neither (0); keep one of each pair
    // {I, J} by requiring the smallest used label to be in I.
    std::vector<WallForm> out;
    long total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (long code = 0; code < total; ++code) {
        WallForm w;
        long c = code;
        for (int i = 0; i < n; ++i, c /= 3) {
            if (c % 3 == 1) w.plus.push_back(i);
            else if (c % 3 == 2) w.minus.push_back(i);
        }
        if (w.plus.empty() || w.minus.empty()) continue;
        if (w.minus.front() < w.plus.front()) continue;
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<int> cell_signature(const std::vector<long>& b) {
    std::vector<int> s;
    for (const auto& w : all_wall_forms(static_cast<int>(b.size()))) {
        long v = w.value(b);
        s.push_back(v > 0 ? 1 : (v < 0 ? -1 : 0));
    }
    return s;
}

bool off_walls(const std::vector<long>& b) {
    for (int s : cell_signature(b))
        if (s == 0) return false;
    return true;
}

Rational StaticEdge::weight(const std::vector<long>& b) const {
    Rational w = form.value(b);
    return bridge ? w : w / 2;
}

namespace {

// Two-colors the component of `start` in g minus edge `skip`; returns false
// if it is not bipartite. colour[] is -1 outside the component.
bool colour_component(const DualGraph& g, int skip, int start, std::vector<int>& colour) {
    colour.assign(g.n, -1);
    colour[start] = 0;
    std::vector<int> stack{start};
    bool ok = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
            if (e == skip) continue;
            auto [a, b] = g.edges[e];
            if (a != v && b != v) continue;
            int w = a == v ? b : a;
            if (colour[w] < 0) {
                colour[w] = 1 - colour[v];
                stack.push_back(w);
            } else if (colour[w] == colour[v]) {
                ok = false;
            }
        }
    }
    return ok;
}

WallForm form_from_colour(const std::vector<int>& colour) {
    WallForm w;
    for (int v = 0; v < static_cast<int>(colour.size()); ++v) {
        if (colour[v] == 0) w.plus.push_back(v);
        else if (colour[v] == 1) w.minus.push_back(v);
    }
    return w;
}

}  // namespace

bool is_bipartite(const DualGraph& g) {
    std::vector<int> colour;
    std::vector<char> done(g.n, 0);
    for (int v = 0; v < g.n; ++v) {
        if (done[v]) continue;
        if (!colour_component(g, -1, v, colour)) return false;
        for (int w = 0; w < g.n; ++w)
            if (colour[w] >= 0) done[w] = 1;
    }
    return true;
}

std::vector<StaticEdge> static_edges(const DualGraph& g) {
    std::vector<StaticEdge> out;
    std::vector<int> cu, cv;
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        auto [u, v] = g.edges[e];
        bool bu = colour_component(g, e, u, cu);
        bool bridge = cu[v] < 0;
        if (bridge) {
            if (bu) {
                out.push_back({e, form_from_colour(cu), true});
                continue;
            }
            if (colour_component(g, e, v, cv)) out.push_back({e, form_from_colour(cv), true});
            continue;
        }
        // Same component: static only when e joins two vertices of one colour.
        if (bu && cu[u] == cu[v]) {
            if (cu[u] == 1)
                for (int& c : cu)
                    if (c >= 0) c = 1 - c;
            out.push_back({e, form_from_colour(cu), false});
        }
    }
    return out;
}

Integer count_metrics_graph(const DualGraph& g, const std::vector<long>& b) {
    if (static_cast<int>(b.size()) != g.n) throw std::invalid_argument("perimeter vector has wrong length");
    std::vector<long> r(b);
    std::vector<char> fixed(g.edges.size(), 0);
    for (const auto& s : static_edges(g)) {
        Rational w = s.weight(b);
        if (w.get_den() != 1 || w <= 0) return 0;
        long x = w.get_num().get_si();
        auto [u, v] = g.edges[s.edge];
        r[u] -= x;
        r[v] -= x;
        fixed[s.edge] = 1;
    }
    for (long x : r)
        if (x < 0) return 0;
    std::map<std::pair<int, int>, int> mult;
    for (size_t e = 0; e < g.edges.size(); ++e) {
        if (fixed[e]) continue;
        auto [u, v] = g.edges[e];
        ++mult[{std::min(u, v), std::max(u, v)}];
    }
    std::vector<EdgeClass> classes;
    for (auto [uv, k] : mult) classes.push_back({uv.first, uv.second, k});
    ClassCounter counter(g.n, classes);
    // Parallel free edges are counted as compositions of the class sum, which
    // is exactly the number of ordered positive weightings of those edges.
    return to_integer(counter.count(r));
}

Integer count_metrics_primal(const RibbonGraph& g, const std::vector<long>& b) {
    int nf = g.num_faces();
    if (static_cast<int>(b.size()) != nf) throw std::invalid_argument("perimeter vector has wrong length");
    auto es = g.edges();
    std::vector<long> r(b);
    std::function<Integer(size_t)> rec = [&](size_t i) -> Integer {
        if (i == es.size()) {
            for (long x : r)
                if (x != 0) return 0;
            return 1;
        }
        int f1 = g.face[es[i].first], f2 = g.face[es[i].second];
        Integer total = 0;
        for (long len = 1;; ++len) {
            r[f1] -= len;
            r[f2] -= len;
            bool ok = r[f1] >= 0 && r[f2] >= 0;
            if (ok) total += rec(i + 1);
            r[f1] += len;
            r[f2] += len;
            if (!ok) break;
        }
        return total;
    };
    return rec(0);
}

}  // namespace mv
