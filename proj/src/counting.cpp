#include "mv/counting.hpp"

#include "mv/partitions.hpp"
#include "mv/ribbon.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace mv {

namespace {

inline int tri(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    return u * n - u * (u - 1) / 2 + (v - u);
}

using Key = std::string;

// Cheap colour refinement for canonical relabeling of patterns.
std::vector<std::vector<long>> vertex_invariants(int n, int n_black, const Key& key) {
    std::vector<std::vector<long>> inv(n);
    for (int v = 0; v < n; ++v) {
        std::vector<long> nb;
        long deg = 0;
        for (int w = 0; w < n; ++w) {
            int m = static_cast<unsigned char>(key[tri(n, v, w)]);
            if (w != v && m) nb.push_back(m);
            deg += (w == v ? 2 : 1) * m;
        }
        std::sort(nb.begin(), nb.end());
        inv[v] = {v < n_black ? 0 : 1, static_cast<unsigned char>(key[tri(n, v, v)]), deg};
        inv[v].insert(inv[v].end(), nb.begin(), nb.end());
    }
    // One round of neighbourhood refinement.
    std::map<std::vector<long>, long> ids;
    for (const auto& x : inv) ids.emplace(x, 0);
    long next = 0;
    for (auto& [k, id] : ids) id = next++;
    std::vector<std::vector<long>> out(n);
    for (int v = 0; v < n; ++v) {
        std::vector<long> nb;
        for (int w = 0; w < n; ++w) {
            int m = static_cast<unsigned char>(key[tri(n, v, w)]);
            if (w != v && m) nb.push_back(ids[inv[w]] * 256 + m);
        }
        std::sort(nb.begin(), nb.end());
        out[v] = inv[v];
        out[v].push_back(-1);
        out[v].insert(out[v].end(), nb.begin(), nb.end());
    }
    return out;
}

// Minimal relabeled key over label permutations that preserve the refined
// invariants (and colours). Gives up and returns the key unchanged when the
// search would exceed `budget` permutations; grouping stays correct either way.
Key canonical_key(int n, int n_black, const Key& key, long budget = 5040) {
    auto inv = vertex_invariants(n, n_black, key);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return inv[a] < inv[b]; });
    std::vector<std::pair<int, int>> cells;
    long work = 1;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && inv[order[j]] == inv[order[i]]) ++j;
        cells.emplace_back(i, j);
        for (int k = 2; k <= j - i; ++k) work *= k;
        if (work > budget) return key;
        i = j;
    }
    Key best;
    std::vector<int> pos(n);
    std::function<void(size_t)> rec = [&](size_t c) {
        if (c == cells.size()) {
            for (int i = 0; i < n; ++i) pos[order[i]] = i;
            Key k(key.size(), 0);
            for (int u = 0; u < n; ++u)
                for (int v = u; v < n; ++v) k[tri(n, pos[u], pos[v])] = key[tri(n, u, v)];
            if (best.empty() || k < best) best = std::move(k);
            return;
        }
        auto [a, b] = cells[c];
        std::sort(order.begin() + a, order.begin() + b);
        do {
            rec(c + 1);
        } while (std::next_permutation(order.begin() + a, order.begin() + b));
    };
    rec(0);
    return best;
}

std::vector<PatternOrbit> orbits_from_raw(int n, int n_black, const std::unordered_map<Key, Integer>& raw) {
    std::map<Key, Integer> merged;
    for (const auto& [k, w] : raw) merged[canonical_key(n, n_black, k)] += w;
    std::vector<PatternOrbit> out;
    for (const auto& [k, w] : merged) {
        std::vector<EdgeClass> classes;
        for (int u = 0; u < n; ++u)
            for (int v = u; v < n; ++v) {
                int m = static_cast<unsigned char>(k[tri(n, u, v)]);
                if (m) classes.push_back({u, v, m});
            }
        out.push_back({ClassCounter(n, classes), w});
    }
    return out;
}

Key pattern_key(int n, const std::vector<int>& alpha, const std::vector<int>& face, const std::vector<int>& relabel) {
    Key k(n * (n + 1) / 2, 0);
    for (int h = 0; h < static_cast<int>(alpha.size()); ++h)
        if (h < alpha[h]) {
            int idx = tri(n, relabel[face[h]], relabel[face[alpha[h]]]);
            if (static_cast<unsigned char>(k[idx]) == 255) throw std::overflow_error("edge class multiplicity too large");
            k[idx] = static_cast<char>(k[idx] + 1);
        }
    return k;
}

std::shared_ptr<CountingTable> build_counting_table(int g, int n, std::vector<int> kappa) {
    auto t = std::make_shared<CountingTable>();
    t->g = g;
    t->n = n;
    t->n_black = n;
    kappa = sorted_desc(kappa);
    Integer z = 1;
    {
        std::map<int, int> mult;
        for (int k : kappa) ++mult[k];
        for (auto [k, m] : mult) {
            Integer p;
            mpz_ui_pow_ui(p.get_mpz_t(), k, m);
            z *= p * factorial(m);
        }
    }
    t->denominator = z;
    if (n < 1 || kappa.empty() || !euler_check(g, n, kappa)) return t;
    for (int k : kappa)
        if (k < 1) throw std::invalid_argument("valencies must be positive");
    std::vector<int> nonleaf;
    int leaves = 0;
    for (int k : kappa) {
        if (k == 1) ++leaves;
        else nonleaf.push_back(k);
    }
    std::unordered_map<Key, Integer> raw;
    if (nonleaf.empty()) {
        if (leaves == 2 && n == 1 && g == 0) {
            raw[Key(1, 1)] = 1;
            t->involutions = 1;
        }
        t->orbits = orbits_from_raw(n, n, raw);
        return t;
    }
    std::vector<int> sigma = block_rotation(nonleaf);
    int hnl = static_cast<int>(sigma.size());
    int H = hnl + leaves;
    for (int i = hnl; i < H; ++i) sigma.push_back(i);
    std::vector<int> vert(hnl);
    {
        int base = 0, v = 0;
        for (int k : nonleaf) {
            for (int i = 0; i < k; ++i) vert[base + i] = v;
            base += k;
            ++v;
        }
    }
    int nverts = static_cast<int>(nonleaf.size());
    std::vector<int> alpha(H, -1);
    std::vector<int> ident(n);
    std::iota(ident.begin(), ident.end(), 0);
    std::vector<int> parent(nverts);
    std::unordered_map<Key, long> counts;
    long total = 0;
    int next_leaf = 0;
    int unmatched = hnl;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    std::function<void(int)> rec = [&](int start) {
        int h = start;
        while (h < hnl && alpha[h] >= 0) ++h;
        if (h == hnl) {
            if (next_leaf != leaves) return;
            std::iota(parent.begin(), parent.end(), 0);
            int comps = nverts;
            for (int x = 0; x < hnl; ++x)
                if (alpha[x] < hnl && x < alpha[x]) {
                    int a = find(vert[x]), b = find(vert[alpha[x]]);
                    if (a != b) {
                        parent[a] = b;
                        --comps;
                    }
                }
            if (comps != 1) return;
            int nf = 0;
            std::vector<int> face = discover_faces(sigma, alpha, &nf);
            if (nf != n) return;
            ++counts[pattern_key(n, alpha, face, ident)];
            ++total;
            return;
        }
        int left = leaves - next_leaf;
        if (left > 0 && unmatched - 1 >= left - 1) {
            int leaf = hnl + next_leaf;
            alpha[h] = leaf;
            alpha[leaf] = h;
            ++next_leaf;
            --unmatched;
            rec(h + 1);
            ++unmatched;
            --next_leaf;
            alpha[h] = alpha[leaf] = -1;
        }
        if (unmatched - 2 >= left && (unmatched - 2 - left) % 2 == 0) {
            for (int x = h + 1; x < hnl; ++x)
                if (alpha[x] < 0) {
                    alpha[h] = x;
                    alpha[x] = h;
                    unmatched -= 2;
                    rec(h + 1);
                    unmatched += 2;
                    alpha[h] = alpha[x] = -1;
                }
        }
    };
    rec(0);
    Integer lf = factorial(leaves);
    for (const auto& [k, c] : counts) raw[k] = Integer(c) * lf;
    t->involutions = Integer(total) * lf;
    t->orbits = orbits_from_raw(n, n, raw);
    return t;
}

std::shared_ptr<CountingTable> build_bicolored_table(int g, int nb, int nw) {
    auto t = std::make_shared<CountingTable>();
    int n = nb + nw;
    int E = 2 * g - 1 + n;
    t->g = g;
    t->n = n;
    t->n_black = nb;
    t->bicolored = true;
    t->denominator = 2 * std::max(E, 1);
    if (g < 0 || nb < 1 || nw < 1 || E < 1) return t;
    int H = 2 * E;
    std::vector<int> sigma = block_rotation({H});
    std::vector<int> alpha(H, -1);
    std::unordered_map<Key, Integer> raw;
    long total = 0;
    std::function<void()> rec = [&]() {
        int h = 0;
        while (h < H && alpha[h] >= 0) ++h;
        if (h == H) {
            int nf = 0;
            std::vector<int> face = discover_faces(sigma, alpha, &nf);
            if (nf != n) return;
            std::vector<int> colour(n, -1);
            colour[0] = 0;
            bool changed = true, ok = true;
            while (changed && ok) {
                changed = false;
                for (int x = 0; x < H && ok; ++x) {
                    int a = face[x], b = face[alpha[x]];
                    if (a == b) ok = false;
                    else if (colour[a] >= 0 && colour[b] < 0) colour[b] = 1 - colour[a], changed = true;
                    else if (colour[b] >= 0 && colour[a] < 0) colour[a] = 1 - colour[b], changed = true;
                    else if (colour[a] >= 0 && colour[a] == colour[b]) ok = false;
                }
            }
            if (!ok) return;
            for (int black = 0; black < 2; ++black) {
                int cnt = static_cast<int>(std::count(colour.begin(), colour.end(), black));
                if (cnt != nb) continue;
                std::vector<int> relabel(n);
                int bi = 0, wi = nb;
                for (int f = 0; f < n; ++f) relabel[f] = colour[f] == black ? bi++ : wi++;
                raw[pattern_key(n, alpha, face, relabel)] += 1;
                ++total;
            }
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
    rec();
    t->involutions = total;
    t->orbits = orbits_from_raw(n, nb, raw);
    return t;
}

// Sum over distinct rearrangements of b[lo..hi) of f, times the number of
// permutations producing each arrangement.
template <typename F>
void for_each_arrangement(std::vector<long>& b, int lo, int hi, Integer& multiplicity, F&& f) {
    std::sort(b.begin() + lo, b.begin() + hi);
    std::map<long, int> m;
    for (int i = lo; i < hi; ++i) ++m[b[i]];
    for (auto [v, c] : m) multiplicity *= factorial(c);
    do {
        f();
    } while (std::next_permutation(b.begin() + lo, b.begin() + hi));
}

template <typename Builder>
std::shared_ptr<const CountingTable> cached(std::map<std::vector<int>, std::shared_ptr<const CountingTable>>& cache,
                                            std::mutex& mu, const std::vector<int>& key, Builder&& build) {
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    std::shared_ptr<const CountingTable> t = build();
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, t).first->second;
}

}  // namespace

Rational CountingTable::evaluate(const std::vector<long>& b) const {
    if (static_cast<int>(b.size()) != n) throw std::invalid_argument("perimeter vector has wrong length");
    for (long x : b)
        if (x <= 0) throw std::invalid_argument("perimeters must be positive");
    if (orbits.empty()) return 0;
    std::vector<long> perm(b);
    Integer mult = 1;
    std::vector<Count128> sums(orbits.size(), 0);
    auto accumulate = [&]() {
        for (size_t i = 0; i < orbits.size(); ++i) sums[i] += orbits[i].counter.count(perm);
    };
    if (bicolored) {
        Integer m_black = 1;
        std::sort(perm.begin(), perm.begin() + n_black);
        {
            std::map<long, int> m;
            for (int i = 0; i < n_black; ++i) ++m[perm[i]];
            for (auto [v, c] : m) m_black *= factorial(c);
        }
        do {
            Integer m_white = 1;
            for_each_arrangement(perm, n_black, n, m_white, accumulate);
            mult = m_black * m_white;
        } while (std::next_permutation(perm.begin(), perm.begin() + n_black));
    } else {
        for_each_arrangement(perm, 0, n, mult, accumulate);
    }
    Integer total = 0;
    for (size_t i = 0; i < orbits.size(); ++i) total += orbits[i].weight * to_integer(sums[i]);
    return Rational(total * mult) / Rational(denominator);
}

std::shared_ptr<const CountingTable> counting_table(int g, int n, const std::vector<int>& kappa) {
    static std::map<std::vector<int>, std::shared_ptr<const CountingTable>> cache;
    static std::mutex mu;
    std::vector<int> key{g, n};
    for (int k : sorted_desc(kappa)) key.push_back(k);
    return cached(cache, mu, key, [&] { return build_counting_table(g, n, kappa); });
}

std::shared_ptr<const CountingTable> bicolored_table(int g, int n_black, int n_white) {
    static std::map<std::vector<int>, std::shared_ptr<const CountingTable>> cache;
    static std::mutex mu;
    return cached(cache, mu, {g, n_black, n_white}, [&] { return build_bicolored_table(g, n_black, n_white); });
}

Rational counting_function(int g, int n, const std::vector<int>& kappa, const std::vector<long>& b) {
    if (static_cast<int>(b.size()) != n) throw std::invalid_argument("perimeter vector has wrong length");
    long s = std::accumulate(b.begin(), b.end(), 0L);
    if (s % 2 != 0) return 0;
    return counting_table(g, n, kappa)->evaluate(b);
}

Rational face_bicolored_counting(int g, int n_black, int n_white, const std::vector<long>& b_black,
                                 const std::vector<long>& b_white) {
    if (static_cast<int>(b_black.size()) != n_black || static_cast<int>(b_white.size()) != n_white)
        throw std::invalid_argument("perimeter vector has wrong length");
    long sb = std::accumulate(b_black.begin(), b_black.end(), 0L);
    long sw = std::accumulate(b_white.begin(), b_white.end(), 0L);
    if (sb != sw) return 0;
    std::vector<long> b(b_black);
    b.insert(b.end(), b_white.begin(), b_white.end());
    return bicolored_table(g, n_black, n_white)->evaluate(b);
}

namespace {

std::vector<std::vector<int>> partitions_of(int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxp) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(m, m);
    return out;
}

// Coefficient of m_rho in p_kappa: maps from parts of kappa to parts of rho
// with matching block sums.
Integer power_to_monomial(const std::vector<int>& kappa, const std::vector<int>& rho) {
    if (kappa.size() < rho.size()) return 0;
    std::map<std::pair<size_t, std::vector<int>>, Integer> memo;
    std::function<Integer(size_t, std::vector<int>)> rec = [&](size_t i, std::vector<int> caps) -> Integer {
        std::sort(caps.begin(), caps.end());
        if (i == kappa.size()) {
            for (int c : caps)
                if (c) return 0;
            return 1;
        }
        auto key = std::make_pair(i, caps);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Integer total = 0;
        for (size_t j = 0; j < caps.size(); ++j)
            if (caps[j] >= kappa[i]) {
                caps[j] -= kappa[i];
                total += rec(i + 1, caps);
                caps[j] += kappa[i];
            }
        memo.emplace(key, total);
        return total;
    };
    return rec(0, rho);
}

}  // namespace

Rational unicellular_class_count(int g, const std::vector<int>& kappa_in) {
    std::vector<int> kappa = sorted_desc(kappa_in);
    if (!euler_check(g, 1, kappa)) return 0;
    int twoE = std::accumulate(kappa.begin(), kappa.end(), 0);
    int E = twoE / 2;
    // Coefficient of m_rho * b^(E-1) on the right-hand side.
    auto rhs = [&](const std::vector<int>& rho) -> Rational {
        int l = static_cast<int>(rho.size());
        if (E - l + 1 < 0) return 0;
        Rational c(factorial(twoE - l), factorial(E - l + 1) * factorial(E - 1));
        c.canonicalize();
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, twoE - l);
        return c / Rational(p);
    };
    auto all = partitions_of(twoE);
    std::map<std::vector<int>, Rational> memo;
    std::function<Rational(const std::vector<int>&)> solve = [&](const std::vector<int>& rho) -> Rational {
        auto it = memo.find(rho);
        if (it != memo.end()) return it->second;
        Rational r = rhs(rho);
        for (const auto& k : all)
            if (k.size() > rho.size()) {
                Integer c = power_to_monomial(k, rho);
                if (c != 0) r -= Rational(c) * solve(k);
            }
        r /= Rational(power_to_monomial(rho, rho));
        memo.emplace(rho, r);
        return r;
    };
    // N^unlab_{g,1}(b) = solve(kappa) b^(E-1), and its top part is
    // |RG| (b/2)^(E-1)/(E-1)!.
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, E - 1);
    return solve(kappa) * Rational(p * factorial(E - 1));
}

Rational one_face_closed_form(int g, const std::vector<int>& kappa, long b) {
    if (b <= 0 || b % 2 != 0) return 0;
    if (!euler_check(g, 1, kappa)) return 0;
    int E = std::accumulate(kappa.begin(), kappa.end(), 0) / 2;
    return unicellular_class_count(g, kappa) * Rational(to_integer(binom128(b / 2 - 1, E - 1)));
}

}  // namespace mv
