#include "mv/kontsevich.hpp"

#include "kontsevich_tables.hpp"
#include "mv/counting.hpp"
#include "mv/partitions.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mv {

KontsevichSource parse_source(const std::string& s) {
    if (s == "table") return KontsevichSource::Table;
    if (s == "interpolate") return KontsevichSource::Interpolate;
    if (s == "auto") return KontsevichSource::Auto;
    throw std::invalid_argument("unknown Kontsevich source '" + s + "'");
}

std::string to_string(KontsevichSource s) {
    switch (s) {
        case KontsevichSource::Table: return "table";
        case KontsevichSource::Interpolate: return "interpolate";
        case KontsevichSource::Auto: return "auto";
        case KontsevichSource::ClosedForm: return "closed-form";
    }
    return "auto";
}

nlohmann::ordered_json KontsevichEntry::to_json() const {
    nlohmann::ordered_json j;
    j["g"] = g;
    j["n"] = n;
    j["kappa"] = format_parts(kappa);
    j["source"] = to_string(source);
    j["labeled"] = labeled.to_json();
    j["unlabeled"] = unlabeled.to_json();
    return j;
}

int TableKey::half_edges() const { return std::accumulate(kappa.begin(), kappa.end(), 0); }

std::string TableKey::to_string() const {
    return "N_{" + std::to_string(g) + "," + std::to_string(n) + "}^{[" + format_parts(kappa) + "]}";
}

namespace {

using Key = std::tuple<int, int, std::vector<int>>;

struct ParsedTable {
    std::vector<TableKey> keys;
    std::map<Key, EvenPolynomial> labeled;
    std::vector<TableErratum> errata;
};

EvenPolynomial parse_terms(int n, const std::string& terms) {
    EvenPolynomial p = EvenPolynomial::zero(n);
    std::istringstream in(terms);
    std::string tok;
    while (in >> tok) {
        auto colon = tok.find(':');
        std::vector<int> lambda;
        std::string ls = tok.substr(0, colon);
        std::stringstream lss(ls);
        std::string part;
        while (std::getline(lss, part, ','))
            if (!part.empty()) lambda.push_back(std::stoi(part));
        p += monomial_symmetric(n, lambda, parse_rational(tok.substr(colon + 1)));
    }
    return p;
}

const ParsedTable& parsed_table() {
    static const ParsedTable t = [] {
        ParsedTable r;
        for (const auto& row : detail::raw_kontsevich_table()) {
            TableKey k{row.table, row.g, row.n, sorted_desc(parse_parts(row.kappa))};
            r.keys.push_back(k);
            r.labeled.emplace(Key{k.g, k.n, k.kappa}, parse_terms(k.n, row.terms));
        }
        for (const auto& row : detail::raw_kontsevich_errata()) {
            Key key{row.g, row.n, sorted_desc(parse_parts(row.kappa))};
            auto& entry = r.labeled.at(key);
            TableErratum e;
            for (const auto& k : r.keys)
                if (k.g == row.g && k.n == row.n && k.kappa == std::get<2>(key)) e.key = k;
            e.printed = entry;
            e.corrected = parse_terms(row.n, row.corrected_terms);
            e.reason = row.reason;
            entry = e.corrected;
            r.errata.push_back(e);
        }
        return r;
    }();
    return t;
}

EvenPolynomial interpolated_unlabeled(int g, int n, const std::vector<int>& kappa) {
    static std::map<Key, EvenPolynomial> cache;
    static std::mutex mu;
    Key key{g, n, kappa};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    EvenPolynomial p;
    // Optional on-disk cache of interpolated entries.
    std::filesystem::path file;
    if (const char* dir = std::getenv("MV_CACHE_DIR"); dir && *dir) {
        std::string name = "N_" + std::to_string(g) + "_" + std::to_string(n);
        for (int k : kappa) name += "_" + std::to_string(k);
        file = std::filesystem::path(dir) / (name + ".json");
    }
    bool loaded = false;
    if (!file.empty() && std::filesystem::exists(file)) {
        try {
            std::ifstream in(file);
            p = EvenPolynomial::from_json(nlohmann::json::parse(in));
            loaded = p.arity() == n;
        } catch (const std::exception&) {
            loaded = false;
        }
    }
    if (!loaded) {
        p = interpolate_kontsevich_unlabeled(g, n, kappa);
        if (!file.empty()) {
            std::error_code ec;
            std::filesystem::create_directories(file.parent_path(), ec);
            std::ofstream out(file.string() + ".tmp");
            out << p.to_json().dump();
            out.close();
            if (out) std::filesystem::rename(file.string() + ".tmp", file, ec);
        }
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, p);
    return p;
}

}  // namespace

const std::vector<TableKey>& table_entries() { return parsed_table().keys; }

const std::vector<TableErratum>& table_errata() { return parsed_table().errata; }

bool has_table_entry(int g, int n, const std::vector<int>& kappa) {
    return parsed_table().labeled.count(Key{g, n, sorted_desc(kappa)}) > 0;
}

KontsevichEntry kontsevich_polynomial(int g, int n, const std::vector<int>& kappa_in, KontsevichSource source) {
    std::vector<int> kappa = sorted_desc(kappa_in);
    if (g < 0 || n < 1 || !euler_check(g, n, kappa))
        throw std::invalid_argument("no ribbon graphs with g=" + std::to_string(g) + ", n=" + std::to_string(n) +
                                    ", kappa=[" + format_parts(kappa) + "]");
    KontsevichEntry e;
    e.g = g;
    e.n = n;
    e.kappa = kappa;
    Rational aut(aut_order(kappa));
    const auto& table = parsed_table().labeled;
    auto it = table.find(Key{g, n, kappa});
    if (source != KontsevichSource::Interpolate && it != table.end()) {
        e.source = KontsevichSource::Table;
        e.labeled = it->second;
        e.unlabeled = it->second * (1 / aut);
        return e;
    }
    if (source != KontsevichSource::Interpolate && n == 1) {
        // Leading term of |RG| * binom(b/2 - 1, E - 1).
        int E = std::accumulate(kappa.begin(), kappa.end(), 0) / 2;
        Integer den = factorial(E - 1);
        den <<= (E - 1);
        Rational c = unicellular_class_count(g, kappa) / Rational(den);
        e.source = KontsevichSource::ClosedForm;
        e.unlabeled = EvenPolynomial::monomial(1, {E - 1}, c);
        e.labeled = e.unlabeled * aut;
        return e;
    }
    if (source == KontsevichSource::Table)
        throw Unavailable("Kontsevich polynomial N_{" + std::to_string(g) + "," + std::to_string(n) + "}^{[" +
                          format_parts(kappa) + "]} is not tabulated");
    e.source = KontsevichSource::Interpolate;
    e.unlabeled = interpolated_unlabeled(g, n, kappa);
    e.labeled = e.unlabeled * aut;
    return e;
}

StringCheck string_recursion_check(int g, int n, const std::vector<int>& kappa_in, KontsevichSource source) {
    if (n < 1) throw std::invalid_argument("string recursion needs n >= 1");
    std::vector<int> kappa = sorted_desc(kappa_in);
    StringCheck c;
    c.g = g;
    c.n = n;
    c.kappa = kappa;
    auto top = kontsevich_polynomial(g, n + 1, kappa, source).labeled;
    std::vector<EvenPolynomial> forms;
    for (int i = 0; i < n; ++i) forms.push_back(EvenPolynomial::variable(n, i));
    forms.push_back(EvenPolynomial::zero(n));
    c.lhs = top.substitute(forms);
    c.rhs = EvenPolynomial::zero(n);
    for (size_t i = 0; i < kappa.size(); ++i) {
        if (kappa[i] < 3) continue;
        auto lowered = kappa;
        lowered[i] -= 2;
        c.rhs += kontsevich_polynomial(g, n, lowered, source).labeled * Rational(kappa[i] - 2);
    }
    c.holds = c.lhs == c.rhs;
    return c;
}

std::vector<TableKey> string_pairs_in_table() {
    std::vector<TableKey> out;
    for (const auto& k : table_entries()) {
        if (k.n < 2) continue;
        bool ok = false;
        bool all = true;
        for (size_t i = 0; i < k.kappa.size(); ++i) {
            if (k.kappa[i] < 3) continue;
            auto lowered = k.kappa;
            lowered[i] -= 2;
            ok = true;
            if (!has_table_entry(k.g, k.n - 1, lowered)) all = false;
        }
        if (ok && all) out.push_back({k.table, k.g, k.n - 1, k.kappa});
    }
    return out;
}

namespace {

// Restriction of a wall to a subset of labels (ascending), relabeled locally.
struct SubWall {
    std::vector<int> labels;  // local -> global
    WallPartition wall;
};

int local_index(const std::vector<int>& labels, int global) {
    return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), global) - labels.begin());
}

std::vector<long> restrict_witness(const std::vector<long>& witness, const std::vector<int>& labels) {
    std::vector<long> w;
    for (int l : labels) w.push_back(witness[l]);
    return w;
}

// Face-bicolored top-degree part for the pairs in one block, as a polynomial
// in the global variables.
EvenPolynomial bicolored_block(int g, int n, const std::vector<int>& black, const std::vector<int>& white,
                               const std::vector<std::pair<std::vector<int>, std::vector<int>>>& block_pairs,
                               const std::vector<long>& witness) {
    int nb = static_cast<int>(black.size());
    int nw = static_cast<int>(white.size());
    std::vector<int> target;
    for (int x : black) target.push_back(x);
    for (int x : white) target.push_back(x);
    EvenPolynomial local;
    if (block_pairs.size() == 1) {
        local = bicolored_top_degree(g, nb, nw);
    } else {
        // The block sits on a wall of the bicolored function: fit there.
        WallPartition w;
        auto pos = [&](int global) {
            return static_cast<int>(std::find(target.begin(), target.end(), global) - target.begin());
        };
        for (const auto& [bl, wh] : block_pairs) {
            std::vector<int> a, b;
            for (int x : bl) a.push_back(pos(x));
            for (int x : wh) b.push_back(pos(x));
            w.pairs.emplace_back(a, b);
        }
        std::vector<long> wit;
        for (int x : target) wit.push_back(witness[x]);
        auto table = bicolored_table(g, nb, nw);
        Sampler f = [&](const std::vector<long>& b) { return table->evaluate(b); };
        local = fit_top_degree(f, wall_plan(w, wit, 2 * g), 2 * g);
    }
    return local.remap(target, default_variables(n));
}

EvenPolynomial wall_correction_impl(int g, int n, const std::vector<int>& kappa, const WallPartition& wall,
                                    const std::vector<long>& witness, KontsevichSource source) {
    const int p = static_cast<int>(wall.pairs.size());
    const int l = static_cast<int>(kappa.size());
    if (p == 0) return kontsevich_polynomial(g, n, kappa, source).unlabeled;
    if (wall.I0.empty() && l < 3)
        throw std::invalid_argument("wall recursion needs at least three vertices when I0 is empty");

    // Forms expressing each global variable on the wall (dependents eliminated).
    std::vector<EvenPolynomial> forms;
    for (int i = 0; i < n; ++i) forms.push_back(EvenPolynomial::variable(n, i));
    for (const auto& [a, b] : wall.pairs) {
        int dep = b.front();
        EvenPolynomial f = EvenPolynomial::zero(n);
        for (int x : a) f += EvenPolynomial::variable(n, x);
        for (size_t t = 1; t < b.size(); ++t) f = f - EvenPolynomial::variable(n, b[t]);
        forms[dep] = f;
    }

    Rational aut_k(aut_order(kappa));
    EvenPolynomial correction = EvenPolynomial::zero(n);

    for (int m = 1; m <= p; ++m) {
        Integer m_fact = factorial(m);
        // block[s] in 0..m, blocks 1..m nonempty
        std::vector<int> block(p, 0);
        std::function<void(int)> assign = [&](int s) {
            if (s < p) {
                for (int b = 0; b <= m; ++b) {
                    block[s] = b;
                    assign(s + 1);
                }
                return;
            }
            std::vector<int> hits(m + 1, 0);
            for (int b : block) ++hits[b];
            for (int b = 1; b <= m; ++b)
                if (!hits[b]) return;
            int a0 = hits[0];

            // Vertex-side labels: I0 plus both sides of pairs in A0.
            std::vector<int> labels0 = wall.I0;
            for (int s2 = 0; s2 < p; ++s2)
                if (block[s2] == 0) {
                    labels0.insert(labels0.end(), wall.pairs[s2].first.begin(), wall.pairs[s2].first.end());
                    labels0.insert(labels0.end(), wall.pairs[s2].second.begin(), wall.pairs[s2].second.end());
                }
            std::sort(labels0.begin(), labels0.end());
            int n0 = static_cast<int>(labels0.size());
            if (n0 == 0) return;

            for (int eps = 0; eps < (1 << p); ++eps) {
                // Bicolored blocks.
                std::vector<std::vector<int>> black(m + 1), white(m + 1);
                std::vector<std::vector<std::pair<std::vector<int>, std::vector<int>>>> bpairs(m + 1);
                for (int s2 = 0; s2 < p; ++s2) {
                    int b = block[s2];
                    if (b == 0) continue;
                    bool e = (eps >> s2) & 1;
                    const auto& blk = e ? wall.pairs[s2].second : wall.pairs[s2].first;
                    const auto& wht = e ? wall.pairs[s2].first : wall.pairs[s2].second;
                    black[b].insert(black[b].end(), blk.begin(), blk.end());
                    white[b].insert(white[b].end(), wht.begin(), wht.end());
                    bpairs[b].emplace_back(blk, wht);
                }
                // Genus distribution g_0..g_m.
                std::vector<int> gs(m + 1, 0);
                std::function<void(int, int)> genus = [&](int idx, int left) {
                    if (idx == m) {
                        gs[m] = left;
                        // Maps a: {1..m} -> parts of kappa.
                        std::vector<int> a(m + 1, 0);
                        std::function<void(int)> amap = [&](int j) {
                            if (j <= m) {
                                for (int i = 0; i < l; ++i) {
                                    a[j] = i;
                                    amap(j + 1);
                                }
                                return;
                            }
                            std::vector<int> kappa0 = kappa;
                            std::vector<int> preimage(l, 0);
                            Rational C = 1;
                            for (int j2 = 1; j2 <= m; ++j2) {
                                int nb = static_cast<int>(black[j2].size());
                                int nw = static_cast<int>(white[j2].size());
                                kappa0[a[j2]] -= 4 * gs[j2] + 2 * nb + 2 * nw;
                                ++preimage[a[j2]];
                                C *= Rational(2 * gs[j2] - 1 + nb + nw);
                            }
                            for (int i = 0; i < l; ++i) {
                                if (kappa0[i] <= 0) return;
                                C *= Rational(kappa0[i]);
                                C *= Rational(double_factorial(kappa[i] - 2), double_factorial(kappa[i] - 2 * preimage[i]));
                            }
                            if (!euler_check(gs[0], n0, kappa0)) return;
                            Rational coeff = C * Rational(aut_order(kappa0)) / aut_k;
                            Integer den = m_fact;
                            den <<= (m + a0);
                            coeff /= Rational(den);

                            // 2 V^{kappa0}_{g0,n0}(b_0)
                            SubWall sub;
                            sub.labels = labels0;
                            for (int x : wall.I0) sub.wall.I0.push_back(local_index(labels0, x));
                            for (int s2 = 0; s2 < p; ++s2) {
                                if (block[s2] != 0) continue;
                                std::vector<int> l0, l1;
                                for (int x : wall.pairs[s2].first) l0.push_back(local_index(labels0, x));
                                for (int x : wall.pairs[s2].second) l1.push_back(local_index(labels0, x));
                                sub.wall.pairs.emplace_back(l0, l1);
                            }
                            std::sort(sub.wall.I0.begin(), sub.wall.I0.end());
                            std::vector<int> k0 = sorted_desc(kappa0);
                            EvenPolynomial v0;
                            if (sub.wall.pairs.empty()) {
                                v0 = kontsevich_polynomial(gs[0], n0, k0, source).unlabeled;
                            } else if (sub.wall.I0.empty() && k0.size() < 3) {
                                v0 = extract_top_degree_V_on_wall(gs[0], n0, k0, sub.wall,
                                                                  restrict_witness(witness, labels0));
                            } else {
                                v0 = wall_correction_impl(gs[0], n0, k0, sub.wall, restrict_witness(witness, labels0),
                                                          source);
                            }
                            EvenPolynomial term = v0.remap(labels0, default_variables(n)) * coeff;
                            for (int j2 = 1; j2 <= m; ++j2)
                                term = term * bicolored_block(gs[j2], n, black[j2], white[j2], bpairs[j2], witness);
                            correction += term;
                        };
                        amap(1);
                        return;
                    }
                    for (int v = 0; v <= left; ++v) {
                        gs[idx] = v;
                        genus(idx + 1, left - v);
                    }
                };
                genus(0, g);
            }
        };
        assign(0);
    }

    EvenPolynomial N = kontsevich_polynomial(g, n, kappa, source).unlabeled;
    return (N - correction).substitute(forms);
}

}  // namespace

EvenPolynomial wall_correction(int g, int n, const std::vector<int>& kappa, const WallPartition& wall,
                               const std::vector<long>& witness, KontsevichSource source) {
    if (static_cast<int>(witness.size()) != n || wall.arity() != n)
        throw std::invalid_argument("wall and witness must cover all " + std::to_string(n) + " labels");
    if (!wall.contains(witness)) throw std::invalid_argument("witness does not lie on the wall");
    return wall_correction_impl(g, n, sorted_desc(kappa), wall, witness, source);
}

std::vector<IntersectionNumber> intersection_number_report(const KontsevichEntry& entry) {
    int M = 0;
    for (int k : entry.kappa) M += (k - 1) / 2 - 1;  // kappa = 2i+1 contributes i-1
    int shift = 5 * entry.g - 6 + 2 * entry.n - 2 * M;
    std::vector<IntersectionNumber> out;
    for (const auto& [e, c] : entry.unlabeled.terms()) {
        IntersectionNumber x;
        Rational v = c;
        for (int ex : e) {
            x.d.push_back(ex / 2);
            v *= Rational(factorial(ex / 2));
        }
        Integer pw = 1;
        if (shift >= 0) {
            pw <<= shift;
            v *= Rational(pw);
        } else {
            pw <<= -shift;
            v /= Rational(pw);
        }
        x.value = v;
        out.push_back(x);
    }
    return out;
}

}  // namespace mv
