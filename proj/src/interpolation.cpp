#include "mv/interpolation.hpp"

#include "mv/counting.hpp"
#include "mv/partitions.hpp"
#include "mv/ribbon.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

namespace mv {

int WallPartition::arity() const {
    int n = static_cast<int>(I0.size());
    for (const auto& [a, b] : pairs) n += static_cast<int>(a.size() + b.size());
    return n;
}

bool WallPartition::contains(const std::vector<long>& b) const {
    for (const auto& [a, c] : pairs) {
        long s = 0;
        for (int i : a) s += b.at(i);
        for (int i : c) s -= b.at(i);
        if (s != 0) return false;
    }
    return true;
}

std::string WallPartition::to_string() const {
    auto set = [](const std::vector<int>& v) {
        std::string s = "{";
        for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i] + 1);
        return s + "}";
    };
    std::string s = "I0=" + set(I0);
    for (const auto& [a, b] : pairs) s += " " + set(a) + "=" + set(b);
    return s;
}

std::vector<std::vector<int>> simplex_points(int dims, int order) {
    std::vector<std::vector<int>> out;
    std::vector<int> m(dims, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == dims) {
            out.push_back(m);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            m[i] = x;
            rec(i + 1, left - x);
        }
        m[i] = 0;
    };
    rec(0, order);
    return out;
}

namespace {

std::vector<long> plan_point(const LatticePlan& plan, const std::vector<int>& m) {
    std::vector<long> b = plan.base;
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t v = 0; v < b.size(); ++v) b[v] += 2L * m[i] * plan.dirs[i][v];
    return b;
}

std::vector<Rational> evaluate_parallel(const Sampler& f, const std::vector<std::vector<long>>& pts) {
    std::vector<Rational> out(pts.size());
    std::atomic<size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto work = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= pts.size()) return;
            try {
                out[i] = f(pts[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
                next = pts.size();
            }
        }
    };
    unsigned nt = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(pts.size())));
    std::vector<std::thread> threads;
    for (unsigned t = 1; t < nt; ++t) threads.emplace_back(work);
    work();
    for (auto& t : threads) t.join();
    if (err) std::rethrow_exception(err);
    return out;
}

Rational forward_difference(const std::map<std::vector<int>, Rational>& vals, const std::vector<int>& j) {
    Rational total = 0;
    std::vector<int> k(j.size(), 0);
    int jsum = std::accumulate(j.begin(), j.end(), 0);
    for (;;) {
        Integer c = 1;
        for (size_t i = 0; i < j.size(); ++i) c *= binomial(j[i], k[i]);
        int ksum = std::accumulate(k.begin(), k.end(), 0);
        const Rational& p = vals.at(k);
        if ((jsum - ksum) % 2) total -= Rational(c) * p;
        else total += Rational(c) * p;
        size_t i = 0;
        while (i < k.size() && k[i] == j[i]) k[i++] = 0;
        if (i == k.size()) break;
        ++k[i];
    }
    return total;
}

bool same_signature(const std::vector<int>& sig, const std::vector<long>& b) { return cell_signature(b) == sig; }

LatticePlan scaled_plan(const std::vector<long>& witness, std::vector<std::vector<long>> dirs,
                        std::vector<EvenPolynomial> coords, int D) {
    auto sig = cell_signature(witness);
    auto pts = simplex_points(static_cast<int>(dirs.size()), D + 1);
    for (long lambda = 1; lambda < 100000; lambda += 2) {
        LatticePlan plan;
        plan.base = witness;
        for (long& x : plan.base) x *= lambda;
        plan.dirs = dirs;
        plan.coords = coords;
        bool ok = true;
        for (const auto& m : pts) {
            auto b = plan_point(plan, m);
            if (std::any_of(b.begin(), b.end(), [](long x) { return x <= 0; }) || !same_signature(sig, b)) {
                ok = false;
                break;
            }
        }
        if (ok) return plan;
    }
    throw std::runtime_error("no sampling lattice fits inside the cell of the witness");
}

}  // namespace

EvenPolynomial fit_top_degree(const Sampler& f, const LatticePlan& plan, int D) {
    int k = static_cast<int>(plan.dirs.size());
    int n = static_cast<int>(plan.base.size());
    auto ms = simplex_points(k, D + 1);
    std::vector<std::vector<long>> pts;
    for (const auto& m : ms) {
        pts.push_back(plan_point(plan, m));
        for (long x : pts.back())
            if (x <= 0) throw std::invalid_argument("sample point with non-positive coordinate");
    }
    auto vals = evaluate_parallel(f, pts);
    std::map<std::vector<int>, Rational> table;
    for (size_t i = 0; i < ms.size(); ++i) table.emplace(ms[i], vals[i]);
    EvenPolynomial top = EvenPolynomial::zero(n);
    for (const auto& j : ms) {
        int js = std::accumulate(j.begin(), j.end(), 0);
        if (js < D) continue;
        Rational d = forward_difference(table, j);
        if (js == D + 1) {
            if (d != 0) throw std::runtime_error("cell/coset violation: order " + std::to_string(D + 1) + " difference is " + to_string(d));
            continue;
        }
        if (d == 0) continue;
        EvenPolynomial term = EvenPolynomial::constant(n, d);
        for (int i = 0; i < k; ++i)
            for (int e = 0; e < j[i]; ++e) term = term * plan.coords[i];
        Integer fac = 1;
        for (int x : j) fac *= factorial(x);
        top += term * (Rational(1) / Rational(fac));
    }
    return top.restrict_top_degree(D);
}

LatticePlan super_increasing_plan(int n, int K) {
    auto to_b = [&](const std::vector<long>& c) {
        std::vector<long> b(n);
        long tail = 0;
        for (int i = n - 1; i >= 0; --i) {
            b[i] = c[i] + K * tail;
            tail += b[i];
        }
        return b;
    };
    LatticePlan plan;
    std::vector<long> c0(n, 1);
    plan.base = to_b(c0);
    if (std::accumulate(plan.base.begin(), plan.base.end(), 0L) % 2) {
        c0[0] = 2;
        plan.base = to_b(c0);
    }
    for (int i = 0; i < n; ++i) {
        std::vector<long> e(n, 0);
        e[i] = 1;
        plan.dirs.push_back(to_b(e));
        EvenPolynomial form = EvenPolynomial::variable(n, i) * Rational(1, 2);
        for (int j = i + 1; j < n; ++j) form += EvenPolynomial::variable(n, j) * Rational(-K, 2);
        plan.coords.push_back(form);
    }
    return plan;
}

LatticePlan witness_plan(const std::vector<long>& witness, int D) {
    int n = static_cast<int>(witness.size());
    std::vector<std::vector<long>> dirs;
    std::vector<EvenPolynomial> coords;
    for (int i = 0; i < n; ++i) {
        std::vector<long> e(n, 0);
        e[i] = 1;
        dirs.push_back(e);
        coords.push_back(EvenPolynomial::variable(n, i) * Rational(1, 2));
    }
    return scaled_plan(witness, dirs, coords, D);
}

std::vector<long> generic_wall_witness(const WallPartition& wall) {
    const int n = wall.arity();
    auto dep = wall_dependent_labels(wall);
    std::vector<char> is_dep(n, 0);
    for (int d : dep) is_dep[d] = 1;
    // Coefficients of each label on the free labels after eliminating dependents.
    std::vector<std::vector<int>> form(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        if (!is_dep[i]) form[i][i] = 1;
    for (size_t s = 0; s < wall.pairs.size(); ++s) {
        const auto& [a, b] = wall.pairs[s];
        for (int x : a) form[dep[s]][x] += 1;
        for (size_t t = 1; t < b.size(); ++t) form[dep[s]][b[t]] -= 1;
    }
    // Relations sum_I - sum_J that do not vanish identically on the wall.
    std::vector<std::vector<int>> relations;
    std::vector<int> c(n, -1);
    while (true) {
        bool nonzero = false;
        for (int v : c) nonzero |= v != 0;
        if (nonzero) {
            bool trivial = true;
            for (int j = 0; j < n && trivial; ++j) {
                int coef = 0;
                for (int i = 0; i < n; ++i) coef += c[i] * form[i][j];
                trivial = coef == 0;
            }
            if (!trivial) relations.push_back(c);
        }
        int i = 0;
        while (i < n && c[i] == 1) c[i++] = -1;
        if (i == n) break;
        ++c[i];
    }
    std::mt19937_64 rng(20240611);
    for (long bound = 4;; bound *= 2) {
        std::uniform_int_distribution<long> dist(1, bound);
        for (int attempt = 0; attempt < 2000; ++attempt) {
            std::vector<long> b(n, 0);
            for (int i = 0; i < n; ++i)
                if (!is_dep[i]) b[i] = dist(rng);
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) {
                if (!is_dep[i]) continue;
                long v = 0;
                for (int j = 0; j < n; ++j) v += form[i][j] * b[j];
                b[i] = v;
                ok = v > 0;
            }
            if (!ok || std::accumulate(b.begin(), b.end(), 0L) % 2) continue;
            for (const auto& r : relations) {
                long v = 0;
                for (int i = 0; i < n; ++i) v += r[i] * b[i];
                if (v == 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) return b;
        }
    }
}

std::vector<int> wall_dependent_labels(const WallPartition& wall) {
    std::vector<int> dep;
    for (const auto& [a, b] : wall.pairs) {
        if (a.empty() || b.empty()) throw std::invalid_argument("wall sides must be nonempty");
        dep.push_back(b.front());
    }
    return dep;
}

LatticePlan wall_plan(const WallPartition& wall, const std::vector<long>& witness, int D) {
    int n = static_cast<int>(witness.size());
    if (wall.arity() != n) throw std::invalid_argument("wall does not partition the labels");
    if (!wall.contains(witness)) throw std::invalid_argument("witness does not lie on the wall");
    auto dep = wall_dependent_labels(wall);
    std::vector<std::vector<long>> dirs;
    std::vector<EvenPolynomial> coords;
    for (int i = 0; i < n; ++i) {
        if (std::find(dep.begin(), dep.end(), i) != dep.end()) continue;
        std::vector<long> e(n, 0);
        e[i] = 1;
        for (size_t s = 0; s < wall.pairs.size(); ++s) {
            const auto& [a, b] = wall.pairs[s];
            if (std::find(a.begin(), a.end(), i) != a.end()) e[dep[s]] += 1;
            if (std::find(b.begin(), b.end(), i) != b.end()) e[dep[s]] -= 1;
        }
        dirs.push_back(e);
        coords.push_back(EvenPolynomial::variable(n, i) * Rational(1, 2));
    }
    return scaled_plan(witness, dirs, coords, D);
}

namespace {

int kontsevich_degree(int g, const std::vector<int>& kappa) { return 2 * g - 2 + static_cast<int>(kappa.size()); }

void require_even_exponents(const EvenPolynomial& p) {
    if (!p.has_only_even_exponents()) throw std::logic_error("top-degree part has odd exponents: " + p.to_string());
}

}  // namespace

EvenPolynomial extract_top_degree_V(int g, int n, const std::vector<int>& kappa, const std::vector<long>& witness) {
    if (static_cast<int>(witness.size()) != n) throw std::invalid_argument("witness has wrong length");
    if (std::accumulate(witness.begin(), witness.end(), 0L) % 2) throw std::invalid_argument("witness has odd perimeter sum");
    if (!off_walls(witness)) throw std::invalid_argument("witness lies on a wall");
    if (!euler_check(g, n, kappa)) return EvenPolynomial::zero(n);
    int D = kontsevich_degree(g, kappa);
    auto table = counting_table(g, n, kappa);
    Sampler f = [&](const std::vector<long>& b) { return table->evaluate(b); };
    EvenPolynomial top = fit_top_degree(f, witness_plan(witness, D), D);
    require_even_exponents(top);
    return top;
}

EvenPolynomial interpolate_kontsevich_unlabeled(int g, int n, const std::vector<int>& kappa) {
    if (!euler_check(g, n, kappa)) return EvenPolynomial::zero(n);
    int D = kontsevich_degree(g, kappa);
    auto table = counting_table(g, n, kappa);
    Sampler f = [&](const std::vector<long>& b) { return table->evaluate(b); };
    EvenPolynomial top = fit_top_degree(f, super_increasing_plan(n), D);
    require_even_exponents(top);
    return top;
}

EvenPolynomial extract_top_degree_V_on_wall(int g, int n, const std::vector<int>& kappa, const WallPartition& wall,
                                            const std::vector<long>& witness) {
    if (static_cast<int>(witness.size()) != n) throw std::invalid_argument("witness has wrong length");
    if (std::accumulate(witness.begin(), witness.end(), 0L) % 2) throw std::invalid_argument("witness has odd perimeter sum");
    if (!euler_check(g, n, kappa)) return EvenPolynomial::zero(n);
    int D = kontsevich_degree(g, kappa);
    auto table = counting_table(g, n, kappa);
    Sampler f = [&](const std::vector<long>& b) { return table->evaluate(b); };
    return fit_top_degree(f, wall_plan(wall, witness, D), D);
}

EvenPolynomial bicolored_top_degree(int g, int n_black, int n_white) {
    static std::map<std::vector<int>, EvenPolynomial> cache;
    static std::mutex mu;
    std::vector<int> key{g, n_black, n_white};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    int n = n_black + n_white;
    const int K = 2;
    // Free labels, most significant first; the first white label is dependent.
    std::vector<int> free;
    for (int i = 0; i < n; ++i)
        if (i != n_black) free.push_back(i);
    int k = static_cast<int>(free.size());
    auto to_b = [&](const std::vector<long>& c) {
        std::vector<long> b(n, 0);
        long tail = 0;
        for (int t = k - 1; t >= 0; --t) {
            b[free[t]] = c[t] + K * tail;
            tail += b[free[t]];
        }
        long dep = 0;
        for (int i = 0; i < n; ++i) {
            if (i == n_black) continue;
            dep += i < n_black ? b[i] : -b[i];
        }
        b[n_black] = dep;
        return b;
    };
    LatticePlan plan;
    plan.base = to_b(std::vector<long>(k, 1));
    for (int t = 0; t < k; ++t) {
        std::vector<long> e(k, 0);
        e[t] = 1;
        plan.dirs.push_back(to_b(e));
        EvenPolynomial form = EvenPolynomial::variable(n, free[t]) * Rational(1, 2);
        for (int u = t + 1; u < k; ++u) form += EvenPolynomial::variable(n, free[u]) * Rational(-K, 2);
        plan.coords.push_back(form);
    }
    auto table = bicolored_table(g, n_black, n_white);
    Sampler f = [&](const std::vector<long>& b) { return table->evaluate(b); };
    EvenPolynomial top = fit_top_degree(f, plan, 2 * g);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, top);
    return top;
}

}  // namespace mv
