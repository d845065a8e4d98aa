#include "mv/class_count.hpp"

#include <algorithm>
#include <stdexcept>

namespace mv {

Integer to_integer(Count128 x) {
    bool neg = x < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-x) : static_cast<unsigned __int128>(x);
    unsigned long hi = static_cast<unsigned long>(u >> 64);
    unsigned long lo = static_cast<unsigned long>(u);
    Integer r = hi;
    r <<= 64;
    r += lo;
    return neg ? Integer(-r) : r;
}

Count128 binom128(long n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k == 0 || k == n) return 1;
    if (k == 1) return n;
    thread_local std::vector<std::vector<Count128>> rows;  // rows[n][k] for k <= kmax
    constexpr int kmax = 32;
    if (k > kmax) {
        Count128 r = 1;
        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    }
    while (static_cast<long>(rows.size()) <= n) {
        long m = static_cast<long>(rows.size());
        std::vector<Count128> row(kmax + 1, 0);
        row[0] = 1;
        if (m > 0)
            for (int j = 1; j <= kmax; ++j) row[j] = rows[m - 1][j - 1] + rows[m - 1][j];
        rows.push_back(std::move(row));
    }
    return rows[n][k];
}

ClassCounter::ClassCounter(int n, std::vector<EdgeClass> classes) : n_(n) {
    for (auto& c : classes) {
        if (c.u > c.v) std::swap(c.u, c.v);
        if (c.k <= 0 || c.u < 0 || c.v >= n) throw std::invalid_argument("bad edge class");
    }
    int m = static_cast<int>(classes.size());
    std::vector<int> open(n, 0);
    for (const auto& c : classes) {
        ++open[c.u];
        if (c.v != c.u) ++open[c.v];
    }
    std::vector<char> used(m, 0);
    std::vector<char> closed(n, 0);
    closes_.assign(m + 1, {});
    // Vertices with no class at all must have zero perimeter.
    for (int v = 0; v < n; ++v)
        if (open[v] == 0) {
            closes_[0].push_back(v);
            closed[v] = 1;
        }
    auto incident = [&](int v) {
        std::vector<int> r;
        for (int i = 0; i < m; ++i)
            if (!used[i] && (classes[i].u == v || classes[i].v == v)) r.push_back(i);
        return r;
    };
    for (int step = 0; step < m; ++step) {
        int pick = -1, forcer = -1;
        for (int v = 0; v < n && pick < 0; ++v)
            if (open[v] == 1) {
                pick = incident(v).front();
                forcer = v;
            }
        if (pick < 0) {
            int best = -1;
            for (int v = 0; v < n; ++v)
                if (open[v] >= 2 && (best < 0 || open[v] < open[best])) best = v;
            // Prefer the class whose other endpoint is most constrained.
            int bestc = -1, bestscore = 1 << 30;
            for (int i : incident(best)) {
                int o = classes[i].u == best ? classes[i].v : classes[i].u;
                int score = o == best ? 1 << 20 : open[o];
                if (score < bestscore) {
                    bestscore = score;
                    bestc = i;
                }
            }
            pick = bestc;
        }
        used[pick] = 1;
        const auto& c = classes[pick];
        cls_.push_back(c);
        forced_.push_back(forcer);
        --open[c.u];
        if (c.v != c.u) --open[c.v];
        for (int v : {c.u, c.v})
            if (open[v] == 0 && !closed[v]) {
                closed[v] = 1;
                closes_[step + 1].push_back(v);
            }
    }
    need_.assign(m + 1, std::vector<int>(n, 0));
    for (int step = m - 1; step >= 0; --step) {
        need_[step] = need_[step + 1];
        const auto& c = cls_[step];
        if (c.u == c.v) need_[step][c.u] += 2 * c.k;
        else {
            need_[step][c.u] += c.k;
            need_[step][c.v] += c.k;
        }
    }
}

Count128 ClassCounter::count(const std::vector<long>& b) const {
    if (static_cast<int>(b.size()) != n_) throw std::invalid_argument("perimeter vector has wrong length");
    std::vector<long> r(b);
    for (int v = 0; v < n_; ++v)
        if (r[v] < need_[0][v]) return 0;
    for (int v : closes_[0])
        if (r[v] != 0) return 0;
    return dfs(0, r);
}

Count128 ClassCounter::dfs(int step, std::vector<long>& r) const {
    if (step == static_cast<int>(cls_.size())) return 1;
    const auto& c = cls_[step];
    const auto& nx = need_[step + 1];
    int a = c.u == c.v ? 2 : 1;
    auto feasible = [&]() {
        if (r[c.u] < nx[c.u] || r[c.v] < nx[c.v]) return false;
        for (int v : closes_[step + 1])
            if (r[v] != 0) return false;
        return true;
    };
    if (forced_[step] >= 0) {
        long rx = r[forced_[step]];
        if (rx % a != 0) return 0;
        long s = rx / a;
        if (s < c.k) return 0;
        r[c.u] -= s;
        r[c.v] -= s;  // loops: u == v, subtracted twice
        Count128 res = 0;
        if (feasible()) res = binom128(s - 1, c.k - 1) * dfs(step + 1, r);
        r[c.u] += s;
        r[c.v] += s;
        return res;
    }
    long smax = (r[c.u] - nx[c.u]) / a;
    if (c.u != c.v) smax = std::min(smax, r[c.v] - nx[c.v]);
    Count128 total = 0;
    for (long s = c.k; s <= smax; ++s) {
        r[c.u] -= s;
        r[c.v] -= s;
        if (feasible()) total += binom128(s - 1, c.k - 1) * dfs(step + 1, r);
        r[c.u] += s;
        r[c.v] += s;
    }
    return total;
}

}  // namespace mv
