#pragma once

// Counting positive integer weights on a multigraph whose parallel edges are
// grouped into classes. A class joining u and v with k parallel edges and
// total weight s contributes binom(s-1, k-1) compositions; a loop contributes
// 2s to its vertex.

#include "mv/arith.hpp"

#include <vector>

namespace mv {

struct EdgeClass {
    int u;
    int v;
    int k;
};

using Count128 = __int128;

Integer to_integer(Count128 x);

class ClassCounter {
public:
    ClassCounter() = default;
    ClassCounter(int n, std::vector<EdgeClass> classes);

    // Number of weightings with vertex sums exactly b (b.size() == n).
    Count128 count(const std::vector<long>& b) const;
    int num_vertices() const { return n_; }
    const std::vector<EdgeClass>& classes() const { return cls_; }

private:
    Count128 dfs(int step, std::vector<long>& r) const;

    int n_ = 0;
    std::vector<EdgeClass> cls_;          // in elimination order
    std::vector<int> forced_;             // forcing vertex per step or -1
    std::vector<std::vector<int>> need_;  // need_[step][v], size steps+1
    std::vector<std::vector<int>> closes_;
};

// binom(n, k) for 0 <= k, n < 2^20 with a per-thread Pascal cache.
Count128 binom128(long n, int k);

}  // namespace mv
