#pragma once

#include <string>
#include <utility>
#include <vector>

#include "beurling/errors.hpp"
#include "beurling/graph.hpp"

namespace beurling {

/// Maximal N-disjoint set of fusion vertices: the balls B(m, N) over members m
/// are pairwise disjoint, and B(v, N) meets their union for every vertex v.
/// N is wide because hypothesis-driven radii can exceed any desk-scale
/// diameter; geometry saturates there but N still enters formulas numerically.
struct DisjointSet {
    GraphPtr graph;
    long long N = 0;
    std::vector<int> members; // in greedy selection order

    int count() const { return static_cast<int>(members.size()); }
};

namespace detail {

// Balls B(a,N), B(b,N) intersect iff dist(a,b) <= 2N: a geodesic midpoint
// realizes one direction, the triangle inequality the other.
inline void verify_maximal_disjoint(const DisjointSet& vn) {
    const Graph& g = *vn.graph;
    const int n = g.size();
    const double N = static_cast<double>(vn.N);
    std::vector<int> owner(n, -1);
    for (std::size_t m = 0; m < vn.members.size(); ++m) {
        for (int v : g.ball(vn.members[m], N)) {
            if (owner[v] >= 0)
                throw std::logic_error("disjoint set postcondition: balls of members " +
                                       std::to_string(vn.members[owner[v]]) + " and " +
                                       std::to_string(vn.members[m]) + " intersect");
            owner[v] = static_cast<int>(m);
        }
    }
    for (int v = 0; v < n; ++v) {
        bool meets = false;
        for (int u : g.ball(v, N))
            if (owner[u] >= 0) {
                meets = true;
                break;
            }
        if (!meets)
            throw std::logic_error("disjoint set postcondition: ball of vertex " +
                                   std::to_string(v) + " misses the union");
    }
}

} // namespace detail

/// Greedy construction: start with `start`; repeatedly pick, among vertices
/// whose N-ball misses all chosen N-balls, the one closest to `start`
/// (ties to the smallest index). For N = 0 the whole vertex set is returned.
inline DisjointSet maximal_disjoint_set(GraphPtr graph, long long N, int start) {
    const Graph& g = *graph;
    const int n = g.size();
    if (start < 0 || start >= n) throw argument_error("start vertex outside graph");
    if (N < 0) throw argument_error("N must be >= 0");

    DisjointSet vn;
    vn.graph = std::move(graph);
    vn.N = N;
    if (N == 0) {
        vn.members.resize(n);
        for (int v = 0; v < n; ++v) vn.members[v] = v;
        return vn;
    }

    std::vector<char> blocked(n, 0); // N-ball meets a chosen N-ball
    auto block_around = [&](int m) {
        const std::int32_t* row = g.dist_row(m);
        for (int v = 0; v < n; ++v)
            if (row[v] <= 2 * N) blocked[v] = 1;
    };

    vn.members.push_back(start);
    block_around(start);
    const std::int32_t* d0 = g.dist_row(start);
    for (;;) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (blocked[v]) continue;
            if (best < 0 || d0[v] < d0[best]) best = v; // scan order breaks ties by index
        }
        if (best < 0) break;
        vn.members.push_back(best);
        block_around(best);
    }
    detail::verify_maximal_disjoint(vn);
    return vn;
}

/// Min/max over vertices v of #{ members m : dist(m, v) <= n_prime }.
/// Requires n_prime >= 2N, which makes the balls a covering (min >= 1).
inline std::pair<int, int> covering_multiplicity(const DisjointSet& vn, double n_prime) {
    if (n_prime < 2.0 * static_cast<double>(vn.N))
        throw argument_error("covering radius must be >= 2N");
    const Graph& g = *vn.graph;
    const int n = g.size();
    const int r = g.effective_radius(n_prime);
    int lo = std::numeric_limits<int>::max(), hi = 0;
    for (int v = 0; v < n; ++v) {
        int cnt = 0;
        const std::int32_t* row = g.dist_row(v);
        for (int m : vn.members) cnt += (row[m] <= r);
        lo = std::min(lo, cnt);
        hi = std::max(hi, cnt);
    }
    return {lo, hi};
}

} // namespace beurling
