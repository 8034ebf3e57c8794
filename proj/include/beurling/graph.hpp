#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "beurling/errors.hpp"
#include "beurling/rng.hpp"

namespace beurling {

/// Connected simple graph with the geodesic (hop-count) metric.
/// All-pairs distances are computed once at construction and stored densely;
/// the object is immutable afterwards and safe to share across threads.
class Graph {
public:
    Graph(std::vector<std::vector<int>> adjacency, std::string kind, std::string params,
          std::uint64_t seed = 0, int vertex_cap = kDefaultVertexCap)
        : n_(static_cast<int>(adjacency.size())),
          adj_(std::move(adjacency)),
          kind_(std::move(kind)),
          params_(std::move(params)),
          seed_(seed) {
        if (n_ < 1) throw argument_error("graph must have at least one vertex");
        if (n_ > vertex_cap) throw size_error("vertex count " + std::to_string(n_) +
                                              " exceeds cap " + std::to_string(vertex_cap));
        normalize_adjacency();
        compute_distances();
    }

    int size() const { return n_; }
    int diameter() const { return diam_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const std::string& kind() const { return kind_; }
    const std::string& params() const { return params_; }
    std::uint64_t seed() const { return seed_; }

    int dist(int a, int b) const { return dist_[static_cast<std::size_t>(a) * n_ + b]; }

    const std::int32_t* dist_row(int a) const { return dist_.data() + static_cast<std::size_t>(a) * n_; }

    /// Largest integer radius that matters for this graph: floor(radius),
    /// clamped to the diameter (distances are integers, balls saturate there).
    int effective_radius(double radius) const {
        if (!(radius >= 0.0)) throw argument_error("ball radius must be >= 0");
        return static_cast<int>(std::min(std::floor(radius), static_cast<double>(diam_)));
    }

    /// Closed ball B(center, r) = { v : dist(center, v) <= r }, sorted by index.
    /// Distances are integers, so a real radius acts through its floor.
    std::vector<int> ball(int center, double radius) const {
        check_vertex(center);
        const int r = effective_radius(radius);
        std::vector<int> out;
        const std::int32_t* row = dist_row(center);
        for (int v = 0; v < n_; ++v)
            if (row[v] <= r) out.push_back(v);
        return out;
    }

    int ball_size(int center, double radius) const {
        check_vertex(center);
        const int r = effective_radius(radius);
        const std::int32_t* row = dist_row(center);
        int cnt = 0;
        for (int v = 0; v < n_; ++v) cnt += (row[v] <= r);
        return cnt;
    }

    /// Cumulative ball sizes for one center: out[r] = |B(center, r)|, r = 0..diam.
    std::vector<int> ball_sizes_by_radius(int center) const {
        check_vertex(center);
        std::vector<int> out(static_cast<std::size_t>(diam_) + 1, 0);
        const std::int32_t* row = dist_row(center);
        for (int v = 0; v < n_; ++v) out[row[v]] += 1;
        for (std::size_t r = 1; r < out.size(); ++r) out[r] += out[r - 1];
        return out;
    }

    /// Edges as (i, j) with i < j, lexicographically sorted.
    std::vector<std::pair<int, int>> canonical_edges() const {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n_; ++i)
            for (int j : adj_[i])
                if (i < j) edges.emplace_back(i, j);
        std::sort(edges.begin(), edges.end());
        return edges;
    }

    static constexpr int kDefaultVertexCap = 10000;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw argument_error("vertex " + std::to_string(v) + " outside graph");
    }

    void normalize_adjacency() {
        for (int i = 0; i < n_; ++i) {
            auto& nb = adj_[i];
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
            for (int j : nb) {
                if (j == i) throw argument_error("self-loop at vertex " + std::to_string(i));
                if (j < 0 || j >= n_) throw argument_error("edge endpoint outside vertex set");
            }
        }
        // enforce symmetry
        for (int i = 0; i < n_; ++i)
            for (int j : adj_[i])
                if (!std::binary_search(adj_[j].begin(), adj_[j].end(), i))
                    throw argument_error("adjacency is not symmetric");
    }

    void compute_distances() {
        dist_.assign(static_cast<std::size_t>(n_) * n_, -1);
        std::vector<int> queue(n_);
        diam_ = 0;
        for (int s = 0; s < n_; ++s) {
            std::int32_t* row = dist_.data() + static_cast<std::size_t>(s) * n_;
            int head = 0, tail = 0;
            row[s] = 0;
            queue[tail++] = s;
            while (head < tail) {
                const int u = queue[head++];
                const std::int32_t du = row[u];
                for (int v : adj_[u]) {
                    if (row[v] < 0) {
                        row[v] = du + 1;
                        queue[tail++] = v;
                    }
                }
            }
            if (tail != n_) throw connectivity_error("graph is not connected");
            for (int v = 0; v < n_; ++v) diam_ = std::max(diam_, static_cast<int>(row[v]));
        }
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::int32_t> dist_;
    int diam_ = 0;
    std::string kind_;
    std::string params_;
    std::uint64_t seed_;
};

using GraphPtr = std::shared_ptr<const Graph>;

/// Lattice box {0..side-1}^d with edges between points at Euclidean distance 1.
/// The geodesic distance is the l1 distance between coordinate tuples.
inline GraphPtr build_lattice(int d, int side, int vertex_cap = Graph::kDefaultVertexCap) {
    if (d < 1) throw argument_error("lattice dimension must be >= 1");
    if (side < 2) throw argument_error("lattice side must be >= 2");
    std::int64_t n = 1;
    for (int j = 0; j < d; ++j) {
        n *= side;
        if (n > vertex_cap) throw size_error("lattice side^d exceeds vertex cap");
    }
    const int nn = static_cast<int>(n);
    std::vector<std::vector<int>> adj(nn);
    // index = sum_j coord_j * side^j
    std::vector<std::int64_t> stride(d, 1);
    for (int j = 1; j < d; ++j) stride[j] = stride[j - 1] * side;
    for (int v = 0; v < nn; ++v) {
        int rest = v;
        for (int j = 0; j < d; ++j) {
            const int c = rest % side;
            rest /= side;
            if (c + 1 < side) {
                const int u = v + static_cast<int>(stride[j]);
                adj[v].push_back(u);
                adj[u].push_back(v);
            }
        }
    }
    return std::make_shared<Graph>(std::move(adj), "lattice",
                                   "d=" + std::to_string(d) + ",side=" + std::to_string(side),
                                   0, vertex_cap);
}

inline GraphPtr build_path(int n, int vertex_cap = Graph::kDefaultVertexCap) {
    return build_lattice(1, n, vertex_cap);
}

/// Circulant graph on Z_n: i ~ j iff (i-j) mod n or (j-i) mod n is in jumps.
inline GraphPtr build_circulant(int n, std::vector<int> jumps, int vertex_cap = Graph::kDefaultVertexCap) {
    if (n < 3) throw argument_error("circulant graph needs n >= 3");
    if (jumps.empty()) throw argument_error("circulant jump set must be nonempty");
    std::sort(jumps.begin(), jumps.end());
    jumps.erase(std::unique(jumps.begin(), jumps.end()), jumps.end());
    for (int j : jumps)
        if (j < 1 || 2 * j > n) throw argument_error("jumps must lie in [1, n/2]");
    int g = n;
    for (int j : jumps) g = std::gcd(g, j);
    if (g != 1) throw connectivity_error("circulant graph disconnected: gcd(jumps, n) = " + std::to_string(g));
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j : jumps) {
            adj[i].push_back((i + j) % n);
            adj[i].push_back((i - j % n + n) % n);
        }
    std::string ps = "n=" + std::to_string(n) + ",jumps=";
    for (std::size_t k = 0; k < jumps.size(); ++k)
        ps += (k ? "|" : "") + std::to_string(jumps[k]);
    return std::make_shared<Graph>(std::move(adj), "circulant", ps, 0, vertex_cap);
}

inline GraphPtr build_cycle(int n, int vertex_cap = Graph::kDefaultVertexCap) {
    return build_circulant(n, {1}, vertex_cap);
}

/// Random geometric graph: n seeded uniform points in the unit square, edge iff
/// Euclidean distance <= radius. On disconnection the radius grows by 1.1x over
/// the same point set (at most 20 times), keeping the result a deterministic
/// function of (n, radius, seed).
inline GraphPtr build_random_geometric(int n, double radius, std::uint64_t seed,
                                       int vertex_cap = Graph::kDefaultVertexCap) {
    if (n < 2) throw argument_error("random geometric graph needs n >= 2");
    if (!(radius > 0.0)) throw argument_error("radius must be positive");
    std::mt19937_64 rng(seed);
    std::vector<double> xs(n), ys(n);
    for (int i = 0; i < n; ++i) {
        xs[i] = uniform01(rng);
        ys[i] = uniform01(rng);
    }
    double r = radius;
    for (int attempt = 0; attempt <= 20; ++attempt, r *= 1.1) {
        std::vector<std::vector<int>> adj(n);
        const double r2 = r * r;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const double dx = xs[i] - xs[j], dy = ys[i] - ys[j];
                if (dx * dx + dy * dy <= r2) {
                    adj[i].push_back(j);
                    adj[j].push_back(i);
                }
            }
        // quick connectivity probe before paying for all-pairs BFS
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int v : adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    ++cnt;
                    stack.push_back(v);
                }
        }
        if (cnt == n) {
            return std::make_shared<Graph>(std::move(adj), "rgg",
                                           "n=" + std::to_string(n) + ",radius=" + std::to_string(radius),
                                           seed, vertex_cap);
        }
    }
    throw generation_error("random geometric graph still disconnected after 20 radius bumps");
}

} // namespace beurling
