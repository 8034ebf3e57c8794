#pragma once

#include <cmath>
#include <iostream>
#include <optional>
#include <vector>

#include "beurling/disjoint.hpp"
#include "beurling/graph.hpp"

namespace beurling {

/// Geometry summary of a graph's counting measure: the doubling constant,
/// the polynomial-growth exponent/constant pair (dimension, density), and the
/// analogous pair for the fusion-vertex counting bound (strong_*).
/// On a finite graph the minimal exponent is ill-posed; dimension is the
/// smallest grid value whose density stays under a cap, or a generator
/// override when the family's dimension is known.
struct GrowthStats {
    double doubling_constant = 1.0;
    double dimension = 0.0;
    double density = 1.0;
    double strong_dimension = 0.0;
    double strong_density = 1.0;
    int diam = 0;
};

struct FitOptions {
    double density_cap = 16.0;
    double grid_step = 0.05;
    std::optional<double> dimension_override;
    std::optional<double> strong_dimension_override;
    std::vector<int> strong_radii = {1, 2, 4, 8}; // intersected with [1, diam/4]; N = 0 always probed
    int disjoint_start = 0;
    bool warn = true;
};

/// Exact sup over centers and real r > 0 of |B(c, 2r)| / |B(c, r)|.
/// Distances are integers, so the sup is attained at half-integer breakpoints
/// r = m/2: the ratio there is |B(c, m)| / |B(c, floor(m/2))|.
inline double doubling_constant(const Graph& g) {
    double best = 1.0;
    const int top = std::max(1, 2 * g.diameter());
    for (int c = 0; c < g.size(); ++c) {
        const std::vector<int> sizes = g.ball_sizes_by_radius(c);
        auto at = [&](int r) { return sizes[std::min<std::size_t>(r, sizes.size() - 1)]; };
        for (int m = 1; m <= top; ++m) {
            const double ratio = static_cast<double>(at(m)) / at(m / 2);
            best = std::max(best, ratio);
        }
    }
    return best;
}

namespace detail {

// Largest ratio count(r) / (scale(r) + 1)^dim over all centers and integer radii.
template <typename CountFn, typename ScaleFn>
double density_at(const Graph& g, double dim, int rmax, CountFn&& count, ScaleFn&& scale) {
    double worst = 0.0;
    for (int c = 0; c < g.size(); ++c)
        for (int r = 0; r <= rmax; ++r) {
            const double cnt = count(c, r);
            if (cnt <= 0.0) continue;
            worst = std::max(worst, cnt / std::pow(scale(r) + 1.0, dim));
        }
    return worst;
}

template <typename DensityFn>
std::pair<double, double> grid_fit(DensityFn&& density_of, double grid_top, const FitOptions& opt) {
    double cap = opt.density_cap;
    for (;;) {
        const int steps = static_cast<int>(std::ceil(grid_top / opt.grid_step + 1e-9));
        for (int k = 0; k <= steps; ++k) {
            const double d = std::min(k * opt.grid_step, grid_top);
            const double dens = density_of(d);
            if (dens <= cap) return {d, dens};
        }
        cap *= 2.0;
        if (opt.warn)
            std::cerr << "growth fit: density cap raised to " << cap << "\n";
    }
}

} // namespace detail

/// Fit (dimension, density) and (strong_dimension, strong_density).
/// Plain growth bounds ball sizes by density*(r+1)^dimension; strong growth
/// bounds, for every probed maximal N-disjoint set, the number of fusion
/// vertices within (N+1)*R of any vertex by strong_density*(R+1)^strong_dimension.
inline GrowthStats fit_growth(GraphPtr graph, const FitOptions& opt = {}) {
    const Graph& g = *graph;
    GrowthStats out;
    out.diam = g.diameter();
    out.doubling_constant = doubling_constant(g);
    const double grid_top = std::max(0.0, std::log2(out.doubling_constant));

    // plain ball counts, cached per center
    std::vector<std::vector<int>> sizes(g.size());
    for (int c = 0; c < g.size(); ++c) sizes[c] = g.ball_sizes_by_radius(c);
    auto plain_count = [&](int c, int r) { return static_cast<double>(sizes[c][r]); };
    auto plain_density = [&](double d) {
        return detail::density_at(g, d, g.diameter(), plain_count, [](int r) { return static_cast<double>(r); });
    };

    if (opt.dimension_override) {
        out.dimension = *opt.dimension_override;
        out.density = plain_density(out.dimension);
    } else {
        std::tie(out.dimension, out.density) = detail::grid_fit(plain_density, grid_top, opt);
    }

    // strong growth: fusion-vertex counts for one greedy V_N per probed N,
    // plus N = 0 (V_0 = V), which reduces to plain growth.
    struct Probe {
        int N;
        std::vector<std::vector<int>> counts; // counts[c][s] = #{members within s}
    };
    std::vector<Probe> probes;
    auto member_counts = [&](const DisjointSet& vn) {
        std::vector<std::vector<int>> counts(g.size());
        for (int c = 0; c < g.size(); ++c) {
            std::vector<int> cum(static_cast<std::size_t>(g.diameter()) + 1, 0);
            const std::int32_t* row = g.dist_row(c);
            for (int m : vn.members) cum[row[m]] += 1;
            for (std::size_t s = 1; s < cum.size(); ++s) cum[s] += cum[s - 1];
            counts[c] = std::move(cum);
        }
        return counts;
    };
    {
        DisjointSet v0;
        v0.graph = graph;
        v0.N = 0;
        v0.members.resize(g.size());
        for (int v = 0; v < g.size(); ++v) v0.members[v] = v;
        probes.push_back({0, member_counts(v0)});
    }
    for (int N : opt.strong_radii) {
        if (N < 1 || 4 * N > g.diameter()) continue;
        probes.push_back({N, member_counts(maximal_disjoint_set(graph, N, opt.disjoint_start))});
    }

    auto strong_density = [&](double d) {
        double worst = 0.0;
        for (const Probe& pr : probes) {
            auto count = [&](int c, int s) { return static_cast<double>(pr.counts[c][s]); };
            auto scale = [&](int s) { return static_cast<double>(s) / (pr.N + 1); };
            worst = std::max(worst, detail::density_at(g, d, g.diameter(), count, scale));
        }
        return worst;
    };

    if (opt.strong_dimension_override) {
        out.strong_dimension = *opt.strong_dimension_override;
        out.strong_density = strong_density(out.strong_dimension);
    } else {
        std::tie(out.strong_dimension, out.strong_density) = detail::grid_fit(strong_density, grid_top, opt);
    }
    return out;
}

/// Ahlfors regularity probe at exponent d0: returns (B3, B4) =
/// (min, max) over centers and integer radii of |B(c, r)| / (r+1)^d0.
inline std::pair<double, double> ahlfors_check(const Graph& g, double d0) {
    if (!(d0 > 0.0)) throw argument_error("Ahlfors exponent must be positive");
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (int c = 0; c < g.size(); ++c) {
        const std::vector<int> sizes = g.ball_sizes_by_radius(c);
        for (int r = 0; r <= g.diameter(); ++r) {
            const double v = sizes[r] / std::pow(r + 1.0, d0);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    return {lo, hi};
}

} // namespace beurling
