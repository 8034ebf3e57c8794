#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "beurling/errors.hpp"
#include "beurling/graph.hpp"
#include "beurling/report.hpp"

namespace beurling {

/// Positive vertex weight. Values are validated at construction (finite,
/// > 1e-300) and immutable afterwards.
class Weight {
public:
    Weight(GraphPtr graph, std::vector<double> values, std::string kind, std::string params)
        : g_(std::move(graph)), w_(std::move(values)), kind_(std::move(kind)), params_(std::move(params)) {
        if (static_cast<int>(w_.size()) != g_->size())
            throw argument_error("weight size does not match graph");
        for (double v : w_)
            if (!(v > 1e-300) || !std::isfinite(v))
                throw argument_error("weight values must be positive, finite and above 1e-300");
    }

    const Graph& graph() const { return *g_; }
    GraphPtr graph_ptr() const { return g_; }
    double operator()(int v) const { return w_[v]; }
    const std::vector<double>& values() const { return w_; }
    const std::string& kind() const { return kind_; }
    const std::string& params() const { return params_; }

    /// w(B(center, r)) = sum of values over the closed ball.
    double ball_mass(int center, double radius) const {
        const int r = g_->effective_radius(radius);
        const std::int32_t* row = g_->dist_row(center);
        double s = 0.0;
        for (int v = 0; v < g_->size(); ++v)
            if (row[v] <= r) s += w_[v];
        return s;
    }

    /// Cumulative ball masses for one center: out[r] = w(B(center, r)).
    std::vector<double> ball_masses_by_radius(int center) const {
        std::vector<double> out(static_cast<std::size_t>(g_->diameter()) + 1, 0.0);
        const std::int32_t* row = g_->dist_row(center);
        for (int v = 0; v < g_->size(); ++v) out[row[v]] += w_[v];
        for (std::size_t r = 1; r < out.size(); ++r) out[r] += out[r - 1];
        return out;
    }

private:
    GraphPtr g_;
    std::vector<double> w_;
    std::string kind_;
    std::string params_;
};

inline Weight trivial_weight(GraphPtr g) {
    return Weight(std::move(g), std::vector<double>(g ? g->size() : 0, 1.0), "trivial", "");
}

/// w(v) = (dist(v, base) + 1)^theta, theta > -1.
inline Weight polynomial_weight(GraphPtr g, int base, double theta) {
    if (!(theta > -1.0)) throw argument_error("polynomial weight needs theta > -1");
    std::vector<double> w(g->size());
    const std::int32_t* row = g->dist_row(base);
    for (int v = 0; v < g->size(); ++v) w[v] = std::pow(row[v] + 1.0, theta);
    return Weight(std::move(g), std::move(w),
                  "polynomial", "base=" + std::to_string(base) + ",theta=" + std::to_string(theta));
}

inline Weight explicit_weight(GraphPtr g, std::vector<double> values) {
    return Weight(std::move(g), std::move(values), "explicit", "");
}

/// ||c||_{p,w} = (sum |c(v)|^p w(v))^{1/p}.
inline double weighted_norm(std::span<const double> c, double p, const Weight& w) {
    if (!(p >= 1.0)) throw argument_error("exponent p must be >= 1");
    double s = 0.0;
    for (std::size_t v = 0; v < c.size(); ++v) s += std::pow(std::abs(c[v]), p) * w(static_cast<int>(v));
    return std::pow(s, 1.0 / p);
}

struct ApReport {
    double p = 1.0;
    double bound = 1.0;
    int witness_center = 0;
    int witness_radius = 0;
};

/// Muckenhoupt bound A_p(w): exact maximum over all balls of
///   (avg_B w) * (avg_B w^{-1/(p-1)})^{p-1}      for p > 1,
///   (avg_B w) / (min_B w)                        for p = 1.
/// Every ball arises at an integer radius, so centers x radii 0..diam is exhaustive.
inline ApReport ap_bound(const Weight& w, double p) {
    if (!(p >= 1.0)) throw argument_error("exponent p must be >= 1");
    const Graph& g = w.graph();
    const int n = g.size();
    const int diam = g.diameter();
    ApReport rep;
    rep.p = p;
    rep.bound = 0.0;
    const bool p1 = (p == 1.0);
    std::vector<double> sum_w(diam + 1), sum_dual(diam + 1), min_w(diam + 1);
    std::vector<int> cnt(diam + 1);
    for (int c = 0; c < n; ++c) {
        std::fill(sum_w.begin(), sum_w.end(), 0.0);
        std::fill(cnt.begin(), cnt.end(), 0);
        if (p1)
            std::fill(min_w.begin(), min_w.end(), std::numeric_limits<double>::infinity());
        else
            std::fill(sum_dual.begin(), sum_dual.end(), 0.0);
        const std::int32_t* row = g.dist_row(c);
        for (int v = 0; v < n; ++v) {
            const int r = row[v];
            const double wv = w(v);
            sum_w[r] += wv;
            cnt[r] += 1;
            if (p1)
                min_w[r] = std::min(min_w[r], wv);
            else
                sum_dual[r] += std::pow(wv, -1.0 / (p - 1.0));
        }
        double sw = 0.0, sd = 0.0, mn = std::numeric_limits<double>::infinity();
        int sc = 0;
        for (int r = 0; r <= diam; ++r) {
            sw += sum_w[r];
            sc += cnt[r];
            double value;
            if (p1) {
                mn = std::min(mn, min_w[r]);
                value = sw / sc / mn;
            } else {
                sd += sum_dual[r];
                value = (sw / sc) * std::pow(sd / sc, p - 1.0);
            }
            if (value > rep.bound) {
                rep.bound = value;
                rep.witness_center = c;
                rep.witness_radius = r;
            }
        }
    }
    return rep;
}

/// Largest over balls of (avg_B |c|)^p (avg_B w) / ((1/|B|) sum_B |c|^p w);
/// by Hoelder this never exceeds A_p(w).
inline double ap_char_ratio(const Weight& w, double p, std::span<const double> c) {
    if (!(p >= 1.0)) throw argument_error("exponent p must be >= 1");
    const Graph& g = w.graph();
    const int n = g.size();
    if (static_cast<int>(c.size()) != n) throw argument_error("vector size does not match graph");
    bool nonzero = false;
    for (double x : c) nonzero |= (x != 0.0);
    if (!nonzero) throw argument_error("vector must be nonzero");
    const int diam = g.diameter();
    double best = 0.0;
    std::vector<double> sum_c(diam + 1), sum_cpw(diam + 1), sum_w(diam + 1);
    std::vector<int> cnt(diam + 1);
    for (int ctr = 0; ctr < n; ++ctr) {
        std::fill(sum_c.begin(), sum_c.end(), 0.0);
        std::fill(sum_cpw.begin(), sum_cpw.end(), 0.0);
        std::fill(sum_w.begin(), sum_w.end(), 0.0);
        std::fill(cnt.begin(), cnt.end(), 0);
        const std::int32_t* row = g.dist_row(ctr);
        for (int v = 0; v < n; ++v) {
            const int r = row[v];
            const double av = std::abs(c[v]);
            sum_c[r] += av;
            sum_cpw[r] += std::pow(av, p) * w(v);
            sum_w[r] += w(v);
            cnt[r] += 1;
        }
        double sc = 0.0, scpw = 0.0, sw = 0.0;
        int m = 0;
        for (int r = 0; r <= diam; ++r) {
            sc += sum_c[r];
            scpw += sum_cpw[r];
            sw += sum_w[r];
            m += cnt[r];
            if (scpw <= 0.0) continue;
            const double lhs = std::pow(sc / m, p) * (sw / m);
            best = std::max(best, lhs / (scpw / m));
        }
    }
    return best;
}

/// Checks w(B(c, 2^j r)) <= D(mu)^{jp} A_p(w) w(B(c, r)) over all centers,
/// half-integer r and j >= 1 with 2^j r <= diam. A failure would signal an
/// implementation bug, not an interesting instance.
inline VerificationReport weighted_doubling_check(const Weight& w, double p, double doubling_const,
                                                  const std::string& graph_id = "",
                                                  const std::string& weight_id = "") {
    const Graph& g = w.graph();
    const int diam = g.diameter();
    VerificationReport rep;
    rep.check_id = "weight-doubling/" + graph_id + "/" + weight_id + "/p" + (p == static_cast<long long>(p) ? std::to_string(static_cast<long long>(p)) : std::to_string(p));
    rep.inequality_id = "weight-doubling";
    rep.instance = {graph_id, "", weight_id, p, -1};
    const double ap = ap_bound(w, p).bound;
    double worst = 0.0; // max of lhs/rhs; <= 1 means pass
    for (int c = 0; c < g.size(); ++c) {
        const std::vector<double> masses = w.ball_masses_by_radius(c);
        auto mass_at = [&](long long r) {
            return masses[static_cast<std::size_t>(std::min<long long>(r, diam))];
        };
        for (int m = 1; m <= 2 * diam; ++m) {
            const double small = masses[std::min(m / 2, diam)];
            double factor = std::pow(doubling_const, p);
            for (int j = 1;; ++j) {
                const long long radius = static_cast<long long>(m) << (j - 1); // 2^j * (m/2)
                if (radius > diam) break;
                worst = std::max(worst, mass_at(radius) / (factor * ap * small));
                factor *= std::pow(doubling_const, p);
            }
        }
    }
    finish_fixed_constant(rep, worst, 1.0);
    return rep;
}

} // namespace beurling
