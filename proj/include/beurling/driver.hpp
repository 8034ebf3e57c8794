#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "beurling/checks.hpp"
#include "beurling/growth.hpp"
#include "beurling/inversion.hpp"
#include "beurling/serialize.hpp"
#include "beurling/stability.hpp"

namespace beurling {

struct GraphSpec {
    std::string id;
    std::string kind; // lattice | circulant | rgg
    int d = 1;
    int side = 0;
    int n = 0;
    std::vector<int> jumps = {1};
    double radius = 0.0;
    std::uint64_t seed = 0;
    std::optional<double> dim_override;
    std::optional<double> strong_dim_override;
};

struct WeightSpec {
    std::string id;
    std::string kind = "trivial"; // trivial | polynomial
    double theta = 0.0;
    int base = 0;
};

struct MatrixSpec {
    std::string id;
    std::string kind = "identity"; // identity | damping | random_decay
    double kappa = 0.5;
    double decay = 3.0;
    std::uint64_t seed = 11;
};

struct RunConfig {
    std::vector<GraphSpec> graphs;
    std::vector<WeightSpec> weights;
    std::vector<MatrixSpec> matrices;
    std::vector<std::pair<double, double>> r_alpha; // (r, alpha); r may be infinity
    std::vector<double> exponents;                  // p values
    std::vector<std::pair<double, std::string>> transfer_targets; // (q, weight id)
    std::vector<int> fusion_radii = {1, 4};
    std::vector<int> truncation_bandwidths = {2, 4, 8};
    int batch = 200;
    std::uint64_t seed = 20240901;
    double density_cap = 16.0;
    std::string output_dir = "out";
};

/// The default instance matrix of the verification suite.
inline RunConfig default_verify_config() {
    RunConfig cfg;
    cfg.graphs = {
        {"P33", "lattice", 1, 33, 0, {}, 0.0, 0, 1.0, 1.0},
        {"C128", "circulant", 1, 0, 128, {1}, 0.0, 0, 1.0, 1.0},
        {"C256", "circulant", 1, 0, 256, {1}, 0.0, 0, 1.0, 1.0},
        {"lat8x8", "lattice", 2, 8, 0, {}, 0.0, 0, 2.0, 2.0},
        {"rgg100", "rgg", 0, 0, 100, {}, 0.2, 7, std::nullopt, std::nullopt},
    };
    cfg.weights = {
        {"w0", "trivial", 0.0, 0},
        {"wt+0.30", "polynomial", 0.3, 0},
        {"wt-0.40", "polynomial", -0.4, 0},
    };
    cfg.matrices = {
        {"I", "identity", 0.0, 0.0, 0},
        {"Ak0.50", "damping", 0.5, 0.0, 0},
        {"Ak0.80", "damping", 0.8, 0.0, 0},
        {"rdec", "random_decay", 0.0, 3.0, 11},
    };
    cfg.r_alpha = {{1.0, 2.0}, {2.0, 2.0}, {std::numeric_limits<double>::infinity(), 2.0}};
    cfg.exponents = {1.0, 1.5, 2.0};
    cfg.transfer_targets = {{1.0, "w0"}, {2.0, "wt+0.30"}};
    return cfg;
}

inline GraphPtr build_graph(const GraphSpec& s) {
    if (s.kind == "lattice") return build_lattice(s.d, s.side);
    if (s.kind == "circulant") return build_circulant(s.n, s.jumps);
    if (s.kind == "rgg") return build_random_geometric(s.n, s.radius, s.seed);
    throw argument_error("unknown graph kind '" + s.kind + "'");
}

inline Weight build_weight(GraphPtr g, const WeightSpec& s) {
    if (s.kind == "trivial") return trivial_weight(std::move(g));
    if (s.kind == "polynomial") return polynomial_weight(std::move(g), s.base, s.theta);
    throw argument_error("unknown weight kind '" + s.kind + "'");
}

inline LocalizedMatrix build_matrix(GraphPtr g, const MatrixSpec& s) {
    if (s.kind == "identity") return identity_matrix(std::move(g));
    if (s.kind == "damping") {
        const bool linear = (g->kind() == "circulant" && g->params().find(",jumps=1") != std::string::npos &&
                             g->params().find('|') == std::string::npos) ||
                            (g->kind() == "lattice" && g->params().find("d=1,") == 0);
        return linear ? successor_damping(std::move(g), s.kappa)
                      : neighbor_averaging_damping(std::move(g), s.kappa);
    }
    if (s.kind == "random_decay") return random_decay_matrix(std::move(g), s.decay, s.seed);
    throw argument_error("unknown matrix kind '" + s.kind + "'");
}

namespace detail {

inline std::string fmt_num(double v) {
    if (std::isinf(v)) return "inf";
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace detail

// --- config (de)serialization ------------------------------------------------

inline ordered_json config_to_json(const RunConfig& cfg) {
    ordered_json j;
    for (const auto& g : cfg.graphs) {
        ordered_json e{{"id", g.id}, {"kind", g.kind}};
        if (g.kind == "lattice") {
            e["d"] = g.d;
            e["side"] = g.side;
        } else if (g.kind == "circulant") {
            e["n"] = g.n;
            e["jumps"] = g.jumps;
        } else {
            e["n"] = g.n;
            e["radius"] = g.radius;
            e["seed"] = g.seed;
        }
        if (g.dim_override) e["dim"] = *g.dim_override;
        if (g.strong_dim_override) e["strong_dim"] = *g.strong_dim_override;
        j["graphs"].push_back(e);
    }
    for (const auto& w : cfg.weights) {
        ordered_json e{{"id", w.id}, {"kind", w.kind}};
        if (w.kind == "polynomial") {
            e["theta"] = w.theta;
            e["base"] = w.base;
        }
        j["weights"].push_back(e);
    }
    for (const auto& m : cfg.matrices) {
        ordered_json e{{"id", m.id}, {"kind", m.kind}};
        if (m.kind == "damping") e["kappa"] = m.kappa;
        if (m.kind == "random_decay") {
            e["decay"] = m.decay;
            e["seed"] = m.seed;
        }
        j["matrices"].push_back(e);
    }
    for (const auto& [r, a] : cfg.r_alpha)
        j["r_alpha"].push_back({std::isinf(r) ? ordered_json("inf") : ordered_json(r), a});
    j["p"] = cfg.exponents;
    for (const auto& [q, wid] : cfg.transfer_targets) j["transfer"].push_back({q, wid});
    j["fusion_radii"] = cfg.fusion_radii;
    j["truncation_bandwidths"] = cfg.truncation_bandwidths;
    j["batch"] = cfg.batch;
    j["seed"] = cfg.seed;
    j["density_cap"] = cfg.density_cap;
    // output_dir is deliberately not echoed: the bundle must be a function of
    // the instance matrix and seeds alone
    return j;
}

inline RunConfig config_from_json(const ordered_json& j) {
    RunConfig cfg;
    if (j.contains("graphs")) {
        cfg.graphs.clear();
        for (const auto& e : j.at("graphs")) {
            GraphSpec s;
            s.id = e.at("id").get<std::string>();
            s.kind = e.at("kind").get<std::string>();
            s.d = e.value("d", 1);
            s.side = e.value("side", 0);
            s.n = e.value("n", 0);
            if (e.contains("jumps")) s.jumps = e.at("jumps").get<std::vector<int>>();
            s.radius = e.value("radius", 0.0);
            s.seed = e.value("seed", std::uint64_t{0});
            if (e.contains("dim")) s.dim_override = e.at("dim").get<double>();
            if (e.contains("strong_dim")) s.strong_dim_override = e.at("strong_dim").get<double>();
            cfg.graphs.push_back(std::move(s));
        }
    }
    if (j.contains("weights")) {
        cfg.weights.clear();
        for (const auto& e : j.at("weights")) {
            WeightSpec s;
            s.id = e.at("id").get<std::string>();
            s.kind = e.at("kind").get<std::string>();
            s.theta = e.value("theta", 0.0);
            s.base = e.value("base", 0);
            cfg.weights.push_back(std::move(s));
        }
    }
    if (j.contains("matrices")) {
        cfg.matrices.clear();
        for (const auto& e : j.at("matrices")) {
            MatrixSpec s;
            s.id = e.at("id").get<std::string>();
            s.kind = e.at("kind").get<std::string>();
            s.kappa = e.value("kappa", 0.5);
            s.decay = e.value("decay", 3.0);
            s.seed = e.value("seed", std::uint64_t{11});
            cfg.matrices.push_back(std::move(s));
        }
    }
    if (j.contains("r_alpha")) {
        cfg.r_alpha.clear();
        for (const auto& e : j.at("r_alpha")) {
            const double r = e.at(0).is_string() ? std::numeric_limits<double>::infinity()
                                                 : e.at(0).get<double>();
            cfg.r_alpha.emplace_back(r, e.at(1).get<double>());
        }
    }
    if (j.contains("p")) cfg.exponents = j.at("p").get<std::vector<double>>();
    if (j.contains("transfer")) {
        cfg.transfer_targets.clear();
        for (const auto& e : j.at("transfer"))
            cfg.transfer_targets.emplace_back(e.at(0).get<double>(), e.at(1).get<std::string>());
    }
    if (j.contains("fusion_radii")) cfg.fusion_radii = j.at("fusion_radii").get<std::vector<int>>();
    if (j.contains("truncation_bandwidths"))
        cfg.truncation_bandwidths = j.at("truncation_bandwidths").get<std::vector<int>>();
    cfg.batch = j.value("batch", 200);
    cfg.seed = j.value("seed", std::uint64_t{20240901});
    cfg.density_cap = j.value("density_cap", 16.0);
    cfg.output_dir = j.value("output_dir", std::string("out"));
    return cfg;
}

// --- the verification driver ---------------------------------------------------

struct VerifySummary {
    std::vector<VerificationReport> reports;
    std::vector<std::string> skipped; // "check_id: reason"
    int passed = 0;
    int failed = 0;

    bool all_pass() const { return failed == 0; }
};

namespace detail {

struct InstanceCache {
    GraphPtr graph;
    GrowthStats stats;
    std::map<std::string, Weight> weights;
    std::map<std::string, LocalizedMatrix> matrices;
    std::map<std::string, std::optional<InvertResult>> inverses; // nullopt = singular
    std::map<std::string, double> ap;                            // key: weight|p
    std::map<std::string, NormInterval> inv_opnorm;              // key: matrix|weight|p
    std::map<std::string, StabilityEstimate> beta;               // key: matrix|weight|p
};

inline std::string key2(const std::string& a, double b) { return a + "|" + fmt_num(b); }
inline std::string key3(const std::string& a, const std::string& b, double c) {
    return a + "|" + b + "|" + fmt_num(c);
}

} // namespace detail

/// Runs the full inequality suite over the configured instance matrix.
/// Combinations outside a check's hypothesis region are listed as skipped;
/// dispatched checks must pass.
inline VerifySummary run_verify(const RunConfig& cfg, std::ostream* log = nullptr) {
    VerifySummary sum;
    auto note = [&](const std::string& s) {
        if (log) (*log) << s << "\n";
    };
    auto add = [&](VerificationReport rep) {
        (rep.pass ? sum.passed : sum.failed)++;
        if (!rep.pass && log) (*log) << "FAIL " << rep.check_id << "\n";
        sum.reports.push_back(std::move(rep));
    };
    auto skip = [&](const std::string& id, const std::string& why) {
        sum.skipped.push_back(id + ": " + why);
    };

    const OpNormOptions opn_opt{.seed = cfg.seed};
    for (const GraphSpec& gs : cfg.graphs) {
        detail::InstanceCache cache;
        cache.graph = build_graph(gs);
        FitOptions fit;
        fit.density_cap = cfg.density_cap;
        fit.dimension_override = gs.dim_override;
        fit.strong_dimension_override = gs.strong_dim_override;
        cache.stats = fit_growth(cache.graph, fit);
        note("graph " + gs.id + ": n=" + std::to_string(cache.graph->size()) +
             " diam=" + std::to_string(cache.graph->diameter()) +
             " D=" + detail::fmt_num(cache.stats.doubling_constant) +
             " d=" + detail::fmt_num(cache.stats.dimension) +
             " d~=" + detail::fmt_num(cache.stats.strong_dimension));

        for (const WeightSpec& ws : cfg.weights) cache.weights.emplace(ws.id, build_weight(cache.graph, ws));
        for (const MatrixSpec& ms : cfg.matrices) {
            cache.matrices.emplace(ms.id, build_matrix(cache.graph, ms));
            try {
                cache.inverses.emplace(ms.id, invert(cache.matrices.at(ms.id)));
            } catch (const inversion_error& e) {
                cache.inverses.emplace(ms.id, std::nullopt);
                note("matrix " + ms.id + " on " + gs.id + " singular: " + e.what());
            }
        }
        auto ap_of = [&](const std::string& wid, double p) {
            const std::string k = detail::key2(wid, p);
            if (!cache.ap.count(k)) cache.ap[k] = ap_bound(cache.weights.at(wid), p).bound;
            return cache.ap.at(k);
        };
        auto inv_opnorm_of = [&](const std::string& mid, const std::string& wid,
                                 double p) -> const NormInterval& {
            const std::string k = detail::key3(mid, wid, p);
            if (!cache.inv_opnorm.count(k))
                cache.inv_opnorm[k] =
                    operator_norm(cache.inverses.at(mid)->inverse, p, cache.weights.at(wid), opn_opt);
            return cache.inv_opnorm.at(k);
        };
        auto beta_of = [&](const std::string& mid, const std::string& wid, double p) -> const StabilityEstimate& {
            const std::string k = detail::key3(mid, wid, p);
            if (!cache.beta.count(k)) {
                StabilityEstimate est;
                est.p = p;
                if (!cache.inverses.at(mid)) {
                    est.singular = true;
                } else {
                    const NormInterval& ni = inv_opnorm_of(mid, wid, p);
                    est.method = ni.method;
                    est.lower = ni.upper > 0.0 ? 1.0 / ni.upper : 0.0;
                    est.upper = ni.lower > 0.0 ? 1.0 / ni.lower : 0.0;
                }
                cache.beta[k] = est;
            }
            return cache.beta.at(k);
        };
        auto algebra_ctx = [&](double r, double alpha) {
            AlgebraContext ctx;
            ctx.prm = {r, alpha, cache.stats.dimension};
            ctx.density = cache.stats.density;
            ctx.strong_dim = cache.stats.strong_dimension;
            ctx.strong_density = cache.stats.strong_density;
            return ctx;
        };

        // weight-level checks (no matrix)
        for (const WeightSpec& ws : cfg.weights)
            for (double p : cfg.exponents)
                add(weighted_doubling_check(cache.weights.at(ws.id), p, cache.stats.doubling_constant,
                                            gs.id, ws.id));

        // fusion sets probed at small radii
        std::vector<DisjointSet> fusion_sets;
        for (int N : cfg.fusion_radii)
            if (N >= 1 && 4 * N <= cache.graph->diameter())
                fusion_sets.push_back(maximal_disjoint_set(cache.graph, N, 0));

        for (const MatrixSpec& ms : cfg.matrices) {
            const LocalizedMatrix& A = cache.matrices.at(ms.id);
            const std::string tagGM = gs.id + "/" + ms.id;
            for (const auto& [r, alpha] : cfg.r_alpha) {
                const AlgebraContext ctx = algebra_ctx(r, alpha);
                const std::string tag = tagGM + "/r" + detail::fmt_num(r) + "a" + detail::fmt_num(alpha);
                const double q = ctx.prm.one_minus_inv_r();
                const bool algebra_ok = (q == 0.0) || (alpha > ctx.prm.dim * q);
                InstanceInfo info{gs.id, ms.id, "", 0.0, -1};

                {
                    VerificationReport rep = product_inequality_check(A, A, ctx, ProductInequality::banach_b10, info);
                    rep.check_id += "/" + tag;
                    add(std::move(rep));
                }
                if (algebra_ok && q > 0.0) {
                    for (ProductInequality kind :
                         {ProductInequality::banach_ralpha, ProductInequality::embedding}) {
                        VerificationReport rep = product_inequality_check(A, A, ctx, kind, info);
                        rep.check_id += "/" + tag;
                        add(std::move(rep));
                    }
                } else if (q > 0.0) {
                    skip("product-bra/" + tag, "alpha <= dim (1 - 1/r)");
                }
                if (algebra_ok) {
                    for (int K : cfg.truncation_bandwidths)
                        if (K >= 1 && K <= cache.graph->diameter()) {
                            VerificationReport rep = truncation_error_check(A, ctx, K, info);
                            rep.check_id += "/" + tag;
                            add(std::move(rep));
                        }
                } else {
                    skip("truncation-tail/" + tag, "alpha <= dim (1 - 1/r)");
                }

                for (const DisjointSet& vn : fusion_sets) {
                    const std::string ftag = tag + "/N=" + std::to_string(vn.N);
                    if (ctx.strong_alpha() < 0.0) {
                        skip("fusion-restrict/" + ftag, "alpha < (strong_dim - dim)/r");
                        continue;
                    }
                    {
                        VerificationReport rep = fusion_restrict_check(A, vn, ctx, info);
                        rep.check_id += "/" + ftag;
                        add(std::move(rep));
                    }
                    const FusionMatrix B = restrict_to_fusion(A, vn);
                    {
                        VerificationReport rep = fusion_lift_check(B, ctx, cache.stats.doubling_constant, info);
                        rep.check_id += "/" + ftag;
                        add(std::move(rep));
                    }
                    if (algebra_ok) {
                        VerificationReport rep = envelope_norm_check(A, vn, ctx, info);
                        rep.check_id += "/" + ftag;
                        add(std::move(rep));
                    } else {
                        skip("envelope-norm/" + ftag, "alpha <= dim (1 - 1/r)");
                    }
                    {
                        VerificationReport rep =
                            fusion_product_inequality_check(B, B, ctx, FusionProductInequality::banach_b10, info);
                        rep.check_id += "/" + ftag;
                        add(std::move(rep));
                    }
                    if (ctx.strong_alpha() > ctx.strong_dim * q && q > 0.0) {
                        for (FusionProductInequality kind :
                             {FusionProductInequality::banach_ralpha, FusionProductInequality::embedding}) {
                            VerificationReport rep = fusion_product_inequality_check(B, B, ctx, kind, info);
                            rep.check_id += "/" + ftag;
                            add(std::move(rep));
                        }
                    } else if (q > 0.0) {
                        skip("fusion-product-bra/" + ftag, "strong alpha <= strong_dim (1 - 1/r)");
                    }
                }
            }

            for (const WeightSpec& ws : cfg.weights) {
                const Weight& w = cache.weights.at(ws.id);
                for (double p : cfg.exponents) {
                    const double ap = ap_of(ws.id, p);
                    InstanceInfo info{gs.id, ms.id, ws.id, p, -1};
                    const std::string tagWP = tagGM + "/" + ws.id + "/p=" + detail::fmt_num(p);
                    {
                        AlgebraContext ctx = algebra_ctx(1.0, 0.0);
                        BoundednessCheckOptions bopt{cfg.batch, cfg.seed + 17};
                        VerificationReport rep = weighted_boundedness_check(A, p, w, ctx, ap, bopt, info);
                        rep.check_id += "/" + tagWP;
                        add(std::move(rep));
                    }

                    const StabilityEstimate& beta = beta_of(ms.id, ws.id, p);
                    if (beta.singular || !(beta.lower > 0.0)) {
                        skip("stability/" + tagWP, "matrix singular on this space; beta = 0 recorded");
                        continue;
                    }
                    const NormInterval& iopn = inv_opnorm_of(ms.id, ws.id, p);
                    const LocalizedMatrix& A_inv = cache.inverses.at(ms.id)->inverse;

                    for (const auto& [r, alpha] : cfg.r_alpha) {
                        const AlgebraContext ctx = algebra_ctx(r, alpha);
                        const std::string tag = tagWP + "/r" + detail::fmt_num(r) +
                                                "a" + detail::fmt_num(alpha);
                        const double q = ctx.prm.one_minus_inv_r();
                        const double inv_r = ctx.prm.sup_form() ? 0.0 : 1.0 / r;
                        if (!(alpha > ctx.prm.dim * q)) {
                            skip("stability-chain/" + tag, "alpha <= dim (1 - 1/r)");
                            continue;
                        }

                        auto chain_checks = [&] {
                            // ball-localized recursion at its minimal admissible radius
                            const double norm_a = beurling_norm(A, ctx.prm);
                            {
                                const long long n_min =
                                    minimal_recursion_radius(ctx, ap, p, norm_a, beta.lower);
                                DisjointSet vn = maximal_disjoint_set(cache.graph, n_min, 0);
                                RecursionCheckOptions ropt{cfg.batch, cfg.seed + 23};
                                VerificationReport rep =
                                    stability_recursion_check(A, p, w, vn, ctx, beta, ap, ropt, info);
                                rep.check_id += "/" + tag;
                                add(std::move(rep));
                            }

                            if (!(alpha > ctx.strong_dim - ctx.prm.dim * inv_r)) {
                                skip("stability-chain/" + tag, "alpha <= strong_dim - dim/r");
                                return;
                            }
                            const long long n0 = recipe_radius(ctx, ap, p, norm_a / beta.lower);
                            const double multiplier = 2.0 * std::pow(ap, 2.0 / p) / beta.lower;
                            StabilityChain chain = build_stability_chain(A, ctx, n0, multiplier);
                            {
                                VerificationReport rep = resolvent_norm_check(chain, info);
                                rep.check_id += "/" + tag;
                                add(std::move(rep));
                            }
                            {
                                VerificationReport rep = kernel_norm_check(chain, ctx, info);
                                rep.check_id += "/" + tag;
                                add(std::move(rep));
                            }
                            {
                                DominationCheckOptions dopt{cfg.batch, 16, cfg.seed + 29};
                                VerificationReport rep =
                                    domination_check(A, A_inv, p, chain, ctx, beta, ap, dopt, info);
                                rep.check_id += "/" + tag;
                                add(std::move(rep));
                            }
                            {
                                StabilityChain ichain = build_inversion_chain(A, ctx, p, ap, iopn);
                                VerificationReport rep =
                                    entrywise_inverse_check(A, A_inv, ctx, p, ap, iopn, ichain, info);
                                rep.check_id += "/" + tag;
                                add(std::move(rep));
                            }
                            {
                                InversionReport ir =
                                    inverse_norm_control_check(A, A_inv, ctx, p, w, ap, iopn, info);
                                ir.report.check_id += "/" + tag;
                                add(std::move(ir.report));
                            }
                            for (const auto& [qexp, wid] : cfg.transfer_targets) {
                                const StabilityEstimate& beta_q = beta_of(ms.id, wid, qexp);
                                if (beta_q.singular || !(beta_q.lower > 0.0)) {
                                    skip("stability-transfer/" + tag,
                                         "target space sees a singular matrix");
                                    continue;
                                }
                                TransferReport tr = stability_transfer_check(
                                    A, ctx, p, beta, ap, qexp, beta_q, ap_of(wid, qexp), info);
                                tr.report.check_id +=
                                    "/" + tag + "/q" + detail::fmt_num(qexp) + ":" + wid;
                                add(std::move(tr.report));
                            }
                        };
                        try {
                            chain_checks();
                        } catch (const precondition_error& e) {
                            VerificationReport rep;
                            rep.check_id = "stability-chain/" + tag;
                            rep.inequality_id = "runtime-precondition";
                            rep.instance = info;
                            rep.pass = false;
                            rep.note = e.what();
                            add(std::move(rep));
                        }
                    }
                }
            }
        }
    }
    return sum;
}

/// Writes one JSON file per report, a summary CSV, the skipped list and the
/// effective config into `dir`. Output is a deterministic function of
/// (config, seeds): stable ordering, no timestamps.
inline void write_bundle(const VerifySummary& sum, const RunConfig& cfg, const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir / "reports");
    {
        std::ofstream os(dir / "config.json");
        os << config_to_json(cfg).dump(2) << "\n";
    }
    std::ostringstream csv;
    csv << "check_id,inequality_id,graph,matrix,w,p,N,lhs,rhs,slack,extracted_constant,pass,seed\n";
    int idx = 0;
    for (const VerificationReport& r : sum.reports) {
        std::ostringstream name;
        name << std::setw(5) << std::setfill('0') << idx++ << "_" << r.inequality_id << ".json";
        std::ofstream os(dir / "reports" / name.str());
        os << report_to_json(r).dump(2) << "\n";
        csv << r.check_id << "," << r.inequality_id << "," << r.instance.graph << ","
            << r.instance.matrix << "," << r.instance.weight << "," << csv_double(r.instance.p) << ","
            << r.instance.N << "," << csv_double(r.lhs) << "," << csv_double(r.rhs) << ","
            << (std::isfinite(r.slack) ? csv_double(r.slack) : "inf") << ","
            << csv_double(r.extracted_constant) << "," << (r.pass ? 1 : 0) << "," << r.seed << "\n";
    }
    {
        std::ofstream os(dir / "summary.csv");
        os << csv.str();
    }
    {
        std::ofstream os(dir / "skipped.csv");
        os << "check_id,reason\n";
        for (const std::string& s : sum.skipped) {
            const auto pos = s.find(": ");
            os << s.substr(0, pos) << "," << s.substr(pos + 2) << "\n";
        }
    }
}

} // namespace beurling
