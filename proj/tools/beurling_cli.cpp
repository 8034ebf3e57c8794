// Command-line driver: build graphs and weights, compute norms and stability
// bounds, run the verification suite, and reproduce the geometric-decay
// asymptotics. Exit codes: 0 all checks pass, 1 check failure, 2 usage or
// config error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "beurling/driver.hpp"
#include "beurling/serialize.hpp"

namespace fs = std::filesystem;
using namespace beurling;

namespace {

fs::path output_root(const std::string& out_flag) {
    if (!out_flag.empty()) return out_flag;
    if (const char* env = std::getenv("BEURLING_OUT")) return env;
    return "out";
}

GraphSpec graph_spec_from_flags(const std::string& kind, int d, int side, int n,
                                std::vector<int> jumps, double radius, std::uint64_t seed) {
    GraphSpec s;
    s.id = kind;
    s.kind = kind;
    s.d = d;
    s.side = side;
    s.n = n;
    if (!jumps.empty()) s.jumps = std::move(jumps);
    s.radius = radius;
    s.seed = seed;
    if (kind == "lattice") {
        s.dim_override = static_cast<double>(d);
        s.strong_dim_override = static_cast<double>(d);
    } else if (kind == "circulant") {
        s.dim_override = 1.0;
        s.strong_dim_override = 1.0;
    }
    return s;
}

int cmd_graph(const GraphSpec& spec, const std::string& out_flag) {
    GraphPtr g = build_graph(spec);
    FitOptions fit;
    fit.dimension_override = spec.dim_override;
    fit.strong_dimension_override = spec.strong_dim_override;
    const GrowthStats stats = fit_growth(g, fit);
    const fs::path dir = output_root(out_flag);
    fs::create_directories(dir);
    {
        std::ofstream os(dir / "graph.json");
        os << graph_to_json(*g).dump(2) << "\n";
    }
    ordered_json js;
    js["hash"] = hex64(graph_hash(*g));
    js["n"] = g->size();
    js["diam"] = stats.diam;
    js["doubling_constant"] = stats.doubling_constant;
    js["dimension"] = stats.dimension;
    js["density"] = stats.density;
    js["strong_dimension"] = stats.strong_dimension;
    js["strong_density"] = stats.strong_density;
    js["dimension_is_override"] = spec.dim_override.has_value();
    {
        std::ofstream os(dir / "stats.json");
        os << js.dump(2) << "\n";
    }
    std::cout << js.dump(2) << "\n";
    return 0;
}

int cmd_weight(const GraphSpec& gspec, const WeightSpec& wspec, const std::vector<double>& ps,
               const std::string& out_flag) {
    GraphPtr g = build_graph(gspec);
    const Weight w = build_weight(g, wspec);
    const fs::path dir = output_root(out_flag);
    fs::create_directories(dir);
    {
        std::ofstream os(dir / "weight.json");
        os << weight_to_json(w).dump(2) << "\n";
    }
    ordered_json js = ordered_json::array();
    for (double p : ps) {
        const ApReport rep = ap_bound(w, p);
        js.push_back({{"p", p},
                      {"bound", rep.bound},
                      {"witness_center", rep.witness_center},
                      {"witness_radius", rep.witness_radius}});
    }
    {
        std::ofstream os(dir / "ap_bounds.json");
        os << js.dump(2) << "\n";
    }
    std::cout << js.dump(2) << "\n";
    return 0;
}

int cmd_norm(const GraphSpec& gspec, const MatrixSpec& mspec, const std::vector<double>& rs,
             const std::vector<double>& alphas, const std::string& out_flag) {
    GraphPtr g = build_graph(gspec);
    FitOptions fit;
    fit.dimension_override = gspec.dim_override;
    fit.strong_dimension_override = gspec.strong_dim_override;
    const GrowthStats stats = fit_growth(g, fit);
    const LocalizedMatrix A = build_matrix(g, mspec);
    const fs::path dir = output_root(out_flag);
    fs::create_directories(dir);
    {
        std::ofstream os(dir / "profile.csv");
        profile_to_csv(A, os);
    }
    ordered_json js = ordered_json::array();
    for (double r : rs)
        for (double alpha : alphas) {
            BeurlingParams prm{r == 0.0 ? std::numeric_limits<double>::infinity() : r, alpha,
                               stats.dimension};
            js.push_back({{"r", r == 0.0 ? ordered_json("inf") : ordered_json(r)},
                          {"alpha", alpha},
                          {"dim", prm.dim},
                          {"norm", beurling_norm(A, prm)}});
        }
    {
        std::ofstream os(dir / "norms.json");
        os << js.dump(2) << "\n";
    }
    std::cout << js.dump(2) << "\n";
    return 0;
}

int cmd_stability(const GraphSpec& gspec, const MatrixSpec& mspec, const WeightSpec& wspec,
                  const std::vector<double>& ps, std::uint64_t seed, const std::string& out_flag) {
    GraphPtr g = build_graph(gspec);
    const LocalizedMatrix A = build_matrix(g, mspec);
    const Weight w = build_weight(g, wspec);
    OpNormOptions opt;
    opt.seed = seed;
    ordered_json js = ordered_json::array();
    for (double p : ps) {
        const StabilityEstimate est = stability_lower_bound(A, p, w, opt);
        const NormInterval fwd = operator_norm(A, p, w, opt);
        js.push_back({{"p", p},
                      {"beta_lower", est.lower},
                      {"beta_upper", est.upper},
                      {"singular", est.singular},
                      {"opnorm_lower", fwd.lower},
                      {"opnorm_upper", fwd.upper},
                      {"seed", seed}});
    }
    const fs::path dir = output_root(out_flag);
    fs::create_directories(dir);
    {
        std::ofstream os(dir / "stability.json");
        os << js.dump(2) << "\n";
    }
    std::cout << js.dump(2) << "\n";
    return 0;
}

int cmd_verify(const std::string& config_path, const std::string& out_flag, int batch_override,
               std::uint64_t seed_override, bool have_seed) {
    RunConfig cfg = default_verify_config();
    if (!config_path.empty()) {
        std::ifstream is(config_path);
        if (!is) throw argument_error("cannot open config file " + config_path);
        ordered_json j = ordered_json::parse(is);
        cfg = config_from_json(j);
    }
    if (batch_override > 0) cfg.batch = batch_override;
    if (have_seed) cfg.seed = seed_override;
    if (!out_flag.empty())
        cfg.output_dir = out_flag;
    else if (const char* env = std::getenv("BEURLING_OUT"))
        cfg.output_dir = std::string(env) + "/verify";

    const VerifySummary sum = run_verify(cfg, &std::cout);
    write_bundle(sum, cfg, cfg.output_dir);
    std::cout << "checks: " << sum.passed << " passed, " << sum.failed << " failed, "
              << sum.skipped.size() << " skipped\n";
    std::cout << "bundle: " << cfg.output_dir << "\n";
    return sum.all_pass() ? 0 : 1;
}

int cmd_example43(int n, std::vector<double> kappas, double r, double alpha, double p, double theta,
                  const std::string& out_flag) {
    if (kappas.empty()) kappas = {0.80, 0.85, 0.90, 0.93, 0.95};
    const SlopeReport rep = inverse_decay_asymptotics(kappas, r, alpha, p, theta, n);
    const fs::path dir = output_root(out_flag);
    fs::create_directories(dir);
    {
        std::ofstream os(dir / "slopes.csv");
        slope_report_to_csv(rep, os);
    }
    ordered_json js;
    js["cycle_size"] = rep.cycle_size;
    js["slope_inverse_decay"] = rep.slope_inverse_decay;
    js["slope_inverse_decay_target"] = alpha + (std::isinf(r) ? 0.0 : 1.0 / r);
    js["slope_inverse_opnorm"] = rep.slope_inverse_opnorm;
    js["slope_inverse_opnorm_target"] = 1.0;
    js["slope_witness"] = rep.slope_witness;
    js["slope_witness_target"] = (theta + 1.0) / p;
    js["slope_witness_image"] = rep.slope_witness_image;
    js["slope_witness_image_target"] = (theta + p + 1.0) / p;
    js["max_norm_a"] = rep.max_norm_a;
    js["ap_bound_weight"] = rep.ap_bound_weight;
    {
        std::ofstream os(dir / "slopes.json");
        os << js.dump(2) << "\n";
    }
    std::cout << js.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"decay norms, Muckenhoupt weights and stability bounds on finite graphs"};
    app.require_subcommand(1);

    std::string kind = "circulant", out_flag, config_path;
    int d = 1, side = 8, n = 64, batch_override = -1, n43 = 4096;
    std::vector<int> jumps;
    double radius = 0.2, r43 = 1.0, alpha43 = 2.0, p = 2.0, theta = 0.0;
    std::uint64_t seed = 0, stab_seed = 20240901;
    std::vector<double> ps{1.0, 2.0}, kappas, rs{1.0, 2.0, 0.0}, alphas{2.0};
    WeightSpec wspec{"w", "trivial", 0.0, 0};
    MatrixSpec mspec{"A", "damping", 0.5, 3.0, 11};

    auto add_graph_flags = [&](CLI::App* sc) {
        sc->add_option("--kind", kind, "lattice | circulant | rgg")->capture_default_str();
        sc->add_option("--d", d, "lattice dimension");
        sc->add_option("--side", side, "lattice side length");
        sc->add_option("--n", n, "vertex count (circulant, rgg)");
        sc->add_option("--jumps", jumps, "circulant jumps");
        sc->add_option("--radius", radius, "rgg connection radius");
        sc->add_option("--seed", seed, "rgg point seed");
    };
    auto add_weight_flags = [&](CLI::App* sc) {
        sc->add_option("--weight", wspec.kind, "trivial | polynomial");
        sc->add_option("--theta", wspec.theta, "polynomial weight exponent");
        sc->add_option("--base", wspec.base, "polynomial weight base vertex");
    };
    auto add_matrix_flags = [&](CLI::App* sc) {
        sc->add_option("--matrix", mspec.kind, "identity | damping | random_decay");
        sc->add_option("--kappa", mspec.kappa, "damping strength");
        sc->add_option("--decay", mspec.decay, "random decay exponent");
        sc->add_option("--matrix-seed", mspec.seed, "random decay seed");
    };

    CLI::App* g = app.add_subcommand("graph", "build a graph, write JSON and growth stats");
    add_graph_flags(g);
    g->add_option("--out", out_flag, "output directory");

    CLI::App* wcmd = app.add_subcommand("weight", "build a weight, write JSON and its A_p bounds");
    add_graph_flags(wcmd);
    add_weight_flags(wcmd);
    wcmd->add_option("--p", ps, "exponents to bound");
    wcmd->add_option("--out", out_flag, "output directory");

    CLI::App* ncmd = app.add_subcommand("norm", "decay profile and norms of a matrix");
    add_graph_flags(ncmd);
    add_matrix_flags(ncmd);
    ncmd->add_option("--r", rs, "norm exponents (0 = sup form)");
    ncmd->add_option("--alpha", alphas, "decay rates");
    ncmd->add_option("--out", out_flag, "output directory");

    CLI::App* scmd = app.add_subcommand("stability", "stability bounds and operator norms");
    add_graph_flags(scmd);
    add_matrix_flags(scmd);
    add_weight_flags(scmd);
    scmd->add_option("--p", ps, "exponents");
    scmd->add_option("--stability-seed", stab_seed, "norm estimation seed");
    scmd->add_option("--out", out_flag, "output directory");

    CLI::App* vcmd = app.add_subcommand("verify", "run the inequality suite, write the report bundle");
    vcmd->add_option("--config", config_path, "config JSON (defaults to the built-in suite)");
    vcmd->add_option("--batch", batch_override, "random batch size override");
    bool have_seed = false;
    vcmd->add_option("--seed", stab_seed, "seed override")->each([&](const std::string&) { have_seed = true; });
    vcmd->add_option("--out", out_flag, "bundle directory");

    CLI::App* ecmd = app.add_subcommand("example43", "geometric-decay asymptotics on a large cycle");
    ecmd->add_option("--n", n43, "cycle size")->capture_default_str();
    ecmd->add_option("--kappas", kappas, "damping grid (default 0.80 0.85 0.90 0.93 0.95)");
    ecmd->add_option("--r", r43, "norm exponent (0 = sup form)");
    ecmd->add_option("--alpha", alpha43, "decay rate");
    ecmd->add_option("--p", p, "weighted-space exponent");
    ecmd->add_option("--theta", theta, "weight exponent");
    ecmd->add_option("--out", out_flag, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(g))
            return cmd_graph(graph_spec_from_flags(kind, d, side, n, jumps, radius, seed), out_flag);
        if (app.got_subcommand(wcmd)) {
            wspec.id = wspec.kind;
            return cmd_weight(graph_spec_from_flags(kind, d, side, n, jumps, radius, seed), wspec, ps,
                              out_flag);
        }
        if (app.got_subcommand(ncmd)) {
            mspec.id = mspec.kind;
            return cmd_norm(graph_spec_from_flags(kind, d, side, n, jumps, radius, seed), mspec, rs,
                            alphas, out_flag);
        }
        if (app.got_subcommand(scmd)) {
            mspec.id = mspec.kind;
            wspec.id = wspec.kind;
            return cmd_stability(graph_spec_from_flags(kind, d, side, n, jumps, radius, seed), mspec,
                                 wspec, ps, stab_seed, out_flag);
        }
        if (app.got_subcommand(vcmd)) return cmd_verify(config_path, out_flag, batch_override, stab_seed, have_seed);
        if (app.got_subcommand(ecmd)) {
            const double r = (r43 == 0.0) ? std::numeric_limits<double>::infinity() : r43;
            return cmd_example43(n43, kappas, r, alpha43, p, theta, out_flag);
        }
    } catch (const argument_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const size_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const connectivity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const generation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
