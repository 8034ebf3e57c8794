#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "beurling/driver.hpp"

using namespace beurling;
namespace fs = std::filesystem;

namespace {

RunConfig tiny_config() {
    RunConfig cfg;
    cfg.graphs = {{"C48", "circulant", 1, 0, 48, {1}, 0.0, 0, 1.0, 1.0},
                  {"lat4x4", "lattice", 2, 4, 0, {}, 0.0, 0, 2.0, 2.0}};
    cfg.weights = {{"w0", "trivial", 0.0, 0}, {"wt+0.30", "polynomial", 0.3, 0}};
    cfg.matrices = {{"I", "identity", 0.0, 0.0, 0}, {"Ak0.50", "damping", 0.5, 0.0, 0}};
    cfg.r_alpha = {{1.0, 2.0}, {std::numeric_limits<double>::infinity(), 2.0}};
    cfg.exponents = {1.0, 2.0};
    cfg.transfer_targets = {{1.0, "w0"}};
    cfg.batch = 20;
    return cfg;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

std::string cli_path() {
#ifdef BEURLING_CLI_PATH
    return BEURLING_CLI_PATH;
#else
    return "";
#endif
}

int run_cli(const std::string& args) {
    const int rc = std::system((cli_path() + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(rc);
}

} // namespace

TEST_CASE("config JSON round trip") {
    const RunConfig cfg = default_verify_config();
    const RunConfig back = config_from_json(config_to_json(cfg));
    REQUIRE(back.graphs.size() == cfg.graphs.size());
    for (std::size_t i = 0; i < cfg.graphs.size(); ++i) {
        REQUIRE(back.graphs[i].id == cfg.graphs[i].id);
        REQUIRE(back.graphs[i].kind == cfg.graphs[i].kind);
        REQUIRE(back.graphs[i].dim_override == cfg.graphs[i].dim_override);
    }
    REQUIRE(back.weights.size() == cfg.weights.size());
    REQUIRE(back.matrices.size() == cfg.matrices.size());
    REQUIRE(back.r_alpha == cfg.r_alpha);
    REQUIRE(back.exponents == cfg.exponents);
    REQUIRE(back.transfer_targets == cfg.transfer_targets);
    REQUIRE(back.batch == cfg.batch);
    REQUIRE(back.seed == cfg.seed);
}

TEST_CASE("verify driver on a reduced matrix") {
    const RunConfig cfg = tiny_config();
    const VerifySummary sum = run_verify(cfg);
    REQUIRE(sum.failed == 0);
    REQUIRE(sum.passed > 100);
    // invalid combos are listed, not silently dropped: the sup-form algebra on
    // the 2-d lattice sits outside the hypothesis region
    bool saw_lattice_skip = false;
    for (const std::string& s : sum.skipped)
        if (s.find("lat4x4") != std::string::npos && s.find("rinfa2") != std::string::npos)
            saw_lattice_skip = true;
    REQUIRE(saw_lattice_skip);
    // every dispatched inequality family shows up
    for (const std::string id :
         {"product-b10", "product-bra", "embedding-b10", "truncation-tail", "fusion-restrict",
          "fusion-lift", "envelope-norm", "fusion-product-b10", "weighted-bound", "weight-doubling",
          "stability-recursion", "resolvent-norm", "kernel-norm", "domination", "entrywise-inverse",
          "inverse-norm-control", "stability-transfer"}) {
        bool seen = false;
        for (const VerificationReport& r : sum.reports) seen |= (r.inequality_id == id);
        INFO(id);
        REQUIRE(seen);
    }
}

TEST_CASE("bundles are byte-identical across runs") {
    RunConfig cfg = tiny_config();
    const fs::path root = fs::temp_directory_path() / "beurling_det";
    fs::remove_all(root);
    const VerifySummary s1 = run_verify(cfg);
    write_bundle(s1, cfg, root / "a");
    const VerifySummary s2 = run_verify(cfg);
    write_bundle(s2, cfg, root / "b");

    std::vector<fs::path> rel;
    for (const auto& e : fs::recursive_directory_iterator(root / "a"))
        if (e.is_regular_file()) rel.push_back(fs::relative(e.path(), root / "a"));
    REQUIRE(rel.size() > 10);
    for (const fs::path& p : rel) {
        INFO(p.string());
        REQUIRE(fs::exists(root / "b" / p));
        REQUIRE(slurp(root / "a" / p) == slurp(root / "b" / p));
    }
}

TEST_CASE("cli exit codes") {
    REQUIRE_FALSE(cli_path().empty());
    const fs::path root = fs::temp_directory_path() / "beurling_cli";
    fs::remove_all(root);

    // usage / config errors -> 2
    REQUIRE(run_cli("no-such-subcommand") == 2);
    REQUIRE(run_cli("graph --kind circulant --n 6 --jumps 2 --out " + (root / "g").string()) == 2);
    REQUIRE(run_cli("graph --kind lattice --d 2 --side 101 --out " + (root / "g").string()) == 2);
    REQUIRE(run_cli("example43 --n 256 --kappas 0.95 --theta 0.3 --out " + (root / "e").string()) == 2);

    // a good graph run -> 0, artifacts on disk
    REQUIRE(run_cli("graph --kind circulant --n 12 --out " + (root / "g12").string()) == 0);
    REQUIRE(fs::exists(root / "g12" / "graph.json"));
    REQUIRE(fs::exists(root / "g12" / "stats.json"));

    // missing output dir is created by verify
    std::ofstream cfg_file(root / "cfg.json");
    ordered_json j = config_to_json(tiny_config());
    j["output_dir"] = (root / "deep" / "bundle").string();
    j["batch"] = 10;
    cfg_file << j.dump(2);
    cfg_file.close();
    REQUIRE(run_cli("verify --config " + (root / "cfg.json").string()) == 0);
    REQUIRE(fs::exists(root / "deep" / "bundle" / "summary.csv"));
    REQUIRE(fs::exists(root / "deep" / "bundle" / "skipped.csv"));
}

TEST_CASE("matrix serialization") {
    GraphPtr c = build_cycle(24);
    const LocalizedMatrix A = random_decay_matrix(c, 3.0, 77);
    { // binary round trip: header (n, graph hash) + row-major doubles
        std::stringstream buf(std::ios::in | std::ios::out | std::ios::binary);
        matrix_to_binary(A, buf);
        const LocalizedMatrix back = matrix_from_binary(c, buf);
        REQUIRE(back.entries() == A.entries());
        GraphPtr other = build_cycle(24, 9999);
        std::stringstream buf2(std::ios::in | std::ios::out | std::ios::binary);
        matrix_to_binary(A, buf2);
        REQUIRE_NOTHROW(matrix_from_binary(other, buf2)); // same graph content
        GraphPtr wrong = build_cycle(25);
        std::stringstream buf3(std::ios::in | std::ios::out | std::ios::binary);
        matrix_to_binary(A, buf3);
        REQUIRE_THROWS_AS(matrix_from_binary(wrong, buf3), argument_error);
    }
    { // decay profile CSV
        std::ostringstream os;
        profile_to_csv(A, os);
        std::istringstream is(os.str());
        std::string line;
        std::getline(is, line);
        REQUIRE(line == "n,h");
        int rows = 0;
        while (std::getline(is, line)) ++rows;
        REQUIRE(rows == c->diameter() + 1);
    }
}

TEST_CASE("output root env var") {
    REQUIRE_FALSE(cli_path().empty());
    const fs::path root = fs::temp_directory_path() / "beurling_envroot";
    fs::remove_all(root);
    const std::string cmd = "BEURLING_OUT=" + root.string() + " " + cli_path() +
                            " graph --kind circulant --n 12 > /dev/null 2>&1";
    REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
    REQUIRE(fs::exists(root / "graph.json"));
}
