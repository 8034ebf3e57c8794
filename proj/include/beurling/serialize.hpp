#pragma once

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "beurling/graph.hpp"
#include "beurling/inversion.hpp"
#include "beurling/localized_matrix.hpp"
#include "beurling/report.hpp"
#include "beurling/weight.hpp"

namespace beurling {

using ordered_json = nlohmann::ordered_json;

inline std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t h = 1469598103934665603ULL) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    return h;
}

/// Hash of the canonical edge list (order-independent content identity).
inline std::uint64_t graph_hash(const Graph& g) {
    std::uint64_t h = fnv1a(&g, 0); // seed only
    const int n = g.size();
    h = fnv1a(&n, sizeof n, h);
    for (const auto& [i, j] : g.canonical_edges()) {
        h = fnv1a(&i, sizeof i, h);
        h = fnv1a(&j, sizeof j, h);
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

inline ordered_json graph_to_json(const Graph& g) {
    ordered_json j;
    j["n"] = g.size();
    ordered_json edges = ordered_json::array();
    for (const auto& [a, b] : g.canonical_edges()) edges.push_back({a, b});
    j["edges"] = std::move(edges);
    j["kind"] = g.kind();
    j["params"] = g.params();
    j["seed"] = g.seed();
    return j;
}

inline GraphPtr graph_from_json(const ordered_json& j, int vertex_cap = Graph::kDefaultVertexCap) {
    const int n = j.at("n").get<int>();
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : j.at("edges")) {
        const int a = e.at(0).get<int>(), b = e.at(1).get<int>();
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return std::make_shared<Graph>(std::move(adj), j.value("kind", "custom"), j.value("params", ""),
                                   j.value("seed", std::uint64_t{0}), vertex_cap);
}

inline ordered_json weight_to_json(const Weight& w) {
    ordered_json j;
    j["graph_hash"] = hex64(graph_hash(w.graph()));
    j["kind"] = w.kind();
    j["params"] = w.params();
    if (w.kind() == "explicit") j["values"] = w.values();
    return j;
}

inline ordered_json matrix_to_json(const LocalizedMatrix& A, const std::string& name = "") {
    ordered_json j;
    j["graph_hash"] = hex64(graph_hash(A.graph()));
    if (!name.empty()) j["name"] = name;
    j["n"] = A.size();
    j["entries"] = A.entries(); // row-major
    return j;
}

/// Row-major 64-bit floats prefixed by (n, graph hash).
inline void matrix_to_binary(const LocalizedMatrix& A, std::ostream& os) {
    const std::uint64_t n = static_cast<std::uint64_t>(A.size());
    const std::uint64_t h = graph_hash(A.graph());
    os.write(reinterpret_cast<const char*>(&n), sizeof n);
    os.write(reinterpret_cast<const char*>(&h), sizeof h);
    os.write(reinterpret_cast<const char*>(A.entries().data()),
             static_cast<std::streamsize>(A.entries().size() * sizeof(double)));
}

inline LocalizedMatrix matrix_from_binary(GraphPtr g, std::istream& is) {
    std::uint64_t n = 0, h = 0;
    is.read(reinterpret_cast<char*>(&n), sizeof n);
    is.read(reinterpret_cast<char*>(&h), sizeof h);
    if (static_cast<int>(n) != g->size()) throw argument_error("matrix size does not match graph");
    if (h != graph_hash(*g)) throw argument_error("matrix graph hash mismatch");
    std::vector<double> a(n * n);
    is.read(reinterpret_cast<char*>(a.data()), static_cast<std::streamsize>(a.size() * sizeof(double)));
    if (!is) throw argument_error("matrix binary payload truncated");
    return LocalizedMatrix(std::move(g), std::move(a));
}

inline std::string csv_double(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

/// Decay profile as CSV rows (n, h(n)).
inline void profile_to_csv(const LocalizedMatrix& A, std::ostream& os) {
    os << "n,h\n";
    const auto& h = A.profile_values();
    for (std::size_t n = 0; n < h.size(); ++n) os << n << "," << csv_double(h[n]) << "\n";
}

inline ordered_json report_to_json(const VerificationReport& r) {
    ordered_json j;
    j["check_id"] = r.check_id;
    j["inequality_id"] = r.inequality_id;
    j["instance"] = {{"graph", r.instance.graph},
                     {"matrix", r.instance.matrix},
                     {"p", r.instance.p},
                     {"w", r.instance.weight},
                     {"N", r.instance.N}};
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["slack"] = std::isfinite(r.slack) ? r.slack : -1.0;
    j["extracted_constant"] = r.extracted_constant;
    j["pass"] = r.pass;
    j["seed"] = r.seed;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline void slope_report_to_csv(const SlopeReport& rep, std::ostream& os) {
    os << "kappa,norm_A,norm_Ainv_beurling,opnorm_Ainv_pw,rhs_bound,extracted_C,"
          "witness_norm,witness_image_norm\n";
    for (const SlopeRow& r : rep.rows) {
        os << csv_double(r.kappa) << "," << csv_double(r.norm_a) << ","
           << csv_double(r.norm_inv_beurling) << "," << csv_double(r.opnorm_inv_weighted) << ","
           << csv_double(r.rhs_bound) << "," << csv_double(r.extracted_c) << ","
           << csv_double(r.witness_norm) << "," << csv_double(r.witness_image_norm) << "\n";
    }
}

} // namespace beurling
