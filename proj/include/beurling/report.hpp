#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace beurling {

struct InstanceInfo {
    std::string graph;
    std::string matrix;
    std::string weight;
    double p = 0.0;
    long long N = -1; // -1 when the check has no fusion radius
};

/// Outcome of one inequality check. For inequalities with an explicit
/// displayed constant, `rhs` includes it and pass means lhs <= rhs (up to
/// roundoff slack). For existential-constant inequalities, `rhs` is the right
/// side without the constant, `extracted_constant` = lhs/rhs is the minimal
/// admissible value, and pass means the extraction is finite.
struct VerificationReport {
    std::string check_id;
    std::string inequality_id;
    InstanceInfo instance;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0; // rhs / lhs (>= 1 when a fixed-constant check passes)
    double extracted_constant = 0.0;
    bool pass = false;
    std::uint64_t seed = 0;
    std::string note;
};

namespace detail {

constexpr double kCheckRelTol = 1e-9;
constexpr double kCheckAbsTol = 1e-12;

inline bool leq_with_tol(double lhs, double rhs) {
    return lhs <= rhs * (1.0 + kCheckRelTol) + kCheckAbsTol;
}

inline double ratio_slack(double lhs, double rhs) {
    if (lhs <= 0.0) return std::numeric_limits<double>::infinity();
    return rhs / lhs;
}

} // namespace detail

/// Fill the lhs/rhs-derived fields of a fixed-constant check.
inline void finish_fixed_constant(VerificationReport& rep, double lhs, double rhs) {
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.slack = detail::ratio_slack(lhs, rhs);
    rep.extracted_constant = rhs > 0.0 ? lhs / rhs : 0.0;
    rep.pass = detail::leq_with_tol(lhs, rhs);
}

/// Fill the fields of an existential-constant check (rhs excludes the constant).
inline void finish_extracted_constant(VerificationReport& rep, double lhs, double rhs_without_c) {
    rep.lhs = lhs;
    rep.rhs = rhs_without_c;
    rep.extracted_constant = lhs > 0.0 ? lhs / rhs_without_c : 0.0;
    rep.slack = detail::ratio_slack(lhs, rhs_without_c);
    rep.pass = std::isfinite(rep.extracted_constant);
}

} // namespace beurling
