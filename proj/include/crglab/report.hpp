#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "crglab/cache.hpp"
#include "crglab/ll.hpp"

namespace crg::report {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Verdict object: {"identity", "subject", "lhs", "rhs", "pass", "asserted"}.
/// Unasserted verdicts are informational and never fail a report.
json verdict(const std::string& identity, const std::string& subject, json lhs, json rhs, bool asserted = true);

/// Integer when the denominator is 1, "p/q" otherwise.
json rational(const Rational& x);

json descriptor(const ReflectionGroup& g);

/// Numerology and degrees; needs only the group.
json group_info(const ReflectionGroup& g);
/// Full identity suite with the orbit table, counts and Hurwitz census.
json group_verify(const GroupContext& ctx);
/// Passport census with permutation invariance and, for symmetric groups,
/// the closed-form local degrees.
json group_passports(const GroupContext& ctx);
/// Orbit table as CSV, one row per flat orbit.
std::string flats_csv(const GroupContext& ctx);

json ll_rlbl(const ll::CenteredPolynomial& p);
json ll_fiber(int degree, std::uint64_t seed);
json ll_equivariance(int degree, int trials, std::uint64_t seed);

/// "identity[subject]" of the first asserted verdict that fails.
std::optional<std::string> first_failure(const json& report);

/// Parses "3", "-1.5", "2i", "-i", "1-2.5i", "1e-3+4i".
ll::cplx parse_complex(const std::string& s);

}  // namespace crg::report
