#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qlandau/report.hpp"
#include "qlandau/weylops.hpp"

namespace qlandau::verify {

/// Seeded invariant suites; record names are prefixed with the module name.
CheckList algebra_suite(std::uint64_t seed);
CheckList heisenberg_suite(std::uint64_t seed);
CheckList weyl_suite(std::uint64_t seed, const std::optional<weyl::RatVec3>& nu_override = {});
CheckList canonical_suite(std::uint64_t seed);
CheckList translations_suite(std::uint64_t seed);

/// Dispatch by suite name ("algebra", "heisenberg", "weyl", "canonical",
/// "translations", "all"); throws std::invalid_argument on unknown names.
CheckList run_suite(const std::string& name, std::uint64_t seed,
                    const std::optional<weyl::RatVec3>& nu_override = {});

}  // namespace qlandau::verify
