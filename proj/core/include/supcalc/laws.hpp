#pragma once

#include "supcalc/semiring.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace supcalc::model {

inline constexpr int kLawFamilyCount = 14;

/// Short description of family id (1-based).
std::string_view law_family_name(int id);

struct LawFamilyResult {
  int id = 0;
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return checks > 0 && failures == 0; }
};

struct LawReport {
  std::vector<LawFamilyResult> families;
  /// The weighted-codiagonal retraction law instantiated at a pair outside the
  /// weight set; every such instance is expected to fail.
  std::size_t control_checks = 0;
  std::size_t control_rejections = 0;

  bool control_ok() const { return control_checks > 0 && control_rejections == control_checks; }
  bool all_pass() const;
};

struct LawOptions {
  std::uint64_t seed = 0;
  std::size_t trials = 200;
  /// Objects are drawn with dimension in [1, max_dim].
  std::size_t max_dim = 5;
};

/// Instantiates every law family `trials` times on random objects, maps,
/// scalars and weight pairs of `s`.
LawReport check_laws(const LawOptions& opts, const Semiring& s = default_semiring());

}  // namespace supcalc::model
