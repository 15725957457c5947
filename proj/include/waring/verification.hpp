#ifndef WARING_VERIFICATION_HPP
#define WARING_VERIFICATION_HPP

#include "waring/catalog.hpp"
#include "waring/quartic.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace waring {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// det of the matrix of second partials of F, computed by differentiation.
Polynomial hessian_determinant(const TernaryQuartic& f);

/// theorem, samples, degrees, spans, hessian, catalecticant-identity,
/// rank-conditions, gordan-noether, reye, constants, w2open.
std::span<const std::string_view> suite_names();

/// Runs one suite. "all" is not a suite here; callers loop over
/// suite_names(). Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(std::string_view name, GenericExpansionCache& cache);

} // namespace waring

#endif
