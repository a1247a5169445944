#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orbifrob {

/// First counterexample found for a law.
struct Witness {
  std::string where;  // sectors / basis indices
  std::string lhs;
  std::string rhs;
};

struct CheckResult {
  std::string id;     // short axiom tag, e.g. "a", "iv", "cocycle"
  std::string title;  // human-readable law name
  bool passed = true;
  std::size_t instances = 0;  // number of instances examined
  std::optional<Witness> witness;
};

/// Outcome of an exhaustive law check. A check passes iff it has no witness.
struct Report {
  std::string subject;
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* find(std::string_view id) const;
  /// Multi-line prose summary, one line per check plus witness details.
  std::string text() const;
};

}  // namespace orbifrob
