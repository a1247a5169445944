#include "orbifrob/report.hpp"

#include <algorithm>
#include <sstream>

namespace orbifrob {

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* Report::find(std::string_view id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

std::string Report::text() const {
  std::ostringstream os;
  os << subject << ": " << (passed() ? "PASS" : "FAIL") << '\n';
  for (const auto& c : checks) {
    os << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.id << ") " << c.title << " (" << c.instances
       << " instances)\n";
    if (c.witness) {
      os << "        at " << c.witness->where << '\n';
      os << "        lhs = " << c.witness->lhs << '\n';
      os << "        rhs = " << c.witness->rhs << '\n';
    }
  }
  return os.str();
}

}  // namespace orbifrob
