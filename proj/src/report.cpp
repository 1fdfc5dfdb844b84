#include "symop/report.hpp"

#include <cstdio>

namespace symop {

Failure make_failure(std::string params, const SymFunc& lhs, const SymFunc& rhs) {
  const SymFunc l = to_schur(lhs), r = to_schur(rhs);
  return {std::move(params), to_string(l), to_string(r), to_string(l - r)};
}

std::string to_string(const VerificationReport& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.3f", r.elapsed_seconds);
  std::string out = (r.passed() ? "PASS " : "FAIL ") + r.id + " [" + r.ranges + "] instances=" +
                    std::to_string(r.instances) + " failures=" + std::to_string(r.failures.size()) + " time=" + secs +
                    "s";
  for (const Failure& f : r.failures)
    out += "\n  " + f.params + "\n    lhs: " + f.lhs + "\n    rhs: " + f.rhs + "\n    lhs-rhs: " + f.difference;
  return out;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const Failure& f : r.failures)
    failures.push_back({{"params", f.params}, {"lhs", f.lhs}, {"rhs", f.rhs}, {"difference", f.difference}});
  return {{"id", r.id},
          {"ranges", r.ranges},
          {"instances", r.instances},
          {"passed", r.passed()},
          {"failures", failures},
          {"elapsed_seconds", r.elapsed_seconds}};
}

}  // namespace symop
