#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "symop/symfunc.hpp"

namespace symop {

struct Failure {
  std::string params;
  std::string lhs;
  std::string rhs;
  std::string difference;
};

/// Both sides rendered in Schur, plus lhs - rhs.
Failure make_failure(std::string params, const SymFunc& lhs, const SymFunc& rhs);

struct VerificationReport {
  std::string id;
  std::string ranges;
  std::size_t instances = 0;
  std::vector<Failure> failures;
  double elapsed_seconds = 0;

  bool passed() const { return failures.empty(); }
};

/// One summary line, followed by one line per failure.
std::string to_string(const VerificationReport& r);
nlohmann::json to_json(const VerificationReport& r);

}  // namespace symop
