#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symop/report.hpp"
#include "symop/symfunc.hpp"

namespace symop {

/// max_ab bounds the operator indices (or small integers), max_g the test
/// vectors and the remaining partitions; see each entry's `ranges`.
struct SuiteBounds {
  int max_ab = 3;
  int max_g = 4;
};

struct IdentityParams {
  std::vector<std::pair<std::string, Partition>> partitions;
  std::vector<std::pair<std::string, int>> integers;

  /// Throw std::invalid_argument when the name is missing.
  const Partition& part(std::string_view name) const;
  int integer(std::string_view name) const;
};

/// "alpha=2,1 beta=1 k=2"
std::string to_string(const IdentityParams& p);
/// Inverse of to_string. Integer-valued names must be listed in int_names.
IdentityParams parse_params(std::string_view text, const std::vector<std::string>& int_names);

/// One exact equality to check.
struct Comparison {
  std::string label;
  SymFunc lhs;
  SymFunc rhs;
};

struct IdentityEntry {
  std::string id;
  std::string statement;
  std::vector<std::string> partition_params;
  std::vector<std::string> integer_params;
  /// How SuiteBounds map onto the parameters.
  std::string ranges;
  std::function<std::vector<IdentityParams>(const SuiteBounds&)> instances;
  std::function<std::vector<Comparison>(const IdentityParams&, const SuiteBounds&)> check;
};

const std::vector<IdentityEntry>& catalog();
/// Throws std::invalid_argument for an unknown id.
const IdentityEntry& catalog_entry(std::string_view id);

/// Checks one parameter choice. Operator identities are applied to every s_gamma
/// with |gamma| <= bounds.max_g. Throws std::invalid_argument on an unknown id
/// or when a declared parameter is missing.
VerificationReport verify_instance(std::string_view id, const IdentityParams& params, const SuiteBounds& bounds);
VerificationReport verify_instance(const IdentityEntry& entry, const IdentityParams& params, const SuiteBounds& bounds);

/// All instances of one entry. Runs on up to `threads` threads (0 reads
/// SYMOP_THREADS, default 1); failures keep instance order.
VerificationReport run_entry(const IdentityEntry& entry, const SuiteBounds& bounds, unsigned threads = 0);
/// Every entry in catalog order.
std::vector<VerificationReport> run_suite(const SuiteBounds& bounds, unsigned threads = 0);
std::vector<VerificationReport> run_suite(const std::vector<IdentityEntry>& entries, const SuiteBounds& bounds,
                                          unsigned threads = 0);

}  // namespace symop
