#pragma once

#include <array>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "symop/report.hpp"
#include "symop/symfunc.hpp"
#include "symop/tableau.hpp"

namespace symop {

/// coefficient * s_shape. Coefficients are signed multiplicities.
struct SkewTerm {
  Integer coefficient;
  SkewShape shape;
};

struct SkewExpansion {
  std::vector<SkewTerm> terms;
  SymFunc collapsed;
};

/// s_(k) s_{gamma/beta} as the signed sum over gamma+/gamma a (k-i)-horizontal
/// strip and beta/beta- an i-vertical strip.
SkewExpansion skew_pieri(int k, const SkewShape& shape);

/// Restricts the pair enumeration to one beta- and/or one gamma+.
struct SkewLrFilter {
  std::optional<Partition> beta_minus;
  std::optional<Partition> gamma_plus;
};

using SkewLrVisitor = std::function<void(const Assyt& t1, const Ssyt& t2, int sign)>;

/// Visits every pair (T1, T2) contributing to s_{alpha/delta} s_{gamma/beta}:
/// T1 an ASSYT of shape beta/beta-, T2 an SSYT of shape gamma+/gamma, combined
/// content alpha - delta, pair reading word delta-lattice.
void for_each_skew_lr_pair(const SkewShape& a, const SkewShape& b, const SkewLrFilter& filter,
                           const SkewLrVisitor& visit);

/// Terms merged by shape, sorted by (inner, outer) in canonical order.
SkewExpansion skew_lr_product(const SkewShape& a, const SkewShape& b);

/// Right-hand side of the skew corners formula for s_{alpha/theta} * s_{(n-k-1,1)}.
/// Throws std::invalid_argument unless theta is contained in alpha.
SymFunc skew_corners_rhs(const Partition& alpha, const Partition& theta);

/// {delta in add(theta) : delta contained in alpha} and its complement in add(theta).
std::vector<Partition> add_restrict(const Partition& theta, const Partition& alpha);
std::vector<Partition> add_complement(const Partition& theta, const Partition& alpha);

enum class JdtCase { a = 0, b = 1, c = 2 };

struct JdtBijectionResult {
  VerificationReport report;
  /// Number of left-hand tableaux per case.
  std::array<std::size_t, 3> case_counts{};
  /// Shape pairs (gamma, delta) seen in each case.
  std::array<std::set<std::pair<Partition, Partition>>, 3> case_shapes;
  std::vector<Partition> addrestrict;
  std::vector<Partition> addcomplement;
  /// |add(alpha)| - |addcomplement|.
  int k = 0;
};

/// Slides every SSYT of shape gamma/delta (gamma in add(alpha), delta in
/// addrestrict(theta, alpha), entries at most max_entry, default |alpha|) into
/// the box delta/theta and checks the three-case bijection. Throws
/// std::invalid_argument unless theta is contained in alpha.
JdtBijectionResult verify_jdt_bijection(const Partition& alpha, const Partition& theta, int max_entry = 0);

}  // namespace symop
