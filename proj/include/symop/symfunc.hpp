#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "symop/partition.hpp"
#include "symop/rational.hpp"

namespace symop {

enum class Basis { schur, h, e, p };

/// "s", "h", "e", "p"
std::string_view basis_tag(Basis b);
/// Throws std::invalid_argument for an unknown tag.
Basis parse_basis(std::string_view tag);

using TermMap = std::map<Partition, Rational, GradedOrder>;

/// Finite linear combination of basis elements with rational coefficients.
/// Zero coefficients are never stored.
class SymFunc {
 public:
  SymFunc() = default;
  explicit SymFunc(Basis b) : basis_(b) {}
  SymFunc(Basis b, TermMap terms);

  static SymFunc schur(const Partition& lambda, const Rational& c = 1) { return basis_element(Basis::schur, lambda, c); }
  static SymFunc h(const Partition& lambda, const Rational& c = 1) { return basis_element(Basis::h, lambda, c); }
  static SymFunc e(const Partition& lambda, const Rational& c = 1) { return basis_element(Basis::e, lambda, c); }
  static SymFunc p(const Partition& lambda, const Rational& c = 1) { return basis_element(Basis::p, lambda, c); }
  static SymFunc constant(const Rational& c) { return schur(Partition{}, c); }
  static SymFunc basis_element(Basis b, const Partition& lambda, const Rational& c = 1);

  Basis basis() const { return basis_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Partition& lambda) const;
  /// Largest degree present, -1 for zero.
  int degree() const;
  /// Degrees with a nonzero component, ascending.
  std::vector<int> degrees() const;
  bool is_homogeneous() const { return degrees().size() <= 1; }
  SymFunc component(int n) const;

  void add_term(const Partition& lambda, const Rational& c);

  SymFunc& operator+=(const SymFunc& other);
  SymFunc& operator-=(const SymFunc& other);
  SymFunc& operator*=(const Rational& c);

  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator-(SymFunc a) { return a *= Rational(-1); }
  friend SymFunc operator*(const Rational& c, SymFunc f) { return f *= c; }
  friend SymFunc operator*(const SymFunc& f, const SymFunc& g);

  /// Equality as symmetric functions; differing bases are compared in Schur.
  friend bool operator==(const SymFunc& a, const SymFunc& b);

 private:
  Basis basis_ = Basis::schur;
  TermMap terms_;
};

/// Result of straightening a Jacobi-Trudi determinant: sign * s_shape.
struct SignedSchur {
  int sign = 0;
  std::optional<Partition> shape;

  friend bool operator==(const SignedSchur&, const SignedSchur&) = default;
};

SignedSchur jacobi_trudi(const IntSequence& alpha);
SymFunc to_symfunc(const SignedSchur& s);

SymFunc to_basis(const SymFunc& f, Basis target);
inline SymFunc to_schur(const SymFunc& f) { return to_basis(f, Basis::schur); }

/// Ring product. Schur products go through LR coefficients; p, h and e
/// products concatenate parts; mixed bases are multiplied in Schur.
SymFunc mul(const SymFunc& f, const SymFunc& g);
Rational hall_inner(const SymFunc& f, const SymFunc& g);
/// Kronecker product. Two p-basis inputs stay in p; otherwise Schur.
SymFunc kronecker(const SymFunc& f, const SymFunc& g);
/// D_by(f), the adjoint of multiplication by `by`. Result in Schur.
SymFunc skew(const SymFunc& f, const SymFunc& by);
SymFunc skew_schur(const SkewShape& shape);
/// Zero when inner is not contained in outer.
SymFunc skew_schur(const Partition& outer, const Partition& inner);

/// f[X-1]. A p-basis input keeps the p basis; anything else comes back in
/// Schur.
SymFunc shift_minus_one(const SymFunc& f);
/// Degree-n part of sigma[X] f[X-1].
SymFunc gamma1_component(const SymFunc& f, int n);

/// Partitions in canonical order rendered as `2*s[3,1] + s[2,2] - 1/2*s[1]`;
/// zero renders as `0`, the constant 1 as `s[0]`.
std::string to_string(const SymFunc& f);
nlohmann::json to_json(const SymFunc& f);
/// Throws std::invalid_argument on schema violations.
SymFunc symfunc_from_json(const nlohmann::json& j);

}  // namespace symop
