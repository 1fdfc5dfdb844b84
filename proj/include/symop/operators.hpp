#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "symop/symfunc.hpp"

namespace symop {

enum class OpKind { id, u, d, k, kb };

struct Generator {
  OpKind kind = OpKind::id;
  SymFunc f;  // unused for id
};

/// coefficient * (g_1 g_2 ... g_r); g_r acts first.
struct OpTerm {
  Rational coefficient;
  std::vector<Generator> word;
};

/// Formal linear combination of generator words. Nothing is simplified
/// except dropping zero coefficients.
class OperatorExpr {
 public:
  OperatorExpr() = default;

  static OperatorExpr identity(const Rational& c = 1);
  static OperatorExpr generator(OpKind kind, const SymFunc& f);
  static OperatorExpr U(const SymFunc& f) { return generator(OpKind::u, f); }
  static OperatorExpr D(const SymFunc& f) { return generator(OpKind::d, f); }
  static OperatorExpr K(const SymFunc& f) { return generator(OpKind::k, f); }
  static OperatorExpr KB(const SymFunc& f) { return generator(OpKind::kb, f); }

  const std::vector<OpTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(OpTerm t);

  OperatorExpr& operator+=(const OperatorExpr& o);
  OperatorExpr& operator-=(const OperatorExpr& o);
  OperatorExpr& operator*=(const Rational& c);
  friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
  friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a -= b; }
  friend OperatorExpr operator*(const Rational& c, OperatorExpr a) { return a *= c; }
  /// Composition: (a * b)(g) = a(b(g)).
  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);

  /// Upper bound on how much any word can raise the degree.
  int max_degree_shift() const;

 private:
  std::vector<OpTerm> terms_;
};

/// `2*U(s[1])D(s[1]) - Id`
std::string to_string(const OperatorExpr& e);

SymFunc apply(const OperatorExpr& e, const SymFunc& g);
SymFunc apply(const Generator& gen, const SymFunc& g);

/// KB_f(g): each homogeneous component g_n is Kronecker-multiplied by the
/// straightened s_{(n-|lambda|, lambda)} for every term s_lambda of f.
SymFunc apply_kb(const SymFunc& f, const SymFunc& g);
/// Same operator through the vertex operator: (Gamma_1 f)_n * g_n.
SymFunc kb_via_gamma(const SymFunc& f, const SymFunc& g);
/// sum_{|lambda| <= max_deg} U(f[X-1] * s_lambda) D(s_lambda). The lambda = 0
/// term is emitted as a multiple of Id.
OperatorExpr kb_as_ud(const SymFunc& f, int max_deg);

/// Columns s_lambda with |lambda| <= dom_max, rows s_mu with |mu| <= cod_max.
struct TruncatedMatrix {
  std::vector<Partition> rows;
  std::vector<Partition> cols;
  std::vector<std::vector<Rational>> entries;  // entries[row][col]

  const Rational& at(std::size_t r, std::size_t c) const { return entries[r][c]; }
  bool is_zero() const;
  /// Restriction to rows of size a and columns of size b.
  TruncatedMatrix block(int row_degree, int col_degree) const;
  TruncatedMatrix transpose() const;
  friend bool operator==(const TruncatedMatrix&, const TruncatedMatrix&) = default;
};

/// Codomain bound is dom_max + max_degree_shift (at least 0).
TruncatedMatrix matrix_of(const OperatorExpr& e, int dom_max);
nlohmann::json to_json(const TruncatedMatrix& m);

/// Exact rank by fraction-free (Bareiss) elimination.
int rank(const std::vector<std::vector<Rational>>& m);
int rank(const TruncatedMatrix& m);

/// Rank of the stacked vectorized truncations, one column per expression.
int stacked_rank(const std::vector<OperatorExpr>& exprs, int dom_max);
/// Full column rank of the stacked truncations. true certifies independence;
/// false only means dependent at this truncation.
bool independent(const std::vector<OperatorExpr>& exprs, int dom_max);

}  // namespace symop
