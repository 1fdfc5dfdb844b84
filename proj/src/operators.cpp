#include "symop/operators.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace symop {

namespace {

int min_degree(const SymFunc& f) {
  const auto d = f.degrees();
  return d.empty() ? 0 : d.front();
}

std::string_view kind_name(OpKind k) {
  switch (k) {
    case OpKind::id: return "Id";
    case OpKind::u: return "U";
    case OpKind::d: return "D";
    case OpKind::k: return "K";
    case OpKind::kb: return "KB";
  }
  return "?";
}

}  // namespace

OperatorExpr OperatorExpr::identity(const Rational& c) {
  OperatorExpr e;
  e.add_term({c, {}});
  return e;
}

OperatorExpr OperatorExpr::generator(OpKind kind, const SymFunc& f) {
  if (kind == OpKind::id) return identity();
  OperatorExpr e;
  e.add_term({1, {Generator{kind, f}}});
  return e;
}

void OperatorExpr::add_term(OpTerm t) {
  if (t.coefficient == 0) return;
  for (const Generator& g : t.word)
    if (g.kind != OpKind::id && g.f.is_zero()) return;
  // Id generators inside a word are redundant.
  std::erase_if(t.word, [](const Generator& g) { return g.kind == OpKind::id; });
  terms_.push_back(std::move(t));
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& o) {
  for (const OpTerm& t : o.terms_) add_term(t);
  return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& o) {
  for (OpTerm t : o.terms_) {
    t.coefficient = -t.coefficient;
    add_term(std::move(t));
  }
  return *this;
}

OperatorExpr& OperatorExpr::operator*=(const Rational& c) {
  if (c == 0) terms_.clear();
  for (OpTerm& t : terms_) t.coefficient *= c;
  return *this;
}

OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
  OperatorExpr out;
  for (const OpTerm& x : a.terms())
    for (const OpTerm& y : b.terms()) {
      OpTerm t{x.coefficient * y.coefficient, x.word};
      t.word.insert(t.word.end(), y.word.begin(), y.word.end());
      out.add_term(std::move(t));
    }
  return out;
}

int OperatorExpr::max_degree_shift() const {
  int best = 0;
  bool any = false;
  for (const OpTerm& t : terms_) {
    int hi = 0;
    for (const Generator& g : t.word) {
      if (g.kind == OpKind::u) hi += g.f.degree();
      if (g.kind == OpKind::d) hi -= min_degree(g.f);
    }
    best = any ? std::max(best, hi) : hi;
    any = true;
  }
  return best;
}

std::string to_string(const OperatorExpr& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const OpTerm& t : e.terms()) {
    const bool neg = t.coefficient < 0;
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    first = false;
    const Rational mag = abs(t.coefficient);
    if (t.word.empty()) {
      out += mag == 1 ? "Id" : mag.get_str() + "*Id";
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    for (const Generator& g : t.word) out += std::string(kind_name(g.kind)) + "(" + to_string(g.f) + ")";
  }
  return out;
}

SymFunc apply(const Generator& gen, const SymFunc& g) {
  switch (gen.kind) {
    case OpKind::id: return to_schur(g);
    case OpKind::u: return to_schur(mul(gen.f, g));
    case OpKind::d: return skew(g, gen.f);
    case OpKind::k: return to_schur(kronecker(gen.f, g));
    case OpKind::kb: return apply_kb(gen.f, g);
  }
  throw std::logic_error("unknown generator");
}

SymFunc apply(const OperatorExpr& e, const SymFunc& g) {
  const SymFunc gs = to_schur(g);
  SymFunc out;
  for (const OpTerm& t : e.terms()) {
    SymFunc v = gs;
    for (auto it = t.word.rbegin(); it != t.word.rend() && !v.is_zero(); ++it) v = apply(*it, v);
    out += t.coefficient * v;
  }
  return out;
}

SymFunc apply_kb(const SymFunc& f, const SymFunc& g) {
  const SymFunc fs = to_schur(f), gs = to_schur(g);
  SymFunc out;
  for (int n : gs.degrees()) {
    const SymFunc gn = gs.component(n);
    for (const auto& [lam, c] : fs.terms()) {
      IntSequence seq{n - lam.size()};
      seq.insert(seq.end(), lam.parts().begin(), lam.parts().end());
      const SignedSchur st = jacobi_trudi(seq);
      if (st.sign == 0) continue;
      out += Rational(c * st.sign) * kronecker(SymFunc::schur(*st.shape), gn);
    }
  }
  return out;
}

SymFunc kb_via_gamma(const SymFunc& f, const SymFunc& g) {
  const SymFunc gs = to_schur(g);
  SymFunc out;
  for (int n : gs.degrees()) out += kronecker(gamma1_component(f, n), gs.component(n));
  return out;
}

OperatorExpr kb_as_ud(const SymFunc& f, int max_deg) {
  const SymFunc shifted = to_schur(shift_minus_one(f));
  OperatorExpr out;
  for (const Partition& lam : partitions_up_to(max_deg)) {
    const SymFunc s = SymFunc::schur(lam);
    const SymFunc coef = kronecker(shifted, s);
    if (coef.is_zero()) continue;
    if (lam.empty()) out += OperatorExpr::identity(coef.coeff(lam));
    else out += OperatorExpr::U(coef) * OperatorExpr::D(s);
  }
  return out;
}

bool TruncatedMatrix::is_zero() const {
  for (const auto& row : entries)
    for (const Rational& x : row)
      if (x != 0) return false;
  return true;
}

TruncatedMatrix TruncatedMatrix::block(int row_degree, int col_degree) const {
  TruncatedMatrix out;
  std::vector<std::size_t> ri, ci;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].size() == row_degree) {
      ri.push_back(i);
      out.rows.push_back(rows[i]);
    }
  for (std::size_t j = 0; j < cols.size(); ++j)
    if (cols[j].size() == col_degree) {
      ci.push_back(j);
      out.cols.push_back(cols[j]);
    }
  for (std::size_t i : ri) {
    std::vector<Rational> row;
    for (std::size_t j : ci) row.push_back(entries[i][j]);
    out.entries.push_back(std::move(row));
  }
  return out;
}

TruncatedMatrix TruncatedMatrix::transpose() const {
  TruncatedMatrix out{cols, rows, {}};
  out.entries.assign(cols.size(), std::vector<Rational>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out.entries[j][i] = entries[i][j];
  return out;
}

TruncatedMatrix matrix_of(const OperatorExpr& e, int dom_max) {
  TruncatedMatrix m;
  m.cols = partitions_up_to(dom_max);
  m.rows = partitions_up_to(std::max(0, dom_max + e.max_degree_shift()));
  std::map<Partition, std::size_t, GradedOrder> index;
  for (std::size_t i = 0; i < m.rows.size(); ++i) index.emplace(m.rows[i], i);
  m.entries.assign(m.rows.size(), std::vector<Rational>(m.cols.size()));
  for (std::size_t j = 0; j < m.cols.size(); ++j) {
    const SymFunc image = apply(e, SymFunc::schur(m.cols[j]));
    for (const auto& [mu, c] : image.terms()) {
      const auto it = index.find(mu);
      if (it == index.end()) throw std::logic_error("matrix_of: image escapes the codomain bound");
      m.entries[it->second][j] = c;
    }
  }
  return m;
}

nlohmann::json to_json(const TruncatedMatrix& m) {
  nlohmann::json j;
  j["rows"] = nlohmann::json::array();
  j["cols"] = nlohmann::json::array();
  for (const Partition& p : m.rows) j["rows"].push_back(to_string(p));
  for (const Partition& p : m.cols) j["cols"].push_back(to_string(p));
  j["entries"] = nlohmann::json::array();
  for (const auto& row : m.entries) {
    nlohmann::json r = nlohmann::json::array();
    for (const Rational& x : row) r.push_back(x.get_str());
    j["entries"].push_back(std::move(r));
  }
  return j;
}

int rank(const std::vector<std::vector<Rational>>& m) {
  if (m.empty()) return 0;
  const std::size_t nr = m.size(), nc = m.front().size();
  std::vector<std::vector<Integer>> a(nr, std::vector<Integer>(nc));
  for (std::size_t i = 0; i < nr; ++i) {
    Integer l = 1;
    for (const Rational& x : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (std::size_t j = 0; j < nc; ++j) a[i][j] = m[i][j].get_num() * (l / m[i][j].get_den());
  }
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && a[p][c] == 0) ++p;
    if (p == nr) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        Integer v = a[i][j] * a[r][c] - a[i][c] * a[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

int rank(const TruncatedMatrix& m) { return rank(m.entries); }

int stacked_rank(const std::vector<OperatorExpr>& exprs, int dom_max) {
  // Coordinates (column lambda, row mu) of every expression, one column each.
  std::map<std::pair<Partition, Partition>, std::vector<Rational>> coords;
  const auto domain = partitions_up_to(dom_max);
  for (std::size_t k = 0; k < exprs.size(); ++k)
    for (const Partition& lam : domain) {
      const SymFunc image = apply(exprs[k], SymFunc::schur(lam));
      for (const auto& [mu, c] : image.terms()) {
        auto& row = coords[{lam, mu}];
        row.resize(exprs.size());
        row[k] = c;
      }
    }
  std::vector<std::vector<Rational>> m;
  m.reserve(coords.size());
  for (auto& [key, row] : coords) m.push_back(std::move(row));
  return rank(m);
}

bool independent(const std::vector<OperatorExpr>& exprs, int dom_max) {
  return stacked_rank(exprs, dom_max) == static_cast<int>(exprs.size());
}

}  // namespace symop
