#include "symop/symfunc.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "memo.hpp"
#include "symop/coeffs.hpp"

namespace symop {

std::string_view basis_tag(Basis b) {
  switch (b) {
    case Basis::schur: return "s";
    case Basis::h: return "h";
    case Basis::e: return "e";
    case Basis::p: return "p";
  }
  return "?";
}

Basis parse_basis(std::string_view tag) {
  if (tag == "s") return Basis::schur;
  if (tag == "h") return Basis::h;
  if (tag == "e") return Basis::e;
  if (tag == "p") return Basis::p;
  throw std::invalid_argument("unknown basis '" + std::string(tag) + "'");
}

SymFunc::SymFunc(Basis b, TermMap terms) : basis_(b), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

SymFunc SymFunc::basis_element(Basis b, const Partition& lambda, const Rational& c) {
  SymFunc f(b);
  f.add_term(lambda, c);
  return f;
}

Rational SymFunc::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

int SymFunc::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.size(); }

std::vector<int> SymFunc::degrees() const {
  std::vector<int> out;
  for (const auto& [lam, c] : terms_)
    if (out.empty() || out.back() != lam.size()) out.push_back(lam.size());
  return out;
}

SymFunc SymFunc::component(int n) const {
  SymFunc out(basis_);
  for (const auto& [lam, c] : terms_)
    if (lam.size() == n) out.terms_.emplace(lam, c);
  return out;
}

void SymFunc::add_term(const Partition& lambda, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) basis_ = other.basis_;
  if (basis_ != other.basis_) {
    *this = to_schur(*this);
    return *this += to_schur(other);
  }
  for (const auto& [lam, c] : other.terms_) add_term(lam, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other) { return *this += -other; }

SymFunc& SymFunc::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [lam, v] : terms_) v *= c;
  return *this;
}

SymFunc operator*(const SymFunc& f, const SymFunc& g) { return mul(f, g); }

bool operator==(const SymFunc& a, const SymFunc& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.basis_ == b.basis_) return a.terms_ == b.terms_;
  return to_schur(a).terms_ == to_schur(b).terms_;
}

SignedSchur jacobi_trudi(const IntSequence& alpha) {
  const std::size_t n = alpha.size();
  std::vector<std::pair<int, std::size_t>> beta(n);
  for (std::size_t i = 0; i < n; ++i) beta[i] = {alpha[i] - static_cast<int>(i + 1), i};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (beta[i].first == beta[j].first) return {};
  // Insertion sort keeps track of the permutation sign.
  int sign = 1;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i; j > 0 && beta[j - 1].first < beta[j].first; --j) {
      std::swap(beta[j - 1], beta[j]);
      sign = -sign;
    }
  std::vector<int> parts(n);
  for (std::size_t i = 0; i < n; ++i) parts[i] = beta[i].first + static_cast<int>(i + 1);
  if (n > 0 && parts.back() < 0) return {};
  return {sign, Partition(std::move(parts))};
}

SymFunc to_symfunc(const SignedSchur& s) {
  if (s.sign == 0) return SymFunc();
  return SymFunc::schur(*s.shape, s.sign);
}

namespace {

using PairKey = std::pair<Partition, Partition>;

// h_mu in Schur via repeated horizontal strips.
TermMap h_to_schur(const Partition& mu) {
  TermMap cur{{Partition{}, 1}};
  for (int k : mu.parts()) {
    TermMap next;
    for (const auto& [lam, c] : cur)
      for (const Partition& nu : add_horizontal_strip(lam, k)) next[nu] += c;
    cur = std::move(next);
  }
  return cur;
}

TermMap omega(const TermMap& t) {
  TermMap out;
  for (const auto& [lam, c] : t) out.emplace(conjugate(lam), c);
  return out;
}

void jt_expand(const Partition& lambda, int row, std::vector<bool>& used, int sign, std::vector<int>& parts,
               TermMap& out) {
  const int len = lambda.length();
  if (row == len) {
    std::vector<int> sorted = parts;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    out[Partition(std::move(sorted))] += sign;
    return;
  }
  int free_before = 0;
  for (int j = 0; j < len; ++j) {
    if (used[static_cast<std::size_t>(j)]) continue;
    const int k = lambda[static_cast<std::size_t>(row)] - row + j;
    const int s = free_before % 2 ? -sign : sign;
    ++free_before;
    if (k < 0) continue;
    used[static_cast<std::size_t>(j)] = true;
    if (k > 0) parts.push_back(k);
    jt_expand(lambda, row + 1, used, s, parts, out);
    if (k > 0) parts.pop_back();
    used[static_cast<std::size_t>(j)] = false;
  }
}

// s_lambda in h via det(h_{lambda_i - i + j}).
TermMap schur_to_h(const Partition& lambda) {
  TermMap out;
  std::vector<bool> used(static_cast<std::size_t>(lambda.length()), false);
  std::vector<int> parts;
  jt_expand(lambda, 0, used, 1, parts, out);
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

TermMap schur_to_p(const Partition& lambda) {
  const CharacterTable& t = character_table(lambda.size());
  const auto& row = t.chi[t.index(lambda)];
  TermMap out;
  for (std::size_t r = 0; r < t.partitions.size(); ++r)
    if (row[r] != 0) out.emplace(t.partitions[r], ratio(row[r], t.z[r]));
  return out;
}

TermMap p_to_schur(const Partition& rho) {
  const CharacterTable& t = character_table(rho.size());
  const std::size_t r = t.index(rho);
  TermMap out;
  for (std::size_t l = 0; l < t.partitions.size(); ++l)
    if (t.chi[l][r] != 0) out.emplace(t.partitions[l], Rational(t.chi[l][r]));
  return out;
}

const TermMap& element_to_schur(Basis from, const Partition& lambda) {
  static detail::Memo<Partition, TermMap> h_memo, e_memo, p_memo;
  switch (from) {
    case Basis::h: return h_memo.get(lambda, [&] { return h_to_schur(lambda); });
    case Basis::e: return e_memo.get(lambda, [&] { return omega(h_to_schur(lambda)); });
    case Basis::p: return p_memo.get(lambda, [&] { return p_to_schur(lambda); });
    case Basis::schur: break;
  }
  throw std::logic_error("element_to_schur: schur source");
}

const TermMap& schur_to_element(Basis to, const Partition& lambda) {
  static detail::Memo<Partition, TermMap> h_memo, e_memo, p_memo;
  switch (to) {
    case Basis::h: return h_memo.get(lambda, [&] { return schur_to_h(lambda); });
    // s_lambda = omega(s_lambda'), and omega sends h_mu to e_mu.
    case Basis::e: return e_memo.get(lambda, [&] { return schur_to_h(conjugate(lambda)); });
    case Basis::p: return p_memo.get(lambda, [&] { return schur_to_p(lambda); });
    case Basis::schur: break;
  }
  throw std::logic_error("schur_to_element: schur target");
}

void add_scaled(TermMap& out, const TermMap& src, const Rational& c) {
  for (const auto& [lam, v] : src) out[lam] += c * v;
}

const TermMap& schur_product(const Partition& a, const Partition& b) {
  static detail::Memo<PairKey, TermMap> memo;
  // c^nu_{lambda mu} is symmetric; enumerate over the larger shape.
  const bool swap = GradedOrder{}(a, b);
  const Partition& lambda = swap ? b : a;
  const Partition& mu = swap ? a : b;
  return memo.get({lambda, mu}, [&] {
    TermMap out;
    for (const Partition& nu : superpartitions(lambda, mu.size())) {
      if (!contains(mu, nu)) continue;
      const Integer c = lr_coeff(nu, lambda, mu);
      if (c != 0) out.emplace(nu, Rational(c));
    }
    return out;
  });
}

// D_{s_mu}(s_lambda) = sum_nu c^lambda_{mu nu} s_nu.
const TermMap& schur_skew(const Partition& lambda, const Partition& mu) {
  static detail::Memo<PairKey, TermMap> memo;
  return memo.get({lambda, mu}, [&] {
    TermMap out;
    if (!contains(mu, lambda)) return out;
    for (const Partition& nu : subpartitions(lambda, mu.size())) {
      const Integer c = lr_coeff(lambda, mu, nu);
      if (c != 0) out.emplace(nu, Rational(c));
    }
    return out;
  });
}

const TermMap& schur_kronecker(const Partition& a, const Partition& b) {
  static detail::Memo<PairKey, TermMap> memo;
  const bool swap = a < b;
  const Partition& lambda = swap ? b : a;
  const Partition& mu = swap ? a : b;
  return memo.get({lambda, mu}, [&] {
    const CharacterTable& t = character_table(lambda.size());
    const auto& x = t.chi[t.index(lambda)];
    const auto& y = t.chi[t.index(mu)];
    std::vector<Rational> w(t.partitions.size());
    for (std::size_t r = 0; r < w.size(); ++r) w[r] = ratio(x[r] * y[r], t.z[r]);
    TermMap out;
    for (std::size_t l = 0; l < t.partitions.size(); ++l) {
      Rational c = 0;
      for (std::size_t r = 0; r < w.size(); ++r) c += w[r] * t.chi[l][r];
      if (c != 0) out.emplace(t.partitions[l], c);
    }
    return out;
  });
}

}  // namespace

SymFunc to_basis(const SymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  TermMap schur;
  if (f.basis() == Basis::schur) schur = f.terms();
  else
    for (const auto& [lam, c] : f.terms()) add_scaled(schur, element_to_schur(f.basis(), lam), c);
  if (target == Basis::schur) return SymFunc(Basis::schur, std::move(schur));
  TermMap out;
  for (const auto& [lam, c] : schur) add_scaled(out, schur_to_element(target, lam), c);
  return SymFunc(target, std::move(out));
}

SymFunc mul(const SymFunc& f, const SymFunc& g) {
  if (f.is_zero() || g.is_zero()) return SymFunc(f.basis());
  if (f.basis() == g.basis() && f.basis() != Basis::schur) {
    TermMap out;
    for (const auto& [a, x] : f.terms())
      for (const auto& [b, y] : g.terms()) out[merge_parts(a, b)] += x * y;
    return SymFunc(f.basis(), std::move(out));
  }
  const SymFunc fs = to_schur(f), gs = to_schur(g);
  TermMap out;
  for (const auto& [a, x] : fs.terms())
    for (const auto& [b, y] : gs.terms()) add_scaled(out, schur_product(a, b), x * y);
  return SymFunc(Basis::schur, std::move(out));
}

Rational hall_inner(const SymFunc& f, const SymFunc& g) {
  Rational out = 0;
  if (f.basis() == Basis::p && g.basis() == Basis::p) {
    for (const auto& [lam, c] : f.terms()) out += c * g.coeff(lam) * z_factor(lam);
    return out;
  }
  const SymFunc fs = to_schur(f), gs = to_schur(g);
  for (const auto& [lam, c] : fs.terms()) out += c * gs.coeff(lam);
  return out;
}

SymFunc kronecker(const SymFunc& f, const SymFunc& g) {
  if (f.basis() == Basis::p && g.basis() == Basis::p) {
    TermMap out;
    for (const auto& [lam, c] : f.terms()) {
      const Rational d = g.coeff(lam);
      if (d != 0) out.emplace(lam, c * d * z_factor(lam));
    }
    return SymFunc(Basis::p, std::move(out));
  }
  const SymFunc fs = to_schur(f), gs = to_schur(g);
  TermMap out;
  for (const auto& [a, x] : fs.terms())
    for (const auto& [b, y] : gs.terms())
      if (a.size() == b.size()) add_scaled(out, schur_kronecker(a, b), x * y);
  return SymFunc(Basis::schur, std::move(out));
}

SymFunc skew(const SymFunc& f, const SymFunc& by) {
  const SymFunc fs = to_schur(f), bs = to_schur(by);
  TermMap out;
  for (const auto& [lam, x] : fs.terms())
    for (const auto& [mu, y] : bs.terms())
      if (mu.size() <= lam.size()) add_scaled(out, schur_skew(lam, mu), x * y);
  return SymFunc(Basis::schur, std::move(out));
}

SymFunc skew_schur(const SkewShape& shape) { return skew_schur(shape.outer(), shape.inner()); }

SymFunc skew_schur(const Partition& outer, const Partition& inner) {
  return SymFunc(Basis::schur, schur_skew(outer, inner));
}

SymFunc shift_minus_one(const SymFunc& f) {
  const SymFunc fp = to_basis(f, Basis::p);
  TermMap out;
  for (const auto& [rho, c] : fp.terms()) {
    const auto parts = rho.parts();
    const std::size_t len = parts.size();
    // prod_i (p_{rho_i} - 1) expanded over the subsets of kept parts.
    for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
      std::vector<int> kept;
      for (std::size_t i = 0; i < len; ++i)
        if (mask >> i & 1) kept.push_back(parts[i]);
      const bool odd = (len - kept.size()) % 2;
      out[Partition(std::move(kept))] += odd ? -c : c;
    }
  }
  SymFunc result(Basis::p, std::move(out));
  return f.basis() == Basis::p ? result : to_schur(result);
}

SymFunc gamma1_component(const SymFunc& f, int n) {
  const SymFunc g = to_schur(shift_minus_one(f));
  SymFunc out;
  for (int j = 0; j <= n; ++j) {
    const SymFunc part = g.component(n - j);
    if (!part.is_zero()) out += mul(SymFunc::schur(Partition::row(j)), part);
  }
  return out;
}

std::string to_string(const SymFunc& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const std::string tag(basis_tag(f.basis()));
  bool first = true;
  for (const auto& [lam, c] : f.terms()) {
    const bool neg = c < 0;
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    first = false;
    const Rational mag = abs(c);
    if (mag != 1) out += mag.get_str() + "*";
    out += tag + "[" + to_string(lam) + "]";
  }
  return out;
}

nlohmann::json to_json(const SymFunc& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [lam, c] : f.terms()) terms.push_back({{"part", lam.vec()}, {"coef", c.get_str()}});
  return {{"basis", basis_tag(f.basis())}, {"terms", terms}};
}

SymFunc symfunc_from_json(const nlohmann::json& j) {
  try {
    SymFunc f(parse_basis(j.at("basis").get<std::string>()));
    for (const auto& t : j.at("terms")) {
      if (!t.at("coef").is_string()) throw std::invalid_argument("coef must be a string");
      f.add_term(Partition(t.at("part").get<std::vector<int>>()), parse_rational(t.at("coef").get<std::string>()));
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed SymFunc JSON: ") + e.what());
  }
}

}  // namespace symop
