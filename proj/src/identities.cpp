#include "symop/identities.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <thread>

#include "symop/coeffs.hpp"
#include "symop/operators.hpp"
#include "symop/skew_rules.hpp"

namespace symop {

const Partition& IdentityParams::part(std::string_view name) const {
  for (const auto& [k, v] : partitions)
    if (k == name) return v;
  throw std::invalid_argument("missing partition parameter '" + std::string(name) + "'");
}

int IdentityParams::integer(std::string_view name) const {
  for (const auto& [k, v] : integers)
    if (k == name) return v;
  throw std::invalid_argument("missing integer parameter '" + std::string(name) + "'");
}

std::string to_string(const IdentityParams& p) {
  std::string out;
  for (const auto& [k, v] : p.partitions) out += (out.empty() ? "" : " ") + k + "=" + to_string(v);
  for (const auto& [k, v] : p.integers) out += (out.empty() ? "" : " ") + k + "=" + std::to_string(v);
  return out;
}

IdentityParams parse_params(std::string_view text, const std::vector<std::string>& int_names) {
  IdentityParams p;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == ';') {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < text.size() && text[end] != ' ' && text[end] != ';') ++end;
    const std::string_view tok = text.substr(i, end - i);
    const auto eq = tok.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw std::invalid_argument("malformed parameter '" + std::string(tok) + "', expected name=value");
    const std::string name(tok.substr(0, eq));
    const std::string_view value = tok.substr(eq + 1);
    if (std::find(int_names.begin(), int_names.end(), name) != int_names.end()) {
      const Partition v = parse_partition(value);
      if (v.length() > 1) throw std::invalid_argument("parameter '" + name + "' must be an integer");
      p.integers.emplace_back(name, v.empty() ? 0 : v[0]);
    } else {
      p.partitions.emplace_back(name, parse_partition(value));
    }
    i = end;
  }
  return p;
}

namespace {

SymFunc S(const Partition& p) { return SymFunc::schur(p); }
SymFunc S(const IntSequence& seq) { return to_symfunc(jacobi_trudi(seq)); }
OperatorExpr U(const SymFunc& f) { return OperatorExpr::U(f); }
OperatorExpr D(const SymFunc& f) { return OperatorExpr::D(f); }
OperatorExpr K(const SymFunc& f) { return OperatorExpr::K(f); }
OperatorExpr KB(const SymFunc& f) { return OperatorExpr::KB(f); }

// h_n as a Schur function, zero for negative n.
SymFunc h(int n) { return n < 0 ? SymFunc() : S(Partition::row(n)); }
SymFunc e(int n) { return n < 0 ? SymFunc() : S(Partition::column(n)); }

std::vector<Partition> contained_in(const Partition& a) {
  std::vector<Partition> out;
  for (const Partition& l : partitions_up_to(a.size()))
    if (contains(l, a)) out.push_back(l);
  return out;
}

std::vector<Partition> contained_in_both(const Partition& a, const Partition& b) {
  std::vector<Partition> out;
  for (const Partition& l : contained_in(a))
    if (contains(l, b)) out.push_back(l);
  return out;
}

SymFunc apply_to(const OperatorExpr& op, const Partition& gamma) { return apply(op, S(gamma)); }

std::vector<Comparison> on_test_vectors(const OperatorExpr& lhs, const std::vector<std::pair<std::string, OperatorExpr>>& rhs,
                                        int max_g) {
  std::vector<Comparison> out;
  for (const Partition& g : partitions_up_to(max_g)) {
    const SymFunc left = apply_to(lhs, g);
    for (const auto& [name, op] : rhs) out.push_back({name + " gamma=" + to_string(g), left, apply_to(op, g)});
  }
  return out;
}

std::vector<Comparison> on_test_vectors(const OperatorExpr& lhs, const OperatorExpr& rhs, int max_g) {
  return on_test_vectors(lhs, {{"rhs", rhs}}, max_g);
}

// Instance generators.

std::vector<IdentityParams> ab_pairs(const SuiteBounds& b) {
  std::vector<IdentityParams> out;
  for (const Partition& a : partitions_up_to(b.max_ab))
    for (const Partition& be : partitions_up_to(b.max_ab)) out.push_back({{{"alpha", a}, {"beta", be}}, {}});
  return out;
}

std::vector<IdentityParams> beta_fg(const SuiteBounds& b) {
  std::vector<IdentityParams> out;
  for (const Partition& be : partitions_up_to(b.max_ab))
    for (const Partition& f : partitions_up_to(b.max_g))
      for (const Partition& g : partitions_up_to(b.max_g - f.size())) out.push_back({{{"beta", be}, {"f", f}, {"g", g}}, {}});
  return out;
}

std::vector<IdentityParams> mn_pairs(const SuiteBounds& b) {
  std::vector<IdentityParams> out;
  for (int m = 0; m <= b.max_ab; ++m)
    for (int n = 0; n <= b.max_ab; ++n) out.push_back({{}, {{"m", m}, {"n", n}}});
  return out;
}

std::vector<IdentityParams> no_params(const SuiteBounds&) { return {IdentityParams{}}; }

std::vector<IdentityParams> alphas(const SuiteBounds& b) {
  std::vector<IdentityParams> out;
  for (const Partition& a : partitions_up_to(b.max_g)) out.push_back({{{"alpha", a}}, {}});
  return out;
}

std::vector<IdentityParams> alpha_theta(const SuiteBounds& b) {
  std::vector<IdentityParams> out;
  for (const Partition& a : partitions_up_to(b.max_g))
    for (const Partition& t : contained_in(a)) out.push_back({{{"alpha", a}, {"theta", t}}, {}});
  return out;
}

// Operator sides shared by several entries.

OperatorExpr rhs_du(const Partition& a, const Partition& b, bool skip_empty) {
  OperatorExpr out;
  for (const Partition& l : contained_in_both(a, b)) {
    if (skip_empty && l.empty()) continue;
    out += U(skew_schur(a, l)) * D(skew_schur(b, l));
  }
  return out;
}

OperatorExpr rhs_ud(const Partition& a, const Partition& b, bool skip_empty) {
  OperatorExpr out;
  for (const Partition& l : contained_in(a)) {
    if (skip_empty && l.empty()) continue;
    const Partition lc = conjugate(l);
    if (!contains(lc, b)) continue;
    const Rational sign = l.size() % 2 ? -1 : 1;
    out += sign * (D(skew_schur(b, lc)) * U(skew_schur(a, l)));
  }
  return out;
}

// (s_{beta/nu} * s_tau) s_{alpha/tau} over nu in beta, tau in alpha.
template <class Emit>
void kb_terms(const Partition& a, const Partition& b, bool skip_identity, const Emit& emit) {
  for (const Partition& nu : contained_in(b))
    for (const Partition& tau : contained_in(a)) {
      if (skip_identity && tau.empty() && nu == b) continue;
      if (tau.size() != b.size() - nu.size()) continue;
      const SymFunc coef = mul(kronecker(skew_schur(b, nu), S(tau)), skew_schur(a, tau));
      if (!coef.is_zero()) emit(coef, nu);
    }
}

OperatorExpr rhs_kbu(const Partition& a, const Partition& b, bool skip_identity) {
  OperatorExpr out;
  kb_terms(a, b, skip_identity, [&](const SymFunc& c, const Partition& nu) { out += U(c) * KB(S(nu)); });
  return out;
}

OperatorExpr rhs_dkb(const Partition& a, const Partition& b, bool skip_identity) {
  OperatorExpr out;
  kb_terms(a, b, skip_identity, [&](const SymFunc& c, const Partition& nu) { out += KB(S(nu)) * D(c); });
  return out;
}

OperatorExpr rhs_ku(const Partition& a, const Partition& b) {
  OperatorExpr out;
  for (const Partition& l : contained_in(b)) {
    const SymFunc c = kronecker(skew_schur(b, l), S(a));
    if (!c.is_zero()) out += U(c) * K(S(l));
  }
  return out;
}

OperatorExpr rhs_dk(const Partition& a, const Partition& b) {
  OperatorExpr out;
  for (const Partition& l : contained_in(b)) {
    const SymFunc c = kronecker(skew_schur(b, l), S(a));
    if (!c.is_zero()) out += K(S(l)) * D(c);
  }
  return out;
}

// Structure-constant forms, coefficients keyed by (mu, nu).
using PairCoeffs = std::map<std::pair<Partition, Partition>, Integer>;

PairCoeffs cor_du(const Partition& a, const Partition& b, bool twisted) {
  PairCoeffs out;
  for (const Partition& l : contained_in(a)) {
    const Partition lb = twisted ? conjugate(l) : l;
    if (!contains(lb, b)) continue;
    const int sign = twisted && l.size() % 2 ? -1 : 1;
    for (const Partition& mu : partitions_of(a.size() - l.size())) {
      const Integer x = lr_coeff(a, l, mu);
      if (x == 0) continue;
      for (const Partition& nu : partitions_of(b.size() - l.size())) {
        const Integer y = lr_coeff(b, lb, nu);
        if (y != 0) out[{mu, nu}] += sign * x * y;
      }
    }
  }
  return out;
}

PairCoeffs cor_ku(const Partition& a, const Partition& b) {
  PairCoeffs out;
  for (const Partition& l : contained_in(b)) {
    if (l.size() != a.size()) continue;
    for (const Partition& mu : partitions_of(a.size())) {
      const Integer g = kron_coeff(a, l, mu);
      if (g == 0) continue;
      for (const Partition& nu : partitions_of(b.size() - l.size())) {
        const Integer c = lr_coeff(b, l, nu);
        if (c != 0) out[{mu, nu}] += g * c;
      }
    }
  }
  return out;
}

PairCoeffs cor_kbu(const Partition& a, const Partition& b) {
  PairCoeffs out;
  for (const Partition& tau : contained_in(a))
    for (const Partition& sigma : partitions_of(a.size() - tau.size())) {
      const Integer c1 = lr_coeff(a, tau, sigma);
      if (c1 == 0) continue;
      for (const Partition& l : contained_in(b)) {
        if (l.size() != tau.size()) continue;
        for (const Partition& nu : partitions_of(b.size() - l.size())) {
          const Integer c2 = lr_coeff(b, l, nu);
          if (c2 == 0) continue;
          for (const Partition& theta : partitions_of(tau.size())) {
            const Integer g = kron_coeff(l, tau, theta);
            if (g == 0) continue;
            for (const Partition& mu : partitions_of(a.size())) {
              const Integer c3 = lr_coeff(mu, theta, sigma);
              if (c3 != 0) out[{mu, nu}] += g * c1 * c2 * c3;
            }
          }
        }
      }
    }
  return out;
}

// Builds sum coef * first(mu) second(nu) from a coefficient table.
OperatorExpr from_pairs(const PairCoeffs& coeffs, OpKind left_kind, OpKind right_kind, bool mu_left) {
  OperatorExpr out;
  for (const auto& [key, c] : coeffs) {
    if (c == 0) continue;
    const auto& [mu, nu] = key;
    const Partition& l = mu_left ? mu : nu;
    const Partition& r = mu_left ? nu : mu;
    out += Rational(c) * (OperatorExpr::generator(left_kind, S(l)) * OperatorExpr::generator(right_kind, S(r)));
  }
  return out;
}

std::vector<Comparison> thm_main(int which, const IdentityParams& p, const SuiteBounds& b) {
  const Partition& a = p.part("alpha");
  const Partition& be = p.part("beta");
  switch (which) {
    case 1: return on_test_vectors(D(S(be)) * U(S(a)), rhs_du(a, be, false), b.max_g);
    case 2: return on_test_vectors(U(S(a)) * D(S(be)), rhs_ud(a, be, false), b.max_g);
    case 3: return on_test_vectors(K(S(be)) * U(S(a)), rhs_ku(a, be), b.max_g);
    case 4: return on_test_vectors(D(S(a)) * K(S(be)), rhs_dk(a, be), b.max_g);
    case 5: return on_test_vectors(KB(S(be)) * U(S(a)), rhs_kbu(a, be, false), b.max_g);
    case 6: return on_test_vectors(D(S(a)) * KB(S(be)), rhs_dkb(a, be, false), b.max_g);
  }
  throw std::logic_error("thm_main index");
}

// Structure-constant form against both the operator product and the sum form.
std::vector<Comparison> thm_main_cor(int which, const IdentityParams& p, const SuiteBounds& b) {
  const Partition& a = p.part("alpha");
  const Partition& be = p.part("beta");
  OperatorExpr lhs, sum_form, cor;
  switch (which) {
    case 1:
      lhs = D(S(be)) * U(S(a));
      sum_form = rhs_du(a, be, false);
      cor = from_pairs(cor_du(a, be, false), OpKind::u, OpKind::d, true);
      break;
    case 2:
      lhs = U(S(a)) * D(S(be));
      sum_form = rhs_ud(a, be, false);
      cor = from_pairs(cor_du(a, be, true), OpKind::d, OpKind::u, false);
      break;
    case 3:
      lhs = K(S(be)) * U(S(a));
      sum_form = rhs_ku(a, be);
      cor = from_pairs(cor_ku(a, be), OpKind::u, OpKind::k, true);
      break;
    case 4:
      lhs = D(S(a)) * K(S(be));
      sum_form = rhs_dk(a, be);
      cor = from_pairs(cor_ku(a, be), OpKind::k, OpKind::d, false);
      break;
    case 5:
      lhs = KB(S(be)) * U(S(a));
      sum_form = rhs_kbu(a, be, false);
      cor = from_pairs(cor_kbu(a, be), OpKind::u, OpKind::kb, true);
      break;
    case 6:
      lhs = D(S(a)) * KB(S(be));
      sum_form = rhs_dkb(a, be, false);
      cor = from_pairs(cor_kbu(a, be), OpKind::kb, OpKind::d, false);
      break;
    default: throw std::logic_error("thm_main_cor index");
  }
  std::vector<Comparison> out;
  for (const Partition& g : partitions_up_to(b.max_g)) {
    const SymFunc c = apply_to(cor, g);
    out.push_back({"vs sum form gamma=" + to_string(g), apply_to(sum_form, g), c});
    out.push_back({"vs product gamma=" + to_string(g), apply_to(lhs, g), c});
  }
  return out;
}

std::vector<Comparison> commutators(int which, const IdentityParams& p, const SuiteBounds& b) {
  const Partition& a = p.part("alpha");
  const Partition& be = p.part("beta");
  switch (which) {
    case 1: {
      const OperatorExpr comm = D(S(be)) * U(S(a)) - U(S(a)) * D(S(be));
      const OperatorExpr first = rhs_du(a, be, true);
      OperatorExpr second;
      second -= rhs_ud(a, be, true);
      auto out = on_test_vectors(comm, {{"U-then-D", first}, {"D-then-U", second}}, b.max_g);
      for (const auto& c : on_test_vectors(first, {{"forms", second}}, b.max_g)) out.push_back(c);
      return out;
    }
    case 2: return on_test_vectors(KB(S(be)) * U(S(a)) - U(S(a)) * KB(S(be)), rhs_kbu(a, be, true), b.max_g);
    case 3: return on_test_vectors(D(S(a)) * KB(S(be)) - KB(S(be)) * D(S(a)), rhs_dkb(a, be, true), b.max_g);
  }
  throw std::logic_error("commutators index");
}

std::vector<Comparison> foulkes(const IdentityParams& p, const SuiteBounds&) {
  const Partition &be = p.part("beta"), &f = p.part("f"), &g = p.part("g");
  const SymFunc lhs = skew(mul(S(f), S(g)), S(be));
  SymFunc rhs;
  for (const Partition& l : contained_in(be))
    for (const Partition& mu : partitions_of(be.size() - l.size())) {
      const Integer c = lr_coeff(be, l, mu);
      if (c != 0) rhs += Rational(c) * mul(skew(S(f), S(l)), skew(S(g), S(mu)));
    }
  return {{"", lhs, rhs}};
}

std::vector<Comparison> littlewood(const IdentityParams& p, const SuiteBounds&) {
  const Partition &be = p.part("beta"), &f = p.part("f"), &g = p.part("g");
  const SymFunc lhs = kronecker(S(be), mul(S(f), S(g)));
  SymFunc rhs;
  for (const Partition& l : contained_in(be))
    for (const Partition& mu : partitions_of(be.size() - l.size())) {
      const Integer c = lr_coeff(be, l, mu);
      if (c != 0) rhs += Rational(c) * mul(kronecker(S(mu), S(f)), kronecker(S(l), S(g)));
    }
  // Also the operator identity K_beta U_f applied to s_g.
  return {{"", lhs, rhs}, {"vs sum form", lhs, apply_to(rhs_ku(f, be), g)}};
}

std::vector<Comparison> similar(const IdentityParams& p, const SuiteBounds&) {
  const Partition &be = p.part("beta"), &f = p.part("f"), &g = p.part("g");
  const SymFunc lhs = skew(kronecker(S(f), S(g)), S(be));
  SymFunc rhs;
  for (const Partition& l : partitions_of(be.size()))
    for (const Partition& mu : partitions_of(be.size())) {
      const Integer c = kron_coeff(be, l, mu);
      if (c != 0) rhs += Rational(c) * kronecker(skew(S(f), S(l)), skew(S(g), S(mu)));
    }
  return {{"", lhs, rhs}};
}

std::vector<Comparison> reverse_foulkes(const IdentityParams& p, const SuiteBounds& b) {
  const Partition& a = p.part("alpha");
  const Partition& be = p.part("beta");
  std::vector<Comparison> out;
  for (const Partition& g : partitions_up_to(b.max_g)) {
    const SymFunc lhs = mul(S(a), skew_schur(g, be));
    SymFunc rhs;
    for (const Partition& l : contained_in(a)) {
      const Partition lc = conjugate(l);
      if (!contains(lc, be)) continue;
      const Rational sign = l.size() % 2 ? -1 : 1;
      rhs += sign * skew(mul(skew_schur(a, l), S(g)), skew_schur(be, lc));
    }
    out.push_back({"gamma=" + to_string(g), lhs, rhs});
    out.push_back({"vs operator gamma=" + to_string(g), lhs, apply_to(U(S(a)) * D(S(be)), g)});
  }
  return out;
}

std::vector<Comparison> gessel(int which, const IdentityParams& p, const SuiteBounds& b) {
  const int m = p.integer("m"), n = p.integer("n");
  auto Uh = [](int k) { return U(h(k)); };
  auto Dh = [](int k) { return D(h(k)); };
  switch (which) {
    case 1: {
      OperatorExpr rhs;
      for (int i = 0; i <= std::min(m, n); ++i) rhs += Uh(m - i) * Dh(n - i);
      return on_test_vectors(Dh(n) * Uh(m), rhs, b.max_g);
    }
    case 2: return on_test_vectors(Uh(m) * Dh(n), Dh(n) * Uh(m) - Dh(n - 1) * Uh(m - 1), b.max_g);
    case 3:
      return on_test_vectors(D(e(n)) * Uh(m), Uh(m) * D(e(n)) + Uh(m - 1) * D(e(n - 1)), b.max_g);
  }
  throw std::logic_error("gessel index");
}

std::vector<Comparison> kb1(const IdentityParams&, const SuiteBounds& b) {
  const SymFunc s1 = S(Partition{1});
  return on_test_vectors(KB(s1), U(s1) * D(s1) - OperatorExpr::identity(), b.max_g);
}

std::vector<Comparison> straightcorners(const IdentityParams& p, const SuiteBounds&) {
  const Partition& a = p.part("alpha");
  const int n = a.size();
  SymFunc rhs = Rational(noc(a) - 1) * S(a);
  for (const Partition& be : addremove_set(a)) rhs += S(be);
  const SymFunc lhs = apply_kb(S(Partition{1}), S(a));
  std::vector<Comparison> out{{"", lhs, rhs}};
  if (n >= 2) {
    const SymFunc hook = S(Partition{n - 1, 1});
    out.push_back({"p-basis kronecker", to_schur(kronecker(to_basis(hook, Basis::p), to_basis(S(a), Basis::p))), rhs});
    if (n <= 6) {
      SymFunc chars;
      for (const Partition& nu : partitions_of(n)) chars.add_term(nu, Rational(kron_coeff(Partition{n - 1, 1}, a, nu)));
      out.push_back({"character sum", chars, rhs});
    }
  }
  return out;
}

std::vector<Comparison> kbk_ud(const IdentityParams& p, const SuiteBounds& b) {
  const int k = p.integer("k");
  OperatorExpr rhs;
  for (const Partition& l : partitions_of(k)) rhs += U(S(l)) * D(S(l));
  if (k >= 1)
    for (const Partition& l : partitions_of(k - 1)) rhs -= U(S(l)) * D(S(l));
  return on_test_vectors(KB(h(k)), {{"rhs", rhs}, {"expansion", kb_as_ud(h(k), b.max_g)}}, b.max_g);
}

std::vector<Comparison> kbf_ud(const IdentityParams& p, const SuiteBounds& b) {
  const SymFunc f = S(p.part("lambda"));
  const OperatorExpr ud = kb_as_ud(f, b.max_g);
  std::vector<Comparison> out;
  for (const Partition& g : partitions_up_to(b.max_g)) {
    const SymFunc direct = apply_kb(f, S(g));
    out.push_back({"U/D expansion gamma=" + to_string(g), direct, apply(ud, S(g))});
    out.push_back({"vertex operator gamma=" + to_string(g), direct, kb_via_gamma(f, S(g))});
  }
  return out;
}

// sum_{rho |- q} s_{alpha/rho} s_rho (or s_rho').
SymFunc littlewood_block(const Partition& a, int q, bool conj) {
  SymFunc out;
  if (q < 0 || q > a.size()) return out;
  for (const Partition& rho : partitions_of(q)) {
    const SymFunc sk = skew_schur(a, rho);
    if (!sk.is_zero()) out += mul(sk, S(conj ? conjugate(rho) : rho));
  }
  return out;
}

IntSequence hook_sequence(int first, int legs) {
  IntSequence seq{first};
  seq.insert(seq.end(), static_cast<std::size_t>(legs), 1);
  return seq;
}

std::vector<IdentityParams> tworow_instances(const SuiteBounds& b) {
  std::vector<IdentityParams> out;
  for (int k = 0; k <= b.max_ab; ++k)
    for (const Partition& a : partitions_up_to(b.max_g))
      for (const Partition& g : partitions_up_to(b.max_g - a.size())) out.push_back({{{"alpha", a}, {"gamma", g}}, {{"k", k}}});
  return out;
}

std::vector<Comparison> tworow_hook(const IdentityParams& p, const SuiteBounds&) {
  const Partition &a = p.part("alpha"), &g = p.part("gamma");
  const int k = p.integer("k"), n = a.size(), m = g.size();
  const SymFunc sg = S(g);
  OperatorExpr two_row, hook;
  SymFunc two_row_s, hook_s;
  for (int j = 0; j <= k; ++j) {
    for (const Partition& rho : partitions_of(k - j)) {
      const SymFunc sk = skew_schur(a, rho);
      if (sk.is_zero()) continue;
      two_row += U(sk) * U(S(rho)) * KB(S(Partition::row(j)));
      hook += U(sk) * U(S(conjugate(rho))) * KB(S(Partition::column(j)));
    }
    two_row_s += mul(littlewood_block(a, k - j, false), kronecker(sg, S(IntSequence{m - j, j})));
    hook_s += mul(littlewood_block(a, k - j, true), kronecker(sg, S(hook_sequence(m - j, j))));
  }
  const SymFunc prod = mul(S(a), sg);
  return {
      {"two-row operators", apply(KB(S(Partition::row(k))) * U(S(a)), sg), apply(two_row, sg)},
      {"hook operators", apply(KB(S(Partition::column(k))) * U(S(a)), sg), apply(hook, sg)},
      {"two-row kronecker", kronecker(S(IntSequence{n + m - k, k}), prod), two_row_s},
      {"hook kronecker", kronecker(S(hook_sequence(n + m - k, k)), prod), hook_s},
  };
}

std::vector<IdentityParams> littlewood_sum_instances(const SuiteBounds& b) {
  std::vector<IdentityParams> out;
  for (int q = 0; q <= b.max_ab; ++q)
    for (const Partition& a : partitions_up_to(b.max_g)) out.push_back({{{"alpha", a}}, {{"q", q}}});
  return out;
}

std::vector<Comparison> littlewood_sum(const IdentityParams& p, const SuiteBounds&) {
  const Partition& a = p.part("alpha");
  const int q = p.integer("q"), n = a.size();
  return {
      {"h", littlewood_block(a, q, false), kronecker(S(a), mul(h(n - q), h(q)))},
      {"e", littlewood_block(a, q, true), kronecker(S(a), mul(h(n - q), e(q)))},
  };
}

SymFunc hook_kronecker(const Partition& a, const Partition& t) {
  const int r = a.size() - t.size();
  return kronecker(skew_schur(a, t), S(IntSequence{r - 1, 1}));
}

std::vector<Comparison> skew_corners(const IdentityParams& p, const SuiteBounds&) {
  const Partition &a = p.part("alpha"), &t = p.part("theta");
  return {{"", hook_kronecker(a, t), skew_corners_rhs(a, t)}};
}

std::vector<Comparison> nokronecker(const IdentityParams& p, const SuiteBounds&) {
  const Partition &a = p.part("alpha"), &t = p.part("theta");
  SymFunc rhs;
  for (const Partition& d : add_set(t)) rhs += skew_schur(a, d);
  rhs = mul(S(Partition{1}), rhs) - skew_schur(a, t);
  return {{"", hook_kronecker(a, t), rhs}};
}

std::vector<Comparison> tabmanip2(const IdentityParams& p, const SuiteBounds&) {
  const Partition &a = p.part("alpha"), &t = p.part("theta");
  const auto restrict = add_restrict(t, a);
  const auto complement = add_complement(t, a);
  const auto add_a = add_set(a);
  SymFunc lhs;
  for (const Partition& g : add_a)
    for (const Partition& d : restrict) lhs += skew_schur(g, d);
  SymFunc rhs = Rational(static_cast<long>(add_a.size()) - static_cast<long>(complement.size())) * skew_schur(a, t);
  for (const Partition& be : addremove_set(a)) rhs += skew_schur(be, t);
  std::vector<Comparison> out{{"algebraic", lhs, rhs}};
  // lhs counts bijection failures.
  const JdtBijectionResult jdt = verify_jdt_bijection(a, t);
  out.push_back({"jdt bijection failures", SymFunc::constant(static_cast<long>(jdt.report.failures.size())), SymFunc()});
  return out;
}

IdentityEntry entry(std::string id, std::string statement, std::vector<std::string> parts, std::vector<std::string> ints,
                    std::string ranges, std::function<std::vector<IdentityParams>(const SuiteBounds&)> instances,
                    std::function<std::vector<Comparison>(const IdentityParams&, const SuiteBounds&)> check) {
  return {std::move(id),    std::move(statement), std::move(parts), std::move(ints),
          std::move(ranges), std::move(instances), std::move(check)};
}

std::vector<IdentityEntry> build_catalog() {
  const std::string ab = "|alpha|,|beta| <= max_ab, |gamma| <= max_g";
  std::vector<IdentityEntry> c;
  const char* main_statements[] = {
      "D_beta U_alpha = sum_l U_{alpha/l} D_{beta/l}",
      "U_alpha D_beta = sum_l (-1)^|l| D_{beta/l'} U_{alpha/l}",
      "K_beta U_alpha = sum_l U_{s_{beta/l} * s_alpha} K_l",
      "D_alpha K_beta = sum_l K_l D_{s_{beta/l} * s_alpha}",
      "KB_beta U_alpha = sum_{tau,nu} U_{(s_{beta/nu} * s_tau) s_{alpha/tau}} KB_nu",
      "D_alpha KB_beta = sum_{tau,nu} KB_nu D_{(s_{beta/nu} * s_tau) s_{alpha/tau}}",
  };
  for (int i = 1; i <= 6; ++i)
    c.push_back(entry("thm_main_" + std::to_string(i), main_statements[i - 1], {"alpha", "beta"}, {}, ab, ab_pairs,
                      [i](const IdentityParams& p, const SuiteBounds& b) { return thm_main(i, p, b); }));
  for (int i = 1; i <= 6; ++i)
    c.push_back(entry("thm_main_cor_" + std::to_string(i),
                      std::string("structure-constant form of: ") + main_statements[i - 1], {"alpha", "beta"}, {}, ab,
                      ab_pairs, [i](const IdentityParams& p, const SuiteBounds& b) { return thm_main_cor(i, p, b); }));
  c.push_back(entry("commutators_1",
                    "[D_beta, U_alpha] = sum_{l != 0} U_{alpha/l} D_{beta/l} = sum_{l != 0} (-1)^{|l|-1} D_{beta/l'} U_{alpha/l}",
                    {"alpha", "beta"}, {}, ab, ab_pairs,
                    [](const IdentityParams& p, const SuiteBounds& b) { return commutators(1, p, b); }));
  c.push_back(entry("commutators_2", "[KB_beta, U_alpha] = sum_{(tau,nu) != (0,beta)} U_{(s_{beta/nu} * s_tau) s_{alpha/tau}} KB_nu",
                    {"alpha", "beta"}, {}, ab, ab_pairs,
                    [](const IdentityParams& p, const SuiteBounds& b) { return commutators(2, p, b); }));
  c.push_back(entry("commutators_3", "[D_alpha, KB_beta] = sum_{(tau,nu) != (0,beta)} KB_nu D_{(s_{beta/nu} * s_tau) s_{alpha/tau}}",
                    {"alpha", "beta"}, {}, ab, ab_pairs,
                    [](const IdentityParams& p, const SuiteBounds& b) { return commutators(3, p, b); }));
  const std::string fg = "|beta| <= max_ab, |f| + |g| <= max_g";
  c.push_back(entry("foulkes", "D_beta(fg) = sum c^beta_{l,m} D_l(f) D_m(g)", {"beta", "f", "g"}, {}, fg, beta_fg, foulkes));
  c.push_back(entry("littlewood", "s_beta * (fg) = sum c^beta_{l,m} (s_m * f)(s_l * g)", {"beta", "f", "g"}, {}, fg, beta_fg,
                    littlewood));
  c.push_back(entry("similar", "D_beta(f * g) = sum g_{beta,l,m} D_l(f) * D_m(g)", {"beta", "f", "g"}, {}, fg, beta_fg, similar));
  c.push_back(entry("reverse_foulkes", "s_alpha s_{gamma/beta} = sum_l (-1)^|l| D_{beta/l'}(s_{alpha/l} s_gamma)",
                    {"alpha", "beta"}, {}, ab, ab_pairs, reverse_foulkes));
  const std::string mn = "0 <= m,n <= max_ab, |gamma| <= max_g";
  c.push_back(entry("gessel_1", "D_n U_m = sum_i U_{m-i} D_{n-i}", {}, {"m", "n"}, mn, mn_pairs,
                    [](const IdentityParams& p, const SuiteBounds& b) { return gessel(1, p, b); }));
  c.push_back(entry("gessel_2", "U_m D_n = D_n U_m - D_{n-1} U_{m-1}", {}, {"m", "n"}, mn, mn_pairs,
                    [](const IdentityParams& p, const SuiteBounds& b) { return gessel(2, p, b); }));
  c.push_back(entry("gessel_3", "D_{(1^n)} U_m = U_m D_{(1^n)} + U_{m-1} D_{(1^{n-1})}", {}, {"m", "n"}, mn, mn_pairs,
                    [](const IdentityParams& p, const SuiteBounds& b) { return gessel(3, p, b); }));
  c.push_back(entry("kb1", "KB_(1) = U_(1) D_(1) - 1", {}, {}, "|gamma| <= max_g", no_params, kb1));
  c.push_back(entry("straightcorners", "KB_(1) s_alpha = (noc(alpha) - 1) s_alpha + sum_{beta in addremove(alpha)} s_beta",
                    {"alpha"}, {}, "|alpha| <= max_g", alphas, straightcorners));
  c.push_back(entry("kbk_ud", "KB_(k) = sum_{l |- k} U_l D_l - sum_{l |- k-1} U_l D_l", {}, {"k"},
                    "0 <= k <= max_ab, |gamma| <= max_g",
                    [](const SuiteBounds& b) {
                      std::vector<IdentityParams> out;
                      for (int k = 0; k <= b.max_ab; ++k) out.push_back({{}, {{"k", k}}});
                      return out;
                    },
                    kbk_ud));
  c.push_back(entry("kbf_ud", "KB_f = sum_l U_{f[X-1] * s_l} D_l", {"lambda"}, {}, "|lambda| <= max_ab, |gamma| <= max_g",
                    [](const SuiteBounds& b) {
                      std::vector<IdentityParams> out;
                      for (const Partition& l : partitions_up_to(b.max_ab)) out.push_back({{{"lambda", l}}, {}});
                      return out;
                    },
                    kbf_ud));
  c.push_back(entry("tworow_hook", "KB_(k) U_alpha and KB_(1^k) U_alpha expansions and their Kronecker forms",
                    {"alpha", "gamma"}, {"k"}, "0 <= k <= max_ab, |alpha| + |gamma| <= max_g", tworow_instances,
                    tworow_hook));
  c.push_back(entry("littlewood_sum", "sum_{rho |- q} s_{alpha/rho} s_rho = s_alpha * h_{(n-q,q)}, and the e_q version",
                    {"alpha"}, {"q"}, "0 <= q <= max_ab, |alpha| <= max_g", littlewood_sum_instances, littlewood_sum));
  const std::string at = "theta in alpha, |alpha| <= max_g";
  c.push_back(entry("skew_corners",
                    "s_{alpha/theta} * s_(n-k-1,1) = (noc(alpha) - noc(theta) - 1) s_{alpha/theta} + sum_{addremove(alpha)} "
                    "s_{beta/theta} - sum_{addremove(theta)} s_{alpha/phi}",
                    {"alpha", "theta"}, {}, at, alpha_theta, skew_corners));
  c.push_back(entry("nokronecker", "s_{alpha/theta} * s_(n-k-1,1) = s_1 sum_{delta in add(theta)} s_{alpha/delta} - s_{alpha/theta}",
                    {"alpha", "theta"}, {}, at, alpha_theta, nokronecker));
  c.push_back(entry("tabmanip2",
                    "sum_{gamma in add(alpha), delta in addrestrict} s_{gamma/delta} = k s_{alpha/theta} + sum_{addremove(alpha)} "
                    "s_{beta/theta}, algebraically and by jeu de taquin",
                    {"alpha", "theta"}, {}, at, alpha_theta, tabmanip2));
  return c;
}

unsigned resolve_threads(unsigned threads) {
  if (threads > 0) return threads;
  if (const char* env = std::getenv("SYMOP_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

void check_schema(const IdentityEntry& entry, const IdentityParams& params) {
  for (const std::string& name : entry.partition_params) params.part(name);
  for (const std::string& name : entry.integer_params) params.integer(name);
}

}  // namespace

const std::vector<IdentityEntry>& catalog() {
  static const std::vector<IdentityEntry> c = build_catalog();
  return c;
}

const IdentityEntry& catalog_entry(std::string_view id) {
  for (const IdentityEntry& e : catalog())
    if (e.id == id) return e;
  throw std::invalid_argument("unknown identity '" + std::string(id) + "'");
}

VerificationReport verify_instance(const IdentityEntry& entry, const IdentityParams& params, const SuiteBounds& bounds) {
  check_schema(entry, params);
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.id = entry.id;
  r.ranges = to_string(params) + (params.partitions.empty() && params.integers.empty() ? "" : " ") +
             "max_g=" + std::to_string(bounds.max_g);
  for (const Comparison& c : entry.check(params, bounds)) {
    ++r.instances;
    if (!(c.lhs == c.rhs)) {
      std::string where = to_string(params);
      if (!c.label.empty()) where += (where.empty() ? "" : " ") + c.label;
      r.failures.push_back(make_failure(where, c.lhs, c.rhs));
    }
  }
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

VerificationReport verify_instance(std::string_view id, const IdentityParams& params, const SuiteBounds& bounds) {
  return verify_instance(catalog_entry(id), params, bounds);
}

VerificationReport run_entry(const IdentityEntry& entry, const SuiteBounds& bounds, unsigned threads) {
  if (bounds.max_ab < 0 || bounds.max_g < 0) throw std::invalid_argument("bounds must be nonnegative");
  const auto start = std::chrono::steady_clock::now();
  const std::vector<IdentityParams> instances = entry.instances(bounds);
  std::vector<VerificationReport> parts(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) parts[i] = verify_instance(entry, instances[i], bounds);
  };
  const unsigned n = std::min<unsigned>(resolve_threads(threads), std::max<std::size_t>(instances.size(), 1));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  VerificationReport r;
  r.id = entry.id;
  r.ranges = entry.ranges + " (max_ab=" + std::to_string(bounds.max_ab) + ", max_g=" + std::to_string(bounds.max_g) + ")";
  for (VerificationReport& p : parts) {
    r.instances += p.instances;
    for (Failure& f : p.failures) r.failures.push_back(std::move(f));
  }
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<VerificationReport> run_suite(const std::vector<IdentityEntry>& entries, const SuiteBounds& bounds,
                                          unsigned threads) {
  std::vector<VerificationReport> out;
  for (const IdentityEntry& e : entries) out.push_back(run_entry(e, bounds, threads));
  return out;
}

std::vector<VerificationReport> run_suite(const SuiteBounds& bounds, unsigned threads) {
  return run_suite(catalog(), bounds, threads);
}

}  // namespace symop
