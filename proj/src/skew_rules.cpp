#include "symop/skew_rules.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

namespace symop {

namespace {

struct ShapeKeyLess {
  bool operator()(const std::pair<Partition, Partition>& x, const std::pair<Partition, Partition>& y) const {
    if (x.first != y.first) return GradedOrder{}(x.first, y.first);
    return GradedOrder{}(x.second, y.second);
  }
};

using ShapeCounts = std::map<std::pair<Partition, Partition>, Integer, ShapeKeyLess>;

SkewExpansion collapse(const ShapeCounts& counts) {
  SkewExpansion out;
  for (const auto& [key, c] : counts) {
    if (c == 0) continue;
    out.terms.push_back({c, SkewShape(key.second, key.first)});
    out.collapsed += Rational(c) * skew_schur(key.second, key.first);
  }
  return out;
}

std::vector<int> plus(std::vector<int> a, std::span<const int> b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

// on_pair(beta_minus, rotated T1 shape, T1 reading values, gamma_plus, T2 reading values, sign)
template <class OnPair>
void walk_pairs(const SkewShape& a, const SkewShape& b, const SkewLrFilter& filter, OnPair&& on_pair) {
  const Partition& alpha = a.outer();
  const Partition& delta = a.inner();
  const Partition& beta = b.inner();
  const Partition& gamma = b.outer();
  std::vector<int> content(static_cast<std::size_t>(alpha.length()));
  for (std::size_t i = 0; i < content.size(); ++i) content[i] = alpha[i] - delta[i];
  const int total = a.size();

  for (int m = 0; m <= std::min(beta.size(), total); ++m) {
    std::vector<Partition> outers;
    for (const Partition& gp : superpartitions(gamma, total - m))
      if (!filter.gamma_plus || *filter.gamma_plus == gp) outers.push_back(gp);
    if (outers.empty()) continue;
    const int sign = m % 2 ? -1 : 1;
    for (const Partition& bm : subpartitions(beta, m)) {
      if (filter.beta_minus && *filter.beta_minus != bm) continue;
      const SkewShape rot = transpose_rotate(SkewShape(beta, bm));
      FillingConstraints fc1;
      fc1.content = content;
      fc1.exact_content = false;
      fc1.lattice_prefix = delta.vec();
      for_each_ssyt(rot, fc1, [&](std::span<const int> v1, std::span<const int> used) {
        FillingConstraints fc2;
        fc2.content = content;
        for (std::size_t i = 0; i < used.size() && i < fc2.content.size(); ++i) fc2.content[i] -= used[i];
        fc2.lattice_prefix = plus(delta.vec(), used);
        for (const Partition& gp : outers)
          for_each_ssyt(SkewShape(gp, gamma), fc2,
                        [&](std::span<const int> v2, std::span<const int>) { on_pair(bm, rot, v1, gp, v2, sign); });
      });
    }
  }
}

}  // namespace

SkewExpansion skew_pieri(int k, const SkewShape& shape) {
  if (k < 0) throw std::invalid_argument("skew_pieri: negative k");
  ShapeCounts counts;
  for (int i = 0; i <= k; ++i)
    for (const Partition& bm : remove_vertical_strip(shape.inner(), i))
      for (const Partition& gp : add_horizontal_strip(shape.outer(), k - i)) counts[{bm, gp}] += i % 2 ? -1 : 1;
  return collapse(counts);
}

void for_each_skew_lr_pair(const SkewShape& a, const SkewShape& b, const SkewLrFilter& filter,
                           const SkewLrVisitor& visit) {
  walk_pairs(a, b, filter,
             [&](const Partition& bm, const SkewShape& rot, std::span<const int> v1, const Partition& gp,
                 std::span<const int> v2, int sign) {
               const Assyt t1 = assyt_from_transpose_rotated(ssyt_from_reading_values(rot, v1), SkewShape(b.inner(), bm));
               const Ssyt t2 = ssyt_from_reading_values(SkewShape(gp, b.outer()), v2);
               visit(t1, t2, sign);
             });
}

SkewExpansion skew_lr_product(const SkewShape& a, const SkewShape& b) {
  ShapeCounts counts;
  walk_pairs(a, b, SkewLrFilter{},
             [&](const Partition& bm, const SkewShape&, std::span<const int>, const Partition& gp,
                 std::span<const int>, int sign) { counts[{bm, gp}] += sign; });
  return collapse(counts);
}

SymFunc skew_corners_rhs(const Partition& alpha, const Partition& theta) {
  if (!contains(theta, alpha))
    throw std::invalid_argument("skew_corners_rhs: " + to_string(theta) + " not contained in " + to_string(alpha));
  SymFunc out = Rational(noc(alpha) - noc(theta) - 1) * skew_schur(alpha, theta);
  for (const Partition& beta : addremove_set(alpha)) out += skew_schur(beta, theta);
  for (const Partition& phi : addremove_set(theta)) out -= skew_schur(alpha, phi);
  return out;
}

std::vector<Partition> add_restrict(const Partition& theta, const Partition& alpha) {
  std::vector<Partition> out;
  for (const Partition& d : add_set(theta))
    if (contains(d, alpha)) out.push_back(d);
  return out;
}

std::vector<Partition> add_complement(const Partition& theta, const Partition& alpha) {
  std::vector<Partition> out;
  for (const Partition& d : add_set(theta))
    if (!contains(d, alpha)) out.push_back(d);
  return out;
}

namespace {

Cell single_cell(const Partition& big, const Partition& small) {
  const auto cells = SkewShape(big, small).cells();
  if (cells.size() != 1) throw std::logic_error("expected a single box");
  return cells.front();
}

std::string shape_label(const Partition& outer, const Partition& inner) {
  return to_string(outer) + "/" + to_string(inner);
}

}  // namespace

JdtBijectionResult verify_jdt_bijection(const Partition& alpha, const Partition& theta, int max_entry) {
  if (!contains(theta, alpha))
    throw std::invalid_argument("verify_jdt_bijection: " + to_string(theta) + " not contained in " + to_string(alpha));
  const auto start = std::chrono::steady_clock::now();
  const int bound = max_entry > 0 ? max_entry : std::max(alpha.size(), 1);

  JdtBijectionResult res;
  res.report.id = "jdt_bijection";
  res.report.ranges = "alpha=" + to_string(alpha) + " theta=" + to_string(theta) + " entries<=" + std::to_string(bound);
  res.addrestrict = add_restrict(theta, alpha);
  res.addcomplement = add_complement(theta, alpha);
  const auto add_alpha = add_set(alpha);
  res.k = static_cast<int>(add_alpha.size()) - static_cast<int>(res.addcomplement.size());

  std::map<std::map<Cell, int>, int> hits_ab, hits_c;
  for (const Partition& gamma : add_alpha)
    for (const Partition& delta : res.addrestrict) {
      const Cell b = single_cell(delta, theta);
      const Cell c = single_cell(gamma, alpha);
      for (const Ssyt& t : enumerate_ssyt_bounded(SkewShape(gamma, delta), bound)) {
        ++res.report.instances;
        const SlideResult r = jdt_slide(t, b);
        JdtCase kind = !r.vacated ? JdtCase::a : (*r.vacated == c ? JdtCase::c : JdtCase::b);
        ++res.case_counts[static_cast<std::size_t>(kind)];
        res.case_shapes[static_cast<std::size_t>(kind)].insert({gamma, delta});
        (kind == JdtCase::c ? hits_c : hits_ab)[r.tableau.entries()]++;
      }
    }

  auto fail = [&](std::string what) { res.report.failures.push_back({std::move(what), "", "", ""}); };

  // Cases (a) and (b) hit each SSYT of shape beta/theta exactly once.
  std::size_t targets = 0;
  for (const Partition& beta : addremove_set(alpha)) {
    if (!contains(theta, beta)) continue;
    for (const Ssyt& t : enumerate_ssyt_bounded(SkewShape(beta, theta), bound)) {
      ++targets;
      auto it = hits_ab.find(t.entries());
      const int n = it == hits_ab.end() ? 0 : it->second;
      if (n != 1) fail("shape " + shape_label(beta, theta) + ": tableau hit " + std::to_string(n) + " times in cases (a)/(b)");
    }
  }
  if (targets != hits_ab.size())
    fail("cases (a)/(b) produced " + std::to_string(hits_ab.size()) + " distinct tableaux, expected " +
         std::to_string(targets));

  // Case (c) hits each SSYT of shape alpha/theta exactly k times.
  const auto base = enumerate_ssyt_bounded(SkewShape(alpha, theta), bound);
  std::size_t matched = 0;
  for (const Ssyt& t : base) {
    auto it = hits_c.find(t.entries());
    const int n = it == hits_c.end() ? 0 : it->second;
    if (it != hits_c.end()) ++matched;
    if (n != res.k)
      fail("shape " + shape_label(alpha, theta) + ": tableau hit " + std::to_string(n) + " times in case (c), expected " +
           std::to_string(res.k));
  }
  if (matched != hits_c.size()) fail("case (c) produced tableaux outside shape " + shape_label(alpha, theta));

  res.report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace symop
