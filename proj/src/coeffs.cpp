#include "symop/coeffs.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "memo.hpp"
#include "symop/tableau.hpp"

namespace symop {

namespace {

using PairKey = std::pair<Partition, Partition>;
using TripleKey = std::tuple<Partition, Partition, Partition>;

// Characters are computed from the cycle type with its parts taken largest
// first; the memo key is (λ, remaining cycle type).
CharacterValue mn_rec(const Partition& lambda, const Partition& rho) {
  static detail::Memo<PairKey, CharacterValue> memo;
  if (rho.empty()) return lambda.empty() ? 1 : 0;
  if (const auto* hit = memo.find({lambda, rho})) return *hit;

  const int k = rho[0];
  const Partition rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
  const int len = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);

  CharacterValue total = 0;
  for (int i = 0; i < len; ++i) {
    const int from = beta[static_cast<std::size_t>(i)], to = from - k;
    if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    int height = 0;
    for (int b : beta)
      if (b > to && b < from) ++height;
    std::vector<int> next = beta;
    next[static_cast<std::size_t>(i)] = to;
    std::sort(next.begin(), next.end(), std::greater<>());
    std::vector<int> parts(static_cast<std::size_t>(len));
    for (int j = 0; j < len; ++j) parts[static_cast<std::size_t>(j)] = next[static_cast<std::size_t>(j)] - (len - 1 - j);
    const CharacterValue sub = mn_rec(Partition(std::move(parts)), rest);
    if (height % 2) total -= sub;
    else total += sub;
  }
  return memo.insert({lambda, rho}, total);
}

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

std::size_t CharacterTable::index(const Partition& p) const {
  auto it = std::find(partitions.begin(), partitions.end(), p);
  if (it == partitions.end()) throw std::invalid_argument("partition " + to_string(p) + " not of size " + std::to_string(n));
  return static_cast<std::size_t>(it - partitions.begin());
}

CharacterValue mn_character(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size())
    throw std::invalid_argument("mn_character: |" + to_string(lambda) + "| != |" + to_string(rho) + "|");
  return mn_rec(lambda, rho);
}

const CharacterTable& character_table(int n) {
  static detail::Memo<int, CharacterTable> memo;
  return memo.get(n, [n] {
    CharacterTable t;
    t.n = n;
    t.partitions = partitions_of(n);
    for (const Partition& lam : t.partitions) {
      std::vector<CharacterValue> row;
      row.reserve(t.partitions.size());
      for (const Partition& rho : t.partitions) row.push_back(mn_rec(lam, rho));
      t.chi.push_back(std::move(row));
    }
    for (const Partition& rho : t.partitions) t.z.push_back(z_factor(rho));
    return t;
  });
}

Integer lr_coeff(const Partition& nu, const Partition& lambda, const Partition& mu) {
  if (nu.size() != lambda.size() + mu.size() || !contains(lambda, nu) || !contains(mu, nu)) return 0;
  if (lambda.empty()) return nu == mu ? 1 : 0;
  if (mu.empty()) return nu == lambda ? 1 : 0;
  static detail::Memo<TripleKey, Integer> memo;
  return memo.get({nu, lambda, mu}, [&] {
    FillingConstraints fc;
    fc.content = mu.vec();
    fc.lattice_prefix = std::vector<int>{};
    return Integer(static_cast<unsigned long>(count_ssyt(SkewShape(nu, lambda), fc)));
  });
}

Integer kron_coeff(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() != mu.size() || mu.size() != nu.size())
    throw std::invalid_argument("kron_coeff: partitions of different sizes");
  const CharacterTable& t = character_table(lambda.size());
  const auto& a = t.chi[t.index(lambda)];
  const auto& b = t.chi[t.index(mu)];
  const auto& c = t.chi[t.index(nu)];
  const Integer nfact = factorial(t.n);
  Integer sum = 0;
  for (std::size_t r = 0; r < t.partitions.size(); ++r) sum += a[r] * b[r] * c[r] * (nfact / t.z[r]);
  if (sum % nfact != 0) throw std::logic_error("kron_coeff: character sum is not an integer");
  return sum / nfact;
}

}  // namespace symop
