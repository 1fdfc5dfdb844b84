#pragma once

#include <vector>

#include "symop/partition.hpp"
#include "symop/rational.hpp"

namespace symop {

using CharacterValue = Integer;

/// Irreducible character values of S_n, rows indexed by λ and columns by the
/// cycle type ρ, both in reverse-lexicographic order.
struct CharacterTable {
  int n = 0;
  std::vector<Partition> partitions;
  std::vector<std::vector<CharacterValue>> chi;  // chi[λ][ρ]
  std::vector<Integer> z;                        // z[ρ]

  std::size_t index(const Partition& p) const;
};

/// χ^λ(ρ) by the Murnaghan-Nakayama rule. Throws std::invalid_argument when
/// |λ| != |ρ|.
CharacterValue mn_character(const Partition& lambda, const Partition& rho);

/// Memoized table for S_n.
const CharacterTable& character_table(int n);

/// c^ν_{λμ}: LR fillings of ν/λ with content μ.
Integer lr_coeff(const Partition& nu, const Partition& lambda, const Partition& mu);

/// g_{λμν} = Σ_ρ χ^λ(ρ)χ^μ(ρ)χ^ν(ρ)/z_ρ. Throws std::invalid_argument on a
/// size mismatch and std::logic_error if the sum is not an integer.
Integer kron_coeff(const Partition& lambda, const Partition& mu, const Partition& nu);

}  // namespace symop
