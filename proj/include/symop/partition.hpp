#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symop/rational.hpp"

namespace symop {

/// A box of a Young diagram in French convention: row 0 is the bottom row,
/// column 0 the leftmost column.
struct Cell {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Integer sequence that may be negative or non-monotone (Jacobi-Trudi input).
using IntSequence = std::vector<int>;

/// Integer partition stored in canonical form (positive parts, weakly
/// decreasing, no trailing zeros).
class Partition {
 public:
  Partition() = default;
  /// Accepts trailing zeros and strips them; throws std::invalid_argument on
  /// negative parts or increasing parts.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  /// The partition (n), or the empty partition for n == 0.
  static Partition row(int n);
  /// The partition (1^n).
  static Partition column(int n);

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }
  /// |λ|
  int size() const { return size_; }
  /// Number of nonzero parts.
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Part i (0-based); parts beyond the length read as 0.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  bool contains_cell(Cell c) const {
    return c.row >= 0 && c.col >= 0 && c.col < (*this)[static_cast<std::size_t>(c.row)];
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Plain lexicographic comparison of the part sequences.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Canonical term order: by size, then reverse-lexicographic within a size,
/// so (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1).
struct GradedOrder {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a > b;
  }
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// Skew shape outer/inner with inner contained in outer.
class SkewShape {
 public:
  SkewShape() = default;
  /// Throws std::invalid_argument unless inner ⊆ outer.
  SkewShape(Partition outer, Partition inner);
  explicit SkewShape(Partition straight) : outer_(std::move(straight)) {}

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int size() const { return outer_.size() - inner_.size(); }
  bool contains_cell(Cell c) const { return outer_.contains_cell(c) && !inner_.contains_cell(c); }
  /// Cells row by row from the bottom, left to right within a row.
  std::vector<Cell> cells() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;
  friend auto operator<=>(const SkewShape& a, const SkewShape& b) {
    if (auto c = a.outer_ <=> b.outer_; c != 0) return c;
    return a.inner_ <=> b.inner_;
  }

 private:
  Partition outer_;
  Partition inner_;
};

Partition conjugate(const Partition& lambda);
/// inner_i <= outer_i for all i.
bool contains(const Partition& inner, const Partition& outer);
/// Removable boxes, ordered from the top row down to the bottom row.
std::vector<Cell> corners(const Partition& lambda);
/// Addable boxes (outside corners), ordered from the top row down.
std::vector<Cell> outside_corners(const Partition& lambda);
int noc(const Partition& lambda);

Partition add_cell(const Partition& lambda, Cell c);
Partition remove_cell(const Partition& lambda, Cell c);

// The three "sets" come back sorted in GradedOrder.
std::vector<Partition> remove_set(const Partition& lambda);
std::vector<Partition> add_set(const Partition& lambda);
std::vector<Partition> addremove_set(const Partition& lambda);

/// All partitions of n in reverse-lexicographic order.
std::vector<Partition> partitions_of(int n);
/// All partitions of size <= n in GradedOrder.
std::vector<Partition> partitions_up_to(int n);
/// Partitions mu ⊆ lambda with |lambda| - |mu| == removed, in GradedOrder.
std::vector<Partition> subpartitions(const Partition& lambda, int removed);
/// Partitions mu ⊇ lambda with |mu| - |lambda| == added, in GradedOrder.
std::vector<Partition> superpartitions(const Partition& lambda, int added);

/// Partitions mu ⊇ lambda such that mu/lambda is a horizontal strip of k boxes.
std::vector<Partition> add_horizontal_strip(const Partition& lambda, int k);
/// Partitions mu ⊆ lambda such that lambda/mu is a vertical strip of k boxes.
std::vector<Partition> remove_vertical_strip(const Partition& lambda, int k);

/// Multiset union of parts (the index of p_λ p_μ).
Partition merge_parts(const Partition& a, const Partition& b);

/// z_λ = prod_i i^{m_i} m_i!
Integer z_factor(const Partition& lambda);

/// "3,1" ; the empty partition renders as "0".
std::string to_string(const Partition& lambda);
/// "5,3,1/2,1" ; a straight shape renders without the slash.
std::string to_string(const SkewShape& shape);
/// Accepts "3,1", "3,1,0", "0", "" (empty). Throws std::invalid_argument.
Partition parse_partition(std::string_view text);
/// Accepts "5,3,1/2,1" or a straight shape "3,1".
SkewShape parse_skew_shape(std::string_view text);

}  // namespace symop
