#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "symop/partition.hpp"

namespace symop {

using Word = std::vector<int>;

/// Shared storage for fillings of a skew shape with positive integers.
class Filling {
 public:
  const SkewShape& shape() const { return shape_; }
  const std::map<Cell, int>& entries() const { return entries_; }
  int at(Cell c) const;
  /// content()[i] = number of entries equal to i + 1.
  std::vector<int> content() const;
  /// Entries row by row from the bottom, each row left to right.
  std::vector<std::vector<int>> rows() const;

  /// Two fillings are equal when they occupy the same cells with the same
  /// entries (different outer/inner pairs may describe the same cell set).
  friend bool operator==(const Filling& a, const Filling& b) { return a.entries_ == b.entries_; }
  friend auto operator<=>(const Filling& a, const Filling& b) { return a.entries_ <=> b.entries_; }

 protected:
  Filling(SkewShape shape, std::map<Cell, int> entries);
  static std::map<Cell, int> entries_from_rows(const SkewShape& shape, const std::vector<std::vector<int>>& rows);

  SkewShape shape_;
  std::map<Cell, int> entries_;
};

/// Semistandard tableau, French convention: rows weakly increase to the
/// right, columns strictly increase upwards.
class Ssyt : public Filling {
 public:
  Ssyt(SkewShape shape, std::map<Cell, int> entries);
  /// rows[r] lists the entries of row r of the skew shape, left to right.
  static Ssyt from_rows(SkewShape shape, const std::vector<std::vector<int>>& rows);
};

/// Anti-semistandard tableau: rows strictly decrease to the right, columns
/// weakly decrease upwards.
class Assyt : public Filling {
 public:
  Assyt(SkewShape shape, std::map<Cell, int> entries);
  static Assyt from_rows(SkewShape shape, const std::vector<std::vector<int>>& rows);
};

/// Constraints for the streaming SSYT enumerator.
struct FillingConstraints {
  /// content[i] bounds the number of entries equal to i + 1. Empty means no
  /// content constraint (then max_entry must be positive).
  std::vector<int> content;
  /// When true every letter must be used exactly content[i] times.
  bool exact_content = true;
  /// Largest admissible entry; 0 means content.size().
  int max_entry = 0;
  /// When set, the reverse reading word prefixed by these letter counts must
  /// stay a lattice word (counts[i] = occurrences of letter i + 1 so far).
  std::optional<std::vector<int>> lattice_prefix;
};

/// Cells in reverse-reading order: rows bottom to top, right to left in a row.
std::vector<Cell> reading_order(const SkewShape& shape);

/// Calls visit(values, letter_counts) for every SSYT of the shape meeting the
/// constraints. values follow reading_order(shape); letter_counts are the
/// occurrences of each letter in the filling.
void for_each_ssyt(const SkewShape& shape, const FillingConstraints& constraints,
                   const std::function<void(std::span<const int>, std::span<const int>)>& visit);
std::size_t count_ssyt(const SkewShape& shape, const FillingConstraints& constraints);
Ssyt ssyt_from_reading_values(const SkewShape& shape, std::span<const int> values);

/// All SSYT of the shape with exactly content[i] entries equal to i + 1.
std::vector<Ssyt> enumerate_ssyt(const SkewShape& shape, const std::vector<int>& content);
/// All SSYT of the shape with entries in [1, max_entry].
std::vector<Ssyt> enumerate_ssyt_bounded(const SkewShape& shape, int max_entry);

/// Rows right to left, taken bottom to top.
Word reverse_reading_word(const Ssyt& t);
/// Columns bottom to top, taken right to left.
Word assyt_reverse_reading_word(const Assyt& t);

/// Shape of the transpose of a skew shape rotated by 180 degrees inside the
/// bounding box of its outer shape.
SkewShape transpose_rotate(const SkewShape& shape);
Cell transpose_rotate(const SkewShape& shape, Cell c);
Ssyt transpose_rotate(const Assyt& t);
/// Inverse of transpose_rotate(Assyt) for an ASSYT of the given shape.
Assyt assyt_from_transpose_rotated(const Ssyt& rotated, const SkewShape& assyt_shape);

bool is_lattice(std::span<const int> w);
/// Lattice after prefixing delta_1 copies of 1, delta_2 copies of 2, ...
bool is_delta_lattice(std::span<const int> w, const Partition& delta);

/// Maps the i-th appearance of j (in reverse reading order) to i. Throws
/// std::invalid_argument unless the reverse reading word is a lattice word.
Assyt psi(const Ssyt& t);
/// Maps the j-th appearance of i (ASSYT reading order) to j.
Ssyt psi_inverse(const Assyt& t);

struct SlideResult {
  Ssyt tableau;
  std::optional<Cell> vacated;
};

/// Jeu de taquin slide into `hole`. A removable box of the inner shape gives
/// a forward slide; an addable box of the outer shape gives a reverse slide.
/// When no entry can move into the hole the tableau comes back unchanged with
/// no vacated box. Throws std::invalid_argument for any other hole.
SlideResult jdt_slide(const Ssyt& t, Cell hole);

}  // namespace symop
