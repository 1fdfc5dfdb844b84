#include "symop/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace symop {

namespace {

std::string describe(Cell c) { return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")"; }

bool has(const std::map<Cell, int>& m, Cell c) { return m.find(c) != m.end(); }

}  // namespace

Filling::Filling(SkewShape shape, std::map<Cell, int> entries) : shape_(std::move(shape)), entries_(std::move(entries)) {
  const auto cells = shape_.cells();
  if (cells.size() != entries_.size())
    throw std::invalid_argument("filling does not cover the shape " + to_string(shape_));
  for (Cell c : cells) {
    auto it = entries_.find(c);
    if (it == entries_.end()) throw std::invalid_argument("filling is missing cell " + describe(c));
    if (it->second <= 0) throw std::invalid_argument("filling entries must be positive");
  }
}

std::map<Cell, int> Filling::entries_from_rows(const SkewShape& shape, const std::vector<std::vector<int>>& rows) {
  std::map<Cell, int> out;
  if (static_cast<int>(rows.size()) > shape.outer().length())
    throw std::invalid_argument("more rows than the shape has");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const int lo = shape.inner()[r], hi = shape.outer()[r];
    if (static_cast<int>(rows[r].size()) != hi - lo)
      throw std::invalid_argument("row " + std::to_string(r) + " has the wrong number of entries");
    for (int c = lo; c < hi; ++c) out[{static_cast<int>(r), c}] = rows[r][static_cast<std::size_t>(c - lo)];
  }
  return out;
}

int Filling::at(Cell c) const {
  auto it = entries_.find(c);
  if (it == entries_.end()) throw std::out_of_range("cell " + describe(c) + " is not in the filling");
  return it->second;
}

std::vector<int> Filling::content() const {
  std::vector<int> out;
  for (const auto& [cell, v] : entries_) {
    if (static_cast<int>(out.size()) < v) out.resize(static_cast<std::size_t>(v), 0);
    ++out[static_cast<std::size_t>(v - 1)];
  }
  return out;
}

std::vector<std::vector<int>> Filling::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(shape_.outer().length()));
  for (const auto& [cell, v] : entries_) out[static_cast<std::size_t>(cell.row)].push_back(v);
  return out;
}

Ssyt::Ssyt(SkewShape shape, std::map<Cell, int> entries) : Filling(std::move(shape), std::move(entries)) {
  for (const auto& [c, v] : entries_) {
    if (auto it = entries_.find({c.row, c.col + 1}); it != entries_.end() && it->second < v)
      throw std::invalid_argument("SSYT rows must weakly increase at " + describe(c));
    if (auto it = entries_.find({c.row + 1, c.col}); it != entries_.end() && it->second <= v)
      throw std::invalid_argument("SSYT columns must strictly increase at " + describe(c));
  }
}

Ssyt Ssyt::from_rows(SkewShape shape, const std::vector<std::vector<int>>& rows) {
  auto entries = entries_from_rows(shape, rows);
  return Ssyt(std::move(shape), std::move(entries));
}

Assyt::Assyt(SkewShape shape, std::map<Cell, int> entries) : Filling(std::move(shape), std::move(entries)) {
  for (const auto& [c, v] : entries_) {
    if (auto it = entries_.find({c.row, c.col + 1}); it != entries_.end() && it->second >= v)
      throw std::invalid_argument("ASSYT rows must strictly decrease at " + describe(c));
    if (auto it = entries_.find({c.row + 1, c.col}); it != entries_.end() && it->second > v)
      throw std::invalid_argument("ASSYT columns must weakly decrease at " + describe(c));
  }
}

Assyt Assyt::from_rows(SkewShape shape, const std::vector<std::vector<int>>& rows) {
  auto entries = entries_from_rows(shape, rows);
  return Assyt(std::move(shape), std::move(entries));
}

std::vector<Cell> reading_order(const SkewShape& shape) {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(shape.size()));
  for (int r = 0; r < shape.outer().length(); ++r)
    for (int c = shape.outer()[static_cast<std::size_t>(r)] - 1; c >= shape.inner()[static_cast<std::size_t>(r)]; --c)
      out.push_back({r, c});
  return out;
}

namespace {

class SsytWalker {
 public:
  SsytWalker(const SkewShape& shape, const FillingConstraints& fc,
             const std::function<void(std::span<const int>, std::span<const int>)>& visit)
      : visit_(visit) {
    cells_ = reading_order(shape);
    const std::size_t n = cells_.size();
    right_.assign(n, -1);
    below_.assign(n, -1);
    std::map<Cell, int> index;
    for (std::size_t i = 0; i < n; ++i) index[cells_[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < n; ++i) {
      if (auto it = index.find({cells_[i].row, cells_[i].col + 1}); it != index.end()) right_[i] = it->second;
      if (auto it = index.find({cells_[i].row - 1, cells_[i].col}); it != index.end()) below_[i] = it->second;
    }
    max_entry_ = fc.max_entry > 0 ? fc.max_entry : static_cast<int>(fc.content.size());
    caps_.assign(static_cast<std::size_t>(max_entry_), static_cast<int>(n));
    for (std::size_t i = 0; i < fc.content.size() && i < caps_.size(); ++i) caps_[i] = fc.content[i];
    if (!fc.content.empty() && static_cast<int>(fc.content.size()) < max_entry_)
      for (std::size_t i = fc.content.size(); i < caps_.size(); ++i) caps_[i] = 0;
    used_.assign(caps_.size(), 0);
    if (fc.lattice_prefix) {
      lattice_ = true;
      prefix_ = *fc.lattice_prefix;
      prefix_.resize(std::max(prefix_.size(), caps_.size() + 1), 0);
    }
    values_.assign(n, 0);
    feasible_ = true;
    if (!fc.content.empty() && fc.exact_content) {
      long total = 0;
      for (int c : fc.content) total += c;
      feasible_ = total == static_cast<long>(n);
    }
    if (fc.content.empty() && max_entry_ <= 0) feasible_ = n == 0;
  }

  void run() {
    if (feasible_) step(0);
  }

 private:
  void step(std::size_t k) {
    if (k == cells_.size()) {
      visit_(values_, used_);
      return;
    }
    const int lo = below_[k] >= 0 ? values_[static_cast<std::size_t>(below_[k])] + 1 : 1;
    const int hi = right_[k] >= 0 ? values_[static_cast<std::size_t>(right_[k])] : max_entry_;
    for (int v = lo; v <= hi; ++v) {
      const auto li = static_cast<std::size_t>(v - 1);
      if (used_[li] >= caps_[li]) continue;
      if (lattice_ && v > 1 && prefix_[li] + used_[li] + 1 > prefix_[li - 1] + used_[li - 1]) continue;
      values_[k] = v;
      ++used_[li];
      step(k + 1);
      --used_[li];
    }
  }

  const std::function<void(std::span<const int>, std::span<const int>)>& visit_;
  std::vector<Cell> cells_;
  std::vector<int> right_, below_;
  std::vector<int> caps_, used_, prefix_, values_;
  int max_entry_ = 0;
  bool lattice_ = false;
  bool feasible_ = true;
};

}  // namespace

void for_each_ssyt(const SkewShape& shape, const FillingConstraints& constraints,
                   const std::function<void(std::span<const int>, std::span<const int>)>& visit) {
  SsytWalker(shape, constraints, visit).run();
}

std::size_t count_ssyt(const SkewShape& shape, const FillingConstraints& constraints) {
  std::size_t n = 0;
  for_each_ssyt(shape, constraints, [&](std::span<const int>, std::span<const int>) { ++n; });
  return n;
}

Ssyt ssyt_from_reading_values(const SkewShape& shape, std::span<const int> values) {
  const auto cells = reading_order(shape);
  std::map<Cell, int> entries;
  for (std::size_t i = 0; i < cells.size(); ++i) entries[cells[i]] = values[i];
  return Ssyt(shape, std::move(entries));
}

std::vector<Ssyt> enumerate_ssyt(const SkewShape& shape, const std::vector<int>& content) {
  std::vector<Ssyt> out;
  FillingConstraints fc;
  fc.content = content;
  if (content.empty()) {
    if (shape.size() == 0) out.push_back(Ssyt(shape, {}));
    return out;
  }
  for_each_ssyt(shape, fc, [&](std::span<const int> v, std::span<const int>) {
    out.push_back(ssyt_from_reading_values(shape, v));
  });
  return out;
}

std::vector<Ssyt> enumerate_ssyt_bounded(const SkewShape& shape, int max_entry) {
  std::vector<Ssyt> out;
  FillingConstraints fc;
  fc.max_entry = max_entry;
  fc.exact_content = false;
  for_each_ssyt(shape, fc, [&](std::span<const int> v, std::span<const int>) {
    out.push_back(ssyt_from_reading_values(shape, v));
  });
  return out;
}

Word reverse_reading_word(const Ssyt& t) {
  Word w;
  for (Cell c : reading_order(t.shape())) w.push_back(t.at(c));
  return w;
}

Word assyt_reverse_reading_word(const Assyt& t) {
  Word w;
  const SkewShape& s = t.shape();
  const Partition outer_c = conjugate(s.outer()), inner_c = conjugate(s.inner());
  for (int c = outer_c.length() - 1; c >= 0; --c)
    for (int r = inner_c[static_cast<std::size_t>(c)]; r < outer_c[static_cast<std::size_t>(c)]; ++r)
      w.push_back(t.at({r, c}));
  return w;
}

SkewShape transpose_rotate(const SkewShape& shape) {
  const int rows = shape.outer()[0];           // rows after transposing
  const int cols = shape.outer().length();     // columns after transposing
  const Partition outer_c = conjugate(shape.outer()), inner_c = conjugate(shape.inner());
  std::vector<int> outer(static_cast<std::size_t>(rows)), inner(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) {
    const auto c = static_cast<std::size_t>(rows - 1 - i);
    outer[static_cast<std::size_t>(i)] = cols - inner_c[c];
    inner[static_cast<std::size_t>(i)] = cols - outer_c[c];
  }
  return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

Cell transpose_rotate(const SkewShape& shape, Cell c) {
  return {shape.outer()[0] - 1 - c.col, shape.outer().length() - 1 - c.row};
}

Ssyt transpose_rotate(const Assyt& t) {
  std::map<Cell, int> entries;
  for (const auto& [c, v] : t.entries()) entries[transpose_rotate(t.shape(), c)] = v;
  return Ssyt(transpose_rotate(t.shape()), std::move(entries));
}

Assyt assyt_from_transpose_rotated(const Ssyt& rotated, const SkewShape& assyt_shape) {
  std::map<Cell, int> entries;
  for (Cell c : assyt_shape.cells()) entries[c] = rotated.at(transpose_rotate(assyt_shape, c));
  return Assyt(assyt_shape, std::move(entries));
}

bool is_delta_lattice(std::span<const int> w, const Partition& delta) {
  std::vector<int> counts(delta.vec());
  for (int v : w) {
    if (v <= 0) return false;
    const auto i = static_cast<std::size_t>(v - 1);
    if (counts.size() <= i) counts.resize(i + 1, 0);
    ++counts[i];
    if (i > 0 && counts[i] > counts[i - 1]) return false;
  }
  return true;
}

bool is_lattice(std::span<const int> w) { return is_delta_lattice(w, Partition{}); }

Assyt psi(const Ssyt& t) {
  const Word w = reverse_reading_word(t);
  if (!is_lattice(w)) throw std::invalid_argument("psi: reverse reading word is not a lattice word");
  std::map<int, int> seen;
  std::map<Cell, int> entries;
  for (Cell c : reading_order(t.shape())) entries[c] = ++seen[t.at(c)];
  return Assyt(t.shape(), std::move(entries));
}

Ssyt psi_inverse(const Assyt& t) {
  const SkewShape& s = t.shape();
  const Partition outer_c = conjugate(s.outer()), inner_c = conjugate(s.inner());
  std::map<int, int> seen;
  std::map<Cell, int> entries;
  for (int c = outer_c.length() - 1; c >= 0; --c)
    for (int r = inner_c[static_cast<std::size_t>(c)]; r < outer_c[static_cast<std::size_t>(c)]; ++r)
      entries[{r, c}] = ++seen[t.at({r, c})];
  return Ssyt(s, std::move(entries));
}

SlideResult jdt_slide(const Ssyt& t, Cell hole) {
  const Partition& outer = t.shape().outer();
  const Partition& inner = t.shape().inner();
  const auto row = static_cast<std::size_t>(std::max(hole.row, 0));
  const bool forward = hole.row >= 0 && hole.col >= 0 && inner[row] == hole.col + 1 && inner[row + 1] <= hole.col;
  const bool reverse = hole.row >= 0 && hole.col >= 0 && outer[row] == hole.col && (row == 0 || outer[row - 1] > hole.col);
  if (!forward && !reverse)
    throw std::invalid_argument("jdt_slide: " + describe(hole) + " is not a legal slide position for shape " +
                                to_string(t.shape()));

  std::map<Cell, int> m = t.entries();
  Cell pos = hole;
  bool moved = false;
  for (;;) {
    Cell a, b;  // a: column neighbour, b: row neighbour
    if (forward) {
      a = {pos.row + 1, pos.col};
      b = {pos.row, pos.col + 1};
    } else {
      a = {pos.row - 1, pos.col};
      b = {pos.row, pos.col - 1};
    }
    const bool has_a = has(m, a), has_b = has(m, b);
    if (!has_a && !has_b) break;
    bool take_column;
    if (!has_b) take_column = true;
    else if (!has_a) take_column = false;
    else take_column = forward ? m[a] <= m[b] : m[a] >= m[b];
    const Cell from = take_column ? a : b;
    m[pos] = m[from];
    m.erase(from);
    pos = from;
    moved = true;
  }
  if (!moved) return {t, std::nullopt};
  SkewShape shape = forward ? SkewShape(remove_cell(outer, pos), remove_cell(inner, hole))
                            : SkewShape(add_cell(outer, hole), add_cell(inner, pos));
  return {Ssyt(std::move(shape), std::move(m)), pos};
}

}  // namespace symop
