#include "symop/partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>

namespace symop {

Rational parse_rational(std::string_view text) {
  auto fail = [&] { throw std::invalid_argument("malformed rational '" + std::string(text) + "'"); };
  if (text.empty()) fail();
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') i = 1;
  const auto slash = text.find('/');
  const auto num = text.substr(i, slash == std::string_view::npos ? std::string_view::npos : slash - i);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!digits(num) || !digits(den)) fail();
  Integer n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (text[0] == '-') n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::row(int n) { return n == 0 ? Partition{} : Partition{n}; }

Partition Partition::column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (int x : p.parts()) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!contains(inner_, outer_))
    throw std::invalid_argument("skew shape " + to_string(outer_) + "/" + to_string(inner_) +
                                ": inner shape not contained in outer shape");
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int r = 0; r < outer_.length(); ++r)
    for (int c = inner_[static_cast<std::size_t>(r)]; c < outer_[static_cast<std::size_t>(r)]; ++c)
      out.push_back({r, c});
  return out;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out(lambda.empty() ? 0 : static_cast<std::size_t>(lambda[0]), 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

bool contains(const Partition& inner, const Partition& outer) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner[static_cast<std::size_t>(i)] > outer[static_cast<std::size_t>(i)]) return false;
  return true;
}

std::vector<Cell> corners(const Partition& lambda) {
  std::vector<Cell> out;
  for (int r = lambda.length() - 1; r >= 0; --r) {
    const auto i = static_cast<std::size_t>(r);
    if (lambda[i] > lambda[i + 1]) out.push_back({r, lambda[i] - 1});
  }
  return out;
}

std::vector<Cell> outside_corners(const Partition& lambda) {
  std::vector<Cell> out;
  for (int r = lambda.length(); r >= 0; --r) {
    const auto i = static_cast<std::size_t>(r);
    if (r == 0 || lambda[i - 1] > lambda[i]) out.push_back({r, lambda[i]});
  }
  return out;
}

int noc(const Partition& lambda) { return static_cast<int>(corners(lambda).size()); }

Partition add_cell(const Partition& lambda, Cell c) {
  std::vector<int> parts = lambda.vec();
  if (c.row > static_cast<int>(parts.size()) || lambda[static_cast<std::size_t>(c.row)] != c.col)
    throw std::invalid_argument("cell is not addable");
  if (c.row == static_cast<int>(parts.size())) parts.push_back(0);
  ++parts[static_cast<std::size_t>(c.row)];
  return Partition(std::move(parts));
}

Partition remove_cell(const Partition& lambda, Cell c) {
  std::vector<int> parts = lambda.vec();
  if (c.row >= static_cast<int>(parts.size()) || parts[static_cast<std::size_t>(c.row)] != c.col + 1)
    throw std::invalid_argument("cell is not removable");
  --parts[static_cast<std::size_t>(c.row)];
  return Partition(std::move(parts));
}

namespace {

std::vector<Partition> sorted_unique(std::vector<Partition> v) {
  std::sort(v.begin(), v.end(), GradedOrder{});
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::vector<Partition> remove_set(const Partition& lambda) {
  std::vector<Partition> out;
  for (Cell c : corners(lambda)) out.push_back(remove_cell(lambda, c));
  return sorted_unique(std::move(out));
}

std::vector<Partition> add_set(const Partition& lambda) {
  std::vector<Partition> out;
  for (Cell c : outside_corners(lambda)) out.push_back(add_cell(lambda, c));
  return sorted_unique(std::move(out));
}

std::vector<Partition> addremove_set(const Partition& lambda) {
  std::vector<Partition> out;
  for (const Partition& mu : remove_set(lambda))
    for (const Partition& nu : add_set(mu))
      if (nu != lambda) out.push_back(nu);
  return sorted_unique(std::move(out));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

// Chooses part i in [lo_i, hi_i] with hi also bounded by the previous part.
template <class Lo, class Hi>
void bounded_rec(std::size_t i, std::size_t n, int remaining, int prev, const Lo& lo, const Hi& hi,
                 std::vector<int>& cur, std::vector<Partition>& out) {
  if (i == n) {
    if (remaining == 0) out.emplace_back(cur);
    return;
  }
  const int low = lo(i), high = std::min(hi(i), prev);
  for (int v = low; v <= high; ++v) {
    const int used = v - low;
    if (used > remaining) break;
    cur.push_back(v);
    bounded_rec(i + 1, n, remaining - used, v, lo, hi, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto level = partitions_of(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Partition> subpartitions(const Partition& lambda, int removed) {
  std::vector<Partition> out;
  if (removed < 0 || removed > lambda.size()) return out;
  std::vector<int> cur;
  const auto n = static_cast<std::size_t>(lambda.length());
  // Part i ranges over [0, lambda_i]; the running total counts kept boxes.
  bounded_rec(
      0, n, lambda.size() - removed, lambda.empty() ? 0 : lambda[0], [](std::size_t) { return 0; },
      [&](std::size_t i) { return lambda[i]; }, cur, out);
  return sorted_unique(std::move(out));
}

std::vector<Partition> superpartitions(const Partition& lambda, int added) {
  std::vector<Partition> out;
  if (added < 0) return out;
  std::vector<int> cur;
  const auto n = static_cast<std::size_t>(lambda.length() + added);
  bounded_rec(
      0, n, added, lambda[0] + added, [&](std::size_t i) { return lambda[i]; },
      [&](std::size_t) { return lambda[0] + added; }, cur, out);
  return sorted_unique(std::move(out));
}

std::vector<Partition> add_horizontal_strip(const Partition& lambda, int k) {
  std::vector<Partition> out;
  if (k < 0) return out;
  std::vector<int> cur;
  const auto n = static_cast<std::size_t>(lambda.length() + 1);
  // Row i may grow up to lambda_{i-1} (row 0 unbounded).
  bounded_rec(
      0, n, k, lambda[0] + k, [&](std::size_t i) { return lambda[i]; },
      [&](std::size_t i) { return i == 0 ? lambda[0] + k : lambda[i - 1]; }, cur, out);
  return sorted_unique(std::move(out));
}

std::vector<Partition> remove_vertical_strip(const Partition& lambda, int k) {
  std::vector<Partition> out;
  for (const Partition& mu : subpartitions(lambda, k)) {
    bool strip = true;
    for (int i = 0; i < lambda.length() && strip; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      strip = lambda[idx] - mu[idx] <= 1;
    }
    if (strip) out.push_back(mu);
  }
  return out;
}

Partition merge_parts(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.vec();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Integer z_factor(const Partition& lambda) {
  std::map<int, int> mult;
  for (int p : lambda.parts()) ++mult[p];
  Integer z = 1;
  for (auto [part, m] : mult) {
    for (int k = 0; k < m; ++k) z *= part;
    for (int k = 2; k <= m; ++k) z *= k;
  }
  return z;
}

std::string to_string(const Partition& lambda) {
  if (lambda.empty()) return "0";
  std::string out;
  for (int i = 0; i < lambda.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(lambda[static_cast<std::size_t>(i)]);
  }
  return out;
}

std::string to_string(const SkewShape& shape) {
  if (shape.inner().empty()) return to_string(shape.outer());
  return to_string(shape.outer()) + "/" + to_string(shape.inner());
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return {};
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const auto tok = trim(text.substr(start, end - start));
    int v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
    if (v < 0) throw std::invalid_argument("partition parts must be nonnegative");
    parts.push_back(v);
    start = end + 1;
  }
  return Partition(std::move(parts));
}

SkewShape parse_skew_shape(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return SkewShape(parse_partition(text));
  return SkewShape(parse_partition(text.substr(0, slash)), parse_partition(text.substr(slash + 1)));
}

}  // namespace symop
