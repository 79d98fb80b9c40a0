#pragma once

// Partitions, Young diagrams, standard Young tableaux and the graph on T_lambda
// whose edges are the simple transpositions s_k = (k, k+1).

#include "orthdet/bigint.hpp"
#include "orthdet/errors.hpp"

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <deque>
#include <initializer_list>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace orthdet {

/// Soft ceiling on n for tableau enumeration; |T_lambda| grows super-exponentially.
inline constexpr int kDefaultMaxN = 16;

class Partition {
 public:
  /// The empty partition of 0.
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw ArgumentError("partition parts must be positive: " + to_string());
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw ArgumentError("partition parts must be weakly decreasing: " + to_string());
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Parses a comma-separated part list such as "3,1,1". "" and "0" give the empty partition.
  static Partition parse(std::string_view text) {
    std::vector<int> parts;
    if (text.empty() || text == "0") return Partition{};
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find(',', start), text.size());
      const std::string_view tok = text.substr(start, end - start);
      int value = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ArgumentError("malformed shape '" + std::string(text) + "'");
      parts.push_back(value);
      start = end + 1;
    }
    return Partition(std::move(parts));
  }

  int size() const noexcept { return n_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  std::span<const int> parts() const noexcept { return parts_; }

  /// Length of row `row` (1-based); 0 below the last row.
  int part(int row) const noexcept {
    return row >= 1 && row <= length() ? parts_[static_cast<std::size_t>(row - 1)] : 0;
  }

  Partition conjugate() const {
    std::vector<int> cols;
    for (int c = 1; c <= part(1); ++c) {
      int len = 0;
      while (part(len + 1) >= c) ++len;
      cols.push_back(len);
    }
    return Partition(std::move(cols));
  }

  /// sum_i (i-1) * lambda_i
  int weighted_size() const noexcept {
    int acc = 0;
    for (int i = 0; i < length(); ++i) acc += i * parts_[static_cast<std::size_t>(i)];
    return acc;
  }

  /// "3,1,1"
  std::string csv() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i != 0) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }
  /// "(3,1,1)"
  std::string to_string() const { return "(" + csv() + ")"; }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All partitions of n in lexicographically decreasing order.
inline std::vector<Partition> enumerate_partitions(int n) {
  if (n < 1) throw ArgumentError("enumerate_partitions: n must be >= 1, got " + std::to_string(n));
  std::vector<Partition> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// A box of a Young diagram, 1-based.
struct Cell {
  int row = 1;
  int col = 1;
  int content() const noexcept { return col - row; }
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline std::map<Cell, int> hook_lengths(const Partition& shape) {
  std::map<Cell, int> hooks;
  const Partition conj = shape.conjugate();
  for (int r = 1; r <= shape.length(); ++r)
    for (int c = 1; c <= shape.part(r); ++c)
      hooks[{r, c}] = (shape.part(r) - c) + (conj.part(c) - r) + 1;
  return hooks;
}

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// n! / prod(hooks)
inline BigInt hook_length_count(const Partition& shape) {
  BigInt denom = 1;
  for (const auto& [cell, h] : hook_lengths(shape)) denom *= h;
  return factorial(shape.size()) / denom;
}

class StandardTableau {
 public:
  /// Validates shape, bijectivity onto 1..n and strict row/column increase.
  explicit StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    std::vector<int> parts;
    for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
    shape_ = Partition(parts);
    const int n = shape_.size();
    pos_.assign(static_cast<std::size_t>(n), Cell{0, 0});
    for (int r = 1; r <= shape_.length(); ++r) {
      for (int c = 1; c <= shape_.part(r); ++c) {
        const int v = at({r, c});
        if (v < 1 || v > n || pos_[static_cast<std::size_t>(v - 1)].row != 0)
          throw ArgumentError("tableau entries must be exactly 1..n");
        pos_[static_cast<std::size_t>(v - 1)] = {r, c};
        if (c > 1 && at({r, c - 1}) >= v) throw ArgumentError("tableau rows must strictly increase");
        if (r > 1 && at({r - 1, c}) >= v) throw ArgumentError("tableau columns must strictly increase");
      }
    }
  }

  const Partition& shape() const noexcept { return shape_; }
  int size() const noexcept { return shape_.size(); }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }

  int at(Cell cell) const {
    return rows_[static_cast<std::size_t>(cell.row - 1)][static_cast<std::size_t>(cell.col - 1)];
  }
  Cell position(int entry) const { return pos_.at(static_cast<std::size_t>(entry - 1)); }
  int content(int entry) const { return position(entry).content(); }

  /// Row-reading string of entries; a cheap hash key.
  std::string key() const {
    std::string k;
    k.reserve(static_cast<std::size_t>(size()));
    for (const auto& r : rows_)
      for (int v : r) k.push_back(static_cast<char>(v));
    return k;
  }

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) { return a.rows_ == b.rows_; }
  friend auto operator<=>(const StandardTableau& a, const StandardTableau& b) { return a.rows_ <=> b.rows_; }

 private:
  friend std::optional<StandardTableau> apply_simple_transposition(int k, const StandardTableau& t);
  StandardTableau() = default;

  Partition shape_;
  std::vector<std::vector<int>> rows_;
  std::vector<Cell> pos_;
};

/// t_lambda: rows filled with 1..n in reading order.
inline StandardTableau row_filling_tableau(const Partition& shape) {
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int len : shape.parts()) {
    std::vector<int>& row = rows.emplace_back();
    for (int c = 0; c < len; ++c) row.push_back(next++);
  }
  return StandardTableau(std::move(rows));
}

/// s_k * t: swaps entries k and k+1. Empty when k and k+1 share a row or a column.
inline std::optional<StandardTableau> apply_simple_transposition(int k, const StandardTableau& t) {
  if (k < 1 || k >= t.size())
    throw ArgumentError("simple transposition index " + std::to_string(k) + " out of range for n=" +
                        std::to_string(t.size()));
  const Cell a = t.position(k);
  const Cell b = t.position(k + 1);
  if (a.row == b.row || a.col == b.col) return std::nullopt;
  StandardTableau out;
  out.shape_ = t.shape_;
  out.rows_ = t.rows_;
  out.pos_ = t.pos_;
  out.rows_[static_cast<std::size_t>(a.row - 1)][static_cast<std::size_t>(a.col - 1)] = k + 1;
  out.rows_[static_cast<std::size_t>(b.row - 1)][static_cast<std::size_t>(b.col - 1)] = k;
  std::swap(out.pos_[static_cast<std::size_t>(k - 1)], out.pos_[static_cast<std::size_t>(k)]);
  return out;
}

/// s_k raises t in the weak order iff k sits in a strictly higher row than k+1.
inline bool raises_length(int k, const StandardTableau& t) {
  return t.position(k).row < t.position(k + 1).row && t.position(k).col != t.position(k + 1).col;
}

/// Edge s_k * nodes[lower] == nodes[upper] with length(upper) == length(lower) + 1.
struct TableauEdge {
  std::size_t lower = 0;
  std::size_t upper = 0;
  int k = 0;
};

/// All standard tableaux of one shape in breadth-first order from t_lambda (index 0).
class TableauGraph {
 public:
  static constexpr std::size_t root() noexcept { return 0; }

  const Partition& shape() const noexcept { return shape_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<StandardTableau>& nodes() const noexcept { return nodes_; }
  const StandardTableau& node(std::size_t i) const { return nodes_.at(i); }
  const std::vector<TableauEdge>& edges() const noexcept { return edges_; }

  /// Graph distance from t_lambda, equal to the Coxeter length of w with t = w * t_lambda.
  int length(std::size_t i) const { return length_.at(i); }

  /// Indices into edges() of the edges whose upper end is node i; the first is the BFS parent.
  std::span<const std::size_t> incoming(std::size_t i) const { return incoming_.at(i); }

  std::optional<std::size_t> find(const StandardTableau& t) const {
    const auto it = index_.find(t.key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  friend TableauGraph enumerate_syt(const Partition& shape, int max_n);

  Partition shape_;
  std::vector<StandardTableau> nodes_;
  std::vector<TableauEdge> edges_;
  std::vector<int> length_;
  std::vector<std::vector<std::size_t>> incoming_;
  std::unordered_map<std::string, std::size_t> index_;
};

inline TableauGraph enumerate_syt(const Partition& shape, int max_n = kDefaultMaxN) {
  if (shape.size() > max_n)
    throw ResourceGuardError("tableau enumeration refused: n=" + std::to_string(shape.size()) +
                             " exceeds the configured limit " + std::to_string(max_n));
  TableauGraph g;
  g.shape_ = shape;
  g.nodes_.push_back(row_filling_tableau(shape));
  g.length_.push_back(0);
  g.incoming_.emplace_back();
  g.index_.emplace(g.nodes_.front().key(), 0);
  for (std::size_t i = 0; i < g.nodes_.size(); ++i) {
    for (int k = 1; k < shape.size(); ++k) {
      if (!raises_length(k, g.nodes_[i])) continue;
      StandardTableau next = *apply_simple_transposition(k, g.nodes_[i]);
      auto [it, inserted] = g.index_.emplace(next.key(), g.nodes_.size());
      if (inserted) {
        g.nodes_.push_back(std::move(next));
        g.length_.push_back(g.length_[i] + 1);
        g.incoming_.emplace_back();
      }
      g.incoming_[it->second].push_back(g.edges_.size());
      g.edges_.push_back({i, it->second, k});
    }
  }
  return g;
}

/// A reduced word [i_1, ..., i_l] with t = s_{i_1} ... s_{i_l} * t_lambda.
/// Letters act right to left: s_{i_l} is applied to t_lambda first.
inline std::vector<int> tableau_word(StandardTableau t) {
  std::vector<int> word;
  for (;;) {
    int descent = 0;
    for (int k = 1; k < t.size() && descent == 0; ++k)
      if (t.position(k + 1).row < t.position(k).row) descent = k;
    if (descent == 0) break;
    word.push_back(descent);
    t = *apply_simple_transposition(descent, t);
  }
  return word;
}

}  // namespace orthdet
