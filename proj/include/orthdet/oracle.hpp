#pragma once

// Independent determinant oracle. Builds explicit seminormal matrices for the Hecke
// algebra H_q(S_n) on the standard-tableau basis, then recovers det(chi) two ways:
// from the invariant Gram form, and from the determinant of a skew element.
// Nothing here touches the tableau polynomials a_t.

#include "orthdet/combinat.hpp"
#include "orthdet/gl_det.hpp"
#include "orthdet/polyarith.hpp"
#include "orthdet/sqclass.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace orthdet {

/// Refuse Gram solving beyond this many basis tableaux.
inline constexpr std::size_t kDefaultOracleMaxDim = 20000;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BigRational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const BigRational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  BigRational trace() const {
    BigRational t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw ArgumentError("matrix dimension mismatch");
    RationalMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const BigRational& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  RationalMatrix& operator+=(const RationalMatrix& o) {
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  RationalMatrix& operator-=(const RationalMatrix& o) {
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }
  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(const BigRational& s, RationalMatrix m) {
    for (auto& x : m.a_) x *= s;
    return m;
  }
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigRational> a_;
};

/// Bareiss fraction-free elimination; every intermediate division is exact.
inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Clears denominators row by row, then runs Bareiss.
inline BigRational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw ArgumentError("determinant of a non-square matrix");
  std::vector<std::vector<BigInt>> ints(m.rows(), std::vector<BigInt>(m.cols()));
  BigInt scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, boost::multiprecision::denominator(m(i, j)));
    for (std::size_t j = 0; j < m.cols(); ++j)
      ints[i][j] = boost::multiprecision::numerator(m(i, j)) * (l / boost::multiprecision::denominator(m(i, j)));
    scale *= l;
  }
  return BigRational(bareiss_determinant(std::move(ints)), scale);
}

/// Generator matrices T_1..T_{n-1} acting on column vectors indexed by T_lambda
/// (breadth-first order from t_lambda).
struct SeminormalRep {
  Partition shape;
  BigInt q;
  std::vector<StandardTableau> basis;
  std::vector<RationalMatrix> generators;  ///< generators[i - 1] is T_i

  std::size_t dim() const noexcept { return basis.size(); }
  const RationalMatrix& generator(int i) const { return generators.at(static_cast<std::size_t>(i - 1)); }
};

namespace detail {

/// Diagonal entry (q-1)/(1-q^{-d}) for axial distance d, written so that q = 1 is finite:
/// q^d/[d]_q for d > 0 and -1/[-d]_q for d < 0.
inline BigRational seminormal_diagonal(const BigInt& q, int d) {
  if (d > 0) return BigRational(ipow(q, static_cast<std::uint64_t>(d)), q_int(d)(q));
  return BigRational(-1, q_int(-d)(q));
}

inline void check_relations(const SeminormalRep& rep) {
  const std::size_t dim = rep.dim();
  const RationalMatrix id = RationalMatrix::identity(dim);
  const BigRational q(rep.q);
  const int n = rep.shape.size();
  auto fail = [&](const std::string& rel) {
    throw InvariantViolation("seminormal relation failed: " + rel,
                             "shape=" + rep.shape.to_string() + " q=" + rep.q.str());
  };
  for (int i = 1; i < n; ++i) {
    const RationalMatrix& t = rep.generator(i);
    if ((t - q * id) * (t + id) != RationalMatrix(dim, dim))
      fail("(T_" + std::to_string(i) + " - q)(T_" + std::to_string(i) + " + 1) = 0");
    if (i + 1 < n) {
      const RationalMatrix& u = rep.generator(i + 1);
      if (t * u * t != u * t * u) fail("braid T_" + std::to_string(i) + " T_" + std::to_string(i + 1));
    }
    for (int j = i + 2; j < n; ++j) {
      const RationalMatrix& u = rep.generator(j);
      if (t * u != u * t) fail("T_" + std::to_string(i) + " T_" + std::to_string(j) + " commute");
    }
  }
}

}  // namespace detail

/// Builds the seminormal representation and verifies the quadratic, braid and
/// commutation relations before returning it.
inline SeminormalRep build_seminormal(const Partition& shape, const BigInt& q, int max_n = kDefaultMaxN) {
  if (q < 1) throw ArgumentError("build_seminormal: q must be >= 1");
  if (shape.empty()) throw ArgumentError("build_seminormal: empty shape");
  const TableauGraph graph = enumerate_syt(shape, max_n);
  SeminormalRep rep;
  rep.shape = shape;
  rep.q = q;
  rep.basis = graph.nodes();
  const std::size_t dim = rep.dim();
  const int n = shape.size();

  for (int i = 1; i < n; ++i) {
    RationalMatrix m(dim, dim);
    for (std::size_t a = 0; a < dim; ++a) {
      const StandardTableau& t = rep.basis[a];
      const Cell pk = t.position(i);
      const Cell pk1 = t.position(i + 1);
      if (pk.row == pk1.row) {
        m(a, a) = BigRational(q);
        continue;
      }
      if (pk.col == pk1.col) {
        m(a, a) = -1;
        continue;
      }
      const int d = pk1.content() - pk.content();
      if (d == 1 || d == -1 || d == 0)
        throw InvariantViolation("axial distance of non-adjacent entries must satisfy |d| >= 2",
                                 "shape=" + shape.to_string() + " i=" + std::to_string(i));
      const std::size_t b = *graph.find(*apply_simple_transposition(i, t));
      const BigRational alpha = detail::seminormal_diagonal(q, d);
      m(a, a) = alpha;
      if (raises_length(i, t)) {
        m(b, a) = 1;
      } else {
        m(b, a) = alpha * detail::seminormal_diagonal(q, -d) + BigRational(q);
      }
    }
    rep.generators.push_back(std::move(m));
  }
  detail::check_relations(rep);
  return rep;
}

/// Product rho(T_{w_1}) ... rho(T_{w_k}) for word = [w_1, ..., w_k].
inline RationalMatrix word_image(const SeminormalRep& rep, const std::vector<int>& word) {
  RationalMatrix m = RationalMatrix::identity(rep.dim());
  for (int i : word) {
    if (i < 1 || i >= rep.shape.size()) throw ArgumentError("word letter " + std::to_string(i) + " out of range");
    m = m * rep.generator(i);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Permutations in one-line notation over 1..n.

using Permutation = std::vector<int>;

inline Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
  return p;
}

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation p = identity_permutation(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// s_k * w: exchanges the values k and k+1.
inline Permutation left_multiply(int k, Permutation w) {
  for (int& v : w) {
    if (v == k) v = k + 1;
    else if (v == k + 1) v = k;
  }
  return w;
}

inline Permutation inverse(const Permutation& w) {
  Permutation inv(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) inv[static_cast<std::size_t>(w[i] - 1)] = static_cast<int>(i) + 1;
  return inv;
}

inline int coxeter_length(const Permutation& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

/// [k_1, ..., k_l] with w = s_{k_1} ... s_{k_l} and l = length(w).
inline std::vector<int> reduced_word(Permutation w) {
  std::vector<int> word;
  std::vector<int> pos(w.size() + 1);
  for (;;) {
    for (std::size_t i = 0; i < w.size(); ++i) pos[static_cast<std::size_t>(w[i])] = static_cast<int>(i);
    int descent = 0;
    for (int k = 1; k < static_cast<int>(w.size()) && descent == 0; ++k)
      if (pos[static_cast<std::size_t>(k + 1)] < pos[static_cast<std::size_t>(k)]) descent = k;
    if (descent == 0) return word;
    word.push_back(descent);
    w = left_multiply(descent, std::move(w));
  }
}

/// rho(T_w) for every w in S_n, built as T_w = T_k T_{s_k w} along reduced words.
inline std::map<Permutation, RationalMatrix> all_word_images(const SeminormalRep& rep) {
  std::vector<Permutation> perms = all_permutations(rep.shape.size());
  std::stable_sort(perms.begin(), perms.end(),
                   [](const Permutation& a, const Permutation& b) { return coxeter_length(a) < coxeter_length(b); });
  std::map<Permutation, RationalMatrix> images;
  for (const Permutation& w : perms) {
    const std::vector<int> word = reduced_word(w);
    if (word.empty()) {
      images.emplace(w, RationalMatrix::identity(rep.dim()));
      continue;
    }
    images.emplace(w, rep.generator(word.front()) * images.at(left_multiply(word.front(), w)));
  }
  return images;
}

// ---------------------------------------------------------------------------
// Gram form.

struct GramForm {
  RationalMatrix matrix;  ///< symmetric, integer entries with content 1
  BigInt determinant;
};

namespace detail {

using SparseRow = std::vector<std::pair<std::size_t, BigInt>>;  // sorted by column

inline void normalize_content(SparseRow& row) {
  BigInt g = 0;
  for (const auto& [c, v] : row) g = gcd(g, v);
  if (g > 1)
    for (auto& [c, v] : row) v /= g;
}

inline const BigInt* find_entry(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
  return it != row.end() && it->first == col ? &it->second : nullptr;
}

/// a * x - b * y over sparse rows.
inline SparseRow combine(const BigInt& a, const SparseRow& x, const BigInt& b, const SparseRow& y) {
  SparseRow out;
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -b * y[j].second);
      ++j;
    } else {
      BigInt v = a * x[i].second - b * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  normalize_content(out);
  return out;
}

/// Incremental fraction-free reduced row echelon form over Z.
class SparseEchelon {
 public:
  void add(SparseRow row) {
    for (const auto& [col, prow] : pivots_) {
      const BigInt* v = find_entry(row, col);
      if (v == nullptr) continue;
      const BigInt coeff = *v;
      row = combine(*find_entry(prow, col), row, coeff, prow);
    }
    if (row.empty()) return;
    const std::size_t pcol = row.front().first;
    const BigInt& pval = row.front().second;
    for (auto& [col, prow] : pivots_) {
      const BigInt* v = find_entry(prow, pcol);
      if (v == nullptr) continue;
      const BigInt coeff = *v;
      prow = combine(pval, prow, coeff, row);
    }
    pivots_.emplace(pcol, std::move(row));
  }
  std::size_t rank() const noexcept { return pivots_.size(); }
  const std::map<std::size_t, SparseRow>& pivots() const noexcept { return pivots_; }

 private:
  std::map<std::size_t, SparseRow> pivots_;
};

}  // namespace detail

/// Solves transpose(T_i) X = X T_i for symmetric X. The solution space must be one-dimensional.
inline GramForm gram_form(const SeminormalRep& rep) {
  const std::size_t n = rep.dim();
  const std::size_t unknowns = n * (n + 1) / 2;
  auto var = [n](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return a * n - a * (a - 1) / 2 + (b - a);
  };
  auto witness = [&] { return "shape=" + rep.shape.to_string() + " q=" + rep.q.str(); };

  detail::SparseEchelon echelon;
  for (const RationalMatrix& t : rep.generators) {
    // (T^T X - X T)(a, b) = sum_c T(c, a) X(c, b) - sum_c X(a, c) T(c, b); antisymmetric in (a, b).
    std::vector<std::vector<std::pair<std::size_t, BigRational>>> cols(n);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t a = 0; a < n; ++a)
        if (!t(c, a).is_zero()) cols[a].emplace_back(c, t(c, a));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        std::map<std::size_t, BigRational> eq;
        for (const auto& [c, v] : cols[a]) eq[var(c, b)] += v;
        for (const auto& [c, v] : cols[b]) eq[var(a, c)] -= v;
        BigInt l = 1;
        for (const auto& [k, v] : eq) l = lcm(l, boost::multiprecision::denominator(v));
        detail::SparseRow row;
        for (const auto& [k, v] : eq)
          if (!v.is_zero())
            row.emplace_back(k, boost::multiprecision::numerator(v) * (l / boost::multiprecision::denominator(v)));
        detail::normalize_content(row);
        if (!row.empty()) echelon.add(std::move(row));
      }
  }
  if (echelon.rank() + 1 != unknowns)
    throw InvariantViolation("invariant symmetric forms: solution space has dimension " +
                                 std::to_string(unknowns - echelon.rank()) + ", expected 1",
                             witness());

  std::size_t free_col = 0;
  while (echelon.pivots().count(free_col) != 0) ++free_col;
  BigInt scale = 1;
  for (const auto& [col, row] : echelon.pivots()) scale = lcm(scale, *detail::find_entry(row, col));
  std::vector<BigInt> x(unknowns);
  x[free_col] = scale;
  for (const auto& [col, row] : echelon.pivots()) {
    const BigInt* f = detail::find_entry(row, free_col);
    x[col] = f == nullptr ? BigInt(0) : BigInt(-*f * (scale / *detail::find_entry(row, col)));
  }
  BigInt g = 0;
  for (const BigInt& v : x) g = gcd(g, v);
  const auto first = std::find_if(x.begin(), x.end(), [](const BigInt& v) { return v != 0; });
  if (*first < 0) g = -g;
  for (BigInt& v : x) v /= g;

  GramForm form;
  form.matrix = RationalMatrix(n, n);
  std::vector<std::vector<BigInt>> ints(n, std::vector<BigInt>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      ints[a][b] = x[var(a, b)];
      form.matrix(a, b) = ints[a][b];
    }
  for (const RationalMatrix& t : rep.generators)
    if (t.transpose() * form.matrix != form.matrix * t)
      throw InvariantViolation("Gram solution is not invariant", witness());
  form.determinant = bareiss_determinant(std::move(ints));
  if (form.determinant == 0) throw InvariantViolation("invariant form is degenerate", witness());
  return form;
}

inline void require_even_dimension(const Partition& shape, std::size_t max_dim, const char* who) {
  const BigInt dim = hook_length_count(shape);
  if (dim > max_dim)
    throw ResourceGuardError(std::string(who) + ": |T_lambda| = " + dim.str() + " exceeds the limit " +
                             std::to_string(max_dim));
  if (!is_even(dim))
    throw PreconditionError(std::string(who) + ": degree " + dim.str() + " of " + shape.to_string() +
                            " is odd, so the determinant is not a well-defined square class");
}

inline SquareClass oracle_det(const Partition& shape, const BigInt& q, std::size_t max_dim = kDefaultOracleMaxDim) {
  require_even_dimension(shape, max_dim, "oracle_det");
  return class_of_integer(gram_form(build_seminormal(shape, q)).determinant);
}

// ---------------------------------------------------------------------------
// Skew elements.

struct SkewOptions {
  int attempts = 32;
  int coefficient_bound = 5;  ///< coefficients drawn from [-bound, bound]
};

/// det(rho(h)) for h = sum_w c_w (T_w - T_{w^-1}), which satisfies h^dagger = -h.
inline SquareClass skew_element_det(const Partition& shape, const BigInt& q, std::uint64_t seed,
                                    const SkewOptions& options = {},
                                    std::size_t max_dim = kDefaultOracleMaxDim) {
  require_even_dimension(shape, max_dim, "skew_element_det");
  const SeminormalRep rep = build_seminormal(shape, q);
  const auto images = all_word_images(rep);
  std::mt19937_64 rng(seed);
  const auto span = static_cast<std::uint64_t>(2 * options.coefficient_bound + 1);
  for (int attempt = 0; attempt < options.attempts; ++attempt) {
    RationalMatrix h(rep.dim(), rep.dim());
    for (const auto& [w, image] : images) {
      const Permutation w_inv = inverse(w);
      if (w_inv == w) continue;
      const BigRational c = static_cast<std::int64_t>(rng() % span) - options.coefficient_bound;
      if (c.is_zero()) continue;
      h += c * (image - images.at(w_inv));
    }
    const BigRational d = determinant(h);
    if (!d.is_zero()) return class_of_rational(d);
  }
  throw ResourceGuardError("no invertible skew element found in " + std::to_string(options.attempts) +
                           " attempts for shape " + shape.to_string() + " q=" + q.str());
}

// ---------------------------------------------------------------------------
// Trace form of H_q(S_n).

namespace detail {

using HeckeElement = std::map<Permutation, BigInt>;

/// T_{s_k} * h using T_s T_w = T_{sw} if l(sw) > l(w), else q T_{sw} + (q-1) T_w.
inline HeckeElement left_multiply_generator(int k, const HeckeElement& h, const BigInt& q) {
  HeckeElement out;
  for (const auto& [w, c] : h) {
    Permutation sw = left_multiply(k, w);
    if (coxeter_length(sw) > coxeter_length(w)) {
      out[std::move(sw)] += c;
    } else {
      out[std::move(sw)] += q * c;
      out[w] += (q - 1) * c;
    }
  }
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  return out;
}

}  // namespace detail

/// Checks, in the Schur basis of H_q(S_n), that tau(T_w T_w') = q^{l(w)} when w' = w^-1 and 0
/// otherwise (tau = coefficient of T_1), and that tau equals the combination
/// sum_lambda D_lambda(q)/P_n(q) * trace(rho_lambda) of the seminormal representations,
/// D_lambda the unipotent degree polynomial and P_n = prod [i]_q.
inline bool regular_structure_check(int n, const BigInt& q) {
  if (n < 1 || n > 5) throw PreconditionError("regular_structure_check: need 1 <= n <= 5");
  if (q < 1) throw ArgumentError("regular_structure_check: q must be >= 1");
  const std::vector<Permutation> perms = all_permutations(n);
  const Permutation id = identity_permutation(n);

  for (const Permutation& w : perms) {
    const std::vector<int> word = reduced_word(w);
    const BigInt expected_pair = ipow(q, word.size());
    const Permutation w_inv = inverse(w);
    for (const Permutation& v : perms) {
      detail::HeckeElement h{{v, BigInt(1)}};
      for (auto it = word.rbegin(); it != word.rend(); ++it) h = detail::left_multiply_generator(*it, h, q);
      const auto found = h.find(id);
      const BigInt tau = found == h.end() ? BigInt(0) : found->second;
      const BigInt expected = v == w_inv ? expected_pair : BigInt(0);
      if (tau != expected)
        throw InvariantViolation("trace form mismatch in the Schur basis",
                                 "n=" + std::to_string(n) + " q=" + q.str() + " |w|=" + std::to_string(word.size()));
    }
  }

  BigRational poincare = 1;
  for (int i = 1; i <= n; ++i) poincare *= BigRational(q_int(i)(q));
  std::map<Permutation, BigRational> tau;
  for (const Partition& shape : enumerate_partitions(n)) {
    const BigRational weight = BigRational(unipotent_degree_poly(shape)(q)) / poincare;
    for (const auto& [w, image] : all_word_images(build_seminormal(shape, q))) tau[w] += weight * image.trace();
  }
  for (const auto& [w, value] : tau)
    if (value != (w == id ? 1 : 0))
      throw InvariantViolation("seminormal traces do not reproduce the trace form",
                               "n=" + std::to_string(n) + " q=" + q.str());
  return true;
}

}  // namespace orthdet
