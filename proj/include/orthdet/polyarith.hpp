#pragma once

// Dense integer polynomials, q-integers, cyclotomic polynomials and Gaussian binomials.

#include "orthdet/bigint.hpp"
#include "orthdet/errors.hpp"

#include <cstddef>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace orthdet {

/// Integer polynomial in one variable. coeffs()[i] is the coefficient of x^i;
/// trailing zeros are trimmed so the zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  static IntPoly constant(BigInt v) { return IntPoly(std::vector<BigInt>{std::move(v)}); }
  static IntPoly monomial(BigInt coeff, std::size_t degree) {
    std::vector<BigInt> c(degree + 1);
    c[degree] = std::move(coeff);
    return IntPoly(std::move(c));
  }
  static IntPoly x() { return monomial(1, 1); }

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return c_; }
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  const BigInt& leading() const { return c_.back(); }

  IntPoly& operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  IntPoly& operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(c));
  }
  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

  /// Quotient and remainder; the divisor must have leading coefficient +-1.
  std::pair<IntPoly, IntPoly> divmod(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw ArgumentError("polynomial division by zero");
    const BigInt& lead = divisor.leading();
    if (lead != 1 && lead != -1) throw ArgumentError("polynomial divisor must be monic up to sign");
    std::vector<BigInt> rem = c_;
    const std::size_t dd = divisor.c_.size();
    if (rem.size() < dd) return {IntPoly{}, *this};
    std::vector<BigInt> quo(rem.size() - dd + 1);
    for (std::size_t i = rem.size(); i-- >= dd;) {
      const BigInt f = rem[i] * lead;  // lead^-1 == lead
      quo[i - dd + 1] = f;
      if (f == 0) continue;
      for (std::size_t j = 0; j < dd; ++j) rem[i - dd + 1 + j] -= f * divisor.c_[j];
    }
    return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
  }

  /// Exact division; a nonzero remainder is an invariant violation.
  IntPoly exact_div(const IntPoly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero())
      throw InvariantViolation("inexact polynomial division", to_string() + " / " + divisor.to_string());
    return q;
  }

  /// Horner evaluation.
  BigInt operator()(const BigInt& at) const {
    BigInt acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
    return acc;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      BigInt mag = c_[i] < 0 ? BigInt(-c_[i]) : c_[i];
      if (out.empty()) {
        if (c_[i] < 0) out += "-";
      } else {
        out += c_[i] < 0 ? " - " : " + ";
      }
      if (mag != 1 || i == 0) out += mag.str();
      if (i >= 1) out += "x";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

inline BigInt eval_at(const IntPoly& p, const BigInt& q) { return p(q); }

inline IntPoly pow(const IntPoly& base, unsigned exp) {
  IntPoly result = IntPoly::constant(1);
  for (unsigned i = 0; i < exp; ++i) result *= base;
  return result;
}

/// [k]_x = 1 + x + ... + x^(k-1)
inline IntPoly q_int(int k) {
  if (k < 1) throw ArgumentError("q_int: k must be >= 1, got " + std::to_string(k));
  return IntPoly(std::vector<BigInt>(static_cast<std::size_t>(k), BigInt(1)));
}

inline std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

namespace detail {
struct CyclotomicCache {
  std::mutex mutex;
  std::map<int, IntPoly> table;
};
inline CyclotomicCache& cyclotomic_cache() {
  static CyclotomicCache cache;
  return cache;
}
}  // namespace detail

/// Phi_n, by exact division of x^n - 1 by the Phi_d for proper divisors d of n.
inline IntPoly cyclotomic(int n) {
  if (n < 1) throw ArgumentError("cyclotomic: n must be >= 1, got " + std::to_string(n));
  auto& cache = detail::cyclotomic_cache();
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.table.find(n); it != cache.table.end()) return it->second;
  }
  IntPoly p = IntPoly::monomial(1, static_cast<std::size_t>(n)) - IntPoly::constant(1);
  for (int d : divisors(n))
    if (d < n) p = p.exact_div(cyclotomic(d));
  std::lock_guard lock(cache.mutex);
  return cache.table.emplace(n, std::move(p)).first->second;
}

/// Phi_n(1): s if n = s^k for a prime s, 0 if n = 1, 1 otherwise.
inline int phi_at_one(int n) {
  if (n < 1) throw ArgumentError("phi_at_one: n must be >= 1");
  if (n == 1) return 0;
  int p = 2;
  while (n % p != 0) ++p;
  int m = n;
  while (m % p == 0) m /= p;
  return m == 1 ? p : 1;
}

/// Gaussian binomial [n choose l]_q, built up one exact division at a time.
inline BigInt gaussian_binomial(int n, int l, const BigInt& q) {
  if (l < 0 || n < 0 || l > n) throw ArgumentError("gaussian_binomial: need 0 <= l <= n");
  if (q < 2) throw ArgumentError("gaussian_binomial: q must be >= 2");
  BigInt result = 1;
  for (int i = 1; i <= l; ++i) {
    result *= ipow(q, static_cast<std::uint64_t>(n - l + i)) - 1;
    const BigInt den = ipow(q, static_cast<std::uint64_t>(i)) - 1;
    if (result % den != 0)
      throw InvariantViolation("inexact Gaussian binomial step",
                               "n=" + std::to_string(n) + " l=" + std::to_string(l) + " q=" + q.str());
    result /= den;
  }
  return result;
}

}  // namespace orthdet
