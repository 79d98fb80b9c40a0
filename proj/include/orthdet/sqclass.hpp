#pragma once

// Square classes of Q^x: a sign together with a squarefree positive integer.

#include "orthdet/bigint.hpp"
#include "orthdet/errors.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace orthdet {

struct FactoredInteger {
  int sign = 1;
  std::map<BigInt, unsigned> primes;  ///< prime -> exponent, exponents >= 1

  BigInt value() const {
    BigInt v = sign;
    for (const auto& [p, e] : primes) v *= ipow(p, e);
    return v;
  }
};

struct FactorOptions {
  std::uint64_t trial_bound = 1'000'000;
  /// Total Pollard-rho iterations before giving up with UnfactoredError.
  std::uint64_t rho_budget = std::uint64_t{1} << 24;
};

namespace detail {

inline std::vector<std::uint32_t> sieve(std::uint64_t bound) {
  std::vector<bool> composite(bound + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

inline const std::vector<std::uint32_t>& default_primes() {
  static const std::vector<std::uint32_t> primes = sieve(FactorOptions{}.trial_bound);
  return primes;
}

inline bool is_probable_prime(const BigInt& n) {
  std::mt19937 gen(0x5eedU);
  return boost::multiprecision::miller_rabin_test(n, 25, gen);
}

// Brent's variant of Pollard rho. Returns a nontrivial factor of the odd composite n,
// or 0 once the iteration budget is gone.
inline BigInt pollard_brent(const BigInt& n, std::uint64_t& budget) {
  for (unsigned c = 1;; ++c) {
    auto f = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
    BigInt y = 2, x = 2, ys = 2, prod = 1, g = 1;
    const std::uint64_t m = 128;
    for (std::uint64_t r = 1; g == 1; r *= 2) {
      x = y;
      if (budget < r) return 0;
      budget -= r;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += m) {
        ys = y;
        const std::uint64_t steps = std::min(m, r - k);
        if (budget < steps) return 0;
        budget -= steps;
        for (std::uint64_t i = 0; i < steps; ++i) {
          y = f(y);
          prod = (prod * (x > y ? BigInt(x - y) : BigInt(y - x))) % n;
        }
        g = gcd(prod, n);
      }
    }
    if (g == n) {
      do {
        if (budget == 0) return 0;
        --budget;
        ys = f(ys);
        g = gcd(x > ys ? BigInt(x - ys) : BigInt(ys - x), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void split_into(const BigInt& n, std::map<BigInt, unsigned>& out, std::uint64_t& budget) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  const BigInt d = pollard_brent(n, budget);
  if (d == 0) throw UnfactoredError("factorization budget exhausted on cofactor " + n.str());
  split_into(d, out, budget);
  split_into(n / d, out, budget);
}

}  // namespace detail

/// Trial division up to options.trial_bound, then Pollard rho on what remains.
inline FactoredInteger factorize(const BigInt& a, const FactorOptions& options = {}) {
  if (a == 0) throw ArgumentError("cannot factor 0");
  FactoredInteger f;
  f.sign = a < 0 ? -1 : 1;
  BigInt n = a < 0 ? BigInt(-a) : a;

  std::vector<std::uint32_t> custom;
  const std::vector<std::uint32_t>* primes = &detail::default_primes();
  if (options.trial_bound != FactorOptions{}.trial_bound) {
    custom = detail::sieve(options.trial_bound);
    primes = &custom;
  }
  for (std::uint32_t p : *primes) {
    if (BigInt(p) * p > n) break;
    if (n % p != 0) continue;
    unsigned e = 0;
    do {
      n /= p;
      ++e;
    } while (n % p == 0);
    f.primes[BigInt(p)] = e;
  }
  if (n == 1) return f;
  const BigInt bound = options.trial_bound;
  if (n <= bound * bound) {
    ++f.primes[n];
    return f;
  }
  std::uint64_t budget = options.rho_budget;
  detail::split_into(n, f.primes, budget);
  return f;
}

enum class Parity { Odd, Even };

inline const char* to_string(Parity p) { return p == Parity::Odd ? "odd" : "even"; }

/// Exponent of 2 in a nonzero integer.
inline unsigned two_adic_valuation(const BigInt& a) {
  if (a == 0) throw ArgumentError("2-adic valuation of 0");
  return static_cast<unsigned>(boost::multiprecision::lsb(a < 0 ? BigInt(-a) : a));
}

/// Parity of the square class of a nonzero integer, read off the 2-adic valuation.
inline Parity parity_of_integer(const BigInt& a) {
  return two_adic_valuation(a) % 2 == 1 ? Parity::Even : Parity::Odd;
}

class SquareClass {
 public:
  /// The trivial class (+1, 1).
  SquareClass() = default;

  /// Builds a class from a representative already known to be squarefree.
  static SquareClass unchecked(int sign, BigInt squarefree) {
    if ((sign != 1 && sign != -1) || squarefree < 1)
      throw ArgumentError("square class needs sign +-1 and a positive squarefree part");
    SquareClass c;
    c.sign_ = sign;
    c.squarefree_ = std::move(squarefree);
    return c;
  }

  static SquareClass from_factored(const FactoredInteger& f) {
    BigInt sf = 1;
    for (const auto& [p, e] : f.primes)
      if (e % 2 == 1) sf *= p;
    return unchecked(f.sign, std::move(sf));
  }

  int sign() const noexcept { return sign_; }
  const BigInt& squarefree() const noexcept { return squarefree_; }
  BigInt representative() const { return sign_ * squarefree_; }
  bool is_trivial() const { return sign_ == 1 && squarefree_ == 1; }
  Parity parity() const { return is_even(squarefree_) ? Parity::Even : Parity::Odd; }

  /// "(+1, 15)"
  std::string to_string() const {
    return std::string("(") + (sign_ > 0 ? "+1" : "-1") + ", " + squarefree_.str() + ")";
  }

  friend SquareClass operator*(const SquareClass& a, const SquareClass& b) {
    const BigInt g = gcd(a.squarefree_, b.squarefree_);
    return unchecked(a.sign_ * b.sign_, (a.squarefree_ / g) * (b.squarefree_ / g));
  }
  SquareClass& operator*=(const SquareClass& o) { return *this = *this * o; }

  friend bool operator==(const SquareClass&, const SquareClass&) = default;

 private:
  int sign_ = 1;
  BigInt squarefree_ = 1;
};

inline SquareClass class_of_integer(const BigInt& a, const FactorOptions& options = {}) {
  if (a == 0) throw ArgumentError("square class of 0 is undefined");
  return SquareClass::from_factored(factorize(a, options));
}

/// num/den and num*den differ by the square den^2.
inline SquareClass class_of_rational(const BigInt& num, const BigInt& den, const FactorOptions& options = {}) {
  if (num == 0 || den == 0) throw ArgumentError("square class of a rational needs nonzero numerator and denominator");
  const BigInt g = gcd(num, den);
  return class_of_integer((num / g) * (den / g), options);
}

inline SquareClass class_of_rational(const BigRational& r, const FactorOptions& options = {}) {
  return class_of_rational(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r), options);
}

inline SquareClass multiply(const SquareClass& a, const SquareClass& b) { return a * b; }

inline SquareClass power_class(const SquareClass& base, const BigInt& exponent) {
  if (exponent < 0) throw ArgumentError("power_class: negative exponent");
  return is_even(exponent) ? SquareClass{} : base;
}

inline SquareClass power_class(const BigInt& base, const BigInt& exponent) {
  if (base == 0) throw ArgumentError("power_class: base must be nonzero");
  if (exponent < 0) throw ArgumentError("power_class: negative exponent");
  return is_even(exponent) ? SquareClass{} : class_of_integer(base);
}

inline Parity parity(const SquareClass& c) { return c.parity(); }

}  // namespace orthdet
