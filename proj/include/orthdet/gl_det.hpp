#pragma once

// Orthogonal determinants of principal-series characters of GL_n(q), q an odd prime power:
// unipotent characters chi_lambda and the sgn-twisted induced characters chi_(lambda, mu).

#include "orthdet/hecke_det.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace orthdet {

struct PrimePower {
  std::int64_t p = 3;
  int r = 1;
  std::int64_t q = 3;

  BigInt value() const { return q; }
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// q = p^r with p an odd prime.
inline PrimePower validate_prime_power(std::int64_t q) {
  if (q < 3 || q % 2 == 0)
    throw ArgumentError("q must be a power of an odd prime, got " + std::to_string(q));
  std::int64_t p = 3;
  while (q % p != 0) p += 2;
  std::int64_t m = q;
  int r = 0;
  while (m % p == 0) {
    m /= p;
    ++r;
  }
  if (m != 1) throw ArgumentError("q must be a power of an odd prime, got " + std::to_string(q));
  return {p, r, q};
}

/// q^{n(lambda)} prod_{i<=n}(q^i - 1) / prod_{cells}(q^{hook} - 1) for integer q >= 2.
inline BigInt unipotent_degree(const Partition& shape, const BigInt& q) {
  if (q < 2) throw ArgumentError("unipotent_degree: q must be >= 2");
  BigInt num = ipow(q, static_cast<std::uint64_t>(shape.weighted_size()));
  for (int i = 1; i <= shape.size(); ++i) num *= ipow(q, static_cast<std::uint64_t>(i)) - 1;
  BigInt den = 1;
  for (const auto& [cell, h] : hook_lengths(shape)) den *= ipow(q, static_cast<std::uint64_t>(h)) - 1;
  if (num % den != 0)
    throw InvariantViolation("q-hook degree formula is not integral",
                             "shape=" + shape.to_string() + " q=" + q.str());
  return num / den;
}

inline BigInt unipotent_degree(const Partition& shape, const PrimePower& q) {
  return unipotent_degree(shape, q.value());
}

/// The same degree as a polynomial: x^{n(lambda)} prod_i [i]_x / prod_cells [h]_x.
/// Its value at 1 is |T_lambda|.
inline IntPoly unipotent_degree_poly(const Partition& shape) {
  IntPoly num = IntPoly::monomial(1, static_cast<std::size_t>(shape.weighted_size()));
  for (int i = 1; i <= shape.size(); ++i) num *= q_int(i);
  IntPoly den = IntPoly::constant(1);
  for (const auto& [cell, h] : hook_lengths(shape)) den *= q_int(h);
  return num.exact_div(den);
}

/// chi_U(1) / (q - 1) where chi_T(1) = |T_lambda|.
inline BigInt chi_u_exponent(const Partition& shape, const BigInt& q, const BigInt& degree) {
  const BigInt chi_u = degree - hook_length_count(shape);
  if (chi_u % (q - 1) != 0)
    throw InvariantViolation("q - 1 does not divide chi_U(1)",
                             "shape=" + shape.to_string() + " q=" + q.str() + " chi_U(1)=" + chi_u.str());
  return chi_u / (q - 1);
}

inline BigInt chi_u_exponent(const Partition& shape, const PrimePower& q) {
  return chi_u_exponent(shape, q.value(), unipotent_degree(shape, q));
}

struct DetFactor {
  std::string label;
  SquareClass value;
  std::string detail;
};

struct GlDetResult {
  std::string descriptor;
  BigInt degree;
  SquareClass det_class;
  std::vector<DetFactor> breakdown;  ///< product of the values equals det_class
};

/// det(chi_lambda) = f_lambda(q) * q^{chi_U(1)/(q-1)}, reusing a precomputed a_t table.
inline GlDetResult unipotent_det(const ATable& table, const PrimePower& q) {
  const Partition& shape = table.shape();
  GlDetResult r;
  r.descriptor = "unipotent chi_" + shape.to_string() + " of GL_" + std::to_string(shape.size()) + "(" +
                 std::to_string(q.q) + ")";
  r.degree = unipotent_degree(shape, q);
  if (!is_even(r.degree))
    throw NotIrrPlusError("degree " + r.degree.str() + " is odd: not in Irr+");
  if (!is_even(BigInt(table.size())))
    throw InvariantViolation("GL degree and Hecke degree disagree in parity",
                             "shape=" + shape.to_string() + " q=" + std::to_string(q.q));

  const HeckeDetResult hecke = hecke_det(table, q.value());
  const BigInt exponent = chi_u_exponent(shape, q.value(), r.degree);
  const SquareClass q_power = power_class(q.value(), exponent);
  r.det_class = hecke.det_class * q_power;
  r.breakdown.push_back({"hecke", hecke.det_class, "f_lambda(q)"});
  r.breakdown.push_back({"q-power", q_power, "q^" + exponent.str()});
  return r;
}

inline GlDetResult unipotent_det(const Partition& shape, const PrimePower& q) {
  if (shape.empty()) throw ArgumentError("unipotent_det: empty shape");
  const BigInt degree = unipotent_degree(shape, q);
  if (!is_even(degree)) throw NotIrrPlusError("degree " + degree.str() + " is odd: not in Irr+");
  return unipotent_det(a_table(shape), q);
}

/// det of Ind_P^G(chi_lambda x sgn_m chi_mu) with lambda |- l, mu |- m.
inline GlDetResult sgn_pair_det(const Partition& lambda, const Partition& mu, const PrimePower& q) {
  if (lambda.empty() && mu.empty()) throw ArgumentError("sgn_pair_det: both partitions are empty");
  // The sgn twist does not change the determinant, and one empty side leaves a unipotent character.
  if (lambda.empty() || mu.empty()) {
    GlDetResult r = unipotent_det(lambda.empty() ? mu : lambda, q);
    r.descriptor = "chi_(" + lambda.to_string() + "," + mu.to_string() + ") = " + r.descriptor;
    return r;
  }

  const int n = lambda.size() + mu.size();
  GlDetResult r;
  r.descriptor = "chi_(" + lambda.to_string() + "," + mu.to_string() + ") of GL_" + std::to_string(n) + "(" +
                 std::to_string(q.q) + ")";
  const BigInt index = gaussian_binomial(n, lambda.size(), q.value());
  const BigInt deg_lambda = unipotent_degree(lambda, q);
  const BigInt deg_mu = unipotent_degree(mu, q);
  r.degree = index * deg_lambda * deg_mu;
  if (!is_even(r.degree)) throw NotIrrPlusError("degree " + r.degree.str() + " is odd: not in Irr+");

  if (is_even(index)) {
    r.det_class = SquareClass{};
    r.breakdown.push_back({"induction", SquareClass{}, "[G:P] = " + index.str() + " is even"});
    return r;
  }
  r.breakdown.push_back({"induction", SquareClass{}, "[G:P] = " + index.str() + " is odd"});

  const bool lambda_even = is_even(deg_lambda);
  if (!lambda_even && !is_even(deg_mu))
    throw InvariantViolation("odd index with two odd-degree factors but even total degree", r.descriptor);
  const GlDetResult inner = unipotent_det(lambda_even ? lambda : mu, q);
  const BigInt& other_degree = lambda_even ? deg_mu : deg_lambda;
  for (const DetFactor& f : inner.breakdown) {
    const SquareClass v = power_class(f.value, other_degree);
    r.breakdown.push_back({"outer-product " + f.label, v, "(" + f.detail + ")^" + other_degree.str()});
    r.det_class *= v;
  }
  return r;
}

/// q^{chi_U(1)/(q-1)}: the only factor of a Borel-stable determinant that lies in Q.
inline SquareClass borel_q_power_factor(const BigInt& chi_u_degree, const PrimePower& q) {
  if (chi_u_degree % (q.q - 1) != 0) throw ArgumentError("q - 1 must divide chi_U(1)");
  return power_class(q.value(), chi_u_degree / (q.q - 1));
}

/// Borel-stable characters (|theta| >= 3) need det(chi_T) over Q(mu + mu^-1); not computed here.
[[noreturn]] inline void borel_stable_det(int theta_order) {
  throw ArgumentError("Borel-stable character (|theta| = " + std::to_string(theta_order) +
                      "): det(chi_T) lies in a real cyclotomic field Q(mu + mu^-1), which is not supported; "
                      "only the rational factor q^{chi_U(1)/(q-1)} is available");
}

}  // namespace orthdet
