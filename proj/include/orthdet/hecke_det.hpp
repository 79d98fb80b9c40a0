#pragma once

// Tableau polynomials a_t, their product f_lambda, and the orthogonal determinants
// of the type-A Iwahori-Hecke algebra characters (q >= 2) and of S_n (q = 1).

#include "orthdet/combinat.hpp"
#include "orthdet/polyarith.hpp"
#include "orthdet/sqclass.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace orthdet {

/// x^e * prod_d Phi_d(x)^m_d over d >= 2. Canonical by unique factorization in Z[x],
/// so two products are equal as polynomials iff they compare equal here.
class CyclotomicProduct {
 public:
  std::uint64_t x_power() const noexcept { return x_power_; }
  const std::map<int, std::uint64_t>& phi() const noexcept { return phi_; }

  void multiply_x(std::uint64_t e) { x_power_ += e; }
  void multiply_q_int(int k, std::uint64_t times = 1) {
    if (times == 0) return;
    for (int d : divisors(k))
      if (d > 1) phi_[d] += times;
  }
  CyclotomicProduct& operator*=(const CyclotomicProduct& o) {
    x_power_ += o.x_power_;
    for (const auto& [d, m] : o.phi_) phi_[d] += m;
    return *this;
  }

  IntPoly expand() const {
    IntPoly p = IntPoly::monomial(1, x_power_);
    for (const auto& [d, m] : phi_) p *= pow(cyclotomic(d), static_cast<unsigned>(m));
    return p;
  }

  /// Square class of the value at x = q >= 1, classifying each factor separately.
  SquareClass class_at(const BigInt& q) const {
    if (q < 1) throw ArgumentError("evaluation point must be >= 1");
    SquareClass c;
    if (x_power_ % 2 == 1) c *= class_of_integer(q);
    for (const auto& [d, m] : phi_)
      if (m % 2 == 1) c *= class_of_integer(cyclotomic(d)(q));
    return c;
  }

  friend bool operator==(const CyclotomicProduct&, const CyclotomicProduct&) = default;

 private:
  std::uint64_t x_power_ = 0;
  std::map<int, std::uint64_t> phi_;
};

/// x^e * prod_k [k]_x^m_k over k >= 2, as accumulated along tableau paths.
struct QIntProduct {
  std::uint64_t x_power = 0;
  std::map<int, std::uint64_t> q_ints;

  void multiply_q_int(int k, std::uint64_t times = 1) {
    if (k >= 2 && times != 0) q_ints[k] += times;
  }
  QIntProduct& operator*=(const QIntProduct& o) {
    x_power += o.x_power;
    for (const auto& [k, m] : o.q_ints) q_ints[k] += m;
    return *this;
  }
  CyclotomicProduct cyclotomic() const {
    CyclotomicProduct c;
    c.multiply_x(x_power);
    for (const auto& [k, m] : q_ints) c.multiply_q_int(k, m);
    return c;
  }
  IntPoly expand() const {
    IntPoly p = IntPoly::monomial(1, x_power);
    for (const auto& [k, m] : q_ints) p *= pow(q_int(k), static_cast<unsigned>(m));
    return p;
  }
};

/// c = (j - i) - (m - l) - 1 for k at (i, j) and k+1 at (l, m) in t, where s_k raises t.
inline int edge_c_value(const StandardTableau& t, int k) {
  if (k < 1 || k >= t.size() || !raises_length(k, t))
    throw PreconditionError("edge_c_value: s_" + std::to_string(k) + " does not raise the tableau");
  return t.content(k) - t.content(k + 1) - 1;
}

class ATable {
 public:
  const Partition& shape() const noexcept { return graph_.shape(); }
  const TableauGraph& graph() const noexcept { return graph_; }
  std::size_t size() const noexcept { return graph_.size(); }

  const QIntProduct& factors(std::size_t i) const { return factors_.at(i); }
  const CyclotomicProduct& canonical(std::size_t i) const { return canonical_.at(i); }
  IntPoly polynomial(std::size_t i) const { return factors(i).expand(); }
  IntPoly polynomial(const StandardTableau& t) const {
    const auto i = graph_.find(t);
    if (!i) throw ArgumentError("tableau does not belong to shape " + shape().to_string());
    return polynomial(*i);
  }

  /// f_lambda as accumulated q-integer factors.
  QIntProduct f_factors() const {
    QIntProduct f;
    for (const auto& a : factors_) f *= a;
    return f;
  }

 private:
  friend ATable a_table(const Partition& shape, int max_n);

  TableauGraph graph_;
  std::vector<QIntProduct> factors_;
  std::vector<CyclotomicProduct> canonical_;
};

/// Propagates a_{t'} = x [c+2]_x [c]_x a_t over the tableau graph, checking that
/// every incoming edge of a node yields the same polynomial.
inline ATable a_table(const Partition& shape, int max_n = kDefaultMaxN) {
  ATable table;
  table.graph_ = enumerate_syt(shape, max_n);
  const TableauGraph& g = table.graph_;
  table.factors_.resize(g.size());
  table.canonical_.resize(g.size());

  auto step = [&](const TableauEdge& e) {
    const int c = edge_c_value(g.node(e.lower), e.k);
    QIntProduct next = table.factors_[e.lower];
    next.x_power += 1;
    next.multiply_q_int(c + 2);
    next.multiply_q_int(c);
    return next;
  };

  for (std::size_t i = 1; i < g.size(); ++i) {
    const auto incoming = g.incoming(i);
    table.factors_[i] = step(g.edges()[incoming.front()]);
    table.canonical_[i] = table.factors_[i].cyclotomic();
    for (std::size_t j = 1; j < incoming.size(); ++j) {
      const QIntProduct alt = step(g.edges()[incoming[j]]);
      if (alt.cyclotomic() != table.canonical_[i])
        throw InvariantViolation("a_t depends on the path for shape " + shape.to_string(),
                                 table.factors_[i].expand().to_string() + " vs " + alt.expand().to_string());
    }
  }
  return table;
}

inline IntPoly f_poly(const Partition& shape) { return a_table(shape).f_factors().expand(); }

/// Even degree |T_lambda|; orthogonality is automatic since the characters are rational.
inline bool is_irr_plus_hecke(const Partition& shape) { return is_even(hook_length_count(shape)); }

struct HeckeDetResult {
  Partition shape;
  BigInt q;
  QIntProduct f_factors;
  SquareClass det_class;
  bool irr_plus = false;

  IntPoly f_poly() const { return f_factors.expand(); }
};

/// det = f_lambda(q) * (Q^x)^2, q = 1 giving the symmetric group.
inline HeckeDetResult hecke_det(const ATable& table, const BigInt& q) {
  if (q < 1) throw ArgumentError("hecke_det: q must be >= 1");
  HeckeDetResult r;
  r.shape = table.shape();
  r.q = q;
  r.irr_plus = is_even(BigInt(table.size()));
  if (!r.irr_plus)
    throw NotIrrPlusError("orthogonally unstable: degree " + std::to_string(table.size()) + " of shape " +
                          r.shape.to_string() + " is odd");
  r.f_factors = table.f_factors();
  r.det_class = r.f_factors.cyclotomic().class_at(q);
  return r;
}

inline HeckeDetResult hecke_det(const Partition& shape, const BigInt& q) {
  if (!is_irr_plus_hecke(shape))
    throw NotIrrPlusError("orthogonally unstable: degree " + hook_length_count(shape).str() + " of shape " +
                          shape.to_string() + " is odd");
  return hecke_det(a_table(shape), q);
}

}  // namespace orthdet
