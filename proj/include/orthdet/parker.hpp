#pragma once

// Sweeps confirming that orthogonal determinants of GL_n(q) and S_n are odd square classes.

#include "orthdet/gl_det.hpp"
#include "orthdet/hecke_det.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace orthdet {

/// Parity of the square class of [c]_q [c+2]_q agrees with that of c(c+2), q odd.
inline bool lemma_parity_check(int c, std::int64_t q) {
  if (c < 1) throw ArgumentError("lemma_parity_check: c must be >= 1");
  if (q < 3 || q % 2 == 0) throw ArgumentError("lemma_parity_check: q must be odd and >= 3");
  // v_2([k]_q): the geometric sum modulo 2^64 is exact whenever it is nonzero.
  auto q_int_valuation = [q](int k) -> unsigned {
    std::uint64_t sum = 0, power = 1;
    for (int i = 0; i < k; ++i) {
      sum += power;
      power *= static_cast<std::uint64_t>(q);
    }
    if (sum != 0) return static_cast<unsigned>(__builtin_ctzll(sum));
    return two_adic_valuation(q_int(k)(q));
  };
  const Parity lhs = parity_of_integer(BigInt(c) * (c + 2));
  const Parity rhs = (q_int_valuation(c) + q_int_valuation(c + 2)) % 2 == 1 ? Parity::Even : Parity::Odd;
  return lhs == rhs;
}

struct ParityWitness {
  std::string family;  ///< "unipotent", "symmetric" or "sgnpair"
  Partition lambda;
  std::optional<Partition> mu;
  BigInt q;
  SquareClass det_class;
  std::string detail;  ///< factored determinant

  friend bool operator<(const ParityWitness& a, const ParityWitness& b) {
    if (a.lambda.size() + (a.mu ? a.mu->size() : 0) != b.lambda.size() + (b.mu ? b.mu->size() : 0))
      return a.lambda.size() + (a.mu ? a.mu->size() : 0) < b.lambda.size() + (b.mu ? b.mu->size() : 0);
    if (a.lambda != b.lambda) return b.lambda < a.lambda;
    if (a.mu != b.mu) return b.mu < a.mu;
    return a.q < b.q;
  }
};

struct ParityReport {
  static constexpr std::size_t kWitnessSample = 12;

  std::string scope;
  std::uint64_t checked = 0;
  std::vector<ParityWitness> failures;  ///< empty iff the parity claim holds on the scope
  std::vector<ParityWitness> witnesses;

  bool confirmed() const noexcept { return failures.empty(); }

  /// Order-independent: failures are kept sorted, witnesses keep the smallest sample.
  void merge(ParityReport other) {
    checked += other.checked;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
    std::sort(failures.begin(), failures.end());
    std::sort(witnesses.begin(), witnesses.end());
    if (witnesses.size() > kWitnessSample) witnesses.resize(kWitnessSample);
  }

  void record(ParityWitness w) {
    ++checked;
    ParityReport single;
    if (w.det_class.parity() == Parity::Even)
      single.failures.push_back(std::move(w));
    else
      single.witnesses.push_back(std::move(w));
    merge(std::move(single));
  }
};

namespace detail {

inline std::string describe(const GlDetResult& r) {
  std::string s = r.descriptor + ": det " + r.det_class.to_string() + " =";
  for (const auto& f : r.breakdown) s += " [" + f.label + " " + f.value.to_string() + " " + f.detail + "]";
  return s;
}

inline std::string describe(const QIntProduct& f) {
  std::string s = "x^" + std::to_string(f.x_power);
  for (const auto& [k, m] : f.q_ints) s += " [" + std::to_string(k) + "]^" + std::to_string(m);
  return s;
}

/// Runs task(i) for i in [0, count) on up to `jobs` threads and merges the reports.
inline ParityReport run_parallel(std::size_t count, unsigned jobs,
                                 const std::function<ParityReport(std::size_t)>& task) {
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::vector<ParityReport> partial(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  {
    std::vector<std::jthread> workers;
    for (unsigned j = 0; j < jobs; ++j)
      workers.emplace_back([&, j] {
        try {
          for (std::size_t i = j; i < count; i += jobs) partial[j].merge(task(i));
        } catch (...) {
          errors[j] = std::current_exception();
        }
      });
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  ParityReport total;
  for (auto& p : partial) total.merge(std::move(p));
  return total;
}

inline std::vector<Partition> partitions_up_to(int n_max) {
  std::vector<Partition> all;
  for (int n = 1; n <= n_max; ++n)
    for (auto& p : enumerate_partitions(n)) all.push_back(std::move(p));
  return all;
}

inline std::string q_list(const std::vector<PrimePower>& qs) {
  std::string s;
  for (const auto& q : qs) s += (s.empty() ? "" : ",") + std::to_string(q.q);
  return s;
}

}  // namespace detail

/// Every unipotent chi_lambda in Irr+(GL_n(q)), n <= n_max, q in q_set, has odd determinant.
inline ParityReport verify_parker_unipotent(int n_max, const std::vector<PrimePower>& q_set, unsigned jobs = 1) {
  if (n_max < 2) throw ArgumentError("verify_parker_unipotent: n_max must be >= 2");
  const std::vector<Partition> shapes = detail::partitions_up_to(n_max);
  ParityReport report = detail::run_parallel(shapes.size(), jobs, [&](std::size_t i) {
    ParityReport r;
    const Partition& shape = shapes[i];
    const bool hecke_even = is_even(hook_length_count(shape));
    for (const PrimePower& q : q_set)
      if (is_even(unipotent_degree(shape, q)) != hecke_even)
        throw InvariantViolation("unipotent degree and |T_lambda| differ in parity",
                                 "shape=" + shape.to_string() + " q=" + std::to_string(q.q));
    if (!hecke_even) return r;
    const ATable table = a_table(shape);
    for (const PrimePower& q : q_set) {
      const GlDetResult det = unipotent_det(table, q);
      r.record({"unipotent", shape, std::nullopt, q.value(), det.det_class, detail::describe(det)});
    }
    return r;
  });
  report.scope = "unipotent characters of GL_n(q), n <= " + std::to_string(n_max) + ", q in {" +
                 detail::q_list(q_set) + "}";
  return report;
}

/// det(chi_lambda^(1)) = f_lambda(1) is odd for every even-degree chi_lambda of S_n, n <= n_max.
inline ParityReport verify_parker_symmetric(int n_max, unsigned jobs = 1) {
  if (n_max < 2) throw ArgumentError("verify_parker_symmetric: n_max must be >= 2");
  const std::vector<Partition> shapes = detail::partitions_up_to(n_max);
  ParityReport report = detail::run_parallel(shapes.size(), jobs, [&](std::size_t i) {
    ParityReport r;
    const Partition& shape = shapes[i];
    if (!is_irr_plus_hecke(shape)) return r;
    const HeckeDetResult det = hecke_det(a_table(shape), 1);
    r.record({"symmetric", shape, std::nullopt, 1, det.det_class, "f_lambda = " + detail::describe(det.f_factors)});
    return r;
  });
  report.scope = "characters of S_n, n <= " + std::to_string(n_max);
  return report;
}

/// Every chi_(lambda, mu) in Irr+(GL_n(q)) with l, m >= 1 and n <= n_max has odd determinant.
inline ParityReport verify_parker_sgnpair(int n_max, const std::vector<PrimePower>& q_set, unsigned jobs = 1) {
  if (n_max < 2) throw ArgumentError("verify_parker_sgnpair: n_max must be >= 2");
  std::vector<std::pair<Partition, Partition>> pairs;
  for (int n = 2; n <= n_max; ++n)
    for (int l = 1; l < n; ++l)
      for (const auto& lambda : enumerate_partitions(l))
        for (const auto& mu : enumerate_partitions(n - l)) pairs.emplace_back(lambda, mu);
  ParityReport report = detail::run_parallel(pairs.size(), jobs, [&](std::size_t i) {
    ParityReport r;
    const auto& [lambda, mu] = pairs[i];
    for (const PrimePower& q : q_set) {
      const BigInt degree = gaussian_binomial(lambda.size() + mu.size(), lambda.size(), q.value()) *
                            unipotent_degree(lambda, q) * unipotent_degree(mu, q);
      if (!is_even(degree)) continue;
      const GlDetResult det = sgn_pair_det(lambda, mu, q);
      r.record({"sgnpair", lambda, mu, q.value(), det.det_class, detail::describe(det)});
    }
    return r;
  });
  report.scope = "sgn-twisted characters chi_(lambda,mu) of GL_n(q), n <= " + std::to_string(n_max) + ", q in {" +
                 detail::q_list(q_set) + "}";
  return report;
}

/// f_lambda(q) and f_lambda(1) have square classes of the same parity.
inline bool parity_bridge_check(const Partition& shape, const PrimePower& q) {
  if (!is_irr_plus_hecke(shape))
    throw PreconditionError("parity_bridge_check: |T_lambda| of " + shape.to_string() + " is odd");
  const CyclotomicProduct f = a_table(shape).f_factors().cyclotomic();
  return f.class_at(q.value()).parity() == f.class_at(1).parity();
}

}  // namespace orthdet
