#pragma once

// Command-line front end. run() never exits the process; it returns the exit code:
// 0 success, 1 argument error, 2 invariant violation, 3 resource guard tripped.

#include "orthdet/gl_det.hpp"
#include "orthdet/hecke_det.hpp"
#include "orthdet/oracle.hpp"
#include "orthdet/parker.hpp"
#include "orthdet/serialize.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace orthdet::cli {

inline constexpr const char* kMaxTableauxEnv = "ORTHDET_MAX_TABLEAUX";

enum ExitCode : int { kOk = 0, kArgumentError = 1, kInvariantViolation = 2, kResourceGuard = 3 };

/// Oracle dimension ceiling, overridable through ORTHDET_MAX_TABLEAUX.
inline std::size_t oracle_max_dim() {
  const char* env = std::getenv(kMaxTableauxEnv);
  if (env == nullptr || *env == '\0') return kDefaultOracleMaxDim;
  try {
    return static_cast<std::size_t>(std::stoull(env));
  } catch (const std::exception&) {
    throw ArgumentError(std::string(kMaxTableauxEnv) + " must be a nonnegative integer");
  }
}

namespace detail {

struct Options {
  std::string format = "text";
  std::string shape, lambda, mu;
  std::int64_t q = 0;
  std::vector<std::int64_t> qs;
  int n_max = 0;
  std::string family = "unipotent";
  std::string method = "gram";
  std::uint64_t seed = 1;
  unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
  bool graph = false;
};

inline std::vector<PrimePower> prime_powers(const std::vector<std::int64_t>& qs) {
  std::vector<PrimePower> out;
  for (auto q : qs) out.push_back(validate_prime_power(q));
  return out;
}

inline std::string rows_text(const StandardTableau& t) {
  std::string s;
  for (const auto& row : t.rows()) {
    if (!s.empty()) s += " / ";
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? " " : "") + std::to_string(row[i]);
  }
  return s;
}

inline void print_gl(std::ostream& out, const GlDetResult& r, const QIntProduct* f) {
  out << "character: " << r.descriptor << "\n";
  out << "degree:    " << r.degree << "\n";
  if (f != nullptr) out << "f_lambda:  " << orthdet::detail::describe(*f) << "\n";
  for (const auto& factor : r.breakdown)
    out << "  " << std::left << std::setw(28) << factor.label << std::setw(12) << factor.value.to_string() << " "
        << factor.detail << "\n";
  out << "det:       " << r.det_class.to_string() << "\n";
  out << "parity:    " << to_string(r.det_class.parity()) << "\n";
}

inline void print_hecke(std::ostream& out, const HeckeDetResult& r) {
  out << "shape:     " << r.shape.to_string() << "\n";
  out << "q:         " << r.q << "\n";
  out << "f_lambda:  " << orthdet::detail::describe(r.f_factors) << "\n";
  out << "det:       " << r.det_class.to_string() << "\n";
  out << "parity:    " << to_string(r.det_class.parity()) << "\n";
}

inline void print_report(std::ostream& out, const ParityReport& r) {
  out << "scope:     " << r.scope << "\n";
  out << "checked:   " << r.checked << "\n";
  out << "failures:  " << r.failures.size() << "\n";
  for (const auto& w : r.failures) out << "  FAIL " << w.detail << "\n";
  for (const auto& w : r.witnesses)
    out << "  " << w.family << " " << w.lambda.to_string() << (w.mu ? " " + w.mu->to_string() : std::string())
        << " q=" << w.q << " det " << w.det_class.to_string() << " " << to_string(w.det_class.parity()) << "\n";
  out << (r.confirmed() ? "all determinants odd" : "PARITY FAILURE") << "\n";
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

inline int det_unipotent(const Options& o, std::ostream& out) {
  const Partition shape = Partition::parse(o.shape);
  const GlDetResult r = unipotent_det(shape, validate_prime_power(o.q));
  const QIntProduct f = a_table(shape).f_factors();
  if (o.format == "json") {
    Json j = to_json(r);
    j["command"] = "det-unipotent";
    j["shape"] = to_json(shape);
    j["q"] = std::to_string(o.q);
    j["f_factors"] = to_json(f);
    emit(out, j);
  } else {
    print_gl(out, r, &f);
  }
  return kOk;
}

inline int det_hecke(const Options& o, std::ostream& out, std::int64_t q, const char* command) {
  const HeckeDetResult r = hecke_det(Partition::parse(o.shape), q);
  if (o.format == "json") {
    Json j = to_json(r);
    j["command"] = command;
    emit(out, j);
  } else {
    print_hecke(out, r);
  }
  return kOk;
}

inline int det_sgnpair(const Options& o, std::ostream& out) {
  const GlDetResult r = sgn_pair_det(Partition::parse(o.lambda), Partition::parse(o.mu), validate_prime_power(o.q));
  if (o.format == "json") {
    Json j = to_json(r);
    j["command"] = "det-sgnpair";
    emit(out, j);
  } else {
    print_gl(out, r, nullptr);
  }
  return kOk;
}

inline int verify_parker(const Options& o, std::ostream& out, std::ostream& err) {
  ParityReport r;
  if (o.family == "unipotent")
    r = verify_parker_unipotent(o.n_max, prime_powers(o.qs), o.jobs);
  else if (o.family == "symmetric")
    r = verify_parker_symmetric(o.n_max, o.jobs);
  else if (o.family == "sgnpair")
    r = verify_parker_sgnpair(o.n_max, prime_powers(o.qs), o.jobs);
  else
    throw ArgumentError("unknown family '" + o.family + "'");
  if (o.format == "json")
    emit(out, to_json(r));
  else
    print_report(out, r);
  if (!r.confirmed()) {
    for (const auto& w : r.failures) err << "witness: " << to_json(w).dump() << "\n";
    return kInvariantViolation;
  }
  return kOk;
}

inline int oracle_check(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.method != "gram" && o.method != "skew") throw ArgumentError("unknown method '" + o.method + "'");
  if (o.n_max < 2) throw ArgumentError("--n-max must be >= 2");
  const std::size_t max_dim = oracle_max_dim();
  Json rows = Json::array();
  std::size_t mismatches = 0;
  for (int n = 2; n <= o.n_max; ++n)
    for (const Partition& shape : enumerate_partitions(n)) {
      if (!is_irr_plus_hecke(shape)) continue;
      if (hook_length_count(shape) > max_dim)
        throw ResourceGuardError("oracle-check: |T_lambda| of " + shape.to_string() + " exceeds " +
                                 std::to_string(max_dim) + " (set " + kMaxTableauxEnv + ")");
      const ATable table = a_table(shape);
      for (std::int64_t q : o.qs) {
        if (q < 1) throw ArgumentError("oracle-check: q must be >= 1");
        const SquareClass expected = hecke_det(table, q).det_class;
        const SquareClass got = o.method == "gram" ? oracle_det(shape, q, max_dim)
                                                   : skew_element_det(shape, q, o.seed, {}, max_dim);
        const bool match = expected == got;
        if (!match) ++mismatches;
        rows.push_back({{"shape", to_json(shape)},
                        {"q", std::to_string(q)},
                        {"oracle", to_json(got)},
                        {"formula", to_json(expected)},
                        {"match", match}});
        if (o.format != "json")
          out << std::left << std::setw(16) << shape.to_string() << " q=" << std::setw(4) << q << " oracle "
              << std::setw(14) << got.to_string() << " f_lambda(q) " << std::setw(14) << expected.to_string()
              << (match ? " ok" : " MISMATCH") << "\n";
      }
    }
  if (o.format == "json")
    emit(out, {{"method", o.method}, {"seed", o.seed}, {"checks", rows}, {"mismatches", mismatches}});
  else
    out << rows.size() << " checks, " << mismatches << " mismatches\n";
  if (mismatches != 0) {
    err << "oracle disagrees with f_lambda(q) in " << mismatches << " case(s)\n";
    return kInvariantViolation;
  }
  return kOk;
}

inline int syt(const Options& o, std::ostream& out) {
  const TableauGraph g = enumerate_syt(Partition::parse(o.shape));
  if (o.format == "json") {
    Json tableaux = Json::array();
    for (const auto& t : g.nodes()) tableaux.push_back(to_json(t));
    Json j = {{"shape", to_json(g.shape())}, {"count", g.size()}, {"tableaux", tableaux}};
    if (o.graph) {
      Json edges = Json::array();
      for (const auto& e : g.edges()) edges.push_back({{"lower", e.lower}, {"upper", e.upper}, {"k", e.k}});
      j["edges"] = edges;
    }
    emit(out, j);
    return kOk;
  }
  out << g.size() << " standard tableaux of shape " << g.shape().to_string() << "\n";
  for (std::size_t i = 0; i < g.size(); ++i)
    out << "  [" << i << "] " << rows_text(g.node(i)) << "   length " << g.length(i) << "\n";
  if (o.graph)
    for (const auto& e : g.edges()) out << "  " << e.lower << " --s_" << e.k << "--> " << e.upper << "\n";
  return kOk;
}

inline int selftest(std::ostream& out) {
  int failed = 0;
  auto suite = [&](const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string why;
    try {
      ok = body();
    } catch (const InvariantViolation& e) {
      why = std::string(e.what()) + " [" + e.witness() + "]";
    }
    out << (ok ? "PASS " : "FAIL ") << name << (why.empty() ? "" : ": " + why) << "\n";
    if (!ok) ++failed;
  };
  suite("cyclotomic product x^n - 1, n <= 60", [] {
    for (int n = 1; n <= 60; ++n) {
      IntPoly prod = IntPoly::constant(1);
      for (int d : divisors(n)) prod *= cyclotomic(d);
      if (prod != IntPoly::monomial(1, static_cast<std::size_t>(n)) - IntPoly::constant(1)) return false;
    }
    return true;
  });
  suite("Phi_n(1) three-case formula, n <= 200", [] {
    for (int n = 1; n <= 200; ++n)
      if (cyclotomic(n)(1) != phi_at_one(n)) return false;
    return true;
  });
  suite("parity of [c]_q[c+2]_q vs c(c+2), c <= 200", [] {
    for (std::int64_t q : {3, 5, 7, 9})
      for (int c = 1; c <= 200; ++c)
        if (!lemma_parity_check(c, q)) return false;
    return true;
  });
  suite("a_t path independence, n <= 6", [] {
    for (int n = 1; n <= 6; ++n)
      for (const auto& shape : enumerate_partitions(n)) (void)a_table(shape);
    return true;
  });
  suite("seminormal relations, n <= 5, q in {1,3}", [] {
    for (int n = 1; n <= 5; ++n)
      for (const auto& shape : enumerate_partitions(n))
        for (int q : {1, 3}) (void)build_seminormal(shape, q);
    return true;
  });
  suite("Schur-basis trace form, n <= 4, q = 3", [] {
    for (int n = 1; n <= 4; ++n)
      if (!regular_structure_check(n, 3)) return false;
    return true;
  });
  out << (failed == 0 ? "selftest passed" : "selftest FAILED") << "\n";
  return failed == 0 ? kOk : kInvariantViolation;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  detail::Options o;
  CLI::App app{"Determinant square classes of even-degree characters of GL_n(q), H_q(S_n) and S_n"};
  app.name("orthdet");
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* unip = app.add_subcommand("det-unipotent", "Determinant of the unipotent character chi_lambda of GL_n(q)");
  unip->add_option("--shape", o.shape, "Partition, e.g. 3,1,1")->required();
  unip->add_option("--q", o.q, "Odd prime power")->required();
  add_format(unip);

  CLI::App* hecke = app.add_subcommand("det-hecke", "Determinant of the Hecke algebra character at parameter q");
  hecke->add_option("--shape", o.shape, "Partition")->required();
  hecke->add_option("--q", o.q, "Parameter q >= 1")->required();
  add_format(hecke);

  CLI::App* sym = app.add_subcommand("det-symmetric", "Determinant of the symmetric group character chi_lambda");
  sym->add_option("--shape", o.shape, "Partition")->required();
  add_format(sym);

  CLI::App* pair = app.add_subcommand("det-sgnpair", "Determinant of Ind_P^G(chi_lambda x sgn chi_mu)");
  pair->add_option("--lambda", o.lambda, "Partition of l (\"\" or 0 for empty)")->required();
  pair->add_option("--mu", o.mu, "Partition of m (\"\" or 0 for empty)")->required();
  pair->add_option("--q", o.q, "Odd prime power")->required();
  add_format(pair);

  CLI::App* parker = app.add_subcommand("verify-parker", "Check that all determinants in a family are odd");
  o.n_max = 8;
  o.qs = {3, 5, 7};
  parker->add_option("--n-max", o.n_max, "Largest n")->capture_default_str();
  parker->add_option("--q", o.qs, "Comma-separated odd prime powers")->delimiter(',')->capture_default_str();
  parker->add_option("--family", o.family, "unipotent | symmetric | sgnpair")
      ->check(CLI::IsMember({"unipotent", "symmetric", "sgnpair"}))
      ->capture_default_str();
  parker->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  add_format(parker);

  CLI::App* oracle = app.add_subcommand("oracle-check", "Compare f_lambda(q) against explicit representations");
  std::int64_t oracle_n_max = 5;
  std::vector<std::int64_t> oracle_qs{1, 3, 5};
  oracle->add_option("--n-max", oracle_n_max, "Largest n")->capture_default_str();
  oracle->add_option("--q", oracle_qs, "Comma-separated q >= 1")->delimiter(',')->capture_default_str();
  oracle->add_option("--method", o.method, "gram | skew")
      ->check(CLI::IsMember({"gram", "skew"}))
      ->capture_default_str();
  oracle->add_option("--seed", o.seed, "Seed for skew-element coefficients")->capture_default_str();
  add_format(oracle);

  CLI::App* syt_cmd = app.add_subcommand("syt", "List the standard tableaux of a shape");
  syt_cmd->add_option("--shape", o.shape, "Partition")->required();
  syt_cmd->add_flag("--graph", o.graph, "Also print the s_k edges");
  add_format(syt_cmd);

  CLI::App* self = app.add_subcommand("selftest", "Run the built-in invariant suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kArgumentError;
  }

  try {
    if (unip->parsed()) return detail::det_unipotent(o, out);
    if (hecke->parsed()) return detail::det_hecke(o, out, o.q, "det-hecke");
    if (sym->parsed()) return detail::det_hecke(o, out, 1, "det-symmetric");
    if (pair->parsed()) return detail::det_sgnpair(o, out);
    if (parker->parsed()) return detail::verify_parker(o, out, err);
    if (oracle->parsed()) {
      o.n_max = static_cast<int>(oracle_n_max);
      o.qs = oracle_qs;
      return detail::oracle_check(o, out, err);
    }
    if (syt_cmd->parsed()) return detail::syt(o, out);
    if (self->parsed()) return detail::selftest(out);
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kArgumentError;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\nwitness: " << e.witness() << "\n";
    return kInvariantViolation;
  } catch (const ResourceGuardError& e) {
    err << "resource guard: " << e.what() << "\n";
    return kResourceGuard;
  }
  return kArgumentError;
}

}  // namespace orthdet::cli
