#pragma once

// JSON forms of the library's values (nlohmann/json). Big integers travel as decimal strings.

#include "orthdet/gl_det.hpp"
#include "orthdet/hecke_det.hpp"
#include "orthdet/oracle.hpp"
#include "orthdet/parker.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace orthdet {

using Json = nlohmann::json;

inline Json to_json(const Partition& p) { return Json(std::vector<int>(p.parts().begin(), p.parts().end())); }

inline Json to_json(const IntPoly& p) {
  Json coeffs = Json::array();
  for (const BigInt& c : p.coeffs()) coeffs.push_back(c.str());
  return {{"coeffs", coeffs}};
}

inline IntPoly int_poly_from_json(const Json& j) {
  std::vector<BigInt> c;
  for (const auto& v : j.at("coeffs")) c.emplace_back(v.get<std::string>());
  return IntPoly(std::move(c));
}

inline Json to_json(const SquareClass& c) {
  return {{"sign", c.sign()}, {"squarefree", c.squarefree().str()}, {"parity", to_string(c.parity())}};
}

inline SquareClass square_class_from_json(const Json& j) {
  return SquareClass::unchecked(j.at("sign").get<int>(), BigInt(j.at("squarefree").get<std::string>()));
}

inline Json to_json(const StandardTableau& t) { return Json(t.rows()); }

inline Json to_json(const QIntProduct& f) {
  Json list = Json::array();
  list.push_back({{"type", "x-power"}, {"k", 1}, {"mult", f.x_power}});
  for (const auto& [k, m] : f.q_ints) list.push_back({{"type", "q-int"}, {"k", k}, {"mult", m}});
  return list;
}

inline Json to_json(const HeckeDetResult& r) {
  return {{"shape", to_json(r.shape)},
          {"q", r.q.str()},
          {"f_factors", to_json(r.f_factors)},
          {"class", to_json(r.det_class)},
          {"parity", to_string(r.det_class.parity())}};
}

inline Json to_json(const GlDetResult& r) {
  Json breakdown = Json::array();
  for (const DetFactor& f : r.breakdown)
    breakdown.push_back({{"label", f.label}, {"class", to_json(f.value)}, {"detail", f.detail}});
  return {{"character", r.descriptor},
          {"degree", r.degree.str()},
          {"class", to_json(r.det_class)},
          {"parity", to_string(r.det_class.parity())},
          {"breakdown", breakdown}};
}

inline Json to_json(const ParityWitness& w) {
  Json j = {{"family", w.family},
            {"lambda", to_json(w.lambda)},
            {"q", w.q.str()},
            {"class", to_json(w.det_class)},
            {"detail", w.detail}};
  if (w.mu) j["mu"] = to_json(*w.mu);
  return j;
}

inline Json to_json(const ParityReport& r) {
  Json failures = Json::array();
  for (const auto& w : r.failures) failures.push_back(to_json(w));
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(to_json(w));
  return {{"scope", r.scope},
          {"checked", r.checked},
          {"confirmed", r.confirmed()},
          {"failures", failures},
          {"witnesses", witnesses}};
}

inline Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace orthdet
