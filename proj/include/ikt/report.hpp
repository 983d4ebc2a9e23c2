#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "ikt/decomp.hpp"
#include "json.hpp"

namespace ikt {

using Json = nlohmann::ordered_json;

/// One command's output: a machine document, a human table, and the overall verdict.
struct Report {
  Json doc;
  std::string table;
  bool pass = true;
};

namespace report {

template <class Vec>
Json vec(const Vec& v) {
  Json out = Json::array();
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

inline Json rat(const Rational& q) { return q.get_str(); }

inline Json ratvec(const RationalWeight& v) {
  Json out = Json::array();
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(rat(v[i]));
  return out;
}

inline Json weights(const std::vector<Weight>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(vec(w));
  return out;
}

inline Json matrix(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

inline Json laurent(const LaurentPoly& f) {
  Json out = Json::array();
  for (const auto& [e, c] : f.terms()) out.push_back(Json::array({vec(e), rat(c)}));
  return out;
}

inline Json characters(const CharacterCombination& f) {
  Json out = Json::array();
  for (const auto& [w, c] : f) out.push_back(Json::array({vec(w), rat(c)}));
  return out;
}

inline Json poly(const PolyClass& f) {
  Json out = Json::array();
  for (const auto& [e, c] : f.terms()) out.push_back(Json::array({vec(e), rat(c)}));
  return out;
}

inline Json perm(const WeylElement& w) { return vec(w.perm); }

inline Json operator_matrix(const OperatorMatrix& m) {
  return Json{{"name", m.name}, {"domain", weights(m.domain)}, {"codomain", weights(m.codomain)},
              {"entries", matrix(m.entries)}};
}

inline Json rep(const LocalModel& m) {
  Json ws = Json::array();
  for (const auto& [w, k] : m.rep.weights()) ws.push_back(Json::array({vec(w), k}));
  return Json{{"blocks", vec(m.group().blocks())}, {"weights", ws}, {"delta", ratvec(m.delta)}};
}

inline std::string pass_word(bool ok) { return ok ? "PASS" : "FAIL"; }

}  // namespace report
}  // namespace ikt
