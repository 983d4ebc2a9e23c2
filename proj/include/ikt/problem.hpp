#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ikt/symrep.hpp"
#include "json.hpp"

namespace ikt {

/// Declarative problem input: group, weights, window shift, enumeration bounds, truncation degree.
struct ProblemSpec {
  std::string name;
  std::vector<int> blocks;
  std::vector<std::pair<Weight, int>> weights;
  RationalWeight delta;
  int cocharacter_bound = 2;
  int copr_bound = 2;
  int degree = 6;
  std::map<std::string, bool> assumptions;

  LocalModel model() const { return LocalModel(SymmetricRep(GroupSpec(blocks), weights), delta); }
};

namespace detail {

inline Rational json_rational(const nlohmann::json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  throw InputError(where + ": expected an integer or a \"p/q\" string");
}

inline int json_int(const nlohmann::json& v, const std::string& where) {
  if (!v.is_number_integer()) throw InputError(where + ": expected an integer");
  return v.get<int>();
}

}  // namespace detail

inline ProblemSpec parse_problem(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputError("problem: expected an object");
  ProblemSpec p;
  if (doc.contains("name")) p.name = doc.at("name").get<std::string>();
  if (!doc.contains("blocks") || !doc.at("blocks").is_array() || doc.at("blocks").empty())
    throw InputError("blocks: expected a nonempty list of block sizes");
  for (std::size_t i = 0; i < doc.at("blocks").size(); ++i) {
    const int b = detail::json_int(doc.at("blocks")[i], "blocks[" + std::to_string(i) + "]");
    if (b < 1) throw InputError("blocks[" + std::to_string(i) + "]: block size must be positive");
    p.blocks.push_back(b);
  }
  int rank = 0;
  for (int b : p.blocks) rank += b;
  if (!doc.contains("weights") || !doc.at("weights").is_array()) throw InputError("weights: expected a list");
  const auto& ws = doc.at("weights");
  for (std::size_t k = 0; k < ws.size(); ++k) {
    const std::string where = "weights[" + std::to_string(k) + "]";
    const auto& entry = ws[k];
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_array())
      throw InputError(where + ": expected [vector, multiplicity]");
    Coords c;
    for (std::size_t i = 0; i < entry[0].size(); ++i)
      c.push_back(detail::json_int(entry[0][i], where + "[0][" + std::to_string(i) + "]"));
    if (static_cast<int>(c.size()) != rank)
      throw InputError(where + ": weight " + format_vector(c) + " has length " + std::to_string(c.size()) +
                       ", expected rank " + std::to_string(rank));
    const int mult = detail::json_int(entry[1], where + "[1]");
    if (mult < 1) throw InputError(where + ": multiplicity must be positive");
    p.weights.emplace_back(Weight(std::move(c)), mult);
  }
  p.delta = RationalWeight::zero(rank);
  if (doc.contains("delta")) {
    const auto& d = doc.at("delta");
    if (!d.is_array() || static_cast<int>(d.size()) != rank)
      throw InputError("delta: expected a list of " + std::to_string(rank) + " rationals");
    for (int i = 0; i < rank; ++i) p.delta[i] = detail::json_rational(d[i], "delta[" + std::to_string(i) + "]");
  }
  if (doc.contains("bounds")) {
    const auto& b = doc.at("bounds");
    if (!b.is_object()) throw InputError("bounds: expected an object");
    if (b.contains("cocharacter")) p.cocharacter_bound = detail::json_int(b.at("cocharacter"), "bounds.cocharacter");
    if (b.contains("copr")) p.copr_bound = detail::json_int(b.at("copr"), "bounds.copr");
    if (p.cocharacter_bound < 0 || p.copr_bound < 0) throw InputError("bounds: must be nonnegative");
  }
  if (doc.contains("degree")) {
    p.degree = detail::json_int(doc.at("degree"), "degree");
    if (p.degree < 0) throw InputError("degree: must be nonnegative");
  }
  if (doc.contains("assumptions")) {
    const auto& a = doc.at("assumptions");
    if (!a.is_object()) throw InputError("assumptions: expected an object");
    for (const auto& [key, value] : a.items()) {
      if (!value.is_boolean()) throw InputError("assumptions." + key + ": expected a boolean");
      p.assumptions[key] = value.get<bool>();
    }
  }
  const SymmetricRep v(GroupSpec(p.blocks), p.weights);
  if (!check_symmetric(v)) {
    for (const auto& [w, m] : v.weights())
      if (v.multiplicity(-w) != m)
        throw InputError("weights: not symmetric, " + format_vector(w) + " has multiplicity " + std::to_string(m) +
                         " but " + format_vector(-w) + " has " + std::to_string(v.multiplicity(-w)));
  }
  return p;
}

inline ProblemSpec parse_problem_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed problem document: ") + e.what());
  }
  try {
    return parse_problem(doc);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("problem document: ") + e.what());
  }
}

inline ProblemSpec load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open problem file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem_text(ss.str());
}

/// "1,0,-1" -> integer list.
inline Coords parse_int_list(const std::string& text, const std::string& flag) {
  Coords out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError(flag + ": '" + item + "' is not an integer");
    }
  }
  return out;
}

inline RationalWeight parse_rational_list(const std::string& text, const std::string& flag) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const InputError& e) {
      throw InputError(flag + ": " + e.what());
    }
  }
  return RationalWeight(std::move(out));
}

}  // namespace ikt
