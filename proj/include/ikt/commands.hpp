#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ikt/decomp.hpp"
#include "ikt/problem.hpp"
#include "ikt/report.hpp"

namespace ikt {

struct CommandOptions {
  std::optional<Cocharacter> lambda;
  std::optional<Cocharacter> mu;
  std::optional<RationalWeight> delta;
  std::optional<int> bound;
  std::optional<int> degree;
  ClassMode mode = ClassMode::fixed;
  std::uint64_t seed = 1;
  bool timing = false;
  Execution policy = Execution::serial;
};

inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"copr", "leviequal", "compequal", "compdiff", "oracle", "cohomology"};
  return names;
}

namespace detail {

/// Accumulates rows of the human table and the per-check verdicts.
class Table {
 public:
  void row(const std::string& label, bool ok, const std::string& detail = "") {
    std::ostringstream s;
    s << std::left << std::setw(34) << label << std::setw(6) << report::pass_word(ok) << detail << '\n';
    text_ += s.str();
  }
  void info(const std::string& label, const std::string& value) {
    std::ostringstream s;
    s << std::left << std::setw(34) << label << value << '\n';
    text_ += s.str();
  }
  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

inline LocalModel resolve_model(const ProblemSpec& p, const CommandOptions& opt) {
  LocalModel m = p.model();
  if (opt.delta) {
    if (static_cast<int>(opt.delta->size()) != m.rank())
      throw InputError("--delta: expected " + std::to_string(m.rank()) + " entries");
    m.delta = *opt.delta;
  }
  auto check_len = [&](const std::optional<Cocharacter>& c, const char* flag) {
    if (c && static_cast<int>(c->size()) != m.rank())
      throw InputError(std::string(flag) + ": expected " + std::to_string(m.rank()) + " entries");
  };
  check_len(opt.lambda, "--lambda");
  check_len(opt.mu, "--mu");
  return m;
}

inline int resolve_bound(const ProblemSpec& p, const CommandOptions& opt) {
  const int b = opt.bound.value_or(p.cocharacter_bound);
  if (b < 0) throw InputError("--bound: must be nonnegative");
  return b;
}

inline Json header(const std::string& command, const ProblemSpec& p, const LocalModel& m, const CommandOptions& opt,
                   int bound) {
  Json options{{"bound", bound}, {"mode", to_string(opt.mode)}, {"seed", opt.seed}};
  if (opt.lambda) options["lambda"] = report::vec(*opt.lambda);
  if (opt.mu) options["mu"] = report::vec(*opt.mu);
  Json assumptions = Json::object();
  for (const auto& [k, v] : p.assumptions) assumptions[k] = v;
  return Json{{"command", command},
              {"problem", p.name},
              {"representation", report::rep(m)},
              {"options", options},
              {"assumptions", assumptions},
              {"notes",
               Json::array({"boundary classes are indexed by Levi subgroup together with the fixed weights; "
                            "--mode levi indexes by Levi subgroup alone",
                            "symmetry of the weights is checked; any further assumptions are taken as stated"})}};
}

/// Every cocharacter with entries in [-bound, bound].
inline std::vector<Cocharacter> full_box(int rank, int bound) {
  std::vector<Cocharacter> out;
  Cocharacter l = Cocharacter::zero(rank);
  std::function<void(int)> rec = [&](int i) {
    if (i == rank) {
      out.push_back(l);
      return;
    }
    for (int x = -bound; x <= bound; ++x) {
      l[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

/// Unordered pairs of distinct cocharacters in the box sharing Levi subgroup and fixed weights.
inline std::vector<std::pair<Cocharacter, Cocharacter>> same_fixed_pairs(const LocalModel& m, int bound) {
  std::map<std::pair<std::vector<std::vector<int>>, std::vector<Weight>>, std::vector<Cocharacter>> groups;
  for (const auto& l : full_box(m.rank(), bound)) {
    auto blocks = levi(m.group(), l).sub_blocks;
    std::sort(blocks.begin(), blocks.end());
    auto fixed = fixed_weights(m.rep, l);
    std::sort(fixed.begin(), fixed.end());
    groups[{std::move(blocks), std::move(fixed)}].push_back(l);
  }
  std::vector<std::pair<Cocharacter, Cocharacter>> out;
  for (const auto& [key, members] : groups)
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (same_fixed_data(m, members[i], members[j])) out.emplace_back(members[i], members[j]);
  return out;
}

inline LaurentPoly random_invariant_laurent(const GroupSpec& g, const Cocharacter& lambda, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(-2, 2);
  std::uniform_int_distribution<int> coeff(1, 3);
  Weight e = Weight::zero(g.rank());
  for (int i = 0; i < g.rank(); ++i) e[i] = coord(rng);
  const Rational c(coeff(rng));
  LaurentPoly y(g.rank());
  for (const auto& w : stabilizer(g, lambda)) y.add_term(act(w, e).c, c);
  return y;
}

inline PolyClass random_invariant_poly(const GroupSpec& g, const Cocharacter& lambda, int degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(0, 2);
  PolyClass::Exponent e(g.rank(), 0);
  do {
    for (auto& x : e) x = coord(rng);
  } while (PolyClass::total(e) > 2);
  PolyClass y(g.rank(), degree);
  for (const auto& w : stabilizer(g, lambda)) y.add_term(act(w, e), 1);
  return y;
}

inline std::vector<Cocharacter> nonnegative_dominant(const GroupSpec& g, int bound) {
  std::vector<Cocharacter> out;
  for (const auto& l : dominant_box(g, bound)) {
    bool ok = true;
    for (std::size_t i = 0; i < l.size(); ++i)
      if (l[i] < 0) ok = false;
    if (ok) out.push_back(l);
  }
  return out;
}

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline void finish(Report& r, Table& t, const CommandOptions& opt, std::chrono::steady_clock::time_point t0) {
  const double elapsed = seconds_since(t0);
  r.doc["pass"] = r.pass;
  if (opt.timing) r.doc["timing"] = Json{{"seconds", elapsed}};
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << elapsed << " s";
  t.info("elapsed", s.str());
  t.row("overall", r.pass);
  r.table = t.text();
}

}  // namespace detail

/// Window basis and the face basis of every nontrivial dominant cocharacter in the box.
inline Report cmd_window(const ProblemSpec& p, const CommandOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  const LocalModel m = detail::resolve_model(p, opt);
  const int bound = detail::resolve_bound(p, opt);
  Report r;
  detail::Table t;
  r.doc = detail::header("window", p, m, opt, bound);
  const WindowBasis wb = enumerate_window(m);
  r.doc["window"] = report::weights(wb.weights);
  t.info("window size", std::to_string(wb.size()));

  std::vector<Cocharacter> lambdas;
  if (opt.lambda)
    lambdas.push_back(*opt.lambda);
  else
    for (const auto& l : dominant_box(m.group(), bound))
      if (!is_trivial_cocharacter(m, l)) lambdas.push_back(l);

  bool excess_ok = true, hyperplane_ok = true;
  Json faces = Json::array();
  for (const auto& l : lambdas) {
    if (!is_dominant(m.group(), l)) throw InputError("--lambda: " + format_vector(l) + " is not dominant");
    for (const auto& chi : wb.weights)
      if (face_excess(m, l, chi) > 0) excess_ok = false;
    const FaceBasis fb = face_basis(m, l);
    if (fb.size() == 0) continue;
    Json psi = Json::array();
    for (const auto& v : fb.psi) psi.push_back(report::ratvec(v));
    for (const auto& chi : fb.weights)
      if (face_excess(m, l, chi) != 0) hyperplane_ok = false;
    faces.push_back(Json{{"lambda", report::vec(l)}, {"b", report::rat(fb.b)}, {"weights", report::weights(fb.weights)},
                         {"psi", psi}});
  }
  r.doc["faces"] = faces;
  r.doc["checks"] = Json{{"window_below_every_face", excess_ok}, {"faces_on_hyperplane", hyperplane_ok}};
  r.pass = excess_ok && hyperplane_ok;
  t.info("nonempty faces", std::to_string(faces.size()));
  t.row("window below every face", excess_ok);
  t.row("faces on their hyperplane", hyperplane_ok);
  detail::finish(r, t, opt, t0);
  return r;
}

namespace detail {

inline void check_copr(const LocalModel& m, const ProblemSpec& p, const CommandOptions& opt, Report& r, Table& t) {
  std::vector<std::pair<Cocharacter, Cocharacter>> pairs;
  if (opt.lambda && opt.mu) {
    pairs.emplace_back(*opt.lambda, *opt.mu);
  } else {
    const auto ls = nonnegative_dominant(m.group(), p.copr_bound);
    for (const auto& l : ls)
      for (const auto& u : ls)
        if ((!opt.lambda || *opt.lambda == l) && (!opt.mu || *opt.mu == u)) pairs.emplace_back(l, u);
  }
  Json entries = Json::array();
  std::size_t failed = 0, coset_failed = 0;
  for (const auto& [l, u] : pairs) {
    for (const auto* c : {&l, &u})
      if (!is_dominant(m.group(), *c)) throw InputError(format_vector(*c) + " is not dominant");
    const CoprResult res = ikt::check_copr(m, l, u, opt.policy);
    Json cosets = Json::array();
    for (const auto& d : res.cosets)
      cosets.push_back(Json{{"w", report::perm(d.w_s)}, {"nu", report::vec(d.nu)}, {"nu_prime", report::vec(d.nu_prime)}});
    const OperatorMatrix D = matrix_delta(m, u);
    const FaceBasis fb = face_basis(m, l);
    entries.push_back(Json{{"lambda", report::vec(l)},
                           {"mu", report::vec(u)},
                           {"domain", report::weights(fb.weights)},
                           {"codomain", report::weights(D.codomain)},
                           {"cosets", cosets},
                           {"lhs", report::matrix(res.lhs)},
                           {"rhs", report::matrix(res.rhs)},
                           {"residual_zero", res.pass},
                           {"per_coset_split_zero", res.per_coset_pass}});
    if (!res.pass) ++failed;
    if (!res.per_coset_pass) ++coset_failed;
  }
  r.doc["pairs"] = entries;
  r.doc["findings"] = Json{{"pairs_with_nonzero_per_coset_split", coset_failed}};
  r.pass = failed == 0;
  t.info("pairs", std::to_string(pairs.size()));
  t.row("coproduct residual zero", failed == 0, std::to_string(pairs.size() - failed) + "/" + std::to_string(pairs.size()));
  t.info("per-coset split (diagnostic)", std::to_string(pairs.size() - coset_failed) + "/" +
                                             std::to_string(pairs.size()) + " cosetwise zero");
}

inline void check_oracle(const LocalModel& m, int bound, const CommandOptions& opt, Report& r, Table& t) {
  const GroupSpec& g = m.group();
  CharacterTable table(g);
  std::vector<Cocharacter> lambdas;
  if (opt.lambda)
    lambdas.push_back(*opt.lambda);
  else
    lambdas = dominant_box(g, bound);
  Json entries = Json::array();
  std::size_t total = 0, failed = 0;
  for (const auto& l : lambdas) {
    if (!is_dominant(g, l)) throw InputError("--lambda: " + format_vector(l) + " is not dominant");
    const LeviDatum ld = levi(g, l);
    const AttractingData ad = attracting(m.rep, l);
    for (const auto& chi : face_basis(m, l).weights) {
      const LaurentPoly x = weyl_character(ld.group(), chi);
      const CharacterCombination induced =
          expand_in_characters(table, symmetrize_induction(g, l, x, ad.A, ad.g, opt.policy));
      CharacterCombination expected;
      for (const auto& [w, c] : bbw_pushforward(m.rep, -l, chi)) accumulate(expected, w, c / Rational(ld.weyl_order));
      const bool ok = induced == expected;
      ++total;
      if (!ok) ++failed;
      entries.push_back(Json{{"lambda", report::vec(l)},
                             {"chi", report::vec(chi)},
                             {"induced", report::characters(induced)},
                             {"expected", report::characters(expected)},
                             {"pass", ok}});
    }
  }
  r.doc["faces"] = entries;
  r.pass = failed == 0;
  t.row("induction matches pushforward", failed == 0,
        std::to_string(total - failed) + "/" + std::to_string(total) + " face elements");
}

inline std::vector<std::pair<Cocharacter, Cocharacter>> chosen_pairs(const LocalModel& m, int bound,
                                                                      const CommandOptions& opt) {
  if (opt.lambda && opt.mu) {
    if (!same_fixed_data(m, *opt.lambda, *opt.mu))
      throw InputError(format_vector(*opt.lambda) + " and " + format_vector(*opt.mu) +
                       " do not share Levi subgroup and fixed weights");
    return {{*opt.lambda, *opt.mu}};
  }
  auto pairs = same_fixed_pairs(m, bound);
  std::erase_if(pairs, [&](const auto& pr) {
    return (opt.lambda && pr.first != *opt.lambda && pr.second != *opt.lambda) ||
           (opt.mu && pr.first != *opt.mu && pr.second != *opt.mu);
  });
  return pairs;
}

inline void check_leviequal(const LocalModel& m, int bound, const CommandOptions& opt, Report& r, Table& t) {
  std::mt19937_64 rng(opt.seed);
  const auto pairs = chosen_pairs(m, bound, opt);
  Json entries = Json::array();
  std::size_t failed = 0;
  for (const auto& [l, u] : pairs) {
    const RelativeData rel = relative(m.rep, l, u);
    Json tests = Json::array();
    bool ok = true;
    for (int k = 0; k < 2; ++k) {
      const LaurentPoly y = random_invariant_laurent(m.group(), l, rng);
      const LeviEqualResult res = ikt::check_leviequal(m, l, u, y);
      Json test{{"y", report::laurent(y)}, {"pass", res.equal}};
      if (!res.equal) test["difference"] = report::laurent(res.left - res.right);
      tests.push_back(std::move(test));
      ok = ok && res.equal;
    }
    if (!ok) ++failed;
    entries.push_back(Json{{"lambda", report::vec(l)},
                           {"mu", report::vec(u)},
                           {"sign_exponent", rel.c},
                           {"twist", report::vec(rel.script_N)},
                           {"tests", tests},
                           {"pass", ok}});
  }
  r.doc["pairs"] = entries;
  t.row("same-fixed-data images agree", failed == 0,
        std::to_string(pairs.size() - failed) + "/" + std::to_string(pairs.size()) + " pairs");

  const auto dec = decompose(m, DecompositionOptions{bound, opt.mode, opt.policy});
  bool redundant_ok = false, duplicate_ok = false;
  if (dec->ok()) {
    redundant_ok = same_span(boundary_span_all(m, bound, opt.policy).basis, dec->BK.basis);
    Matrix doubled(dec->window.size(), 0);
    for (const auto& cd : dec->classes) doubled = hstack(doubled, hstack(cd.M.entries, cd.M.entries));
    duplicate_ok = same_span(column_space(doubled), dec->BK.basis);
  }
  r.doc["boundary_span"] = Json{{"all_members_same_span", redundant_ok}, {"duplicated_classes_same_span", duplicate_ok}};
  t.row("boundary span with all members", redundant_ok);
  t.row("boundary span with duplicates", duplicate_ok);
  r.pass = failed == 0 && redundant_ok && duplicate_ok;
}

inline void check_cohomology(const LocalModel& m, const ProblemSpec& p, int bound, const CommandOptions& opt,
                             Report& r, Table& t) {
  const int degree = opt.degree.value_or(p.degree);
  if (degree < 0) throw InputError("--degree: must be nonnegative");
  std::mt19937_64 rng(opt.seed);
  const auto pairs = chosen_pairs(m, bound, opt);
  Json entries = Json::array();
  std::size_t failed = 0;
  for (const auto& [l, u] : pairs) {
    const std::int64_t c = relative(m.rep, l, u).c;
    Json tests = Json::array();
    bool ok = true;
    for (const PolyClass& y : {PolyClass::one(m.rank(), degree), random_invariant_poly(m.group(), l, degree, rng)}) {
      const CohomologyResult res = ikt::check_cohomology(m, l, u, y);
      tests.push_back(Json{{"y", report::poly(y)}, {"image", report::poly(res.left)},
                           {"degree_equal", report::vec(res.degree_equal)}, {"pass", res.equal}});
      ok = ok && res.equal;
    }
    if (!ok) ++failed;
    entries.push_back(Json{{"lambda", report::vec(l)}, {"mu", report::vec(u)}, {"sign_exponent", c}, {"tests", tests},
                           {"pass", ok}});
  }
  r.doc["degree"] = degree;
  r.doc["pairs"] = entries;
  r.pass = failed == 0;
  t.row("cohomological images agree", failed == 0,
        std::to_string(pairs.size() - failed) + "/" + std::to_string(pairs.size()) + " pairs through degree " +
            std::to_string(degree));
}

inline void check_composites(const LocalModel& m, int bound, const CommandOptions& opt, bool diff, Report& r,
                             Table& t) {
  const auto dec = decompose(m, DecompositionOptions{bound, opt.mode, opt.policy});
  if (!dec->ok()) {
    r.doc["decomposition_failure"] = dec->failure;
    r.pass = false;
    t.row("decomposition", false, dec->failure);
    return;
  }
  Json entries = Json::array();
  std::size_t checked = 0, failed = 0, skipped = 0;
  const std::size_t k = dec->classes.size();
  for (std::size_t l = 0; l < k; ++l) {
    if (!diff) {
      const CompositeCheck c = check_compequal(*dec, l);
      entries.push_back(Json{{"lambda", report::vec(c.lambda_L)}, {"composite", report::matrix(c.composite)},
                             {"expected", report::matrix(c.expected)}, {"pass", c.pass}});
      ++checked;
      if (!c.pass) ++failed;
      continue;
    }
    for (std::size_t e = 0; e < k; ++e) {
      if (e == l) continue;
      const auto& L = dec->classes[l].cls;
      const auto& E = dec->classes[e].cls;
      if (contained(m, E, L)) {
        ++skipped;
        entries.push_back(Json{{"lambda_L", report::vec(L.lambda)}, {"lambda_E", report::vec(E.lambda)},
                               {"status", "contained"}});
        continue;
      }
      const CompositeCheck c = check_compdiff(*dec, l, e);
      ++checked;
      if (!c.pass) ++failed;
      entries.push_back(Json{{"lambda_L", report::vec(c.lambda_L)}, {"lambda_E", report::vec(c.lambda_E)},
                             {"status", "checked"}, {"composite", report::matrix(c.composite)}, {"pass", c.pass}});
    }
  }
  r.doc["classes"] = k;
  r.doc[diff ? "pairs" : "levels"] = entries;
  r.pass = failed == 0;
  const std::string label = diff ? "cross composites vanish" : "diagonal composites match";
  std::string detail = std::to_string(checked - failed) + "/" + std::to_string(checked);
  if (diff) detail += ", " + std::to_string(skipped) + " contained pairs skipped";
  if (checked == 0) detail += " (nothing to check)";
  t.row(label, failed == 0, detail);
}

}  // namespace detail

inline Report cmd_check(const ProblemSpec& p, const std::string& which, const CommandOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  if (std::find(check_names().begin(), check_names().end(), which) == check_names().end())
    throw InputError("unknown check '" + which + "'");
  const LocalModel m = detail::resolve_model(p, opt);
  const int bound = detail::resolve_bound(p, opt);
  Report r;
  detail::Table t;
  r.doc = detail::header("check " + which, p, m, opt, bound);
  try {
    if (which == "copr")
      detail::check_copr(m, p, opt, r, t);
    else if (which == "oracle")
      detail::check_oracle(m, bound, opt, r, t);
    else if (which == "leviequal")
      detail::check_leviequal(m, bound, opt, r, t);
    else if (which == "cohomology")
      detail::check_cohomology(m, p, bound, opt, r, t);
    else
      detail::check_composites(m, bound, opt, which == "compdiff", r, t);
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    r.pass = false;
    r.doc["error"] = e.what();
    t.row("computation", false, e.what());
  }
  detail::finish(r, t, opt, t0);
  return r;
}

inline Report cmd_decompose(const ProblemSpec& p, const CommandOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  const LocalModel m = detail::resolve_model(p, opt);
  const int bound = detail::resolve_bound(p, opt);
  Report r;
  detail::Table t;
  r.doc = detail::header("decompose", p, m, opt, bound);
  try {
    const auto dec = decompose(m, DecompositionOptions{bound, opt.mode, opt.policy});
    r.doc["window"] = report::weights(dec->window);
    Json classes = Json::array();
    for (const auto& cd : dec->classes) {
      Json sym = Json::array();
      for (const auto& w : cd.cls.sym.elements) sym.push_back(report::perm(w));
      Json levi_blocks = Json::array();
      for (const auto& b : cd.cls.levi.sub_blocks) levi_blocks.push_back(report::vec(b));
      classes.push_back(Json{{"lambda", report::vec(cd.cls.lambda)},
                             {"levi", levi_blocks},
                             {"fixed_weights", report::weights(cd.cls.fixed)},
                             {"symmetry_group", sym},
                             {"face", report::weights(cd.M.domain)},
                             {"induction", report::matrix(cd.M.entries)},
                             {"restriction", report::matrix(cd.Delta.entries)},
                             {"phi", report::matrix(cd.Phi)},
                             {"level_primitive_rank", cd.sub->PK.rank()}});
    }
    r.doc["classes"] = classes;
    r.doc["ranks"] = Json{{"window", dec->window.size()}, {"PK", dec->PK.rank()}, {"BK", dec->BK.rank()}};
    r.doc["PK"] = report::matrix(dec->PK.basis);
    r.doc["BK"] = report::matrix(dec->BK.basis);
    t.info("window", std::to_string(dec->window.size()));
    t.info("classes", std::to_string(dec->classes.size()));
    t.info("rank PK / BK", std::to_string(dec->PK.rank()) + " / " + std::to_string(dec->BK.rank()));
    Json checks = Json::object();
    auto flag = [&](const std::string& key, const std::string& label, bool ok, const std::string& detail = "") {
      checks[key] = ok;
      t.row(label, ok, detail);
      r.pass = r.pass && ok;
    };
    flag("ranks_add", "ranks add up", dec->ranks_add);
    flag("trivial_intersection", "PK meets BK trivially", dec->trivial_intersection);
    if (!dec->ok()) {
      r.doc["decomposition_failure"] = dec->failure;
      flag("decomposition", "decomposition", false, dec->failure);
    } else {
      r.doc["e"] = report::matrix(dec->e);
      flag("idempotent", "e squared equals e", dec->idempotent);
      flag("image_is_PK", "image of e is PK", same_span(column_space(dec->e), dec->PK.basis));
      flag("kernel_is_BK", "e kills BK", (dec->e * dec->BK.basis).is_zero());
      const DecoBlock db = deco_block(*dec);
      r.doc["deco_block"] = Json{{"matrix", report::matrix(db.block)}, {"determinant", report::rat(db.det)},
                                 {"class_ranks", report::vec(db.class_ranks)}};
      flag("deco_block_invertible", "assembled block invertible", db.square && db.det != 0,
           "det " + db.det.get_str());
      const EliminationResult el = eliminate(*dec);
      const bool el_ok = el.consistent && el.passes <= std::max<std::size_t>(1, dec->classes.size()) &&
                         same_span(el.span.basis, dec->PK.basis);
      r.doc["elimination"] = Json{{"passes", el.passes}, {"consistent", el.consistent},
                                  {"images", report::matrix(el.images)}};
      flag("elimination_agrees", "elimination gives PK", el_ok, std::to_string(el.passes) + " passes");
      flag("boundary_span_redundancy", "BK stable under all members",
           same_span(boundary_span_all(m, bound, opt.policy).basis, dec->BK.basis));
      std::set<ClassKey> a, b;
      for (const auto& c : boundary_classes(m, bound, opt.mode)) a.insert(class_key(m, c.lambda, opt.mode));
      for (const auto& c : boundary_classes(m, 2 * bound, opt.mode)) b.insert(class_key(m, c.lambda, opt.mode));
      flag("classes_stable", "classes stable at doubled bound", a == b);
    }
    r.doc["checks"] = checks;

    const ClassMode other = opt.mode == ClassMode::fixed ? ClassMode::levi : ClassMode::fixed;
    Json finding{{"compared_mode", to_string(other)}};
    bool agree = false;
    try {
      const auto alt = decompose(m, DecompositionOptions{bound, other, opt.policy});
      agree = alt->ok() && dec->ok() && same_span(alt->PK.basis, dec->PK.basis) &&
              same_span(alt->BK.basis, dec->BK.basis);
      if (!alt->ok()) finding["failure"] = alt->failure;
    } catch (const Error& e) {
      finding["failure"] = e.what();
    }
    finding["agrees"] = agree;
    r.doc["findings"] = Json{{"mode_comparison", finding}};
    t.info(std::string("agreement with ") + to_string(other) + " mode", agree ? "yes" : "no (finding)");
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    r.pass = false;
    r.doc["error"] = e.what();
    t.row("computation", false, e.what());
  }
  detail::finish(r, t, opt, t0);
  return r;
}

}  // namespace ikt
