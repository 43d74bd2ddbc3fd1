#include "cominq/cli.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cominq/cayley_ring.hpp"
#include "cominq/curve_nbhd.hpp"
#include "cominq/structure_constants.hpp"

namespace cominq::cli {

using nlohmann::json;

namespace {

constexpr const char* kDefaultTable = "data/qk_e6p6.tbl";

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

json checks_to_json(const std::vector<Check>& checks) {
  json arr = json::array();
  for (const Check& c : checks)
    arr.push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return arr;
}

std::string checks_to_text(const std::vector<Check>& checks) {
  std::ostringstream os;
  for (const Check& c : checks) {
    os << c.name << (c.pass ? " pass" : " FAIL");
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
  return os.str();
}

bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

std::uint64_t splitmix(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// ---------------------------------------------------------------------------
// The full invariant suite behind `verify all`.

int expected_wp_size(const CominSpace& space) {
  switch (space.family()) {
    case Family::Grassmannian: {
      Int size = binomial(space.param_n(), space.param_m());
      return static_cast<int>(size);
    }
    case Family::Lagrangian: return 1 << space.param_n();
    case Family::OrthogonalMax: return 1 << (space.param_n() - 1);
    case Family::Quadric: return 2 * space.root_system().rank();
    case Family::CayleyPlane: return 27;
    case Family::Freudenthal: return 56;
  }
  return -1;
}

int classical_root_count(const RootSystem& rs) {
  int n = rs.rank();
  switch (rs.datum.type) {
    case LieType::A: return n * (n + 1) / 2;
    case LieType::B:
    case LieType::C: return n * n;
    case LieType::D: return n * (n - 1);
    case LieType::E6: return 36;
    case LieType::E7: return 63;
  }
  return -1;
}

Check check_root_census(const CominSpace& space) {
  const RootSystem& rs = space.root_system();
  int want = classical_root_count(rs);
  int got = static_cast<int>(rs.positive_roots.size());
  bool neg_ok = true;
  for (const IntVector& beta : rs.positive_roots)
    if (rs.is_positive_root(-beta)) neg_ok = false;
  bool stable = true;
  for (int i = 1; i <= rs.rank() && stable; ++i)
    for (const IntVector& beta : rs.positive_roots)
      if (!rs.is_root(reflect(rs, i, beta))) {
        stable = false;
        break;
      }
  bool pass = want == got && neg_ok && stable;
  return {"root_census", pass,
          std::to_string(got) + " positive roots, reflection-stable"};
}

Check check_wp_census(const CominSpace& space) {
  int want = expected_wp_size(space);
  int got = static_cast<int>(space.quotient().size());
  return {"wp_census", want == got,
          "|W^P| = " + std::to_string(got) + ", expected " +
              std::to_string(want)};
}

Check check_wp_membership(const CominSpace& space) {
  for (const WeylElement& rep : space.quotient().reps)
    if (!is_minimal_rep(rep, space.node()))
      return {"wp_membership", false, "a representative fails the W^P test"};
  return {"wp_membership", true, "u(alpha_i) > 0 for all i != node"};
}

Check check_only_descent(const CominSpace& space) {
  for (const WeylElement& rep : space.quotient().reps) {
    if (rep.is_identity()) continue;
    std::vector<int> ds = rep.right_descents();
    if (ds.size() != 1 || ds[0] != space.node())
      return {"only_descent", false, "non-node right descent found"};
  }
  return {"only_descent", true, "unique right descent at the node"};
}

Check check_reduced_words(const CominSpace& space) {
  const RootSystem& rs = space.root_system();
  for (const WeylElement& rep : space.quotient().reps) {
    std::vector<int> word = reduced_word(rep);
    if (static_cast<int>(word.size()) != rep.length())
      return {"reduced_words", false, "canonical word has wrong length"};
    if (WeylElement::from_word(rs, word) != rep)
      return {"reduced_words", false, "canonical word does not multiply back"};
  }
  return {"reduced_words", true, "words multiply back at stated length"};
}

Check check_diameter(const CominSpace& space) {
  int diam = diameter(space);
  int want = dx_table(space).d2;
  return {"diameter_table", diam == want,
          "diameter " + std::to_string(diam) + ", table d2 " +
              std::to_string(want)};
}

Check check_word_independence(const CominSpace& space) {
  const int node = space.node();
  std::uint64_t state = 0x5eedc0de5eedc0deull;
  for (const WeylElement& rep : space.quotient().reps) {
    std::vector<int> canonical = reduced_word(rep);
    auto node_count = [&](const std::vector<int>& w) {
      return std::count(w.begin(), w.end(), node);
    };
    auto want = node_count(canonical);
    WordEnumeration en = all_reduced_words(rep, 10001);
    if (en.exhaustive && en.words.size() <= 10000) {
      for (const auto& w : en.words)
        if (node_count(w) != want)
          return {"word_independence", false, "node count varies over words"};
    } else {
      for (int k = 0; k < 50; ++k)
        if (node_count(random_reduced_word(rep, state)) != want)
          return {"word_independence", false, "node count varies over words"};
    }
  }
  return {"word_independence", true, "s_node count constant per element"};
}

Check check_bruhat_axioms(const CominSpace& space) {
  const ParabolicQuotient& wp = space.quotient();
  const std::size_t n = wp.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!wp.leq(i, i)) return {"bruhat_axioms", false, "not reflexive"};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && wp.leq(i, j) && wp.leq(j, i))
        return {"bruhat_axioms", false, "not antisymmetric"};
      if (i != j && wp.leq(i, j) &&
          wp.reps[i].length() >= wp.reps[j].length())
        return {"bruhat_axioms", false, "length does not increase strictly"};
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!wp.leq(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (wp.leq(j, k) && !wp.leq(i, k))
          return {"bruhat_axioms", false, "not transitive"};
    }
  // the node reflection sits below every non-identity representative
  WeylElement s = min_rep(
      WeylElement::simple_reflection(space.root_system(), space.node()),
      space.node());
  int s_idx = wp.index_of(s);
  for (std::size_t j = 0; j < n; ++j) {
    if (!wp.leq(0, j)) return {"bruhat_axioms", false, "identity not minimum"};
    if (!wp.reps[j].is_identity() &&
        !wp.leq(static_cast<std::size_t>(s_idx), j))
      return {"bruhat_axioms", false, "s_node not below a representative"};
  }
  return {"bruhat_axioms", true, "partial order, graded by length"};
}

Check check_gamma1(const CominSpace& space) {
  const ParabolicQuotient& wp = space.quotient();
  const std::size_t n = wp.size();
  const int d2 = dx_table(space).d2;
  std::vector<int> image(n);
  bool step_is_tight = true;  // observed, not required
  for (std::size_t i = 0; i < n; ++i) {
    WeylElement g = gamma1(space, wp.reps[i]);
    int gi = wp.index_of(g);
    if (gi < 0) return {"gamma1_expansion", false, "image leaves W^P"};
    image[i] = gi;
    if (!wp.leq(i, static_cast<std::size_t>(gi)))
      return {"gamma1_expansion", false, "u not below gamma1(u)"};
    bool top = wp.reps[i] == space.u_max();
    if (!top && g.length() <= wp.reps[i].length())
      return {"gamma1_expansion", false, "no strict growth below the top"};
    if (top && !(g == space.u_max()))
      return {"gamma1_expansion", false, "top is not fixed"};
    int before = deg_dist(space, wp.reps[i]);
    int after = deg_dist(space, g);
    if (after > before + 1)
      return {"gamma1_expansion", false, "degree distance jumps by > 1"};
    if (after != std::min(before + 1, d2)) step_is_tight = false;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (wp.leq(i, j) &&
          !wp.leq(static_cast<std::size_t>(image[i]),
                  static_cast<std::size_t>(image[j])))
        return {"gamma1_monotone", false, "gamma1 is not Bruhat-monotone"};
  std::string note =
      "expansive, strictly growing below the top, Bruhat-monotone";
  note += step_is_tight ? "; observed deg_dist step = min(+1, d2)"
                        : "; deg_dist step <= +1 only";
  return {"gamma1", true, note};
}

Check check_saturation(const CominSpace& space) {
  const int d2 = dx_table(space).d2;
  WeylElement e = WeylElement::identity(space.root_system());
  if (!(gamma(space, e, d2) == space.u_max()))
    return {"saturation", false, "gamma_{d2}(point) != X"};
  if (d2 > 0 && gamma(space, e, d2 - 1) == space.u_max())
    return {"saturation", false, "diameter not minimal"};
  return {"saturation", true, "gamma_{d2}(point) = X, minimal"};
}

Check check_line_chain(const CominSpace& space) {
  for (const WeylElement& rep : space.quotient().reps) {
    std::vector<WeylElement> chain = line_chain(space, rep);
    if (static_cast<int>(chain.size()) != deg_dist(space, rep) + 1)
      return {"line_chain", false, "chain length != deg_dist + 1"};
    for (std::size_t i = 1; i < chain.size(); ++i) {
      WeylElement step =
          min_rep(chain[i - 1].inverse() * chain[i], space.node());
      if (deg_dist(space, step) != 1)
        return {"line_chain", false, "consecutive step has degree != 1"};
    }
    if (!(min_rep(chain.back(), space.node()) == rep))
      return {"line_chain", false, "chain does not end at the element"};
  }
  return {"line_chain", true, "degree-1 steps from the point to each element"};
}

Check check_x_small(const CominSpace& space) {
  const int d2 = dx_table(space).d2;
  for (int d = 0; d <= d2; ++d) {
    try {
      x_small(space, d);  // construction self-validates
    } catch (const std::exception& e) {
      return {"x_small", false, e.what()};
    }
  }
  return {"x_small", true,
          "X_d validated for d = 0.." + std::to_string(d2)};
}

Check check_dx3(const CominSpace& space) {
  try {
    Dx3Report r = verify_dx3(space);
    for (const auto& entry : r.entries)
      if (!entry.pass)
        return {"dx3", false, "fails at d = " + std::to_string(entry.d)};
    return {"dx3", true,
            "Gamma_{d3-d}(X_d) = X for d = 0.." +
                std::to_string(dx_table(space).d2)};
  } catch (const std::exception& e) {
    return {"dx3", false, e.what()};
  }
}

Check check_e6_divisor(const CominSpace& space) {
  WeylElement div = gamma1(space, x_small(space, 2));
  if (div.length() != 15)
    return {"e6_divisor", false, "gamma1(X_2) has length != 15"};
  int count = 0;
  for (const WeylElement& rep : space.quotient().reps)
    if (rep.length() == 15) ++count;
  return {"e6_divisor", count == 1,
          "gamma1(X_2) is the unique Schubert divisor"};
}

std::vector<Check> verify_all_checks(const CominSpace& space) {
  std::vector<Check> checks;
  checks.push_back(check_root_census(space));
  checks.push_back(check_wp_census(space));
  checks.push_back(check_wp_membership(space));
  checks.push_back(check_only_descent(space));
  checks.push_back(check_reduced_words(space));
  checks.push_back(check_diameter(space));
  checks.push_back(check_word_independence(space));
  checks.push_back(check_bruhat_axioms(space));
  checks.push_back(check_gamma1(space));
  checks.push_back(check_saturation(space));
  checks.push_back(check_line_chain(space));
  checks.push_back(check_x_small(space));
  checks.push_back(check_dx3(space));
  if (space.family() == Family::CayleyPlane)
    checks.push_back(check_e6_divisor(space));
  return checks;
}

std::vector<Check> qk_verify_checks(const MultTable& table) {
  std::vector<Check> checks;
  auto push = [&](const std::string& name, CheckResult r) {
    checks.push_back({name, r.pass, r.detail});
  };
  push("associativity", verify_associativity(table));
  push("degree_bound", verify_degree_bound(table));
  push("codim_sign", verify_codim_sign(table));
  push("census", verify_census(table));
  CominSpace e6 = CominSpace::create(Family::CayleyPlane, 0, 0);
  push("link_labels", link_labels(table, e6.quotient()));
  int d2 = diameter(e6);
  int max_q = -1;
  for (const MultTable::Row& row : table.rows())
    max_q = std::max(max_q, row.product->max_q_degree());
  checks.push_back({"degree_equals_diameter", max_q == d2,
                    "table max q-degree " + std::to_string(max_q) +
                        ", Weyl-side diameter " + std::to_string(d2)});
  return checks;
}

// ---------------------------------------------------------------------------

struct Emitter {
  std::string command;
  bool json_mode = false;
  json inputs = json::object();

  CommandOutcome data(const std::string& text, const json& results) const {
    if (!json_mode) return {0, text, ""};
    json doc{{"command", command},
             {"inputs", inputs},
             {"results", results},
             {"pass", true}};
    return {0, doc.dump(2) + "\n", ""};
  }

  CommandOutcome verdict(const std::vector<Check>& checks,
                         const std::string& text) const {
    bool pass = all_pass(checks);
    if (!json_mode) return {pass ? 0 : 1, text, ""};
    json doc{{"command", command},
             {"inputs", inputs},
             {"results", checks_to_json(checks)},
             {"pass", pass}};
    return {pass ? 0 : 1, doc.dump(2) + "\n", ""};
  }
};

WeylElement element_from_word_option(const CominSpace& space,
                                     const std::string& word_text) {
  std::vector<int> word =
      parse_word(word_text, space.root_system().rank());
  return min_rep(WeylElement::from_word(space.root_system(), word),
                 space.node());
}

}  // namespace

CommandOutcome run(const std::vector<std::string>& args) {
  CLI::App app{"exact cominuscule Schubert calculus and the QK(E6/P6) table"};
  app.name("cominq");
  app.require_subcommand(1);

  std::string space_text, word_text, table_path = kDefaultTable;
  std::string expr_a, expr_b;
  bool json_mode = false, list_reps = false;
  int dvalue = 0, dmax = 0, basis = 2;
  std::uint64_t seed = 1;
  int trials = 1;

  CommandOutcome outcome{0, "", ""};
  auto json_flag = [&](CLI::App* cmd) {
    cmd->add_flag("--json", json_mode, "emit one JSON document");
  };

  // roots ---------------------------------------------------------------
  CLI::App* roots = app.add_subcommand("roots", "root-system data");
  roots->add_option("--space", space_text, "space, e.g. Gr(2,4)")->required();
  json_flag(roots);
  roots->callback([&] {
    CominSpace space = CominSpace::parse(space_text);
    const RootSystem& rs = space.root_system();
    std::vector<int> nodes = cominuscule_nodes(rs);
    std::ostringstream hr, cn;
    for (int i = 0; i < rs.rank(); ++i)
      hr << (i ? "," : "") << rs.highest_root(i);
    for (std::size_t i = 0; i < nodes.size(); ++i)
      cn << (i ? "," : "") << nodes[i];
    std::ostringstream os;
    os << "space " << space.name() << "\n"
       << "type " << to_string(rs.datum.type) << " rank " << rs.rank() << "\n"
       << "positive_roots " << rs.positive_roots.size() << "\n"
       << "highest_root " << hr.str() << "\n"
       << "cominuscule_nodes " << cn.str() << "\n";
    Emitter e{"roots", json_mode, {{"space", space.name()}}};
    outcome = e.data(os.str(),
                     json{{"type", to_string(rs.datum.type)},
                          {"rank", rs.rank()},
                          {"positive_roots", rs.positive_roots.size()},
                          {"highest_root", hr.str()},
                          {"cominuscule_nodes", nodes}});
  });

  // wp --------------------------------------------------------------------
  CLI::App* wp_cmd = app.add_subcommand("wp", "minimal coset representatives");
  wp_cmd->add_option("--space", space_text, "space")->required();
  wp_cmd->add_flag("--list", list_reps, "list representative words");
  json_flag(wp_cmd);
  wp_cmd->callback([&] {
    CominSpace space = CominSpace::parse(space_text);
    const ParabolicQuotient& wp = space.quotient();
    std::map<int, int> by_length;
    for (const WeylElement& rep : wp.reps) ++by_length[rep.length()];
    std::ostringstream os, lens;
    for (auto it = by_length.begin(); it != by_length.end(); ++it)
      lens << (it == by_length.begin() ? "" : " ") << it->first << ":"
           << it->second;
    os << "space " << space.name() << "\n"
       << "size " << wp.size() << "\n"
       << "lengths " << lens.str() << "\n"
       << "dim " << space.dimension() << "\n";
    json reps_json = json::array();
    if (list_reps) {
      for (const WeylElement& rep : wp.reps) {
        std::string w = format_word(reduced_word(rep));
        os << "rep len " << rep.length() << " word " << w << "\n";
        reps_json.push_back(w);
      }
    }
    json results{{"size", wp.size()},
                 {"lengths", lens.str()},
                 {"dim", space.dimension()}};
    if (list_reps) results["reps"] = reps_json;
    Emitter e{"wp", json_mode, {{"space", space.name()}}};
    outcome = e.data(os.str(), results);
  });

  // dist --------------------------------------------------------------------
  CLI::App* dist = app.add_subcommand("dist", "degree distance of a coset");
  dist->add_option("--space", space_text, "space")->required();
  dist->add_option("--word", word_text, "comma-separated word")->required();
  json_flag(dist);
  dist->callback([&] {
    CominSpace space = CominSpace::parse(space_text);
    WeylElement u = element_from_word_option(space, word_text);
    int d = deg_dist(space, u);
    std::string rep_word = format_word(reduced_word(u));
    std::ostringstream os;
    os << "min_rep " << rep_word << "\n" << "deg_dist " << d << "\n";
    Emitter e{"dist", json_mode,
              {{"space", space.name()}, {"word", word_text}}};
    outcome = e.data(os.str(), json{{"min_rep", rep_word}, {"deg_dist", d}});
  });

  // gamma -------------------------------------------------------------------
  CLI::App* gamma_cmd =
      app.add_subcommand("gamma", "iterated curve neighborhood");
  gamma_cmd->add_option("--space", space_text, "space")->required();
  gamma_cmd->add_option("--word", word_text, "comma-separated word")
      ->required();
  gamma_cmd->add_option("--d", dvalue, "iterations")->required();
  json_flag(gamma_cmd);
  gamma_cmd->callback([&] {
    CominSpace space = CominSpace::parse(space_text);
    WeylElement u = element_from_word_option(space, word_text);
    WeylElement g = gamma(space, u, dvalue);
    std::string w = format_word(reduced_word(g));
    Emitter e{"gamma", json_mode,
              {{"space", space.name()}, {"word", word_text}, {"d", dvalue}}};
    outcome = e.data(w + "\n", json{{"word", w}, {"length", g.length()}});
  });

  // chain -------------------------------------------------------------------
  CLI::App* chain_cmd = app.add_subcommand("chain", "chain of degree-1 steps");
  chain_cmd->add_option("--space", space_text, "space")->required();
  chain_cmd->add_option("--word", word_text, "comma-separated word")
      ->required();
  json_flag(chain_cmd);
  chain_cmd->callback([&] {
    CominSpace space = CominSpace::parse(space_text);
    WeylElement u = element_from_word_option(space, word_text);
    std::ostringstream os;
    json words = json::array();
    for (const WeylElement& link : line_chain(space, u)) {
      std::string w = format_word(reduced_word(link));
      os << w << "\n";
      words.push_back(w);
    }
    Emitter e{"chain", json_mode,
              {{"space", space.name()}, {"word", word_text}}};
    outcome = e.data(os.str(), json{{"chain", words}});
  });

  // verify ----------------------------------------------------------------
  CLI::App* verify = app.add_subcommand("verify", "invariant suites");
  verify->require_subcommand(1);
  CLI::App* vdx3 = verify->add_subcommand("dx3", "Gamma_{d3-d}(X_d) = X");
  vdx3->add_option("--space", space_text, "space")->required();
  json_flag(vdx3);
  vdx3->callback([&] {
    CominSpace space = CominSpace::parse(space_text);
    std::vector<Check> checks;
    try {
      Dx3Report r = verify_dx3(space);
      for (const auto& entry : r.entries)
        checks.push_back(
            {"dx3 d=" + std::to_string(entry.d), entry.pass, ""});
    } catch (const std::exception& ex) {
      checks.push_back({"dx3", false, ex.what()});
    }
    Emitter e{"verify dx3", json_mode, {{"space", space.name()}}};
    outcome = e.verdict(checks, checks_to_text(checks));
  });
  CLI::App* vall = verify->add_subcommand("all", "full invariant suite");
  vall->add_option("--space", space_text, "space")->required();
  json_flag(vall);
  vall->callback([&] {
    CominSpace space = CominSpace::parse(space_text);
    std::vector<Check> checks = verify_all_checks(space);
    Emitter e{"verify all", json_mode, {{"space", space.name()}}};
    outcome = e.verdict(checks, checks_to_text(checks));
  });

  // cancel ------------------------------------------------------------------
  CLI::App* cancel = app.add_subcommand("cancel", "cancellation sums");
  cancel->add_option("--d", dvalue, "total degree")->required();
  cancel->add_option("--dmax", dmax, "cap")->required();
  cancel->add_option("--seed", seed, "RNG seed");
  cancel->add_option("--trials", trials, "number of random functions");
  json_flag(cancel);
  cancel->callback([&] {
    std::uint64_t state = seed;
    std::vector<Check> checks;
    for (int t = 0; t < trials; ++t) {
      std::vector<Int> values(dmax + 1);
      for (Int& v : values)
        v = static_cast<Int>(splitmix(state) % 1999) - 999;
      Int sum = cancellation_sum(dvalue, dmax,
                                 [&](int k) { return values[k]; });
      bool want_zero = dvalue > dmax;
      checks.push_back({"trial " + std::to_string(t),
                        !want_zero || sum == 0,
                        "sum = " + std::to_string(sum)});
    }
    Emitter e{"cancel", json_mode,
              {{"d", dvalue}, {"dmax", dmax}, {"seed", seed},
               {"trials", trials}}};
    outcome = e.verdict(checks, checks_to_text(checks));
  });

  // assemble ----------------------------------------------------------------
  CLI::App* assemble =
      app.add_subcommand("assemble", "oracle vs. matrix-chain assembly");
  assemble->add_option("--basis", basis, "basis size")->required();
  assemble->add_option("--dmax", dmax, "maximum degree")->required();
  assemble->add_option("--seed", seed, "RNG seed");
  assemble->add_option("--trials", trials, "number of random tables");
  json_flag(assemble);
  assemble->callback([&] {
    std::vector<Check> checks;
    long comparisons = 0;
    for (int t = 0; t < trials; ++t) {
      GwTables tables = GwTables::random(basis, dmax, seed + t, -9, 9);
      bool ok = true;
      for (int u = 0; u < basis && ok; ++u)
        for (int v = 0; v < basis && ok; ++v)
          for (int w = 0; w < basis && ok; ++w)
            for (int d = 0; d <= dmax && ok; ++d) {
              ConstantReport direct = assemble_direct(tables, u, v, w, d);
              Int matrix = assemble_matrix(tables, u, v, w, d);
              Int chain = 0;
              for (const SequenceTerm& st : direct.breakdown)
                chain = checked_add(
                    chain, st.sign * chain_euler(tables, st.sequence, u, v, w));
              ok = direct.value == matrix && direct.value == chain;
              ++comparisons;
            }
      checks.push_back({"table " + std::to_string(t), ok,
                        ok ? "three routes agree" : "routes disagree"});
    }
    Emitter e{"assemble", json_mode,
              {{"basis", basis}, {"dmax", dmax}, {"seed", seed},
               {"trials", trials}}};
    std::string text = checks_to_text(checks) + "comparisons " +
                       std::to_string(comparisons) + "\n";
    outcome = e.verdict(checks, text);
  });

  // qk ------------------------------------------------------------------
  CLI::App* qk = app.add_subcommand("qk", "Cayley-plane quantum K-theory");
  qk->require_subcommand(1);
  CLI::App* qk_mult = qk->add_subcommand("mult", "multiply two expressions");
  qk_mult->add_option("--table", table_path, "table file")
      ->envname("COMINQ_TABLE");
  qk_mult->add_option("a", expr_a, "first expression")->required();
  qk_mult->add_option("b", expr_b, "second expression")->required();
  json_flag(qk_mult);
  qk_mult->callback([&] {
    MultTable table = MultTable::load(table_path);
    QkElement product =
        multiply(table, parse_expr(expr_a), parse_expr(expr_b));
    std::string s = serialize(product);
    Emitter e{"qk mult", json_mode,
              {{"table", table_path}, {"a", expr_a}, {"b", expr_b}}};
    outcome = e.data(s + "\n", json{{"product", s}});
  });
  CLI::App* qk_verify = qk->add_subcommand("verify", "verify the table");
  qk_verify->add_option("--table", table_path, "table file")
      ->envname("COMINQ_TABLE");
  json_flag(qk_verify);
  qk_verify->callback([&] {
    MultTable table = MultTable::load(table_path);
    std::vector<Check> checks = qk_verify_checks(table);
    Emitter e{"qk verify", json_mode, {{"table", table_path}}};
    outcome = e.verdict(checks, checks_to_text(checks));
  });

  std::vector<const char*> argv;
  argv.push_back("cominq");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0)
      return {0, app.help(), ""};
    return {2, "", std::string(e.what()) + "\n"};
  } catch (const ParseError& e) {
    return {2, "", std::string(e.what()) + "\n"};
  } catch (const std::invalid_argument& e) {
    return {2, "", std::string(e.what()) + "\n"};
  } catch (const std::exception& e) {
    return {1, "", std::string(e.what()) + "\n"};
  }
  return outcome;
}

int run_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  CommandOutcome res = run(args);
  std::cout << res.out;
  std::cerr << res.err;
  return res.exit_code;
}

}  // namespace cominq::cli
