#include "cominq/curve_nbhd.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cominq {

namespace {

int family_dimension(Family family, int m, int n) {
  switch (family) {
    case Family::Grassmannian: return m * (n - m);
    case Family::Lagrangian: return n * (n + 1) / 2;
    case Family::OrthogonalMax: return n * (n - 1) / 2;
    case Family::Quadric: return n;
    case Family::CayleyPlane: return 16;
    case Family::Freudenthal: return 27;
  }
  return -1;
}

int x_small_length(const CominSpace& space, int d) {
  switch (space.family()) {
    case Family::Grassmannian: return d * d;
    case Family::Lagrangian: return d * (d + 1) / 2;
    case Family::OrthogonalMax: return d * (2 * d - 1);
    case Family::Quadric: return d == 0 ? 0 : (d == 1 ? 1 : space.param_n());
    case Family::CayleyPlane: return d == 0 ? 0 : (d == 1 ? 1 : 8);
    case Family::Freudenthal:
      return d == 0 ? 0 : (d == 1 ? 1 : (d == 2 ? 10 : 27));
  }
  return -1;
}

}  // namespace

CominSpace::CominSpace(Family family, int m, int n,
                       std::shared_ptr<const RootSystem> rs, int node,
                       ParabolicQuotient wp)
    : family_(family), m_(m), n_(n), rs_(std::move(rs)), node_(node),
      wp_(std::move(wp)) {}

CominSpace CominSpace::create(Family family, int m, int n) {
  LieType type;
  int rank, node;
  switch (family) {
    case Family::Grassmannian:
      if (n < 2 || m < 1 || m >= n)
        throw std::invalid_argument("Gr(m,n) needs 1 <= m < n");
      type = LieType::A; rank = n - 1; node = m;
      break;
    case Family::Lagrangian:
      if (n < 2) throw std::invalid_argument("LG(n) needs n >= 2");
      type = LieType::C; rank = n; node = n;
      break;
    case Family::OrthogonalMax:
      if (n < 3) throw std::invalid_argument("OG(n) needs n >= 3");
      type = LieType::D; rank = n; node = n;
      break;
    case Family::Quadric:
      if (n < 3) throw std::invalid_argument("Q(n) needs n >= 3");
      if (n % 2 == 1) { type = LieType::B; rank = (n + 1) / 2; }
      else { type = LieType::D; rank = (n + 2) / 2; }
      node = 1;
      break;
    case Family::CayleyPlane:
      type = LieType::E6; rank = 6; node = 6; break;
    case Family::Freudenthal:
      type = LieType::E7; rank = 7; node = 7; break;
    default:
      throw std::invalid_argument("unknown family");
  }
  auto rs = std::make_shared<const RootSystem>(build_root_system(type, rank));
  ParabolicQuotient wp = enumerate_wp(*rs, node);
  CominSpace space(family, m, n, rs, node, std::move(wp));
  if (space.dimension() != family_dimension(family, m, n))
    throw std::logic_error(space.name() + ": dimension " +
                           std::to_string(space.dimension()) +
                           " does not match the family value " +
                           std::to_string(family_dimension(family, m, n)));
  return space;
}

CominSpace CominSpace::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  auto upper = [](std::string t) {
    for (char& ch : t) ch = static_cast<char>(std::toupper(ch));
    return t;
  };
  if (upper(s) == "E6") return create(Family::CayleyPlane, 0, 0);
  if (upper(s) == "E7") return create(Family::Freudenthal, 0, 0);

  auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')')
    throw std::invalid_argument("cannot parse space '" + text + "'");
  std::string head = upper(s.substr(0, open));
  std::string args = s.substr(open + 1, s.size() - open - 2);
  std::vector<int> vals;
  std::istringstream is(args);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    try {
      std::size_t pos = 0;
      vals.push_back(std::stoi(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse space '" + text + "'");
    }
  }
  if (head == "GR" && vals.size() == 2)
    return create(Family::Grassmannian, vals[0], vals[1]);
  if (head == "LG" || head == "OG") {
    Family fam = head == "LG" ? Family::Lagrangian : Family::OrthogonalMax;
    if (vals.size() == 1) return create(fam, 0, vals[0]);
    if (vals.size() == 2 && vals[1] == 2 * vals[0])
      return create(fam, 0, vals[0]);
  }
  if (head == "Q" && vals.size() == 1)
    return create(Family::Quadric, 0, vals[0]);
  throw std::invalid_argument("cannot parse space '" + text + "'");
}

std::string CominSpace::name() const {
  switch (family_) {
    case Family::Grassmannian:
      return "Gr(" + std::to_string(m_) + "," + std::to_string(n_) + ")";
    case Family::Lagrangian: return "LG(" + std::to_string(n_) + ")";
    case Family::OrthogonalMax: return "OG(" + std::to_string(n_) + ")";
    case Family::Quadric: return "Q(" + std::to_string(n_) + ")";
    case Family::CayleyPlane: return "E6";
    case Family::Freudenthal: return "E7";
  }
  return "?";
}

int deg_dist(const CominSpace& space, const WeylElement& u) {
  if (!same_datum(u.root_system(), space.root_system()) ||
      !is_minimal_rep(u, space.node()))
    throw std::invalid_argument("deg_dist: not a minimal representative");
  std::vector<int> word = reduced_word(u);
  return static_cast<int>(
      std::count(word.begin(), word.end(), space.node()));
}

int diameter(const CominSpace& space) { return deg_dist(space, space.u_max()); }

DegreeTable dx_table(const CominSpace& space) {
  switch (space.family()) {
    case Family::Grassmannian: {
      int m = space.param_m(), k = space.param_n() - m;
      return {std::min(m, k), std::min({2 * m, 2 * k, std::max(m, k)})};
    }
    case Family::Lagrangian: {
      int n = space.param_n();
      return {n, n};
    }
    case Family::OrthogonalMax: {
      int n = space.param_n();
      return {n / 2, (n + 1) / 2};
    }
    case Family::Quadric: return {2, 2};
    case Family::CayleyPlane: return {2, 4};
    case Family::Freudenthal: return {3, 3};
  }
  throw std::logic_error("unknown family");
}

WeylElement gamma1(const CominSpace& space, const WeylElement& u) {
  if (!is_minimal_rep(u, space.node()))
    throw std::invalid_argument("gamma1: not a minimal representative");
  if (u == space.u_max()) return u;  // Gamma_1(X) = X
  const RootSystem& rs = space.root_system();
  WeylElement moved =
      u * space.quotient().w_p *
      WeylElement::simple_reflection(rs, space.node());
  return min_rep(std::move(moved), space.node());
}

WeylElement gamma(const CominSpace& space, WeylElement u, int d) {
  if (d < 0) throw std::invalid_argument("gamma: negative degree");
  for (int i = 0; i < d; ++i) u = gamma1(space, u);
  return u;
}

std::vector<WeylElement> line_chain(const CominSpace& space,
                                    const WeylElement& u) {
  if (!is_minimal_rep(u, space.node()))
    throw std::invalid_argument("line_chain: not a minimal representative");
  const RootSystem& rs = space.root_system();
  std::vector<WeylElement> chain{WeylElement::identity(rs)};
  std::vector<int> word = reduced_word(u);
  WeylElement prefix = WeylElement::identity(rs);
  for (int letter : word) {
    prefix = prefix * WeylElement::simple_reflection(rs, letter);
    if (letter == space.node()) chain.push_back(prefix);
  }
  return chain;
}

WeylElement x_small(const CominSpace& space, int d) {
  const DegreeTable table = dx_table(space);
  if (d < 0 || d > table.d2)
    throw std::invalid_argument("x_small: degree out of range");
  const RootSystem& rs = space.root_system();
  const ParabolicQuotient& wp = space.quotient();

  WeylElement candidate = WeylElement::identity(rs);
  if (d == 1) {
    candidate = min_rep(WeylElement::simple_reflection(rs, space.node()),
                        space.node());
  } else if (d >= 2) {
    switch (space.family()) {
      case Family::Grassmannian: {
        // X_d = Gr(d, B/A): the d x d rectangle, i.e. the representative
        // sending {1..m} to {1..m-d} u {m+1..m+d}.
        int m = space.param_m(), n = space.param_n();
        std::vector<bool> in_set(n + 2, false);
        for (int i = 1; i <= m - d; ++i) in_set[i] = true;
        for (int i = m + 1; i <= m + d; ++i) in_set[i] = true;
        IntVector w = IntVector::Zero(n - 1);
        for (int j = 1; j < n; ++j)
          w(j - 1) = (in_set[j] ? 1 : 0) - (in_set[j + 1] ? 1 : 0);
        int idx = wp.index_of_weight(w);
        if (idx < 0) throw std::logic_error("x_small: orbit point not found");
        candidate = wp.reps[idx];
        break;
      }
      case Family::Lagrangian: {
        // X_d = LG(A^perp/A): strict partition (d, d-1, ..., 1); weight with
        // the last d signs flipped.
        int n = space.param_n();
        IntVector w = IntVector::Zero(n);
        std::vector<int> sign(n + 1, 1);
        for (int i = n - d + 1; i <= n; ++i) sign[i] = -1;
        for (int j = 1; j < n; ++j) w(j - 1) = sign[j] - sign[j + 1];
        w(n - 1) = sign[n];
        int idx = wp.index_of_weight(w);
        if (idx < 0) throw std::logic_error("x_small: orbit point not found");
        candidate = wp.reps[idx];
        break;
      }
      case Family::OrthogonalMax: {
        // X_d = OG(2d, A^perp/A): strict partition (2d-1, ..., 1); weight
        // (half-sum) with the last 2d signs flipped.
        int n = space.param_n();
        IntVector w = IntVector::Zero(n);
        std::vector<int> sign(n + 1, 1);
        for (int i = n - 2 * d + 1; i <= n; ++i) sign[i] = -1;
        for (int j = 1; j + 1 < n; ++j) w(j - 1) = (sign[j] - sign[j + 1]) / 2;
        w(n - 2) = (sign[n - 1] - sign[n]) / 2;
        w(n - 1) = (sign[n - 1] + sign[n]) / 2;
        int idx = wp.index_of_weight(w);
        if (idx < 0) throw std::logic_error("x_small: orbit point not found");
        candidate = wp.reps[idx];
        break;
      }
      case Family::Quadric:
        candidate = space.u_max();  // d = 2
        break;
      case Family::CayleyPlane:
        candidate = WeylElement::from_word(rs, {6, 5, 4, 2, 3, 4, 5, 6});
        break;
      case Family::Freudenthal:
        candidate = d == 2 ? WeylElement::from_word(
                                 rs, {7, 6, 5, 4, 2, 3, 4, 5, 6, 7})
                           : space.u_max();
        break;
    }
  }

  // Validation gate: never hand out an unchecked construction.
  if (!is_minimal_rep(candidate, space.node()))
    throw std::logic_error("x_small: candidate is not a minimal representative");
  if (candidate.length() != x_small_length(space, d))
    throw std::logic_error("x_small: candidate has wrong length");
  if (deg_dist(space, candidate) != d)
    throw std::logic_error("x_small: candidate has wrong degree distance");
  return candidate;
}

Dx3Report verify_dx3(const CominSpace& space) {
  const DegreeTable table = dx_table(space);
  Dx3Report report;
  report.pass = true;
  for (int d = 0; d <= table.d2; ++d) {
    WeylElement start = x_small(space, d);
    bool ok = gamma(space, start, table.d3 - d) == space.u_max();
    report.entries.push_back({d, ok});
    report.pass = report.pass && ok;
  }
  return report;
}

}  // namespace cominq
