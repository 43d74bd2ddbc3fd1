#include "cominq/root_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace cominq {

std::string to_string(LieType type) {
  switch (type) {
    case LieType::A: return "A";
    case LieType::B: return "B";
    case LieType::C: return "C";
    case LieType::D: return "D";
    case LieType::E6: return "E6";
    case LieType::E7: return "E7";
  }
  return "?";
}

Int det_exact(IntMatrix m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("det_exact: matrix not square");
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.row(k).swap(m.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = (checked_mul(m(i, j), m(k, k)) -
                   checked_mul(m(i, k), m(k, j))) /
                  prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

void add_edge(IntMatrix& c, int i, int j) {
  c(i - 1, j - 1) = -1;
  c(j - 1, i - 1) = -1;
}

bool all_nonneg(const IntVector& v) { return (v.array() >= 0).all(); }
bool all_nonpos(const IntVector& v) { return (v.array() <= 0).all(); }

}  // namespace

IntMatrix cartan_matrix(LieType type, int rank) {
  auto bad = [&] {
    return std::invalid_argument("unsupported root system " + to_string(type) +
                                 "_" + std::to_string(rank));
  };
  int n = rank;
  switch (type) {
    case LieType::A: if (n < 1) throw bad(); break;
    case LieType::B: if (n < 2) throw bad(); break;
    case LieType::C: if (n < 2) throw bad(); break;
    case LieType::D: if (n < 3) throw bad(); break;
    case LieType::E6: if (n != 6) throw bad(); break;
    case LieType::E7: if (n != 7) throw bad(); break;
  }
  IntMatrix c = IntMatrix::Zero(n, n);
  c.diagonal().setConstant(2);
  switch (type) {
    case LieType::A:
      for (int i = 1; i < n; ++i) add_edge(c, i, i + 1);
      break;
    case LieType::B:
      // alpha_n is the short root: <alpha_{n-1}, alpha_n^vee> = -2.
      for (int i = 1; i < n; ++i) add_edge(c, i, i + 1);
      c(n - 1, n - 2) = -2;
      break;
    case LieType::C:
      // alpha_n is the long root: <alpha_n, alpha_{n-1}^vee> = -2.
      for (int i = 1; i < n; ++i) add_edge(c, i, i + 1);
      c(n - 2, n - 1) = -2;
      break;
    case LieType::D:
      // chain 1 .. n-1, with node n attached to node n-2
      for (int i = 1; i < n - 1; ++i) add_edge(c, i, i + 1);
      add_edge(c, n - 2, n);
      break;
    case LieType::E6:
      add_edge(c, 1, 3);
      add_edge(c, 3, 4);
      add_edge(c, 4, 5);
      add_edge(c, 5, 6);
      add_edge(c, 2, 4);
      break;
    case LieType::E7:
      add_edge(c, 1, 3);
      add_edge(c, 3, 4);
      add_edge(c, 4, 5);
      add_edge(c, 5, 6);
      add_edge(c, 6, 7);
      add_edge(c, 2, 4);
      break;
  }
  return c;
}

bool RootSystem::is_positive_root(const IntVector& coords) const {
  if (!all_nonneg(coords)) return false;
  auto it = std::lower_bound(
      positive_roots.begin(), positive_roots.end(), coords,
      [](const IntVector& a, const IntVector& b) {
        Int ha = a.sum(), hb = b.sum();
        if (ha != hb) return ha < hb;
        return lex_less(a, b);
      });
  return it != positive_roots.end() && (it->array() == coords.array()).all();
}

bool RootSystem::is_root(const IntVector& coords) const {
  if (all_nonneg(coords)) return is_positive_root(coords);
  if (all_nonpos(coords)) return is_positive_root(-coords);
  return false;
}

RootSystem build_root_system(LieType type, int rank) {
  RootSystem rs;
  rs.datum = CartanDatum{type, rank, cartan_matrix(type, rank)};
  const IntMatrix& c = rs.datum.cartan;

  auto vec_less = [](const IntVector& a, const IntVector& b) {
    return lex_less(a, b);
  };
  std::vector<IntVector> found;
  auto known = [&](const IntVector& v) {
    auto it = std::lower_bound(found.begin(), found.end(), v, vec_less);
    return it != found.end() && (it->array() == v.array()).all();
  };
  auto insert = [&](const IntVector& v) {
    auto it = std::lower_bound(found.begin(), found.end(), v, vec_less);
    found.insert(it, v);
  };

  std::vector<IntVector> frontier;
  for (int i = 0; i < rank; ++i) {
    IntVector alpha = IntVector::Zero(rank);
    alpha(i) = 1;
    insert(alpha);
    frontier.push_back(alpha);
  }

  // Closure under simple reflections, keeping the positive half.  Heights of
  // positive roots are bounded, so this terminates.
  while (!frontier.empty()) {
    std::vector<IntVector> next;
    for (const IntVector& v : frontier) {
      for (int i = 0; i < rank; ++i) {
        IntVector w = v;
        w(i) -= c.row(i).dot(v);
        if (!all_nonneg(w)) continue;  // only sign changes leave the positive half
        if (!known(w)) {
          insert(w);
          next.push_back(w);
        }
      }
    }
    frontier = std::move(next);
  }

  rs.positive_roots = std::move(found);
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
            [](const IntVector& a, const IntVector& b) {
              Int ha = a.sum(), hb = b.sum();
              if (ha != hb) return ha < hb;
              return lex_less(a, b);
            });

  // The highest root is the unique coordinatewise maximum.
  IntVector theta = rs.positive_roots.back();
  for (const IntVector& v : rs.positive_roots)
    if (!(v.array() <= theta.array()).all())
      throw std::logic_error("no coordinatewise-maximal positive root");
  rs.highest_root = theta;
  return rs;
}

IntMatrix reflection_matrix(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank())
    throw std::out_of_range("simple-root index out of range");
  IntMatrix s = IntMatrix::Identity(rs.rank(), rs.rank());
  s.row(i - 1) -= rs.datum.cartan.row(i - 1);
  return s;
}

IntVector reflect(const RootSystem& rs, int i, const IntVector& v) {
  if (i < 1 || i > rs.rank())
    throw std::out_of_range("simple-root index out of range");
  if (v.size() != rs.rank())
    throw std::invalid_argument("vector size does not match rank");
  IntVector w = v;
  w(i - 1) -= rs.datum.cartan.row(i - 1).dot(v);
  return w;
}

std::vector<int> cominuscule_nodes(const RootSystem& rs) {
  std::vector<int> nodes;
  for (int i = 0; i < rs.rank(); ++i)
    if (rs.highest_root(i) == 1) nodes.push_back(i + 1);
  return nodes;
}

}  // namespace cominq
