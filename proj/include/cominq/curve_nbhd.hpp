#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cominq/weyl.hpp"

namespace cominq {

// Cominuscule homogeneous spaces and their curve-neighborhood combinatorics:
// degree distance d(x,y), the degree-1 neighborhood operator on Schubert
// varieties Gamma_1(X(u)) = X(u w_P s_node), the small degree tables, and the
// special nonsingular Schubert varieties X_d.

enum class Family {
  Grassmannian,        // Gr(m,n)  = A_{n-1}, node m
  Lagrangian,          // LG(n)    = C_n, node n      (LG(n,2n))
  OrthogonalMax,       // OG(n)    = D_n, node n      (OG(n,2n))
  Quadric,             // Q(n)     = B_k node 1 (n=2k-1) or D_k node 1 (n=2k-2)
  CayleyPlane,         // E6       = E6, node 6
  Freudenthal          // E7       = E7, node 7
};

struct DegreeTable {
  int d2;  // smallest degree joining any two points (the diameter)
  int d3;  // smallest degree joining any three points
};

class CominSpace {
 public:
  static CominSpace create(Family family, int m, int n);
  // Accepts Gr(m,n), LG(n), LG(n,2n), OG(n), OG(n,2n), Q(n), E6, E7.
  static CominSpace parse(const std::string& text);

  Family family() const { return family_; }
  int param_m() const { return m_; }
  int param_n() const { return n_; }
  const RootSystem& root_system() const { return *rs_; }
  int node() const { return node_; }
  const ParabolicQuotient& quotient() const { return wp_; }
  const WeylElement& u_max() const { return wp_.u_max(); }
  int dimension() const { return u_max().length(); }
  std::string name() const;

 private:
  CominSpace(Family family, int m, int n,
             std::shared_ptr<const RootSystem> rs, int node,
             ParabolicQuotient wp);

  Family family_;
  int m_, n_;
  std::shared_ptr<const RootSystem> rs_;
  int node_;
  ParabolicQuotient wp_;
};

// Number of occurrences of s_node in a reduced word for u; this is
// independent of the chosen word, which the test suite checks rather than
// assumes.  Throws std::invalid_argument when u is not a minimal
// representative.
int deg_dist(const CominSpace& space, const WeylElement& u);

// deg_dist of the longest representative; equals the d2 table value.
int diameter(const CominSpace& space);

// Closed-form (d2, d3) for the family.
DegreeTable dx_table(const CominSpace& space);

// Degree-1 curve neighborhood of a Schubert variety: X(u) -> X(u w_P s_node),
// with the full space as a fixed point.
WeylElement gamma1(const CominSpace& space, const WeylElement& u);

// gamma1 iterated d times.
WeylElement gamma(const CominSpace& space, WeylElement u, int d);

// Chain of degree-1 steps from the base point to u: prefixes of the
// canonical reduced word of u ending at each occurrence of s_node.
std::vector<WeylElement> line_chain(const CominSpace& space,
                                    const WeylElement& u);

// The nonsingular Schubert variety X_d, 0 <= d <= diameter.  Constructions
// are validated on the spot (degree distance, length, membership); a failing
// validation throws std::logic_error.
WeylElement x_small(const CominSpace& space, int d);

struct Dx3Report {
  struct Entry {
    int d;
    bool pass;
  };
  std::vector<Entry> entries;
  bool pass;
};

// Checks Gamma_{d3-d}(X_d) = X for every d in [0, d2].
Dx3Report verify_dx3(const CominSpace& space);

}  // namespace cominq
