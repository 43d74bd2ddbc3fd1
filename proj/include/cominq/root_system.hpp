#pragma once

#include <string>
#include <vector>

#include "cominq/types.hpp"

namespace cominq {

// Root systems of types A, B, C, D, E6, E7 over the integers, with Bourbaki
// node numbering.  Roots are stored as coordinate vectors in the simple-root
// basis; a valid root has all coordinates >= 0 or all <= 0.
//
// The Cartan matrix is stored with rows indexed by coroots:
//
//   cartan(i, j) = < alpha_j, alpha_i^vee >
//
// so the simple reflection s_i acts on root coordinates v by
//
//   (s_i v)_i = v_i - sum_j cartan(i, j) v_j,   other coordinates unchanged,
//
// i.e. as the matrix I - e_i * (row i of the Cartan matrix).

enum class LieType { A, B, C, D, E6, E7 };

std::string to_string(LieType type);

struct CartanDatum {
  LieType type;
  int rank;
  IntMatrix cartan;
};

struct RootSystem {
  CartanDatum datum;
  std::vector<IntVector> positive_roots;  // sorted by (height, coordinates)
  IntVector highest_root;

  int rank() const { return datum.rank; }
  bool is_positive_root(const IntVector& coords) const;
  bool is_root(const IntVector& coords) const;
};

inline bool same_datum(const RootSystem& a, const RootSystem& b) {
  return a.datum.type == b.datum.type && a.datum.rank == b.datum.rank;
}

// The Cartan matrix of the given type; throws std::invalid_argument for an
// unsupported (type, rank) pair.  Supported: A_n (n>=1), B_n (n>=2),
// C_n (n>=2), D_n (n>=3), E6, E7.
IntMatrix cartan_matrix(LieType type, int rank);

// Positive roots generated by breadth-first closure under simple reflections
// starting from the simple roots.
RootSystem build_root_system(LieType type, int rank);

// Action of s_i on root-lattice coordinates; i is 1-based.
IntMatrix reflection_matrix(const RootSystem& rs, int i);
IntVector reflect(const RootSystem& rs, int i, const IntVector& v);

// Simple-root indices whose coefficient in the highest root equals one.
std::vector<int> cominuscule_nodes(const RootSystem& rs);

}  // namespace cominq
