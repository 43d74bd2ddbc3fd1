#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cominq/types.hpp"

namespace cominq {

// Degree-sequence combinatorics behind the quantum K-theory structure
// constants: enumeration of the sequences (d_0,...,d_r) with |d| = d and
// d_i > 0 for i > 0, the alternating sums over them, and the two equivalent
// assembly routes for
//
//   N^{w,d}_{u,v} = sum_{d,kappa} (-1)^r I_{d_0}(O_u, O_v, O_{kappa_1}^dual)
//                                 prod_i I_{d_i}(O_{kappa_i}, O_{kappa_{i+1}}^dual)
//
// over abstract integer tables of invariants.

struct DegreeSequence {
  std::vector<int> entries;  // d_0 >= 0, then d_1,...,d_r >= 1

  int total() const;
  int r() const { return static_cast<int>(entries.size()) - 1; }
  int sign() const { return r() % 2 == 0 ? 1 : -1; }
};

// All sequences with the given total, ordered by d_0 descending and then
// lexicographically descending.  Exactly 2^d sequences for d >= 1, and the
// single sequence (0) for d = 0.
std::vector<DegreeSequence> enumerate_sequences(int d);

// Number of sequences with the given total, first entry d0 and entry count:
// binom(d-d0-1, length-2) when d0 < d and length >= 2; 1 when (d0,length)
// = (d,1); 0 otherwise.
Int count_sequences(int d, int d0, int length);

// Exact binomial coefficient with overflow checking.
Int binomial(int n, int k);

// sum_{r=1}^{k} (-1)^r binom(k-1, r-1); equals -1 for k = 1 and 0 for k >= 2.
Int alt_binomial_sum(int k);

// sum over enumerate_sequences(d) of (-1)^r c(min(d_0, dmax)); vanishes
// whenever d > dmax.  This cancellation is what truncates quantum products
// of Schubert classes at the diameter.
Int cancellation_sum(int d, int dmax, const std::function<Int(int)>& c);

// Abstract two- and three-point invariant tables.  three_point[d][u] is the
// n x n integer matrix (v, kappa) playing the role of I_d(O_u, O_v,
// O_kappa^dual); two_point[d-1] is the n x n matrix (kappa, kappa') for
// I_d(O_kappa, O_kappa'^dual), d = 1..max_degree.
struct GwTables {
  int basis_size;
  int max_degree;
  std::vector<std::vector<IntMatrix>> three_point;
  std::vector<IntMatrix> two_point;

  // Deterministic pseudo-random tables with entries in [lo, hi].
  static GwTables random(int basis_size, int max_degree, std::uint64_t seed,
                         Int lo, Int hi);

  // Throws std::overflow_error unless every partial product in an assembly
  // of total degree <= max_degree is guaranteed to fit in int64.
  void check_assembly_bound() const;
};

struct SequenceTerm {
  DegreeSequence sequence;
  int sign;
  Int term;  // unsigned magnitude of the kappa-summed product
};

struct ConstantReport {
  int u, v, w, d;
  Int value;  // signed total
  std::vector<SequenceTerm> breakdown;
};

// Reference oracle: brute-force nested sum over sequences and all tuples
// (kappa_1,...,kappa_r), with kappa_{r+1} = w.
ConstantReport assemble_direct(const GwTables& t, int u, int v, int w, int d);

// The same constant assembled as a signed sum of vector-matrix chains
// A_{d_0}[u][v][.] * T_{d_1} * ... * T_{d_r}, evaluated at w.
Int assemble_matrix(const GwTables& t, int u, int v, int w, int d);

// Euler-characteristic recursion for a single sequence: the row vector
// A_{d_0}[u][v][.] pushed through one matrix factor per extra entry.
Int chain_euler(const GwTables& t, const DegreeSequence& bd, int u, int v,
                int w);

// JSON rendering of a report: keys sequence, sign, term per entry, plus
// total.
std::string to_json(const ConstantReport& report);

}  // namespace cominq
