#pragma once

#include <cstdint>
#include <stdexcept>

#include <Eigen/Core>

namespace cominq {

// Every quantity in this library is an integer; there is no floating point
// anywhere.  Matrices and vectors are Eigen dense types over int64.
using Int = std::int64_t;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("int64 overflow in addition");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("int64 overflow in multiplication");
  return r;
}

inline bool same_matrix(const IntMatrix& a, const IntMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         (a.array() == b.array()).all();
}

// Lexicographic order on equally sized matrices, row-major.
inline bool lex_less(const IntMatrix& a, const IntMatrix& b) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
  return false;
}

inline bool lex_less(const IntVector& a, const IntVector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return a(i) < b(i);
  return false;
}

// Exact determinant by fraction-free (Bareiss) elimination.  Intended for
// the small unimodular matrices that arise here; divisions are exact.
Int det_exact(IntMatrix m);

}  // namespace cominq
