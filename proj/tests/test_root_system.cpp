#include <doctest.h>

#include "cominq/root_system.hpp"

using namespace cominq;

namespace {

IntVector coords(std::initializer_list<Int> xs) {
  IntVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (Int x : xs) v(i++) = x;
  return v;
}

std::uint64_t xorshift(std::uint64_t& s) {
  s ^= s << 13;
  s ^= s >> 7;
  s ^= s << 17;
  return s;
}

}  // namespace

TEST_CASE("positive root counts match the classical values") {
  CHECK(build_root_system(LieType::A, 3).positive_roots.size() == 6);
  CHECK(build_root_system(LieType::A, 7).positive_roots.size() == 28);
  CHECK(build_root_system(LieType::B, 4).positive_roots.size() == 16);
  CHECK(build_root_system(LieType::C, 3).positive_roots.size() == 9);
  CHECK(build_root_system(LieType::D, 4).positive_roots.size() == 12);
  CHECK(build_root_system(LieType::D, 6).positive_roots.size() == 30);
  CHECK(build_root_system(LieType::E6, 6).positive_roots.size() == 36);
  CHECK(build_root_system(LieType::E7, 7).positive_roots.size() == 63);
}

TEST_CASE("highest roots") {
  CHECK(build_root_system(LieType::C, 3).highest_root == coords({2, 2, 1}));
  CHECK(build_root_system(LieType::A, 4).highest_root ==
        coords({1, 1, 1, 1}));
  CHECK(build_root_system(LieType::B, 3).highest_root == coords({1, 2, 2}));
  CHECK(build_root_system(LieType::D, 4).highest_root == coords({1, 2, 1, 1}));
  CHECK(build_root_system(LieType::E6, 6).highest_root ==
        coords({1, 2, 2, 3, 2, 1}));
  CHECK(build_root_system(LieType::E7, 7).highest_root ==
        coords({2, 2, 3, 4, 3, 2, 1}));
}

TEST_CASE("cominuscule nodes agree with the highest-root computation") {
  CHECK(cominuscule_nodes(build_root_system(LieType::A, 3)) ==
        std::vector<int>{1, 2, 3});
  CHECK(cominuscule_nodes(build_root_system(LieType::B, 4)) ==
        std::vector<int>{1});
  CHECK(cominuscule_nodes(build_root_system(LieType::C, 3)) ==
        std::vector<int>{3});
  CHECK(cominuscule_nodes(build_root_system(LieType::D, 5)) ==
        std::vector<int>{1, 4, 5});
  CHECK(cominuscule_nodes(build_root_system(LieType::E6, 6)) ==
        std::vector<int>{1, 6});
  CHECK(cominuscule_nodes(build_root_system(LieType::E7, 7)) ==
        std::vector<int>{7});
}

TEST_CASE("unsupported type/rank pairs are rejected") {
  CHECK_THROWS_AS(build_root_system(LieType::A, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(LieType::B, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(LieType::D, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(LieType::E6, 5), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(LieType::E7, 8), std::invalid_argument);
}

TEST_CASE("simple reflections on A_2") {
  RootSystem rs = build_root_system(LieType::A, 2);
  CHECK(reflect(rs, 1, coords({1, 0})) == coords({-1, 0}));
  CHECK(reflect(rs, 1, coords({0, 1})) == coords({1, 1}));
  CHECK_THROWS_AS(reflect(rs, 3, coords({1, 0})), std::out_of_range);
}

TEST_CASE("reflections are involutive lattice maps of determinant -1") {
  for (LieType type : {LieType::B, LieType::E6}) {
    RootSystem rs = build_root_system(type, type == LieType::B ? 3 : 6);
    std::uint64_t state = 12345;
    for (int i = 1; i <= rs.rank(); ++i) {
      IntMatrix s = reflection_matrix(rs, i);
      CHECK(det_exact(s) == -1);
      for (int trial = 0; trial < 100; ++trial) {
        IntVector v(rs.rank());
        for (int k = 0; k < rs.rank(); ++k)
          v(k) = static_cast<Int>(xorshift(state) % 21) - 10;
        CHECK(reflect(rs, i, reflect(rs, i, v)) == v);
        // vectors with <v, alpha_i^vee> = 0 lie on the fixed hyperplane
        if (rs.datum.cartan.row(i - 1).dot(v) == 0)
          CHECK(reflect(rs, i, v) == v);
      }
    }
  }
}

TEST_CASE("reflections fix their coroot hyperplane") {
  RootSystem rs = build_root_system(LieType::C, 3);
  for (int i = 1; i <= 3; ++i) {
    // a basis of the hyperplane: alpha_j - <alpha_j, alpha_i^vee>/2 * alpha_i
    // is awkward over Z, so test doubled vectors 2 alpha_j + c alpha_i
    for (int j = 1; j <= 3; ++j) {
      if (j == i) continue;
      IntVector v = IntVector::Zero(3);
      v(j - 1) = 2;
      v(i - 1) = -rs.datum.cartan(i - 1, j - 1);
      CHECK(rs.datum.cartan.row(i - 1).dot(v) == 0);
      CHECK(reflect(rs, i, v) == v);
    }
  }
}

TEST_CASE("the root set is reflection-stable and negation-free") {
  for (auto [type, rank] : std::vector<std::pair<LieType, int>>{
           {LieType::A, 4}, {LieType::B, 3}, {LieType::C, 4},
           {LieType::D, 5}, {LieType::E6, 6}, {LieType::E7, 7}}) {
    RootSystem rs = build_root_system(type, rank);
    for (const IntVector& beta : rs.positive_roots) {
      CHECK_FALSE(rs.is_positive_root(-beta));
      CHECK(rs.is_root(-beta));
      for (int i = 1; i <= rs.rank(); ++i) {
        CHECK(rs.is_root(reflect(rs, i, beta)));
        CHECK(rs.is_root(reflect(rs, i, IntVector(-beta))));
      }
    }
    for (const IntVector& beta : rs.positive_roots)
      CHECK((beta.array() <= rs.highest_root.array()).all());
  }
}

TEST_CASE("Cartan matrices have the right shape") {
  for (auto [type, rank] : std::vector<std::pair<LieType, int>>{
           {LieType::A, 5}, {LieType::B, 4}, {LieType::C, 4},
           {LieType::D, 4}, {LieType::E6, 6}, {LieType::E7, 7}}) {
    IntMatrix c = cartan_matrix(type, rank);
    for (int i = 0; i < rank; ++i) {
      CHECK(c(i, i) == 2);
      for (int j = 0; j < rank; ++j)
        if (i != j) CHECK(c(i, j) <= 0);
    }
  }
  // the B/C pair differ by transposition at the short/long end
  CHECK(cartan_matrix(LieType::B, 3)(2, 1) == -2);
  CHECK(cartan_matrix(LieType::C, 3)(1, 2) == -2);
}
