#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cominq/root_system.hpp"

namespace cominq {

// Weyl group elements and the parabolic quotient W^P.
//
// An element is stored as its action on the root lattice in simple-root
// coordinates, together with the inverse action and the cached length
// (number of positive roots sent to negative roots).
//
// Words are read left to right as products: the word (i_1,...,i_k) denotes
// s_{i_1} s_{i_2} ... s_{i_k}, whose matrix is S_{i_1} * ... * S_{i_k}.
// Under this reading every reduced word of a non-identity minimal coset
// representative ends with the cominuscule node.
class WeylElement {
 public:
  static WeylElement identity(const RootSystem& rs);
  static WeylElement simple_reflection(const RootSystem& rs, int i);
  static WeylElement from_word(const RootSystem& rs,
                               const std::vector<int>& word);

  const RootSystem& root_system() const { return *rs_; }
  const IntMatrix& action() const { return action_; }
  const IntMatrix& inverse_action() const { return inverse_; }
  int length() const { return length_; }
  bool is_identity() const { return length_ == 0; }

  IntVector apply(const IntVector& root_coords) const {
    return action_ * root_coords;
  }

  WeylElement inverse() const;

  // l(u s_i) < l(u), i.e. u(alpha_i) is a negative root.
  bool right_descent(int i) const;
  // l(s_i u) < l(u), i.e. u^{-1}(alpha_i) is a negative root.
  bool left_descent(int i) const;
  std::vector<int> right_descents() const;
  std::vector<int> left_descents() const;

  bool operator==(const WeylElement& o) const {
    return same_matrix(action_, o.action_);
  }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }

  friend WeylElement multiply(const WeylElement& a, const WeylElement& b);

 private:
  WeylElement(const RootSystem* rs, IntMatrix action, IntMatrix inverse);

  const RootSystem* rs_;
  IntMatrix action_;
  IntMatrix inverse_;
  int length_;
};

// Matrix product; throws std::invalid_argument on mismatched root systems.
WeylElement multiply(const WeylElement& a, const WeylElement& b);
inline WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  return multiply(a, b);
}

// Canonical reduced word: repeatedly extract the smallest left-descent index,
// building the word left to right.  Reproduces the word conventions used for
// the named E6/E7 representatives in this library's data.
std::vector<int> reduced_word(const WeylElement& u);

struct WordEnumeration {
  std::vector<std::vector<int>> words;
  bool exhaustive;
};

// Depth-first enumeration of reduced words (lexicographic order), stopping
// after cap words.  exhaustive is false when the cap cut the search off.
WordEnumeration all_reduced_words(const WeylElement& u, std::size_t cap);

// One reduced word sampled by a random descent walk (xorshift state).
std::vector<int> random_reduced_word(const WeylElement& u,
                                     std::uint64_t& state);

// Longest element of the standard parabolic subgroup generated by
// { s_i : i in subset }; the empty subset gives the identity.
WeylElement longest_element(const RootSystem& rs,
                            const std::vector<int>& subset);

// Membership test for W^P: u(alpha_i) positive for every i != node.
bool is_minimal_rep(const WeylElement& u, int node);

// The unique shortest element of the coset u W_P, computed by repeatedly
// stripping right descents at indices other than node.
WeylElement min_rep(WeylElement u, int node);

// Bruhat order via the lifting-property recursion.
bool bruhat_leq(const WeylElement& v, const WeylElement& u);

// Word serialization: comma-separated indices; "e" denotes the empty word.
std::string format_word(const std::vector<int>& word);
std::vector<int> parse_word(const std::string& text, int rank);

// Fundamental-weight coordinates: e_i, and the image of a weight under u.
IntVector fundamental_weight(const RootSystem& rs, int i);
IntVector weight_image(const RootSystem& rs, const WeylElement& u,
                       const IntVector& fw_weight);

// The poset W^P of minimal coset representatives for a cominuscule node,
// enumerated by breadth-first search on the orbit of the node's fundamental
// weight.  (For a cominuscule node W_P is the full stabilizer of the weight,
// so orbit points are in bijection with cosets; this never materializes W.)
struct ParabolicQuotient {
  const RootSystem* rs;
  int node;
  std::vector<WeylElement> reps;      // sorted by (length, weight), identity first
  std::vector<IntVector> weights;     // image of the fundamental weight, per rep
  WeylElement w_p;                    // longest element of W_P
  std::vector<std::vector<bool>> bruhat;  // bruhat[i][j]: reps[i] <= reps[j]

  std::size_t size() const { return reps.size(); }
  const WeylElement& identity_rep() const { return reps.front(); }
  const WeylElement& u_max() const { return reps.back(); }
  bool leq(std::size_t i, std::size_t j) const { return bruhat[i][j]; }

  // Index of a representative, located by its weight-orbit point; -1 when
  // the element is not a representative.
  int index_of(const WeylElement& u) const;
  int index_of_weight(const IntVector& w) const;
};

// Throws std::invalid_argument when node is not cominuscule.
ParabolicQuotient enumerate_wp(const RootSystem& rs, int node);

}  // namespace cominq
