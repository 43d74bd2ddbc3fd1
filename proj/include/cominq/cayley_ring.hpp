#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cominq/types.hpp"
#include "cominq/weyl.hpp"

namespace cominq {

// The quantum K-theory ring of the Cayley plane E6/P6 on its 27 Schubert
// class labels, backed by a parsed 351-row multiplication table over the
// unordered pairs of non-unit labels.  Coefficients are exact 64-bit
// integers with overflow checking.

// A Schubert class label O<codim> with an optional prime decoration.  The
// census: one label per codimension 0-3 and 13-16, two for 4-7 and 9-12,
// three for codimension 8; 27 labels in total.
struct ClassLabel {
  int codim = 0;    // 0..16
  int variant = 0;  // 0 plain, 1 prime, 2 double prime
  auto operator<=>(const ClassLabel&) const = default;
};

constexpr ClassLabel unit_label() { return ClassLabel{0, 0}; }

int variants_at_codim(int codim);  // 0 outside 0..16
bool valid_label(ClassLabel label);
const std::vector<ClassLabel>& all_labels();  // sorted by (codim, variant)
std::string to_string(ClassLabel label);      // e.g. "O8''"

struct QkTerm {
  int q_degree;
  ClassLabel label;
  Int coeff;
};

// Integer combination of q^d O_label with polynomial q support; zero
// coefficients are never stored.
class QkElement {
 public:
  QkElement() = default;
  static QkElement unit() { return basis(unit_label()); }
  static QkElement basis(ClassLabel label);
  static QkElement q_power(int d);

  void add_term(int q_degree, ClassLabel label, Int coeff);
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  int max_q_degree() const;  // -1 for the zero element
  Int coefficient(int q_degree, ClassLabel label) const;
  std::vector<QkTerm> terms() const;  // sorted by (q_degree, codim, variant)

  bool operator==(const QkElement&) const = default;

 private:
  std::map<std::pair<int, ClassLabel>, Int> terms_;
};

QkElement add(const QkElement& a, const QkElement& b);
QkElement negate(const QkElement& a);
QkElement scale(const QkElement& a, Int c);
inline QkElement operator+(const QkElement& a, const QkElement& b) {
  return add(a, b);
}
inline QkElement operator-(const QkElement& a, const QkElement& b) {
  return add(a, negate(b));
}

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(int line, int column, const std::string& what);
};

class MultTable {
 public:
  // Parses the table grammar:
  //   line  := label "*" label "=" expr        ('#' starts a comment)
  //   label := "O" INT ("'" | "''")?
  //   expr  := term ((" + " | " - ") term)*
  //   term  := [INT] [q | q^2] [label]         (at least one of the last two)
  // Requires exactly one row per unordered pair of the 26 non-unit labels.
  static MultTable parse(const std::string& text);
  static MultTable load(const std::string& path);

  static constexpr std::size_t kRowCount = 351;

  const QkElement& entry(ClassLabel a, ClassLabel b) const;

  struct Row {
    ClassLabel a, b;  // a >= b in label order
    const QkElement* product;
  };
  std::vector<Row> rows() const;  // canonical order

  // Copies with a single modification; used by the integrity spot checks.
  MultTable with_coefficient_bumped(std::size_t row_index,
                                    std::size_t term_index, Int delta) const;
  MultTable with_term(ClassLabel a, ClassLabel b, QkTerm term) const;

 private:
  MultTable() = default;
  std::vector<QkElement> entries_;  // triangular, 351 slots
};

// Bilinear, q-power-additive product; the unit label acts as the identity.
QkElement multiply(const MultTable& table, const QkElement& a,
                   const QkElement& b);

struct CheckResult {
  bool pass;
  std::string detail;
};

// (O_a * O_b) * O_c == O_a * (O_b * O_c) over all 27^3 ordered basis
// triples, exact integers; also asserts intermediate q-degrees stay <= 4.
CheckResult verify_associativity(const MultTable& table);

// Maximum q-degree over all rows equals 2 and is attained.
CheckResult verify_degree_bound(const MultTable& table);

// Anti-canonical degree of a line inferred from the square of the point
// class: (2*16 - codim(w)) / d for the top term q^d O_w of O_16 * O_16.
// Throws std::runtime_error when the division is not exact.
Int infer_index(const MultTable& table);

// For every term N q^d O_w of O_u * O_v, with index = infer_index:
//   offset := codim(w) + index*d - codim(u) - codim(v) >= 0,
//   sign(N) == (-1)^offset,
// and every row attains offset 0.
CheckResult verify_codim_sign(const MultTable& table);

// Label census as seen by the table storage.
CheckResult verify_census(const MultTable& table);

// Cross-links the appendix Weyl words with W^P(E6/P6): words are reduced
// minimal representatives of length 16 - codim, pairwise distinct, and the
// per-length census of W^P matches the label census.
CheckResult link_labels(const MultTable& table, const ParabolicQuotient& wp);

// The 19 explicitly worded classes (codimensions 4 through 12).
struct LabeledWord {
  ClassLabel label;
  std::vector<int> word;
};
const std::vector<LabeledWord>& cayley_class_words();

// Canonical serialization: terms ordered by (q_degree, codim, variant),
// coefficient 1 omitted, rows ordered by (first, second) label.
std::string serialize(const QkElement& x);
std::string serialize(const MultTable& table);
QkElement parse_expr(const std::string& text);

}  // namespace cominq
