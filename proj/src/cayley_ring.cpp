#include "cominq/cayley_ring.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cominq {

int variants_at_codim(int codim) {
  if (codim < 0 || codim > 16) return 0;
  if (codim == 8) return 3;
  if ((codim >= 4 && codim <= 7) || (codim >= 9 && codim <= 12)) return 2;
  return 1;
}

bool valid_label(ClassLabel label) {
  return label.variant >= 0 && label.variant < variants_at_codim(label.codim);
}

const std::vector<ClassLabel>& all_labels() {
  static const std::vector<ClassLabel> labels = [] {
    std::vector<ClassLabel> out;
    for (int c = 0; c <= 16; ++c)
      for (int v = 0; v < variants_at_codim(c); ++v) out.push_back({c, v});
    return out;
  }();
  return labels;
}

std::string to_string(ClassLabel label) {
  std::string s = "O" + std::to_string(label.codim);
  for (int i = 0; i < label.variant; ++i) s.push_back('\'');
  return s;
}

QkElement QkElement::basis(ClassLabel label) {
  QkElement x;
  x.add_term(0, label, 1);
  return x;
}

QkElement QkElement::q_power(int d) {
  QkElement x;
  x.add_term(d, unit_label(), 1);
  return x;
}

void QkElement::add_term(int q_degree, ClassLabel label, Int coeff) {
  if (q_degree < 0) throw std::invalid_argument("negative q degree");
  if (!valid_label(label))
    throw std::invalid_argument("invalid class label " + to_string(label));
  if (coeff == 0) return;
  auto key = std::make_pair(q_degree, label);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
  } else {
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
  }
}

int QkElement::max_q_degree() const {
  int m = -1;
  for (const auto& [key, coeff] : terms_) m = std::max(m, key.first);
  return m;
}

Int QkElement::coefficient(int q_degree, ClassLabel label) const {
  auto it = terms_.find(std::make_pair(q_degree, label));
  return it == terms_.end() ? 0 : it->second;
}

std::vector<QkTerm> QkElement::terms() const {
  std::vector<QkTerm> out;
  out.reserve(terms_.size());
  for (const auto& [key, coeff] : terms_)
    out.push_back({key.first, key.second, coeff});
  return out;
}

QkElement add(const QkElement& a, const QkElement& b) {
  QkElement out = a;
  for (const QkTerm& t : b.terms()) out.add_term(t.q_degree, t.label, t.coeff);
  return out;
}

QkElement negate(const QkElement& a) { return scale(a, -1); }

QkElement scale(const QkElement& a, Int c) {
  QkElement out;
  for (const QkTerm& t : a.terms())
    out.add_term(t.q_degree, t.label, checked_mul(t.coeff, c));
  return out;
}

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + what),
      line(line),
      column(column) {}

namespace {

// Non-unit labels are numbered 1..26 in (codim, variant) order; the unit is 0.
int label_index(ClassLabel label) {
  const auto& labels = all_labels();
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  return static_cast<int>(it - labels.begin());
}

// Flat slot for the unordered pair of non-unit labels.
std::size_t pair_slot(ClassLabel a, ClassLabel b) {
  int i = label_index(a), j = label_index(b);
  if (i < j) std::swap(i, j);
  return static_cast<std::size_t>(i) * (i - 1) / 2 + (j - 1);
}

// Line-scoped cursor with 1-based column reporting.
struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  int line;

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
  int column() const { return static_cast<int>(pos) + 1; }
  void skip_ws() {
    while (!done() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line, column(), msg);
  }
};

int parse_int(Cursor& c) {
  if (!std::isdigit(static_cast<unsigned char>(c.peek())))
    c.fail("expected a number");
  long value = 0;
  while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    value = value * 10 + (c.text[c.pos] - '0');
    if (value > 1'000'000) c.fail("number out of range");
    ++c.pos;
  }
  return static_cast<int>(value);
}

ClassLabel parse_label(Cursor& c) {
  int col = c.column();
  if (c.peek() != 'O') c.fail("expected a class label");
  ++c.pos;
  int codim = parse_int(c);
  int variant = 0;
  while (c.peek() == '\'') {
    ++variant;
    ++c.pos;
  }
  ClassLabel label{codim, variant};
  if (!valid_label(label))
    throw ParseError(c.line, col, "label " + to_string(label) +
                                      " is outside the 27-class census");
  return label;
}

// term := [INT] [q | q^2] [label], at least one of qpow/label present.
QkTerm parse_term(Cursor& c) {
  QkTerm term{0, unit_label(), 1};
  bool has_q = false, has_label = false;
  if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    term.coeff = parse_int(c);
    c.skip_ws();
  }
  if (c.peek() == 'q') {
    ++c.pos;
    has_q = true;
    term.q_degree = 1;
    if (c.peek() == '^') {
      ++c.pos;
      if (c.peek() != '2') c.fail("only q and q^2 are allowed");
      ++c.pos;
      term.q_degree = 2;
    }
    c.skip_ws();
  }
  if (c.peek() == 'O') {
    term.label = parse_label(c);
    has_label = true;
  }
  if (!has_q && !has_label)
    c.fail("term needs a q power or a class label");
  return term;
}

QkElement parse_expr_line(Cursor& c) {
  QkElement out;
  c.skip_ws();
  Int sign = 1;
  if (c.peek() == '-') {  // tolerated leading sign; the table never needs it
    sign = -1;
    ++c.pos;
    c.skip_ws();
  }
  while (true) {
    QkTerm term = parse_term(c);
    out.add_term(term.q_degree, term.label, checked_mul(sign, term.coeff));
    c.skip_ws();
    if (c.peek() == '+' || c.peek() == '-') {
      sign = c.peek() == '+' ? 1 : -1;
      ++c.pos;
      c.skip_ws();
    } else {
      break;
    }
  }
  return out;
}

std::string strip_comment(const std::string& raw) {
  auto hash = raw.find('#');
  std::string s = hash == std::string::npos ? raw : raw.substr(0, hash);
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
    s.pop_back();
  return s;
}

}  // namespace

MultTable MultTable::parse(const std::string& text) {
  MultTable table;
  table.entries_.assign(kRowCount, QkElement());
  std::vector<bool> filled(kRowCount, false);

  std::istringstream is(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(is, raw)) {
    ++line_no;
    std::string s = strip_comment(raw);
    if (s.empty()) continue;
    Cursor c{s, 0, line_no};
    c.skip_ws();
    ClassLabel a = parse_label(c);
    c.skip_ws();
    if (c.peek() != '*') c.fail("expected '*'");
    ++c.pos;
    c.skip_ws();
    ClassLabel b = parse_label(c);
    c.skip_ws();
    if (c.peek() != '=') c.fail("expected '='");
    ++c.pos;
    if (a == unit_label() || b == unit_label())
      throw ParseError(line_no, 1, "unit products are implicit");
    QkElement product = parse_expr_line(c);
    c.skip_ws();
    if (!c.done()) c.fail("trailing input after expression");

    std::size_t slot = pair_slot(a, b);
    if (filled[slot])
      throw ParseError(line_no, 1, "duplicate pair " + to_string(a) + " * " +
                                       to_string(b));
    filled[slot] = true;
    table.entries_[slot] = std::move(product);
  }

  for (std::size_t slot = 0; slot < kRowCount; ++slot)
    if (!filled[slot]) {
      for (const Row& row : table.rows())
        if (pair_slot(row.a, row.b) == slot)
          throw ParseError(line_no, 1, "missing pair " + to_string(row.a) +
                                           " * " + to_string(row.b));
    }
  return table;
}

MultTable MultTable::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open table file '" + path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse(buf.str());
}

const QkElement& MultTable::entry(ClassLabel a, ClassLabel b) const {
  if (!valid_label(a) || !valid_label(b) || a == unit_label() ||
      b == unit_label())
    throw std::invalid_argument("entry: needs two non-unit labels");
  return entries_[pair_slot(a, b)];
}

std::vector<MultTable::Row> MultTable::rows() const {
  std::vector<Row> out;
  out.reserve(kRowCount);
  const auto& labels = all_labels();
  for (int i = 1; i <= 26; ++i)
    for (int j = 1; j <= i; ++j)
      out.push_back(Row{labels[i], labels[j],
                        &entries_[pair_slot(labels[i], labels[j])]});
  return out;
}

MultTable MultTable::with_coefficient_bumped(std::size_t row_index,
                                             std::size_t term_index,
                                             Int delta) const {
  MultTable copy = *this;
  std::vector<Row> all = rows();
  const Row& row = all.at(row_index);
  std::vector<QkTerm> terms = row.product->terms();
  if (terms.empty())
    throw std::out_of_range("with_coefficient_bumped: empty product");
  const QkTerm& t = terms.at(term_index % terms.size());
  copy.entries_[pair_slot(row.a, row.b)].add_term(t.q_degree, t.label, delta);
  return copy;
}

MultTable MultTable::with_term(ClassLabel a, ClassLabel b, QkTerm term) const {
  MultTable copy = *this;
  copy.entries_[pair_slot(a, b)].add_term(term.q_degree, term.label,
                                          term.coeff);
  return copy;
}

QkElement multiply(const MultTable& table, const QkElement& a,
                   const QkElement& b) {
  QkElement out;
  for (const QkTerm& ta : a.terms()) {
    for (const QkTerm& tb : b.terms()) {
      Int coeff = checked_mul(ta.coeff, tb.coeff);
      int q = ta.q_degree + tb.q_degree;
      if (ta.label == unit_label()) {
        out.add_term(q, tb.label, coeff);
        continue;
      }
      if (tb.label == unit_label()) {
        out.add_term(q, ta.label, coeff);
        continue;
      }
      for (const QkTerm& tp : table.entry(ta.label, tb.label).terms())
        out.add_term(q + tp.q_degree, tp.label, checked_mul(coeff, tp.coeff));
    }
  }
  return out;
}

CheckResult verify_associativity(const MultTable& table) {
  const auto& labels = all_labels();
  const int n = static_cast<int>(labels.size());

  std::vector<QkElement> basis;
  basis.reserve(n);
  for (ClassLabel l : labels) basis.push_back(QkElement::basis(l));

  // pairwise products, reused across the triple sweep
  std::vector<std::vector<QkElement>> pair_product(n, std::vector<QkElement>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      pair_product[i][j] = multiply(table, basis[i], basis[j]);
      pair_product[j][i] = pair_product[i][j];
    }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        QkElement lhs = multiply(table, pair_product[a][b], basis[c]);
        QkElement rhs = multiply(table, basis[a], pair_product[b][c]);
        if (std::max(lhs.max_q_degree(), rhs.max_q_degree()) > 4)
          return {false, "q-degree above 4 in triple (" +
                             to_string(labels[a]) + ", " +
                             to_string(labels[b]) + ", " +
                             to_string(labels[c]) + ")"};
        if (!(lhs == rhs))
          return {false, "associativity fails at (" + to_string(labels[a]) +
                             ", " + to_string(labels[b]) + ", " +
                             to_string(labels[c]) + ")"};
      }
  return {true, "all 19683 ordered triples associate"};
}

CheckResult verify_degree_bound(const MultTable& table) {
  int max_q = -1;
  std::string witness;
  for (const MultTable::Row& row : table.rows()) {
    int q = row.product->max_q_degree();
    if (q > max_q) {
      max_q = q;
      witness = to_string(row.a) + " * " + to_string(row.b);
    }
  }
  if (max_q != 2)
    return {false,
            "maximum q-degree is " + std::to_string(max_q) + " (want 2)"};
  return {true, "maximum q-degree 2, attained by " + witness};
}

Int infer_index(const MultTable& table) {
  ClassLabel top{16, 0};
  const QkElement& square = table.entry(top, top);
  if (square.is_zero())
    throw std::runtime_error("infer_index: the point-class square is zero");
  QkTerm lead = square.terms().back();  // highest (q, codim, variant)
  if (lead.q_degree == 0)
    throw std::runtime_error("infer_index: no quantum term in the square");
  Int numerator = 2 * 16 - lead.label.codim;
  if (numerator % lead.q_degree != 0)
    throw std::runtime_error("infer_index: " + std::to_string(numerator) +
                             " is not divisible by q-degree " +
                             std::to_string(lead.q_degree));
  return numerator / lead.q_degree;
}

CheckResult verify_codim_sign(const MultTable& table) {
  Int index;
  try {
    index = infer_index(table);
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
  for (const MultTable::Row& row : table.rows()) {
    bool attained = false;
    for (const QkTerm& t : row.product->terms()) {
      Int offset =
          t.label.codim + index * t.q_degree - row.a.codim - row.b.codim;
      std::string where = to_string(row.a) + " * " + to_string(row.b) +
                          ", term q^" + std::to_string(t.q_degree) + " " +
                          to_string(t.label);
      if (offset < 0) return {false, "negative codimension offset at " + where};
      if (offset == 0) attained = true;
      bool negative = offset % 2 != 0;
      if ((t.coeff < 0) != negative)
        return {false, "sign violates (-1)^offset at " + where};
    }
    if (!row.product->is_zero() && !attained)
      return {false, "no leading (offset 0) term in " + to_string(row.a) +
                         " * " + to_string(row.b)};
  }
  return {true, "codimension/sign rule holds with index " +
                    std::to_string(index)};
}

CheckResult verify_census(const MultTable& table) {
  std::vector<int> counts(17, 0);
  for (ClassLabel l : all_labels()) ++counts[l.codim];
  for (int c = 0; c <= 16; ++c)
    if (counts[c] != variants_at_codim(c))
      return {false, "codimension " + std::to_string(c) + " census mismatch"};
  if (table.rows().size() != MultTable::kRowCount)
    return {false, "table does not have 351 rows"};
  return {true, "27 labels, 351 rows"};
}

const std::vector<LabeledWord>& cayley_class_words() {
  static const std::vector<LabeledWord> words = {
      {{4, 0}, {5, 4, 3, 1, 6, 5, 4, 2, 3, 4, 5, 6}},
      {{4, 1}, {2, 4, 3, 1, 6, 5, 4, 2, 3, 4, 5, 6}},
      {{5, 0}, {2, 4, 3, 1, 5, 4, 2, 3, 4, 5, 6}},
      {{5, 1}, {4, 3, 1, 6, 5, 4, 2, 3, 4, 5, 6}},
      {{6, 0}, {4, 3, 1, 5, 4, 2, 3, 4, 5, 6}},
      {{6, 1}, {3, 1, 6, 5, 4, 2, 3, 4, 5, 6}},
      {{7, 0}, {3, 1, 5, 4, 2, 3, 4, 5, 6}},
      {{7, 1}, {1, 6, 5, 4, 2, 3, 4, 5, 6}},
      {{8, 0}, {3, 1, 4, 2, 3, 4, 5, 6}},
      {{8, 1}, {1, 5, 4, 2, 3, 4, 5, 6}},
      {{8, 2}, {6, 5, 4, 2, 3, 4, 5, 6}},
      {{9, 0}, {1, 4, 2, 3, 4, 5, 6}},
      {{9, 1}, {5, 4, 2, 3, 4, 5, 6}},
      {{10, 0}, {1, 2, 3, 4, 5, 6}},
      {{10, 1}, {4, 2, 3, 4, 5, 6}},
      {{11, 0}, {1, 3, 4, 5, 6}},
      {{11, 1}, {2, 3, 4, 5, 6}},
      {{12, 0}, {2, 4, 5, 6}},
      {{12, 1}, {3, 4, 5, 6}},
  };
  return words;
}

CheckResult link_labels(const MultTable& table, const ParabolicQuotient& wp) {
  CheckResult census = verify_census(table);
  if (!census.pass) return census;
  if (wp.rs->datum.type != LieType::E6 || wp.node != 6 || wp.size() != 27)
    return {false, "quotient is not W^P(E6/P6)"};

  std::vector<int> seen_indices;
  for (const LabeledWord& lw : cayley_class_words()) {
    WeylElement u = WeylElement::from_word(*wp.rs, lw.word);
    std::string name = to_string(lw.label);
    if (u.length() != static_cast<int>(lw.word.size()))
      return {false, name + ": word is not reduced"};
    if (!is_minimal_rep(u, wp.node))
      return {false, name + ": not a minimal representative"};
    if (u.length() != 16 - lw.label.codim)
      return {false, name + ": length != 16 - codim"};
    int idx = wp.index_of(u);
    if (idx < 0) return {false, name + ": not in the weight orbit"};
    seen_indices.push_back(idx);
  }
  std::sort(seen_indices.begin(), seen_indices.end());
  if (std::adjacent_find(seen_indices.begin(), seen_indices.end()) !=
      seen_indices.end())
    return {false, "two labels map to the same coset"};

  for (int codim = 0; codim <= 16; ++codim) {
    int reps_of_length = 0;
    for (const WeylElement& rep : wp.reps)
      if (rep.length() == 16 - codim) ++reps_of_length;
    if (reps_of_length != variants_at_codim(codim))
      return {false, "length census mismatch at codimension " +
                         std::to_string(codim)};
  }
  return {true, "19 words linked; label and length censuses agree"};
}

namespace {

std::string render_term(const QkTerm& t, bool magnitude_only) {
  std::string out;
  Int coeff = magnitude_only ? (t.coeff < 0 ? -t.coeff : t.coeff) : t.coeff;
  bool unit = t.label == unit_label();
  bool coeff_alone = unit && t.q_degree == 0;
  if (coeff != 1 || coeff_alone) out += std::to_string(coeff);
  if (t.q_degree > 0) {
    if (!out.empty()) out += ' ';
    out += t.q_degree == 1 ? "q" : "q^" + std::to_string(t.q_degree);
  }
  if (!unit) {
    if (!out.empty()) out += ' ';
    out += to_string(t.label);
  } else if (coeff_alone && coeff == 1) {
    out = "O0";  // keep the unit representable inside the grammar
  }
  return out;
}

}  // namespace

std::string serialize(const QkElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const QkTerm& t : x.terms()) {
    if (first) {
      if (t.coeff < 0) out += "- ";
      out += render_term(t, true);
      first = false;
    } else {
      out += t.coeff < 0 ? " - " : " + ";
      out += render_term(t, true);
    }
  }
  return out;
}

std::string serialize(const MultTable& table) {
  std::string out;
  for (const MultTable::Row& row : table.rows()) {
    out += to_string(row.a) + " * " + to_string(row.b) + " = " +
           serialize(*row.product) + "\n";
  }
  return out;
}

QkElement parse_expr(const std::string& text) {
  std::string s = strip_comment(text);
  if (s == "0") return QkElement();
  Cursor c{s, 0, 1};
  QkElement out = parse_expr_line(c);
  c.skip_ws();
  if (!c.done()) c.fail("trailing input after expression");
  return out;
}

}  // namespace cominq
