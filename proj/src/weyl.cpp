#include "cominq/weyl.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cominq {

namespace {

bool negative_root(const IntVector& v) { return (v.array() <= 0).all(); }

int inversion_count(const RootSystem& rs, const IntMatrix& action) {
  int count = 0;
  for (const IntVector& beta : rs.positive_roots)
    if (negative_root(action * beta)) ++count;
  return count;
}

// Left multiplication by s_i as a rank-1 update: S_i = I - e_i c_i^T with
// c_i the i-th Cartan row, so S_i M changes only row i of M, and M S_i is an
// outer-product update of M.  The word and Bruhat loops run on raw matrix
// pairs with incrementally tracked lengths, avoiding an inversion count at
// every step.
void left_reflect_update(const RootSystem& rs, int i, IntMatrix& action,
                         IntMatrix& inverse) {
  const IntMatrix& c = rs.datum.cartan;
  Eigen::Matrix<Int, 1, Eigen::Dynamic> row = c.row(i - 1) * action;
  action.row(i - 1) -= row;
  IntVector col = inverse.col(i - 1);
  inverse -= col * c.row(i - 1);
}

bool col_nonpositive(const IntMatrix& m, int i) {
  return (m.col(i - 1).array() <= 0).all();
}

}  // namespace

WeylElement::WeylElement(const RootSystem* rs, IntMatrix action,
                         IntMatrix inverse)
    : rs_(rs), action_(std::move(action)), inverse_(std::move(inverse)) {
  length_ = inversion_count(*rs_, action_);
}

WeylElement WeylElement::identity(const RootSystem& rs) {
  IntMatrix id = IntMatrix::Identity(rs.rank(), rs.rank());
  return WeylElement(&rs, id, id);
}

WeylElement WeylElement::simple_reflection(const RootSystem& rs, int i) {
  IntMatrix s = reflection_matrix(rs, i);
  return WeylElement(&rs, s, s);
}

WeylElement WeylElement::from_word(const RootSystem& rs,
                                   const std::vector<int>& word) {
  IntMatrix m = IntMatrix::Identity(rs.rank(), rs.rank());
  IntMatrix inv = m;
  for (int i : word) {
    IntMatrix s = reflection_matrix(rs, i);
    m = m * s;
    inv = s * inv;
  }
  return WeylElement(&rs, std::move(m), std::move(inv));
}

WeylElement WeylElement::inverse() const {
  return WeylElement(rs_, inverse_, action_);
}

bool WeylElement::right_descent(int i) const {
  // u(alpha_i) is the i-th column of the action matrix
  return (action_.col(i - 1).array() <= 0).all();
}

bool WeylElement::left_descent(int i) const {
  return (inverse_.col(i - 1).array() <= 0).all();
}

std::vector<int> WeylElement::right_descents() const {
  std::vector<int> out;
  for (int i = 1; i <= rs_->rank(); ++i)
    if (right_descent(i)) out.push_back(i);
  return out;
}

std::vector<int> WeylElement::left_descents() const {
  std::vector<int> out;
  for (int i = 1; i <= rs_->rank(); ++i)
    if (left_descent(i)) out.push_back(i);
  return out;
}

WeylElement multiply(const WeylElement& a, const WeylElement& b) {
  if (!same_datum(*a.rs_, *b.rs_))
    throw std::invalid_argument("multiply: mismatched root systems");
  return WeylElement(a.rs_, a.action_ * b.action_, b.inverse_ * a.inverse_);
}

std::vector<int> reduced_word(const WeylElement& u) {
  const RootSystem& rs = u.root_system();
  std::vector<int> word;
  IntMatrix action = u.action(), inverse = u.inverse_action();
  for (int remaining = u.length(); remaining > 0; --remaining) {
    int i = 1;
    while (!col_nonpositive(inverse, i)) ++i;
    word.push_back(i);
    left_reflect_update(rs, i, action, inverse);
  }
  return word;
}

namespace {

void words_dfs(const RootSystem& rs, const IntMatrix& action,
               const IntMatrix& inverse, int remaining,
               std::vector<int>& prefix, std::vector<std::vector<int>>& out,
               std::size_t cap, bool& truncated) {
  if (out.size() >= cap) {
    truncated = true;
    return;
  }
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int i = 1; i <= rs.rank(); ++i) {
    if (!col_nonpositive(inverse, i)) continue;  // not a left descent
    IntMatrix a = action, b = inverse;
    left_reflect_update(rs, i, a, b);
    prefix.push_back(i);
    words_dfs(rs, a, b, remaining - 1, prefix, out, cap, truncated);
    prefix.pop_back();
    if (truncated && out.size() >= cap) return;
  }
}

std::uint64_t xorshift(std::uint64_t& s) {
  s ^= s << 13;
  s ^= s >> 7;
  s ^= s << 17;
  return s;
}

}  // namespace

WordEnumeration all_reduced_words(const WeylElement& u, std::size_t cap) {
  if (cap < 1) throw std::invalid_argument("all_reduced_words: cap must be >= 1");
  WordEnumeration res;
  res.exhaustive = true;
  std::vector<int> prefix;
  bool truncated = false;
  words_dfs(u.root_system(), u.action(), u.inverse_action(), u.length(),
            prefix, res.words, cap, truncated);
  res.exhaustive = !truncated;
  return res;
}

std::vector<int> random_reduced_word(const WeylElement& u,
                                     std::uint64_t& state) {
  const RootSystem& rs = u.root_system();
  std::vector<int> word;
  IntMatrix action = u.action(), inverse = u.inverse_action();
  int remaining = u.length();
  std::vector<int> descents;
  while (remaining > 0) {
    descents.clear();
    for (int i = 1; i <= rs.rank(); ++i)
      if (col_nonpositive(inverse, i)) descents.push_back(i);
    int i = descents[xorshift(state) % descents.size()];
    word.push_back(i);
    left_reflect_update(rs, i, action, inverse);
    --remaining;
  }
  return word;
}

WeylElement longest_element(const RootSystem& rs,
                            const std::vector<int>& subset) {
  WeylElement w = WeylElement::identity(rs);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i : subset) {
      if (!w.right_descent(i)) {
        w = w * WeylElement::simple_reflection(rs, i);
        grew = true;
      }
    }
  }
  return w;
}

bool is_minimal_rep(const WeylElement& u, int node) {
  for (int i = 1; i <= u.root_system().rank(); ++i)
    if (i != node && u.right_descent(i)) return false;
  return true;
}

WeylElement min_rep(WeylElement u, int node) {
  const RootSystem& rs = u.root_system();
  bool reduced = true;
  while (reduced) {
    reduced = false;
    for (int i = 1; i <= rs.rank(); ++i) {
      if (i != node && u.right_descent(i)) {
        u = u * WeylElement::simple_reflection(rs, i);
        reduced = true;
      }
    }
  }
  return u;
}

bool bruhat_leq(const WeylElement& v0, const WeylElement& u0) {
  if (!same_datum(v0.root_system(), u0.root_system()))
    throw std::invalid_argument("bruhat_leq: mismatched root systems");
  const RootSystem& rs = v0.root_system();
  IntMatrix va = v0.action(), vi = v0.inverse_action();
  IntMatrix ua = u0.action(), ui = u0.inverse_action();
  int vlen = v0.length(), ulen = u0.length();
  // Lifting property: for a left descent s of u,
  //   v <= u  iff  (sv <= su when l(sv) < l(v), else v <= su).
  while (true) {
    if (vlen > ulen) return false;
    if (vlen == 0) return true;
    int i = 1;
    while (!col_nonpositive(ui, i)) ++i;
    if (col_nonpositive(vi, i)) {
      left_reflect_update(rs, i, va, vi);
      --vlen;
    }
    left_reflect_update(rs, i, ua, ui);
    --ulen;
  }
}

std::string format_word(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::ostringstream os;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) os << ',';
    os << word[k];
  }
  return os.str();
}

std::vector<int> parse_word(const std::string& text, int rank) {
  std::vector<int> word;
  if (text.empty() || text == "e") return word;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    std::size_t pos = 0;
    int v;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad word letter '" + tok + "'");
    }
    if (pos != tok.size() || v < 1 || v > rank)
      throw std::invalid_argument("bad word letter '" + tok + "'");
    word.push_back(v);
  }
  return word;
}

IntVector fundamental_weight(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank())
    throw std::out_of_range("fundamental weight index out of range");
  IntVector w = IntVector::Zero(rs.rank());
  w(i - 1) = 1;
  return w;
}

IntVector weight_image(const RootSystem& rs, const WeylElement& u,
                       const IntVector& fw_weight) {
  // In fundamental-weight coordinates s_i acts by
  //   lambda  ->  lambda - lambda_i * (column i of the Cartan matrix),
  // since alpha_i = sum_j cartan(j, i) omega_j.  Apply the canonical word of
  // u from the right.
  std::vector<int> word = reduced_word(u);
  IntVector lam = fw_weight;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int i = *it - 1;
    lam -= lam(i) * rs.datum.cartan.col(i);
  }
  return lam;
}

int ParabolicQuotient::index_of(const WeylElement& u) const {
  if (!is_minimal_rep(u, node)) return -1;
  return index_of_weight(weight_image(*rs, u, fundamental_weight(*rs, node)));
}

int ParabolicQuotient::index_of_weight(const IntVector& w) const {
  for (std::size_t k = 0; k < weights.size(); ++k)
    if ((weights[k].array() == w.array()).all()) return static_cast<int>(k);
  return -1;
}

ParabolicQuotient enumerate_wp(const RootSystem& rs, int node) {
  std::vector<int> comin = cominuscule_nodes(rs);
  if (std::find(comin.begin(), comin.end(), node) == comin.end())
    throw std::invalid_argument("node " + std::to_string(node) +
                                " is not cominuscule in " +
                                to_string(rs.datum.type) + "_" +
                                std::to_string(rs.rank()));

  const IntMatrix& c = rs.datum.cartan;
  struct Entry {
    WeylElement elem;
    IntVector weight;
    int depth;
  };
  std::vector<Entry> orbit;
  std::map<std::vector<Int>, std::size_t> seen;
  auto key = [&](const IntVector& v) {
    return std::vector<Int>(v.data(), v.data() + v.size());
  };

  IntVector omega = fundamental_weight(rs, node);
  orbit.push_back({WeylElement::identity(rs), omega, 0});
  seen.emplace(key(omega), 0);

  std::vector<std::size_t> frontier{0};
  int depth = 0;
  while (!frontier.empty()) {
    ++depth;
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      for (int i = 1; i <= rs.rank(); ++i) {
        IntVector lam = orbit[idx].weight;
        if (lam(i - 1) == 0) continue;  // weight fixed by s_i
        lam -= lam(i - 1) * c.col(i - 1);
        if (seen.count(key(lam))) continue;
        WeylElement e =
            WeylElement::simple_reflection(rs, i) * orbit[idx].elem;
        if (e.length() != depth)
          throw std::logic_error("weight-orbit BFS depth mismatch");
        seen.emplace(key(lam), orbit.size());
        next.push_back(orbit.size());
        orbit.push_back({std::move(e), std::move(lam), depth});
      }
    }
    frontier = std::move(next);
  }

  std::sort(orbit.begin(), orbit.end(), [](const Entry& a, const Entry& b) {
    if (a.depth != b.depth) return a.depth < b.depth;
    return lex_less(a.weight, b.weight);
  });

  std::vector<int> complement;
  for (int i = 1; i <= rs.rank(); ++i)
    if (i != node) complement.push_back(i);

  std::vector<WeylElement> reps;
  std::vector<IntVector> weights;
  reps.reserve(orbit.size());
  for (Entry& e : orbit) {
    reps.push_back(std::move(e.elem));
    weights.push_back(std::move(e.weight));
  }
  if (reps.size() >= 2 &&
      reps[reps.size() - 2].length() == reps.back().length())
    throw std::logic_error("longest representative is not unique");

  ParabolicQuotient pq{&rs,
                       node,
                       std::move(reps),
                       std::move(weights),
                       longest_element(rs, complement),
                       {}};

  const std::size_t n = pq.reps.size();
  pq.bruhat.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (pq.reps[i].length() <= pq.reps[j].length())
        pq.bruhat[i][j] = bruhat_leq(pq.reps[i], pq.reps[j]);
  return pq;
}

}  // namespace cominq
