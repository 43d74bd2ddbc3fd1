#include "cominq/structure_constants.hpp"

#include <algorithm>
#include <stdexcept>

namespace cominq {

int DegreeSequence::total() const {
  int t = 0;
  for (int e : entries) t += e;
  return t;
}

namespace {

// Compositions of m into positive parts, lexicographically descending.
void compositions_desc(int m, std::vector<int>& prefix,
                       std::vector<std::vector<int>>& out) {
  if (m == 0) {
    out.push_back(prefix);
    return;
  }
  for (int first = m; first >= 1; --first) {
    prefix.push_back(first);
    compositions_desc(m - first, prefix, out);
    prefix.pop_back();
  }
}

std::uint64_t splitmix(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

std::vector<DegreeSequence> enumerate_sequences(int d) {
  if (d < 0) throw std::invalid_argument("enumerate_sequences: d < 0");
  if (d > 20)
    throw std::invalid_argument(
        "enumerate_sequences: 2^d sequences is past the explicit range");
  std::vector<DegreeSequence> out;
  for (int d0 = d; d0 >= 0; --d0) {
    std::vector<std::vector<int>> tails;
    std::vector<int> prefix;
    compositions_desc(d - d0, prefix, tails);
    for (const auto& tail : tails) {
      DegreeSequence seq;
      seq.entries.push_back(d0);
      seq.entries.insert(seq.entries.end(), tail.begin(), tail.end());
      out.push_back(std::move(seq));
    }
  }
  return out;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int result = 1;
  for (int i = 1; i <= k; ++i) {
    // numerator grows first; the division is exact at every step
    result = checked_mul(result, n - k + i) / i;
  }
  return result;
}

Int count_sequences(int d, int d0, int length) {
  if (d < 1 || d0 < 0 || d0 > d || length < 1) return 0;
  if (d0 == d) return length == 1 ? 1 : 0;
  if (length < 2) return 0;
  return binomial(d - d0 - 1, length - 2);
}

Int alt_binomial_sum(int k) {
  if (k < 1) throw std::invalid_argument("alt_binomial_sum: k < 1");
  Int sum = 0;
  for (int r = 1; r <= k; ++r) {
    Int term = binomial(k - 1, r - 1);
    sum = checked_add(sum, r % 2 == 0 ? term : -term);
  }
  return sum;
}

Int cancellation_sum(int d, int dmax, const std::function<Int(int)>& c) {
  if (d < 1 || dmax < 0)
    throw std::invalid_argument("cancellation_sum: need d >= 1, dmax >= 0");
  Int sum = 0;
  for (const DegreeSequence& seq : enumerate_sequences(d)) {
    Int value = c(std::min(seq.entries.front(), dmax));
    sum = checked_add(sum, seq.sign() > 0 ? value : -value);
  }
  return sum;
}

GwTables GwTables::random(int basis_size, int max_degree, std::uint64_t seed,
                          Int lo, Int hi) {
  if (basis_size < 1 || max_degree < 0 || lo > hi)
    throw std::invalid_argument("GwTables::random: bad parameters");
  GwTables t;
  t.basis_size = basis_size;
  t.max_degree = max_degree;
  std::uint64_t state = seed;
  auto draw = [&]() {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<Int>(splitmix(state) % span);
  };
  t.three_point.resize(max_degree + 1);
  for (int d = 0; d <= max_degree; ++d) {
    t.three_point[d].resize(basis_size);
    for (int u = 0; u < basis_size; ++u) {
      IntMatrix m(basis_size, basis_size);
      for (int i = 0; i < basis_size; ++i)
        for (int j = 0; j < basis_size; ++j) m(i, j) = draw();
      t.three_point[d][u] = std::move(m);
    }
  }
  for (int d = 1; d <= max_degree; ++d) {
    IntMatrix m(basis_size, basis_size);
    for (int i = 0; i < basis_size; ++i)
      for (int j = 0; j < basis_size; ++j) m(i, j) = draw();
    t.two_point.push_back(std::move(m));
  }
  t.check_assembly_bound();
  return t;
}

void GwTables::check_assembly_bound() const {
  // Worst partial product: maxA * (n * maxT)^max_degree, times 2^max_degree
  // sequences accumulated.  All growth goes through checked arithmetic, so
  // an unrepresentable bound throws here rather than wrapping later.
  Int max_a = 1, max_t = 1;
  for (const auto& per_u : three_point)
    for (const IntMatrix& m : per_u)
      max_a = std::max(max_a, m.cwiseAbs().maxCoeff());
  for (const IntMatrix& m : two_point)
    max_t = std::max(max_t, m.cwiseAbs().maxCoeff());
  Int bound = max_a;
  for (int i = 0; i < max_degree; ++i)
    bound = checked_mul(bound, checked_mul(static_cast<Int>(basis_size), max_t));
  for (int i = 0; i < max_degree + 1; ++i) bound = checked_mul(bound, 2);
}

namespace {

void require_degree(const GwTables& t, int d) {
  if (d < 0 || d > t.max_degree)
    throw std::out_of_range("degree exceeds table range");
}

void require_index(const GwTables& t, int i) {
  if (i < 0 || i >= t.basis_size)
    throw std::out_of_range("basis index out of range");
}

}  // namespace

ConstantReport assemble_direct(const GwTables& t, int u, int v, int w, int d) {
  require_degree(t, d);
  require_index(t, u);
  require_index(t, v);
  require_index(t, w);
  t.check_assembly_bound();

  ConstantReport report{u, v, w, d, 0, {}};
  for (const DegreeSequence& seq : enumerate_sequences(d)) {
    for (int e : seq.entries) require_degree(t, e);
    const int r = seq.r();
    const int n = t.basis_size;
    Int term = 0;
    // sum over all (kappa_1,...,kappa_r) in basis^r with kappa_{r+1} = w
    std::vector<int> kappa(r, 0);
    while (true) {
      Int prod = t.three_point[seq.entries[0]][u](v, r > 0 ? kappa[0] : w);
      for (int i = 1; i <= r; ++i) {
        int next = i < r ? kappa[i] : w;
        prod = prod * t.two_point[seq.entries[i] - 1](kappa[i - 1], next);
      }
      term += prod;
      int pos = r - 1;
      while (pos >= 0 && kappa[pos] == n - 1) kappa[pos--] = 0;
      if (pos < 0) break;
      ++kappa[pos];
    }
    report.value = checked_add(report.value, seq.sign() > 0 ? term : -term);
    report.breakdown.push_back({seq, seq.sign(), term});
  }
  return report;
}

Int chain_euler(const GwTables& t, const DegreeSequence& bd, int u, int v,
                int w) {
  require_index(t, u);
  require_index(t, v);
  require_index(t, w);
  if (bd.entries.empty())
    throw std::invalid_argument("chain_euler: empty sequence");
  for (int e : bd.entries) require_degree(t, e);
  t.check_assembly_bound();

  Eigen::Matrix<Int, 1, Eigen::Dynamic> row =
      t.three_point[bd.entries[0]][u].row(v);
  for (std::size_t i = 1; i < bd.entries.size(); ++i)
    row = row * t.two_point[bd.entries[i] - 1];
  return row(w);
}

Int assemble_matrix(const GwTables& t, int u, int v, int w, int d) {
  require_degree(t, d);
  Int sum = 0;
  for (const DegreeSequence& seq : enumerate_sequences(d)) {
    Int term = chain_euler(t, seq, u, v, w);
    sum = checked_add(sum, seq.sign() > 0 ? term : -term);
  }
  return sum;
}

std::string to_json(const ConstantReport& report) {
  std::string out = "{\"u\":" + std::to_string(report.u) +
                    ",\"v\":" + std::to_string(report.v) +
                    ",\"w\":" + std::to_string(report.w) +
                    ",\"d\":" + std::to_string(report.d) + ",\"terms\":[";
  for (std::size_t k = 0; k < report.breakdown.size(); ++k) {
    const SequenceTerm& st = report.breakdown[k];
    if (k) out += ',';
    out += "{\"sequence\":[";
    for (std::size_t i = 0; i < st.sequence.entries.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(st.sequence.entries[i]);
    }
    out += "],\"sign\":" + std::to_string(st.sign) +
           ",\"term\":" + std::to_string(st.term) + "}";
  }
  out += "],\"total\":" + std::to_string(report.value) + "}";
  return out;
}

}  // namespace cominq
