#include "metice/patterns.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace metice {

namespace {

bool strictly_decreasing(const std::vector<int>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::less_equal<>()) == v.end();
}

// `row` interleaves `above` when above[t] ≥ row[t] ≥ above[t+1].
bool interleaves_row(const std::vector<int>& above, const std::vector<int>& row) {
  if (row.size() + 1 != above.size()) return false;
  for (std::size_t t = 0; t < row.size(); ++t)
    if (row[t] > above[t] || row[t] < above[t + 1]) return false;
  return true;
}

int b_stat(const std::vector<int>& above, const std::vector<int>& row, std::size_t t) {
  int b = 0;
  for (std::size_t s = t; s < row.size(); ++s) b += row[s] - above[s + 1];
  return b;
}

int c_stat(const std::vector<int>& above, const std::vector<int>& row, std::size_t t) {
  int c = 0;
  for (std::size_t s = 0; s <= t; ++s) c += above[s] - row[s];
  return c;
}

// γ: left-up equality gives g(b), right-up gives 1, otherwise h(b).
Coefficient gamma_row(const std::vector<int>& above, const std::vector<int>& row, const WeightRing& ring) {
  Coefficient w = ring.one();
  for (std::size_t t = 0; t < row.size(); ++t) {
    if (row[t] == above[t])
      w *= ring.g(b_stat(above, row, t));
    else if (row[t] != above[t + 1])
      w *= ring.h(b_stat(above, row, t));
  }
  return w;
}

// δ: right-up equality gives g(c), left-up gives 1, otherwise h(c).
Coefficient delta_row(const std::vector<int>& above, const std::vector<int>& row, const WeightRing& ring) {
  Coefficient w = ring.one();
  for (std::size_t t = 0; t < row.size(); ++t) {
    if (row[t] == above[t + 1])
      w *= ring.g(c_stat(above, row, t));
    else if (row[t] != above[t])
      w *= ring.h(c_stat(above, row, t));
  }
  return w;
}

int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

}  // namespace

int GTPattern::row_sum(int i) const { return sum(rows.at(i)); }

bool GTPattern::interleaves() const {
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (!interleaves_row(rows[i - 1], rows[i])) return false;
  return !rows.empty();
}

bool GTPattern::strict() const { return std::all_of(rows.begin(), rows.end(), strictly_decreasing); }

GTPattern state_to_pattern(const IceState& s) {
  GTPattern T;
  const auto& layers = s.layers();
  for (std::size_t k = 0; k + 1 < layers.size(); ++k) T.rows.push_back(layers[k].columns());
  return T;
}

IceState pattern_to_state(const GTPattern& T, const Boundary& b) {
  if (T.rank() != b.r || T.rows[0] != b.top_row) throw std::invalid_argument("pattern top row is not λ+ρ");
  if (!T.interleaves()) throw std::invalid_argument("pattern rows do not interleave");
  if (!T.strict()) throw std::invalid_argument("pattern is not strict");
  std::vector<ColumnSet> layers;
  for (const auto& row : T.rows) layers.push_back(ColumnSet::from_columns(row));
  layers.emplace_back();
  auto s = horizontal_fill(b, layers);
  if (!s) throw std::logic_error("strict pattern without an admissible state");
  return *s;
}

std::vector<GTPattern> strict_patterns(const std::vector<int>& top) {
  std::vector<GTPattern> out;
  GTPattern T;
  T.rows.push_back(top);
  std::function<void()> rec = [&]() {
    if (T.rows.back().size() == 1) {
      out.push_back(T);
      return;
    }
    for (const auto& next : strict_branches(T.rows.back())) {
      T.rows.push_back(next);
      rec();
      T.rows.pop_back();
    }
  };
  if (strictly_decreasing(top) && !top.empty()) rec();
  return out;
}

std::vector<int> gamma_b(const GTPattern& T) {
  std::vector<int> out;
  for (std::size_t i = 1; i < T.rows.size(); ++i)
    for (std::size_t t = 0; t < T.rows[i].size(); ++t) out.push_back(b_stat(T.rows[i - 1], T.rows[i], t));
  return out;
}

std::vector<int> delta_c(const GTPattern& T) {
  std::vector<int> out;
  for (std::size_t i = 1; i < T.rows.size(); ++i)
    for (std::size_t t = 0; t < T.rows[i].size(); ++t) out.push_back(c_stat(T.rows[i - 1], T.rows[i], t));
  return out;
}

Coefficient gamma_weight(const GTPattern& T, const WeightRing& ring) {
  if (!T.strict()) return ring.zero();
  Coefficient w = ring.one();
  for (std::size_t i = 1; i < T.rows.size(); ++i) w *= gamma_row(T.rows[i - 1], T.rows[i], ring);
  return w;
}

Coefficient delta_weight(const GTPattern& T, const WeightRing& ring) {
  if (!T.strict()) return ring.zero();
  Coefficient w = ring.one();
  for (std::size_t i = 1; i < T.rows.size(); ++i) w *= delta_row(T.rows[i - 1], T.rows[i], ring);
  return w;
}

std::vector<int> gamma_k(const GTPattern& T) {
  const int r = T.rank();
  const auto& l = T.rows[0];
  std::vector<int> k;
  for (int i = 1; i <= r; ++i) k.push_back(T.row_sum(i) - std::accumulate(l.begin() + i, l.end(), 0));
  return k;
}

std::vector<int> delta_k(const GTPattern& T) {
  const int r = T.rank();
  const auto& l = T.rows[0];
  std::vector<int> k;
  for (int i = 1; i <= r; ++i) k.push_back(std::accumulate(l.begin(), l.begin() + i, 0) - T.row_sum(r + 1 - i));
  return k;
}

// ---------------------------------------------------------- short patterns

bool ShortPattern::interleaves() const {
  return interleaves_row(l, a) && (m.empty() ? a.size() <= 1 : interleaves_row(a, m));
}

std::vector<std::vector<int>> middle_rows(const std::vector<int>& l, const std::vector<int>& m) {
  const int r = static_cast<int>(l.size()) - 1;
  if (r < 1 || static_cast<int>(m.size()) != r - 1) throw std::invalid_argument("short pattern row lengths");
  std::vector<std::vector<int>> out;
  std::vector<int> a(r);
  // a_i (stored a[i−1]) lies in [max(ℓ_i, m_i), min(ℓ_{i−1}, m_{i−1})].
  std::function<void(int)> rec = [&](int i) {
    if (i > r) {
      out.push_back(a);
      return;
    }
    int lo = l[i];
    int hi = l[i - 1];
    if (i <= r - 1) lo = std::max(lo, m[i - 1]);
    if (i >= 2) hi = std::min(hi, m[i - 2]);
    for (int v = lo; v <= hi; ++v) {
      a[i - 1] = v;
      rec(i + 1);
    }
  };
  rec(1);
  return out;
}

std::optional<ShortPattern> schuetzenberger_qr(const ShortPattern& t, QrFormula formula) {
  const int r = t.rank();
  ShortPattern out = t;
  for (int i = 1; i <= r; ++i) {
    int upper, lower;
    if (formula == QrFormula::printed) {
      upper = i == 1 ? t.l[0] : std::max(t.l[i - 1], t.m[i - 2]);
      lower = i == r ? t.l[r] : std::min(t.l[i], t.m[i - 1]);
    } else {
      upper = i == 1 ? t.l[0] : std::min(t.l[i - 1], t.m[i - 2]);
      lower = i == r ? t.l[r] : std::max(t.l[i], t.m[i - 1]);
    }
    out.a[i - 1] = upper + lower - t.a[i - 1];
  }
  if (!out.interleaves()) return std::nullopt;
  return out;
}

Coefficient gamma_delta_weight(const ShortPattern& t, const WeightRing& ring) {
  if (!strictly_decreasing(t.a) || !strictly_decreasing(t.m)) return ring.zero();
  return gamma_row(t.l, t.a, ring) * delta_row(t.a, t.m, ring);
}

Coefficient delta_gamma_weight(const ShortPattern& t, const WeightRing& ring) {
  if (!strictly_decreasing(t.a) || !strictly_decreasing(t.m)) return ring.zero();
  return delta_row(t.l, t.a, ring) * gamma_row(t.a, t.m, ring);
}

StatementBSums statement_b_sums(const std::vector<int>& l, const std::vector<int>& m, int k,
                                const WeightRing& ring, QrFormula formula) {
  StatementBSums s{ring.zero(), ring.zero()};
  for (const auto& a : middle_rows(l, m)) {
    if (sum(a) != k) continue;
    ShortPattern t{l, a, m};
    s.gamma_delta += gamma_delta_weight(t, ring);
    if (auto image = schuetzenberger_qr(t, formula)) s.delta_gamma += delta_gamma_weight(*image, ring);
  }
  return s;
}

}  // namespace metice
