#include "metice/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace metice {

bool is_admissible(const VertexConfig& v) {
  int plus = (v.N == Spin::plus) + (v.S == Spin::plus) + (v.W == Spin::plus) + (v.E == Spin::plus);
  if (plus % 2 != 0) return false;
  const VertexConfig bad1{Spin::plus, Spin::minus, Spin::plus, Spin::minus};
  const VertexConfig bad2{Spin::minus, Spin::plus, Spin::minus, Spin::plus};
  return !(v == bad1) && !(v == bad2);
}

std::string to_string(const VertexConfig& v) {
  return {'(', spin_char(v.N), ',', spin_char(v.S), ',', spin_char(v.W), ',', spin_char(v.E), ')'};
}

ColumnSet ColumnSet::from_columns(const std::vector<int>& cols) {
  ColumnSet s;
  for (int c : cols) {
    if (c < 0 || c >= 64) throw std::out_of_range("column label outside 0..63");
    s.insert(c);
  }
  return s;
}

std::vector<int> ColumnSet::columns() const {
  std::vector<int> out;
  for (int c = 63; c >= 0; --c)
    if (contains(c)) out.push_back(c);
  return out;
}

std::string to_string(Family f) { return f == Family::gamma ? "gamma" : "delta"; }

Boundary boundary_from_lambda(int r, const std::vector<int>& lambda) {
  if (r < 0) throw std::invalid_argument("rank must be nonnegative");
  if (static_cast<int>(lambda.size()) != r + 1)
    throw std::invalid_argument("lambda must have r+1 = " + std::to_string(r + 1) + " parts");
  if (lambda.back() != 0) throw std::invalid_argument("lambda_0 must be 0");
  for (std::size_t i = 0; i + 1 < lambda.size(); ++i)
    if (lambda[i] < lambda[i + 1]) throw std::invalid_argument("lambda is not dominant");
  Boundary b;
  b.r = r;
  b.lambda = lambda;
  b.C = lambda.front() + r + 1;
  if (b.C > 64) throw std::invalid_argument("more than 64 columns");
  for (int i = 0; i <= r; ++i) b.top_row.push_back(lambda[i] + (r - i));
  b.top = ColumnSet::from_columns(b.top_row);
  return b;
}

std::optional<RowEdges> fill_row(ColumnSet top, ColumnSet bottom, int C) {
  RowEdges e(C + 1);
  e[C] = Spin::plus;
  for (int c = C - 1; c >= 0; --c) {
    Spin N = top.contains(c) ? Spin::minus : Spin::plus;
    Spin S = bottom.contains(c) ? Spin::minus : Spin::plus;
    Spin W = e[c + 1];
    int plus = (N == Spin::plus) + (S == Spin::plus) + (W == Spin::plus);
    Spin E = plus % 2 ? Spin::plus : Spin::minus;
    if (!is_admissible({N, S, W, E})) return std::nullopt;
    e[c] = E;
  }
  if (e[0] != Spin::minus) return std::nullopt;
  return e;
}

VertexConfig IceState::vertex(int row, int col) const {
  if (row < 0 || row >= row_count() || col < 0 || col >= C_) throw std::out_of_range("vertex position");
  const RowEdges& e = rows_[row];
  return {layers_[row].contains(col) ? Spin::minus : Spin::plus,
          layers_[row + 1].contains(col) ? Spin::minus : Spin::plus, e[col + 1], e[col]};
}

std::optional<IceState> horizontal_fill(const Boundary& b, const std::vector<ColumnSet>& layers) {
  if (static_cast<int>(layers.size()) != b.r + 2) return std::nullopt;
  if (layers.front() != b.top || layers.back() != ColumnSet{}) return std::nullopt;
  const std::uint64_t mask = b.C == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << b.C) - 1;
  std::vector<RowEdges> rows;
  for (int k = 0; k <= b.r; ++k) {
    if ((layers[k].bits() & ~mask) || layers[k].size() != b.r + 1 - k) return std::nullopt;
    auto e = fill_row(layers[k], layers[k + 1], b.C);
    if (!e) return std::nullopt;
    rows.push_back(std::move(*e));
  }
  return IceState(b.C, layers, std::move(rows));
}

std::vector<std::vector<int>> strict_branches(const std::vector<int>& above) {
  std::vector<std::vector<int>> out;
  if (above.size() < 2) {
    out.emplace_back();
    return out;
  }
  const std::size_t len = above.size() - 1;
  std::vector<int> row(len);
  // Fill left to right; entry j lies in [above[j+1], above[j]] and below row[j-1].
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == len) {
      out.push_back(row);
      return;
    }
    int lo = above[j + 1];
    int hi = above[j];
    if (j > 0) hi = std::min(hi, row[j - 1] - 1);
    for (int a = lo; a <= hi; ++a) {
      row[j] = a;
      rec(j + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_state(const Boundary& b, const std::function<void(const IceState&)>& visit) {
  std::vector<ColumnSet> layers(b.r + 2);
  std::vector<RowEdges> rows(b.r + 1);
  layers[0] = b.top;
  std::function<void(int, const std::vector<int>&)> rec = [&](int k, const std::vector<int>& above) {
    // `above` is pattern row k (layer k); choose layer k+1.
    for (const auto& next : strict_branches(above)) {
      ColumnSet s = ColumnSet::from_columns(next);
      auto e = fill_row(layers[k], s, b.C);
      if (!e) continue;
      layers[k + 1] = s;
      rows[k] = std::move(*e);
      if (k == b.r)
        visit(IceState(b.C, layers, rows));
      else
        rec(k + 1, next);
    }
  };
  rec(0, b.top_row);
}

std::vector<IceState> enumerate_states(const Boundary& b) {
  std::vector<IceState> out;
  for_each_state(b, [&](const IceState& s) { out.push_back(s); });
  return out;
}

std::size_t count_states(const Boundary& b) {
  std::size_t n = 0;
  for_each_state(b, [&](const IceState&) { ++n; });
  return n;
}

namespace {

void check_position(const IceState& s, int row, int col, int n) {
  if (row < 0 || row >= s.row_count() || col < 0 || col >= s.columns())
    throw std::out_of_range("charge position");
  if (n < 1) throw std::invalid_argument("cover degree must be positive");
}

}  // namespace

int charge_gamma(const IceState& s, int row, int col, int n) {
  check_position(s, row, col, n);
  const RowEdges& e = s.row_edges(row);
  int count = static_cast<int>(std::count(e.begin(), e.begin() + col + 1, Spin::plus));
  return count % n;
}

int charge_delta(const IceState& s, int row, int col, int n) {
  check_position(s, row, col, n);
  const RowEdges& e = s.row_edges(row);
  int count = static_cast<int>(std::count(e.begin() + col + 1, e.end(), Spin::minus));
  return count % n;
}

ChargeLabeling charge_labels(const IceState& s, Family family, int n) {
  if (n < 1) throw std::invalid_argument("cover degree must be positive");
  ChargeLabeling out{family, n, {}};
  const int C = s.columns();
  for (int k = 0; k < s.row_count(); ++k) {
    const RowEdges& e = s.row_edges(k);
    std::vector<EdgeLabel> labels(C + 1);
    if (family == Family::gamma) {
      int count = 0;
      for (int i = 0; i <= C; ++i) {
        count += e[i] == Spin::plus;
        labels[i] = {e[i], count, count % n};
      }
    } else {
      int count = 0;
      for (int i = C; i >= 0; --i) {
        count += e[i] == Spin::minus;
        labels[i] = {e[i], count, count % n};
      }
    }
    out.rows.push_back(std::move(labels));
  }
  return out;
}

}  // namespace metice
