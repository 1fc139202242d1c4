#include "metice/transfer.hpp"

#include <chrono>
#include <numeric>
#include <stdexcept>

namespace metice {

namespace {

struct RowScan {
  const TransferOperator& op;
  const WeightTable& table;
  ColumnSet top;
  const std::function<void(ColumnSet, const GaussWord&, int)>& visit;
  GaussWord word;
  std::uint64_t bottom = 0;
  int zcount = 0;

  // Γ: `carried` is the east spin of column c and `label` its charge.
  // Δ: `carried` is the west spin and `label` its charge.
  void step(int c, Spin carried, int label) {
    const bool gamma = op.family == Family::gamma;
    if (gamma ? c == op.C : c < 0) {
      if (carried == (gamma ? Spin::plus : Spin::minus)) visit(ColumnSet(bottom), word, zcount);
      return;
    }
    const Spin N = top.contains(c) ? Spin::minus : Spin::plus;
    for (Spin S : {Spin::plus, Spin::minus}) {
      int plus = (N == Spin::plus) + (S == Spin::plus) + (carried == Spin::plus);
      Spin other = plus % 2 ? Spin::plus : Spin::minus;
      VertexConfig v = gamma ? VertexConfig{N, S, other, carried} : VertexConfig{N, S, carried, other};
      const WeightEntry* w = table.lookup(v);
      if (!w) continue;
      GaussWord saved = word;
      int z = table.accumulate(*w, label, word);
      zcount += z;
      if (S == Spin::minus) bottom |= std::uint64_t{1} << c;
      if (gamma)
        step(c + 1, other, label + (other == Spin::plus));
      else
        step(c - 1, other, label + (other == Spin::minus));
      bottom &= ~(std::uint64_t{1} << c);
      zcount -= z;
      word = std::move(saved);
    }
  }
};

}  // namespace

void for_each_row_completion(const TransferOperator& op, ColumnSet top,
                             const std::function<void(ColumnSet, const GaussWord&, int)>& visit) {
  const WeightTable table = weight_table(op.family, op.ring.n());
  RowScan scan{op, table, top, visit, GaussWord(op.ring.n())};
  if (op.family == Family::gamma)
    scan.step(0, Spin::minus, 0);  // e_0 is −, so its + count is 0
  else
    scan.step(op.C - 1, Spin::plus, 0);  // e_C is +, so its − count is 0
}

LaurentPoly one_layer_value(const TransferOperator& op, ColumnSet alpha, ColumnSet beta) {
  LaurentPoly out(op.vars);
  for_each_row_completion(op, alpha, [&](ColumnSet b, const GaussWord& word, int z) {
    if (b != beta) return;
    Exponents e(op.vars, 0);
    e[op.var] = z;
    out.add_term(e, op.ring.evaluate(word));
  });
  return out;
}

LayerVector apply_operator(const TransferOperator& op, const LayerVector& v) {
  LayerVector w;
  Exponents shift(op.vars, 0);
  for (const auto& [alpha, poly] : v) {
    if (poly.vars() != op.vars) throw ArityMismatch("layer vector arity");
    for_each_row_completion(op, alpha, [&](ColumnSet beta, const GaussWord& word, int z) {
      shift[op.var] = z;
      auto it = w.try_emplace(beta, op.vars).first;
      it->second.add_scaled(poly, op.ring.evaluate(word), shift);
      shift[op.var] = 0;
    });
  }
  for (auto it = w.begin(); it != w.end();) {
    it->second.canonicalize();
    it = it->second.is_zero() ? w.erase(it) : std::next(it);
  }
  return w;
}

LaurentPoly transfer_partition(const SystemSpec& spec) {
  LayerVector v;
  v.emplace(spec.boundary.top, LaurentPoly::constant(spec.vars, spec.ring.one()));
  for (int k = 0; k <= spec.boundary.r; ++k) {
    TransferOperator op{spec.boundary.C, spec.family, spec.row_vars[k], spec.vars, spec.ring};
    v = apply_operator(op, v);
  }
  auto it = v.find(ColumnSet{});
  return it == v.end() ? LaurentPoly(spec.vars) : it->second;
}

TwoRowBoundary TwoRowBoundary::from_rows(const std::vector<int>& l, const std::vector<int>& m, int C) {
  int width = 0;
  for (int x : l) width = std::max(width, x + 1);
  for (int x : m) width = std::max(width, x + 1);
  if (C == 0) C = width;
  if (C < width) throw std::invalid_argument("boundary wider than the column count");
  return {C, ColumnSet::from_columns(l), ColumnSet::from_columns(m)};
}

LaurentPoly two_row_partition(const TwoRowBoundary& b, RowOrder order, const WeightRing& ring) {
  if (b.bottom.size() + 2 != b.top.size())
    throw std::invalid_argument("the top boundary needs exactly two more − spins than the bottom");
  const TransferOperator gamma{b.C, Family::gamma, 0, 2, ring};
  const TransferOperator delta{b.C, Family::delta, 1, 2, ring};
  LayerVector v;
  v.emplace(b.top, LaurentPoly::constant(2, ring.one()));
  if (order == RowOrder::gamma_delta) {
    v = apply_operator(delta, apply_operator(gamma, v));
  } else {
    v = apply_operator(gamma, apply_operator(delta, v));
  }
  auto it = v.find(b.bottom);
  return it == v.end() ? LaurentPoly(2) : it->second;
}

AbbaReport theorem_abba_check(const TwoRowBoundary& b, const WeightRing& ring, double tol) {
  AbbaReport rep;
  rep.gamma_delta = two_row_partition(b, RowOrder::gamma_delta, ring);
  rep.delta_gamma = two_row_partition(b, RowOrder::delta_gamma, ring);
  if (ring.mode() == CoeffMode::symbolic) {
    // Equal only modulo the Gauss-sum relations once n > 1.
    auto reduce = [&](const Coefficient& c) {
      return reduce_relations(c, RelationLevel::h_vanishing_g_pairing, ring.n());
    };
    rep.pass = poly_equal(rep.gamma_delta.map_coefficients(reduce), rep.delta_gamma.map_coefficients(reduce), 0.0);
  } else {
    rep.pass = poly_equal(rep.gamma_delta, rep.delta_gamma, tol);
  }
  return rep;
}

StatementBReport statement_b_check(const std::vector<int>& l, const std::vector<int>& m, int k,
                                   const WeightRing& ring, double tol) {
  const TwoRowBoundary b = TwoRowBoundary::from_rows(l, m);
  const int d0 = std::accumulate(l.begin(), l.end(), 0);
  const int d2 = std::accumulate(m.begin(), m.end(), 0);
  StatementBReport rep;
  rep.monomial = {d0 - k, k - d2};
  rep.gamma_delta = two_row_partition(b, RowOrder::gamma_delta, ring).coefficient(rep.monomial);
  rep.delta_gamma = two_row_partition(b, RowOrder::delta_gamma, ring).coefficient(rep.monomial);
  if (ring.mode() == CoeffMode::symbolic) {
    rep.pass = reduce_relations(rep.gamma_delta, RelationLevel::h_vanishing_g_pairing, ring.n()) ==
               reduce_relations(rep.delta_gamma, RelationLevel::h_vanishing_g_pairing, ring.n());
  } else {
    auto x = rep.gamma_delta.numeric_value(), y = rep.delta_gamma.numeric_value();
    rep.pass = std::abs(x - y) <= tol * (1.0 + std::max(std::abs(x), std::abs(y)));
  }
  return rep;
}

BenchResult bench(const Boundary& b, Family family, const WeightRing& ring, bool with_enumeration) {
  using clock = std::chrono::steady_clock;
  const SystemSpec spec = make_system(b, family, ring);
  BenchResult res;
  auto t0 = clock::now();
  LaurentPoly zt = partition(spec, Strategy::transfer);
  auto t1 = clock::now();
  res.transfer_seconds = std::chrono::duration<double>(t1 - t0).count();
  res.terms = zt.size();
  res.states = count_states(b);
  res.agree = true;
  if (with_enumeration) {
    auto t2 = clock::now();
    LaurentPoly ze = partition(spec, Strategy::enumerate);
    res.enumerate_seconds = std::chrono::duration<double>(clock::now() - t2).count();
    res.agree = poly_equal(zt, ze, 1e-10);
  }
  return res;
}

}  // namespace metice
