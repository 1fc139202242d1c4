#include "metice/weyl.hpp"

#include <array>
#include <complex>
#include <stdexcept>

#include "metice/ybe.hpp"

namespace metice {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

LaurentPoly power_term(int vars, std::vector<std::pair<int, int>> powers,
                       const Coefficient& c) {
  Exponents e(vars, 0);
  for (auto [var, p] : powers) e[var] += p;
  return LaurentPoly::monomial(vars, e, c);
}

}  // namespace

LaurentPoly FactorPQ::p(int vars, int x, int y) const {
  return power_term(vars, {{x, mod(j, n)}, {y, n - mod(j, n)}}, ring.one() - ring.u());
}

LaurentPoly FactorPQ::q(int vars, int x, int y) const {
  Coefficient g = ring.g(j);  // g(0) = −u is built into the ring
  return power_term(vars, {{x, n}}, g) - power_term(vars, {{y, n}}, g);
}

LaurentPoly FactorPQ::denominator(int vars, int x, int y) const {
  return power_term(vars, {{x, n}}, ring.one()) - power_term(vars, {{y, n}}, ring.u());
}

DecomposedPartition decompose(const LaurentPoly& Z, int i, int n) {
  if (i < 1 || i >= Z.vars()) throw std::out_of_range("decomposition index i must satisfy 1 ≤ i ≤ r");
  if (n < 1) throw std::invalid_argument("cover degree must be positive");
  DecomposedPartition out;
  for (int j = 0; j < n; ++j) out.emplace(j, LaurentPoly(Z.vars()));
  for (const auto& [e, c] : Z.terms()) out.at(mod(e[i - 1] - e[i], n)).add_term(e, c);
  return out;
}

FunctionalEqReport functional_eq_check(const LaurentPoly& Z, int i, int j, const WeightRing& ring, double tol) {
  const int n = ring.n();
  const int vars = Z.vars();
  const int zi = i - 1, zi1 = i;
  DecomposedPartition parts = decompose(Z, i, n);
  const LaurentPoly& Zj = parts.at(mod(j, n));
  const LaurentPoly& Znj = parts.at(mod(n - j, n));
  FactorPQ f{n, j, ring};
  FunctionalEqReport rep;
  rep.lhs = f.denominator(vars, zi1, zi) * poly_permute_vars(Zj, adjacent_transposition(vars, i));
  rep.rhs = f.p(vars, zi1, zi) * Zj + f.q(vars, zi1, zi) * Znj;
  rep.rhs.canonicalize();
  if (ring.mode() == CoeffMode::symbolic) {
    auto reduce = [n](const Coefficient& c) {
      return reduce_relations(c, RelationLevel::h_vanishing_g_pairing, n);
    };
    rep.lhs = rep.lhs.map_coefficients(reduce);
    rep.rhs = rep.rhs.map_coefficients(reduce);
  }
  rep.pass = poly_equal(rep.lhs, rep.rhs, ring.mode() == CoeffMode::numeric ? tol : 0.0);
  return rep;
}

FunctionalEqReport functional_eq_check(const SystemSpec& spec, int i, int j, double tol) {
  return functional_eq_check(partition(spec), i, j, spec.ring, tol);
}

LaurentPoly PartialRVertexN::all_plus(int d_next, int d, int d_next_prime, int d_prime) const {
  const int j = mod(d_next - d, n);
  const int jp = mod(d_next_prime - d_prime, n);
  FactorPQ f{n, j, ring};
  // p, q at (x, y) = (z_{i+1}, z_i), as in the functional equation.
  if (j == 0 && jp == 0) return f.p(vars, yi, xi) + f.q(vars, yi, xi);
  if (jp == j) return f.p(vars, yi, xi);
  if (jp == mod(-j, n)) return f.q(vars, yi, xi);
  return LaurentPoly(vars);
}

LaurentPoly PartialRVertexN::all_minus(int d_next, int d) const {
  if (mod(d_next, n) != 0 || mod(d, n) != 0) return LaurentPoly(vars);
  return FactorPQ{n, 0, ring}.denominator(vars, yi, xi);
}

TwoRowFeReport fe_via_rvertex_two_row(const TwoRowBoundary& b, int j, const WeightRing& ring, double tol) {
  const int n = ring.n();
  if (n % 2 == 0) throw std::invalid_argument("the two-row R-vertex construction needs odd n");
  if (b.bottom.size() + 2 != b.top.size())
    throw std::invalid_argument("the top boundary needs exactly two more − spins than the bottom");
  // Variables: z_i = index 0, z_{i+1} = index 1.
  PartialRVertexN R{n, ring};
  const TransferOperator top_op{b.C, Family::gamma, 1, 2, ring};
  const TransferOperator top_swapped{b.C, Family::gamma, 0, 2, ring};

  auto plus_count = [](const RowEdges& e) {
    int c = 0;
    for (Spin s : e) c += s == Spin::plus;
    return c;
  };

  TwoRowFeReport rep{LaurentPoly(2), LaurentPoly(2), false};
  LaurentPoly swapped_class(2);
  for (const TransferOperator* op : {&top_op, &top_swapped}) {
    const bool swapped = op == &top_swapped;
    const TransferOperator bottom_op{b.C, Family::gamma, swapped ? 1 : 0, 2, ring};
    for_each_row_completion(*op, b.top, [&](ColumnSet mid, const GaussWord& w1, int z1) {
      for_each_row_completion(bottom_op, mid, [&](ColumnSet bot, const GaussWord& w2, int z2) {
        if (bot != b.bottom) return;
        // Left-edge Γ charges c_T, c_B of the two rows, read from the spins.
        int cT = plus_count(*fill_row(b.top, mid, b.C));
        int cB = plus_count(*fill_row(mid, bot, b.C));
        GaussWord word = w1;
        word *= w2;
        Exponents e(2, 0);
        e[op->var] += z1;
        e[bottom_op.var] += z2;
        LaurentPoly weight = LaurentPoly::monomial(2, e, ring.evaluate(word));
        if (!swapped) {
          rep.lhs += R.all_plus(j, 0, cT, cB) * weight;
        } else if (mod(cT - cB, n) == mod(j, n)) {
          swapped_class += weight;
        }
      });
    });
  }
  rep.rhs = R.all_minus(0, 0) * swapped_class;
  rep.lhs.canonicalize();
  rep.rhs.canonicalize();
  if (ring.mode() == CoeffMode::symbolic) {
    auto reduce = [n](const Coefficient& c) {
      return reduce_relations(c, RelationLevel::h_vanishing_g_pairing, n);
    };
    rep.lhs = rep.lhs.map_coefficients(reduce);
    rep.rhs = rep.rhs.map_coefficients(reduce);
  }
  rep.pass = poly_equal(rep.lhs, rep.rhs, ring.mode() == CoeffMode::numeric ? tol : 0.0);
  return rep;
}

// ------------------------------------------------- exploratory completion

namespace {

using cplx = std::complex<double>;

cplx evaluate_at(const LaurentPoly& p, const std::vector<cplx>& z, const WeightRing& ring) {
  cplx acc = 0.0;
  for (const auto& [e, c] : p.terms()) {
    cplx v = ring.embed(c).numeric_value();
    for (std::size_t k = 0; k < e.size(); ++k) v *= std::pow(z[k], e[k]);
    acc += v;
  }
  return acc;
}

struct ChargedEdge {
  Spin spin;
  int charge;  // meaningful on horizontal edges only
};

}  // namespace

CompletionSearchResult explore_rvertex_completions(const WeightRing& ring) {
  if (ring.mode() != CoeffMode::numeric) throw std::invalid_argument("the completion search runs numerically");
  const int n = ring.n();
  const std::vector<cplx> z = {cplx(0.7, 0.2), cplx(-0.4, 1.1)};  // z_i, z_{i+1}
  const WeightTable gamma = gamma_weight_table(n);

  // Charged Γ vertex: the west label is the east label plus [W = +].
  auto vertex = [&](Spin N, Spin S, ChargedEdge W, ChargedEdge E, int var) -> cplx {
    const WeightEntry* w = gamma.lookup({N, S, W.spin, E.spin});
    if (!w || mod(E.charge + (W.spin == Spin::plus), n) != W.charge) return 0.0;
    cplx v = gamma.coefficient(*w, E.charge, ring).numeric_value();
    return w->z_exponent ? v * z[var] : v;
  };

  PartialRVertexN partial{n, ring};
  std::array<cplx, 2> zn = {std::pow(z[0], n), std::pow(z[1], n)};
  const double u = 1.0 / static_cast<double>(ring.table()->q);
  // Candidate values for the four mixed configurations: the n = 1 entries in zⁿ.
  const std::array<std::pair<RKey, cplx>, 4> mixed = {{
      {{Spin::minus, Spin::plus, Spin::plus, Spin::minus}, u * (zn[1] - zn[0])},
      {{Spin::plus, Spin::minus, Spin::minus, Spin::plus}, zn[1] - zn[0]},
      {{Spin::plus, Spin::minus, Spin::plus, Spin::minus}, (1 - u) * zn[1]},
      {{Spin::minus, Spin::plus, Spin::minus, Spin::plus}, (1 - u) * zn[0]},
  }};

  CompletionSearchResult result;
  result.best_failures = -1;
  for (int choice = 0; choice < 16; ++choice) {
    auto rvertex = [&](ChargedEdge lt, ChargedEdge lb, ChargedEdge rt, ChargedEdge rb) -> cplx {
      RKey key{lt.spin, lb.spin, rt.spin, rb.spin};
      if (key == RKey{Spin::plus, Spin::plus, Spin::plus, Spin::plus})
        return evaluate_at(partial.all_plus(lt.charge, lb.charge, rt.charge, rb.charge), z, ring);
      if (key == RKey{Spin::minus, Spin::minus, Spin::minus, Spin::minus})
        return evaluate_at(partial.all_minus(lt.charge, lb.charge), z, ring);
      bool same_charges = (lt.charge == rt.charge && lb.charge == rb.charge) ||
                          (lt.charge == rb.charge && lb.charge == rt.charge);
      if (!same_charges) return 0.0;
      for (int k = 0; k < 4; ++k)
        if ((choice >> k & 1) && mixed[k].first == key) return mixed[k].second;
      return 0.0;
    };
    int failures = 0;
    const int H = 2 * n;  // horizontal edge states
    auto edge = [n](int code) { return ChargedEdge{code / n ? Spin::minus : Spin::plus, code % n}; };
    for (int sg = 0; sg < H; ++sg)
      for (int ta = 0; ta < H; ++ta)
        for (int rh = 0; rh < H; ++rh)
          for (int th = 0; th < H; ++th)
            for (int al = 0; al < 2; ++al)
              for (int be = 0; be < 2; ++be) {
                const Spin A = al ? Spin::minus : Spin::plus, B = be ? Spin::minus : Spin::plus;
                cplx lhs = 0.0, rhs = 0.0;
                for (int nu = 0; nu < H; ++nu)
                  for (int mu = 0; mu < H; ++mu)
                    for (int ga = 0; ga < 2; ++ga) {
                      const Spin G = ga ? Spin::minus : Spin::plus;
                      cplx r = rvertex(edge(sg), edge(ta), edge(nu), edge(mu));
                      if (r == 0.0) continue;
                      lhs += r * vertex(A, G, edge(nu), edge(rh), 1) * vertex(G, B, edge(mu), edge(th), 0);
                    }
                for (int de = 0; de < 2; ++de)
                  for (int ps = 0; ps < H; ++ps)
                    for (int ph = 0; ph < H; ++ph) {
                      const Spin D = de ? Spin::minus : Spin::plus;
                      cplx r = rvertex(edge(ps), edge(ph), edge(rh), edge(th));
                      if (r == 0.0) continue;
                      rhs += vertex(A, D, edge(sg), edge(ps), 0) * vertex(D, B, edge(ta), edge(ph), 1) * r;
                    }
                if (std::abs(lhs - rhs) > 1e-9 * (1.0 + std::abs(lhs) + std::abs(rhs))) ++failures;
              }
    ++result.candidates;
    if (result.best_failures < 0 || failures < result.best_failures) {
      result.best_failures = failures;
      result.best_choice.clear();
      for (int k = 0; k < 4; ++k) result.best_choice.push_back(choice >> k & 1);
    }
  }
  return result;
}

}  // namespace metice
