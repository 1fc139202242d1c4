#include "metice/ybe.hpp"

#include <algorithm>
#include <stdexcept>

namespace metice {

namespace {

constexpr Spin P = Spin::plus;
constexpr Spin M = Spin::minus;

LaurentPoly mono(int vars, int var, const QPoly& c) {
  Exponents e(vars, 0);
  if (var >= 0) e[var] = 1;
  return LaurentPoly::monomial(vars, e, Coefficient::symbolic(c));
}

const QPoly kU = QPoly::monomial(1);
const QPoly kOneMinusU = QPoly(1) - QPoly::monomial(1);

}  // namespace

RVertexTable rmatrix_n1(int vars, int xi, int yi) {
  auto zi = [&](const QPoly& c) { return mono(vars, xi, c); };
  auto zj = [&](const QPoly& c) { return mono(vars, yi, c); };
  RVertexTable R;
  R[{P, P, P, P}] = zi(1) - zj(kU);
  R[{M, M, M, M}] = zj(1) - zi(kU);
  R[{M, P, P, M}] = zj(kU) - zi(kU);
  R[{P, M, M, P}] = zj(1) - zi(1);
  R[{P, M, P, M}] = zj(kOneMinusU);
  R[{M, P, M, P}] = zi(kOneMinusU);
  return R;
}

VertexTable gamma_vertex_table_n1(int vars, int var) {
  const WeightTable table = gamma_weight_table(1);
  const WeightRing ring = WeightRing::symbolic(1);
  VertexTable out;
  for (const auto& e : table.entries()) {
    Exponents ex(vars, 0);
    ex[var] = e.z_exponent;
    out[e.config] = LaurentPoly::monomial(vars, ex, table.coefficient(e, 0, ring));
  }
  return out;
}

std::string to_string(EdgeName e) {
  static const char* const names[] = {"sigma", "tau", "alpha", "beta", "rho", "theta",
                                      "nu",    "mu",  "gamma", "delta", "psi", "phi"};
  return names[static_cast<int>(e)];
}

bool WiringDiagram::validate() const {
  auto check = [](const WiringSide& side) {
    std::array<int, 12> uses{};
    for (const auto& v : side.vertices)
      for (EdgeName e : v.edges) ++uses[static_cast<int>(e)];
    for (int e = 0; e < 6; ++e)
      if (uses[e] != 1) return false;
    int internal_total = 0;
    for (EdgeName e : side.internal) {
      if (static_cast<int>(e) < 6 || uses[static_cast<int>(e)] != 2) return false;
      internal_total += 2;
    }
    int all = 0;
    for (int u : uses) all += u;
    std::array<int, 3> kinds{};
    for (const auto& v : side.vertices) ++kinds[static_cast<int>(v.kind)];
    return all == 6 + internal_total && kinds == std::array<int, 3>{1, 1, 1};
  };
  return check(left) && check(right);
}

WiringDiagram standard_wiring() {
  using E = EdgeName;
  using K = WiredVertex::Kind;
  WiringDiagram w;
  w.left = {{{{K::R, {E::sigma, E::tau, E::nu, E::mu}},
              {K::S, {E::alpha, E::gamma, E::nu, E::rho}},
              {K::T, {E::gamma, E::beta, E::mu, E::theta}}}},
            {E::nu, E::mu, E::gamma}};
  w.right = {{{{K::T, {E::alpha, E::delta, E::sigma, E::psi}},
               {K::S, {E::delta, E::beta, E::tau, E::phi}},
               {K::R, {E::psi, E::phi, E::rho, E::theta}}}},
             {E::delta, E::psi, E::phi}};
  return w;
}

YbeReport ybe_check(const RVertexTable& R, const VertexTable& S, const VertexTable& T,
                    const WiringDiagram& wiring) {
  if (!wiring.validate()) throw std::invalid_argument("malformed wiring diagram");
  int vars = 0;
  for (const auto* table : {&S, &T})
    for (const auto& [k, p] : *table) vars = std::max(vars, p.vars());
  for (const auto& [k, p] : R) vars = std::max(vars, p.vars());

  auto side_value = [&](const WiringSide& side, std::array<Spin, 12>& spins) {
    LaurentPoly total(vars);
    for (int mask = 0; mask < 8; ++mask) {
      for (int b = 0; b < 3; ++b) spins[static_cast<int>(side.internal[b])] = (mask >> b) & 1 ? M : P;
      LaurentPoly prod = LaurentPoly::constant(vars, Coefficient::one(CoeffMode::symbolic));
      bool zero = false;
      for (const auto& v : side.vertices) {
        std::array<Spin, 4> s;
        for (int k = 0; k < 4; ++k) s[k] = spins[static_cast<int>(v.edges[k])];
        const LaurentPoly* w = nullptr;
        if (v.kind == WiredVertex::Kind::R) {
          auto it = R.find(s);
          if (it != R.end()) w = &it->second;
        } else {
          const VertexTable& table = v.kind == WiredVertex::Kind::S ? S : T;
          auto it = table.find(VertexConfig{s[0], s[1], s[2], s[3]});
          if (it != table.end()) w = &it->second;
        }
        if (!w || w->is_zero()) {
          zero = true;
          break;
        }
        prod = prod * *w;
      }
      if (!zero) total += prod;
    }
    total.canonicalize();
    return total;
  };

  YbeReport rep;
  for (int mask = 0; mask < 64; ++mask) {
    std::array<Spin, 12> spins{};
    YbeBoundaryResult res;
    for (int b = 0; b < 6; ++b) spins[b] = res.boundary[b] = (mask >> b) & 1 ? M : P;
    res.lhs = side_value(wiring.left, spins);
    res.rhs = side_value(wiring.right, spins);
    res.pass = poly_equal(res.lhs, res.rhs, 0.0);
    rep.failures += !res.pass;
    rep.boundaries.push_back(std::move(res));
  }
  return rep;
}

namespace {

void require_n1(const SystemSpec& spec, int i) {
  if (spec.ring.n() != 1) throw std::invalid_argument("row swap identities are stated for n = 1");
  if (i < 1 || i >= spec.vars) throw std::out_of_range("row index i must satisfy 1 ≤ i ≤ r");
}

RowSwapReport endpoint_identity(const SystemSpec& spec, int i, const LaurentPoly& Z, const LaurentPoly& Zswap) {
  // B_R entries are embedded into the spec's ring so numeric systems work too.
  RVertexTable R = rmatrix_n1(spec.vars, i - 1, i);
  auto embed = [&](const LaurentPoly& p) { return p.map_coefficients([&](const Coefficient& c) { return spec.ring.embed(c); }); };
  RowSwapReport rep;
  rep.lhs = embed(R.at({P, P, P, P})) * Z;
  rep.rhs = embed(R.at({M, M, M, M})) * Zswap;
  rep.pass = poly_equal(rep.lhs, rep.rhs, spec.ring.mode() == CoeffMode::numeric ? 1e-9 : 0.0);
  return rep;
}

}  // namespace

RowSwapReport train_argument_row_swap(const SystemSpec& spec, int i) {
  require_n1(spec, i);
  SystemSpec swapped = spec;
  for (int& v : swapped.row_vars) {
    if (v == i - 1)
      v = i;
    else if (v == i)
      v = i - 1;
  }
  return endpoint_identity(spec, i, partition(spec), partition(swapped));
}

RowSwapReport commutation_check(const SystemSpec& spec, int i) {
  require_n1(spec, i);
  LaurentPoly Z = partition(spec);
  return endpoint_identity(spec, i, Z, poly_permute_vars(Z, adjacent_transposition(spec.vars, i)));
}

}  // namespace metice
