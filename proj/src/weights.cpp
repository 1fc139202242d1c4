#include "metice/weights.hpp"

#include <stdexcept>

namespace metice {

namespace {
constexpr Spin P = Spin::plus;
constexpr Spin M = Spin::minus;
}  // namespace

WeightTable::WeightTable(Family family, int n, const std::vector<WeightEntry>& entries)
    : family_(family), n_(n) {
  if (n < 1) throw std::invalid_argument("cover degree must be positive");
  for (const auto& e : entries) {
    if (!is_admissible(e.config)) throw std::invalid_argument("weight on an inadmissible vertex");
    table_[index(e.config)] = e;
  }
}

int WeightTable::index(const VertexConfig& v) {
  return (v.N == M) | (v.S == M) << 1 | (v.W == M) << 2 | (v.E == M) << 3;
}

const WeightEntry* WeightTable::lookup(const VertexConfig& v) const {
  const auto& slot = table_[index(v)];
  return slot ? &*slot : nullptr;
}

std::vector<WeightEntry> WeightTable::entries() const {
  std::vector<WeightEntry> out;
  for (const auto& slot : table_)
    if (slot) out.push_back(*slot);
  return out;
}

int WeightTable::accumulate(const WeightEntry& e, int charge, GaussWord& word) const {
  if (e.factor == WeightFactor::g) word.add_g(charge);
  if (e.factor == WeightFactor::h) word.add_h(charge);
  return e.z_exponent;
}

Coefficient WeightTable::coefficient(const WeightEntry& e, int charge, const WeightRing& ring) const {
  switch (e.factor) {
    case WeightFactor::g: return ring.g(charge);
    case WeightFactor::h: return ring.h(charge);
    case WeightFactor::one: break;
  }
  return ring.one();
}

WeightTable gamma_weight_table(int n) {
  using F = WeightFactor;
  return WeightTable(Family::gamma, n,
                     {{{P, P, P, P}, F::one, 0},
                      {{M, M, M, M}, F::one, 1},
                      {{M, M, P, P}, F::g, 0},
                      {{P, P, M, M}, F::one, 1},
                      {{P, M, M, P}, F::h, 1},
                      {{M, P, P, M}, F::one, 0}});
}

WeightTable delta_weight_table(int n) {
  using F = WeightFactor;
  return WeightTable(Family::delta, n,
                     {{{P, P, P, P}, F::one, 0},
                      {{M, M, M, M}, F::g, 1},
                      {{M, M, P, P}, F::one, 0},
                      {{P, P, M, M}, F::one, 1},
                      {{P, M, M, P}, F::h, 1},
                      {{M, P, P, M}, F::one, 0}});
}

WeightTable weight_table(Family family, int n) {
  return family == Family::gamma ? gamma_weight_table(n) : delta_weight_table(n);
}

}  // namespace metice
