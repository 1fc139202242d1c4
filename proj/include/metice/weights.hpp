// Boltzmann weight tables for Γ and Δ ice.
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "metice/gauss.hpp"
#include "metice/lattice.hpp"

namespace metice {

enum class WeightFactor { one, g, h };

struct WeightEntry {
  VertexConfig config;
  WeightFactor factor;  // 1, g(charge) or h(charge)
  int z_exponent;       // 0 or 1
};

class WeightTable {
 public:
  WeightTable(Family family, int n, const std::vector<WeightEntry>& entries);

  Family family() const { return family_; }
  int n() const { return n_; }
  /// Nullptr for the ten configurations with weight 0.
  const WeightEntry* lookup(const VertexConfig& v) const;
  std::vector<WeightEntry> entries() const;

  /// Multiplies the Gauss part of the weight into `word`; returns the z exponent.
  int accumulate(const WeightEntry& e, int charge, GaussWord& word) const;
  Coefficient coefficient(const WeightEntry& e, int charge, const WeightRing& ring) const;

 private:
  static int index(const VertexConfig& v);
  Family family_;
  int n_;
  std::array<std::optional<WeightEntry>, 16> table_;
};

/// (N,S,W,E): (++++)→1, (−−−−)→z, (−−++)→g(a), (++−−)→z, (+−−+)→h(a)z, (−++−)→1.
WeightTable gamma_weight_table(int n);
/// (N,S,W,E): (++++)→1, (−−−−)→g(a)z, (−−++)→1, (++−−)→z, (+−−+)→h(a)z, (−++−)→1.
WeightTable delta_weight_table(int n);
WeightTable weight_table(Family family, int n);

}  // namespace metice
