// Gelfand-Tsetlin patterns, short patterns, the Γ/Δ statistics and the
// involution q_r.
#pragma once

#include <optional>
#include <vector>

#include "metice/gauss.hpp"
#include "metice/lattice.hpp"

namespace metice {

/// rows[i][t] holds a_{i, i+t}; row 0 is the top row λ + ρ.
struct GTPattern {
  std::vector<std::vector<int>> rows;

  int rank() const { return static_cast<int>(rows.size()) - 1; }
  int row_sum(int i) const;
  bool interleaves() const;
  bool strict() const;
  bool operator==(const GTPattern&) const = default;
};

GTPattern state_to_pattern(const IceState& s);
/// Throws std::invalid_argument unless T is strict, interleaving, and has top row λ + ρ.
IceState pattern_to_state(const GTPattern& T, const Boundary& b);

/// Every strict pattern with the given top row, in the enumeration order of for_each_state.
std::vector<GTPattern> strict_patterns(const std::vector<int>& top);

/// b_{i,j} in reading order (row 1 left to right, then row 2, …).
std::vector<int> gamma_b(const GTPattern& T);
/// c_{i,j} in the same order.
std::vector<int> delta_c(const GTPattern& T);

/// Zero for non-strict patterns.
Coefficient gamma_weight(const GTPattern& T, const WeightRing& ring);
Coefficient delta_weight(const GTPattern& T, const WeightRing& ring);
std::vector<int> gamma_k(const GTPattern& T);
std::vector<int> delta_k(const GTPattern& T);

struct ShortPattern {
  std::vector<int> l;  // ℓ_0..ℓ_r
  std::vector<int> a;  // a_1..a_r
  std::vector<int> m;  // m_1..m_{r−1}

  int rank() const { return static_cast<int>(l.size()) - 1; }
  bool interleaves() const;
  bool operator==(const ShortPattern&) const = default;
};

/// All middle rows a interleaving ℓ and m, in lexicographic order.
std::vector<std::vector<int>> middle_rows(const std::vector<int>& l, const std::vector<int>& m);

enum class QrFormula {
  printed,     // a_i ↦ max(ℓ_{i−1}, m_{i−1}) + min(ℓ_i, m_i) − a_i
  reflection,  // a_i ↦ min(ℓ_{i−1}, m_{i−1}) + max(ℓ_i, m_i) − a_i
};

/// Applies the entrywise affine map; nothing if the image leaves the interleaving region.
std::optional<ShortPattern> schuetzenberger_qr(const ShortPattern& t, QrFormula formula = QrFormula::reflection);

/// γ on the middle row, δ on the bottom row; zero unless a and m are strict.
Coefficient gamma_delta_weight(const ShortPattern& t, const WeightRing& ring);
/// δ on the middle row, γ on the bottom row.
Coefficient delta_gamma_weight(const ShortPattern& t, const WeightRing& ring);

struct StatementBSums {
  Coefficient gamma_delta;  // Σ_{Σa = k} G^{ΓΔ}(t)
  Coefficient delta_gamma;  // Σ_{Σa = k} G^{ΔΓ}(q_r t), zero where q_r t is undefined
};

StatementBSums statement_b_sums(const std::vector<int>& l, const std::vector<int>& m, int k,
                                const WeightRing& ring, QrFormula formula = QrFormula::reflection);

}  // namespace metice
