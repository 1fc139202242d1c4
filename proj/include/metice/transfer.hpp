// Row transfer operators applied by column-wise contraction, and the two-row
// ΓΔ / ΔΓ systems.
#pragma once

#include <functional>
#include <map>
#include <vector>

#include "metice/partition.hpp"

namespace metice {

/// One row of ice: C columns, weights of one family, spectral parameter z_{var+1}.
struct TransferOperator {
  int C = 1;
  Family family = Family::gamma;
  int var = 0;
  int vars = 1;
  WeightRing ring = WeightRing::symbolic(1);
};

using LayerVector = std::map<ColumnSet, LaurentPoly>;

/// Calls visit(bottom, word, z_count) for each admissible completion of a row
/// under the top layer.  Γ rows are scanned right to left carrying the charge
/// of the east edge; Δ rows left to right carrying the charge of the west edge.
void for_each_row_completion(const TransferOperator& op, ColumnSet top,
                             const std::function<void(ColumnSet, const GaussWord&, int)>& visit);

/// V(α, β): the weight of the unique completion, or 0.
LaurentPoly one_layer_value(const TransferOperator& op, ColumnSet alpha, ColumnSet beta);

/// w(β) = Σ_α v(α)·V(α, β), never forming the dense matrix.
LayerVector apply_operator(const TransferOperator& op, const LayerVector& v);

/// Z by applying the r+1 row operators to the indicator of the top boundary.
LaurentPoly transfer_partition(const SystemSpec& spec);

struct TwoRowBoundary {
  int C = 1;
  ColumnSet top;     // α
  ColumnSet bottom;  // γ, two fewer − than α

  static TwoRowBoundary from_rows(const std::vector<int>& l, const std::vector<int>& m, int C = 0);
};

enum class RowOrder { gamma_delta, delta_gamma };

/// Γ rows carry z₁ and Δ rows z₂ in both orders.  Throws std::invalid_argument
/// when the boundary counts do not differ by two.
LaurentPoly two_row_partition(const TwoRowBoundary& b, RowOrder order, const WeightRing& ring);

struct AbbaReport {
  LaurentPoly gamma_delta;
  LaurentPoly delta_gamma;
  bool pass = false;
};

AbbaReport theorem_abba_check(const TwoRowBoundary& b, const WeightRing& ring, double tol = 1e-9);

struct StatementBReport {
  Exponents monomial;       // z₁^{d₀−k} z₂^{k−d₂}
  Coefficient gamma_delta;  // its coefficient in the ΓΔ system
  Coefficient delta_gamma;  // its coefficient in the ΔΓ system
  bool pass = false;
};

/// Compares the coefficient of the monomial with middle row sum k in the ΓΔ
/// system against the matching monomial of the ΔΓ system.
StatementBReport statement_b_check(const std::vector<int>& l, const std::vector<int>& m, int k,
                                   const WeightRing& ring, double tol = 1e-9);

struct BenchResult {
  std::size_t states = 0;
  std::size_t terms = 0;
  double transfer_seconds = 0;
  double enumerate_seconds = 0;
  bool agree = false;
};

BenchResult bench(const Boundary& b, Family family, const WeightRing& ring, bool with_enumeration);

}  // namespace metice
