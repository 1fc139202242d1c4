// Weyl-group functional equations in cleared-denominator form.
#pragma once

#include <map>
#include <vector>

#include "metice/partition.hpp"
#include "metice/transfer.hpp"

namespace metice {

/// P^{(j)}(x,y) = p^{(j)}(x,y) / D(x,y), Q^{(j)}(x,y) = q^{(j)}(x,y) / D(x,y) with
///   p^{(j)} = (1−u) x^j y^{n−j},  q^{(j)} = g(j)(xⁿ − yⁿ),  D = xⁿ − u yⁿ,
/// and g(0) = −u.  x, y are variable indices of a `vars`-variable ring.
struct FactorPQ {
  int n;
  int j;
  WeightRing ring;

  LaurentPoly p(int vars, int x, int y) const;
  LaurentPoly q(int vars, int x, int y) const;
  LaurentPoly denominator(int vars, int x, int y) const;
};

/// Z_i^{(j)}: the monomials of Z with (exponent of z_i) − (exponent of z_{i+1}) ≡ j mod n.
using DecomposedPartition = std::map<int, LaurentPoly>;
DecomposedPartition decompose(const LaurentPoly& Z, int i, int n);

struct FunctionalEqReport {
  LaurentPoly lhs;  // (z_{i+1}ⁿ − u z_iⁿ) · Z^{(j)}(σ_i z)
  LaurentPoly rhs;  // p^{(j)}(z_{i+1}, z_i) Z^{(j)} + q^{(j)}(z_{i+1}, z_i) Z^{(n−j)}
  bool pass = false;
};

/// In symbolic mode both sides are reduced with the full Gauss-sum relations
/// before the exact comparison.
FunctionalEqReport functional_eq_check(const LaurentPoly& Z, int i, int j, const WeightRing& ring,
                                       double tol = 1e-8);
FunctionalEqReport functional_eq_check(const SystemSpec& spec, int i, int j, double tol = 1e-8);

/// R-vertex data for odd n at the all-+ and all-− configurations.  Charges are
/// (d_{i+1}, d_i) on the far side of the vertex and (d′_{i+1}, d′_i) on the side
/// touching the system.
struct PartialRVertexN {
  int n;
  WeightRing ring;
  int vars = 2;
  int xi = 0;  // variable index of z_i
  int yi = 1;  // variable index of z_{i+1}

  /// Zero unless j′ ≡ ±j, where j = d_{i+1} − d_i and j′ = d′_{i+1} − d′_i.
  LaurentPoly all_plus(int d_next, int d, int d_next_prime, int d_prime) const;
  /// z_{i+1}ⁿ − u z_iⁿ when d_i ≡ d_{i+1} ≡ 0, else zero.
  LaurentPoly all_minus(int d_next, int d) const;
};

struct TwoRowFeReport {
  LaurentPoly lhs;  // Σ_states R_{all+}(j, j′(state)) · weight(state)
  LaurentPoly rhs;  // R_{all−} · Σ_{class j} weight(state with swapped parameters)
  bool pass = false;
};

/// Γ two-row system with z_{i+1} on the top row and z_i on the bottom row,
/// variables (z_i, z_{i+1}) = (z₁, z₂).  Requires odd n.
TwoRowFeReport fe_via_rvertex_two_row(const TwoRowBoundary& b, int j, const WeightRing& ring, double tol = 1e-8);

struct CompletionSearchResult {
  int candidates = 0;
  int best_failures = 0;  // fewest failing charge-labelled boundaries
  std::vector<int> best_choice;
};

/// Exploratory: tries small candidate values for the R-vertex entries the data
/// above leaves open and counts failing Yang-Baxter boundaries for each.
/// Nothing is asserted about the outcome.
CompletionSearchResult explore_rvertex_completions(const WeightRing& ring);

}  // namespace metice
