// State weights, partition functions and Whittaker coefficient tables.
#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "metice/coeffring.hpp"
#include "metice/gauss.hpp"
#include "metice/lattice.hpp"
#include "metice/weights.hpp"

namespace metice {

struct SystemSpec {
  Boundary boundary;
  Family family = Family::gamma;
  WeightRing ring = WeightRing::symbolic(1);
  /// row_vars[k] = index of the spectral parameter carried by row k (top = 0).
  std::vector<int> row_vars;
  int vars = 1;
};

/// Γ rows carry z_{r+1}, …, z_1 from top to bottom; Δ rows carry z_1, …, z_{r+1}.
std::vector<int> default_row_vars(int r, Family family);
SystemSpec make_system(const Boundary& b, Family family, const WeightRing& ring);

/// Product of the Boltzmann weights of s, as a one-term polynomial.
LaurentPoly state_weight(const IceState& s, const SystemSpec& spec);

enum class Strategy { enumerate, transfer };

LaurentPoly partition(const SystemSpec& spec, Strategy strategy = Strategy::transfer);

/// d_i, the sum of the exponents carried by rows i..r of the system.
std::vector<int> row_sums_from_exponents(const Exponents& e, const SystemSpec& spec);

using WhittakerTable = std::map<std::vector<int>, Coefficient>;

/// Reads H(p^k; λ) off the monomials of Z.
WhittakerTable whittaker_table(const SystemSpec& spec, const LaurentPoly& Z);
WhittakerTable whittaker_table(const SystemSpec& spec, Strategy strategy = Strategy::transfer);

/// Σ H(p^k) q^{k_1(1−2s_1)+…+k_r(1−2s_r)}, e.g. "1 + g(1)·q^{1−2s₁}".
std::string dirichlet_series_string(const WhittakerTable& table, int r);
WhittakerTable parse_dirichlet_series(std::string_view text, int r);

}  // namespace metice
