// Command-line front end.  Exit codes: 0 pass, 1 verification failure,
// 2 usage or configuration error.
#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "metice/gauss.hpp"
#include "metice/lattice.hpp"

namespace metice {

struct RunConfig {
  int rank = -1;
  std::vector<int> lambda;
  int n = 1;
  std::string coeff = "auto";  // symbolic | numeric | auto (numeric iff q is given)
  std::optional<long> q;
  Family family = Family::gamma;
  std::string strategy = "transfer";
  unsigned long seed = 0;
  std::string output;

  /// Throws std::invalid_argument for an inconsistent mode / field choice.
  WeightRing ring() const;
  Boundary boundary() const;
};

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace metice
