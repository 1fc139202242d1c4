// Helpers shared by the test suites: evaluating library polynomials at points,
// and the boundary grids the checks run over.
#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "metice/coeffring.hpp"
#include "metice/gauss.hpp"
#include "oracle.hpp"

namespace support {

using metice::Coefficient;
using metice::LaurentPoly;

inline std::complex<double> value(const Coefficient& c, const metice::GaussTable* table) {
  if (c.mode() == metice::CoeffMode::numeric) return c.numeric_value();
  return metice::evaluate(c, *table).numeric_value();
}

inline std::complex<double> eval(const LaurentPoly& p, const std::vector<std::complex<double>>& z,
                                 const metice::GaussTable* table = nullptr) {
  std::complex<double> total = 0;
  for (const auto& [e, c] : p.terms()) {
    std::complex<double> m = value(c, table);
    for (std::size_t k = 0; k < e.size(); ++k) m *= std::pow(z[k], e[k]);
    total += m;
  }
  return total;
}

inline bool close(std::complex<double> a, std::complex<double> b, double tol) {
  return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

struct Spec {
  int r;
  std::vector<int> lambda;
};

/// Every dominant λ = (λ_r, …, λ_1, 0) with λ_r ≤ max_top, for r = 0..max_rank.
inline std::vector<Spec> lambda_grid(int max_rank, int max_top) {
  std::vector<Spec> out;
  for (int r = 0; r <= max_rank; ++r) {
    std::vector<int> lam(r + 1, 0);
    std::function<void(int, int)> fill = [&](int pos, int cap) {
      if (pos == r) {
        out.push_back({r, lam});
        return;
      }
      for (int v = 0; v <= cap; ++v) {
        lam[pos] = v;
        fill(pos + 1, v);
      }
    };
    fill(0, max_top);
  }
  return out;
}

/// The (n, q) pairs with 2n | q − 1 drawn from q ∈ {5, 7, 13}.
inline std::vector<std::pair<int, long>> field_grid(std::vector<int> ns) {
  std::vector<std::pair<int, long>> out;
  for (int n : ns)
    for (long q : {5L, 7L, 13L})
      if ((q - 1) % (2 * n) == 0) out.push_back({n, q});
  return out;
}

}  // namespace support
