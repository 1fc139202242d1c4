// Gauss sums over a prime residue field, and the weight ring that evaluates
// products of g(b), h(b) either formally or numerically.
#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "metice/coeffring.hpp"

namespace metice {

bool is_prime(long q);
/// Least primitive root modulo the prime q.
long find_primitive_root(long q);

struct ResidueField {
  long q = 0;
  long root = 0;
  std::vector<long> dlog;  // dlog[t] for 1 ≤ t < q; dlog[0] unused

  static ResidueField make(long q);
};

struct GaussTable {
  int n = 1;
  long q = 0;
  long root = 0;
  std::vector<std::complex<double>> gval;
  std::vector<std::complex<double>> hval;

  std::complex<double> g(int b) const;
  std::complex<double> h(int b) const;
  double u() const { return 1.0 / static_cast<double>(q); }
};

/// Throws std::invalid_argument if q is not prime or 2n does not divide q − 1.
GaussTable build_table(int n, long q);

/// Substitutes u = 1/q, g_b = gval[b], h_b = hval[b].  Numeric input passes through.
Coefficient evaluate(const Coefficient& c, const GaussTable& table);

/// A product of Gauss symbols recorded as counts per class mod n; turned into a
/// Coefficient only once per state.
struct GaussWord {
  std::vector<int> g;  // g[b] = multiplicity of g(b), b mod n
  std::vector<int> h;

  explicit GaussWord(int n = 1) : g(n, 0), h(n, 0) {}
  int n() const { return static_cast<int>(g.size()); }
  void add_g(int b, int times = 1);
  void add_h(int b, int times = 1);
  GaussWord& operator*=(const GaussWord& o);
  bool operator==(const GaussWord&) const = default;
};

/// The coefficient ring a computation runs in: formal symbols for cover degree
/// n, or the numeric values of one GaussTable.
class WeightRing {
 public:
  static WeightRing symbolic(int n);
  static WeightRing numeric(const GaussTable& table);

  int n() const { return n_; }
  CoeffMode mode() const { return table_ ? CoeffMode::numeric : CoeffMode::symbolic; }
  const std::optional<GaussTable>& table() const { return table_; }

  Coefficient zero() const { return Coefficient::zero(mode()); }
  Coefficient one() const { return Coefficient::one(mode()); }
  Coefficient u() const;
  Coefficient g(int b) const;
  Coefficient h(int b) const;
  Coefficient evaluate(const GaussWord& w) const;
  /// Maps a symbolic coefficient into this ring (identity in symbolic mode).
  Coefficient embed(const Coefficient& c) const;

 private:
  int n_ = 1;
  std::optional<GaussTable> table_;
};

}  // namespace metice
