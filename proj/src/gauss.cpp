#include "metice/gauss.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace metice {

namespace {

int mod(long a, long n) { return static_cast<int>(((a % n) + n) % n); }

long pow_mod(long base, long exp, long m) {
  long result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = result * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return result;
}

std::complex<double> ipow(std::complex<double> x, int k) {
  std::complex<double> r = 1.0;
  for (; k > 0; --k) r *= x;
  return r;
}

}  // namespace

bool is_prime(long q) {
  if (q < 2) return false;
  for (long d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

long find_primitive_root(long q) {
  if (!is_prime(q)) throw std::invalid_argument("modulus " + std::to_string(q) + " is not prime");
  if (q == 2) return 1;
  std::vector<long> factors;
  long m = q - 1;
  for (long d = 2; d * d <= m; ++d) {
    if (m % d) continue;
    factors.push_back(d);
    while (m % d == 0) m /= d;
  }
  if (m > 1) factors.push_back(m);
  for (long g = 2; g < q; ++g) {
    bool primitive = true;
    for (long p : factors)
      if (pow_mod(g, (q - 1) / p, q) == 1) {
        primitive = false;
        break;
      }
    if (primitive) return g;
  }
  throw std::logic_error("no primitive root found");
}

ResidueField ResidueField::make(long q) {
  ResidueField f;
  f.q = q;
  f.root = find_primitive_root(q);
  f.dlog.assign(q, 0);
  long x = 1;
  for (long k = 0; k < q - 1; ++k) {
    f.dlog[x] = k;
    x = x * f.root % q;
  }
  return f;
}

std::complex<double> GaussTable::g(int b) const { return gval[mod(b, n)]; }
std::complex<double> GaussTable::h(int b) const { return hval[mod(b, n)]; }

GaussTable build_table(int n, long q) {
  if (n < 1) throw std::invalid_argument("cover degree must be positive");
  if (!is_prime(q)) throw std::invalid_argument("q = " + std::to_string(q) + " is not prime");
  if ((q - 1) % (2L * n) != 0)
    throw std::invalid_argument("2n = " + std::to_string(2 * n) + " does not divide q - 1 = " +
                                std::to_string(q - 1));
  ResidueField field = ResidueField::make(q);
  GaussTable t;
  t.n = n;
  t.q = q;
  t.root = field.root;
  t.gval.assign(n, 0.0);
  t.hval.assign(n, 0.0);
  const double two_pi = 2.0 * std::numbers::pi;
  for (int b = 0; b < n; ++b) {
    std::complex<double> gs = 0.0, hs = 0.0;
    for (long x = 1; x < q; ++x) {
      // χ(root^k) = e^{2πik/n}, reduced mod n before scaling to keep the angle small
      double chi_angle = two_pi * mod(field.dlog[x] * b, n) / n;
      std::complex<double> chi = std::polar(1.0, chi_angle);
      gs += chi * std::polar(1.0, two_pi * static_cast<double>(x) / static_cast<double>(q));
      hs += chi;
    }
    t.gval[b] = gs / static_cast<double>(q);
    t.hval[b] = hs / static_cast<double>(q);
  }
  return t;
}

Coefficient evaluate(const Coefficient& c, const GaussTable& table) {
  if (c.mode() == CoeffMode::numeric) return c;
  std::complex<double> acc = 0.0;
  const double u = table.u();
  for (const auto& [mono, poly] : c.symbolic_terms()) {
    std::complex<double> v = poly.evaluate(u);
    for (std::size_t b = 0; b < mono.g.size(); ++b) v *= ipow(table.g(static_cast<int>(b) + 1), mono.g[b]);
    for (std::size_t b = 0; b < mono.h.size(); ++b) v *= ipow(table.h(static_cast<int>(b) + 1), mono.h[b]);
    acc += v;
  }
  return Coefficient::numeric(acc);
}

void GaussWord::add_g(int b, int times) { g[mod(b, n())] += times; }
void GaussWord::add_h(int b, int times) { h[mod(b, n())] += times; }

GaussWord& GaussWord::operator*=(const GaussWord& o) {
  if (o.n() != n()) throw std::invalid_argument("Gauss words of different cover degree");
  for (int b = 0; b < n(); ++b) {
    g[b] += o.g[b];
    h[b] += o.h[b];
  }
  return *this;
}

WeightRing WeightRing::symbolic(int n) {
  if (n < 1) throw std::invalid_argument("cover degree must be positive");
  WeightRing r;
  r.n_ = n;
  return r;
}

WeightRing WeightRing::numeric(const GaussTable& table) {
  WeightRing r;
  r.n_ = table.n;
  r.table_ = table;
  return r;
}

Coefficient WeightRing::u() const {
  if (table_) return Coefficient::numeric(table_->u());
  return Coefficient::symbolic(QPoly::monomial(1));
}

Coefficient WeightRing::g(int b) const {
  if (table_) return Coefficient::numeric(table_->g(b));
  return symbol_g(b, n_);
}

Coefficient WeightRing::h(int b) const {
  if (table_) return Coefficient::numeric(table_->h(b));
  return symbol_h(b, n_);
}

Coefficient WeightRing::evaluate(const GaussWord& w) const {
  if (w.n() != n_) throw std::invalid_argument("Gauss word degree differs from the ring");
  if (table_) {
    std::complex<double> v = 1.0;
    for (int b = 0; b < n_; ++b) v *= ipow(table_->gval[b], w.g[b]) * ipow(table_->hval[b], w.h[b]);
    return Coefficient::numeric(v);
  }
  // Class 0 carries the exact values g(0) = −u, h(0) = 1 − u.
  QPoly p(1);
  const QPoly g0 = QPoly::monomial(1, -1);
  const QPoly h0 = QPoly(1) - QPoly::monomial(1);
  for (int k = 0; k < w.g[0]; ++k) p *= g0;
  for (int k = 0; k < w.h[0]; ++k) p *= h0;
  GaussMonomial m;
  if (n_ > 1) {
    m.g.assign(w.g.begin() + 1, w.g.end());
    m.h.assign(w.h.begin() + 1, w.h.end());
  }
  return Coefficient::symbolic(p, m);
}

Coefficient WeightRing::embed(const Coefficient& c) const {
  if (table_) return metice::evaluate(c, *table_);
  if (c.mode() == CoeffMode::numeric) throw ModeMismatch("numeric value in a symbolic ring");
  return c;
}

}  // namespace metice
