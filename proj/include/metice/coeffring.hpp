// Coefficient ring for lattice-model weights.
//
// Symbolic coefficients are finite sums  Σ p_m(u) · m  where u = 1/q is kept
// formal, p_m ∈ ℚ[u], and m ranges over monomials in the formal Gauss symbols
// g_1..g_{n-1}, h_1..h_{n-1}.  Numeric coefficients are complex doubles.  A
// computation uses one mode throughout; mixing modes throws ModeMismatch.

#pragma once

#include <complex>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace metice {

using Rational = mpq_class;

struct ModeMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

struct ArityMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Polynomial in u = q⁻¹ with rational coefficients.  No zero terms are stored.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c);  // NOLINT(google-explicit-constructor)
  static QPoly constant(const Rational& c);
  static QPoly monomial(int power, const Rational& c = 1);

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Rational>& terms() const { return terms_; }
  Rational coefficient(int power) const;
  int degree() const;  // -1 for the zero polynomial
  double evaluate(double u) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  QPoly operator-() const;
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.terms_ == b.terms_; }

 private:
  std::map<int, Rational> terms_;
};

/// Monomial in the Gauss symbols.  g[b-1] is the exponent of g_b; trailing
/// zeros are trimmed so the unit monomial has empty vectors for every n.
struct GaussMonomial {
  std::vector<int> g;
  std::vector<int> h;

  static GaussMonomial one() { return {}; }
  static GaussMonomial g_symbol(int b, int power = 1);
  static GaussMonomial h_symbol(int b, int power = 1);

  bool is_one() const { return g.empty() && h.empty(); }
  int g_exp(int b) const;
  int h_exp(int b) const;
  void trim();
  GaussMonomial operator*(const GaussMonomial& o) const;
  auto operator<=>(const GaussMonomial&) const = default;
};

enum class CoeffMode { symbolic, numeric };

class Coefficient {
 public:
  using Symbolic = std::map<GaussMonomial, QPoly>;
  using Numeric = std::complex<double>;

  Coefficient() = default;  // symbolic zero
  static Coefficient zero(CoeffMode mode);
  static Coefficient one(CoeffMode mode);
  static Coefficient symbolic(const QPoly& p, const GaussMonomial& m = GaussMonomial::one());
  static Coefficient symbolic(Symbolic terms);
  static Coefficient numeric(Numeric value);

  CoeffMode mode() const;
  bool is_symbolic() const { return mode() == CoeffMode::symbolic; }
  /// Exact test: symbolic canonical zero, or numeric value exactly 0.
  bool is_zero() const;
  double magnitude() const;  // numeric |c|; symbolic: 0 if zero else 1

  const Symbolic& symbolic_terms() const;
  Numeric numeric_value() const;

  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const Coefficient& o);
  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  Coefficient operator-() const;
  friend bool operator==(const Coefficient& a, const Coefficient& b);

 private:
  void check_mode(const Coefficient& o) const;
  void canonicalize();
  std::variant<Symbolic, Numeric> value_;
};

Coefficient coeff_add(const Coefficient& a, const Coefficient& b);
Coefficient coeff_mul(const Coefficient& a, const Coefficient& b);

/// g(b) for an n-fold cover: the exact value −u when n | b, else the symbol g_{b mod n}.
Coefficient symbol_g(int b, int n);
/// h(b): 1 − u when n | b, else the symbol h_{b mod n}.
Coefficient symbol_h(int b, int n);

enum class RelationLevel { none, h_vanishing, h_vanishing_g_pairing };

/// Applies Gauss-sum relations valid when 2n | q − 1:
///   h_vanishing:  h_a = 0 for n ∤ a;
///   g_pairing:    g_a · g_{n−a} = u.
Coefficient reduce_relations(const Coefficient& c, RelationLevel level, int n);

std::string to_string(const QPoly& p);
std::string to_string(const Coefficient& c);
/// Inverse of to_string for coefficients (symbolic text or "{re,im}").
Coefficient parse_coefficient(std::string_view text);

// ---------------------------------------------------------------------------

using Exponents = std::vector<int>;

/// Multivariate Laurent polynomial in z_1..z_vars with Coefficient values.
/// Numeric mode drops terms below 1e-14 · max|c| on canonicalize().
class LaurentPoly {
 public:
  explicit LaurentPoly(int vars = 0) : vars_(vars) {}
  static LaurentPoly monomial(int vars, Exponents e, const Coefficient& c);
  static LaurentPoly constant(int vars, const Coefficient& c);
  /// z_{index+1} with unit coefficient.
  static LaurentPoly variable(int vars, int index, CoeffMode mode);

  int vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Exponents, Coefficient>& terms() const { return terms_; }
  Coefficient coefficient(const Exponents& e) const;

  /// Adds c·z^e; exact zeros are removed, no tolerance pruning.
  void add_term(const Exponents& e, const Coefficient& c);
  /// this += c · z^shift · p
  void add_scaled(const LaurentPoly& p, const Coefficient& c, const Exponents& shift);
  void canonicalize();

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  /// Applies f to every coefficient, dropping results that are zero.
  template <class F>
  LaurentPoly map_coefficients(F&& f) const {
    LaurentPoly out(vars_);
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    out.canonicalize();
    return out;
  }

 private:
  void check_arity(const LaurentPoly& o) const;
  int vars_;
  std::map<Exponents, Coefficient> terms_;
};

using Permutation = std::vector<int>;  // perm[k] = image of variable k (0-based)

Permutation adjacent_transposition(int vars, int i);  // σ_i, 1 ≤ i < vars

LaurentPoly poly_add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q);
/// z ↦ σ(z): the term c·∏ z_k^{e_k} becomes c·∏ z_{σ(k)}^{e_k}.
LaurentPoly poly_permute_vars(const LaurentPoly& p, const Permutation& sigma);
/// Symbolic: exact equality.  Numeric: max |Δc| ≤ tol·(1 + max|c|).
bool poly_equal(const LaurentPoly& p, const LaurentPoly& q, double tol = 1e-9);

std::string to_string(const LaurentPoly& p);

}  // namespace metice
