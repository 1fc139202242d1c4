#include "metice/coeffring.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "text.hpp"

namespace metice {

// ----------------------------------------------------------------- QPoly

QPoly::QPoly(long c) {
  if (c != 0) terms_.emplace(0, Rational(c));
}

QPoly QPoly::constant(const Rational& c) { return monomial(0, c); }

QPoly QPoly::monomial(int power, const Rational& c) {
  QPoly p;
  if (power < 0) throw std::invalid_argument("QPoly: negative power of u");
  if (c == 0) return p;
  Rational v = c;
  v.canonicalize();  // callers may pass an unreduced num/den pair
  p.terms_.emplace(power, v);
  return p;
}

Rational QPoly::coefficient(int power) const {
  auto it = terms_.find(power);
  return it == terms_.end() ? Rational(0) : it->second;
}

int QPoly::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

double QPoly::evaluate(double u) const {
  double acc = 0.0;
  for (const auto& [k, c] : terms_) acc += c.get_d() * std::pow(u, k);
  return acc;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (const auto& [k, c] : o.terms_) {
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) { return *this += -o; }

QPoly& QPoly::operator*=(const QPoly& o) {
  std::map<int, Rational> out;
  for (const auto& [a, x] : terms_)
    for (const auto& [b, y] : o.terms_) out[a + b] += x * y;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  terms_ = std::move(out);
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly p = *this;
  for (auto& [k, c] : p.terms_) c = -c;
  return p;
}

// --------------------------------------------------------- GaussMonomial

GaussMonomial GaussMonomial::g_symbol(int b, int power) {
  GaussMonomial m;
  if (b < 1) throw std::invalid_argument("g symbol index must be positive");
  m.g.assign(b, 0);
  m.g[b - 1] = power;
  m.trim();
  return m;
}

GaussMonomial GaussMonomial::h_symbol(int b, int power) {
  GaussMonomial m;
  if (b < 1) throw std::invalid_argument("h symbol index must be positive");
  m.h.assign(b, 0);
  m.h[b - 1] = power;
  m.trim();
  return m;
}

int GaussMonomial::g_exp(int b) const {
  return b >= 1 && b <= static_cast<int>(g.size()) ? g[b - 1] : 0;
}

int GaussMonomial::h_exp(int b) const {
  return b >= 1 && b <= static_cast<int>(h.size()) ? h[b - 1] : 0;
}

void GaussMonomial::trim() {
  while (!g.empty() && g.back() == 0) g.pop_back();
  while (!h.empty() && h.back() == 0) h.pop_back();
}

GaussMonomial GaussMonomial::operator*(const GaussMonomial& o) const {
  GaussMonomial m;
  m.g.assign(std::max(g.size(), o.g.size()), 0);
  m.h.assign(std::max(h.size(), o.h.size()), 0);
  for (std::size_t i = 0; i < g.size(); ++i) m.g[i] += g[i];
  for (std::size_t i = 0; i < o.g.size(); ++i) m.g[i] += o.g[i];
  for (std::size_t i = 0; i < h.size(); ++i) m.h[i] += h[i];
  for (std::size_t i = 0; i < o.h.size(); ++i) m.h[i] += o.h[i];
  m.trim();
  return m;
}

// ----------------------------------------------------------- Coefficient

Coefficient Coefficient::zero(CoeffMode mode) {
  return mode == CoeffMode::symbolic ? symbolic(Symbolic{}) : numeric(0.0);
}

Coefficient Coefficient::one(CoeffMode mode) {
  return mode == CoeffMode::symbolic ? symbolic(QPoly(1)) : numeric(1.0);
}

Coefficient Coefficient::symbolic(const QPoly& p, const GaussMonomial& m) {
  Symbolic terms;
  if (!p.is_zero()) {
    GaussMonomial key = m;
    key.trim();
    terms.emplace(std::move(key), p);
  }
  return symbolic(std::move(terms));
}

Coefficient Coefficient::symbolic(Symbolic terms) {
  Coefficient c;
  c.value_ = std::move(terms);
  c.canonicalize();
  return c;
}

Coefficient Coefficient::numeric(Numeric value) {
  Coefficient c;
  c.value_ = value;
  return c;
}

CoeffMode Coefficient::mode() const {
  return std::holds_alternative<Symbolic>(value_) ? CoeffMode::symbolic : CoeffMode::numeric;
}

bool Coefficient::is_zero() const {
  if (auto* s = std::get_if<Symbolic>(&value_)) return s->empty();
  return std::get<Numeric>(value_) == Numeric(0.0);
}

double Coefficient::magnitude() const {
  if (auto* s = std::get_if<Symbolic>(&value_)) return s->empty() ? 0.0 : 1.0;
  return std::abs(std::get<Numeric>(value_));
}

const Coefficient::Symbolic& Coefficient::symbolic_terms() const {
  if (auto* s = std::get_if<Symbolic>(&value_)) return *s;
  throw ModeMismatch("symbolic terms requested from a numeric coefficient");
}

Coefficient::Numeric Coefficient::numeric_value() const {
  if (auto* v = std::get_if<Numeric>(&value_)) return *v;
  // The symbolic zero is the only symbolic value with an unambiguous number.
  if (std::get<Symbolic>(value_).empty()) return 0.0;
  throw ModeMismatch("numeric value requested from a symbolic coefficient");
}

// A symbolic zero acts as an untyped zero so that default-constructed
// accumulators can absorb either mode.
void Coefficient::check_mode(const Coefficient& o) const {
  if (mode() == o.mode()) return;
  if (mode() == CoeffMode::symbolic && is_zero()) return;
  if (o.mode() == CoeffMode::symbolic && o.is_zero()) return;
  throw ModeMismatch("symbolic and numeric coefficients mixed");
}

void Coefficient::canonicalize() {
  if (auto* s = std::get_if<Symbolic>(&value_))
    std::erase_if(*s, [](const auto& kv) { return kv.second.is_zero(); });
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  check_mode(o);
  if (o.is_zero() && o.mode() == CoeffMode::symbolic) return *this;
  if (is_zero() && mode() == CoeffMode::symbolic) return *this = o;
  if (auto* s = std::get_if<Symbolic>(&value_)) {
    for (const auto& [m, p] : std::get<Symbolic>(o.value_)) {
      auto [it, fresh] = s->emplace(m, p);
      if (!fresh) {
        it->second += p;
        if (it->second.is_zero()) s->erase(it);
      }
    }
  } else {
    std::get<Numeric>(value_) += std::get<Numeric>(o.value_);
  }
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) { return *this += -o; }

Coefficient& Coefficient::operator*=(const Coefficient& o) {
  check_mode(o);
  if (mode() != o.mode()) {
    // One side is the untyped zero: the product is the zero of the other mode.
    return *this = zero(mode() == CoeffMode::numeric ? CoeffMode::numeric : o.mode());
  }
  if (auto* s = std::get_if<Symbolic>(&value_)) {
    Symbolic out;
    for (const auto& [m1, p1] : *s)
      for (const auto& [m2, p2] : std::get<Symbolic>(o.value_)) {
        QPoly prod = p1 * p2;
        auto [it, fresh] = out.emplace(m1 * m2, prod);
        if (!fresh) it->second += prod;
      }
    value_ = std::move(out);
    canonicalize();
  } else {
    std::get<Numeric>(value_) *= std::get<Numeric>(o.value_);
  }
  return *this;
}

Coefficient Coefficient::operator-() const {
  Coefficient c = *this;
  if (auto* s = std::get_if<Symbolic>(&c.value_)) {
    for (auto& [m, p] : *s) p = -p;
  } else {
    std::get<Numeric>(c.value_) = -std::get<Numeric>(c.value_);
  }
  return c;
}

bool operator==(const Coefficient& a, const Coefficient& b) {
  if (a.mode() != b.mode()) return a.is_zero() && b.is_zero();
  return a.value_ == b.value_;
}

Coefficient coeff_add(const Coefficient& a, const Coefficient& b) { return a + b; }
Coefficient coeff_mul(const Coefficient& a, const Coefficient& b) { return a * b; }

namespace {
int mod(int a, int n) { return ((a % n) + n) % n; }
}  // namespace

Coefficient symbol_g(int b, int n) {
  if (n < 1) throw std::invalid_argument("cover degree must be positive");
  int cls = mod(b, n);
  if (cls == 0) return Coefficient::symbolic(QPoly::monomial(1, -1));
  return Coefficient::symbolic(QPoly(1), GaussMonomial::g_symbol(cls));
}

Coefficient symbol_h(int b, int n) {
  if (n < 1) throw std::invalid_argument("cover degree must be positive");
  int cls = mod(b, n);
  if (cls == 0) return Coefficient::symbolic(QPoly(1) - QPoly::monomial(1));
  return Coefficient::symbolic(QPoly(1), GaussMonomial::h_symbol(cls));
}

Coefficient reduce_relations(const Coefficient& c, RelationLevel level, int n) {
  if (c.mode() != CoeffMode::symbolic)
    throw ModeMismatch("relations apply to symbolic coefficients only");
  if (level == RelationLevel::none) return c;
  Coefficient::Symbolic out;
  for (const auto& [mono, poly] : c.symbolic_terms()) {
    if (std::any_of(mono.h.begin(), mono.h.end(), [](int e) { return e > 0; })) continue;
    GaussMonomial m = mono;
    int upow = 0;
    if (level == RelationLevel::h_vanishing_g_pairing) {
      m.g.resize(std::max<std::size_t>(m.g.size(), n > 1 ? n - 1 : 0), 0);
      for (int a = 1; 2 * a <= n; ++a) {
        int b = n - a;
        if (a == b) {
          int k = m.g[a - 1] / 2;
          m.g[a - 1] -= 2 * k;
          upow += k;
        } else {
          int k = std::min(m.g[a - 1], m.g[b - 1]);
          m.g[a - 1] -= k;
          m.g[b - 1] -= k;
          upow += k;
        }
      }
      m.trim();
    }
    QPoly p = poly * QPoly::monomial(upow);
    auto [it, fresh] = out.emplace(m, p);
    if (!fresh) it->second += p;
  }
  return Coefficient::symbolic(std::move(out));
}

// ------------------------------------------------------------ rendering

namespace {

// Renders one product term  r·u^k·m  without its sign.  Returns "1" for the unit.
std::string term_body(const Rational& absval, int upow, const GaussMonomial& m) {
  std::vector<std::string> factors;
  if (absval != 1) factors.push_back(absval.get_str());
  if (upow == 1) factors.emplace_back("u");
  if (upow > 1) factors.push_back("u^" + std::to_string(upow));
  auto push_symbols = [&](char name, const std::vector<int>& exps) {
    for (std::size_t b = 0; b < exps.size(); ++b) {
      if (exps[b] == 0) continue;
      std::string s = std::string(1, name) + "(" + std::to_string(b + 1) + ")";
      if (exps[b] > 1) s += "^" + std::to_string(exps[b]);
      factors.push_back(s);
    }
  };
  push_symbols('g', m.g);
  push_symbols('h', m.h);
  if (factors.empty()) return "1";
  std::string out = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) out += "·" + factors[i];
  return out;
}

std::string join_signed(const std::vector<std::pair<bool, std::string>>& parts) {
  if (parts.empty()) return "0";
  std::string out = parts[0].first ? "−" + parts[0].second : parts[0].second;
  for (std::size_t i = 1; i < parts.size(); ++i)
    out += (parts[i].first ? " − " : " + ") + parts[i].second;
  return out;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string to_string(const QPoly& p) {
  std::vector<std::pair<bool, std::string>> parts;
  for (const auto& [k, c] : p.terms())
    parts.emplace_back(c < 0, term_body(abs(c), k, GaussMonomial::one()));
  return join_signed(parts);
}

std::string to_string(const Coefficient& c) {
  if (c.mode() == CoeffMode::numeric) {
    auto v = c.numeric_value();
    return "{" + format_double(v.real()) + "," + format_double(v.imag()) + "}";
  }
  std::vector<std::pair<bool, std::string>> parts;
  for (const auto& [m, p] : c.symbolic_terms())
    for (const auto& [k, r] : p.terms()) parts.emplace_back(r < 0, term_body(abs(r), k, m));
  return join_signed(parts);
}

// --------------------------------------------------------------- parsing

namespace {

class CoeffParser {
 public:
  explicit CoeffParser(std::string_view s) : s_(s) {}

  Coefficient parse() {
    skip_ws();
    Coefficient c = peek('{') ? parse_numeric() : parse_sum();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return c;
  }

 private:
  Coefficient parse_numeric() {
    expect("{");
    double re = parse_double();
    expect(",");
    double im = parse_double();
    expect("}");
    return Coefficient::numeric({re, im});
  }

  double parse_double() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::string_view("0123456789+-.eEinfa").find(s_[pos_]) != std::string_view::npos)
      ++pos_;
    std::string tok(s_.substr(start, pos_ - start));
    try {
      std::size_t used = 0;
      double v = std::stod(tok, &used);
      if (used != tok.size()) fail("bad number");
      return v;
    } catch (const std::logic_error&) {
      fail("bad number");
    }
  }

  Coefficient parse_sum() {
    Coefficient acc = Coefficient::zero(CoeffMode::symbolic);
    bool neg = consume_sign();
    if (consume("0")) {
      skip_ws();
      if (pos_ == s_.size()) return acc;
      --pos_;
    }
    while (true) {
      Coefficient t = parse_term();
      acc += neg ? -t : t;
      skip_ws();
      if (pos_ == s_.size()) break;
      if (!at_sign()) fail("expected + or −");
      neg = consume_sign();
    }
    return acc;
  }

  Coefficient parse_term() {
    Rational r = 1;
    int upow = 0;
    GaussMonomial m;
    do {
      skip_ws();
      if (peek('u')) {
        ++pos_;
        upow += parse_power();
      } else if (peek('g') || peek('h')) {
        char name = s_[pos_++];
        expect("(");
        int b = static_cast<int>(parse_int());
        expect(")");
        int e = parse_power();
        m = m * (name == 'g' ? GaussMonomial::g_symbol(b, e) : GaussMonomial::h_symbol(b, e));
      } else {
        mpz_class num(std::to_string(parse_int()));
        mpz_class den = 1;
        if (consume("/")) den = mpz_class(std::to_string(parse_int()));
        if (den == 0) fail("zero denominator");
        r *= Rational(num, den);
        r.canonicalize();
      }
      skip_ws();
    } while (consume("·") || consume("*"));
    return Coefficient::symbolic(QPoly::monomial(upow, r), m);
  }

  int parse_power() {
    if (!consume("^")) return 1;
    return static_cast<int>(parse_int());
  }

  long parse_int() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  bool at_sign() {
    skip_ws();
    return peek('+') || peek('-') || s_.substr(pos_).starts_with("−");
  }

  bool consume_sign() {
    skip_ws();
    if (consume("+")) return false;
    return consume("-") || consume("−");
  }

  bool peek(char ch) const { return pos_ < s_.size() && s_[pos_] == ch; }

  bool consume(std::string_view tok) {
    skip_ws();
    if (s_.substr(pos_).starts_with(tok)) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!consume(tok)) fail("expected '" + std::string(tok) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("coefficient parse error at " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Coefficient parse_coefficient(std::string_view text) { return CoeffParser(text).parse(); }

// ----------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::monomial(int vars, Exponents e, const Coefficient& c) {
  if (static_cast<int>(e.size()) != vars) throw ArityMismatch("exponent vector length");
  LaurentPoly p(vars);
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::constant(int vars, const Coefficient& c) {
  return monomial(vars, Exponents(vars, 0), c);
}

LaurentPoly LaurentPoly::variable(int vars, int index, CoeffMode mode) {
  Exponents e(vars, 0);
  e.at(index) = 1;
  return monomial(vars, std::move(e), Coefficient::one(mode));
}

Coefficient LaurentPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Coefficient{} : it->second;
}

void LaurentPoly::add_term(const Exponents& e, const Coefficient& c) {
  if (static_cast<int>(e.size()) != vars_) throw ArityMismatch("exponent vector length");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void LaurentPoly::add_scaled(const LaurentPoly& p, const Coefficient& c, const Exponents& shift) {
  check_arity(p);
  if (static_cast<int>(shift.size()) != vars_) throw ArityMismatch("shift length");
  Exponents e(vars_);
  for (const auto& [pe, pc] : p.terms_) {
    for (int k = 0; k < vars_; ++k) e[k] = pe[k] + shift[k];
    add_term(e, pc * c);
  }
}

void LaurentPoly::canonicalize() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
  double maxmag = 0.0;
  bool numeric = false;
  for (const auto& [e, c] : terms_)
    if (c.mode() == CoeffMode::numeric) {
      numeric = true;
      maxmag = std::max(maxmag, c.magnitude());
    }
  if (numeric) {
    const double cut = 1e-14 * maxmag;
    std::erase_if(terms_, [cut](const auto& kv) { return kv.second.magnitude() < cut; });
  }
}

void LaurentPoly::check_arity(const LaurentPoly& o) const {
  if (o.vars_ != vars_) throw ArityMismatch("Laurent polynomials in different variable counts");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_arity(b);
  LaurentPoly out(a.vars_);
  for (const auto& [e, c] : b.terms_) out.add_scaled(a, c, e);
  out.canonicalize();
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Permutation adjacent_transposition(int vars, int i) {
  if (i < 1 || i >= vars) throw std::out_of_range("transposition index");
  Permutation p(vars);
  for (int k = 0; k < vars; ++k) p[k] = k;
  std::swap(p[i - 1], p[i]);
  return p;
}

LaurentPoly poly_add(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly out = p + q;
  out.canonicalize();
  return out;
}

LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly poly_permute_vars(const LaurentPoly& p, const Permutation& sigma) {
  if (static_cast<int>(sigma.size()) != p.vars()) throw ArityMismatch("permutation length");
  std::vector<bool> seen(sigma.size(), false);
  for (int s : sigma) {
    if (s < 0 || s >= p.vars() || seen[s]) throw std::invalid_argument("not a permutation");
    seen[s] = true;
  }
  LaurentPoly out(p.vars());
  Exponents f(p.vars());
  for (const auto& [e, c] : p.terms()) {
    for (int k = 0; k < p.vars(); ++k) f[sigma[k]] = e[k];
    out.add_term(f, c);
  }
  return out;
}

bool poly_equal(const LaurentPoly& p, const LaurentPoly& q, double tol) {
  if (p.vars() != q.vars()) return false;
  LaurentPoly d = p - q;
  bool numeric = false;
  double maxmag = 0.0;
  for (const auto* side : {&p, &q})
    for (const auto& [e, c] : side->terms()) {
      if (c.mode() == CoeffMode::numeric) numeric = true;
      maxmag = std::max(maxmag, c.magnitude());
    }
  if (!numeric) return d.is_zero();
  double worst = 0.0;
  for (const auto& [e, c] : d.terms()) worst = std::max(worst, c.magnitude());
  return worst <= tol * (1.0 + maxmag);
}

std::string to_string(const LaurentPoly& p) {
  std::vector<std::pair<bool, std::string>> parts;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (int k = 0; k < p.vars(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "·";
      mono += "z" + text::subscript(k + 1);
      if (e[k] != 1) mono += text::superscript(e[k]);
    }
    std::string coeff = to_string(c);
    bool neg = false;
    if (c.mode() == CoeffMode::symbolic && coeff.find(" + ") == std::string::npos &&
        coeff.find(" − ") == std::string::npos && coeff.starts_with("−")) {
      neg = true;
      coeff = coeff.substr(std::string("−").size());
    }
    bool compound = coeff.find(" + ") != std::string::npos || coeff.find(" − ") != std::string::npos;
    std::string body;
    if (mono.empty()) {
      body = compound ? "(" + coeff + ")" : coeff;
      if (compound && p.terms().size() == 1) body = coeff;
    } else if (coeff == "1") {
      body = mono;
    } else {
      body = (compound ? "(" + coeff + ")" : coeff) + "·" + mono;
    }
    parts.emplace_back(neg, body);
  }
  return join_signed(parts);
}

}  // namespace metice
