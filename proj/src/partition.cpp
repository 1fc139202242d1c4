#include "metice/partition.hpp"

#include <numeric>
#include <stdexcept>

#include "metice/transfer.hpp"
#include "text.hpp"

namespace metice {

std::vector<int> default_row_vars(int r, Family family) {
  std::vector<int> vars(r + 1);
  for (int k = 0; k <= r; ++k) vars[k] = family == Family::gamma ? r - k : k;
  return vars;
}

SystemSpec make_system(const Boundary& b, Family family, const WeightRing& ring) {
  return SystemSpec{b, family, ring, default_row_vars(b.r, family), b.r + 1};
}

LaurentPoly state_weight(const IceState& s, const SystemSpec& spec) {
  const WeightTable table = weight_table(spec.family, spec.ring.n());
  const int C = s.columns();
  GaussWord word(spec.ring.n());
  Exponents e(spec.vars, 0);
  for (int k = 0; k < s.row_count(); ++k) {
    const RowEdges& edges = s.row_edges(k);
    // plus_right[c] = #(+) on e_0..e_c; minus_left[c] = #(−) on e_{c+1}..e_C.
    std::vector<int> plus_right(C), minus_left(C);
    int acc = 0;
    for (int c = 0; c < C; ++c) plus_right[c] = acc += edges[c] == Spin::plus;
    acc = 0;
    for (int c = C - 1; c >= 0; --c) minus_left[c] = acc += edges[c + 1] == Spin::minus;
    for (int c = 0; c < C; ++c) {
      const WeightEntry* w = table.lookup(s.vertex(k, c));
      if (!w) return LaurentPoly(spec.vars);
      int charge = spec.family == Family::gamma ? plus_right[c] : minus_left[c];
      e[spec.row_vars[k]] += table.accumulate(*w, charge, word);
    }
  }
  return LaurentPoly::monomial(spec.vars, e, spec.ring.evaluate(word));
}

LaurentPoly partition(const SystemSpec& spec, Strategy strategy) {
  if (strategy == Strategy::transfer) return transfer_partition(spec);
  LaurentPoly Z(spec.vars);
  for_each_state(spec.boundary, [&](const IceState& s) { Z += state_weight(s, spec); });
  Z.canonicalize();
  return Z;
}

std::vector<int> row_sums_from_exponents(const Exponents& e, const SystemSpec& spec) {
  const int r = spec.boundary.r;
  std::vector<int> d(r + 2, 0);
  for (int k = r; k >= 0; --k) d[k] = d[k + 1] + e[spec.row_vars[k]];
  return d;
}

WhittakerTable whittaker_table(const SystemSpec& spec, const LaurentPoly& Z) {
  const int r = spec.boundary.r;
  const auto& l = spec.boundary.top_row;
  WhittakerTable table;
  for (const auto& [e, c] : Z.terms()) {
    std::vector<int> d = row_sums_from_exponents(e, spec);
    std::vector<int> k(r);
    for (int i = 1; i <= r; ++i) {
      if (spec.family == Family::gamma)
        k[i - 1] = d[i] - std::accumulate(l.begin() + i, l.end(), 0);
      else
        k[i - 1] = std::accumulate(l.begin(), l.begin() + i, 0) - d[r + 1 - i];
    }
    auto [it, fresh] = table.emplace(k, c);
    if (!fresh) it->second += c;
  }
  std::erase_if(table, [](const auto& kv) {
    const Coefficient& c = kv.second;
    return c.mode() == CoeffMode::numeric ? c.magnitude() <= 1e-12 : c.is_zero();
  });
  return table;
}

WhittakerTable whittaker_table(const SystemSpec& spec, Strategy strategy) {
  return whittaker_table(spec, partition(spec, strategy));
}

// ------------------------------------------------------ Dirichlet series

namespace {

bool compound(const std::string& s) {
  return s.find(" + ") != std::string::npos || s.find(" − ") != std::string::npos;
}

std::string exponent_text(const std::vector<int>& k) {
  std::string out;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] == 0) continue;
    if (!out.empty()) out += "+";
    std::string base = "1−2s" + text::subscript(static_cast<int>(i) + 1);
    out += k[i] == 1 ? base : std::to_string(k[i]) + "(" + base + ")";
  }
  return out;
}

const std::string kMinus = "−";

}  // namespace

std::string dirichlet_series_string(const WhittakerTable& table, int r) {
  std::string out;
  for (const auto& [k, c] : table) {
    if (static_cast<int>(k.size()) != r) throw ArityMismatch("k-vector length differs from rank");
    std::string coeff = to_string(c);
    bool neg = false;
    if (!compound(coeff) && coeff.starts_with(kMinus)) {
      neg = true;
      coeff = coeff.substr(kMinus.size());
    }
    if (compound(coeff)) coeff = "(" + coeff + ")";
    std::string q = exponent_text(k);
    std::string body;
    if (q.empty())
      body = coeff;
    else if (coeff == "1")
      body = "q^{" + q + "}";
    else
      body = coeff + "·q^{" + q + "}";
    if (out.empty())
      out = neg ? kMinus + body : body;
    else
      out += (neg ? " − " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

namespace {

std::vector<int> parse_exponent(std::string_view s, int r) {
  std::vector<int> k(r, 0);
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find('+', pos);
    std::string_view part = s.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    pos = end == std::string_view::npos ? s.size() : end + 1;
    int mult = 1;
    if (part.ends_with(")")) {
      std::size_t open = part.find('(');
      if (open == std::string_view::npos) throw ParseError("unbalanced exponent");
      mult = std::stoi(std::string(part.substr(0, open)));
      part = part.substr(open + 1, part.size() - open - 2);
    }
    const std::string prefix = "1−2s";
    if (!part.starts_with(prefix)) throw ParseError("bad exponent part");
    std::string_view sub = part.substr(prefix.size());
    int index = 0;
    // Subscript digits are three-byte UTF-8 sequences ending in 0x80..0x89.
    if (sub.empty() || sub.size() % 3 != 0) throw ParseError("bad subscript");
    for (std::size_t i = 0; i < sub.size(); i += 3) index = index * 10 + (static_cast<unsigned char>(sub[i + 2]) - 0x80);
    if (index < 1 || index > r) throw ParseError("exponent variable out of range");
    k[index - 1] += mult;
  }
  return k;
}

}  // namespace

WhittakerTable parse_dirichlet_series(std::string_view text, int r) {
  WhittakerTable table;
  if (text == "0") return table;
  // Split at top-level " + " / " − " separators.
  std::vector<std::pair<bool, std::string_view>> terms;
  std::size_t start = 0;
  bool neg = false;
  if (text.starts_with(kMinus)) {
    neg = true;
    start = kMinus.size();
  }
  int depth = 0;
  for (std::size_t i = start; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '(' || ch == '{') ++depth;
    if (ch == ')' || ch == '}') --depth;
    if (depth != 0 || ch != ' ') continue;
    std::string_view rest = text.substr(i);
    bool plus = rest.starts_with(" + ");
    bool minus = rest.starts_with(" " + kMinus + " ");
    if (!plus && !minus) continue;
    terms.emplace_back(neg, text.substr(start, i - start));
    neg = minus;
    i += plus ? 2 : kMinus.size() + 1;
    start = i + 1;
  }
  terms.emplace_back(neg, text.substr(start));

  for (auto [negative, term] : terms) {
    std::vector<int> k(r, 0);
    std::string_view coeff_text = term;
    std::size_t qpos = term.find("q^{");
    if (qpos != std::string_view::npos) {
      if (!term.ends_with("}")) throw ParseError("unterminated exponent");
      k = parse_exponent(term.substr(qpos + 3, term.size() - qpos - 4), r);
      coeff_text = term.substr(0, qpos);
      const std::string dot = "·";
      if (coeff_text.ends_with(dot)) coeff_text.remove_suffix(dot.size());
    }
    Coefficient c;
    if (coeff_text.empty()) {
      c = Coefficient::one(CoeffMode::symbolic);
    } else {
      if (coeff_text.starts_with("(") && coeff_text.ends_with(")"))
        coeff_text = coeff_text.substr(1, coeff_text.size() - 2);
      c = parse_coefficient(coeff_text);
    }
    if (negative) c = -c;
    auto [it, fresh] = table.emplace(k, c);
    if (!fresh) it->second += c;
  }
  return table;
}

}  // namespace metice
