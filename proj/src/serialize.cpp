#include "metice/serialize.hpp"

#include <stdexcept>

namespace metice {

namespace {

json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class integer_from_json(const json& j) {
  if (j.is_string()) return mpz_class(j.get<std::string>());
  return mpz_class(j.get<long>());
}

std::vector<std::vector<int>> set_rows(const std::vector<ColumnSet>& layers) {
  std::vector<std::vector<int>> out;
  for (const auto& l : layers) out.push_back(l.columns());
  return out;
}

}  // namespace

json coeff_to_json(const Coefficient& c) {
  if (c.mode() == CoeffMode::numeric) {
    auto v = c.numeric_value();
    return json::array({v.real(), v.imag()});
  }
  json terms = json::array();
  for (const auto& [mono, poly] : c.symbolic_terms()) {
    json u = json::array();
    for (int k = 0; k <= poly.degree(); ++k) {
      Rational r = poly.coefficient(k);
      u.push_back(json::array({integer_to_json(r.get_num()), integer_to_json(r.get_den())}));
    }
    terms.push_back({{"g", mono.g}, {"h", mono.h}, {"u", u}});
  }
  return {{"terms", terms}};
}

Coefficient coeff_from_json(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw std::invalid_argument("numeric coefficient must be [re, im]");
    return Coefficient::numeric({j[0].get<double>(), j[1].get<double>()});
  }
  Coefficient::Symbolic terms;
  for (const auto& t : j.at("terms")) {
    GaussMonomial m{t.at("g").get<std::vector<int>>(), t.at("h").get<std::vector<int>>()};
    m.trim();
    QPoly p;
    int k = 0;
    for (const auto& r : t.at("u")) {
      Rational q(integer_from_json(r.at(0)), integer_from_json(r.at(1)));
      q.canonicalize();
      p += QPoly::monomial(k++, q);
    }
    terms[m] += p;
  }
  return Coefficient::symbolic(std::move(terms));
}

json poly_to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exponents", e}, {"coeff", coeff_to_json(c)}});
  return {{"vars", p.vars()}, {"terms", terms}};
}

LaurentPoly poly_from_json(const json& j) {
  LaurentPoly p(j.at("vars").get<int>());
  for (const auto& t : j.at("terms")) p.add_term(t.at("exponents").get<Exponents>(), coeff_from_json(t.at("coeff")));
  p.canonicalize();
  return p;
}

json state_to_json(const IceState& s, Family row_order) {
  return {{"columns", s.columns()}, {"layers", set_rows(s.layers())}, {"rowOrder", to_string(row_order)}};
}

IceState state_from_json(const json& j) {
  const int C = j.at("columns").get<int>();
  std::vector<ColumnSet> layers;
  for (const auto& l : j.at("layers")) layers.push_back(ColumnSet::from_columns(l.get<std::vector<int>>()));
  if (layers.size() < 2) throw std::invalid_argument("a state needs at least two layers");
  std::vector<RowEdges> rows;
  for (std::size_t k = 0; k + 1 < layers.size(); ++k) {
    auto e = fill_row(layers[k], layers[k + 1], C);
    if (!e) throw std::invalid_argument("inadmissible state in JSON");
    rows.push_back(std::move(*e));
  }
  return IceState(C, std::move(layers), std::move(rows));
}

json pattern_to_json(const GTPattern& T) { return {{"rows", T.rows}}; }

GTPattern pattern_from_json(const json& j) { return {j.at("rows").get<std::vector<std::vector<int>>>()}; }

json short_pattern_to_json(const ShortPattern& t) { return {{"l", t.l}, {"a", t.a}, {"m", t.m}}; }

ShortPattern short_pattern_from_json(const json& j) {
  return {j.at("l").get<std::vector<int>>(), j.at("a").get<std::vector<int>>(), j.at("m").get<std::vector<int>>()};
}

json whittaker_to_json(const WhittakerTable& t) {
  json entries = json::array();
  for (const auto& [k, c] : t) entries.push_back({{"k", k}, {"coeff", coeff_to_json(c)}});
  return {{"entries", entries}};
}

WhittakerTable whittaker_from_json(const json& j) {
  WhittakerTable t;
  for (const auto& e : j.at("entries")) t[e.at("k").get<std::vector<int>>()] += coeff_from_json(e.at("coeff"));
  return t;
}

json gauss_to_json(const GaussTable& t) {
  json g = json::array(), h = json::array();
  for (int b = 0; b < t.n; ++b) {
    g.push_back(json::array({t.gval[b].real(), t.gval[b].imag()}));
    h.push_back(json::array({t.hval[b].real(), t.hval[b].imag()}));
  }
  return {{"n", t.n}, {"q", t.q}, {"root", t.root}, {"g", g}, {"h", h}};
}

}  // namespace metice
