#include "metice/cli.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "metice/partition.hpp"
#include "metice/patterns.hpp"
#include "metice/serialize.hpp"
#include "metice/transfer.hpp"
#include "metice/weyl.hpp"
#include "metice/ybe.hpp"

namespace metice {

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ConfigError("not an integer list: " + text);
    }
  }
  return out;
}

// Symbolic values are compared modulo the Gauss-sum relations for degree n.
bool coeff_close(const Coefficient& a, const Coefficient& b, double tol, int n = 1) {
  if (a.mode() == CoeffMode::symbolic && b.mode() == CoeffMode::symbolic)
    return reduce_relations(a, RelationLevel::h_vanishing_g_pairing, n) ==
           reduce_relations(b, RelationLevel::h_vanishing_g_pairing, n);
  auto x = a.numeric_value(), y = b.numeric_value();
  return std::abs(x - y) <= tol * (1.0 + std::max(std::abs(x), std::abs(y)));
}

json ring_params(const WeightRing& ring) {
  json p = {{"n", ring.n()}, {"coeff", ring.mode() == CoeffMode::symbolic ? "symbolic" : "numeric"}};
  if (ring.table()) p["q"] = ring.table()->q;
  return p;
}

json boundary_params(const Boundary& b) { return {{"rank", b.r}, {"lambda", b.lambda}}; }

json report(const std::string& check, json params, bool pass) {
  return {{"check", check}, {"params", std::move(params)}, {"pass", pass}};
}

// ------------------------------------------------------------- verify

json verify_statement_a(const RunConfig& cfg, RelationLevel level) {
  const Boundary b = cfg.boundary();
  const WeightRing ring = cfg.ring();
  const Strategy strategy = cfg.strategy == "enumerate" ? Strategy::enumerate : Strategy::transfer;
  WhittakerTable tg = whittaker_table(make_system(b, Family::gamma, ring), strategy);
  WhittakerTable td = whittaker_table(make_system(b, Family::delta, ring), strategy);
  json params = boundary_params(b);
  params.update(ring_params(ring));
  if (ring.mode() == CoeffMode::symbolic) {
    static const char* const names[] = {"none", "h-vanishing", "h-vanishing+g-pairing"};
    params["level"] = names[static_cast<int>(level)];
    for (auto* t : {&tg, &td}) {
      for (auto& [k, c] : *t) c = reduce_relations(c, level, ring.n());
      std::erase_if(*t, [](const auto& kv) { return kv.second.is_zero(); });
    }
  }
  std::set<std::vector<int>> keys;
  for (const auto& [k, c] : tg) keys.insert(k);
  for (const auto& [k, c] : td) keys.insert(k);
  for (const auto& k : keys) {
    Coefficient a = tg.count(k) ? tg.at(k) : ring.zero();
    Coefficient d = td.count(k) ? td.at(k) : ring.zero();
    const bool same = ring.mode() == CoeffMode::symbolic ? a == d : coeff_close(a, d, 1e-9);
    if (!same) {
      json r = report("statement-a", params, false);
      r["counterexample"] = {{"k", k}, {"gamma", to_string(a)}, {"delta", to_string(d)}};
      return r;
    }
  }
  json r = report("statement-a", params, true);
  r["entries"] = keys.size();
  return r;
}

json verify_prop_matching(const RunConfig& cfg) {
  const Boundary b = cfg.boundary();
  const WeightRing ring = cfg.ring();
  json params = boundary_params(b);
  params.update(ring_params(ring));
  std::size_t states = 0;
  std::optional<json> counterexample;
  for (Family family : {Family::gamma, Family::delta}) {
    const SystemSpec spec = make_system(b, family, ring);
    for_each_state(b, [&](const IceState& s) {
      if (counterexample) return;
      ++states;
      GTPattern T = state_to_pattern(s);
      if (!(pattern_to_state(T, b).layers() == s.layers())) {
        counterexample = json{{"family", to_string(family)}, {"pattern", pattern_to_json(T)}, {"reason", "round trip"}};
        return;
      }
      // G(T) · ∏ (row parameter)^{d_k − d_{k+1}}
      Exponents e(spec.vars, 0);
      for (int k = 0; k <= b.r; ++k)
        e[spec.row_vars[k]] += T.row_sum(k) - (k < b.r ? T.row_sum(k + 1) : 0);
      Coefficient G = family == Family::gamma ? gamma_weight(T, ring) : delta_weight(T, ring);
      LaurentPoly expected = LaurentPoly::monomial(spec.vars, e, G);
      LaurentPoly got = state_weight(s, spec);
      if (!poly_equal(expected, got, ring.mode() == CoeffMode::numeric ? 1e-12 : 0.0))
        counterexample = json{{"family", to_string(family)},
                              {"pattern", pattern_to_json(T)},
                              {"expected", to_string(expected)},
                              {"state_weight", to_string(got)}};
    });
  }
  json r = report("prop-matching", params, !counterexample);
  r["states"] = states;
  if (counterexample) r["counterexample"] = *counterexample;
  return r;
}

json verify_ybe_n1() {
  const RVertexTable R = rmatrix_n1(2, 0, 1);
  const VertexTable S = gamma_vertex_table_n1(2, 1);
  const VertexTable T = gamma_vertex_table_n1(2, 0);
  YbeReport main = ybe_check(R, S, T);

  RVertexTable zero;
  for (const auto& [k, p] : R) zero[k] = LaurentPoly(2);
  int zero_failures = ybe_check(zero, S, T).failures;
  // The all-zero R satisfies the equation trivially; it serves as a control
  // only for the checker's plumbing.  The perturbations are the real test.
  json perturbed = json::array();
  bool controls_fail = true;
  for (const auto& [k, p] : R) {
    RVertexTable bumped = R;
    bumped[k] += LaurentPoly::constant(2, Coefficient::one(CoeffMode::symbolic));
    int f = ybe_check(bumped, S, T).failures;
    perturbed.push_back({{"entry", std::string{spin_char(k[0]), spin_char(k[1]), spin_char(k[2]), spin_char(k[3])}},
                         {"failures", f}});
    controls_fail = controls_fail && f > 0;
  }
  json r = report("ybe-n1", json::object(), main.pass() && controls_fail);
  r["boundaries"] = main.boundaries.size();
  r["failures"] = main.failures;
  r["controls"] = {{"zero_r_failures", zero_failures}, {"perturbed", perturbed}};
  for (const auto& br : main.boundaries)
    if (!br.pass) {
      std::string spins;
      for (Spin s : br.boundary) spins += spin_char(s);
      r["counterexample"] = {{"boundary", spins}, {"lhs", to_string(br.lhs)}, {"rhs", to_string(br.rhs)}};
      break;
    }
  return r;
}

json verify_commute_rows(const RunConfig& cfg, int only_i) {
  const Boundary b = cfg.boundary();
  const WeightRing ring = cfg.ring();
  if (ring.n() != 1) throw ConfigError("commute-rows needs --n 1");
  const SystemSpec spec = make_system(b, cfg.family, ring);
  json params = boundary_params(b);
  params.update(ring_params(ring));
  params["ice"] = to_string(cfg.family);
  json results = json::array();
  bool pass = true;
  for (int i = 1; i <= b.r; ++i) {
    if (only_i > 0 && i != only_i) continue;
    RowSwapReport c = commutation_check(spec, i);
    RowSwapReport t = train_argument_row_swap(spec, i);
    results.push_back({{"i", i}, {"commutation", c.pass}, {"train", t.pass}});
    if (!(c.pass && t.pass) && pass) {
      pass = false;
      params["counterexample_i"] = i;
    }
  }
  json r = report("commute-rows", params, pass);
  r["results"] = results;
  return r;
}

TwoRowBoundary random_two_row(std::mt19937_64& rng, int max_width) {
  std::uniform_int_distribution<int> width(2, max_width);
  const int C = width(rng);
  std::uniform_int_distribution<int> count(2, C);
  const int k = count(rng);
  std::vector<int> cols(C);
  std::iota(cols.begin(), cols.end(), 0);
  std::shuffle(cols.begin(), cols.end(), rng);
  std::vector<int> top(cols.begin(), cols.begin() + k);
  std::shuffle(cols.begin(), cols.end(), rng);
  std::vector<int> bottom(cols.begin(), cols.begin() + (k - 2));
  return {C, ColumnSet::from_columns(top), ColumnSet::from_columns(bottom)};
}

json verify_two_row(const RunConfig& cfg, const std::string& l, const std::string& m, int count) {
  const WeightRing ring = cfg.ring();
  json params = ring_params(ring);
  std::vector<TwoRowBoundary> cases;
  if (!l.empty()) {
    cases.push_back(TwoRowBoundary::from_rows(parse_list(l), parse_list(m)));
    params["l"] = parse_list(l);
    params["m"] = parse_list(m);
  } else {
    cases.push_back(TwoRowBoundary::from_rows({6, 4, 1, 0}, {4, 3}));
    std::mt19937_64 rng(cfg.seed);
    for (int c = 0; c < count; ++c) cases.push_back(random_two_row(rng, 8));
    params["seed"] = cfg.seed;
    params["random_cases"] = count;
  }
  int nonzero = 0;
  for (const auto& b : cases) {
    if (b.bottom.size() + 2 != b.top.size()) throw ConfigError("l must have exactly two more entries than m");
    AbbaReport rep = theorem_abba_check(b, ring);
    nonzero += !rep.gamma_delta.is_zero();
    if (!rep.pass) {
      json r = report("two-row", params, false);
      r["counterexample"] = {{"columns", b.C},
                             {"top", b.top.columns()},
                             {"bottom", b.bottom.columns()},
                             {"gamma_delta", poly_to_json(rep.gamma_delta)},
                             {"delta_gamma", poly_to_json(rep.delta_gamma)}};
      return r;
    }
  }
  json r = report("two-row", params, true);
  r["cases"] = cases.size();
  r["nonzero"] = nonzero;
  if (cases.size() == 1) {
    AbbaReport rep = theorem_abba_check(cases[0], ring);
    r["poly"] = poly_to_json(rep.gamma_delta);
    r["text"] = to_string(rep.gamma_delta);
  }
  return r;
}

json verify_statement_b(const RunConfig& cfg, const std::string& ls, const std::string& ms,
                        std::optional<int> only_k, QrFormula formula) {
  const WeightRing ring = cfg.ring();
  const std::vector<int> l = ls.empty() ? std::vector<int>{6, 4, 1, 0} : parse_list(ls);
  const std::vector<int> m = ls.empty() ? std::vector<int>{4, 3} : parse_list(ms);
  if (l.size() != m.size() + 2) throw ConfigError("l must have exactly two more entries than m");
  json params = ring_params(ring);
  params["l"] = l;
  params["m"] = m;
  params["qr"] = formula == QrFormula::printed ? "printed" : "reflection";
  std::vector<int> ks;
  if (only_k) {
    ks.push_back(*only_k);
  } else {
    std::set<int> sums;
    for (const auto& a : middle_rows(l, m)) sums.insert(std::accumulate(a.begin(), a.end(), 0));
    ks.assign(sums.begin(), sums.end());
  }
  json results = json::array();
  for (int k : ks) {
    StatementBSums s = statement_b_sums(l, m, k, ring, formula);
    StatementBReport ice = statement_b_check(l, m, k, ring);
    bool ok = coeff_close(s.gamma_delta, s.delta_gamma, 1e-9, ring.n()) && ice.pass &&
              coeff_close(s.gamma_delta, ice.gamma_delta, 1e-9, ring.n());
    results.push_back({{"k", k}, {"pass", ok}});
    if (!ok) {
      json r = report("statement-b", params, false);
      r["counterexample"] = {{"k", k},
                             {"gamma_delta_patterns", to_string(s.gamma_delta)},
                             {"delta_gamma_patterns", to_string(s.delta_gamma)},
                             {"gamma_delta_ice", to_string(ice.gamma_delta)},
                             {"delta_gamma_ice", to_string(ice.delta_gamma)}};
      return r;
    }
  }
  json r = report("statement-b", params, true);
  r["results"] = results;
  return r;
}

json verify_functional_eq(const RunConfig& cfg, int only_i, int only_j) {
  const Boundary b = cfg.boundary();
  const WeightRing ring = cfg.ring();
  const SystemSpec spec = make_system(b, cfg.family, ring);
  const LaurentPoly Z = partition(spec);
  json params = boundary_params(b);
  params.update(ring_params(ring));
  params["ice"] = to_string(cfg.family);
  json results = json::array();
  for (int i = 1; i <= b.r; ++i) {
    if (only_i > 0 && i != only_i) continue;
    for (int j = 0; j < ring.n(); ++j) {
      if (only_j >= 0 && j != only_j % ring.n()) continue;
      FunctionalEqReport rep = functional_eq_check(Z, i, j, ring);
      json entry = {{"i", i}, {"j", j}, {"pass", rep.pass}};
      if (only_i > 0 && only_j >= 0) {
        entry["lhs"] = to_string(rep.lhs);
        entry["rhs"] = to_string(rep.rhs);
      }
      results.push_back(entry);
      if (!rep.pass) {
        json r = report("functional-eq", params, false);
        r["counterexample"] = {{"i", i}, {"j", j}, {"lhs", poly_to_json(rep.lhs)}, {"rhs", poly_to_json(rep.rhs)}};
        return r;
      }
    }
  }
  json r = report("functional-eq", params, true);
  r["results"] = results;
  return r;
}

json verify_charges(const RunConfig& cfg) {
  const Boundary b = cfg.boundary();
  const int n = cfg.n;
  json params = boundary_params(b);
  params["n"] = n;
  std::optional<json> bad;
  std::size_t states = 0;
  const SystemSpec spec = make_system(b, Family::gamma, WeightRing::symbolic(1));
  for_each_state(b, [&](const IceState& s) {
    if (bad) return;
    ++states;
    ChargeLabeling gl = charge_labels(s, Family::gamma, n);
    ChargeLabeling dl = charge_labels(s, Family::delta, n);
    const Exponents e = state_weight(s, spec).terms().begin()->first;
    for (int k = 0; k <= b.r && !bad; ++k) {
      for (int c = 0; c < b.C; ++c)
        if (gl.rows[k][c].charge != charge_gamma(s, k, c, n) || dl.rows[k][c + 1].charge != charge_delta(s, k, c, n))
          bad = json{{"row", k}, {"col", c}, {"reason", "edge label differs from vertex charge"}};
      if (bad) break;
      if (gl.rows[k][0].count != 0 || dl.rows[k][b.C].count != 0)
        bad = json{{"row", k}, {"reason", "boundary label is not 0"}};
      else if (e[spec.row_vars[k]] + gl.rows[k][b.C].count != b.C)
        bad = json{{"row", k}, {"reason", "z exponent plus left charge differs from the column count"}};
    }
    if (bad) (*bad)["pattern"] = pattern_to_json(state_to_pattern(s));
  });
  json r = report("charges", params, !bad);
  r["states"] = states;
  if (bad) r["counterexample"] = *bad;
  return r;
}

void emit(const json& j, const RunConfig& cfg, std::ostream& out) {
  if (cfg.output.empty()) {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(cfg.output);
  if (!f) throw ConfigError("cannot write " + cfg.output);
  f << j.dump(2) << "\n";
}

Family parse_family(const std::string& s) {
  if (s == "gamma") return Family::gamma;
  if (s == "delta") return Family::delta;
  throw ConfigError("--ice must be gamma or delta");
}

}  // namespace

WeightRing RunConfig::ring() const {
  if (n < 1) throw ConfigError("--n must be positive");
  std::string mode = coeff == "auto" ? (q ? "numeric" : "symbolic") : coeff;
  if (mode == "symbolic") {
    if (q) throw ConfigError("symbolic mode keeps q formal; drop --q or use --coeff numeric");
    return WeightRing::symbolic(n);
  }
  if (mode != "numeric") throw ConfigError("--coeff must be symbolic or numeric");
  if (!q) throw ConfigError("numeric mode needs --q");
  try {
    return WeightRing::numeric(build_table(n, *q));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

Boundary RunConfig::boundary() const {
  if (rank < 0) throw ConfigError("--rank is required");
  try {
    return boundary_from_lambda(rank, lambda);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Metaplectic ice: partition functions, Whittaker coefficients and their identities"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string lambda_text, ice = "gamma", level_text = "h-vanishing+g-pairing", qr_text = "reflection";
  std::string l_text, m_text, check;
  long q_value = 0;
  int i_value = 0, j_value = -1, count = 50;
  std::optional<int> k_value;
  bool text_only = false, with_enumeration = false, with_states = true;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--rank", cfg.rank, "rank r");
    sub->add_option("--lambda", lambda_text, "dominant weight λ_r,…,λ_1,0");
    sub->add_option("--n", cfg.n, "cover degree")->capture_default_str();
    sub->add_option("--q", q_value, "prime residue field size (numeric mode)");
    sub->add_option("--coeff", cfg.coeff, "symbolic | numeric")->check(CLI::IsMember({"symbolic", "numeric", "auto"}));
    sub->add_option("--ice", ice, "gamma | delta")->check(CLI::IsMember({"gamma", "delta"}));
    sub->add_option("--strategy", cfg.strategy, "enumerate | transfer")
        ->check(CLI::IsMember({"enumerate", "transfer"}));
    sub->add_option("--seed", cfg.seed, "seed for randomized suites")->capture_default_str();
    sub->add_option("--output", cfg.output, "write JSON here instead of stdout");
  };

  auto* enumerate = app.add_subcommand("enumerate", "list the admissible states");
  common(enumerate);
  enumerate->add_flag("!--no-states", with_states, "print only the count");
  auto* part = app.add_subcommand("partition", "partition function Z");
  common(part);
  part->add_flag("--text", text_only, "print the rendered polynomial only");
  auto* whit = app.add_subcommand("whittaker", "Whittaker coefficient table H(p^k; λ)");
  common(whit);
  auto* verify = app.add_subcommand("verify", "run one identity check");
  common(verify);
  verify->add_option("check", check, "statement-a | prop-matching | ybe-n1 | commute-rows | two-row | statement-b | functional-eq | charges")
      ->required()
      ->check(CLI::IsMember({"statement-a", "prop-matching", "ybe-n1", "commute-rows", "two-row", "statement-b",
                             "functional-eq", "charges"}));
  verify->add_option("--i", i_value, "row index (default: all)");
  verify->add_option("--j", j_value, "charge class (default: all)");
  verify->add_option("--k", k_value, "middle row sum (default: all)");
  verify->add_option("--l", l_text, "top boundary row for two-row checks");
  verify->add_option("--m", m_text, "bottom boundary row for two-row checks");
  verify->add_option("--count", count, "random boundaries for two-row")->capture_default_str();
  verify->add_option("--qr", qr_text, "printed | reflection")->check(CLI::IsMember({"printed", "reflection"}));
  verify->add_option("--level", level_text, "none | h-vanishing | h-vanishing+g-pairing")
      ->check(CLI::IsMember({"none", "h-vanishing", "h-vanishing+g-pairing"}));
  auto* bench_cmd = app.add_subcommand("bench", "time the transfer contraction");
  common(bench_cmd);
  bench_cmd->add_flag("--with-enumeration", with_enumeration, "also time state enumeration");
  auto* gauss_cmd = app.add_subcommand("gauss", "dump a Gauss sum table");
  common(gauss_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << json{{"error", "usage"}, {"detail", e.what()}}.dump() << "\n";
    return 2;
  }

  try {
    cfg.lambda = parse_list(lambda_text);
    cfg.family = parse_family(ice);
    if (q_value != 0) cfg.q = q_value;

    if (enumerate->parsed()) {
      const Boundary b = cfg.boundary();
      json states = json::array();
      std::size_t n = 0;
      for_each_state(b, [&](const IceState& s) {
        ++n;
        if (with_states) states.push_back(state_to_json(s, cfg.family));
      });
      json j = {{"boundary", {{"rank", b.r}, {"lambda", b.lambda}, {"columns", b.C}, {"topMinus", b.top_row}}},
                {"count", n}};
      if (with_states) j["states"] = states;
      emit(j, cfg, out);
      return 0;
    }
    if (part->parsed()) {
      const SystemSpec spec = make_system(cfg.boundary(), cfg.family, cfg.ring());
      LaurentPoly Z = partition(spec, cfg.strategy == "enumerate" ? Strategy::enumerate : Strategy::transfer);
      if (text_only) {
        out << to_string(Z) << "\n";
        return 0;
      }
      json j = boundary_params(spec.boundary);
      j.update(ring_params(spec.ring));
      emit({{"system", j}, {"ice", ice}, {"poly", poly_to_json(Z)}, {"text", to_string(Z)}}, cfg, out);
      return 0;
    }
    if (whit->parsed()) {
      const SystemSpec spec = make_system(cfg.boundary(), cfg.family, cfg.ring());
      WhittakerTable t = whittaker_table(spec, cfg.strategy == "enumerate" ? Strategy::enumerate : Strategy::transfer);
      json j = whittaker_to_json(t);
      j["series"] = dirichlet_series_string(t, spec.boundary.r);
      emit(j, cfg, out);
      return 0;
    }
    if (gauss_cmd->parsed()) {
      if (!cfg.q) throw ConfigError("gauss needs --q");
      try {
        emit(gauss_to_json(build_table(cfg.n, *cfg.q)), cfg, out);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
      return 0;
    }
    if (bench_cmd->parsed()) {
      if (cfg.rank < 0) {
        cfg.rank = 3;
        cfg.lambda = {6, 4, 2, 0};
        cfg.n = 3;
        if (!cfg.q) cfg.q = 7;
      }
      BenchResult r = bench(cfg.boundary(), cfg.family, cfg.ring(), with_enumeration);
      json j = boundary_params(cfg.boundary());
      j.update(ring_params(cfg.ring()));
      emit({{"bench", j},
            {"states", r.states},
            {"terms", r.terms},
            {"transfer_seconds", r.transfer_seconds},
            {"enumerate_seconds", r.enumerate_seconds},
            {"agree", r.agree}},
           cfg, out);
      return r.agree ? 0 : 1;
    }
    if (verify->parsed()) {
      json r;
      if (check == "statement-a") {
        RelationLevel level = level_text == "none"          ? RelationLevel::none
                              : level_text == "h-vanishing" ? RelationLevel::h_vanishing
                                                            : RelationLevel::h_vanishing_g_pairing;
        r = verify_statement_a(cfg, level);
      } else if (check == "prop-matching") {
        r = verify_prop_matching(cfg);
      } else if (check == "ybe-n1") {
        r = verify_ybe_n1();
      } else if (check == "commute-rows") {
        r = verify_commute_rows(cfg, i_value);
      } else if (check == "two-row") {
        r = verify_two_row(cfg, l_text, m_text, count);
      } else if (check == "statement-b") {
        r = verify_statement_b(cfg, l_text, m_text, k_value,
                               qr_text == "printed" ? QrFormula::printed : QrFormula::reflection);
      } else if (check == "functional-eq") {
        r = verify_functional_eq(cfg, i_value, j_value);
      } else {
        r = verify_charges(cfg);
      }
      emit(r, cfg, out);
      return r.at("pass").get<bool>() ? 0 : 1;
    }
  } catch (const ConfigError& e) {
    err << json{{"error", "config"}, {"detail", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << json{{"error", "invalid"}, {"detail", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << json{{"error", "range"}, {"detail", e.what()}}.dump() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace metice
