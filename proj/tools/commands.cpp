#include "commands.hpp"

#include "cmpl/errors.hpp"

namespace cmpl::cli {

namespace {

// floor on coefficients behind a rational reconstruction
constexpr long kMinCoeffs = 40;

PrecisionBudget vadic_budget(const Options& o) {
  PrecisionBudget b;
  b.target = o.prec.value_or(20);
  if (b.target < 1) throw DomainError("v-adic precision must be >= 1 digit");
  return b;
}

PrecisionBudget inf_budget(const Options& o) {
  PrecisionBudget b;
  b.target = o.prec.value_or(-20);
  return b;
}

std::vector<ExtElem> arguments(const Context& c, const Options& o, const Composition& s) {
  if (o.u.empty()) throw ParseError("--u is required");
  auto u = parse_tuple(c.K, o.u);
  if (u.size() != s.depth()) throw DomainError("--u has " + std::to_string(u.size()) + " entries but --s has depth " +
                                               std::to_string(s.depth()));
  return u;
}

std::vector<RatFunc> base_arguments(const std::vector<ExtElem>& u) {
  std::vector<RatFunc> out;
  for (const auto& x : u) {
    if (!x.in_base()) throw DomainError("the infinite place takes arguments in k only");
    out.push_back(x.to_ratfunc());
  }
  return out;
}

json header(const Options& o, const char* command) {
  json j;
  j["command"] = command;
  j["q"] = o.q;
  j["s"] = o.s;
  if (!o.u.empty()) j["u"] = o.u;
  if (!o.ext_minpoly.empty()) j["ext_minpoly"] = o.ext_minpoly;
  return j;
}

template <class T>
std::vector<T> reversed(std::vector<T> v) {
  return {v.rbegin(), v.rend()};
}

}  // namespace

json cmd_cmpl(const Options& o, bool star) {
  json j = header(o, star ? "cmspl" : "cmpl");
  j["place"] = o.place;
  const Composition s = parse_composition(o.s);
  if (o.place == "inf") {
    const Context c = Context::make(o, false);
    const auto u = base_arguments(arguments(c, o, s));
    SeriesStats st;
    j["result"] = to_json(cmpl_eval_inf(s, u, inf_budget(o), star, &st));
    j["method"] = "series";
    j["terms"] = st.terms;
    return j;
  }
  if (o.place != "v") throw ParseError("--place must be v or inf");
  const Context c = Context::make(o, true);
  const auto u = arguments(c, o, s);
  j["v"] = o.v;
  const PrecisionBudget b = vadic_budget(o);
  bool open = !u[0].is_zero() && c.emb->embed(u[0], 1).val() >= 1;
  if (open) {
    SeriesStats st;
    j["result"] = to_json(cmpl_eval_v(s, u, c.emb, b, star, &st));
    j["method"] = "series";
    j["terms"] = st.terms;
    return j;
  }
  j["method"] = "continuation";
  if (star)
    j["result"] = to_json(extended_cmspl(s.reversed(), reversed(u), c.emb, b)[0]);
  else
    j["result"] = to_json(extended_cmpl(s, u, c.emb, b));
  return j;
}

json cmd_log_coeffs(const Options& o) {
  json j = header(o, "log-coeffs");
  const Context c = Context::make(o, false);
  const Composition s = parse_composition(o.s);
  const TModule G(s, arguments(c, o, s));
  if (o.n < 0) throw DomainError("--n must be >= 0");
  const auto I = static_cast<std::size_t>(o.n);
  json list = json::array();
  for (const auto& m : o.exp ? G.exp_coeffs(I) : G.log_coeffs(I)) list.push_back(to_json(m));
  j[o.exp ? "Q" : "P"] = list;
  return j;
}

json cmd_log_eval(const Options& o) {
  json j = header(o, "log-eval");
  const Context c = Context::make(o, true);
  const Composition s = parse_composition(o.s);
  const TModule G(s, arguments(c, o, s));
  const ExtVector x = o.point.empty() ? G.special_point() : parse_tuple(c.K, o.point);
  j["v"] = o.v;
  j["point"] = to_json(x);
  SeriesStats st;
  json coords = json::array();
  for (const auto& y : log_eval_v(G, x, c.emb, vadic_budget(o), &st)) coords.push_back(to_json(y));
  j["log"] = coords;
  j["terms"] = st.terms;
  return j;
}

json cmd_continue(const Options& o) {
  json j = header(o, "continue");
  const Context c = Context::make(o, true);
  const Composition s = parse_composition(o.s);
  const auto u = arguments(c, o, s);
  const TModule G(s, u);
  const Poly extra = o.multiplier.empty() ? Poly::one(c.F) : parse_t_poly(c.F, o.multiplier);
  const Continuation cont = continuation_multiplier(G, c.emb, extra);
  j["v"] = o.v;
  j["ell"] = cont.ell;
  j["a"] = t_string(cont.a);
  j["moved"] = to_json(cont.moved);
  j["moved_is_zero"] = cont.moved_is_zero;
  const PrecisionBudget b = vadic_budget(o);
  const ExtendedTables t = extended_tables(s, u, c.emb, b, &extra);
  json star = json::array(), li = json::array();
  const std::size_t r = s.depth();
  for (std::size_t l = 0; l < r; ++l) {
    star.push_back(to_json(t.star[l][r - 1]));
    li.push_back(to_json(t.nonstar[l][r - 1]));
  }
  j["li_star_suffixes"] = star;
  j["li_suffixes"] = li;
  return j;
}

json cmd_torsion(const Options& o) {
  json j = header(o, "torsion");
  const Context c = Context::make(o, false);
  const Composition s = parse_composition(o.s);
  const TModule G(s, arguments(c, o, s));
  const ExtVector w = o.point.empty() ? G.special_point() : parse_tuple(c.K, o.point);
  j["point"] = to_json(w);
  j["torsion"] = to_json(torsion_search(G, w, o.deg_bound));
  return j;
}

json cmd_check(const Options& o) {
  const Context c = Context::make(o, true);
  const Composition s = parse_composition(o.s);
  const auto u = arguments(c, o, s);
  const PrecisionBudget b = vadic_budget(o);
  const HarnessReport rep = theorem_harness(s, u, c.emb, b, o.deg_bound);
  json j;
  j["case"] = header(o, "check");
  j["case"]["v"] = o.v;
  j["i"] = rep.vanishing.li_vanish;
  j["ii"] = rep.vanishing.star_vanish;
  j["iii"] = rep.torsion.found ? t_string(rep.torsion.a) : "inconclusive";
  j["flag"] = rep.flag();
  j["precision"] = b.target;
  j["degree_bound"] = o.deg_bound;
  json li = json::array(), star = json::array();
  for (const auto& y : rep.vanishing.li) li.push_back(to_json(y));
  for (const auto& y : rep.vanishing.star) star.push_back(to_json(y));
  j["li_suffixes"] = li;
  j["li_star_suffixes"] = star;
  return j;
}

namespace {

json euler_json(const EulerianReport& r) {
  json j;
  j["eulerian"] = r.eulerian;
  j["exponent"] = r.exponent;
  j["period_power"] = r.period_power;
  j["coefficients"] = r.coefficients;
  if (r.witness) {
    j["witness"] = {{"num", r.witness->num().to_string("theta")}, {"den", r.witness->den().to_string("theta")}};
  }
  return j;
}

}  // namespace

json cmd_euler(const Options& o) {
  json j = header(o, "euler");
  const Context c = Context::make(o, false);
  const Composition s = parse_composition(o.s);
  const auto u = base_arguments(arguments(c, o, s));
  const long H = o.height.value_or(4);
  j["height"] = H;
  j["report"] = euler_json(eulerian_check_inf(s, u, H, o.prec.value_or(kMinCoeffs)));
  return j;
}

json cmd_zeta(const Options& o) {
  json j;
  j["command"] = "zeta";
  j["q"] = o.q;
  j["n"] = o.n;
  j["degree_bound"] = o.deg_bound;
  j["place"] = o.place;
  const Context c = Context::make(o, o.place == "v");
  const ZetaPartial z = carlitz_zeta_partial(c.F, o.n, o.deg_bound);
  j["exact"] = {{"num", z.value.num().to_string("theta")}, {"den", z.value.den().to_string("theta")}};
  if (o.place == "inf") {
    j["value"] = to_json(InfLaurent::embed(z.value, o.prec.value_or(-20)));
    j["tail_degree"] = z.tail_degree;
    // a reconstruction from barely 2H+2 coefficients is not evidence
    if (o.height) j["eulerian"] = euler_json(zeta_eulerian_check(c.F, o.n, *o.height, kMinCoeffs));
  } else if (o.place == "v") {
    const long A = vadic_budget(o).target;
    j["v"] = o.v;
    j["value"] = to_json(VAdicNumber::from_ratfunc(c.P, z.value, A + o.n * (o.deg_bound + 1) + 1).with_abs_prec(A));
  } else {
    throw ParseError("--place must be v or inf");
  }
  return j;
}

json cmd_tmodule_show(const Options& o) {
  json j = header(o, "tmodule-show");
  const Context c = Context::make(o, false);
  const Composition s = parse_composition(o.s);
  const TModule G(s, arguments(c, o, s));
  j["dim"] = G.dim();
  j["d"] = [&] {
    std::vector<int> d;
    for (std::size_t l = 0; l < s.depth(); ++l) d.push_back(s.d(l));
    return d;
  }();
  j["d_rho_t"] = to_json(G.d_rho_t());
  j["E"] = to_json(G.E());
  j["special_point"] = to_json(G.special_point());
  if (!o.multiplier.empty()) {
    const Poly a = parse_t_poly(c.F, o.multiplier);
    json coeffs = json::array();
    for (const auto& m : G.rho(a).coeffs()) coeffs.push_back(to_json(m));
    j["rho_a"] = {{"a", t_string(a)}, {"coeffs", coeffs}};
  }
  return j;
}

}  // namespace cmpl::cli
