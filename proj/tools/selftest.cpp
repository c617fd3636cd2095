#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <random>

#include "cmpl/errors.hpp"
#include "commands.hpp"

namespace cmpl::cli {

namespace {

struct Check {
  std::string name;
  std::function<std::string()> run;  // returns "" on success, else the failure detail
};

Poly random_poly(const FieldPtr& F, std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<Fq> coef(0, F->q() - 1);
  std::vector<Fq> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coef(rng);
  if (c.back() == 0) c.back() = 1;
  return Poly(F, c);
}

std::string check_fixtures(const std::string& dir) {
  std::ifstream in(dir + "/golden.json");
  if (!in) return "cannot open " + dir + "/golden.json";
  json g;
  try {
    g = json::parse(in);
    auto F = FqField::of_order(3);
    auto K = ExtField::trivial(F);
    const auto& f = g.at("cmpl_v_theta");
    auto emb = VAdicEmbedding::make(K, VPlace::make(Poly(F, f.at("v").get<std::vector<Fq>>())));
    PrecisionBudget b;
    b.target = f.at("abs_prec").get<long>();
    const auto got = cmpl_eval_v(Composition({1}), {ExtElem::from_poly(K, Poly::theta(F))}, emb, b);
    if (got.val() != f.at("val").get<long>() || got.unit() != Poly(F, f.at("unit").get<std::vector<Fq>>()))
      return "cmpl_v_theta mismatch";
    const auto& z = g.at("zeta_ratio_q3_n2");
    const auto rep = zeta_eulerian_check(F, 2, z.at("height").get<long>(), 40);
    const RatFunc w(Poly(F, z.at("witness").at("num").get<std::vector<Fq>>()),
                    Poly(F, z.at("witness").at("den").get<std::vector<Fq>>()));
    if (!rep.witness || *rep.witness != w) return "zeta_ratio_q3_n2 witness mismatch";
    const auto& m = g.at("multiplier_r2");
    TModule G(Composition({1, 1}), parse_tuple(K, "theta+1;theta+2"));
    auto embt = VAdicEmbedding::make(K, VPlace::make(Poly::theta(F)));
    if (continuation_multiplier(G, embt).a != parse_t_poly(F, m.at("a").get<std::string>()))
      return "multiplier_r2 mismatch";
  } catch (const std::exception& e) {
    return std::string("bad fixture file: ") + e.what();
  }
  return "";
}

std::string check_closed_form() {
  auto F = FqField::of_order(3);
  auto K = ExtField::trivial(F);
  for (const auto& s : {std::vector<int>{1, 1}, std::vector<int>{2, 1}, std::vector<int>{1, 2, 1}}) {
    std::vector<ExtElem> u;
    for (std::size_t k = 0; k < s.size(); ++k) u.push_back(ExtElem::from_poly(K, Poly(F, {static_cast<Fq>(k % 2), 1})));
    const TModule G((Composition(s)), u);
    const auto Ps = G.log_coeffs(4);
    for (std::size_t i = 0; i <= 4; ++i)
      for (std::size_t l = 0; l < s.size(); ++l)
        for (std::size_t m = 0; m < s.size(); ++m) {
          const auto row = static_cast<std::size_t>(G.index().bottom(l));
          const auto col = static_cast<std::size_t>(G.index().bottom(m));
          if (Ps[i].entry(row, col) != G.closed_form_corner(i, l, m))
            return "corner mismatch at i=" + std::to_string(i) + " for s=" + G.index().to_string();
        }
  }
  return "";
}

std::string check_star(unsigned long seed, bool at_inf) {
  auto F = FqField::of_order(3);
  auto K = ExtField::trivial(F);
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 5; ++trial) {
    const std::size_t r = 1 + trial % 3;
    std::vector<int> s;
    for (std::size_t k = 0; k < r; ++k) s.push_back(1 + static_cast<int>(rng() % 2));
    PrecisionBudget b;
    if (at_inf) {
      std::vector<RatFunc> u;
      for (std::size_t k = 0; k < r; ++k) u.push_back(RatFunc(random_poly(F, rng, s[k])));
      b.target = -20;
      const InfLaurent res = star_nonstar_residue_inf(Composition(s), u, b);
      if (!res.is_zero() || (!res.is_exact() && res.prec() > -20)) return "nonzero residue for s=" + Composition(s).to_string();
    } else {
      const Poly v = trial % 2 ? Poly(F, {1, 1}) : Poly::theta(F);
      auto emb = VAdicEmbedding::make(K, VPlace::make(v));
      std::vector<ExtElem> u;
      for (std::size_t k = 0; k < r; ++k) {
        Poly p = random_poly(F, rng, 2);
        if (k == 0 || k + 1 == r) p = p * v;
        u.push_back(ExtElem::from_poly(K, p));
      }
      b.target = 20;
      const VAdicNumber res = star_nonstar_residue_v(Composition(s), u, emb, b);
      if (!res.is_zero() || res.abs_prec() < 20) return "nonzero residue for s=" + Composition(s).to_string();
    }
  }
  return "";
}

std::string check_commute() {
  auto F = FqField::of_order(3);
  auto K = ExtField::trivial(F);
  auto emb = VAdicEmbedding::make(K, VPlace::make(Poly(F, {1, 1})));
  const TModule G(Composition({1, 2}), parse_tuple(K, "theta;theta^2+1"));
  ExtVector x;
  for (std::size_t i = 0; i < G.dim(); ++i) x.push_back(ExtElem::from_poly(K, Poly(F, {1, 1}) * Poly(F, {static_cast<Fq>(i % 3), 1})));
  PrecisionBudget b;
  for (const char* a : {"t", "t+1", "t^2+2"})
    for (const auto& y : log_commute_check(G, x, parse_t_poly(F, a), emb, b))
      if (!y.is_zero() || y.abs_prec() < b.target) return std::string("nonzero residue for a=") + a;
  return "";
}

std::string check_lambda() {
  auto F = FqField::of_order(3);
  auto K = ExtField::make(F, parse_minpoly(F, "x^2-2*theta"));
  auto emb = VAdicEmbedding::make(K, VPlace::make(Poly(F, {1, 1})));
  PrecisionBudget b;
  b.target = 12;
  const auto rep = theorem_harness(Composition({1}), {ExtElem::generator(K)}, emb, b, 4);
  if (!rep.torsion.found || rep.torsion.a != Poly(F, {0, 1})) return "certificate is not t";
  if (!rep.vanishing.star[0].is_exact_zero()) return "Li*_1(lambda) is not exactly 0";
  if (!rep.consistent) return "harness flag is TENSION";
  return "";
}

std::string check_exp_log() {
  auto F = FqField::of_order(3);
  auto K = ExtField::trivial(F);
  const TModule G(Composition({1, 2}), parse_tuple(K, "theta;theta+1"));
  const auto P = G.log_coeffs(4), Q = G.exp_coeffs(4);
  for (std::size_t k = 1; k <= 4; ++k) {
    ExtMatrix sum = P[0].to_ext() * Q[k].to_ext();
    for (std::size_t i = 1; i <= k; ++i) sum += P[i].to_ext() * Q[k - i].frobenius(static_cast<unsigned>(i)).to_ext();
    if (!sum.is_zero()) return "log o exp differs from the identity at tau^" + std::to_string(k);
  }
  return "";
}

}  // namespace

int cmd_selftest(const Options& o) {
  const std::string dir = o.fixtures.empty() ? std::string(CMPL_FIXTURES_DIR) : o.fixtures;
  std::vector<Check> checks{
      {"fixtures", [dir] { return check_fixtures(dir); }},
      {"closed-form", check_closed_form},
      {"star-v", [&o] { return check_star(o.seed, false); }},
      {"star-inf", [&o] { return check_star(o.seed, true); }},
      {"commute", check_commute},
      {"lambda", check_lambda},
      {"exp-log", check_exp_log},
  };
  std::vector<Check> chosen;
  for (auto& c : checks)
    if (o.filter.empty() || c.name.find(o.filter) != std::string::npos) chosen.push_back(c);
  if (chosen.empty()) {
    std::cerr << "no check matches filter \"" << o.filter << "\"\n";
    return 1;
  }
  auto guarded = [](const Check& c) {
    try {
      return c.run();
    } catch (const std::exception& e) {
      return std::string("exception: ") + e.what();
    }
  };
  std::vector<std::string> results(chosen.size());
  const std::size_t jobs = std::max(1u, o.jobs);
  for (std::size_t start = 0; start < chosen.size(); start += jobs) {
    std::vector<std::future<std::string>> batch;
    for (std::size_t k = start; k < std::min(chosen.size(), start + jobs); ++k)
      batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, guarded, std::cref(chosen[k])));
    for (std::size_t k = 0; k < batch.size(); ++k) results[start + k] = batch[k].get();
  }
  int failed = 0;
  for (std::size_t k = 0; k < chosen.size(); ++k) {
    const bool ok = results[k].empty();
    failed += !ok;
    std::cout << (ok ? "PASS  " : "FAIL  ") << chosen[k].name << (ok ? "" : "  " + results[k]) << "\n";
  }
  std::cout << chosen.size() - static_cast<std::size_t>(failed) << "/" << chosen.size() << " checks passed\n";
  return failed ? 1 : 0;
}

}  // namespace cmpl::cli
