#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cmpl/errors.hpp"
#include "commands.hpp"

using namespace cmpl;
using namespace cmpl::cli;

namespace {

constexpr int kDomain = 2, kPrecision = 3, kParse = 4;

const std::vector<std::pair<std::string, std::string>> kCommands{
    {"cmpl", "multiple polylogarithm Li_s(u) (continued when |u_1|_v = 1)"},
    {"cmspl", "star version Li*_s(u)"},
    {"log-coeffs", "coefficients P_0..P_n of log_G (Q_i with --exp)"},
    {"log-eval", "log_G at the special point or --point"},
    {"continue", "continuation multiplier and extended values"},
    {"torsion", "least-degree annihilator of a point, up to --deg-bound"},
    {"check", "vanishing / torsion consistency report"},
    {"euler", "Eulerian test at infinity by rational reconstruction"},
    {"zeta", "Carlitz zeta value, or its Eulerian test with --height"},
    {"tmodule-show", "N, E and d rho_t of G_{s,u}"},
    {"selftest", "embedded invariant suite"}};

void add_options(CLI::App& app, Options& o) {
  app.add_option("--q", o.q, "field size q = p^e")->capture_default_str();
  app.add_option("--fq-modulus", o.fq_modulus, "F_p digits of the F_q modulus, low degree first, e.g. 2,2,1");
  app.add_option("--s", o.s, "index s, e.g. 1,2")->capture_default_str();
  app.add_option("--u", o.u, "arguments u separated by ';', e.g. \"theta+1;2*theta\"");
  app.add_option("--point", o.point, "explicit point for log-eval/torsion (default: special point)");
  app.add_option("--ext-minpoly", o.ext_minpoly, "minimal polynomial of x over k, e.g. x^2-2*theta");
  app.add_option("--v", o.v, "finite place, monic irreducible in theta")->capture_default_str();
  app.add_option("--place", o.place, "v or inf")->capture_default_str()->check(CLI::IsMember({"v", "inf"}));
  app.add_option("--prec", o.prec, "v: digits; inf: lowest exponent kept; euler: coefficient count");
  app.add_option("--deg-bound", o.deg_bound, "torsion degree bound / zeta degree bound")->capture_default_str();
  app.add_option("--height", o.height, "reconstruction height");
  app.add_option("--out", o.out, "write JSON here instead of stdout");
  app.add_option("--seed", o.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--n", o.n, "zeta exponent / number of log coefficients")->capture_default_str();
  app.add_option("--root", o.root, "index of the Hensel root used to embed K")->capture_default_str();
  app.add_option("--jobs", o.jobs, "parallel checks in selftest")->capture_default_str();
  app.add_option("--filter", o.filter, "selftest: run checks whose name contains this");
  app.add_option("--fixtures", o.fixtures, "selftest: directory holding golden.json");
  app.add_option("--multiplier", o.multiplier, "extra factor of the continuation multiplier, in t");
  app.add_flag("--exp", o.exp, "log-coeffs: print exp coefficients instead");
}

json dispatch(const std::string& cmd, const Options& o) {
  if (cmd == "cmpl") return cmd_cmpl(o, false);
  if (cmd == "cmspl") return cmd_cmpl(o, true);
  if (cmd == "log-coeffs") return cmd_log_coeffs(o);
  if (cmd == "log-eval") return cmd_log_eval(o);
  if (cmd == "continue") return cmd_continue(o);
  if (cmd == "torsion") return cmd_torsion(o);
  if (cmd == "check") return cmd_check(o);
  if (cmd == "euler") return cmd_euler(o);
  if (cmd == "zeta") return cmd_zeta(o);
  return cmd_tmodule_show(o);
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (!args.empty() && args[0] == "eval") args.erase(args.begin());
  std::reverse(args.begin(), args.end());

  CLI::App app{"Carlitz multiple polylogarithms at infinity and at finite places"};
  app.set_config("--config", "", "key=value defaults for any option");
  app.require_subcommand(1);
  Options o;
  add_options(app, o);
  for (const auto& [name, what] : kCommands) app.add_subcommand(name, what)->fallthrough();
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "selftest") return cmd_selftest(o);
    const json out = dispatch(cmd, o);
    if (o.out.empty()) {
      std::cout << out.dump(2) << "\n";
    } else {
      std::ofstream f(o.out);
      if (!f) throw std::runtime_error("cannot write " + o.out);
      f << out.dump(2) << "\n";
    }
    return 0;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const PrecisionError& e) {
    std::cerr << "precision error: " << e.what() << "\n";
    return kPrecision;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
