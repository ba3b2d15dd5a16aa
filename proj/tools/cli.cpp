#include "schubert/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <new>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "schubert/cache_file.hpp"
#include "schubert/parallel.hpp"
#include "schubert/polynomial_text.hpp"
#include "schubert/report_json.hpp"

namespace schubert {

namespace {

struct Options {
  bool json = false;
  std::string cache;
  int jobs = 1;
  std::uint64_t seed = 20240601;

  // poly / coeff / expand
  bool schubert = false, grothendieck = false, grothendieck_beta = false;
  std::string basis = "schubert";
  std::vector<std::string> perms;

  // verify
  std::string identity;
  std::string u, v, w;
  int i = 0, k = 0, alpha = 0, rank = 0;
  int all_n = 0;
  int sample = 0;

  // sweep
  std::string conjecture;
  int n = 0;
  bool timing = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Basis basis_option(const std::string& name) {
  auto b = parse_basis(name);
  if (!b) throw UsageError("unknown basis '" + name + "'");
  return *b;
}

Permutation perm_arg(const std::string& text, const char* what) {
  try {
    return Permutation::parse(text);
  } catch (const PermutationError& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

int cmd_poly(Engine& engine, const Options& o, std::ostream& out) {
  const int flags = o.schubert + o.grothendieck + o.grothendieck_beta;
  if (flags > 1) throw UsageError("choose one of --schubert, --grothendieck, --grothendieck-beta");
  const Permutation w = perm_arg(o.perms.at(0), "w");
  Basis basis = o.grothendieck        ? Basis::grothendieck
                : o.grothendieck_beta ? Basis::beta_grothendieck
                                      : Basis::schubert;
  const std::string text = basis == Basis::schubert       ? to_string(engine.schubert(w))
                           : basis == Basis::grothendieck ? to_string(engine.grothendieck(w))
                                                          : to_string(engine.beta_grothendieck(w));
  if (o.json)
    out << Json{{"basis", std::string(basis_name(basis))}, {"w", w.to_string()}, {"poly", text}}
               .dump()
        << '\n';
  else
    out << text << '\n';
  return exit_ok;
}

int cmd_coeff(Engine& engine, const Options& o, std::ostream& out) {
  if (o.perms.size() != 3) throw UsageError("coeff takes three permutations U V W");
  const Permutation u = perm_arg(o.perms[0], "u");
  const Permutation v = perm_arg(o.perms[1], "v");
  const Permutation w = perm_arg(o.perms[2], "w");
  const Basis basis = basis_option(o.basis);
  const std::string value = basis == Basis::schubert ? engine.structure_coeff(u, v, w).str()
                            : basis == Basis::grothendieck
                                ? engine.k_coeff(u, v, w).str()
                                : to_string(engine.k_coeff_beta(u, v, w));
  if (o.json)
    out << Json{{"basis", std::string(basis_name(basis))},
                {"u", u.to_string()},
                {"v", v.to_string()},
                {"w", w.to_string()},
                {"coefficient", value}}
               .dump()
        << '\n';
  else
    out << value << '\n';
  return exit_ok;
}

template <typename E>
void print_expansion(const E& e, std::ostream& out) {
  for (const auto& [w, c] : e.terms) out << to_string(c) << ' ' << w.to_string() << '\n';
}

int cmd_expand(Engine& engine, const Options& o, std::ostream& out) {
  if (o.perms.size() != 2) throw UsageError("expand takes two permutations U V");
  const Permutation u = perm_arg(o.perms[0], "u");
  const Permutation v = perm_arg(o.perms[1], "v");
  const Basis basis = basis_option(o.basis);
  Json j;
  if (basis == Basis::beta_grothendieck) {
    const auto& e = engine.k_product_expansion_beta(u, v);
    if (!o.json) print_expansion(e, out);
    j = to_json(e);
  } else {
    const auto& e = basis == Basis::schubert ? engine.product_expansion(u, v)
                                             : engine.k_product_expansion(u, v);
    if (!o.json) print_expansion(e, out);
    j = to_json(e);
  }
  if (o.json) {
    Json doc = {{"u", u.to_string()}, {"v", v.to_string()}};
    doc.update(j);
    out << doc.dump() << '\n';
  }
  return exit_ok;
}

std::vector<Instance> explicit_instance(const Options& o) {
  Instance in;
  in.identity = o.identity;
  auto need = [&](const std::string& text, const char* name) {
    if (text.empty()) throw UsageError(o.identity + " requires --" + name);
    return perm_arg(text, name);
  };
  auto need_int = [&](int value, const char* name) {
    if (value == 0) throw UsageError(o.identity + " requires --" + name);
    return value;
  };
  const std::string& id = o.identity;
  if (id == "hpsw" || id == "macdonald" || id == "psw" || id == "g-ones") {
    in.w = need(o.w, "w");
  } else if (id == "main" || id == "stabilization" || id == "ktheory" ||
             id == "ktheory-corrected") {
    in.u = need(o.u, "u");
    in.v = need(o.v, "v");
    in.w = need(o.w, "w");
  } else if (id == "monk") {
    in.v = need(o.v, "v");
    in.i = need_int(o.i, "i");
  } else if (id == "residue") {
    in.u = need(o.u, "u");
    in.v = need(o.v, "v");
    in.w = need(o.w, "w");
    in.alpha = need_int(o.alpha, "alpha");
  } else if (id == "iterated") {
    in.u = need(o.u, "u");
    in.v = need(o.v, "v");
    in.w = need(o.w, "w");
    in.k = need_int(o.k, "k");
  } else if (id == "kronecker") {
    in.u = need(o.u, "u");
    in.v = need(o.v, "v");
    in.i = need_int(o.i, "i");
    in.rank = o.rank;
  } else if (id == "dc") {
    in.u = need(o.u, "u");
    in.v = need(o.v, "v");
  }
  return {in};
}

int cmd_verify(Engine& engine, const Options& o, std::ostream& out, std::ostream& err) {
  if (!is_known_identity(o.identity)) throw UsageError("unknown identity '" + o.identity + "'");
  std::vector<Instance> instances;
  if (o.all_n > 0) {
    instances = enumerate_instances(engine, o.identity, o.all_n);
    if (o.sample > 0 && static_cast<std::size_t>(o.sample) < instances.size()) {
      std::vector<Instance> picked;
      std::mt19937_64 rng(o.seed);
      std::sample(instances.begin(), instances.end(), std::back_inserter(picked),
                  static_cast<std::size_t>(o.sample), rng);
      instances = std::move(picked);
    }
  } else {
    if (o.sample > 0) throw UsageError("--sample requires --all-n");
    instances = explicit_instance(o);
  }

  auto reports = parallel_map(instances, o.jobs, [&](const Instance& in) {
    try {
      return to_json(run_instance(engine, in)).dump();
    } catch (const std::invalid_argument& e) {
      throw UsageError(o.identity + ": " + e.what());
    }
  });
  std::size_t holds = 0, failed = 0, invalid = 0;
  for (const auto& line : reports) {
    out << line << '\n';
    const auto status = Json::parse(line)["status"].get<std::string>();
    if (status == "holds")
      ++holds;
    else if (status == "fails")
      ++failed;
    else
      ++invalid;
  }
  err << o.identity << ": " << reports.size() << " reports, " << holds << " hold, " << failed
      << " fail, " << invalid << " invalid input\n";
  if (failed > 0) return exit_violation;
  if (invalid > 0) return exit_usage;
  return exit_ok;
}

int cmd_sweep(Engine& engine, const Options& o, std::ostream& out, std::ostream& err) {
  auto tag = parse_conjecture(o.conjecture);
  if (!tag) throw UsageError("unknown conjecture '" + o.conjecture + "'");
  if (o.n < 2) throw UsageError("sweep requires n >= 2");
  engine.set_product_retention(false);
  const SweepReport report = sweep(engine, *tag, o.n, o.jobs);
  out << to_json(report, o.timing).dump() << '\n';
  err << o.conjecture << " n=" << o.n << ": " << report.ordered_pairs << " ordered pairs, "
      << report.violations.size() << " violations\n";
  return report.violations.empty() ? exit_ok : exit_violation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Schubert and Grothendieck polynomial calculator", "schubert"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Emit JSON");
  app.add_option("--cache", o.cache, "Polynomial cache path (default $SCHUBERT_CACHE)");
  app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Seed for --sample");

  auto* poly = app.add_subcommand("poly", "Print a basis polynomial");
  poly->add_flag("--schubert", o.schubert);
  poly->add_flag("--grothendieck", o.grothendieck);
  poly->add_flag("--grothendieck-beta", o.grothendieck_beta);
  poly->add_option("w", o.perms, "Permutation")->required()->expected(1);

  auto* coeff = app.add_subcommand("coeff", "Structure coefficient of w in u*v");
  coeff->add_option("--basis", o.basis, "schubert, grothendieck or beta-grothendieck");
  coeff->add_option("perms", o.perms, "U V W")->required()->expected(3);

  auto* expand = app.add_subcommand("expand", "Expand a product of two basis elements");
  expand->add_option("--basis", o.basis, "schubert, grothendieck or beta-grothendieck");
  expand->add_option("perms", o.perms, "U V")->required()->expected(2);

  auto* verify = app.add_subcommand("verify", "Check one identity; one JSON report per line");
  verify->add_option("identity", o.identity)->required();
  verify->add_option("--u", o.u);
  verify->add_option("--v", o.v);
  verify->add_option("--w", o.w);
  verify->add_option("--i", o.i);
  verify->add_option("--k", o.k);
  verify->add_option("--alpha", o.alpha);
  verify->add_option("--rank", o.rank);
  verify->add_option("--all-n", o.all_n, "Every instance over S_N");
  verify->add_option("--sample", o.sample, "Random subset of --all-n instances");

  auto* sw = app.add_subcommand("sweep", "Sweep a multiplicity-freeness conjecture");
  sw->add_option("conjecture", o.conjecture, "multfree or covers")->required();
  sw->add_option("n", o.n, "Rank")->required();
  sw->add_flag("--timing", o.timing, "Include wall time in the report");

  for (auto* sub : {poly, coeff, expand, verify, sw}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "schubert: " << e.what() << '\n';
    return exit_usage;
  }

  if (o.cache.empty())
    if (const char* env = std::getenv("SCHUBERT_CACHE")) o.cache = env;

  Engine engine;
  if (!o.cache.empty())
    for (const auto& w : cache_load_all(o.cache, engine)) err << "warning: " << w << '\n';

  int code = exit_ok;
  try {
    if (*poly)
      code = cmd_poly(engine, o, out);
    else if (*coeff)
      code = cmd_coeff(engine, o, out);
    else if (*expand)
      code = cmd_expand(engine, o, out);
    else if (*verify)
      code = cmd_verify(engine, o, out, err);
    else
      code = cmd_sweep(engine, o, out, err);
  } catch (const UsageError& e) {
    err << "schubert: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::bad_alloc&) {
    err << "schubert: out of memory\n";
    return exit_error;
  } catch (const std::exception& e) {
    err << "schubert: internal error: " << e.what() << '\n';
    return exit_error;
  }

  if (!o.cache.empty())
    for (const auto& w : cache_store_all(o.cache, engine)) err << "warning: " << w << '\n';
  return code;
}

}  // namespace schubert
