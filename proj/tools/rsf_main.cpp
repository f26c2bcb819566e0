#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>

#include "rsf/applications.hpp"
#include "rsf/error.hpp"
#include "rsf/fixtures.hpp"
#include "rsf/json_io.hpp"
#include "rsf/parse.hpp"
#include "rsf/schur.hpp"

namespace {

using namespace rsf;

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kPrecondition = 3, kInternal = 4 };

struct Common {
  bool json = false;
  std::string strategy = "pf";
  bool oracle = false;
};

OmegaOptions options(const Common& c) {
  OmegaOptions o;
  o.strategy = c.strategy == "elliott" ? OmegaStrategy::Elliott : OmegaStrategy::PartialFractions;
  o.oracle_check = c.oracle;
  return o;
}

void emit(const Common& c, const NiceRational& f) {
  if (c.json)
    std::cout << to_json(f).dump() << "\n";
  else
    std::cout << f.to_string() << "\n";
}

Group group_of(const std::string& g) { return g == "sl" ? Group::SL : Group::UT; }

NiceRational series_arg(const std::string& s, int d) {
  if (is_builtin(s)) return builtin_series(s, d);
  return parse_expr(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiplicity series of nice rational symmetric functions"};
  app.require_subcommand(1);
  Common c;
  app.add_flag("--json", c.json, "JSON output");

  auto add_strategy = [&c](CLI::App* sub) {
    sub->add_option("--strategy", c.strategy, "Omega strategy")
        ->check(CLI::IsMember({"pf", "elliott", "both"}))
        ->capture_default_str();
    sub->add_flag("--oracle", c.oracle, "Check every elimination against the truncated series");
  };

  std::string expr, mexpr, zlist, module, cells, group, series, name, fixtures_dir;
  int d = 0, degree = 0, series_d = 0, bound = 0;
  unsigned threads = 0;
  bool graded = false;

  auto* mult = app.add_subcommand("multiplicity", "M and M' of a symmetric function");
  mult->add_option("--d", d, "number of x variables")->required();
  mult->add_flag("--graded", graded, "treat t as a grading parameter");
  mult->add_option("-e,--expr", expr, "expression")->required();
  add_strategy(mult);

  auto* omega = app.add_subcommand("omega", "Nonnegative part in the listed z variables at z = 1");
  omega->add_option("-e,--expr", expr)->required();
  omega->add_option("--z", zlist, "comma-separated elimination variables")->required();
  add_strategy(omega);

  auto* symalg = app.add_subcommand("symalg", "Hilbert series of the symmetric algebra K[W]");
  symalg->add_option("--module", module, "module spec, e.g. \"3 + 2\" or \"2*(1,1)\"")->required();
  symalg->add_option("--d", d)->required();
  symalg->add_flag("--graded", graded);

  auto* inv = app.add_subcommand("invariants", "Hilbert series of K[W]^SL_d or K[W]^UT_d");
  inv->add_option("--group", group)->required()->check(CLI::IsMember({"sl", "ut"}));
  inv->add_option("--module", module)->required();
  inv->add_option("--d", d)->required();
  add_strategy(inv);

  auto* weitz = app.add_subcommand("weitzenbock", "Hilbert series of the constants of a Weitzenbock derivation");
  weitz->add_option("--cells", cells, "Jordan cell sizes, e.g. \"3,1\"")->required();
  add_strategy(weitz);

  auto* ncinv = app.add_subcommand("nc-invariants", "Invariants of a relatively free algebra");
  ncinv->add_option("--series", series, "builtin name or expression in x1..xp")->required();
  ncinv->add_option("--series-d", series_d, "parameter of a builtin series");
  ncinv->add_option("--module", module)->required();
  ncinv->add_option("--d", d)->required();
  ncinv->add_option("--group", group)->required()->check(CLI::IsMember({"sl", "ut"}));
  add_strategy(ncinv);

  auto* ncw = app.add_subcommand("nc-weitzenbock", "Constants of a Weitzenbock derivation of a relatively free algebra");
  ncw->add_option("--series", series)->required();
  ncw->add_option("--series-d", series_d);
  ncw->add_option("--cells", cells)->required();
  add_strategy(ncw);

  auto* verify = app.add_subcommand("verify", "Check that m is the multiplicity series of e");
  verify->add_option("-e,--expr", expr)->required();
  verify->add_option("-m,--mult", mexpr)->required();
  verify->add_option("--d", d)->required();

  auto* expand = app.add_subcommand("expand", "Series expansion up to a total degree");
  expand->add_option("-e,--expr", expr)->required();
  expand->add_option("--degree", degree)->required();

  auto* schur = app.add_subcommand("schur-expand", "Truncated Schur expansion");
  schur->add_option("-e,--expr", expr)->required();
  schur->add_option("--d", d)->required();
  schur->add_option("--degree", degree)->required();

  auto* cyc = app.add_subcommand("cyclotomic", "Whether the numerator is a product of cyclotomic polynomials");
  cyc->add_option("-e,--expr", expr)->required();
  cyc->add_option("--bound", bound, "largest n tried for Phi_n (default 2*deg+4)");

  auto* normalize = app.add_subcommand("normalize", "Parse an expression and print its canonical form");
  normalize->add_option("-e,--expr", expr)->required();

  auto* builtin = app.add_subcommand("builtin", "Print a built-in series");
  builtin->add_option("--name", name)->required()->check(CLI::IsMember(builtin_names()));
  builtin->add_option("--d", d);

  auto* corpus = app.add_subcommand("corpus", "Run the regression corpus");
  corpus->add_option("--fixtures", fixtures_dir)->required();
  corpus->add_option("--threads", threads);
  std::vector<std::string> only_ids;
  corpus->add_option("--id", only_ids, "run only the fixtures with these ids");
  add_strategy(corpus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    OmegaOptions opt = options(c);
    bool both = c.strategy == "both";
    // Runs f under one or both strategies; a disagreement is an internal failure.
    auto run = [&](auto&& f) {
      if (!both) return f(opt);
      OmegaOptions a = opt, b = opt;
      a.strategy = OmegaStrategy::PartialFractions;
      b.strategy = OmegaStrategy::Elliott;
      NiceRational ra = f(a), rb = f(b);
      if (!nr_equal(ra, rb)) throw_internal("strategies disagree", ra.to_string() + " vs " + rb.to_string());
      return ra;
    };

    if (*mult) {
      NiceRational f = parse_expr(expr);
      MultiplicitySeries ms;
      ms.m = run([&](const OmegaOptions& o) {
        ms = multiplicity_series(f, d, graded, o);
        return ms.m;
      });
      if (c.json) {
        std::cout << Json{{"m", to_json(ms.m)}, {"m_prime", to_json(ms.m_prime)}}.dump() << "\n";
      } else {
        std::cout << "M = " << ms.m.to_string() << "\n";
        std::cout << "M' = " << ms.m_prime.to_string() << "\n";
      }
    } else if (*omega) {
      NiceRational f = parse_expr(expr);
      auto zs = parse_var_list(zlist);
      emit(c, run([&](const OmegaOptions& o) { return omega_geq(f, zs, o); }));
    } else if (*symalg) {
      emit(c, hilbert_symmetric_algebra(parse_module(module, d), graded));
    } else if (*inv) {
      ModuleSpec w = parse_module(module, d);
      emit(c, run([&](const OmegaOptions& o) { return invariants_hilbert(w, group_of(group), o); }));
    } else if (*weitz) {
      JordanShape shape{parse_int_list(cells)};
      emit(c, run([&](const OmegaOptions& o) { return weitzenbock_hilbert(shape, o); }));
    } else if (*ncinv) {
      NiceRational h = series_arg(series, series_d);
      WeightList w = weights_of_module(parse_module(module, d));
      if (is_builtin(series) && builtin_arity(series, series_d) != static_cast<int>(w.size()))
        throw_precondition("weight count mismatch", series + " has " + std::to_string(builtin_arity(series, series_d)) +
                                                        " variables, module has dimension " + std::to_string(w.size()));
      emit(c, run([&](const OmegaOptions& o) { return noncommutative_invariants(h, w, d, group_of(group), o); }));
    } else if (*ncw) {
      NiceRational h = series_arg(series, series_d);
      JordanShape shape{parse_int_list(cells)};
      if (is_builtin(series) && builtin_arity(series, series_d) != shape.total())
        throw_precondition("weight count mismatch", series + " has " + std::to_string(builtin_arity(series, series_d)) +
                                                        " variables, cells total " + std::to_string(shape.total()));
      emit(c, run([&](const OmegaOptions& o) { return noncommutative_weitzenbock(h, shape, o); }));
    } else if (*verify) {
      bool ok = verify_multiplicity(parse_expr(expr), parse_expr(mexpr), d);
      if (c.json)
        std::cout << Json{{"verified", ok}}.dump() << "\n";
      else
        std::cout << (ok ? "true" : "false") << "\n";
    } else if (*expand) {
      Poly p = series_truncate(parse_expr(expr), degree);
      if (c.json)
        std::cout << poly_to_json(p).dump() << "\n";
      else
        std::cout << p.to_string() << "\n";
    } else if (*schur) {
      SchurExpansion ex = schur_expand(parse_expr(expr), d, degree);
      if (c.json) {
        std::cout << to_json(ex).dump() << "\n";
      } else {
        for (const auto& [lambda, m] : ex.entries) std::cout << lambda.to_string() << " " << m.get_str() << "\n";
      }
    } else if (*cyc) {
      CyclotomicCheck r = cyclotomic_numerator_check(parse_expr(expr), bound);
      if (c.json) {
        std::cout << Json{{"cyclotomic", r.cyclotomic}, {"bound", r.bound}, {"bound_limited", r.bound_limited}}.dump()
                  << "\n";
      } else {
        std::cout << (r.cyclotomic ? "true" : "false");
        if (r.bound_limited) std::cout << " (bound-limited at " << r.bound << ")";
        std::cout << "\n";
      }
    } else if (*normalize) {
      emit(c, parse_expr(expr));
    } else if (*builtin) {
      emit(c, builtin_series(name, d));
    } else if (*corpus) {
      std::vector<OmegaStrategy> strategies;
      if (c.strategy != "elliott") strategies.push_back(OmegaStrategy::PartialFractions);
      if (c.strategy != "pf") strategies.push_back(OmegaStrategy::Elliott);
      auto fixtures = load_fixtures(fixtures_dir);
      if (!only_ids.empty())
        std::erase_if(fixtures, [&](const Fixture& fx) {
          return std::find(only_ids.begin(), only_ids.end(), fx.id) == only_ids.end();
        });
      auto results = run_corpus(fixtures, strategies, threads);
      int failed = 0, conflicts = 0;
      Json out = Json::array();
      for (const CorpusResult& r : results) {
        // A known conflict is expected to mismatch; matching it would be the surprise.
        bool conflict = !r.known_conflict.empty();
        bool bad = conflict ? r.ok || r.errored : !r.ok;
        if (bad) ++failed;
        if (conflict) ++conflicts;
        const char* tag = bad ? "FAIL " : conflict ? "KNOWN-CONFLICT " : "PASS ";
        if (c.json) {
          out.push_back({{"id", r.id},
                         {"status", bad ? "fail" : conflict ? "known-conflict" : "pass"},
                         {"seconds", r.seconds},
                         {"message", r.message},
                         {"known_conflict", r.known_conflict}});
        } else {
          std::cout << tag << r.id << " (" << r.seconds << " s)";
          if (!r.ok) std::cout << ": " << r.message;
          if (conflict) std::cout << " [" << r.known_conflict << "]";
          std::cout << "\n";
        }
      }
      if (c.json)
        std::cout << out.dump(2) << "\n";
      else
        std::cout << results.size() - failed - conflicts << "/" << results.size() << " fixtures passed, " << conflicts
                  << " known conflicts, " << failed << " failures\n";
      return failed == 0 ? kOk : kInternal;
    }
    return kOk;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Parse:
        return kParse;
      case ErrorKind::Precondition:
        return kPrecondition;
      case ErrorKind::Internal:
        return kInternal;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
