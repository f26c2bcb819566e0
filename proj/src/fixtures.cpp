#include "rsf/fixtures.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <thread>

#include "rsf/applications.hpp"
#include "rsf/error.hpp"
#include "rsf/parse.hpp"
#include "rsf/schur.hpp"

namespace rsf {

namespace {

Group parse_group(const std::string& s) {
  if (s == "sl") return Group::SL;
  if (s == "ut") return Group::UT;
  throw_parse("bad group", s);
}

NiceRational series_param(const Json& p) {
  std::string s = p.at("series").get<std::string>();
  if (is_builtin(s)) return builtin_series(s, p.value("series_d", 0));
  return parse_expr(s);
}

}  // namespace

std::vector<Fixture> load_fixtures(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<Fixture> out;
  for (const fs::path& path : files) {
    std::ifstream in(path);
    Json all;
    try {
      all = Json::parse(in);
    } catch (const Json::exception& e) {
      throw_parse("bad fixture file", path.string() + ": " + e.what());
    }
    for (const Json& j : all) {
      Fixture fx;
      fx.file = path.filename().string();
      fx.id = j.at("id").get<std::string>();
      fx.citation = j.value("citation", "");
      fx.kind = j.at("kind").get<std::string>();
      fx.params = j.value("params", Json::object());
      fx.source = j.at("source").get<std::string>();
      fx.known_conflict = j.value("known_conflict", "");
      fx.expected = nice_rational_from_json(j.at("expected"));
      if (!nr_equal(parse_expr(fx.source), fx.expected))
        throw_parse("fixture source and expected value disagree", fx.id);
      out.push_back(std::move(fx));
    }
  }
  return out;
}

std::optional<SymmetricInput> fixture_symmetric_input(const Fixture& fx) {
  const Json& p = fx.params;
  if (fx.kind == "multiplicity") {
    int d = p.at("d").get<int>();
    bool graded = p.value("graded", false);
    if (p.contains("module")) return SymmetricInput{hilbert_symmetric_algebra(parse_module(p.at("module").get<std::string>(), d), graded), d, graded};
    if (p.contains("series")) return SymmetricInput{series_param(p), d, graded};
    return SymmetricInput{parse_expr(p.at("f").get<std::string>()), d, graded};
  }
  if (fx.kind == "invariants") {
    int d = p.at("d").get<int>();
    return SymmetricInput{hilbert_symmetric_algebra(parse_module(p.at("module").get<std::string>(), d), true), d, true};
  }
  if (fx.kind == "weitzenbock")
    return SymmetricInput{weitzenbock_generating_function(JordanShape{parse_int_list(p.at("cells").get<std::string>())}),
                          2, true};
  if (fx.kind == "nc-invariants") {
    int d = p.at("d").get<int>();
    WeightList w = weights_of_module(parse_module(p.at("module").get<std::string>(), d));
    return SymmetricInput{substitute_weights(series_param(p), w, d), d, true};
  }
  if (fx.kind == "nc-weitzenbock") {
    WeightList w = weitzenbock_weights(JordanShape{parse_int_list(p.at("cells").get<std::string>())});
    return SymmetricInput{substitute_weights(series_param(p), w, 2), 2, true};
  }
  return std::nullopt;
}

NiceRational evaluate_fixture(const Fixture& fx, const OmegaOptions& opt) {
  const Json& p = fx.params;
  if (fx.kind == "multiplicity") {
    SymmetricInput in = *fixture_symmetric_input(fx);
    MultiplicitySeries ms = multiplicity_series(in.f, in.d, in.graded, opt);
    return p.value("output", "m_prime") == "m" ? ms.m : ms.m_prime;
  }
  if (fx.kind == "omega") {
    return omega_geq(parse_expr(p.at("f").get<std::string>()), parse_var_list(p.at("zs").get<std::string>()), opt);
  }
  if (fx.kind == "invariants") {
    int d = p.at("d").get<int>();
    return invariants_hilbert(parse_module(p.at("module").get<std::string>(), d),
                              parse_group(p.at("group").get<std::string>()), opt);
  }
  if (fx.kind == "weitzenbock") {
    return weitzenbock_hilbert(JordanShape{parse_int_list(p.at("cells").get<std::string>())}, opt);
  }
  if (fx.kind == "nc-invariants") {
    int d = p.at("d").get<int>();
    WeightList w = weights_of_module(parse_module(p.at("module").get<std::string>(), d));
    return noncommutative_invariants(series_param(p), w, d, parse_group(p.at("group").get<std::string>()), opt);
  }
  if (fx.kind == "nc-weitzenbock") {
    return noncommutative_weitzenbock(series_param(p), JordanShape{parse_int_list(p.at("cells").get<std::string>())},
                                      opt);
  }
  if (fx.kind == "identity") return parse_expr(p.at("f").get<std::string>());
  throw_parse("unknown fixture kind", fx.kind);
}

namespace {

const char* strategy_name(OmegaStrategy s) { return s == OmegaStrategy::Elliott ? "elliott" : "pf"; }

CorpusResult run_one(const Fixture& fx, const std::vector<OmegaStrategy>& strategies) {
  CorpusResult r;
  r.id = fx.id;
  r.known_conflict = fx.known_conflict;
  auto start = std::chrono::steady_clock::now();
  try {
    std::vector<NiceRational> outs;
    r.ok = true;
    for (OmegaStrategy s : strategies) {
      OmegaOptions opt;
      opt.strategy = s;
      NiceRational v = evaluate_fixture(fx, opt);
      if (!nr_equal(v, fx.expected)) {
        r.ok = false;
        r.message += std::string(strategy_name(s)) + " result " + v.to_string() + " differs from expected; ";
      }
      outs.push_back(std::move(v));
    }
    for (std::size_t i = 1; i < outs.size(); ++i)
      if (!nr_equal(outs[0], outs[i])) {
        r.ok = false;
        r.message += "strategies disagree; ";
      }
  } catch (const std::exception& e) {
    r.ok = false;
    r.errored = true;
    r.message = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

std::vector<CorpusResult> run_corpus(const std::vector<Fixture>& fixtures,
                                     const std::vector<OmegaStrategy>& strategies, unsigned threads) {
  std::vector<CorpusResult> out(fixtures.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < fixtures.size(); i = next++) out[i] = run_one(fixtures[i], strategies);
  };
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return out;
}

}  // namespace rsf
