#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rsf/json_io.hpp"
#include "rsf/nice_rational.hpp"
#include "rsf/omega.hpp"

namespace rsf {

/// One transcribed series together with the pipeline that should reproduce it.
///
/// Kinds and their parameters:
///   multiplicity    f | module | series (+ series_d), d, graded, output ("m" or "m_prime")
///   omega           f, zs
///   invariants      module, d, group
///   weitzenbock     cells
///   nc-invariants   series, series_d, module, d, group
///   nc-weitzenbock  series, series_d, cells
///   identity        f (compared directly against the expected value)
struct Fixture {
  std::string id;
  std::string citation;
  std::string kind;
  Json params;
  /// The transcription as text, and the same value in the nice-rational schema.
  std::string source;
  NiceRational expected;
  std::string file;
  /// Nonempty when the transcription is known to be wrong; says why.
  std::string known_conflict;
};

/// Reads every *.json file in `dir` (each an array of fixtures), sorted by file
/// name. The "source" text and the "expected" JSON must agree.
std::vector<Fixture> load_fixtures(const std::string& dir);

/// The symmetric function a fixture's pipeline feeds to the multiplicity series.
struct SymmetricInput {
  NiceRational f;
  int d = 0;
  bool graded = false;
};

/// The multiplicity-series input of a fixture; nullopt for omega and identity kinds.
std::optional<SymmetricInput> fixture_symmetric_input(const Fixture& fx);

/// Runs the pipeline a fixture names.
NiceRational evaluate_fixture(const Fixture& fx, const OmegaOptions& opt);

struct CorpusResult {
  std::string id;
  bool ok = false;
  /// The pipeline threw instead of producing a value.
  bool errored = false;
  std::string message;
  std::string known_conflict;
  double seconds = 0;
};

/// Evaluates each fixture under each strategy and compares with the expected
/// value; with two strategies the outputs must also agree with each other.
std::vector<CorpusResult> run_corpus(const std::vector<Fixture>& fixtures,
                                     const std::vector<OmegaStrategy>& strategies, unsigned threads = 0);

}  // namespace rsf
