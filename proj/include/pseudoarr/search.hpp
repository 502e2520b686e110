// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pseudoarr/bounds.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace pseudoarr {

struct RandomParams {
  /// Unit circles with centers in the disk of radius `center_range`;
  /// otherwise radii are drawn from [radius_min, radius_max].
  bool unit_circles = false;
  /// Reject circles that would not cross every earlier one.
  bool require_complete = false;
  Rat center_range = 2;
  Rat radius_min = Rat(1, 2);
  Rat radius_max = 2;
  long denominator = 256;
  std::size_t resolution = 32;
  long max_attempts = 200;
};

/// Random circles polygonalized and validated; deterministic in (n, seed,
/// params). Throws Error(BudgetExhausted) if no attempt validates.
Arrangement random_arrangement(std::size_t n, std::uint64_t seed, const RandomParams &params = {});

/// Moves every polygon vertex by a random rational offset of size at most
/// `magnitude` per coordinate and re-validates. Returns the input unchanged
/// when no valid perturbation is found.
Arrangement perturb(const Arrangement &arr, std::uint64_t seed, const Rat &magnitude, int retries = 8);

struct GeneratorMix {
  long random_circles = 6;
  long perturbed_fixtures = 3;
  long unit_circles = 1;
};

struct SearchConfig {
  std::size_t n_min = 3;
  std::size_t n_max = 6;
  std::uint64_t seed = 1;
  long budget = 1000;
  GeneratorMix mix;
  /// Empty means the default list for each n.
  std::vector<long> k_list;
  /// Restricts the perturbed-fixture generator to these family names; empty
  /// means every family that can be built at the drawn n.
  std::vector<std::string> fixtures;
};

/// Independent recount of the weight and face vectors by classifying each
/// vertex location and face sample against every curve.
WeightProfile slow_weight_profile(const Arrangement &arr);

struct BoundTally {
  long applicable = 0;
  long holds = 0;
  long violated = 0;
  long not_met = 0;
};

struct FuzzViolation {
  long index = 0;
  std::string generator;
  std::string theorem;
  std::optional<long> k;
  long bound = 0;
  long measured = 0;
  std::string arrangement;
};

struct FuzzReport {
  SearchConfig config;
  long examined = 0;
  long complete = 0;
  std::map<std::string, long> by_generator;
  std::map<std::string, BoundTally> tallies;
  std::map<SignatureClass, long> signature_classes;
  long complete_triples = 0;
  long unknown_signatures = 0;
  long euler_failures = 0;
  long propagation_failures = 0;
  /// Complete samples with the Helly premise, and those among them with f_n > 0.
  long helly_premise = 0;
  long helly_confirmed = 0;
  /// Complete alpha-free samples and the number where the alpha-free bound held at every k.
  long alpha_free_complete = 0;
  long alpha_free_bound_holds = 0;
  std::vector<FuzzViolation> violations;

  bool ok() const { return violations.empty() && unknown_signatures == 0 && euler_failures == 0; }
};

struct GeneratedArrangement {
  long index = 0;
  std::string generator;
  std::shared_ptr<const Arrangement> arrangement;
};

/// The candidate stream of a search config, materialized. Indices whose
/// generator gave up are absent. With `complete_only` every generator is
/// asked for complete arrangements.
std::vector<GeneratedArrangement> generate_corpus(const SearchConfig &config, bool complete_only = false);

/// Runs every bound oracle on each arrangement of the corpus.
FuzzReport fuzz_corpus(const SearchConfig &config, const std::vector<GeneratedArrangement> &corpus);

/// fuzz_corpus over a freshly generated corpus, one arrangement at a time.
FuzzReport bound_fuzzer(const SearchConfig &config);

struct HuntBound {
  std::string name;
  long max_measured = 0;
  long bound_at_max = 0;
  long best_slack = 0;
  long tight = 0;
  bool seen = false;
};

struct HuntWitness {
  long index = 0;
  std::string generator;
  std::string bound;
  long n = 0;
  long measured = 0;
  long slack = 0;
  std::string arrangement;
};

struct HuntViolation {
  HuntWitness witness;
  /// The slow path agrees that the bound fails.
  bool reverified = false;
  std::string detail;
};

struct HuntReport {
  SearchConfig config;
  long examined = 0;
  long accepted = 0;
  std::map<std::string, long> by_generator;
  std::vector<HuntBound> bounds;
  long best_slack = 0;
  bool any_accepted = false;
  /// One serialized slack-0 witness per bound, when found.
  std::vector<HuntWitness> tight_witnesses;
  std::vector<HuntViolation> violations;
};

HuntReport conjecture_hunt(const SearchConfig &config);

std::string fuzz_report_json(const FuzzReport &report);
std::string hunt_report_json(const HuntReport &report);
/// Reads {"mode": "fuzz"|"hunt", "n_min", "n_max", "seed", "budget", "mix": {...}, "k_list": [...],
/// "fixtures": [...]}.
/// Throws Error(ParseError).
std::pair<std::string, SearchConfig> parse_search_config(const std::string &text);

}  // namespace pseudoarr
