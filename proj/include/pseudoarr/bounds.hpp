// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pseudoarr/arrangement.hpp"
#include "pseudoarr/patterns.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pseudoarr {

enum class Verdict { Holds, Violated, HypothesisNotMet };

std::string to_string(Verdict verdict);

struct Hypothesis {
  std::string name;
  std::string required;
  std::string observed;
  bool satisfied = false;
};

struct BoundReport {
  std::string theorem;
  std::string statement;
  std::vector<Hypothesis> hypotheses;
  std::optional<long> k;
  long bound_value = 0;
  long measured = 0;
  long slack = 0;
  Verdict verdict = Verdict::HypothesisNotMet;
  /// Extra measurements specific to the oracle, in a fixed order.
  std::vector<std::pair<std::string, long>> details;
};

/// Everything the oracles read, computed once.
struct AnalysisContext {
  explicit AnalysisContext(const Arrangement &arr, const LabelTable &table = LabelTable::shipped());
  explicit AnalysisContext(std::shared_ptr<const Arrangement> arr, const LabelTable &table = LabelTable::shipped());

  std::shared_ptr<const Arrangement> arrangement;
  ArrangementGraph graph;
  WeightProfile profile;
  PatternReport patterns;
  LabelTable table;

  long n() const { return static_cast<long>(arrangement->n()); }
};

BoundReport check_kedem(const AnalysisContext &ctx);
BoundReport check_sharir(const AnalysisContext &ctx, long k);
BoundReport check_linhart_yang(const AnalysisContext &ctx, long k);
BoundReport check_fn_positive(const AnalysisContext &ctx, long k);
BoundReport check_face_participation(const AnalysisContext &ctx);
BoundReport check_v0_f0(const AnalysisContext &ctx);
BoundReport check_f0(const AnalysisContext &ctx);
/// Lower-bound oracle: bound_value is f_n and the requirement is measured = 1 <= f_n.
BoundReport check_helly(const AnalysisContext &ctx);
BoundReport check_alpha_free(const AnalysisContext &ctx, long k);
BoundReport check_alpha4_v0(const AnalysisContext &ctx);
BoundReport check_f0_complete(const AnalysisContext &ctx);
BoundReport check_18kn(const AnalysisContext &ctx, long k);
/// measured is the number of bounded weight-0 faces that are not triangles
/// with exactly one alpha witness; the bound is 0.
BoundReport check_lemma_b_free(const AnalysisContext &ctx);

/// {0, 1, n/2, n-2}, without duplicates or negative entries.
std::vector<long> default_k_list(long n);

/// All thirteen oracles; k-dependent ones once per entry of k_list.
std::vector<BoundReport> run_all(const AnalysisContext &ctx, const std::vector<long> &k_list);
std::vector<BoundReport> run_all(const Arrangement &arr, const std::vector<long> &k_list);

/// Curves with an edge on the boundary of the weight-0 face with the most
/// participants, and that count.
long max_weight0_participation(const ArrangementGraph &g);

}  // namespace pseudoarr
