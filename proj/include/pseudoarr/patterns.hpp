// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pseudoarr/arrangement.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace pseudoarr {

/// Sorted per-pair counts of crossings lying inside the third curve.
using SignatureClass = std::array<int, 3>;

std::string to_string(const SignatureClass &cls);

struct TripleSignature {
  SignatureClass pair_containment{};
  long f3 = 0;
  long bounded_w0_faces = 0;
  std::vector<long> v;
};

enum class TripleType { Alpha, Beta, Gamma, Delta, NotComplete };

std::string to_string(TripleType type);

/// Assignment of signature classes to the four plane types, plus the class
/// whose absence "beta-free" refers to.
struct LabelTable {
  std::map<SignatureClass, TripleType> labels;
  SignatureClass beta_class{};

  /// Alpha (0,0,0), Delta (0,0,2), Beta (1,1,1), Gamma (0,2,2); the class
  /// tested by beta-freeness is (0,0,2), the outcome of resolve_beta().
  static const LabelTable &shipped();
};

Arrangement induced_subarrangement(const Arrangement &arr, std::span<const std::string> ids);

/// Throws Error(IncompleteTriple) if some pair of the three does not cross.
TripleSignature triple_signature(const Arrangement &arr, std::size_t a, std::size_t b, std::size_t c);

/// Throws Error(UnknownSignature) for a class the table does not know.
TripleType classify_triple(const TripleSignature &sig, const LabelTable &table = LabelTable::shipped());

bool is_alpha4(const Arrangement &arr, std::size_t a, std::size_t b, std::size_t c, std::size_t d,
               const LabelTable &table = LabelTable::shipped());

struct PatternReport {
  bool complete = false;
  long triples = 0;
  long complete_triples = 0;
  std::map<TripleType, long> type_histogram;
  std::map<SignatureClass, long> class_histogram;
  bool alpha_free = true;
  bool beta_free = true;
  bool alpha4_free = true;
  bool helly_premise = true;
};

PatternReport pattern_scan(const Arrangement &arr, const LabelTable &table = LabelTable::shipped());

/// Outcome of the experiment that identifies the forbidden class: random
/// curves crossing both weight-0 faces of an alpha triple, and the non-alpha
/// classes they form with two of its curves.
struct BetaResolution {
  std::uint64_t seed = 0;
  long candidates = 0;
  long qualifying = 0;
  /// Non-alpha classes present in every qualifying sample.
  std::vector<SignatureClass> necessary;
  /// How many qualifying samples showed each class.
  std::map<SignatureClass, long> occurrences;
  /// The unique necessary class, if there is exactly one.
  std::optional<SignatureClass> beta;
};

BetaResolution resolve_beta(std::uint64_t seed = 1, long candidates = 1500);

}  // namespace pseudoarr
