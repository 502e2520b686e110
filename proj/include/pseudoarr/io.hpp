// SPDX-License-Identifier: Apache-2.0
#pragma once

// File formats: the arrangement file (JSON with rationals as "p/q" strings),
// the analysis document, and SVG figures.

#include "pseudoarr/arrangement.hpp"
#include "pseudoarr/bounds.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace pseudoarr {

inline constexpr const char *kArrangementFormat = "pseudoarr-arrangement";
inline constexpr int kArrangementVersion = 1;

struct ArrangementFile {
  std::vector<Pseudocircle> curves;
  /// Metadata object serialized as compact JSON ("{}" when absent).
  std::string metadata = "{}";
};

/// Throws Error(ParseError) on malformed JSON, a wrong format tag, non-string
/// coordinates or invalid rationals; Error(InvalidCurve) on rings that are
/// not simple counterclockwise polygons.
ArrangementFile parse_arrangement(std::string_view text);
std::string serialize_arrangement(const ArrangementFile &file);
std::string serialize_arrangement(const Arrangement &arr, std::string metadata = "{}");

/// Throws Error(IoError).
std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &content);

ArrangementFile load_arrangement_file(const std::string &path);

/// The full analysis as pretty-printed JSON. Deterministic for equal input.
std::string analysis_document(const AnalysisContext &ctx, const std::vector<long> &k_list);
std::string bound_reports_json(const std::vector<BoundReport> &reports);

struct RenderOptions {
  bool vertices = false;
  bool faces = false;
  bool emphasize_zero = false;
  double width = 640;
};

std::string render_svg(const Arrangement &arr, const RenderOptions &options = {});

}  // namespace pseudoarr
