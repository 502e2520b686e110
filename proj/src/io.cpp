// SPDX-License-Identifier: Apache-2.0
#include "pseudoarr/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace pseudoarr {

using ojson = nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_fail(const std::string &msg) { throw Error(ErrorCode::ParseError, msg); }

Rat parse_coordinate(const ojson &value, const std::string &where)
{
  if (!value.is_string()) {
    parse_fail(where + ": coordinates must be strings of the form \"p/q\"");
  }
  const auto parsed = parse_rational(value.get<std::string>());
  if (!parsed) {
    parse_fail(where + ": invalid rational \"" + value.get<std::string>() + "\"");
  }
  return *parsed;
}

}  // namespace

ArrangementFile parse_arrangement(std::string_view text)
{
  ojson doc;
  try {
    doc = ojson::parse(text);
  }
  catch (const nlohmann::json::parse_error &e) {
    parse_fail(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    parse_fail("top level must be an object");
  }
  if (!doc.contains("format") || doc["format"] != kArrangementFormat) {
    parse_fail(std::string("missing or wrong \"format\" (expected \"") + kArrangementFormat + "\")");
  }
  if (!doc.contains("version") || !doc["version"].is_number_integer() || doc["version"].get<int>() != kArrangementVersion) {
    parse_fail("unsupported \"version\" (expected " + std::to_string(kArrangementVersion) + ")");
  }
  if (!doc.contains("curves") || !doc["curves"].is_array()) {
    parse_fail("\"curves\" must be an array");
  }
  ArrangementFile file;
  for (std::size_t i = 0; i < doc["curves"].size(); ++i) {
    const ojson &c = doc["curves"][i];
    const std::string where = "curve " + std::to_string(i);
    if (!c.is_object() || !c.contains("id") || !c["id"].is_string() || !c.contains("ring") || !c["ring"].is_array()) {
      parse_fail(where + ": expected {\"id\": string, \"ring\": array}");
    }
    std::vector<Point> ring;
    for (std::size_t j = 0; j < c["ring"].size(); ++j) {
      const ojson &p = c["ring"][j];
      const std::string at = where + ", vertex " + std::to_string(j);
      if (!p.is_array() || p.size() != 2) {
        parse_fail(at + ": expected a pair of coordinates");
      }
      ring.push_back(Point{parse_coordinate(p[0], at), parse_coordinate(p[1], at)});
    }
    file.curves.emplace_back(c["id"].get<std::string>(), std::move(ring));
  }
  if (doc.contains("metadata")) {
    if (!doc["metadata"].is_object()) {
      parse_fail("\"metadata\" must be an object");
    }
    file.metadata = doc["metadata"].dump();
  }
  return file;
}

std::string serialize_arrangement(const ArrangementFile &file)
{
  ojson doc;
  doc["format"] = kArrangementFormat;
  doc["version"] = kArrangementVersion;
  ojson curves = ojson::array();
  for (const Pseudocircle &c : file.curves) {
    ojson ring = ojson::array();
    for (const Point &p : c.ring()) {
      ring.push_back(ojson::array({to_string(p.x), to_string(p.y)}));
    }
    curves.push_back(ojson{{"id", c.id()}, {"ring", std::move(ring)}});
  }
  doc["curves"] = std::move(curves);
  ojson meta = ojson::parse(file.metadata.empty() ? "{}" : file.metadata);
  if (!meta.is_object()) {
    throw Error(ErrorCode::InvalidArgument, "metadata must be a JSON object");
  }
  doc["metadata"] = std::move(meta);
  return doc.dump(1) + "\n";
}

std::string serialize_arrangement(const Arrangement &arr, std::string metadata)
{
  ArrangementFile file;
  for (std::size_t i = 0; i < arr.n(); ++i) {
    file.curves.push_back(arr.curve(i));
  }
  file.metadata = std::move(metadata);
  return serialize_arrangement(file);
}

std::string read_text_file(const std::string &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open '" + path + "' for reading");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) {
    throw Error(ErrorCode::IoError, "error while reading '" + path + "'");
  }
  return ss.str();
}

void write_text_file(const std::string &path, const std::string &content)
{
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  }
  out << content;
  out.flush();
  if (!out) {
    throw Error(ErrorCode::IoError, "error while writing '" + path + "'");
  }
}

ArrangementFile load_arrangement_file(const std::string &path) { return parse_arrangement(read_text_file(path)); }

// --- analysis document ----------------------------------------------------

namespace {

ojson report_json(const BoundReport &r)
{
  ojson hyps = ojson::array();
  for (const Hypothesis &h : r.hypotheses) {
    hyps.push_back(ojson{{"name", h.name}, {"required", h.required}, {"observed", h.observed}, {"satisfied", h.satisfied}});
  }
  ojson details = ojson::object();
  for (const auto &[key, value] : r.details) {
    details[key] = value;
  }
  ojson out;
  out["theorem"] = r.theorem;
  out["statement"] = r.statement;
  out["k"] = r.k ? ojson(*r.k) : ojson(nullptr);
  out["hypotheses"] = std::move(hyps);
  out["bound"] = r.bound_value;
  out["measured"] = r.measured;
  out["slack"] = r.slack;
  out["verdict"] = to_string(r.verdict);
  out["details"] = std::move(details);
  return out;
}

}  // namespace

std::string bound_reports_json(const std::vector<BoundReport> &reports)
{
  ojson arr = ojson::array();
  for (const auto &r : reports) {
    arr.push_back(report_json(r));
  }
  return arr.dump(2);
}

std::string analysis_document(const AnalysisContext &ctx, const std::vector<long> &k_list)
{
  const Arrangement &arr = *ctx.arrangement;
  const WeightProfile &p = ctx.profile;
  const long n = ctx.n();
  ojson doc;
  doc["format"] = "pseudoarr-analysis";
  doc["version"] = 1;
  doc["n"] = n;
  doc["ids"] = arr.ids();
  doc["complete"] = arr.is_complete();
  doc["weight_vector"] = p.v;
  doc["face_vector"] = p.f;
  ojson at_most = ojson::array();
  ojson at_least = ojson::array();
  for (long k = 0; k + 2 <= n; ++k) {
    at_most.push_back(p.v_at_most(k));
    at_least.push_back(p.v_at_least(k));
  }
  doc["v_at_most"] = std::move(at_most);
  doc["v_at_least"] = std::move(at_least);
  doc["graph"] = ojson{{"vertices", ctx.graph.vertex_count()},
                       {"edges", ctx.graph.proper_edge_count()},
                       {"faces", ctx.graph.faces().size()},
                       {"components", ctx.graph.component_count()},
                       {"euler_relation", euler_relation_holds(ctx.graph)}};
  const PatternReport &pr = ctx.patterns;
  ojson types = ojson::object();
  for (const auto &[type, count] : pr.type_histogram) {
    types[to_string(type)] = count;
  }
  ojson classes = ojson::object();
  for (const auto &[cls, count] : pr.class_histogram) {
    classes[to_string(cls)] = count;
  }
  doc["patterns"] = ojson{{"triples", pr.triples},
                          {"complete_triples", pr.complete_triples},
                          {"type_histogram", std::move(types)},
                          {"signature_histogram", std::move(classes)},
                          {"beta_class", to_string(ctx.table.beta_class)},
                          {"alpha_free", pr.alpha_free},
                          {"beta_free", pr.beta_free},
                          {"alpha4_free", pr.alpha4_free},
                          {"helly_premise", pr.helly_premise}};
  doc["k_list"] = k_list;
  ojson bounds = ojson::array();
  for (const auto &r : run_all(ctx, k_list)) {
    bounds.push_back(report_json(r));
  }
  doc["bounds"] = std::move(bounds);
  std::vector<Pseudocircle> curves;
  for (std::size_t i = 0; i < arr.n(); ++i) {
    curves.push_back(arr.curve(i));
  }
  std::vector<Point> points;
  for (const Crossing &x : arr.crossings()) {
    points.push_back(x.location);
  }
  const auto clearance = min_clearance(curves, points);
  doc["min_clearance"] = clearance ? ojson(to_string(*clearance)) : ojson(nullptr);
  return doc.dump(2) + "\n";
}

// --- SVG ------------------------------------------------------------------

namespace {

struct Frame {
  double xmin = 0;
  double ymax = 0;
  double scale = 1;
  double margin = 16;
  double width = 0;
  double height = 0;

  std::string xy(const Point &p) const
  {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f %.3f", margin + (p.x.get_d() - xmin) * scale,
                  margin + (ymax - p.y.get_d()) * scale);
    return buf;
  }
};

std::string ring_path(const Frame &fr, const std::vector<Point> &pts)
{
  std::string d;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    d += (i == 0 ? "M " : " L ") + fr.xy(pts[i]);
  }
  return d + " Z";
}

const std::array<const char *, 8> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                           "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

std::string fmt(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string render_svg(const Arrangement &arr, const RenderOptions &options)
{
  const Box box = arr.bounds();
  Frame fr;
  fr.xmin = box.xmin.get_d();
  fr.ymax = box.ymax.get_d();
  const double w = std::max(1e-9, box.xmax.get_d() - fr.xmin);
  const double h = std::max(1e-9, fr.ymax - box.ymin.get_d());
  fr.scale = (options.width - 2 * fr.margin) / std::max(w, h);
  fr.width = w * fr.scale + 2 * fr.margin;
  fr.height = h * fr.scale + 2 * fr.margin;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(fr.width) << "\" height=\""
      << fmt(fr.height) << "\" viewBox=\"0 0 " << fmt(fr.width) << ' ' << fmt(fr.height) << "\">\n";

  auto draw_curves = [&] {
    out << "<g id=\"curves\" fill=\"none\" stroke-width=\"1.5\">\n";
    for (std::size_t i = 0; i < arr.n(); ++i) {
      std::vector<Point> pts(arr.curve(i).ring().begin(), arr.curve(i).ring().end());
      out << "<path class=\"curve\" id=\"curve-" << arr.curve(i).id() << "\" stroke=\"" << kPalette[i % kPalette.size()]
          << "\" d=\"" << ring_path(fr, pts) << "\"/>\n";
    }
    out << "</g>\n";
  };

  if (options.faces) {
    const ArrangementGraph g(arr);
    out << "<g id=\"faces\" stroke=\"none\" fill=\"#3b6ea5\" fill-rule=\"evenodd\">\n";
    const double denom = static_cast<double>(std::max<std::size_t>(arr.n(), 1));
    for (std::size_t f = 0; f < g.faces().size(); ++f) {
      const Face &face = g.faces()[f];
      std::string d;
      if (!face.bounded) {
        d = "M 0 0 L " + fmt(fr.width) + " 0 L " + fmt(fr.width) + ' ' + fmt(fr.height) + " L 0 " + fmt(fr.height) + " Z";
      }
      for (std::size_t cyc : face.cycles) {
        d += (d.empty() ? "" : " ") + ring_path(fr, g.cycle_points(cyc));
      }
      out << "<path class=\"face w" << face.weight << "\" fill-opacity=\""
          << fmt(0.05 + 0.6 * static_cast<double>(face.weight) / denom) << "\" d=\"" << d << "\"/>\n";
    }
    out << "</g>\n";
  }
  draw_curves();
  if (options.vertices || options.emphasize_zero) {
    out << "<g id=\"vertices\">\n";
    for (std::size_t v = 0; v < arr.crossings().size(); ++v) {
      const int wt = arr.vertex_weight(v);
      if (!options.vertices && wt != 0) {
        continue;
      }
      const bool big = options.emphasize_zero && wt == 0;
      const std::string c = fr.xy(arr.crossings()[v].location);
      const auto space = c.find(' ');
      out << "<circle class=\"vertex w" << wt << "\" cx=\"" << c.substr(0, space) << "\" cy=\"" << c.substr(space + 1)
          << "\" r=\"" << (big ? "4" : "2.5") << "\" fill=\"" << (big ? "#d00000" : "#222222") << "\"/>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace pseudoarr
