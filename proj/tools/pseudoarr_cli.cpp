// SPDX-License-Identifier: Apache-2.0
// Command-line front end. Talks to the library only through pseudoarr.h.
#include "pseudoarr/pseudoarr.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kConstruction = 3 };

int exit_code(pa_status status)
{
  switch (status) {
    case PA_OK:
      return kOk;
    case PA_ERR_PARSE:
    case PA_ERR_IO:
    case PA_ERR_INVALID_ARGUMENT:
    case PA_ERR_UNKNOWN_FAMILY:
    case PA_ERR_NULL_ARGUMENT:
      return kUsage;
    case PA_ERR_CONSTRUCTION_FAILED:
    case PA_ERR_DEGENERATE_RADIUS:
    case PA_ERR_REVERSAL_CHECK_FAILED:
    case PA_ERR_VALIDATION_FAILED:
    case PA_ERR_BUDGET_EXHAUSTED:
      return kConstruction;
    default:
      return kViolation;
  }
}

struct Failure {
  pa_status status;
};

void check(pa_status status)
{
  if (status != PA_OK) {
    throw Failure{status};
  }
}

/// Owns a string returned by the library.
class Text {
 public:
  Text() = default;
  Text(const Text &) = delete;
  Text &operator=(const Text &) = delete;
  ~Text() { pa_string_free(ptr_); }
  char **out() { return &ptr_; }
  std::string str() const { return ptr_ == nullptr ? std::string() : std::string(ptr_); }

 private:
  char *ptr_ = nullptr;
};

struct ArrangementDeleter {
  void operator()(pa_arrangement *a) const { pa_arrangement_free(a); }
};
using Handle = std::unique_ptr<pa_arrangement, ArrangementDeleter>;

Handle load(const std::string &path)
{
  pa_arrangement *raw = nullptr;
  check(pa_arrangement_load(path.c_str(), &raw));
  return Handle(raw);
}

void write_output(const std::string &path, const std::string &content)
{
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    throw Failure{PA_ERR_IO};
  }
}

/// Informational lines go to stderr when the main output is on stdout.
std::ostream &info(const std::string &out_path)
{
  return out_path.empty() || out_path == "-" ? std::cerr : std::cout;
}

std::string vector_text(const nlohmann::json &v)
{
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += (i ? "," : "") + std::to_string(v[i].get<long>());
  }
  return s + ")";
}

int cmd_validate(const std::string &path)
{
  int valid = 0;
  Text listing;
  check(pa_validate_file(path.c_str(), &valid, listing.out()));
  if (valid) {
    Handle h = load(path);
    std::cout << "valid: " << pa_arrangement_size(h.get()) << " curves, "
              << (pa_arrangement_is_complete(h.get()) ? "complete" : "not complete") << "\n";
    return kOk;
  }
  std::cout << "invalid:\n";
  std::istringstream lines(listing.str());
  for (std::string line; std::getline(lines, line);) {
    std::cout << "  " << line << "\n";
  }
  return kViolation;
}

int cmd_analyze(const std::string &path, const std::vector<long> &ks, bool check_flag, const std::string &out)
{
  Handle h = load(path);
  Text doc;
  int violated = 0;
  check(pa_analyze(h.get(), ks.empty() ? nullptr : ks.data(), ks.size(), doc.out(), &violated));
  write_output(out, doc.str());
  if (violated) {
    std::cerr << "a proven bound is reported as violated\n";
  }
  return check_flag && violated ? kViolation : kOk;
}

int cmd_construct(const std::string &family, const std::vector<std::pair<std::string, std::string>> &params,
                  const std::string &out)
{
  std::vector<const char *> keys;
  std::vector<const char *> values;
  for (const auto &[k, v] : params) {
    keys.push_back(k.c_str());
    values.push_back(v.c_str());
  }
  pa_arrangement *raw = nullptr;
  check(pa_construct(family.c_str(), keys.data(), values.data(), keys.size(), &raw));
  Handle h(raw);
  Text serialized;
  check(pa_arrangement_serialize(h.get(), serialized.out()));
  write_output(out, serialized.str());

  Text expected_text;
  Text profile_text;
  check(pa_family_expectations(family.c_str(), keys.data(), values.data(), keys.size(), expected_text.out()));
  check(pa_weight_profile(h.get(), profile_text.out()));
  const auto expected = nlohmann::json::parse(expected_text.str());
  const auto profile = nlohmann::json::parse(profile_text.str());
  std::ostream &os = info(out);
  os << family << ": " << pa_arrangement_size(h.get()) << " curves, "
     << (pa_arrangement_is_complete(h.get()) ? "complete" : "not complete") << "\n";
  os << "  v = " << vector_text(profile["v"]) << "\n";
  os << "  f = " << vector_text(profile["f"]) << "\n";
  bool all_match = true;
  for (const auto &[key, value] : expected.items()) {
    const auto &vec = profile[key.substr(0, 1)];
    const std::size_t k = std::stoul(key.substr(2));
    const long measured = k < vec.size() ? vec[k].get<long>() : 0;
    const bool match = measured == value.get<long>();
    all_match = all_match && match;
    os << "  " << key << ": expected " << value.get<long>() << ", measured " << measured
       << (match ? "" : "  MISMATCH") << "\n";
  }
  return all_match ? kOk : kConstruction;
}

int cmd_search(const std::string &config_path, std::optional<std::uint64_t> seed, std::optional<long> budget,
               const std::string &out)
{
  std::ifstream in(config_path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << config_path << "\n";
    return kUsage;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  pa_search_overrides ov{seed.has_value(), seed.value_or(0), budget.has_value(), budget.value_or(0)};
  Text report;
  int failed = 0;
  check(pa_search(buffer.str().c_str(), &ov, report.out(), &failed));
  write_output(out, report.str());
  if (failed) {
    std::cerr << "search found an internal oracle violation; see the report\n";
  }
  return failed ? kViolation : kOk;
}

int cmd_render(const std::string &path, const std::string &out, const pa_render_options &options)
{
  Handle h = load(path);
  Text svg;
  check(pa_render_svg(h.get(), &options, svg.out()));
  write_output(out, svg.str());
  return kOk;
}

int cmd_invert(const std::string &path, const std::string &out, unsigned resolution)
{
  Handle h = load(path);
  pa_arrangement *raw = nullptr;
  Text report;
  check(pa_invert(h.get(), resolution, &raw, report.out()));
  Handle inverted(raw);
  Text serialized;
  check(pa_arrangement_serialize(inverted.get(), serialized.out()));
  write_output(out, serialized.str());
  const auto r = nlohmann::json::parse(report.str());
  std::ostream &os = info(out);
  os << "before: v = " << vector_text(r["before"]) << "\n";
  os << "after:  v = " << vector_text(r["after"]) << "\n";
  os << "reversal check: " << r["reversal_check"].get<std::string>() << "\n";
  return kOk;
}

int cmd_families()
{
  Text list;
  check(pa_families(list.out()));
  for (const auto &f : nlohmann::json::parse(list.str())) {
    std::cout << f["name"].get<std::string>();
    const auto params = f["parameters"].get<std::string>();
    if (!params.empty()) {
      std::cout << " [" << params << "]";
    }
    std::cout << ": " << f["summary"].get<std::string>() << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Exact analysis of arrangements of pseudocircles"};
  app.set_version_flag("--version", std::string(pa_version()));
  app.require_subcommand(1);

  std::string path;
  std::string out;

  auto *validate = app.add_subcommand("validate", "check the arrangement axioms for a file");
  validate->add_option("file", path, "arrangement file")->required();

  std::vector<long> ks;
  bool check_flag = false;
  auto *analyze = app.add_subcommand("analyze", "weight vectors, patterns and bound reports as JSON");
  analyze->add_option("file", path, "arrangement file")->required();
  analyze->add_option("--k", ks, "k values for the k-dependent bounds (comma separated)")->delimiter(',');
  analyze->add_flag("--check", check_flag, "exit with status 1 if a proven bound is violated");
  analyze->add_option("--out", out, "output path (default stdout)");

  std::string family;
  std::optional<long> n_param;
  std::optional<long> m_param;
  std::optional<long> rows_param;
  std::optional<long> resolution_param;
  std::string epsilon;
  auto *construct = app.add_subcommand("construct", "build a named family and write it as an arrangement file");
  construct->add_option("family", family, "family name (see 'families')")->required();
  construct->add_option("--n", n_param, "number of curves");
  construct->add_option("--m", m_param, "number of curves (collinear_delta)");
  construct->add_option("--rows", rows_param, "rows (hex_packing)");
  construct->add_option("--epsilon", epsilon, "radius enlargement \"p/q\" (hex_packing)");
  construct->add_option("--resolution", resolution_param, "polygon vertices per circle");
  construct->add_option("--out", out, "output path (default stdout)");

  std::optional<std::uint64_t> seed;
  std::optional<long> budget;
  auto *search = app.add_subcommand("search", "run the bound fuzzer or the conjecture hunt from a JSON config");
  search->add_option("config", path, "search config file")->required();
  search->add_option("--seed", seed, "override the config seed");
  search->add_option("--budget", budget, "override the config budget")->check(CLI::NonNegativeNumber);
  search->add_option("--out", out, "report path (default stdout)");

  pa_render_options render_options{0, 0, 0, 640};
  auto *render = app.add_subcommand("render", "draw an arrangement as SVG");
  render->add_option("file", path, "arrangement file")->required();
  render->add_option("--out", out, "SVG path (default stdout)");
  render->add_flag("--vertices", render_options.vertices, "mark vertices colored by weight");
  render->add_flag("--faces", render_options.faces, "shade faces by weight");
  render->add_flag("--emphasize-zero", render_options.emphasize_zero, "enlarge weight-0 vertex markers");
  render->add_option("--width", render_options.width, "image width in pixels")->check(CLI::PositiveNumber);

  unsigned invert_resolution = 0;
  auto *invert = app.add_subcommand("invert", "map the arrangement inside out through a weight-n face");
  invert->add_option("file", path, "arrangement file")->required();
  invert->add_option("--out", out, "output path (default stdout)");
  invert->add_option("--resolution", invert_resolution, "samples per curve in the image");

  auto *families = app.add_subcommand("families", "list constructible families");

  try {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) {
      return cmd_validate(path);
    }
    if (*analyze) {
      return cmd_analyze(path, ks, check_flag, out);
    }
    if (*construct) {
      std::vector<std::pair<std::string, std::string>> params;
      auto add = [&](const char *key, const std::optional<long> &value) {
        if (value) {
          params.emplace_back(key, std::to_string(*value));
        }
      };
      add("n", n_param);
      add("m", m_param);
      add("rows", rows_param);
      add("resolution", resolution_param);
      if (!epsilon.empty()) {
        params.emplace_back("epsilon", epsilon);
      }
      if (family == "collinear_delta" && !m_param && n_param) {
        params.emplace_back("m", std::to_string(*n_param));
      }
      return cmd_construct(family, params, out);
    }
    if (*search) {
      return cmd_search(path, seed, budget, out);
    }
    if (*render) {
      return cmd_render(path, out, render_options);
    }
    if (*invert) {
      return cmd_invert(path, out, invert_resolution);
    }
    if (*families) {
      return cmd_families();
    }
  }
  catch (const Failure &f) {
    const char *message = pa_last_error();
    std::cerr << "error: " << (message[0] != '\0' ? message : pa_status_name(f.status)) << "\n";
    return exit_code(f.status);
  }
  return kUsage;
}
