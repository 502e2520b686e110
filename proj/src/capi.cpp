// SPDX-License-Identifier: Apache-2.0
#include "pseudoarr/pseudoarr.h"

#include "pseudoarr/bounds.hpp"
#include "pseudoarr/constructions.hpp"
#include "pseudoarr/io.hpp"
#include "pseudoarr/search.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <new>

struct pa_arrangement {
  std::shared_ptr<const pseudoarr::Arrangement> arr;
  std::string metadata = "{}";
};

namespace {

using namespace pseudoarr;
using ojson = nlohmann::ordered_json;

thread_local std::string last_error;

static_assert(static_cast<int>(ErrorCode::InvalidArgument) + 1 == PA_ERR_INVALID_ARGUMENT);
static_assert(static_cast<int>(ErrorCode::ParseError) + 1 == PA_ERR_PARSE);

pa_status status_of(ErrorCode code)
{
  // ErrorCode and pa_status list the library errors in the same order.
  return static_cast<pa_status>(static_cast<int>(code) + 1);
}

pa_status fail(pa_status status, const std::string &message)
{
  last_error = message;
  return status;
}

/// Runs `body`, translating exceptions into status codes.
template <class F>
pa_status guarded(F &&body)
{
  last_error.clear();
  try {
    return body();
  }
  catch (const Error &e) {
    return fail(status_of(e.code()), e.what());
  }
  catch (const std::bad_alloc &) {
    return fail(PA_ERR_INTERNAL, "out of memory");
  }
  catch (const std::exception &e) {
    return fail(PA_ERR_INTERNAL, e.what());
  }
}

char *duplicate(const std::string &text)
{
  char *out = static_cast<char *>(std::malloc(text.size() + 1));
  if (out == nullptr) {
    throw std::bad_alloc();
  }
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

std::map<std::string, std::string> param_map(const char *const *keys, const char *const *values, size_t count)
{
  std::map<std::string, std::string> params;
  for (size_t i = 0; i < count; ++i) {
    if (keys[i] == nullptr || values[i] == nullptr) {
      throw Error(ErrorCode::InvalidArgument, "null parameter name or value");
    }
    params[keys[i]] = values[i];
  }
  return params;
}

ojson profile_json(const WeightProfile &p) { return ojson{{"v", p.v}, {"f", p.f}}; }

pa_arrangement *wrap(Arrangement arr, std::string metadata)
{
  return new pa_arrangement{std::make_shared<const Arrangement>(std::move(arr)), std::move(metadata)};
}

pa_status validate_impl(const std::string &text, int *valid, char **listing)
{
  std::string lines;
  try {
    const ArrangementFile file = parse_arrangement(text);
    std::vector<Arrangement::CurvePtr> curves;
    for (const Pseudocircle &c : file.curves) {
      curves.push_back(std::make_shared<const Pseudocircle>(c));
    }
    for (const Violation &v : Arrangement::check(std::move(curves)).violations) {
      lines += v.describe() + "\n";
    }
  }
  catch (const Error &e) {
    if (e.code() != ErrorCode::InvalidCurve) {
      throw;
    }
    lines = std::string(e.what()) + "\n";
  }
  *valid = lines.empty() ? 1 : 0;
  *listing = duplicate(lines);
  return PA_OK;
}

}  // namespace

#define PA_REQUIRE(ptr)                                                \
  do {                                                                 \
    if ((ptr) == nullptr) {                                            \
      return fail(PA_ERR_NULL_ARGUMENT, "null argument: " #ptr);       \
    }                                                                  \
  } while (false)

extern "C" {

const char *pa_version(void) { return "1.0.0"; }

const char *pa_status_name(pa_status status)
{
  switch (status) {
    case PA_OK:
      return "Ok";
    case PA_ERR_NULL_ARGUMENT:
      return "NullArgument";
    case PA_ERR_INTERNAL:
      return "Internal";
    default:
      if (status > PA_OK && status < PA_ERR_NULL_ARGUMENT) {
        return to_string(static_cast<ErrorCode>(static_cast<int>(status) - 1));
      }
      return "Unknown";
  }
}

const char *pa_last_error(void) { return last_error.c_str(); }

void pa_string_free(char *text) { std::free(text); }

pa_status pa_arrangement_parse(const char *text, pa_arrangement **out)
{
  PA_REQUIRE(text);
  PA_REQUIRE(out);
  return guarded([&] {
    ArrangementFile file = parse_arrangement(text);
    *out = wrap(Arrangement::validate(std::move(file.curves)), std::move(file.metadata));
    return PA_OK;
  });
}

pa_status pa_arrangement_load(const char *path, pa_arrangement **out)
{
  PA_REQUIRE(path);
  PA_REQUIRE(out);
  return guarded([&] {
    ArrangementFile file = load_arrangement_file(path);
    *out = wrap(Arrangement::validate(std::move(file.curves)), std::move(file.metadata));
    return PA_OK;
  });
}

void pa_arrangement_free(pa_arrangement *arr) { delete arr; }

size_t pa_arrangement_size(const pa_arrangement *arr) { return arr == nullptr ? 0 : arr->arr->n(); }

int pa_arrangement_is_complete(const pa_arrangement *arr) { return arr != nullptr && arr->arr->is_complete() ? 1 : 0; }

pa_status pa_arrangement_metadata(const pa_arrangement *arr, char **json)
{
  PA_REQUIRE(arr);
  PA_REQUIRE(json);
  return guarded([&] {
    *json = duplicate(arr->metadata);
    return PA_OK;
  });
}

pa_status pa_arrangement_serialize(const pa_arrangement *arr, char **text)
{
  PA_REQUIRE(arr);
  PA_REQUIRE(text);
  return guarded([&] {
    *text = duplicate(serialize_arrangement(*arr->arr, arr->metadata));
    return PA_OK;
  });
}

pa_status pa_arrangement_save(const pa_arrangement *arr, const char *path)
{
  PA_REQUIRE(arr);
  PA_REQUIRE(path);
  return guarded([&] {
    write_text_file(path, serialize_arrangement(*arr->arr, arr->metadata));
    return PA_OK;
  });
}

pa_status pa_weight_profile(const pa_arrangement *arr, char **json)
{
  PA_REQUIRE(arr);
  PA_REQUIRE(json);
  return guarded([&] {
    *json = duplicate(profile_json(weight_profile(*arr->arr)).dump());
    return PA_OK;
  });
}

pa_status pa_validate_file(const char *path, int *valid, char **listing)
{
  PA_REQUIRE(path);
  PA_REQUIRE(valid);
  PA_REQUIRE(listing);
  return guarded([&] { return validate_impl(read_text_file(path), valid, listing); });
}

pa_status pa_validate_text(const char *text, int *valid, char **listing)
{
  PA_REQUIRE(text);
  PA_REQUIRE(valid);
  PA_REQUIRE(listing);
  return guarded([&] { return validate_impl(text, valid, listing); });
}

pa_status pa_analyze(const pa_arrangement *arr, const long *k_list, size_t k_count, char **document, int *violated)
{
  PA_REQUIRE(arr);
  PA_REQUIRE(document);
  if (k_count > 0) {
    PA_REQUIRE(k_list);
  }
  return guarded([&] {
    const AnalysisContext ctx(arr->arr);
    std::vector<long> ks(k_list, k_list + k_count);
    if (ks.empty()) {
      ks = default_k_list(ctx.n());
    }
    for (long k : ks) {
      if (k < 0) {
        throw Error(ErrorCode::InvalidArgument, "k must be non-negative");
      }
    }
    const std::string doc = analysis_document(ctx, ks);
    if (violated != nullptr) {
      *violated = 0;
      for (const BoundReport &r : run_all(ctx, ks)) {
        *violated = *violated || r.verdict == Verdict::Violated;
      }
    }
    *document = duplicate(doc);
    return PA_OK;
  });
}

void pa_set_vertex_weight_mutation(int offset) { set_vertex_weight_mutation(offset); }

pa_status pa_families(char **json)
{
  PA_REQUIRE(json);
  return guarded([&] {
    ojson list = ojson::array();
    for (const FamilyInfo &f : families()) {
      list.push_back(ojson{{"name", f.name}, {"parameters", f.parameters}, {"summary", f.summary}});
    }
    *json = duplicate(list.dump());
    return PA_OK;
  });
}

pa_status pa_construct(const char *family, const char *const *keys, const char *const *values, size_t count,
                       pa_arrangement **out)
{
  PA_REQUIRE(family);
  PA_REQUIRE(out);
  if (count > 0) {
    PA_REQUIRE(keys);
    PA_REQUIRE(values);
  }
  return guarded([&] {
    const auto params = param_map(keys, values, count);
    Arrangement arr = construct_family(family, params);
    ojson meta{{"generator", "construct"}, {"family", family}, {"parameters", params}};
    *out = wrap(std::move(arr), meta.dump());
    return PA_OK;
  });
}

pa_status pa_family_expectations(const char *family, const char *const *keys, const char *const *values, size_t count,
                                 char **json)
{
  PA_REQUIRE(family);
  PA_REQUIRE(json);
  if (count > 0) {
    PA_REQUIRE(keys);
    PA_REQUIRE(values);
  }
  return guarded([&] {
    ojson doc = ojson::object();
    for (const auto &[key, value] : family_expectations(family, param_map(keys, values, count))) {
      doc[key] = value;
    }
    *json = duplicate(doc.dump());
    return PA_OK;
  });
}

pa_status pa_invert(const pa_arrangement *arr, unsigned resolution, pa_arrangement **out, char **report)
{
  PA_REQUIRE(arr);
  PA_REQUIRE(out);
  return guarded([&] {
    Arrangement inv = resolution == 0 ? invert(*arr->arr) : invert(*arr->arr, resolution);
    const WeightProfile before = weight_profile(*arr->arr);
    const WeightProfile after = weight_profile(inv);
    if (report != nullptr) {
      *report = duplicate(ojson{{"before", before.v}, {"after", after.v}, {"reversal_check", "passed"}}.dump());
    }
    *out = wrap(std::move(inv), ojson{{"generator", "invert"}}.dump());
    return PA_OK;
  });
}

pa_status pa_search(const char *config, const pa_search_overrides *overrides, char **report, int *failed)
{
  PA_REQUIRE(config);
  PA_REQUIRE(report);
  return guarded([&] {
    auto [mode, cfg] = parse_search_config(config);
    if (overrides != nullptr && overrides->has_seed) {
      cfg.seed = overrides->seed;
    }
    if (overrides != nullptr && overrides->has_budget) {
      if (overrides->budget < 0) {
        throw Error(ErrorCode::InvalidArgument, "budget must be non-negative");
      }
      cfg.budget = overrides->budget;
    }
    int bad = 0;
    if (mode == "fuzz") {
      const FuzzReport r = bound_fuzzer(cfg);
      bad = !r.ok() || r.propagation_failures > 0;
      *report = duplicate(fuzz_report_json(r));
    }
    else {
      const HuntReport r = conjecture_hunt(cfg);
      for (const HuntViolation &v : r.violations) {
        // A finding that the slow path does not confirm means the two
        // measurements disagree, which is an internal error.
        bad = bad || !v.reverified;
      }
      *report = duplicate(hunt_report_json(r));
    }
    if (failed != nullptr) {
      *failed = bad;
    }
    return PA_OK;
  });
}

pa_status pa_render_svg(const pa_arrangement *arr, const pa_render_options *options, char **svg)
{
  PA_REQUIRE(arr);
  PA_REQUIRE(svg);
  return guarded([&] {
    RenderOptions opts;
    if (options != nullptr) {
      opts.vertices = options->vertices != 0;
      opts.faces = options->faces != 0;
      opts.emphasize_zero = options->emphasize_zero != 0;
      if (options->width > 0) {
        opts.width = options->width;
      }
    }
    *svg = duplicate(render_svg(*arr->arr, opts));
    return PA_OK;
  });
}

}  // extern "C"
