// SPDX-License-Identifier: Apache-2.0
#include "pseudoarr/search.hpp"

#include "pseudoarr/constructions.hpp"
#include "pseudoarr/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <tuple>

namespace pseudoarr {

using ojson = nlohmann::ordered_json;

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Uniform integer in [lo, hi]; avoids std::uniform_int_distribution so that
/// runs agree across standard libraries.
long uniform(std::mt19937_64 &rng, long lo, long hi)
{
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng() % span);
}

Rat uniform_rat(std::mt19937_64 &rng, const Rat &lo, const Rat &hi, long denominator)
{
  const Rat steps_q = (hi - lo) * denominator;
  const long steps = static_cast<long>(mpz_class(steps_q.get_num() / steps_q.get_den()).get_si());
  return lo + ratio(uniform(rng, 0, steps), denominator);
}

bool circles_cross(const Point &c1, const Rat &r1, const Point &c2, const Rat &r2)
{
  const Rat d2 = squared_distance(c1, c2);
  const Rat sum = r1 + r2;
  const Rat diff = r1 - r2;
  return d2 < sum * sum && d2 > diff * diff;
}

bool arrangement_error(ErrorCode code)
{
  switch (code) {
    case ErrorCode::InvalidCurve:
    case ErrorCode::TangentialContact:
    case ErrorCode::TooManyIntersections:
    case ErrorCode::VertexContact:
    case ErrorCode::TriplePoint:
    case ErrorCode::DuplicateId:
      return true;
    default:
      return false;
  }
}

}  // namespace

Arrangement random_arrangement(std::size_t n, std::uint64_t seed, const RandomParams &params)
{
  if (n < 1) {
    throw Error(ErrorCode::InvalidArgument, "random_arrangement needs n >= 1");
  }
  std::mt19937_64 rng(seed);
  const Rat range = params.center_range;
  for (long attempt = 0; attempt < params.max_attempts; ++attempt) {
    std::vector<Point> centers;
    std::vector<Rat> radii;
    long tries = 0;
    while (centers.size() < n && tries < 100 * static_cast<long>(n)) {
      ++tries;
      Point c{uniform_rat(rng, -range, range, params.denominator), uniform_rat(rng, -range, range, params.denominator)};
      if (params.unit_circles && squared_distance(c, Point{}) >= range * range) {
        continue;
      }
      const Rat r =
          params.unit_circles ? Rat(1) : uniform_rat(rng, params.radius_min, params.radius_max, params.denominator);
      bool ok = true;
      for (std::size_t j = 0; j < centers.size() && ok; ++j) {
        if (centers[j] == c && radii[j] == r) {
          ok = false;
        }
        else if (params.require_complete) {
          ok = circles_cross(c, r, centers[j], radii[j]);
        }
      }
      if (ok) {
        centers.push_back(c);
        radii.push_back(r);
      }
    }
    if (centers.size() < n) {
      continue;
    }
    std::vector<Pseudocircle> curves;
    for (std::size_t i = 0; i < n; ++i) {
      CirclePolygonSpec spec{centers[i], radii[i], params.resolution, ratio(uniform(rng, 0, 63), 64)};
      curves.push_back(circle_polygon(spec, "r" + std::to_string(i + 1)));
    }
    try {
      Arrangement arr = Arrangement::validate(std::move(curves));
      if (params.require_complete && !arr.is_complete()) {
        continue;
      }
      return arr;
    }
    catch (const Error &e) {
      if (!arrangement_error(e.code())) {
        throw;
      }
    }
  }
  throw Error(ErrorCode::BudgetExhausted, "no valid random arrangement after " + std::to_string(params.max_attempts) +
                                              " attempts");
}

Arrangement perturb(const Arrangement &arr, std::uint64_t seed, const Rat &magnitude, int retries)
{
  if (sgn(magnitude) == 0) {
    return arr;
  }
  std::mt19937_64 rng(seed);
  constexpr long steps = 64;
  for (int attempt = 0; attempt < retries; ++attempt) {
    try {
      std::vector<Pseudocircle> curves;
      for (std::size_t i = 0; i < arr.n(); ++i) {
        std::vector<Point> ring;
        for (const Point &p : arr.curve(i).ring()) {
          ring.push_back(Point{p.x + magnitude * ratio(uniform(rng, -steps, steps), steps),
                               p.y + magnitude * ratio(uniform(rng, -steps, steps), steps)});
        }
        curves.emplace_back(arr.curve(i).id(), std::move(ring));
      }
      return Arrangement::validate(std::move(curves));
    }
    catch (const Error &e) {
      if (!arrangement_error(e.code())) {
        throw;
      }
    }
  }
  return arr;
}

WeightProfile slow_weight_profile(const Arrangement &arr)
{
  const std::size_t n = arr.n();
  WeightProfile p;
  p.v.assign(n >= 2 ? n - 1 : 0, 0);
  p.f.assign(n + 1, 0);
  auto count_inside = [&](const Point &q) {
    long w = 0;
    for (std::size_t c = 0; c < n; ++c) {
      w += point_in_curve(q, arr.curve(c)) == Location::Inside ? 1 : 0;
    }
    return w;
  };
  for (const Crossing &x : arr.crossings()) {
    const long w = count_inside(x.location);
    if (w >= static_cast<long>(p.v.size())) {
      p.v.resize(static_cast<std::size_t>(w) + 1, 0);
    }
    ++p.v[static_cast<std::size_t>(w)];
  }
  const ArrangementGraph g(arr);
  for (std::size_t f = 0; f < g.faces().size(); ++f) {
    ++p.f[static_cast<std::size_t>(count_inside(g.face_sample(f)))];
  }
  return p;
}

// --- candidate stream -----------------------------------------------------

namespace {

struct Candidate {
  std::string generator;
  Arrangement arrangement;
};

class FixtureCache {
 public:
  /// Every fixture family that can be built with n curves.
  const std::vector<std::pair<std::string, Arrangement>> &get(std::size_t n)
  {
    auto it = cache_.find(n);
    if (it != cache_.end()) {
      return it->second;
    }
    std::vector<std::pair<std::string, Arrangement>> list;
    auto add = [&](const std::string &name, const std::function<Arrangement()> &make) {
      try {
        list.emplace_back(name, make());
      }
      catch (const Error &) {
        // Families that cannot be built at this n are simply absent.
      }
    };
    if (n == 3) {
      add("alpha_triple", [] { return alpha_triple(); });
      add("venn_triple", [] { return venn_triple(); });
      add("concentric_triple", [] { return concentric_type_triple(); });
    }
    if (n == 4) {
      add("alpha4", [] { return alpha4(); });
    }
    if (n >= 3) {
      add("collinear_delta", [n] { return collinear_delta(n); });
      add("sharp4n6", [n] { return sharp_4n6(n); });
      add("unit_circle_sharp", [n] { return unit_circle_sharp(n); });
      add("max_complete", [n] { return max_complete(n); });
    }
    if (n >= 2) {
      add("chain", [n] { return chain(n); });
      add("concentric_family", [n] { return concentric_family(n); });
    }
    return cache_.emplace(n, std::move(list)).first->second;
  }

 private:
  std::map<std::size_t, std::vector<std::pair<std::string, Arrangement>>> cache_;
};

class CandidateStream {
 public:
  CandidateStream(const SearchConfig &config, bool complete_only) : config_(config), complete_only_(complete_only)
  {
    if (config.n_min < 1 || config.n_max < config.n_min) {
      throw Error(ErrorCode::InvalidArgument, "need 1 <= n_min <= n_max");
    }
    const GeneratorMix &m = config.mix;
    if (m.random_circles < 0 || m.perturbed_fixtures < 0 || m.unit_circles < 0 ||
        m.random_circles + m.perturbed_fixtures + m.unit_circles <= 0) {
      throw Error(ErrorCode::InvalidArgument, "generator mix weights must be non-negative with a positive sum");
    }
  }

  std::optional<Candidate> make(long index)
  {
    const std::uint64_t s = splitmix64(config_.seed ^ splitmix64(static_cast<std::uint64_t>(index)));
    std::mt19937_64 rng(s);
    const GeneratorMix &m = config_.mix;
    const long pick = uniform(rng, 0, m.random_circles + m.perturbed_fixtures + m.unit_circles - 1);
    const auto n = static_cast<std::size_t>(
        uniform(rng, static_cast<long>(config_.n_min), static_cast<long>(config_.n_max)));
    const std::uint64_t sub = rng();
    try {
      if (pick < m.random_circles) {
        RandomParams params;
        params.require_complete = complete_only_ || uniform(rng, 0, 1) == 1;
        if (params.require_complete) {
          params.center_range = 1;
          params.radius_min = 1;
          params.radius_max = 2;
        }
        return Candidate{"random_circles", random_arrangement(n, sub, params)};
      }
      if (pick < m.random_circles + m.perturbed_fixtures) {
        const auto &list = fixtures_.get(n);
        std::vector<const std::pair<std::string, Arrangement> *> usable;
        for (const auto &entry : list) {
          const bool wanted = config_.fixtures.empty() || std::find(config_.fixtures.begin(), config_.fixtures.end(),
                                                                    entry.first) != config_.fixtures.end();
          if (wanted && (!complete_only_ || entry.second.is_complete())) {
            usable.push_back(&entry);
          }
        }
        if (usable.empty()) {
          return std::nullopt;
        }
        const auto *chosen = usable[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(usable.size()) - 1))];
        static const std::array<Rat, 4> magnitudes{Rat(0), ratio(1, 1L << 16), ratio(1, 1L << 12), ratio(1, 1L << 8)};
        const Rat &mag = magnitudes[static_cast<std::size_t>(uniform(rng, 0, 3))];
        return Candidate{"perturbed_" + chosen->first, perturb(chosen->second, sub, mag)};
      }
      RandomParams params;
      params.unit_circles = true;
      params.require_complete = complete_only_ || uniform(rng, 0, 1) == 1;
      params.center_range = params.require_complete ? Rat(1) : Rat(3, 2);
      params.resolution = 48;
      return Candidate{"unit_circles", random_arrangement(n, sub, params)};
    }
    catch (const Error &e) {
      if (e.code() == ErrorCode::BudgetExhausted) {
        return std::nullopt;
      }
      throw;
    }
  }

 private:
  SearchConfig config_;
  bool complete_only_;
  FixtureCache fixtures_;
};

/// Feeds `visit(index, candidate)` until `budget` candidates were produced.
/// Draws whose generator gives up are skipped, up to a bounded number.
template <class Visit>
void for_each_candidate(CandidateStream &stream, long budget, Visit &&visit)
{
  const long max_draws = 4 * budget + 64;
  long produced = 0;
  for (long i = 0; produced < budget && i < max_draws; ++i) {
    if (auto cand = stream.make(i)) {
      ++produced;
      visit(i, std::move(*cand));
    }
  }
}

std::vector<long> k_list_for(const SearchConfig &config, long n)
{
  return config.k_list.empty() ? default_k_list(n) : config.k_list;
}

}  // namespace

namespace {

void fuzz_one(FuzzReport &report, const SearchConfig &config, long index, const std::string &generator,
              const std::shared_ptr<const Arrangement> &arr)
{
  ++report.examined;
  ++report.by_generator[generator];
  std::optional<AnalysisContext> ctx;
  try {
    ctx.emplace(arr);
  }
  catch (const Error &e) {
    if (e.code() != ErrorCode::UnknownSignature) {
      throw;
    }
    ++report.unknown_signatures;
    report.violations.push_back(
        FuzzViolation{index, generator, "Classification", std::nullopt, 0, 0, serialize_arrangement(*arr)});
    return;
  }
  const long n = ctx->n();
  report.complete += ctx->patterns.complete ? 1 : 0;
  report.complete_triples += ctx->patterns.complete_triples;
  for (const auto &[cls, count] : ctx->patterns.class_histogram) {
    report.signature_classes[cls] += count;
  }
  report.euler_failures += euler_relation_holds(ctx->graph) ? 0 : 1;
  report.propagation_failures += face_weight_propagation_check(ctx->graph) ? 0 : 1;
  if (ctx->patterns.complete && ctx->patterns.helly_premise && n >= 3) {
    ++report.helly_premise;
    report.helly_confirmed += ctx->profile.f_at(n) > 0 ? 1 : 0;
  }
  bool alpha_free_holds = true;
  for (const BoundReport &r : run_all(*ctx, k_list_for(config, n))) {
    BoundTally &t = report.tallies[r.theorem];
    switch (r.verdict) {
      case Verdict::Holds:
        ++t.applicable;
        ++t.holds;
        break;
      case Verdict::Violated:
        ++t.applicable;
        ++t.violated;
        report.violations.push_back(
            FuzzViolation{index, generator, r.theorem, r.k, r.bound_value, r.measured, serialize_arrangement(*arr)});
        break;
      case Verdict::HypothesisNotMet:
        ++t.not_met;
        break;
    }
    if (r.theorem == "AlphaFree" && r.verdict != Verdict::Holds && r.k && *r.k <= n - 2) {
      alpha_free_holds = false;
    }
  }
  if (ctx->patterns.complete && ctx->patterns.alpha_free && n >= 2) {
    ++report.alpha_free_complete;
    report.alpha_free_bound_holds += alpha_free_holds ? 1 : 0;
  }
}

}  // namespace

std::vector<GeneratedArrangement> generate_corpus(const SearchConfig &config, bool complete_only)
{
  std::vector<GeneratedArrangement> corpus;
  CandidateStream stream(config, complete_only);
  for_each_candidate(stream, config.budget, [&](long i, Candidate cand) {
    corpus.push_back(
        GeneratedArrangement{i, cand.generator, std::make_shared<const Arrangement>(std::move(cand.arrangement))});
  });
  return corpus;
}

FuzzReport fuzz_corpus(const SearchConfig &config, const std::vector<GeneratedArrangement> &corpus)
{
  FuzzReport report;
  report.config = config;
  for (const GeneratedArrangement &g : corpus) {
    fuzz_one(report, config, g.index, g.generator, g.arrangement);
  }
  return report;
}

FuzzReport bound_fuzzer(const SearchConfig &config)
{
  FuzzReport report;
  report.config = config;
  CandidateStream stream(config, false);
  for_each_candidate(stream, config.budget, [&](long i, Candidate cand) {
    fuzz_one(report, config, i, cand.generator, std::make_shared<const Arrangement>(std::move(cand.arrangement)));
  });
  return report;
}

namespace {

struct Measured {
  long n = 0;
  long v0 = 0;
  long f0 = 0;
  std::vector<std::pair<long, long>> v_le;  // (k, v_<=k)
};

Measured measure(long n, const WeightProfile &p, const std::vector<long> &ks)
{
  Measured m{n, p.v_at(0), p.f_at(0), {}};
  for (long k : ks) {
    if (k > 0) {
      m.v_le.emplace_back(k, p.v_at_most(k));
    }
  }
  return m;
}

/// (bound name, bound value, measured) triples for the conjectured bounds.
std::vector<std::tuple<std::string, long, long>> conjectured(const Measured &m)
{
  std::vector<std::tuple<std::string, long, long>> out{{"v0 <= 4n-6", 4 * m.n - 6, m.v0}, {"f0 <= n-1", m.n - 1, m.f0}};
  for (const auto &[k, v] : m.v_le) {
    out.emplace_back("v<=" + std::to_string(k) + " <= 18kn", 18 * k * m.n, v);
  }
  return out;
}

HuntViolation reverify(HuntWitness w, const std::string &bound_name, const std::vector<long> &ks)
{
  HuntViolation out{std::move(w), false, ""};
  try {
    const ArrangementFile file = parse_arrangement(out.witness.arrangement);
    const Arrangement arr = Arrangement::validate(file.curves);
    if (!arr.is_complete()) {
      out.detail = "not complete on reload";
      return out;
    }
    if (!pattern_scan(arr).alpha4_free) {
      out.detail = "contains an alpha4 quadruple on reload";
      return out;
    }
    const WeightProfile slow = slow_weight_profile(arr);
    for (const auto &[name, bound, measured] : conjectured(measure(static_cast<long>(arr.n()), slow, ks))) {
      if (name == bound_name) {
        out.reverified = measured > bound;
        out.detail = "slow path measured " + std::to_string(measured) + " against " + std::to_string(bound);
      }
    }
  }
  catch (const Error &e) {
    out.detail = std::string("reload failed: ") + e.what();
  }
  return out;
}

}  // namespace

HuntReport conjecture_hunt(const SearchConfig &config)
{
  HuntReport report;
  report.config = config;
  if (config.budget <= 0) {
    return report;
  }
  SearchConfig cfg = config;
  cfg.n_min = std::max<std::size_t>(cfg.n_min, 3);
  cfg.n_max = std::max(cfg.n_max, cfg.n_min);
  CandidateStream stream(cfg, true);
  std::map<std::string, std::size_t> slot;
  std::set<std::pair<std::string, std::string>> witnessed;
  for_each_candidate(stream, config.budget, [&](long i, Candidate cand) {
    ++report.examined;
    ++report.by_generator[cand.generator];
    const Arrangement &arr = cand.arrangement;
    if (!arr.is_complete() || !pattern_scan(arr).alpha4_free) {
      return;
    }
    ++report.accepted;
    const long n = static_cast<long>(arr.n());
    const auto ks = k_list_for(cfg, n);
    const Measured m = measure(n, weight_profile(arr), ks);
    for (const auto &[name, bound, measured] : conjectured(m)) {
      auto [it, fresh] = slot.emplace(name, report.bounds.size());
      if (fresh) {
        report.bounds.push_back(HuntBound{name});
      }
      HuntBound &hb = report.bounds[it->second];
      const long slack = bound - measured;
      if (!hb.seen || measured > hb.max_measured) {
        hb.max_measured = measured;
        hb.bound_at_max = bound;
      }
      if (!hb.seen || slack < hb.best_slack) {
        hb.best_slack = slack;
      }
      hb.seen = true;
      if (!report.any_accepted || slack < report.best_slack) {
        report.best_slack = slack;
      }
      report.any_accepted = true;
      HuntWitness w{i, cand.generator, name, n, measured, slack, ""};
      if (slack == 0) {
        ++hb.tight;
        if (witnessed.emplace(name, cand.generator).second) {
          w.arrangement = serialize_arrangement(arr);
          report.tight_witnesses.push_back(std::move(w));
        }
      }
      else if (slack < 0) {
        w.arrangement = serialize_arrangement(arr);
        report.violations.push_back(reverify(std::move(w), name, ks));
      }
    }
  });
  return report;
}

// --- JSON -----------------------------------------------------------------

namespace {

ojson config_json(const SearchConfig &c)
{
  return ojson{{"n_min", c.n_min},
               {"n_max", c.n_max},
               {"seed", c.seed},
               {"budget", c.budget},
               {"mix",
                {{"random_circles", c.mix.random_circles},
                 {"perturbed_fixtures", c.mix.perturbed_fixtures},
                 {"unit_circles", c.mix.unit_circles}}},
               {"k_list", c.k_list},
               {"fixtures", c.fixtures}};
}

ojson embed(const std::string &arrangement) { return ojson::parse(arrangement); }

}  // namespace

std::string fuzz_report_json(const FuzzReport &r)
{
  ojson doc;
  doc["kind"] = "fuzz";
  doc["config"] = config_json(r.config);
  doc["examined"] = r.examined;
  doc["complete"] = r.complete;
  doc["by_generator"] = r.by_generator;
  ojson tallies = ojson::object();
  for (const auto &[name, t] : r.tallies) {
    tallies[name] = ojson{{"applicable", t.applicable}, {"holds", t.holds}, {"violated", t.violated}, {"not_met", t.not_met}};
  }
  doc["tallies"] = std::move(tallies);
  ojson classes = ojson::object();
  for (const auto &[cls, count] : r.signature_classes) {
    classes[to_string(cls)] = count;
  }
  doc["complete_triples"] = r.complete_triples;
  doc["signature_classes"] = std::move(classes);
  doc["unknown_signatures"] = r.unknown_signatures;
  doc["euler_failures"] = r.euler_failures;
  doc["propagation_failures"] = r.propagation_failures;
  doc["helly"] = ojson{{"premise", r.helly_premise}, {"confirmed", r.helly_confirmed}};
  doc["alpha_free"] = ojson{{"complete_samples", r.alpha_free_complete}, {"bound_holds", r.alpha_free_bound_holds}};
  ojson violations = ojson::array();
  for (const auto &v : r.violations) {
    violations.push_back(ojson{{"index", v.index},
                               {"generator", v.generator},
                               {"theorem", v.theorem},
                               {"k", v.k ? ojson(*v.k) : ojson(nullptr)},
                               {"bound", v.bound},
                               {"measured", v.measured},
                               {"arrangement", embed(v.arrangement)}});
  }
  doc["violations"] = std::move(violations);
  return doc.dump(2) + "\n";
}

std::string hunt_report_json(const HuntReport &r)
{
  ojson doc;
  doc["kind"] = "hunt";
  doc["config"] = config_json(r.config);
  doc["examined"] = r.examined;
  doc["accepted"] = r.accepted;
  doc["by_generator"] = r.by_generator;
  ojson bounds = ojson::array();
  for (const auto &b : r.bounds) {
    bounds.push_back(ojson{{"bound", b.name},
                           {"max_measured", b.max_measured},
                           {"bound_at_max", b.bound_at_max},
                           {"best_slack", b.best_slack},
                           {"tight_cases", b.tight}});
  }
  doc["bounds"] = std::move(bounds);
  doc["best_slack"] = r.any_accepted ? ojson(r.best_slack) : ojson(nullptr);
  auto witness_json = [](const HuntWitness &w) {
    return ojson{{"index", w.index},     {"generator", w.generator}, {"bound", w.bound},
                 {"n", w.n},             {"measured", w.measured},   {"slack", w.slack},
                 {"arrangement", embed(w.arrangement)}};
  };
  ojson tight = ojson::array();
  for (const auto &w : r.tight_witnesses) {
    tight.push_back(witness_json(w));
  }
  doc["tight_witnesses"] = std::move(tight);
  ojson violations = ojson::array();
  for (const auto &v : r.violations) {
    ojson j = witness_json(v.witness);
    j["reverified"] = v.reverified;
    j["detail"] = v.detail;
    violations.push_back(std::move(j));
  }
  doc["violations"] = std::move(violations);
  return doc.dump(2) + "\n";
}

std::pair<std::string, SearchConfig> parse_search_config(const std::string &text)
{
  ojson doc;
  try {
    doc = ojson::parse(text);
  }
  catch (const nlohmann::json::parse_error &e) {
    throw Error(ErrorCode::ParseError, std::string("malformed search config: ") + e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::ParseError, "search config must be an object");
  }
  static const std::set<std::string> known{"mode", "n", "n_min", "n_max", "seed", "budget", "mix", "k_list", "fixtures"};
  for (const auto &item : doc.items()) {
    if (!known.contains(item.key())) {
      throw Error(ErrorCode::ParseError, "unknown search config field '" + item.key() + "'");
    }
  }
  SearchConfig c;
  std::string mode = "fuzz";
  try {
    if (doc.contains("mode")) {
      mode = doc.at("mode").get<std::string>();
    }
    if (mode != "fuzz" && mode != "hunt") {
      throw Error(ErrorCode::ParseError, "mode must be \"fuzz\" or \"hunt\"");
    }
    auto get_size = [&](const char *key, std::size_t &out) {
      if (doc.contains(key)) {
        const long v = doc.at(key).get<long>();
        if (v < 0) {
          throw Error(ErrorCode::ParseError, std::string(key) + " must be non-negative");
        }
        out = static_cast<std::size_t>(v);
      }
    };
    get_size("n_min", c.n_min);
    get_size("n_max", c.n_max);
    if (doc.contains("n")) {
      get_size("n", c.n_max);
      c.n_min = std::min(c.n_min, c.n_max);
    }
    if (doc.contains("seed")) {
      c.seed = doc.at("seed").get<std::uint64_t>();
    }
    if (doc.contains("budget")) {
      c.budget = doc.at("budget").get<long>();
    }
    if (doc.contains("mix")) {
      const ojson &m = doc.at("mix");
      for (const auto &item : m.items()) {
        if (item.key() != "random_circles" && item.key() != "perturbed_fixtures" && item.key() != "unit_circles") {
          throw Error(ErrorCode::ParseError, "unknown generator '" + item.key() + "' in mix");
        }
      }
      c.mix.random_circles = m.value("random_circles", c.mix.random_circles);
      c.mix.perturbed_fixtures = m.value("perturbed_fixtures", c.mix.perturbed_fixtures);
      c.mix.unit_circles = m.value("unit_circles", c.mix.unit_circles);
    }
    if (doc.contains("k_list")) {
      c.k_list = doc.at("k_list").get<std::vector<long>>();
    }
    if (doc.contains("fixtures")) {
      c.fixtures = doc.at("fixtures").get<std::vector<std::string>>();
    }
  }
  catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::ParseError, std::string("bad search config field: ") + e.what());
  }
  if (c.budget < 0) {
    throw Error(ErrorCode::ParseError, "budget must be non-negative");
  }
  return {mode, c};
}

}  // namespace pseudoarr
