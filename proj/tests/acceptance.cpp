// SPDX-License-Identifier: Apache-2.0
// Acceptance run: prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails. Usage: acceptance [fixture-directory]
#include "pseudoarr/bounds.hpp"
#include "pseudoarr/constructions.hpp"
#include "pseudoarr/io.hpp"
#include "pseudoarr/patterns.hpp"
#include "pseudoarr/search.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace pseudoarr;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

/// Collects failure reasons for one criterion.
class Criterion {
 public:
  explicit Criterion(int number) : number_(number), start_(Clock::now()) {}

  void require(bool ok, const std::string &what)
  {
    if (!ok) {
      problems_.push_back(what);
    }
  }
  void note(const std::string &text) { notes_.push_back(text); }

  bool finish(const std::string &summary) const
  {
    const bool ok = problems_.empty();
    std::ostringstream line;
    line << "criterion " << number_ << ": " << (ok ? "PASS" : "FAIL") << " - " << summary;
    for (const auto &n : notes_) {
      line << "; " << n;
    }
    line << " [" << std::fixed;
    line.precision(1);
    line << seconds_since(start_) << " s]";
    std::cout << line.str() << "\n";
    for (const auto &p : problems_) {
      std::cout << "    problem: " << p << "\n";
    }
    std::cout.flush();
    return ok;
  }

 private:
  int number_;
  Clock::time_point start_;
  std::vector<std::string> problems_;
  std::vector<std::string> notes_;
};

std::string str(long v) { return std::to_string(v); }

/// Builds with a time limit of one second.
Arrangement timed(Criterion &c, const std::string &name, const std::function<Arrangement()> &make)
{
  const auto t0 = Clock::now();
  Arrangement arr = make();
  const double s = seconds_since(t0);
  c.require(s < 1.0, name + " took " + std::to_string(s) + " s");
  return arr;
}

long v0(const Arrangement &a) { return weight_profile(a).v_at(0); }
long f0(const Arrangement &a) { return weight_profile(a).f_at(0); }

struct Corpus {
  SearchConfig config;
  std::vector<GeneratedArrangement> arrangements;
  FuzzReport clean;
  FuzzReport mutated;
};

// --- criteria -------------------------------------------------------------

bool criterion1()
{
  Criterion c(1);
  for (std::size_t n = 2; n <= 10; ++n) {
    const auto a = timed(c, "chain(" + str(n) + ")", [&] { return chain(n); });
    c.require(f0(a) == 1 && v0(a) == static_cast<long>(2 * n - 2), "chain(" + str(n) + ") profile");
  }
  for (std::size_t m = 3; m <= 8; ++m) {
    const auto a = timed(c, "collinear_delta(" + str(m) + ")", [&] { return collinear_delta(m); });
    const PatternReport p = pattern_scan(a);
    c.require(v0(a) == static_cast<long>(2 * m - 2) && f0(a) == 1, "collinear_delta(" + str(m) + ") profile");
    c.require(p.complete && p.type_histogram.size() == 1, "collinear_delta(" + str(m) + ") triples of one type");
  }
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto a = timed(c, "sharp_4n6(" + str(n) + ")", [&] { return sharp_4n6(n); });
    c.require(v0(a) == static_cast<long>(4 * n - 6) && f0(a) == static_cast<long>(n - 1),
              "sharp_4n6(" + str(n) + ") profile");
  }
  {
    const auto a = timed(c, "alpha4", [] { return alpha4(); });
    const PatternReport p = pattern_scan(a);
    c.require(v0(a) == 12, "alpha4 v0");
    c.require(p.complete_triples == 4 && p.type_histogram.count(TripleType::Alpha) &&
                  p.type_histogram.at(TripleType::Alpha) == 4,
              "alpha4 triples all alpha");
  }
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto a = timed(c, "max_complete(" + str(n) + ")", [&] { return max_complete(n); });
    c.require(a.is_complete() && v0(a) == static_cast<long>(6 * n - 12), "max_complete(" + str(n) + ") v0");
  }
  {
    const auto a = timed(c, "unit_circle_sharp(6)", [] { return unit_circle_sharp(6); });
    c.require(v0(a) == 18, "unit_circle_sharp(6) v0");
  }
  return c.finish("construction equalities (chain, collinear_delta, sharp_4n6, alpha4, max_complete, unit_circle_sharp)");
}

bool criterion2(const Corpus &corpus, const std::vector<std::pair<std::string, Arrangement>> &fixtures)
{
  Criterion c(2);
  auto slack0 = [&](const BoundReport &r, const std::string &where) {
    c.require(r.slack == 0, r.theorem + " on " + where + ": slack " + str(r.slack));
  };
  slack0(check_kedem(AnalysisContext(alpha_triple())), "alpha_triple");
  slack0(check_kedem(AnalysisContext(alpha4())), "alpha4");
  for (std::size_t n = 3; n <= 8; ++n) {
    const BoundReport r = check_kedem(AnalysisContext(max_complete(n)));
    slack0(r, "max_complete(" + str(n) + ")");
    c.require(r.verdict == Verdict::Holds, "kedem verdict on max_complete(" + str(n) + ")");
  }
  std::map<std::string, long> verdicts;
  auto alpha4_v0 = [&](const Arrangement &a, const std::string &where) {
    const AnalysisContext ctx(a);
    const BoundReport r = check_alpha4_v0(ctx);
    slack0(r, where);
    c.require(ctx.patterns.complete && ctx.patterns.alpha4_free, where + " complete and alpha4-free");
    ++verdicts[to_string(r.verdict)];
  };
  for (std::size_t n = 3; n <= 8; ++n) {
    alpha4_v0(sharp_4n6(n), "sharp_4n6(" + str(n) + ")");
  }
  for (std::size_t n = 3; n <= 8; ++n) {
    alpha4_v0(unit_circle_sharp(n), "unit_circle_sharp(" + str(n) + ")");
  }
  for (std::size_t n = 3; n <= 10; ++n) {
    const BoundReport r = check_v0_f0(AnalysisContext(chain(n)));
    slack0(r, "chain(" + str(n) + ")");
    c.require(r.verdict == Verdict::Holds, "v0_f0 verdict on chain(" + str(n) + ")");
  }
  long complete = 0;
  auto ly0 = [&](const Arrangement &a, const std::string &where) {
    if (!a.is_complete() || a.n() < 2) {
      return;
    }
    ++complete;
    const BoundReport r = check_linhart_yang(AnalysisContext(a), 0);
    slack0(r, where);
    c.require(r.verdict == Verdict::Holds, "LY(0) verdict on " + where);
  };
  for (const auto &[name, a] : fixtures) {
    ly0(a, name);
  }
  for (const auto &g : corpus.arrangements) {
    ly0(*g.arrangement, "corpus #" + str(g.index));
  }
  const BoundReport f = check_f0(AnalysisContext(alpha_triple()));
  slack0(f, "alpha_triple");
  c.note("check_alpha4_v0 verdicts on the sharp families: " + [&] {
    std::string s;
    for (const auto &[v, n] : verdicts) {
      s += (s.empty() ? "" : ", ") + v + " x" + str(n);
    }
    return s;
  }());
  c.note("LY(k=0) slack 0 on " + str(complete) + " complete arrangements");
  return c.finish("sharpness: slack 0 for kedem, alpha4_v0, v0_f0, linhart_yang(0), f0");
}

bool criterion3(const Corpus &corpus, double corpus_seconds)
{
  Criterion c(3);
  const FuzzReport &r = corpus.clean;
  long violated = 0;
  for (const auto &[name, t] : r.tallies) {
    violated += t.violated;
  }
  c.require(r.examined >= 1000, "only " + str(r.examined) + " arrangements examined");
  c.require(r.tallies.size() == 13, "expected 13 oracles, saw " + str(static_cast<long>(r.tallies.size())));
  c.require(violated == 0 && r.violations.empty(), str(violated) + " violated verdicts");
  c.require(r.unknown_signatures == 0, "unknown signatures during fuzzing");
  c.require(corpus_seconds < 300, "fuzz took " + std::to_string(corpus_seconds) + " s");
  long mutated = 0;
  std::set<std::string> caught;
  for (const auto &v : corpus.mutated.violations) {
    ++mutated;
    caught.insert(v.theorem);
  }
  c.require(mutated >= 1, "mutation not detected");
  c.note(str(r.examined) + " arrangements (" + str(r.complete) + " complete), 0 violations expected, " + str(violated) +
         " seen, generated and checked in " + std::to_string(static_cast<int>(corpus_seconds)) + " s");
  std::string names;
  for (const auto &n : caught) {
    names += (names.empty() ? "" : ",") + n;
  }
  c.note("mutated weights: " + str(mutated) + " violated verdicts (" + names + ")");
  return c.finish("oracle fuzz and mutation test");
}

bool criterion4()
{
  Criterion c(4);
  auto reversed = [](std::vector<long> v) {
    std::reverse(v.begin(), v.end());
    return v;
  };
  for (std::size_t n = 3; n <= 5; ++n) {
    const Arrangement a = concentric_family(n);
    const auto before = weight_profile(a).v;
    const Arrangement once = invert(a);
    const Arrangement twice = invert(once);
    c.require(weight_profile(once).v == reversed(before), "concentric_family(" + str(n) + ") not reversed");
    c.require(weight_profile(twice).v == before, "concentric_family(" + str(n) + ") double inversion");
  }
  {
    const Arrangement a = concentric_type_triple();
    c.require(weight_profile(invert(a)).v == reversed(weight_profile(a).v), "concentric triple not reversed");
  }
  bool rejected = false;
  try {
    invert(alpha_triple());
  }
  catch (const Error &e) {
    rejected = e.code() == ErrorCode::NoFullWeightFace;
  }
  c.require(rejected, "alpha_triple not rejected with NoFullWeightFace");
  c.require(weight_profile(alpha_triple()).f_at(3) == 0, "alpha_triple has a weight-3 face");
  return c.finish("inversion reverses weight vectors; involution; alpha_triple rejected");
}

bool criterion5()
{
  Criterion c(5);
  const Arrangement a = alpha_triple();
  const ArrangementGraph g(a);
  std::size_t central = npos;
  for (std::size_t f = 0; f < g.faces().size(); ++f) {
    if (g.faces()[f].bounded && g.faces()[f].weight == 0) {
      central = f;
    }
  }
  c.require(central != npos, "no central weight-0 face");
  if (central != npos) {
    const Arrangement b = insert_spanning_curve(a, central);
    c.require(v0(a) == 6, "v0 before is " + str(v0(a)));
    c.require(v0(b) == 12 && v0(b) == 6 * static_cast<long>(a.n() + 1) - 12, "v0 after is " + str(v0(b)));
    long matched = 0;
    for (std::size_t x = 0; x < a.crossings().size(); ++x) {
      const Crossing &old = a.crossings()[x];
      const auto i = b.index_of(a.curve(old.first).id());
      const auto j = b.index_of(a.curve(old.second).id());
      bool found = false;
      if (i && j) {
        for (std::size_t y : b.crossings_between(std::min(*i, *j), std::max(*i, *j))) {
          if (b.crossings()[y].location == old.location) {
            found = true;
            c.require(b.vertex_weight(y) == a.vertex_weight(x), "weight of an old vertex changed");
          }
        }
      }
      matched += found ? 1 : 0;
    }
    c.require(matched == static_cast<long>(a.crossings().size()), "old vertices missing after insertion");
    c.note("v0 6 -> " + str(v0(b)) + ", " + str(matched) + " old vertices unchanged");
  }
  return c.finish("spanning curve insertion into alpha_triple");
}

bool criterion6(const Corpus &corpus, std::vector<Arrangement> &samples)
{
  Criterion c(6);
  RandomParams params;
  params.require_complete = true;
  params.center_range = 1;
  params.radius_min = 1;
  params.radius_max = 2;
  long premise = 0;
  long confirmed = 0;
  long alpha_free = 0;
  long alpha_free_holds = 0;
  for (std::uint64_t seed = 1; premise < 100 && seed <= 5000; ++seed) {
    const std::size_t n = 3 + seed % 4;
    Arrangement a = random_arrangement(n, seed, params);
    const AnalysisContext ctx(a);
    if (ctx.patterns.alpha_free) {
      ++alpha_free;
      bool holds = true;
      for (long k = 0; k <= static_cast<long>(n) - 2; ++k) {
        holds = holds && check_alpha_free(ctx, k).verdict == Verdict::Holds;
      }
      alpha_free_holds += holds ? 1 : 0;
    }
    if (ctx.patterns.helly_premise) {
      ++premise;
      confirmed += ctx.profile.f_at(static_cast<long>(n)) > 0 ? 1 : 0;
      c.require(check_helly(ctx).verdict == Verdict::Holds, "helly oracle disagrees");
    }
    samples.push_back(std::move(a));
  }
  c.require(premise >= 100, "only " + str(premise) + " samples with the premise");
  c.require(confirmed == premise, str(premise - confirmed) + " samples without a weight-n face");
  c.require(alpha_free_holds == alpha_free, "alpha-free bound failed on a sample");
  c.require(corpus.clean.helly_confirmed == corpus.clean.helly_premise, "fuzz corpus helly failure");
  c.require(corpus.clean.alpha_free_bound_holds == corpus.clean.alpha_free_complete, "fuzz corpus alpha-free failure");
  c.note(str(confirmed) + "/" + str(premise) + " premise samples have f_n > 0");
  c.note("alpha-free bound held on " + str(alpha_free_holds) + "/" + str(alpha_free) + " samples and " +
         str(corpus.clean.alpha_free_bound_holds) + "/" + str(corpus.clean.alpha_free_complete) + " corpus members");
  return c.finish("Helly implication and alpha-free bound on random complete arrangements");
}

bool criterion7()
{
  Criterion c(7);
  std::map<std::string, long> verdicts;
  long faces = 0;
  for (std::size_t n = 3; n <= 8; ++n) {
    const BoundReport r = check_lemma_b_free(AnalysisContext(sharp_4n6(n)));
    long bounded = 0;
    long non_triangular = 0;
    long witnesses = 0;
    for (const auto &[key, value] : r.details) {
      bounded = key == "bounded_weight0_faces" ? value : bounded;
      non_triangular = key == "non_triangular" ? value : non_triangular;
      witnesses = key == "alpha_witnesses" ? value : witnesses;
    }
    const std::string where = "sharp_4n6(" + str(n) + ")";
    c.require(bounded == static_cast<long>(n) - 2, where + ": " + str(bounded) + " bounded weight-0 faces");
    c.require(r.measured == 0, where + ": " + str(r.measured) + " faces fail the structure");
    c.require(non_triangular == 0, where + ": non-triangular faces");
    c.require(witnesses == bounded, where + ": witness count " + str(witnesses));
    faces += bounded;
    ++verdicts[to_string(r.verdict)];
  }
  std::string v;
  for (const auto &[name, count] : verdicts) {
    v += (v.empty() ? "" : ", ") + name + " x" + str(count);
  }
  c.note(str(faces) + " bounded weight-0 faces, each a triangle with one alpha witness");
  c.note("lemma oracle verdicts: " + v);
  return c.finish("bounded weight-0 faces of sharp_4n6 are alpha triangles");
}

bool criterion8(const Corpus &corpus)
{
  Criterion c(8);
  const FuzzReport &r = corpus.clean;
  const LabelTable &table = LabelTable::shipped();
  long total = 0;
  std::string seen;
  for (const auto &[cls, count] : r.signature_classes) {
    total += count;
    c.require(table.labels.count(cls) == 1, "class " + to_string(cls) + " has no label");
    seen += (seen.empty() ? "" : " ") + to_string(cls) + ":" + str(count);
  }
  c.require(total == r.complete_triples, "classified triples do not add up");
  c.require(r.unknown_signatures == 0, "UnknownSignature raised");
  c.require(table.labels.size() == 4, "label table does not have four classes");
  const BetaResolution b1 = resolve_beta(1, 1500);
  const BetaResolution b2 = resolve_beta(1, 1500);
  c.require(b1.beta.has_value(), "beta resolution found no unique class");
  c.require(b1.beta == b2.beta && b1.occurrences == b2.occurrences && b1.qualifying == b2.qualifying,
            "beta resolution not reproducible");
  c.require(b1.beta && *b1.beta == table.beta_class, "resolved beta differs from the shipped label");
  std::string labels;
  for (const auto &[cls, type] : table.labels) {
    labels += (labels.empty() ? "" : " ") + to_string(cls) + "=" + to_string(type);
  }
  c.note(str(r.complete_triples) + " complete triples: " + seen);
  c.note("labels " + labels);
  c.note("beta resolved to " + (b1.beta ? to_string(*b1.beta) : std::string("none")) + " from " + str(b1.qualifying) +
         " qualifying samples (seed 1)");
  return c.finish("classification totality and beta resolution");
}

bool criterion9(std::vector<Arrangement> &witnesses)
{
  Criterion c(9);
  SearchConfig config;
  config.n_min = 3;
  config.n_max = 6;
  config.seed = 1;
  config.budget = 10000;
  const auto t0 = Clock::now();
  const HuntReport r = conjecture_hunt(config);
  const double s = seconds_since(t0);
  c.require(s < 1800, "hunt took " + std::to_string(s) + " s");
  long v0_f0_violations = 0;
  for (const HuntViolation &v : r.violations) {
    if (v.witness.bound == "v0 <= 4n-6" || v.witness.bound == "f0 <= n-1") {
      ++v0_f0_violations;
      c.require(v.reverified, "violation of " + v.witness.bound + " not confirmed by the slow path: " + v.detail);
    }
  }
  c.require(v0_f0_violations == 0, str(v0_f0_violations) + " violations of v0 <= 4n-6 or f0 <= n-1");
  bool unit_sharp_tight = false;
  for (const HuntWitness &w : r.tight_witnesses) {
    const Arrangement a = Arrangement::validate(parse_arrangement(w.arrangement).curves);
    const WeightProfile slow = slow_weight_profile(a);
    const long measured = w.bound == "v0 <= 4n-6" ? slow.v_at(0) : w.bound == "f0 <= n-1" ? slow.f_at(0) : w.measured;
    c.require(measured == w.measured, "witness for " + w.bound + " re-measures as " + str(measured));
    c.require(a.is_complete() && pattern_scan(a).alpha4_free, "witness fails the acceptance filter on reload");
    unit_sharp_tight = unit_sharp_tight || (w.bound == "v0 <= 4n-6" && w.generator == "perturbed_unit_circle_sharp");
    witnesses.push_back(a);
  }
  c.require(unit_sharp_tight, "no slack-0 v0 witness from perturbed unit_circle_sharp");
  for (const HuntBound &b : r.bounds) {
    c.note(b.name + " best slack " + str(b.best_slack));
  }
  c.note(str(r.examined) + " examined, " + str(r.accepted) + " accepted, " + str(r.tight_witnesses.size()) +
         " tight witnesses");
  return c.finish("conjecture hunt (seed 1, budget 10000, n <= 6)");
}

bool criterion10(const Corpus &corpus, const std::vector<std::pair<std::string, Arrangement>> &fixtures,
                 const std::vector<std::pair<std::string, std::string>> &fixture_text,
                 const std::vector<Arrangement> &samples, const std::vector<Arrangement> &witnesses)
{
  Criterion c(10);
  c.require(!fixture_text.empty(), "no fixtures found");
  for (const auto &[name, text] : fixture_text) {
    const ArrangementFile file = parse_arrangement(text);
    c.require(serialize_arrangement(file) == text, name + " does not round-trip");
    const Arrangement a = Arrangement::validate(file.curves);
    c.require(serialize_arrangement(a, file.metadata) == text, name + " does not round-trip through validation");
  }
  for (const auto &[name, a] : fixtures) {
    const auto ks = default_k_list(static_cast<long>(a.n()));
    c.require(analysis_document(AnalysisContext(a), ks) == analysis_document(AnalysisContext(a), ks),
              name + " analysis not deterministic");
  }
  long checked = 0;
  auto euler = [&](const Arrangement &a, const std::string &where) {
    ++checked;
    c.require(euler_relation_holds(ArrangementGraph(a)), "Euler relation fails on " + where);
  };
  for (const auto &[name, a] : fixtures) {
    euler(a, name);
  }
  for (const auto &g : corpus.arrangements) {
    euler(*g.arrangement, "corpus #" + str(g.index));
  }
  for (const auto &a : samples) {
    euler(a, "random complete sample");
  }
  for (const auto &a : witnesses) {
    euler(a, "hunt witness");
  }
  c.require(corpus.clean.euler_failures == 0, "fuzz report lists Euler failures");
  c.note(str(static_cast<long>(fixture_text.size())) + " fixtures round-trip");
  c.note("Euler relation on " + str(checked) + " arrangements");
  return c.finish("round trip, analysis determinism, Euler relation");
}

}  // namespace

int main(int argc, char **argv)
{
  const std::filesystem::path fixture_dir = argc > 1 ? argv[1] : PSEUDOARR_FIXTURE_DIR;
  std::vector<std::pair<std::string, std::string>> fixture_text;
  std::vector<std::pair<std::string, Arrangement>> fixtures;
  if (std::filesystem::is_directory(fixture_dir)) {
    std::vector<std::filesystem::path> paths;
    for (const auto &entry : std::filesystem::directory_iterator(fixture_dir)) {
      if (entry.path().extension() == ".json") {
        paths.push_back(entry.path());
      }
    }
    std::sort(paths.begin(), paths.end());
    for (const auto &p : paths) {
      const std::string text = read_text_file(p.string());
      fixture_text.emplace_back(p.filename().string(), text);
      fixtures.emplace_back(p.filename().string(), Arrangement::validate(parse_arrangement(text).curves));
    }
  }

  Corpus corpus;
  corpus.config.n_min = 1;
  corpus.config.n_max = 6;
  corpus.config.seed = 1;
  corpus.config.budget = 1000;
  const auto t0 = Clock::now();
  corpus.arrangements = generate_corpus(corpus.config);
  corpus.clean = fuzz_corpus(corpus.config, corpus.arrangements);
  const double corpus_seconds = seconds_since(t0);
  set_vertex_weight_mutation(-2);
  corpus.mutated = fuzz_corpus(corpus.config, corpus.arrangements);
  set_vertex_weight_mutation(0);

  std::vector<Arrangement> samples;
  std::vector<Arrangement> witnesses;
  int failed = 0;
  failed += criterion1() ? 0 : 1;
  failed += criterion2(corpus, fixtures) ? 0 : 1;
  failed += criterion3(corpus, corpus_seconds) ? 0 : 1;
  failed += criterion4() ? 0 : 1;
  failed += criterion5() ? 0 : 1;
  failed += criterion6(corpus, samples) ? 0 : 1;
  failed += criterion7() ? 0 : 1;
  failed += criterion8(corpus) ? 0 : 1;
  failed += criterion9(witnesses) ? 0 : 1;
  failed += criterion10(corpus, fixtures, fixture_text, samples, witnesses) ? 0 : 1;
  std::cout << (failed == 0 ? "all 10 criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
