// SPDX-License-Identifier: Apache-2.0
#include "pseudoarr/bounds.hpp"

#include <algorithm>
#include <set>

namespace pseudoarr {

std::string to_string(Verdict verdict)
{
  switch (verdict) {
    case Verdict::Holds:
      return "Holds";
    case Verdict::Violated:
      return "Violated";
    case Verdict::HypothesisNotMet:
      return "HypothesisNotMet";
  }
  return "unknown";
}

AnalysisContext::AnalysisContext(const Arrangement &arr, const LabelTable &labels)
    : AnalysisContext(std::make_shared<const Arrangement>(arr), labels)
{
}

AnalysisContext::AnalysisContext(std::shared_ptr<const Arrangement> arr, const LabelTable &labels)
    : arrangement(std::move(arr)),
      graph(arrangement),
      profile(graph.weight_profile()),
      patterns(pattern_scan(*arrangement, labels)),
      table(labels)
{
}

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

Hypothesis at_least(const std::string &name, long required, long observed)
{
  return Hypothesis{name + " >= " + std::to_string(required), std::to_string(required), std::to_string(observed),
                    observed >= required};
}

Hypothesis flag(const std::string &name, bool observed)
{
  return Hypothesis{name, "true", yes_no(observed), observed};
}

Hypothesis k_range(long k, long n)
{
  return Hypothesis{"0 <= k <= n-2", "[0, " + std::to_string(n - 2) + "]", std::to_string(k), k >= 0 && k <= n - 2};
}

BoundReport finish(BoundReport r)
{
  r.slack = r.bound_value - r.measured;
  const bool applies = std::all_of(r.hypotheses.begin(), r.hypotheses.end(), [](const Hypothesis &h) { return h.satisfied; });
  if (!applies) {
    r.verdict = Verdict::HypothesisNotMet;
  }
  else {
    r.verdict = r.slack >= 0 ? Verdict::Holds : Verdict::Violated;
  }
  return r;
}

long fn_bound(long n, long k) { return 2 * (k + 1) * n - (k + 1) * (k + 2); }

}  // namespace

long max_weight0_participation(const ArrangementGraph &g)
{
  long best = 0;
  for (const Face &f : g.faces()) {
    if (f.weight == 0) {
      best = std::max(best, static_cast<long>(f.curves.size()));
    }
  }
  return best;
}

BoundReport check_kedem(const AnalysisContext &ctx)
{
  BoundReport r{"Kedem", "v_0 <= 6n - 12", {at_least("n", 3, ctx.n())}, std::nullopt, 6 * ctx.n() - 12,
                ctx.profile.v_at(0)};
  return finish(std::move(r));
}

BoundReport check_sharir(const AnalysisContext &ctx, long k)
{
  BoundReport r{"Sharir", "v_<=k <= 26kn", {at_least("k", 1, k)}, k, 26 * k * ctx.n(), ctx.profile.v_at_most(k)};
  return finish(std::move(r));
}

BoundReport check_linhart_yang(const AnalysisContext &ctx, long k)
{
  const long n = ctx.n();
  BoundReport r{"LinhartYang",
                "v_>=k <= (n+k)(n-k-1)",
                {at_least("n", 2, n), k_range(k, n)},
                k,
                (n + k) * (n - k - 1),
                ctx.profile.v_at_least(k)};
  return finish(std::move(r));
}

BoundReport check_fn_positive(const AnalysisContext &ctx, long k)
{
  const long n = ctx.n();
  BoundReport r{"FnPositive",
                "f_n > 0 implies v_<=k <= 2(k+1)n - (k+1)(k+2)",
                {at_least("f_n", 1, ctx.profile.f_at(n)), k_range(k, n)},
                k,
                fn_bound(n, k),
                ctx.profile.v_at_most(k)};
  return finish(std::move(r));
}

BoundReport check_face_participation(const AnalysisContext &ctx)
{
  const long n = ctx.n();
  const long K = max_weight0_participation(ctx.graph);
  BoundReport r{"FaceParticipation", "v_0 <= 6n - 2K - 6, and v_0 <= 4n - 6 when K = n", {at_least("n", 2, n)},
                std::nullopt, 6 * n - 2 * K - 6, ctx.profile.v_at(0)};
  r.details = {{"K", K}, {"all_participate", K == n ? 1 : 0}};
  return finish(std::move(r));
}

BoundReport check_v0_f0(const AnalysisContext &ctx)
{
  const long n = ctx.n();
  BoundReport r{"V0F0", "v_0 <= 2n + 2f_0 - 4", {at_least("n", 3, n)}, std::nullopt,
                2 * n + 2 * ctx.profile.f_at(0) - 4, ctx.profile.v_at(0)};
  r.details = {{"f_0", ctx.profile.f_at(0)}};
  return finish(std::move(r));
}

BoundReport check_f0(const AnalysisContext &ctx)
{
  const long n = ctx.n();
  BoundReport r{"F0", "f_0 <= 2n - 4", {at_least("n", 3, n)}, std::nullopt, 2 * n - 4, ctx.profile.f_at(0)};
  return finish(std::move(r));
}

BoundReport check_helly(const AnalysisContext &ctx)
{
  const long n = ctx.n();
  const long fn = ctx.profile.f_at(n);
  BoundReport r{"Helly",
                "every triple has a common interior point implies f_n > 0",
                {at_least("n", 3, n), flag("helly_premise", ctx.patterns.helly_premise)},
                std::nullopt,
                fn,
                1};
  r.details = {{"f_n", fn}};
  return finish(std::move(r));
}

BoundReport check_alpha_free(const AnalysisContext &ctx, long k)
{
  const long n = ctx.n();
  BoundReport r{"AlphaFree",
                "complete and alpha-free implies v_<=k <= 2(k+1)n - (k+1)(k+2)",
                {at_least("n", 2, n), flag("complete", ctx.patterns.complete), flag("alpha_free", ctx.patterns.alpha_free),
                 k_range(k, n)},
                k,
                fn_bound(n, k),
                ctx.profile.v_at_most(k)};
  return finish(std::move(r));
}

namespace {

std::vector<Hypothesis> restricted_class(const AnalysisContext &ctx)
{
  return {at_least("n", 2, ctx.n()), flag("complete", ctx.patterns.complete),
          flag("alpha4_free", ctx.patterns.alpha4_free), flag("beta_free", ctx.patterns.beta_free)};
}

}  // namespace

BoundReport check_alpha4_v0(const AnalysisContext &ctx)
{
  BoundReport r{"Alpha4V0", "complete, alpha4-free and beta-free implies v_0 <= 4n - 6", restricted_class(ctx),
                std::nullopt, 4 * ctx.n() - 6, ctx.profile.v_at(0)};
  return finish(std::move(r));
}

BoundReport check_f0_complete(const AnalysisContext &ctx)
{
  BoundReport r{"F0Complete", "complete, alpha4-free and beta-free implies f_0 <= n - 1", restricted_class(ctx),
                std::nullopt, ctx.n() - 1, ctx.profile.f_at(0)};
  return finish(std::move(r));
}

BoundReport check_18kn(const AnalysisContext &ctx, long k)
{
  auto hyps = restricted_class(ctx);
  hyps.push_back(at_least("k", 1, k));
  BoundReport r{"EighteenKN", "complete, alpha4-free and beta-free implies v_<=k <= 18kn", std::move(hyps), k,
                18 * k * ctx.n(), ctx.profile.v_at_most(k)};
  return finish(std::move(r));
}

BoundReport check_lemma_b_free(const AnalysisContext &ctx)
{
  const Arrangement &arr = *ctx.arrangement;
  const ArrangementGraph &g = ctx.graph;
  long faces = 0;
  long failing = 0;
  long non_triangles = 0;
  long witnesses_total = 0;
  for (std::size_t f = 0; f < g.faces().size(); ++f) {
    const Face &face = g.faces()[f];
    if (!face.bounded || face.weight != 0) {
      continue;
    }
    ++faces;
    const bool triangle = g.face_edge_count(f) == 3;
    non_triangles += triangle ? 0 : 1;
    // A face whose whole boundary lies on curves a, b, c is a face of the
    // triple {a, b, c}; for an alpha triple the only bounded weight-0 face.
    long witnesses = 0;
    if (face.curves.size() <= 3) {
      const std::set<std::size_t> own(face.curves.begin(), face.curves.end());
      for (std::size_t a = 0; a < arr.n(); ++a) {
        for (std::size_t b = a + 1; b < arr.n(); ++b) {
          for (std::size_t c = b + 1; c < arr.n(); ++c) {
            if (!own.count(a) && !own.count(b) && !own.count(c)) {
              continue;
            }
            const std::set<std::size_t> t{a, b, c};
            if (!std::includes(t.begin(), t.end(), own.begin(), own.end())) {
              continue;
            }
            if (!arr.crosses(a, b) || !arr.crosses(a, c) || !arr.crosses(b, c)) {
              continue;
            }
            if (classify_triple(triple_signature(arr, a, b, c), ctx.table) == TripleType::Alpha) {
              ++witnesses;
            }
          }
        }
      }
    }
    witnesses_total += witnesses;
    if (!triangle || witnesses != 1) {
      ++failing;
    }
  }
  BoundReport r{"LemmaBFree",
                "complete and beta-free implies every bounded weight-0 face is the bounded weight-0 face of a unique "
                "alpha triple and has three edges",
                {flag("complete", ctx.patterns.complete), flag("beta_free", ctx.patterns.beta_free)},
                std::nullopt,
                0,
                failing};
  r.details = {{"bounded_weight0_faces", faces}, {"non_triangular", non_triangles}, {"alpha_witnesses", witnesses_total}};
  return finish(std::move(r));
}

std::vector<long> default_k_list(long n)
{
  std::set<long> ks{0, 1, n / 2, n - 2};
  std::vector<long> out;
  for (long k : ks) {
    if (k >= 0) {
      out.push_back(k);
    }
  }
  return out;
}

std::vector<BoundReport> run_all(const AnalysisContext &ctx, const std::vector<long> &k_list)
{
  std::vector<BoundReport> out;
  out.push_back(check_kedem(ctx));
  for (long k : k_list) {
    out.push_back(check_sharir(ctx, k));
  }
  for (long k : k_list) {
    out.push_back(check_linhart_yang(ctx, k));
  }
  for (long k : k_list) {
    out.push_back(check_fn_positive(ctx, k));
  }
  out.push_back(check_face_participation(ctx));
  out.push_back(check_v0_f0(ctx));
  out.push_back(check_f0(ctx));
  out.push_back(check_helly(ctx));
  for (long k : k_list) {
    out.push_back(check_alpha_free(ctx, k));
  }
  out.push_back(check_alpha4_v0(ctx));
  out.push_back(check_f0_complete(ctx));
  for (long k : k_list) {
    out.push_back(check_18kn(ctx, k));
  }
  out.push_back(check_lemma_b_free(ctx));
  return out;
}

std::vector<BoundReport> run_all(const Arrangement &arr, const std::vector<long> &k_list)
{
  return run_all(AnalysisContext(arr), k_list);
}

}  // namespace pseudoarr
