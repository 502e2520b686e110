// SPDX-License-Identifier: Apache-2.0
#include "pseudoarr/bounds.hpp"
#include "pseudoarr/constructions.hpp"

#include <doctest.h>

#include <set>

using namespace pseudoarr;

namespace {

void expect(const BoundReport &r, long bound, long measured, Verdict verdict)
{
  INFO(r.theorem);
  CHECK(r.bound_value == bound);
  CHECK(r.measured == measured);
  CHECK(r.slack == bound - measured);
  CHECK(r.verdict == verdict);
}

long detail(const BoundReport &r, const std::string &name)
{
  for (const auto &[key, value] : r.details) {
    if (key == name) {
      return value;
    }
  }
  FAIL("missing detail " << name);
  return -1;
}

}  // namespace

TEST_CASE("Kedem")
{
  expect(check_kedem(AnalysisContext(alpha_triple())), 6, 6, Verdict::Holds);
  expect(check_kedem(AnalysisContext(alpha4())), 12, 12, Verdict::Holds);
  CHECK(check_kedem(AnalysisContext(chain(2))).verdict == Verdict::HypothesisNotMet);
}

TEST_CASE("Sharir")
{
  const AnalysisContext d(collinear_delta(5));
  expect(check_sharir(d, 1), 130, d.profile.v_at(0) + d.profile.v_at(1), Verdict::Holds);
  CHECK(check_sharir(d, 0).verdict == Verdict::HypothesisNotMet);
  expect(check_sharir(AnalysisContext(alpha4()), 1), 104, 12, Verdict::Holds);
}

TEST_CASE("Linhart-Yang")
{
  for (const Arrangement &arr : {alpha4(), collinear_delta(5), venn_triple()}) {
    const auto r = check_linhart_yang(AnalysisContext(arr), 0);
    CHECK(r.slack == 0);
    CHECK(r.verdict == Verdict::Holds);
  }
  const AnalysisContext a(alpha_triple());
  expect(check_linhart_yang(a, 1), 4, 0, Verdict::Holds);
  CHECK(check_linhart_yang(a, 2).verdict == Verdict::HypothesisNotMet);
}

TEST_CASE("weight-n face bound")
{
  expect(check_fn_positive(AnalysisContext(concentric_type_triple()), 0), 4, 2, Verdict::Holds);
  CHECK(check_fn_positive(AnalysisContext(alpha_triple()), 0).verdict == Verdict::HypothesisNotMet);
  // The middle of four collinear circles of radius 2 lies in all of them.
  const AnalysisContext d4(collinear_delta(4));
  CHECK(d4.profile.f_at(4) == 1);
  expect(check_fn_positive(d4, 0), 6, 6, Verdict::Holds);
  const AnalysisContext k(concentric_family(5));
  long previous = -1;
  for (long kk = 0; kk <= 3; ++kk) {
    const auto r = check_fn_positive(k, kk);
    CHECK(r.bound_value > previous);
    previous = r.bound_value;
  }
}

TEST_CASE("face participation")
{
  const auto s = check_face_participation(AnalysisContext(sharp_4n6(5)));
  expect(s, 14, 14, Verdict::Holds);
  CHECK(detail(s, "K") == 5);
  const auto d = check_face_participation(AnalysisContext(collinear_delta(5)));
  expect(d, 14, 8, Verdict::Holds);
  CHECK(detail(d, "K") == 5);
  const auto a = check_face_participation(AnalysisContext(alpha_triple()));
  expect(a, 6, 6, Verdict::Holds);
  CHECK(detail(a, "K") == 3);
}

TEST_CASE("v0 against f0")
{
  expect(check_v0_f0(AnalysisContext(chain(4))), 6, 6, Verdict::Holds);
  expect(check_v0_f0(AnalysisContext(alpha_triple())), 6, 6, Verdict::Holds);
  expect(check_v0_f0(AnalysisContext(concentric_type_triple())), 4, 2, Verdict::Holds);
  expect(check_f0(AnalysisContext(alpha_triple())), 2, 2, Verdict::Holds);
  expect(check_f0(AnalysisContext(chain(5))), 6, 1, Verdict::Holds);
  CHECK(check_f0(AnalysisContext(chain(2))).verdict == Verdict::HypothesisNotMet);
}

TEST_CASE("Helly implication")
{
  const auto k = check_helly(AnalysisContext(concentric_family(5)));
  CHECK(k.verdict == Verdict::Holds);
  CHECK(detail(k, "f_n") >= 1);
  CHECK(check_helly(AnalysisContext(alpha_triple())).verdict == Verdict::HypothesisNotMet);
  CHECK(check_helly(AnalysisContext(collinear_delta(4))).verdict == Verdict::Holds);
}

TEST_CASE("alpha-free bound")
{
  expect(check_alpha_free(AnalysisContext(collinear_delta(5)), 0), 8, 8, Verdict::Holds);
  CHECK(check_alpha_free(AnalysisContext(alpha_triple()), 0).verdict == Verdict::HypothesisNotMet);
  const AnalysisContext k(concentric_family(4));
  expect(check_alpha_free(k, 1), 10, k.profile.v_at_most(1), Verdict::Holds);
}

TEST_CASE("restricted class bounds")
{
  const auto s = check_alpha4_v0(AnalysisContext(sharp_4n6(6)));
  CHECK(s.bound_value == 18);
  CHECK(s.slack == 0);
  CHECK(check_alpha4_v0(AnalysisContext(alpha4())).verdict == Verdict::HypothesisNotMet);
  const AnalysisContext u(unit_circle_sharp(6));
  const auto ur = check_alpha4_v0(u);
  CHECK(ur.bound_value == 18);
  CHECK(ur.measured == 18);
  CHECK(check_18kn(u, 1).bound_value == 108);

  for (std::size_t n : {4U, 5U}) {
    const auto f = check_f0_complete(AnalysisContext(sharp_4n6(n)));
    CHECK(f.measured == static_cast<long>(n - 1));
    CHECK(f.slack == 0);
  }
  const auto d = check_f0_complete(AnalysisContext(collinear_delta(5)));
  CHECK(d.measured == 1);
  CHECK(d.bound_value == 4);
  CHECK(check_f0_complete(AnalysisContext(chain(4))).verdict == Verdict::HypothesisNotMet);

  const AnalysisContext c(collinear_delta(5));
  CHECK(check_18kn(c, 1).bound_value == 90);
  CHECK(check_18kn(c, 0).verdict == Verdict::HypothesisNotMet);
}

TEST_CASE("weight-0 faces of beta-free arrangements")
{
  const auto a = check_lemma_b_free(AnalysisContext(alpha_triple()));
  expect(a, 0, 0, Verdict::Holds);
  CHECK(detail(a, "bounded_weight0_faces") == 1);
  const auto s = check_lemma_b_free(AnalysisContext(sharp_4n6(5)));
  CHECK(s.measured == 0);
  CHECK(detail(s, "bounded_weight0_faces") == 3);
  CHECK(detail(s, "alpha_witnesses") == 3);
}

TEST_CASE("run_all and report consistency")
{
  CHECK(default_k_list(6) == std::vector<long>{0, 1, 3, 4});
  CHECK(default_k_list(2) == std::vector<long>{0, 1});
  for (const Arrangement &arr : {alpha_triple(), alpha4(), chain(5), sharp_4n6(5), max_complete(5)}) {
    const AnalysisContext ctx(arr);
    const auto reports = run_all(ctx, default_k_list(ctx.n()));
    CHECK(reports.size() == 8 + 5 * default_k_list(ctx.n()).size());
    std::set<std::string> names;
    for (const auto &r : reports) {
      names.insert(r.theorem);
      CHECK(r.verdict != Verdict::Violated);
      if (r.verdict == Verdict::Holds) {
        CHECK(r.slack >= 0);
      }
    }
    CHECK(names.size() == 13);
    const auto kedem = check_kedem(ctx);
    const auto vf = check_v0_f0(ctx);
    const auto f0 = check_f0(ctx);
    if (f0.verdict == Verdict::Holds) {
      CHECK(vf.bound_value <= kedem.bound_value);
      CHECK(2 * ctx.n() + 2 * f0.bound_value - 4 == kedem.bound_value);
    }
  }
  expect(check_kedem(AnalysisContext(max_complete(6))), 24, 24, Verdict::Holds);
}

TEST_CASE("a broken weight routine is caught")
{
  const Arrangement arr = collinear_delta(5);
  set_vertex_weight_mutation(-2);
  const auto reports = run_all(arr, default_k_list(5));
  set_vertex_weight_mutation(0);
  long violated = 0;
  for (const auto &r : reports) {
    violated += r.verdict == Verdict::Violated ? 1 : 0;
  }
  CHECK(violated > 0);
}
