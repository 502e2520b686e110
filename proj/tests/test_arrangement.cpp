// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "helpers.hpp"

using namespace pseudoarr;
using testutil::pt;
using testutil::rect;

TEST_CASE("one square")
{
  const auto arr = Arrangement::validate(std::vector<Pseudocircle>{rect("s", 0, 0, 4, 4)});
  ArrangementGraph g(arr);
  CHECK(g.vertex_count() == 0);
  CHECK(g.proper_edge_count() == 0);
  CHECK(g.faces().size() == 2);
  const auto p = g.weight_profile();
  CHECK(p.v.empty());
  CHECK(p.f == std::vector<long>{1, 1});
  CHECK(arr.is_complete());
  CHECK(euler_relation_holds(g));
  CHECK(face_weight_propagation_check(g));
}

TEST_CASE("two overlapping squares")
{
  const auto arr = Arrangement::validate(std::vector<Pseudocircle>{rect("a", 0, 0, 4, 4), rect("b", 2, 2, 6, 6)});
  ArrangementGraph g(arr);
  CHECK(g.vertex_count() == 2);
  CHECK(g.proper_edge_count() == 4);
  CHECK(g.faces().size() == 4);
  const auto p = g.weight_profile();
  CHECK(p.v == std::vector<long>{2});
  CHECK(p.f == std::vector<long>{1, 2, 1});
  CHECK(euler_relation_holds(g));
  CHECK(face_weight_propagation_check(g));
}

TEST_CASE("nested disjoint squares")
{
  const auto arr = Arrangement::validate(std::vector<Pseudocircle>{rect("in", 2, 2, 4, 4), rect("out", 0, 0, 10, 10)});
  ArrangementGraph g(arr);
  CHECK(g.faces().size() == 3);
  CHECK(g.component_count() == 2);
  CHECK(g.weight_profile().f == std::vector<long>{1, 1, 1});
  CHECK(face_weight_propagation_check(g));
  CHECK(euler_relation_holds(g));
  CHECK_FALSE(arr.is_complete());
}

TEST_CASE("validation reports triple points and contacts")
{
  // c has a vertex on the boundary of a.
  auto r = Arrangement::check({std::make_shared<Pseudocircle>(rect("a", 0, 0, 4, 4)),
                               std::make_shared<Pseudocircle>(rect("b", 2, -1, 6, 2)),
                               std::make_shared<Pseudocircle>(Pseudocircle("c", {pt(1, 3), pt(3, 1), pt(3, 3)}))});
  REQUIRE_FALSE(r.ok());
  bool triple = false;
  for (const auto &v : r.violations) {
    triple = triple || v.kind == ErrorCode::TriplePoint || v.kind == ErrorCode::VertexContact;
  }
  CHECK(triple);

  try {
    (void)Arrangement::validate(std::vector<Pseudocircle>{rect("h", 0, 4, 12, 6), rect("v", 5, 0, 7, 10)});
    FAIL("expected an error");
  }
  catch (const Error &e) {
    CHECK(e.code() == ErrorCode::TooManyIntersections);
  }
  try {
    (void)Arrangement::validate(std::vector<Pseudocircle>{rect("a", 0, 0, 1, 1), rect("a", 5, 5, 6, 6)});
    FAIL("expected an error");
  }
  catch (const Error &e) {
    CHECK(e.code() == ErrorCode::DuplicateId);
  }
}

TEST_CASE("triple point through a common crossing is rejected")
{
  // a and b cross at (4,2); c passes exactly through it.
  auto r = Arrangement::check({std::make_shared<Pseudocircle>(rect("a", 0, 0, 4, 4)),
                               std::make_shared<Pseudocircle>(rect("b", 2, 2, 6, 6)),
                               std::make_shared<Pseudocircle>(Pseudocircle("c", {pt(1, 1), pt(7, 1), pt(7, 3)}))});
  REQUIRE_FALSE(r.ok());
  bool triple = false;
  for (const auto &v : r.violations) {
    triple = triple || v.kind == ErrorCode::TriplePoint;
  }
  CHECK(triple);
}
