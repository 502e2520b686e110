// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pseudoarr/error.hpp"
#include "pseudoarr/predicates.hpp"

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pseudoarr {

/// A vertex of the arrangement: a proper crossing of curves `first` < `second`
/// (indices into the arrangement), annotated with the curves that strictly
/// contain it.
struct Crossing {
  Point location;
  std::size_t first = 0;
  std::size_t second = 0;
  Position on_first;
  Position on_second;
  int turn = 0;
  std::vector<std::size_t> containing;
};

struct Violation {
  ErrorCode kind;
  std::string first;
  std::string second;
  std::string third;
  Point location;
  std::string describe() const;
};

class Arrangement;

struct ValidationReport {
  std::vector<Violation> violations;
  std::shared_ptr<const Arrangement> arrangement;
  bool ok() const { return violations.empty(); }
};

/// A validated set of pseudocircles satisfying the three axioms: pairwise
/// zero or two transversal crossings, no triple points, no vertex contact.
class Arrangement {
 public:
  using CurvePtr = std::shared_ptr<const Pseudocircle>;

  /// Throws Error with the code of the first violation; the message lists
  /// every violation found.
  static Arrangement validate(std::vector<Pseudocircle> curves);
  static Arrangement validate(std::vector<CurvePtr> curves);
  /// Collects all violations instead of throwing.
  static ValidationReport check(std::vector<CurvePtr> curves);

  std::size_t n() const { return curves_.size(); }
  const Pseudocircle &curve(std::size_t i) const { return *curves_[i]; }
  const std::vector<CurvePtr> &curve_ptrs() const { return curves_; }
  const std::vector<Crossing> &crossings() const { return crossings_; }
  /// Indices of the crossings of curves i and j (0 or 2 entries).
  const std::vector<std::size_t> &crossings_between(std::size_t i, std::size_t j) const;
  bool crosses(std::size_t i, std::size_t j) const { return !crossings_between(i, j).empty(); }
  std::optional<std::size_t> index_of(std::string_view id) const;
  std::vector<std::string> ids() const;

  bool is_complete() const;
  /// The restriction to the given curves, in the given order; no geometry is
  /// recomputed.
  Arrangement induced(std::span<const std::size_t> subset) const;
  Arrangement induced_by_ids(std::span<const std::string> ids) const;
  /// Number of curves strictly containing the crossing.
  int vertex_weight(std::size_t crossing) const;

  Box bounds() const;

 private:
  Arrangement() = default;
  std::vector<CurvePtr> curves_;
  std::vector<Crossing> crossings_;
  std::vector<std::vector<std::size_t>> pair_index_;
};

/// Debug hook that shifts every reported vertex weight (clamped at zero).
/// Exists so that the bound fuzzer can be shown to catch a broken weight
/// routine; leave at zero otherwise.
void set_vertex_weight_mutation(int offset);
int vertex_weight_mutation();

struct WeightProfile {
  std::vector<long> v;
  std::vector<long> f;

  long v_at_most(long k) const;
  long v_at_least(long k) const;
  long vertices() const;
  long faces() const;
  long v_at(long k) const { return k >= 0 && k < static_cast<long>(v.size()) ? v[k] : 0; }
  long f_at(long k) const { return k >= 0 && k < static_cast<long>(f.size()) ? f[k] : 0; }
};

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

/// An arc of one curve between consecutive crossings, or the whole curve
/// when it crosses nothing (a loop edge with no endpoints).
struct Edge {
  std::size_t curve = 0;
  std::size_t from = npos;
  std::size_t to = npos;
  Position start;
  Position end;
  bool loop = false;
  int weight = 0;
};

struct Face {
  /// Half-edge cycles; the first is the outer boundary unless the face is
  /// unbounded, in which case every cycle is a hole.
  std::vector<std::size_t> cycles;
  bool bounded = true;
  int weight = 0;
  std::vector<std::size_t> curves;
};

/// Planar graph of an arrangement with half-edges 2e (along the curve, its
/// interior on the left) and 2e+1 (the reverse).
class ArrangementGraph {
 public:
  explicit ArrangementGraph(std::shared_ptr<const Arrangement> arrangement);
  explicit ArrangementGraph(const Arrangement &arrangement);

  const Arrangement &arrangement() const { return *arr_; }
  std::size_t vertex_count() const { return arr_->crossings().size(); }
  const std::vector<Edge> &edges() const { return edges_; }
  /// Edges excluding loops, as counted by the Euler relation.
  std::size_t proper_edge_count() const;
  const std::vector<Face> &faces() const { return faces_; }
  std::size_t unbounded_face() const { return 0; }
  std::size_t component_count() const { return components_; }

  std::size_t next(std::size_t half_edge) const { return next_[half_edge]; }
  std::size_t face_of(std::size_t half_edge) const { return face_of_half_[half_edge]; }
  std::size_t cycle_of(std::size_t half_edge) const { return cycle_of_half_[half_edge]; }
  const std::vector<std::size_t> &cycle(std::size_t c) const { return cycles_[c]; }
  std::size_t cycle_count() const { return cycles_.size(); }
  std::size_t origin(std::size_t half_edge) const;
  std::size_t destination(std::size_t half_edge) const { return origin(half_edge ^ 1U); }

  /// Polygon points realizing the half-edge, from origin to destination.
  std::vector<Point> half_edge_points(std::size_t half_edge) const;
  /// Closed chain of the cycle (last point connects to first).
  std::vector<Point> cycle_points(std::size_t c) const;
  /// Number of half-edges in the face boundary (all cycles).
  std::size_t face_edge_count(std::size_t f) const;
  /// Distinct vertices on the face boundary, sorted.
  std::vector<std::size_t> face_vertices(std::size_t f) const;

  /// A point strictly inside face f, computed lazily from a boundary piece.
  Point face_sample(std::size_t f) const;

  WeightProfile weight_profile() const;

 private:
  void build_edges();
  void build_rotation();
  void build_cycles();
  void build_faces();
  void assign_weights();

  std::shared_ptr<const Arrangement> arr_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> next_;
  std::vector<std::vector<std::size_t>> cycles_;
  std::vector<std::size_t> cycle_of_half_;
  std::vector<std::size_t> face_of_half_;
  std::vector<Face> faces_;
  std::size_t components_ = 0;
  std::vector<std::size_t> curve_component_;
  std::vector<std::size_t> half_origin_;
  std::vector<std::array<std::size_t, 4>> rotation_;
  std::vector<std::size_t> slot_;
  std::vector<std::size_t> curve_edge_begin_;
};

/// Convenience: build the graph and profile it.
WeightProfile weight_profile(const Arrangement &arr);

/// For every face, the weight found by propagation equals the number of
/// curves containing the face's sample point.
bool face_weight_propagation_check(const ArrangementGraph &g);

/// V - E + F == 1 + C.
bool euler_relation_holds(const ArrangementGraph &g);

}  // namespace pseudoarr
