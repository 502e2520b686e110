// SPDX-License-Identifier: Apache-2.0
#pragma once

// Exact geometric primitives over rational points. Every decision here is made
// in rational arithmetic; there is no floating point fast path.

#include "pseudoarr/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pseudoarr {

struct Box {
  Rat xmin, ymin, xmax, ymax;

  bool overlaps(const Box &o) const
  {
    return !(xmax < o.xmin || o.xmax < xmin || ymax < o.ymin || o.ymax < ymin);
  }
  bool contains(const Point &p) const
  {
    return !(p.x < xmin || p.x > xmax || p.y < ymin || p.y > ymax);
  }
};

/// Sign of (q - p) x (r - p): +1 counterclockwise, 0 collinear, -1 clockwise.
int orientation(const Point &p, const Point &q, const Point &r);

/// Position along a closed polygon: segment index plus parameter in [0, 1).
struct Position {
  std::size_t segment = 0;
  Rat t;

  friend bool operator<(const Position &a, const Position &b)
  {
    if (a.segment != b.segment) {
      return a.segment < b.segment;
    }
    return a.t < b.t;
  }
  friend bool operator==(const Position &a, const Position &b)
  {
    return a.segment == b.segment && a.t == b.t;
  }
};

/// A simple counterclockwise polygon with rational vertices; the concrete
/// realization of a Jordan curve.
class Pseudocircle {
 public:
  /// Throws Error(InvalidCurve) unless the ring has at least three points,
  /// no repeated consecutive points, no three consecutive collinear points,
  /// positive signed area and no self-intersection.
  Pseudocircle(std::string id, std::vector<Point> ring);

  const std::string &id() const { return id_; }
  std::span<const Point> ring() const { return ring_; }
  std::size_t size() const { return ring_.size(); }
  const Point &vertex(std::size_t i) const { return ring_[i % ring_.size()]; }
  const Point &segment_start(std::size_t i) const { return ring_[i]; }
  const Point &segment_end(std::size_t i) const { return ring_[(i + 1) % ring_.size()]; }
  const Box &bounds() const { return bounds_; }
  const Box &segment_bounds(std::size_t i) const { return segment_bounds_[i]; }
  /// Index of the lexicographically lowest (y, then x) vertex.
  std::size_t lowest_vertex() const { return lowest_; }
  /// Twice the signed area.
  const Rat &double_area() const { return double_area_; }
  Point point_at(const Position &pos) const;

  Pseudocircle translated(const Rat &dx, const Rat &dy, std::string new_id = {}) const;
  Pseudocircle with_id(std::string new_id) const;

 private:
  struct Unchecked {};
  Pseudocircle(Unchecked, std::string id, std::vector<Point> ring);
  void index();

  std::string id_;
  std::vector<Point> ring_;
  std::vector<Box> segment_bounds_;
  Box bounds_;
  Rat double_area_;
  std::size_t lowest_ = 0;
};

/// Checks the polygon invariants without constructing; returns the reason of
/// the first failure or nullopt.
std::optional<std::string> polygon_problem(std::span<const Point> ring);

/// Reverses the ring when its signed area is negative.
std::vector<Point> counterclockwise(std::vector<Point> ring);

enum class CrossingKind { None, Proper, Degenerate };
enum class Degeneracy { EndpointOnInterior, SharedEndpoint, CollinearOverlap };

struct CrossingResult {
  CrossingKind kind = CrossingKind::None;
  /// Set for Proper crossings.
  std::optional<Point> point;
  Rat t1, t2;
  Degeneracy degeneracy = Degeneracy::EndpointOnInterior;
};

/// Classifies the contact of closed segments a1-a2 and b1-b2.
CrossingResult segment_crossing(const Point &a1, const Point &a2, const Point &b1, const Point &b2);

enum class Location { Inside, Outside, OnBoundary };

/// Exact parity ray cast. The ray direction is the first entry of the
/// candidate list (1,0), (1,1), (1,2), (2,1), ... that meets no vertex.
Location point_in_curve(const Point &p, const Pseudocircle &c);
/// Same, with an explicit starting offset into the direction list.
Location point_in_curve(const Point &p, const Pseudocircle &c, std::size_t first_direction);
/// Parity test against an arbitrary closed chain (which may revisit
/// vertices, as a face boundary walk does). Never reports OnBoundary for
/// points on the chain; callers must keep p off it.
Location point_in_ring(const Point &p, std::span<const Point> ring, std::size_t first_direction = 0);
/// Direction number i of the candidate list.
std::pair<long, long> ray_direction(std::size_t i);

/// Squared distance from p to the closed segment a-b.
Rat squared_distance_to_segment(const Point &p, const Point &a, const Point &b);

enum class ContactKind { TangentialContact, TooManyIntersections, VertexContact };

struct PairCrossing {
  Point location;
  Position on_first;
  Position on_second;
  /// Sign of d_first x d_second at the crossing.
  int turn = 0;
};

struct Contact {
  ContactKind kind;
  Point location;
};

struct PairScan {
  std::vector<PairCrossing> crossings;
  std::vector<Contact> contacts;
};

/// Every proper crossing and every degenerate contact between two curves.
PairScan scan_curve_pair(const Pseudocircle &c1, const Pseudocircle &c2);

/// Proper crossings of two curves sorted along c1; throws Error with the
/// matching code on tangential contact, vertex contact or more than two
/// crossings.
std::vector<PairCrossing> curve_pair_crossings(const Pseudocircle &c1, const Pseudocircle &c2);

/// Positive rational lower bound on the distance between any two crossing
/// points and from any crossing point to any segment not through it.
/// Returns nullopt (positive infinity) when there are no crossings.
/// Throws Error(DegenerateInput) if two crossing points coincide.
std::optional<Rat> min_clearance(std::span<const Pseudocircle> curves, std::span<const Point> crossings);

}  // namespace pseudoarr
