// SPDX-License-Identifier: Apache-2.0
#include "pseudoarr/predicates.hpp"

#include "pseudoarr/error.hpp"
#include "sweep.hpp"

#include <algorithm>
#include <numeric>

namespace pseudoarr {

int orientation(const Point &p, const Point &q, const Point &r)
{
  return sign(cross(q.x - p.x, q.y - p.y, r.x - p.x, r.y - p.y));
}

namespace {

Box segment_box(const Point &a, const Point &b)
{
  return Box{a.x < b.x ? a.x : b.x, a.y < b.y ? a.y : b.y, a.x < b.x ? b.x : a.x,
             a.y < b.y ? b.y : a.y};
}

Rat twice_signed_area(std::span<const Point> ring)
{
  Rat sum = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point &a = ring[i];
    const Point &b = ring[(i + 1) % ring.size()];
    sum += a.x * b.y - a.y * b.x;
  }
  return sum;
}

/// Closed-segment containment of p, given p collinear with a-b.
bool within_collinear(const Point &p, const Point &a, const Point &b)
{
  if (a.x != b.x) {
    return (a.x <= p.x && p.x <= b.x) || (b.x <= p.x && p.x <= a.x);
  }
  return (a.y <= p.y && p.y <= b.y) || (b.y <= p.y && p.y <= a.y);
}

bool on_segment(const Point &p, const Point &a, const Point &b)
{
  return orientation(a, b, p) == 0 && within_collinear(p, a, b);
}

}  // namespace

std::optional<std::string> polygon_problem(std::span<const Point> ring)
{
  const std::size_t m = ring.size();
  if (m < 3) {
    return "fewer than three vertices";
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (ring[i] == ring[(i + 1) % m]) {
      return "repeated consecutive vertex at index " + std::to_string(i);
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (orientation(ring[i], ring[(i + 1) % m], ring[(i + 2) % m]) == 0) {
      return "three consecutive collinear vertices at index " + std::to_string(i);
    }
  }
  if (sgn(twice_signed_area(ring)) <= 0) {
    return "vertices are not in counterclockwise order";
  }
  std::vector<Box> boxes;
  boxes.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    boxes.push_back(segment_box(ring[i], ring[(i + 1) % m]));
  }
  std::optional<std::string> problem;
  detail::overlapping_pairs(boxes, [&](std::size_t i, std::size_t j) {
    if (problem) {
      return;
    }
    const bool adjacent = j == i + 1 || (i == 0 && j == m - 1);
    if (adjacent) {
      return;
    }
    const auto r = segment_crossing(ring[i], ring[(i + 1) % m], ring[j], ring[(j + 1) % m]);
    if (r.kind != CrossingKind::None) {
      problem = "segments " + std::to_string(i) + " and " + std::to_string(j) + " intersect";
    }
  });
  return problem;
}

std::vector<Point> counterclockwise(std::vector<Point> ring)
{
  if (sgn(twice_signed_area(ring)) < 0) {
    std::reverse(ring.begin(), ring.end());
  }
  return ring;
}

Pseudocircle::Pseudocircle(std::string id, std::vector<Point> ring) : id_(std::move(id)), ring_(std::move(ring))
{
  if (auto problem = polygon_problem(ring_)) {
    throw Error(ErrorCode::InvalidCurve, "curve '" + id_ + "': " + *problem);
  }
  index();
}

Pseudocircle::Pseudocircle(Unchecked, std::string id, std::vector<Point> ring)
    : id_(std::move(id)), ring_(std::move(ring))
{
  index();
}

void Pseudocircle::index()
{
  const std::size_t m = ring_.size();
  segment_bounds_.clear();
  segment_bounds_.reserve(m);
  bounds_ = Box{ring_[0].x, ring_[0].y, ring_[0].x, ring_[0].y};
  lowest_ = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const Point &p = ring_[i];
    segment_bounds_.push_back(segment_box(p, ring_[(i + 1) % m]));
    if (p.x < bounds_.xmin) {
      bounds_.xmin = p.x;
    }
    if (p.x > bounds_.xmax) {
      bounds_.xmax = p.x;
    }
    if (p.y < bounds_.ymin) {
      bounds_.ymin = p.y;
    }
    if (p.y > bounds_.ymax) {
      bounds_.ymax = p.y;
    }
    if (lower_left(p, ring_[lowest_])) {
      lowest_ = i;
    }
  }
  double_area_ = twice_signed_area(ring_);
}

Point Pseudocircle::point_at(const Position &pos) const
{
  const Point &a = segment_start(pos.segment);
  const Point &b = segment_end(pos.segment);
  return Point{a.x + pos.t * (b.x - a.x), a.y + pos.t * (b.y - a.y)};
}

Pseudocircle Pseudocircle::translated(const Rat &dx, const Rat &dy, std::string new_id) const
{
  std::vector<Point> moved;
  moved.reserve(ring_.size());
  for (const Point &p : ring_) {
    moved.push_back(Point{p.x + dx, p.y + dy});
  }
  return Pseudocircle(Unchecked{}, new_id.empty() ? id_ : std::move(new_id), std::move(moved));
}

Pseudocircle Pseudocircle::with_id(std::string new_id) const
{
  return Pseudocircle(Unchecked{}, std::move(new_id), ring_);
}

CrossingResult segment_crossing(const Point &a1, const Point &a2, const Point &b1, const Point &b2)
{
  CrossingResult result;
  const int o1 = orientation(a1, a2, b1);
  const int o2 = orientation(a1, a2, b2);
  const int o3 = orientation(b1, b2, a1);
  const int o4 = orientation(b1, b2, a2);

  if (o1 == 0 && o2 == 0) {
    // Collinear: they meet iff some endpoint lies within the other segment.
    const bool touch = within_collinear(b1, a1, a2) || within_collinear(b2, a1, a2) ||
                       within_collinear(a1, b1, b2) || within_collinear(a2, b1, b2);
    if (!touch) {
      return result;
    }
    result.kind = CrossingKind::Degenerate;
    const bool shared = a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2;
    // A single shared endpoint with the segments pointing away from each other.
    const int inner = (within_collinear(b1, a1, a2) ? 1 : 0) + (within_collinear(b2, a1, a2) ? 1 : 0) +
                      (within_collinear(a1, b1, b2) ? 1 : 0) + (within_collinear(a2, b1, b2) ? 1 : 0);
    result.degeneracy = (shared && inner == 2) ? Degeneracy::SharedEndpoint : Degeneracy::CollinearOverlap;
    return result;
  }
  if (o1 * o2 > 0 || o3 * o4 > 0) {
    return result;
  }
  if (o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) {
    const Rat dax = a2.x - a1.x;
    const Rat day = a2.y - a1.y;
    const Rat dbx = b2.x - b1.x;
    const Rat dby = b2.y - b1.y;
    const Rat denom = cross(dax, day, dbx, dby);
    const Rat ex = b1.x - a1.x;
    const Rat ey = b1.y - a1.y;
    result.kind = CrossingKind::Proper;
    result.t1 = cross(ex, ey, dbx, dby) / denom;
    result.t2 = cross(ex, ey, dax, day) / denom;
    result.point = Point{a1.x + result.t1 * dax, a1.y + result.t1 * day};
    return result;
  }
  result.kind = CrossingKind::Degenerate;
  const bool shared = a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2;
  result.degeneracy = shared ? Degeneracy::SharedEndpoint : Degeneracy::EndpointOnInterior;
  return result;
}

std::pair<long, long> ray_direction(std::size_t i)
{
  if (i == 0) {
    return {1, 0};
  }
  std::size_t seen = 1;
  for (long s = 2;; ++s) {
    for (long a = 1; a < s; ++a) {
      if (std::gcd(a, s - a) != 1) {
        continue;
      }
      if (seen == i) {
        return {a, s - a};
      }
      ++seen;
    }
  }
}

Location point_in_curve(const Point &p, const Pseudocircle &c) { return point_in_curve(p, c, 0); }

Location point_in_curve(const Point &p, const Pseudocircle &c, std::size_t first_direction)
{
  if (!c.bounds().contains(p)) {
    return Location::Outside;
  }
  const std::size_t m = c.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (c.segment_bounds(i).contains(p) && on_segment(p, c.segment_start(i), c.segment_end(i))) {
      return Location::OnBoundary;
    }
  }
  return point_in_ring(p, c.ring(), first_direction);
}

Location point_in_ring(const Point &p, std::span<const Point> ring, std::size_t first_direction)
{
  const std::size_t m = ring.size();
  std::vector<Rat> rx(m);
  std::vector<Rat> ry(m);
  for (std::size_t i = 0; i < m; ++i) {
    rx[i] = ring[i].x - p.x;
    ry[i] = ring[i].y - p.y;
  }
  std::vector<int> side(m);
  for (std::size_t di = first_direction;; ++di) {
    const auto [dxl, dyl] = ray_direction(di);
    const Rat dx(dxl);
    const Rat dy(dyl);
    bool blocked = false;
    for (std::size_t i = 0; i < m && !blocked; ++i) {
      side[i] = sign(dx * ry[i] - dy * rx[i]);
      if (side[i] == 0 && sgn(dx * rx[i] + dy * ry[i]) > 0) {
        blocked = true;
      }
    }
    if (blocked) {
      continue;
    }
    bool inside = false;
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t j = (i + 1) % m;
      if (side[i] * side[j] >= 0) {
        continue;
      }
      // The segment straddles the ray's line; count it if the meet is ahead.
      const Rat ex = rx[j] - rx[i];
      const Rat ey = ry[j] - ry[i];
      const int num = sign(cross(rx[i], ry[i], ex, ey));
      const int den = sign(cross(dx, dy, ex, ey));
      if (num * den > 0) {
        inside = !inside;
      }
    }
    return inside ? Location::Inside : Location::Outside;
  }
}

Rat squared_distance_to_segment(const Point &p, const Point &a, const Point &b)
{
  const Rat ex = b.x - a.x;
  const Rat ey = b.y - a.y;
  const Rat len2 = ex * ex + ey * ey;
  Rat t = ((p.x - a.x) * ex + (p.y - a.y) * ey) / len2;
  if (sgn(t) < 0) {
    t = 0;
  }
  else if (t > 1) {
    t = 1;
  }
  const Point q{a.x + t * ex, a.y + t * ey};
  return squared_distance(p, q);
}

PairScan scan_curve_pair(const Pseudocircle &c1, const Pseudocircle &c2)
{
  PairScan scan;
  if (!c1.bounds().overlaps(c2.bounds())) {
    return scan;
  }
  std::vector<Box> left;
  std::vector<std::size_t> left_index;
  for (std::size_t i = 0; i < c1.size(); ++i) {
    if (c1.segment_bounds(i).overlaps(c2.bounds())) {
      left.push_back(c1.segment_bounds(i));
      left_index.push_back(i);
    }
  }
  std::vector<Box> right;
  std::vector<std::size_t> right_index;
  for (std::size_t j = 0; j < c2.size(); ++j) {
    if (c2.segment_bounds(j).overlaps(c1.bounds())) {
      right.push_back(c2.segment_bounds(j));
      right_index.push_back(j);
    }
  }
  auto add_contact = [&](ContactKind kind, const Point &where) {
    for (const Contact &c : scan.contacts) {
      if (c.kind == kind && c.location == where) {
        return;
      }
    }
    scan.contacts.push_back(Contact{kind, where});
  };
  detail::overlapping_pairs(left, right, [&](std::size_t li, std::size_t rj) {
    const std::size_t i = left_index[li];
    const std::size_t j = right_index[rj];
    const Point &a1 = c1.segment_start(i);
    const Point &a2 = c1.segment_end(i);
    const Point &b1 = c2.segment_start(j);
    const Point &b2 = c2.segment_end(j);
    const auto r = segment_crossing(a1, a2, b1, b2);
    if (r.kind == CrossingKind::Proper) {
      PairCrossing x;
      x.location = *r.point;
      x.on_first = Position{i, r.t1};
      x.on_second = Position{j, r.t2};
      x.turn = sign(cross(a2.x - a1.x, a2.y - a1.y, b2.x - b1.x, b2.y - b1.y));
      scan.crossings.push_back(std::move(x));
    }
    else if (r.kind == CrossingKind::Degenerate) {
      if (r.degeneracy == Degeneracy::CollinearOverlap) {
        add_contact(ContactKind::TangentialContact, within_collinear(b1, a1, a2) ? b1 : a1);
      }
      else {
        // The touching point is a polygon vertex of one of the two curves.
        const Point *where = &a1;
        for (const Point *cand : {&a1, &a2, &b1, &b2}) {
          const bool on_other = (cand == &a1 || cand == &a2) ? on_segment(*cand, b1, b2) : on_segment(*cand, a1, a2);
          if (on_other) {
            where = cand;
            break;
          }
        }
        add_contact(ContactKind::VertexContact, *where);
      }
    }
  });
  std::sort(scan.crossings.begin(), scan.crossings.end(),
            [](const PairCrossing &a, const PairCrossing &b) { return a.on_first < b.on_first; });
  // Overlaps first: they always come with vertex contacts at their ends.
  std::stable_sort(scan.contacts.begin(), scan.contacts.end(), [](const Contact &a, const Contact &b) {
    return (a.kind == ContactKind::TangentialContact) > (b.kind == ContactKind::TangentialContact);
  });
  if (scan.crossings.size() > 2) {
    scan.contacts.push_back(Contact{ContactKind::TooManyIntersections, scan.crossings.front().location});
  }
  return scan;
}

std::vector<PairCrossing> curve_pair_crossings(const Pseudocircle &c1, const Pseudocircle &c2)
{
  PairScan scan = scan_curve_pair(c1, c2);
  if (!scan.contacts.empty()) {
    const Contact &c = scan.contacts.front();
    const std::string where = " between '" + c1.id() + "' and '" + c2.id() + "' at (" + to_string(c.location.x) +
                              ", " + to_string(c.location.y) + ")";
    switch (c.kind) {
      case ContactKind::TangentialContact:
        throw Error(ErrorCode::TangentialContact, "overlapping segments" + where);
      case ContactKind::VertexContact:
        throw Error(ErrorCode::VertexContact, "vertex touches the other curve" + where);
      case ContactKind::TooManyIntersections:
        throw Error(ErrorCode::TooManyIntersections,
                    std::to_string(scan.crossings.size()) + " crossings" + where);
    }
  }
  return std::move(scan.crossings);
}

std::optional<Rat> min_clearance(std::span<const Pseudocircle> curves, std::span<const Point> crossings)
{
  if (crossings.empty()) {
    return std::nullopt;
  }
  std::optional<Rat> best;
  auto consider = [&](const Rat &d2) {
    if (!best || d2 < *best) {
      best = d2;
    }
  };
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    for (std::size_t j = i + 1; j < crossings.size(); ++j) {
      const Rat d2 = squared_distance(crossings[i], crossings[j]);
      if (sgn(d2) == 0) {
        throw Error(ErrorCode::DegenerateInput, "two crossing points coincide at (" + to_string(crossings[i].x) +
                                                    ", " + to_string(crossings[i].y) + ")");
      }
      consider(d2);
    }
  }
  for (const Point &x : crossings) {
    for (const Pseudocircle &c : curves) {
      for (std::size_t s = 0; s < c.size(); ++s) {
        const Rat d2 = squared_distance_to_segment(x, c.segment_start(s), c.segment_end(s));
        if (sgn(d2) != 0) {
          consider(d2);
        }
      }
    }
  }
  if (!best) {
    return std::nullopt;
  }
  for (unsigned bits = 32;; bits *= 2) {
    Rat r = sqrt_floor(*best, bits);
    if (sgn(r) > 0) {
      return r;
    }
  }
}

}  // namespace pseudoarr
