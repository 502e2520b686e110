// SPDX-License-Identifier: Apache-2.0
#include "pseudoarr/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <numbers>
#include <set>

namespace pseudoarr {

namespace {

constexpr double kPi = std::numbers::pi;

/// Rational point on the unit circle near angle theta.
Point unit_direction(double theta, long denominator)
{
  theta = std::remainder(theta, 2 * kPi);
  bool flip = false;
  if (theta > kPi / 2) {
    theta -= kPi;
    flip = true;
  }
  else if (theta < -kPi / 2) {
    theta += kPi;
    flip = true;
  }
  const double t = std::tan(theta / 2);
  const Rat tr = ratio(std::lround(t * static_cast<double>(denominator)), denominator);
  const Rat t2 = tr * tr;
  Rat x = (1 - t2) / (1 + t2);
  Rat y = 2 * tr / (1 + t2);
  if (flip) {
    x = -x;
    y = -y;
  }
  return Point{x, y};
}

Point polar(const Rat &radius, double theta, long denominator = 4096)
{
  const Point d = unit_direction(theta, denominator);
  return Point{radius * d.x, radius * d.y};
}

struct Disk {
  Point center;
  Rat radius;
};

std::vector<Pseudocircle> disks_to_polygons(const std::vector<Disk> &disks, std::size_t resolution,
                                            const std::string &prefix)
{
  std::vector<Pseudocircle> out;
  out.reserve(disks.size());
  for (std::size_t i = 0; i < disks.size(); ++i) {
    CirclePolygonSpec spec{disks[i].center, disks[i].radius, resolution, Rat(0)};
    out.push_back(circle_polygon(spec, prefix + std::to_string(i + 1)));
  }
  return out;
}

bool is_arrangement_error(ErrorCode code)
{
  switch (code) {
    case ErrorCode::InvalidCurve:
    case ErrorCode::TangentialContact:
    case ErrorCode::TooManyIntersections:
    case ErrorCode::VertexContact:
    case ErrorCode::TriplePoint:
      return true;
    default:
      return false;
  }
}

/// Polygonalizes disks at increasing resolution until validation succeeds and
/// `accept` agrees with the profile.
Arrangement disks_with_retry(const std::vector<Disk> &disks, std::size_t resolution, const std::string &prefix,
                             const std::function<bool(const Arrangement &)> &accept, ErrorCode failure,
                             const std::string &family)
{
  std::string last = "no attempt";
  for (std::size_t res = resolution; res <= resolution * 8; res *= 2) {
    try {
      Arrangement arr = Arrangement::validate(disks_to_polygons(disks, res, prefix));
      if (!accept || accept(arr)) {
        return arr;
      }
      last = "profile differs from the intended one at resolution " + std::to_string(res);
    }
    catch (const Error &e) {
      if (!is_arrangement_error(e.code())) {
        throw;
      }
      last = e.what();
    }
  }
  throw Error(failure, family + ": " + last);
}

std::vector<Disk> collinear_disks(std::size_t m, const Rat &spacing, const Rat &radius)
{
  std::vector<Disk> disks;
  for (std::size_t i = 0; i < m; ++i) {
    disks.push_back(Disk{Point{spacing * static_cast<long>(i), Rat(0)}, radius});
  }
  return disks;
}

std::size_t collinear_resolution(std::size_t m) { return std::max<std::size_t>(32, 16 * (m > 1 ? m - 1 : 1)); }

Arrangement collinear_any(std::size_t m, const Rat &spacing, const Rat &radius_in, std::size_t resolution)
{
  const Rat radius = sgn(radius_in) > 0 ? radius_in : spacing * static_cast<long>(m) / 2;
  if (resolution == 0) {
    resolution = collinear_resolution(m);
  }
  const long mm = static_cast<long>(m);
  auto accept = [mm](const Arrangement &arr) {
    const auto p = weight_profile(arr);
    return arr.is_complete() && p.v_at(0) == (mm >= 2 ? 2 * mm - 2 : 0) && p.f_at(0) == 1;
  };
  return disks_with_retry(collinear_disks(m, spacing, radius), resolution, "c", accept,
                          ErrorCode::DegenerateRadius, "collinear_delta");
}

long count_weight_zero(const Arrangement &arr)
{
  long count = 0;
  for (std::size_t v = 0; v < arr.crossings().size(); ++v) {
    count += arr.vertex_weight(v) == 0 ? 1 : 0;
  }
  return count;
}

// --- spanning curve -------------------------------------------------------

struct Dvec {
  double x = 0;
  double y = 0;
};

Dvec to_d(const Point &p) { return Dvec{p.x.get_d(), p.y.get_d()}; }

Dvec left_unit_normal(const Point &a, const Point &b)
{
  const Dvec pa = to_d(a);
  const Dvec pb = to_d(b);
  const double dx = pb.x - pa.x;
  const double dy = pb.y - pa.y;
  const double len = std::hypot(dx, dy);
  return Dvec{-dy / len, dx / len};
}

struct Piece {
  std::size_t half_edge;
  std::size_t curve;
};

struct FaceChain {
  std::vector<Point> points;
  std::vector<Piece> pieces;  // piece i runs from points[i] to points[i+1]
};

FaceChain face_chain(const ArrangementGraph &g, std::size_t cycle)
{
  FaceChain chain;
  for (std::size_t h : g.cycle(cycle)) {
    auto pts = g.half_edge_points(h);
    const std::size_t curve = g.edges()[h / 2].curve;
    if (g.edges()[h / 2].loop) {
      for (const Point &p : pts) {
        chain.points.push_back(p);
        chain.pieces.push_back(Piece{h, curve});
      }
      break;
    }
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
      chain.points.push_back(pts[k]);
      chain.pieces.push_back(Piece{h, curve});
    }
  }
  return chain;
}

class Offsetter {
 public:
  Offsetter(const FaceChain &chain, double eps) : chain_(chain), eps_(eps)
  {
    bits_ = 24U + static_cast<unsigned>(std::max(0.0, std::ceil(-std::log2(eps))));
    const std::size_t L = chain.points.size();
    normals_.resize(L);
    for (std::size_t i = 0; i < L; ++i) {
      normals_[i] = left_unit_normal(chain.points[i], chain.points[(i + 1) % L]);
    }
  }

  Rat rat(double v) const { return from_double(v, bits_); }

  /// Miter offset of chain vertex i at distance scale*eps.
  Point vertex(std::size_t i, double scale) const
  {
    const std::size_t L = chain_.points.size();
    const Dvec a = normals_[(i + L - 1) % L];
    const Dvec b = normals_[i];
    const double denom = 1 + a.x * b.x + a.y * b.y;
    if (denom < 1e-6) {
      throw Error(ErrorCode::ConstructionFailed, "face boundary folds back on itself");
    }
    const double mx = (a.x + b.x) / denom;
    const double my = (a.y + b.y) / denom;
    const Point &p = chain_.points[i];
    return Point{p.x + rat(mx * scale * eps_), p.y + rat(my * scale * eps_)};
  }

  /// Point at fraction f of piece i, displaced along its left normal.
  Point along(std::size_t i, const Rat &f, double shift) const
  {
    const std::size_t L = chain_.points.size();
    const Point &a = chain_.points[i];
    const Point &b = chain_.points[(i + 1) % L];
    const Dvec n = normals_[i];
    return Point{a.x + f * (b.x - a.x) + rat(n.x * shift), a.y + f * (b.y - a.y) + rat(n.y * shift)};
  }

  void dip(std::vector<Point> &out, std::size_t i) const
  {
    out.push_back(along(i, Rat(1, 3), eps_));
    out.push_back(along(i, Rat(1, 3), -eps_));
    out.push_back(along(i, Rat(2, 3), -eps_));
    out.push_back(along(i, Rat(2, 3), eps_));
  }

  double eps() const { return eps_; }

 private:
  const FaceChain &chain_;
  double eps_;
  unsigned bits_;
  std::vector<Dvec> normals_;
};

double piece_length2(const FaceChain &chain, std::size_t i)
{
  const std::size_t L = chain.points.size();
  return squared_distance(chain.points[i], chain.points[(i + 1) % L]).get_d();
}

/// One dipped piece per curve: the longest piece of the first half-edge of
/// that curve met when walking the chain from `start`.
std::vector<bool> choose_dips(const FaceChain &chain, std::size_t start)
{
  const std::size_t L = chain.points.size();
  std::vector<bool> dipped(L, false);
  std::set<std::size_t> done;
  for (std::size_t k = 0; k < L; ++k) {
    const std::size_t i = (start + k) % L;
    const Piece &p = chain.pieces[i];
    if (!done.insert(p.curve).second) {
      continue;
    }
    std::size_t best = i;
    for (std::size_t j = 0; j < L; ++j) {
      if (chain.pieces[j].half_edge == p.half_edge && piece_length2(chain, j) > piece_length2(chain, best)) {
        best = j;
      }
    }
    dipped[best] = true;
  }
  return dipped;
}

std::vector<Point> tidy_ring(std::vector<Point> ring)
{
  bool changed = true;
  while (changed && ring.size() > 3) {
    changed = false;
    for (std::size_t i = 0; i < ring.size() && ring.size() > 3; ++i) {
      const std::size_t L = ring.size();
      const Point &a = ring[(i + L - 1) % L];
      const Point &b = ring[i];
      const Point &c = ring[(i + 1) % L];
      if (a == b || orientation(a, b, c) == 0) {
        ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return counterclockwise(std::move(ring));
}

std::vector<Point> spanning_ring(const FaceChain &chain, bool bounded, double eps)
{
  Offsetter off(chain, eps);
  const std::size_t L = chain.points.size();
  std::vector<Point> ring;
  if (bounded) {
    const auto dipped = choose_dips(chain, 0);
    for (std::size_t i = 0; i < L; ++i) {
      ring.push_back(off.vertex(i, 1.0));
      if (dipped[i]) {
        off.dip(ring, i);
      }
    }
    return ring;
  }
  // A thin band hugging the outside of the arrangement, open at a gap in
  // the longest piece so that its interior holds no old vertex.
  std::size_t gap = 0;
  for (std::size_t i = 1; i < L; ++i) {
    if (piece_length2(chain, i) > piece_length2(chain, gap)) {
      gap = i;
    }
  }
  const auto dipped = choose_dips(chain, gap);
  ring.push_back(off.along(gap, Rat(1, 6), eps));
  if (dipped[gap]) {
    off.dip(ring, gap);
  }
  for (std::size_t k = 1; k <= L; ++k) {
    const std::size_t i = (gap + k) % L;
    ring.push_back(off.vertex(i, 1.0));
    if (i != gap && dipped[i]) {
      off.dip(ring, i);
    }
  }
  ring.push_back(off.along(gap, Rat(1, 12), eps));
  ring.push_back(off.along(gap, Rat(1, 12), 3 * eps));
  for (std::size_t k = 0; k < L; ++k) {
    const std::size_t i = (gap + L - k) % L;
    ring.push_back(off.vertex(i, 3.0));
  }
  ring.push_back(off.along(gap, Rat(1, 6), 3 * eps));
  return ring;
}

}  // namespace

Pseudocircle circle_polygon(const CirclePolygonSpec &spec, std::string id)
{
  if (sgn(spec.radius) <= 0) {
    throw Error(ErrorCode::InvalidArgument, "circle radius must be positive");
  }
  if (spec.resolution < 8) {
    throw Error(ErrorCode::InvalidArgument, "circle resolution must be at least 8");
  }
  const std::size_t N = spec.resolution;
  const long denominator = static_cast<long>(8 * N);
  const double phase = spec.phase.get_d();
  std::vector<Point> ring;
  ring.reserve(N);
  for (std::size_t k = 0; k < N; ++k) {
    const double theta = 2 * kPi * (static_cast<double>(k) / static_cast<double>(N) + phase);
    const Point d = unit_direction(theta, denominator);
    ring.push_back(Point{spec.center.x + spec.radius * d.x, spec.center.y + spec.radius * d.y});
  }
  return Pseudocircle(std::move(id), std::move(ring));
}

Arrangement chain(std::size_t n, std::size_t resolution)
{
  if (n < 2) {
    throw Error(ErrorCode::InvalidArgument, "chain needs n >= 2");
  }
  std::vector<Disk> disks;
  for (std::size_t i = 0; i < n; ++i) {
    disks.push_back(Disk{Point{ratio(3 * static_cast<long>(i), 2), Rat(0)}, Rat(1)});
  }
  const long nn = static_cast<long>(n);
  auto accept = [nn](const Arrangement &arr) {
    const auto p = weight_profile(arr);
    return p.v_at(0) == 2 * nn - 2 && p.f_at(0) == 1;
  };
  return disks_with_retry(disks, resolution, "c", accept, ErrorCode::ConstructionFailed, "chain");
}

Arrangement collinear_delta(std::size_t m, const Rat &spacing, const Rat &radius, std::size_t resolution)
{
  if (m < 3) {
    throw Error(ErrorCode::InvalidArgument, "collinear_delta needs m >= 3");
  }
  if (sgn(spacing) <= 0) {
    throw Error(ErrorCode::InvalidArgument, "spacing must be positive");
  }
  if (sgn(radius) > 0 && 2 * radius <= spacing * static_cast<long>(m - 1)) {
    throw Error(ErrorCode::DegenerateRadius, "radius must exceed (m-1)*spacing/2 so that all pairs cross");
  }
  return collinear_any(m, spacing, radius, resolution);
}

Arrangement alpha_triple(std::size_t resolution)
{
  const Rat r(21, 20);
  const std::vector<Disk> disks{{{Rat(-1), Rat(0)}, r}, {{Rat(1), Rat(0)}, r}, {{Rat(0), Rat(7, 4)}, r}};
  auto accept = [](const Arrangement &arr) { return arr.is_complete() && count_weight_zero(arr) == 6; };
  return disks_with_retry(disks, resolution, "a", accept, ErrorCode::ConstructionFailed, "alpha_triple");
}

Arrangement venn_triple(std::size_t resolution)
{
  const Rat r(13, 10);
  const std::vector<Disk> disks{{{Rat(1), Rat(0)}, r}, {{Rat(-1), Rat(0)}, r}, {{Rat(0), Rat(1)}, r}};
  auto accept = [](const Arrangement &arr) { return arr.is_complete() && count_weight_zero(arr) == 3; };
  return disks_with_retry(disks, resolution, "v", accept, ErrorCode::ConstructionFailed, "venn_triple");
}

Arrangement concentric_type_triple(std::size_t resolution)
{
  const std::vector<Disk> disks{
      {{Rat(-1, 2), Rat(0)}, Rat(1)}, {{Rat(1, 2), Rat(0)}, Rat(1)}, {{Rat(0), Rat(0)}, Rat(3, 5)}};
  auto accept = [](const Arrangement &arr) { return arr.is_complete() && count_weight_zero(arr) == 2; };
  return disks_with_retry(disks, resolution, "k", accept, ErrorCode::ConstructionFailed, "concentric_type_triple");
}

Arrangement concentric_family(std::size_t n, std::size_t resolution)
{
  if (n < 2) {
    throw Error(ErrorCode::InvalidArgument, "concentric_family needs n >= 2");
  }
  std::vector<Disk> disks;
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = 2 * kPi * static_cast<double>(k) / static_cast<double>(n);
    disks.push_back(Disk{polar(Rat(1, 5), theta), Rat(1)});
  }
  auto accept = [](const Arrangement &arr) { return arr.is_complete() && weight_profile(arr).f.back() > 0; };
  return disks_with_retry(disks, resolution, "k", accept, ErrorCode::ConstructionFailed, "concentric_family");
}

Arrangement alpha4()
{
  // The alpha triple plus a small circle around the circumcenter of its
  // three centers, which sits in the triple's bounded weight-0 face.
  const Rat r(21, 20);
  const std::vector<Disk> disks{{{Rat(-1), Rat(0)}, r},
                                {{Rat(1), Rat(0)}, r},
                                {{Rat(0), Rat(7, 4)}, r},
                                {{Rat(0), Rat(33, 56)}, Rat(1, 5)}};
  auto accept = [](const Arrangement &arr) { return arr.is_complete() && count_weight_zero(arr) == 12; };
  return disks_with_retry(disks, 64, "q", accept, ErrorCode::ConstructionFailed, "alpha4");
}

Arrangement sharp_4n6(std::size_t n)
{
  if (n < 3) {
    throw Error(ErrorCode::InvalidArgument, "sharp_4n6 needs n >= 3");
  }
  const Arrangement base = collinear_any(n - 1, Rat(1), Rat(0), 0);
  return insert_spanning_curve(base, 0, "s" + std::to_string(n));
}

Arrangement max_complete(std::size_t n)
{
  if (n < 3) {
    throw Error(ErrorCode::InvalidArgument, "max_complete needs n >= 3");
  }
  const Arrangement base = collinear_any(n - 2, Rat(1), Rat(0), 0);
  const Arrangement once = insert_spanning_curve(base, 0, "o1");
  return insert_spanning_curve(once, 0, "o2");
}

Arrangement hex_packing(std::size_t rows, const Rat &epsilon, std::size_t resolution)
{
  if (rows < 2) {
    throw Error(ErrorCode::InvalidArgument, "hex_packing needs rows >= 2");
  }
  if (sgn(epsilon) <= 0) {
    throw Error(ErrorCode::InvalidArgument, "epsilon must be positive");
  }
  // sqrt(3) ~ 97/56, so diagonal neighbours sit at distance sqrt(1 + (97/56)^2) ~ 2.00008.
  const Rat s3(97, 56);
  const long R = static_cast<long>(rows) - 1;
  std::vector<Disk> disks;
  for (long r = -R; r <= R; ++r) {
    for (long q = -R; q <= R; ++q) {
      if (std::abs(q + r) > R) {
        continue;
      }
      disks.push_back(Disk{Point{Rat(2 * q + r), s3 * r}, 1 + epsilon});
    }
  }
  const Rat reach = 2 * (1 + epsilon);
  for (std::size_t i = 0; i < disks.size(); ++i) {
    for (std::size_t j = i + 1; j < disks.size(); ++j) {
      const Rat d2 = squared_distance(disks[i].center, disks[j].center);
      const bool neighbours = d2 < Rat(41, 10);
      if (neighbours != (d2 < reach * reach)) {
        throw Error(ErrorCode::DegenerateRadius, "epsilon changes the neighbour structure of the packing");
      }
    }
  }
  return disks_with_retry(disks, resolution, "h", nullptr, ErrorCode::DegenerateRadius, "hex_packing");
}

Arrangement unit_circle_sharp(std::size_t n)
{
  if (n < 3) {
    throw Error(ErrorCode::InvalidArgument, "unit_circle_sharp needs n >= 3");
  }
  // A unit circle at the origin and n-1 unit circles whose centers lie on an
  // arc of radius 2 - delta, spread over an angle just under 60 degrees.
  struct Layout {
    double span_degrees;
    Rat delta;
  };
  static const std::vector<Layout> table{{43.8, Rat(2, 25)},      {59.9, Rat(9, 250)},   {59.9, Rat(31, 2000)},
                                         {59.5, Rat(17, 2000)},   {59.9, Rat(11, 2000)}, {59.9, Rat(1, 250)},
                                         {59.9, Rat(3, 1000)},    {59.5, Rat(1, 500)}};
  Layout layout{59.5, Rat(4, 25) / static_cast<long>((n - 1) * (n - 1))};
  if (n - 3 < table.size()) {
    layout = table[n - 3];
  }
  const std::size_t m = n - 1;
  const Rat rho = 2 - layout.delta;
  std::vector<Disk> disks{{{Rat(0), Rat(0)}, Rat(1)}};
  const double span = layout.span_degrees * kPi / 180.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double theta = -span / 2 + span * static_cast<double>(k) / static_cast<double>(m - 1);
    disks.push_back(Disk{polar(rho, theta, 1L << 16), Rat(1)});
  }
  const long nn = static_cast<long>(n);
  auto accept = [nn](const Arrangement &arr) { return arr.is_complete() && count_weight_zero(arr) == 4 * nn - 6; };
  return disks_with_retry(disks, 256, "u", accept, ErrorCode::ConstructionFailed, "unit_circle_sharp");
}

Arrangement insert_spanning_curve(const Arrangement &arr, std::size_t face, std::string id)
{
  const auto shared = std::make_shared<const Arrangement>(arr);
  ArrangementGraph g(shared);
  if (face >= g.faces().size()) {
    throw Error(ErrorCode::InvalidArgument, "no face " + std::to_string(face));
  }
  const Face &F = g.faces()[face];
  if (F.weight != 0) {
    throw Error(ErrorCode::ConstructionFailed, "face " + std::to_string(face) + " has weight " +
                                                   std::to_string(F.weight) + ", not 0");
  }
  if (F.cycles.size() != 1) {
    throw Error(ErrorCode::ConstructionFailed, "only faces bounded by a single boundary cycle are supported");
  }
  if (id.empty()) {
    id = "g" + std::to_string(arr.n() + 1);
  }
  if (arr.index_of(id)) {
    throw Error(ErrorCode::DuplicateId, "curve id '" + id + "' already present");
  }
  const FaceChain chain = face_chain(g, F.cycles.front());
  const long K = static_cast<long>(F.curves.size());
  const long old_v0 = count_weight_zero(arr);

  const Box box = arr.bounds();
  const double diag = std::hypot(Rat(box.xmax - box.xmin).get_d(), Rat(box.ymax - box.ymin).get_d());
  std::string last = "no attempt";
  for (double eps = diag / 256; eps > diag * 1e-9; eps /= 2) {
    try {
      std::vector<Point> ring = tidy_ring(spanning_ring(chain, F.bounded, eps));
      auto curve = std::make_shared<const Pseudocircle>(id, std::move(ring));
      std::vector<Arrangement::CurvePtr> curves = arr.curve_ptrs();
      curves.push_back(curve);
      Arrangement out = Arrangement::validate(std::move(curves));
      // Postconditions: 2K new weight-0 vertices, nothing old enclosed.
      const std::size_t added = out.n() - 1;
      long new_vertices = 0;
      bool all_zero = true;
      for (std::size_t v = 0; v < out.crossings().size(); ++v) {
        const Crossing &x = out.crossings()[v];
        if (x.second == added) {
          ++new_vertices;
          all_zero = all_zero && out.vertex_weight(v) == 0;
        }
        else if (std::find(x.containing.begin(), x.containing.end(), added) != x.containing.end()) {
          all_zero = false;
        }
      }
      if (new_vertices == 2 * K && all_zero && count_weight_zero(out) == old_v0 + 2 * K) {
        return out;
      }
      last = "postconditions failed at offset " + std::to_string(eps);
    }
    catch (const Error &e) {
      if (!is_arrangement_error(e.code()) && e.code() != ErrorCode::ConstructionFailed) {
        throw;
      }
      last = e.what();
    }
  }
  throw Error(ErrorCode::ConstructionFailed, "insert_spanning_curve: " + last);
}

namespace {

std::vector<Point> refine(const Pseudocircle &c, std::size_t resolution)
{
  const std::size_t m = c.size();
  const std::size_t pieces = std::max<std::size_t>(1, (resolution + m - 1) / m);
  std::vector<Point> out;
  out.reserve(m * pieces);
  for (std::size_t i = 0; i < m; ++i) {
    const Point &a = c.segment_start(i);
    const Point &b = c.segment_end(i);
    for (std::size_t k = 0; k < pieces; ++k) {
      const Rat f = ratio(static_cast<long>(k), static_cast<long>(pieces));
      out.push_back(Point{a.x + f * (b.x - a.x), a.y + f * (b.y - a.y)});
    }
  }
  return out;
}

/// A point with a small denominator strictly inside every curve.
std::optional<Point> simple_common_point(const Arrangement &arr, const Point &sample)
{
  for (unsigned bits = 0; bits <= 64; ++bits) {
    const Rat scale = Rat(mpz_class(1) << bits);
    for (int dx = 0; dx <= 1; ++dx) {
      for (int dy = 0; dy <= 1; ++dy) {
        mpz_class fx;
        mpz_class fy;
        const Rat sx = sample.x * scale;
        const Rat sy = sample.y * scale;
        mpz_fdiv_q(fx.get_mpz_t(), sx.get_num_mpz_t(), sx.get_den_mpz_t());
        mpz_fdiv_q(fy.get_mpz_t(), sy.get_num_mpz_t(), sy.get_den_mpz_t());
        const Point q{Rat(fx + dx) / scale, Rat(fy + dy) / scale};
        bool inside = true;
        for (std::size_t c = 0; c < arr.n() && inside; ++c) {
          inside = point_in_curve(q, arr.curve(c)) == Location::Inside;
        }
        if (inside) {
          return q;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Arrangement invert(const Arrangement &arr, std::size_t resolution)
{
  const auto shared = std::make_shared<const Arrangement>(arr);
  ArrangementGraph g(shared);
  const int n = static_cast<int>(arr.n());
  std::optional<std::size_t> full;
  for (std::size_t f = 0; f < g.faces().size(); ++f) {
    if (g.faces()[f].weight == n) {
      full = f;
      break;
    }
  }
  if (!full) {
    throw Error(ErrorCode::NoFullWeightFace, "no face lies inside all " + std::to_string(n) + " curves");
  }
  const auto q = simple_common_point(arr, g.face_sample(*full));
  if (!q) {
    throw Error(ErrorCode::ValidationFailed, "could not find a simple point inside every curve");
  }
  const WeightProfile before = g.weight_profile();
  std::vector<long> reversed(before.v.rbegin(), before.v.rend());

  std::string last;
  for (std::size_t res = resolution; res <= resolution * 8; res *= 2) {
    try {
      std::vector<Pseudocircle> curves;
      for (std::size_t c = 0; c < arr.n(); ++c) {
        std::vector<Point> ring;
        for (const Point &p : refine(arr.curve(c), res)) {
          const Rat dx = p.x - q->x;
          const Rat dy = p.y - q->y;
          const Rat d2 = dx * dx + dy * dy;
          ring.push_back(Point{dx / d2, dy / d2});
        }
        curves.emplace_back(arr.curve(c).id(), counterclockwise(std::move(ring)));
      }
      Arrangement out = Arrangement::validate(std::move(curves));
      const auto after = weight_profile(out);
      if (after.v == reversed) {
        return out;
      }
      last = "weight vector is not the reversal at resolution " + std::to_string(res);
    }
    catch (const Error &e) {
      if (!is_arrangement_error(e.code())) {
        throw;
      }
      last = e.what();
    }
  }
  if (last.rfind("weight vector", 0) == 0) {
    throw Error(ErrorCode::ReversalCheckFailed, last);
  }
  throw Error(ErrorCode::ValidationFailed, last);
}

const std::vector<FamilyInfo> &families()
{
  static const std::vector<FamilyInfo> list{
      {"chain", "n, resolution", "circles in a row, consecutive ones overlapping"},
      {"collinear_delta", "m, resolution", "equal circles on a line, all pairs crossing"},
      {"sharp4n6", "n", "collinear_delta(n-1) plus a spanning curve around it"},
      {"alpha_triple", "", "three circles with all six vertices of weight 0"},
      {"venn_triple", "", "three circles in Venn position"},
      {"concentric_triple", "", "triple with a common interior and containment counts (0,2,2)"},
      {"concentric_family", "n, resolution", "n unit circles with nearly common centers"},
      {"alpha4", "", "four curves, every triple of alpha type"},
      {"max_complete", "n", "complete arrangement with v0 = 6n - 12"},
      {"hex_packing", "rows, epsilon, resolution", "hexagonal circle packing with enlarged radii"},
      {"unit_circle_sharp", "n", "complete unit circles with v0 = 4n - 6"},
  };
  return list;
}

namespace {

std::size_t size_param(const std::map<std::string, std::string> &params, const std::string &key,
                       std::optional<std::size_t> fallback)
{
  auto it = params.find(key);
  if (it == params.end()) {
    if (!fallback) {
      throw Error(ErrorCode::InvalidArgument, "missing parameter '" + key + "'");
    }
    return *fallback;
  }
  try {
    std::size_t used = 0;
    const long v = std::stol(it->second, &used);
    if (used != it->second.size() || v < 0) {
      throw std::invalid_argument(it->second);
    }
    return static_cast<std::size_t>(v);
  }
  catch (const std::exception &) {
    throw Error(ErrorCode::InvalidArgument, "parameter '" + key + "' must be a non-negative integer");
  }
}

}  // namespace

Arrangement construct_family(const std::string &name, const std::map<std::string, std::string> &params)
{
  if (name == "chain") {
    return chain(size_param(params, "n", std::nullopt), size_param(params, "resolution", 64));
  }
  if (name == "collinear_delta") {
    return collinear_delta(size_param(params, "m", std::nullopt), Rat(1), Rat(0), size_param(params, "resolution", 0));
  }
  if (name == "sharp4n6" || name == "sharp_4n6") {
    return sharp_4n6(size_param(params, "n", std::nullopt));
  }
  if (name == "alpha_triple") {
    return alpha_triple();
  }
  if (name == "venn_triple") {
    return venn_triple();
  }
  if (name == "concentric_triple" || name == "concentric_type_triple") {
    return concentric_type_triple();
  }
  if (name == "concentric_family") {
    return concentric_family(size_param(params, "n", std::nullopt), size_param(params, "resolution", 96));
  }
  if (name == "alpha4") {
    return alpha4();
  }
  if (name == "max_complete") {
    return max_complete(size_param(params, "n", std::nullopt));
  }
  if (name == "hex_packing") {
    Rat eps(1, 20);
    if (auto it = params.find("epsilon"); it != params.end()) {
      auto parsed = parse_rational(it->second);
      if (!parsed) {
        throw Error(ErrorCode::InvalidArgument, "epsilon must be a rational \"p/q\"");
      }
      eps = *parsed;
    }
    return hex_packing(size_param(params, "rows", std::nullopt), eps, size_param(params, "resolution", 48));
  }
  if (name == "unit_circle_sharp") {
    return unit_circle_sharp(size_param(params, "n", std::nullopt));
  }
  throw Error(ErrorCode::UnknownFamily, "unknown family '" + name + "'");
}

std::vector<std::pair<std::string, long>> family_expectations(const std::string &name,
                                                              const std::map<std::string, std::string> &params)
{
  auto size = [&](const char *key) { return static_cast<long>(size_param(params, key, std::nullopt)); };
  if (name == "chain") {
    return {{"v_0", 2 * size("n") - 2}, {"f_0", 1}};
  }
  if (name == "collinear_delta") {
    return {{"v_0", 2 * size("m") - 2}, {"f_0", 1}};
  }
  if (name == "sharp4n6" || name == "sharp_4n6") {
    return {{"v_0", 4 * size("n") - 6}, {"f_0", size("n") - 1}};
  }
  if (name == "alpha_triple") {
    return {{"v_0", 6}, {"f_0", 2}};
  }
  if (name == "venn_triple") {
    return {{"v_0", 3}, {"v_1", 3}, {"f_3", 1}};
  }
  if (name == "concentric_triple" || name == "concentric_type_triple") {
    return {{"v_0", 2}, {"v_1", 4}};
  }
  if (name == "alpha4") {
    return {{"v_0", 12}};
  }
  if (name == "max_complete") {
    return {{"v_0", 6 * size("n") - 12}};
  }
  if (name == "unit_circle_sharp") {
    return {{"v_0", 4 * size("n") - 6}};
  }
  return {};
}

}  // namespace pseudoarr
