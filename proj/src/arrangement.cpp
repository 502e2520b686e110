// SPDX-License-Identifier: Apache-2.0
#include "pseudoarr/arrangement.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace pseudoarr {

namespace {

std::atomic<int> g_weight_mutation{0};

std::string point_text(const Point &p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

ErrorCode contact_code(ContactKind kind)
{
  switch (kind) {
    case ContactKind::TangentialContact: return ErrorCode::TangentialContact;
    case ContactKind::TooManyIntersections: return ErrorCode::TooManyIntersections;
    case ContactKind::VertexContact: return ErrorCode::VertexContact;
  }
  return ErrorCode::ValidationFailed;
}

}  // namespace

void set_vertex_weight_mutation(int offset) { g_weight_mutation.store(offset); }
int vertex_weight_mutation() { return g_weight_mutation.load(); }

std::string Violation::describe() const
{
  std::string text = to_string(kind);
  if (!first.empty()) {
    text += " '" + first + "'";
  }
  if (!second.empty()) {
    text += " / '" + second + "'";
  }
  if (!third.empty()) {
    text += " / '" + third + "'";
  }
  if (kind != ErrorCode::DuplicateId) {
    text += " at " + point_text(location);
  }
  return text;
}

ValidationReport Arrangement::check(std::vector<CurvePtr> curves)
{
  ValidationReport report;
  const std::size_t n = curves.size();
  if (n == 0) {
    report.violations.push_back(Violation{ErrorCode::DegenerateInput, "", "", "", Point{}});
    return report;
  }
  std::set<std::string> seen;
  for (const auto &c : curves) {
    if (!seen.insert(c->id()).second) {
      report.violations.push_back(Violation{ErrorCode::DuplicateId, c->id(), "", "", Point{}});
    }
  }

  auto arr = std::shared_ptr<Arrangement>(new Arrangement());
  arr->pair_index_.assign(n * n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      PairScan scan = scan_curve_pair(*curves[i], *curves[j]);
      if (!scan.contacts.empty()) {
        for (const Contact &c : scan.contacts) {
          report.violations.push_back(
              Violation{contact_code(c.kind), curves[i]->id(), curves[j]->id(), "", c.location});
        }
        continue;
      }
      for (PairCrossing &x : scan.crossings) {
        Crossing v;
        v.location = std::move(x.location);
        v.first = i;
        v.second = j;
        v.on_first = std::move(x.on_first);
        v.on_second = std::move(x.on_second);
        v.turn = x.turn;
        arr->pair_index_[i * n + j].push_back(arr->crossings_.size());
        arr->pair_index_[j * n + i].push_back(arr->crossings_.size());
        arr->crossings_.push_back(std::move(v));
      }
    }
  }

  for (Crossing &v : arr->crossings_) {
    for (std::size_t k = 0; k < n; ++k) {
      if (k == v.first || k == v.second) {
        continue;
      }
      const Location loc = point_in_curve(v.location, *curves[k]);
      if (loc == Location::OnBoundary) {
        report.violations.push_back(Violation{ErrorCode::TriplePoint, curves[v.first]->id(),
                                              curves[v.second]->id(), curves[k]->id(), v.location});
      }
      else if (loc == Location::Inside) {
        v.containing.push_back(k);
      }
    }
  }

  if (report.violations.empty()) {
    arr->curves_ = std::move(curves);
    report.arrangement = std::move(arr);
  }
  return report;
}

Arrangement Arrangement::validate(std::vector<CurvePtr> curves)
{
  ValidationReport report = check(std::move(curves));
  if (!report.ok()) {
    std::ostringstream msg;
    msg << report.violations.size() << " violation(s)";
    for (const Violation &v : report.violations) {
      msg << "; " << v.describe();
    }
    throw Error(report.violations.front().kind, msg.str());
  }
  return *report.arrangement;
}

Arrangement Arrangement::validate(std::vector<Pseudocircle> curves)
{
  std::vector<CurvePtr> ptrs;
  ptrs.reserve(curves.size());
  for (auto &c : curves) {
    ptrs.push_back(std::make_shared<const Pseudocircle>(std::move(c)));
  }
  return validate(std::move(ptrs));
}

const std::vector<std::size_t> &Arrangement::crossings_between(std::size_t i, std::size_t j) const
{
  return pair_index_[i * n() + j];
}

std::optional<std::size_t> Arrangement::index_of(std::string_view id) const
{
  for (std::size_t i = 0; i < curves_.size(); ++i) {
    if (curves_[i]->id() == id) {
      return i;
    }
  }
  return std::nullopt;
}

std::vector<std::string> Arrangement::ids() const
{
  std::vector<std::string> out;
  out.reserve(curves_.size());
  for (const auto &c : curves_) {
    out.push_back(c->id());
  }
  return out;
}

bool Arrangement::is_complete() const
{
  for (std::size_t i = 0; i < n(); ++i) {
    for (std::size_t j = i + 1; j < n(); ++j) {
      if (!crosses(i, j)) {
        return false;
      }
    }
  }
  return true;
}

Arrangement Arrangement::induced(std::span<const std::size_t> subset) const
{
  if (subset.empty()) {
    throw Error(ErrorCode::InvalidArgument, "empty curve subset");
  }
  std::vector<std::size_t> remap(n(), npos);
  for (std::size_t k = 0; k < subset.size(); ++k) {
    if (subset[k] >= n()) {
      throw Error(ErrorCode::UnknownId, "curve index " + std::to_string(subset[k]) + " out of range");
    }
    if (remap[subset[k]] != npos) {
      throw Error(ErrorCode::DuplicateId, "curve '" + curves_[subset[k]]->id() + "' selected twice");
    }
    remap[subset[k]] = k;
  }
  Arrangement out;
  const std::size_t m = subset.size();
  for (std::size_t idx : subset) {
    out.curves_.push_back(curves_[idx]);
  }
  out.pair_index_.assign(m * m, {});
  for (const Crossing &v : crossings_) {
    std::size_t a = remap[v.first];
    std::size_t b = remap[v.second];
    if (a == npos || b == npos) {
      continue;
    }
    Crossing w;
    w.location = v.location;
    if (a < b) {
      w.first = a;
      w.second = b;
      w.on_first = v.on_first;
      w.on_second = v.on_second;
      w.turn = v.turn;
    }
    else {
      w.first = b;
      w.second = a;
      w.on_first = v.on_second;
      w.on_second = v.on_first;
      w.turn = -v.turn;
    }
    for (std::size_t k : v.containing) {
      if (remap[k] != npos) {
        w.containing.push_back(remap[k]);
      }
    }
    std::sort(w.containing.begin(), w.containing.end());
    out.pair_index_[w.first * m + w.second].push_back(out.crossings_.size());
    out.pair_index_[w.second * m + w.first].push_back(out.crossings_.size());
    out.crossings_.push_back(std::move(w));
  }
  return out;
}

Arrangement Arrangement::induced_by_ids(std::span<const std::string> ids) const
{
  std::vector<std::size_t> subset;
  for (const std::string &id : ids) {
    auto idx = index_of(id);
    if (!idx) {
      throw Error(ErrorCode::UnknownId, "no curve with id '" + id + "'");
    }
    subset.push_back(*idx);
  }
  return induced(subset);
}

int Arrangement::vertex_weight(std::size_t crossing) const
{
  const int w = static_cast<int>(crossings_[crossing].containing.size()) + g_weight_mutation.load();
  return std::max(w, 0);
}

Box Arrangement::bounds() const
{
  Box box = curves_.front()->bounds();
  for (const auto &c : curves_) {
    const Box &b = c->bounds();
    if (b.xmin < box.xmin) {
      box.xmin = b.xmin;
    }
    if (b.ymin < box.ymin) {
      box.ymin = b.ymin;
    }
    if (b.xmax > box.xmax) {
      box.xmax = b.xmax;
    }
    if (b.ymax > box.ymax) {
      box.ymax = b.ymax;
    }
  }
  return box;
}

long WeightProfile::v_at_most(long k) const
{
  long total = 0;
  for (long i = 0; i < static_cast<long>(v.size()) && i <= k; ++i) {
    total += v[i];
  }
  return total;
}

long WeightProfile::v_at_least(long k) const
{
  long total = 0;
  for (long i = std::max(0L, k); i < static_cast<long>(v.size()); ++i) {
    total += v[i];
  }
  return total;
}

long WeightProfile::vertices() const { return std::accumulate(v.begin(), v.end(), 0L); }
long WeightProfile::faces() const { return std::accumulate(f.begin(), f.end(), 0L); }

// ---------------------------------------------------------------------------
// Graph

ArrangementGraph::ArrangementGraph(const Arrangement &arrangement)
    : ArrangementGraph(std::make_shared<const Arrangement>(arrangement))
{
}

ArrangementGraph::ArrangementGraph(std::shared_ptr<const Arrangement> arrangement) : arr_(std::move(arrangement))
{
  build_edges();
  build_rotation();
  build_cycles();
  build_faces();
  assign_weights();
}

void ArrangementGraph::build_edges()
{
  const Arrangement &arr = *arr_;
  const auto &xs = arr.crossings();
  struct Occurrence {
    Position pos;
    std::size_t vertex;
  };
  std::vector<std::vector<Occurrence>> along(arr.n());
  for (std::size_t v = 0; v < xs.size(); ++v) {
    along[xs[v].first].push_back({xs[v].on_first, v});
    along[xs[v].second].push_back({xs[v].on_second, v});
  }
  // Per vertex: out-edge and in-edge on the first and on the second curve.
  rotation_.assign(xs.size(), {npos, npos, npos, npos});
  std::vector<std::array<std::size_t, 4>> incident(xs.size(), {npos, npos, npos, npos});
  curve_edge_begin_.assign(arr.n() + 1, 0);
  for (std::size_t c = 0; c < arr.n(); ++c) {
    curve_edge_begin_[c] = edges_.size();
    auto &occ = along[c];
    std::sort(occ.begin(), occ.end(), [](const Occurrence &a, const Occurrence &b) { return a.pos < b.pos; });
    if (occ.empty()) {
      Edge e;
      e.curve = c;
      e.loop = true;
      edges_.push_back(e);
      continue;
    }
    for (std::size_t k = 0; k < occ.size(); ++k) {
      const Occurrence &a = occ[k];
      const Occurrence &b = occ[(k + 1) % occ.size()];
      Edge e;
      e.curve = c;
      e.from = a.vertex;
      e.to = b.vertex;
      e.start = a.pos;
      e.end = b.pos;
      const std::size_t id = edges_.size();
      const std::size_t side_a = xs[a.vertex].first == c ? 0 : 1;
      const std::size_t side_b = xs[b.vertex].first == c ? 0 : 1;
      incident[a.vertex][2 * side_a] = id;      // out-edge
      incident[b.vertex][2 * side_b + 1] = id;  // in-edge
      edges_.push_back(e);
    }
  }
  curve_edge_begin_[arr.n()] = edges_.size();

  for (std::size_t v = 0; v < xs.size(); ++v) {
    const auto &inc = incident[v];
    const std::size_t a_fwd = 2 * inc[0];
    const std::size_t a_bwd = 2 * inc[1] + 1;
    const std::size_t b_fwd = 2 * inc[2];
    const std::size_t b_bwd = 2 * inc[3] + 1;
    if (xs[v].turn > 0) {
      rotation_[v] = {a_fwd, b_fwd, a_bwd, b_bwd};
    }
    else {
      rotation_[v] = {a_fwd, b_bwd, a_bwd, b_fwd};
    }
  }
}

void ArrangementGraph::build_rotation()
{
  const std::size_t halves = 2 * edges_.size();
  half_origin_.assign(halves, npos);
  slot_.assign(halves, npos);
  for (std::size_t v = 0; v < rotation_.size(); ++v) {
    for (std::size_t s = 0; s < 4; ++s) {
      half_origin_[rotation_[v][s]] = v;
      slot_[rotation_[v][s]] = s;
    }
  }
  next_.assign(halves, npos);
  for (std::size_t h = 0; h < halves; ++h) {
    if (edges_[h / 2].loop) {
      next_[h] = h;
      continue;
    }
    const std::size_t twin = h ^ 1U;
    const std::size_t w = half_origin_[twin];
    next_[h] = rotation_[w][(slot_[twin] + 3) % 4];
  }
}

std::size_t ArrangementGraph::origin(std::size_t half_edge) const { return half_origin_[half_edge]; }

void ArrangementGraph::build_cycles()
{
  const std::size_t halves = next_.size();
  cycle_of_half_.assign(halves, npos);
  for (std::size_t h = 0; h < halves; ++h) {
    if (cycle_of_half_[h] != npos) {
      continue;
    }
    std::vector<std::size_t> cyc;
    std::size_t cur = h;
    do {
      cycle_of_half_[cur] = cycles_.size();
      cyc.push_back(cur);
      cur = next_[cur];
    } while (cur != h);
    cycles_.push_back(std::move(cyc));
  }
}

namespace {

std::size_t find_root(std::vector<std::size_t> &parent, std::size_t x)
{
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

Rat chain_double_area(const std::vector<Point> &pts)
{
  Rat sum = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Point &a = pts[i];
    const Point &b = pts[(i + 1) % pts.size()];
    sum += a.x * b.y - a.y * b.x;
  }
  return sum;
}

}  // namespace

void ArrangementGraph::build_faces()
{
  const Arrangement &arr = *arr_;
  const std::size_t n = arr.n();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (const Crossing &x : arr.crossings()) {
    parent[find_root(parent, x.first)] = find_root(parent, x.second);
  }
  std::map<std::size_t, std::size_t> root_to_component;
  curve_component_.assign(n, 0);
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t r = find_root(parent, c);
    auto it = root_to_component.try_emplace(r, root_to_component.size()).first;
    curve_component_[c] = it->second;
  }
  components_ = root_to_component.size();

  // Outer cycle of each component: the backward half-edge through the
  // lowest-leftmost polygon vertex, whose left side is the exterior.
  std::vector<std::size_t> lowest_curve(components_, npos);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t &best = lowest_curve[curve_component_[c]];
    const Pseudocircle &cc = arr.curve(c);
    if (best == npos || lower_left(cc.vertex(cc.lowest_vertex()), arr.curve(best).vertex(arr.curve(best).lowest_vertex()))) {
      best = c;
    }
  }
  std::vector<std::size_t> outer_cycle(components_);
  std::vector<bool> is_outer(cycles_.size(), false);
  for (std::size_t k = 0; k < components_; ++k) {
    const std::size_t c = lowest_curve[k];
    const Position at{arr.curve(c).lowest_vertex(), Rat(0)};
    const std::size_t begin = curve_edge_begin_[c];
    const std::size_t end = curve_edge_begin_[c + 1];
    std::size_t edge = end - 1;
    for (std::size_t e = begin; e < end; ++e) {
      if (!edges_[e].loop && edges_[e].start < at) {
        edge = e;
      }
    }
    outer_cycle[k] = cycle_of_half_[2 * edge + 1];
    is_outer[outer_cycle[k]] = true;
  }

  faces_.clear();
  faces_.push_back(Face{{}, false, 0, {}});
  std::vector<std::size_t> face_of_cycle(cycles_.size(), npos);
  for (std::size_t cyc = 0; cyc < cycles_.size(); ++cyc) {
    if (!is_outer[cyc]) {
      face_of_cycle[cyc] = faces_.size();
      faces_.push_back(Face{{cyc}, true, 0, {}});
    }
  }

  if (components_ == 1) {
    face_of_cycle[outer_cycle[0]] = 0;
    faces_[0].cycles.push_back(outer_cycle[0]);
  }
  else {
    std::vector<std::vector<Point>> polys(cycles_.size());
    std::vector<Rat> areas(cycles_.size());
    std::vector<std::size_t> cycle_component(cycles_.size());
    for (std::size_t cyc = 0; cyc < cycles_.size(); ++cyc) {
      cycle_component[cyc] = curve_component_[edges_[cycles_[cyc].front() / 2].curve];
      if (!is_outer[cyc]) {
        polys[cyc] = cycle_points(cyc);
        areas[cyc] = abs(chain_double_area(polys[cyc]));
      }
    }
    for (std::size_t k = 0; k < components_; ++k) {
      const Pseudocircle &c = arr.curve(lowest_curve[k]);
      const Point &probe = c.vertex(c.lowest_vertex());
      std::size_t best = npos;
      for (std::size_t cyc = 0; cyc < cycles_.size(); ++cyc) {
        if (is_outer[cyc] || cycle_component[cyc] == k) {
          continue;
        }
        if (best != npos && areas[cyc] >= areas[best]) {
          continue;
        }
        if (point_in_ring(probe, polys[cyc]) == Location::Inside) {
          best = cyc;
        }
      }
      const std::size_t face = best == npos ? 0 : face_of_cycle[best];
      face_of_cycle[outer_cycle[k]] = face;
      faces_[face].cycles.push_back(outer_cycle[k]);
    }
  }

  face_of_half_.assign(next_.size(), npos);
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    std::set<std::size_t> curves;
    for (std::size_t cyc : faces_[f].cycles) {
      for (std::size_t h : cycles_[cyc]) {
        face_of_half_[h] = f;
        curves.insert(edges_[h / 2].curve);
      }
    }
    faces_[f].curves.assign(curves.begin(), curves.end());
  }
}

void ArrangementGraph::assign_weights()
{
  std::vector<bool> known(faces_.size(), false);
  // Edges incident to each face, for the breadth-first sweep.
  std::vector<std::vector<std::size_t>> face_edges(faces_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    face_edges[face_of_half_[2 * e]].push_back(e);
    face_edges[face_of_half_[2 * e + 1]].push_back(e);
  }
  std::deque<std::size_t> queue{0};
  known[0] = true;
  faces_[0].weight = 0;
  while (!queue.empty()) {
    const std::size_t f = queue.front();
    queue.pop_front();
    for (std::size_t e : face_edges[f]) {
      const std::size_t inner = face_of_half_[2 * e];
      const std::size_t outer = face_of_half_[2 * e + 1];
      if (!known[inner]) {
        faces_[inner].weight = faces_[outer].weight + 1;
        known[inner] = true;
        queue.push_back(inner);
      }
      if (!known[outer]) {
        faces_[outer].weight = faces_[inner].weight - 1;
        known[outer] = true;
        queue.push_back(outer);
      }
    }
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    edges_[e].weight = std::min(faces_[face_of_half_[2 * e]].weight, faces_[face_of_half_[2 * e + 1]].weight);
  }
}

std::size_t ArrangementGraph::proper_edge_count() const
{
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [](const Edge &e) { return !e.loop; }));
}

std::vector<Point> ArrangementGraph::half_edge_points(std::size_t half_edge) const
{
  const Edge &e = edges_[half_edge / 2];
  const Pseudocircle &c = arr_->curve(e.curve);
  const std::size_t m = c.size();
  std::vector<Point> pts;
  if (e.loop) {
    pts.assign(c.ring().begin(), c.ring().end());
  }
  else {
    const auto &xs = arr_->crossings();
    pts.push_back(xs[e.from].location);
    std::size_t count = (e.end.segment + m - e.start.segment) % m;
    if (e.end.segment == e.start.segment && e.end.t < e.start.t) {
      count = m;
    }
    for (std::size_t k = 1; k <= count; ++k) {
      pts.push_back(c.vertex(e.start.segment + k));
    }
    pts.push_back(xs[e.to].location);
  }
  if (half_edge % 2 == 1) {
    std::reverse(pts.begin(), pts.end());
  }
  return pts;
}

std::vector<Point> ArrangementGraph::cycle_points(std::size_t c) const
{
  std::vector<Point> pts;
  for (std::size_t h : cycles_[c]) {
    auto piece = half_edge_points(h);
    if (edges_[h / 2].loop) {
      return piece;
    }
    pts.insert(pts.end(), piece.begin(), piece.end() - 1);
  }
  return pts;
}

std::size_t ArrangementGraph::face_edge_count(std::size_t f) const
{
  std::size_t count = 0;
  for (std::size_t cyc : faces_[f].cycles) {
    count += cycles_[cyc].size();
  }
  return count;
}

std::vector<std::size_t> ArrangementGraph::face_vertices(std::size_t f) const
{
  std::set<std::size_t> verts;
  for (std::size_t cyc : faces_[f].cycles) {
    for (std::size_t h : cycles_[cyc]) {
      if (!edges_[h / 2].loop) {
        verts.insert(origin(h));
      }
    }
  }
  return {verts.begin(), verts.end()};
}

Point ArrangementGraph::face_sample(std::size_t f) const
{
  const Face &face = faces_[f];
  if (!face.bounded) {
    const Box box = arr_->bounds();
    return Point{box.xmin - 1, box.ymin - 1};
  }
  const std::size_t h = cycles_[face.cycles.front()].front();
  const auto pts = half_edge_points(h);
  const Point &a = pts[0];
  const Point &b = pts[1];
  const Point mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
  const Rat nx = a.y - b.y;
  const Rat ny = b.x - a.x;

  // Clearance from the midpoint to every segment except the one carrying it.
  const Edge &e = edges_[h / 2];
  const Pseudocircle &own = arr_->curve(e.curve);
  std::size_t own_segment = e.loop ? 0 : e.start.segment;
  if (h % 2 == 1 && !e.loop) {
    own_segment = e.end.segment;
  }
  if (e.loop && h % 2 == 1) {
    own_segment = own.size() - 2;
  }
  std::optional<Rat> best;
  for (std::size_t c = 0; c < arr_->n(); ++c) {
    const Pseudocircle &curve = arr_->curve(c);
    for (std::size_t s = 0; s < curve.size(); ++s) {
      if (&curve == &own && s == own_segment) {
        continue;
      }
      Rat d2 = squared_distance_to_segment(mid, curve.segment_start(s), curve.segment_end(s));
      if (!best || d2 < *best) {
        best = std::move(d2);
      }
    }
  }
  const Rat n2 = nx * nx + ny * ny;
  Rat lambda = 1;
  if (best) {
    const Rat limit = *best / 4;
    while (lambda * lambda * n2 >= limit) {
      lambda /= 2;
    }
  }
  return Point{mid.x + lambda * nx, mid.y + lambda * ny};
}

WeightProfile ArrangementGraph::weight_profile() const
{
  const std::size_t n = arr_->n();
  WeightProfile p;
  p.v.assign(n >= 2 ? n - 1 : 0, 0);
  p.f.assign(n + 1, 0);
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    const int w = arr_->vertex_weight(v);
    if (w >= static_cast<int>(p.v.size())) {
      p.v.resize(static_cast<std::size_t>(w) + 1, 0);
    }
    ++p.v[static_cast<std::size_t>(w)];
  }
  for (const Face &face : faces_) {
    ++p.f[static_cast<std::size_t>(face.weight)];
  }
  return p;
}

WeightProfile weight_profile(const Arrangement &arr) { return ArrangementGraph(arr).weight_profile(); }

bool face_weight_propagation_check(const ArrangementGraph &g)
{
  const Arrangement &arr = g.arrangement();
  for (std::size_t f = 0; f < g.faces().size(); ++f) {
    const Point p = g.face_sample(f);
    int count = 0;
    for (std::size_t c = 0; c < arr.n(); ++c) {
      const Location loc = point_in_curve(p, arr.curve(c));
      if (loc == Location::OnBoundary) {
        return false;
      }
      if (loc == Location::Inside) {
        ++count;
      }
    }
    if (count != g.faces()[f].weight) {
      return false;
    }
  }
  return true;
}

bool euler_relation_holds(const ArrangementGraph &g)
{
  const long v = static_cast<long>(g.vertex_count());
  const long e = static_cast<long>(g.proper_edge_count());
  const long f = static_cast<long>(g.faces().size());
  return v - e + f == 1 + static_cast<long>(g.component_count());
}

}  // namespace pseudoarr
