// SPDX-License-Identifier: Apache-2.0
#include "pseudoarr/patterns.hpp"

#include "pseudoarr/constructions.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace pseudoarr {

std::string to_string(const SignatureClass &cls)
{
  return "(" + std::to_string(cls[0]) + "," + std::to_string(cls[1]) + "," + std::to_string(cls[2]) + ")";
}

std::string to_string(TripleType type)
{
  switch (type) {
    case TripleType::Alpha:
      return "alpha";
    case TripleType::Beta:
      return "beta";
    case TripleType::Gamma:
      return "gamma";
    case TripleType::Delta:
      return "delta";
    case TripleType::NotComplete:
      return "not_complete";
  }
  return "unknown";
}

const LabelTable &LabelTable::shipped()
{
  static const LabelTable table{{{{0, 0, 0}, TripleType::Alpha},
                                 {{0, 0, 2}, TripleType::Delta},
                                 {{1, 1, 1}, TripleType::Beta},
                                 {{0, 2, 2}, TripleType::Gamma}},
                                {0, 0, 2}};
  return table;
}

Arrangement induced_subarrangement(const Arrangement &arr, std::span<const std::string> ids)
{
  if (ids.empty()) {
    throw Error(ErrorCode::InvalidArgument, "empty curve subset");
  }
  return arr.induced_by_ids(ids);
}

namespace {

bool has_face_of_weight(const ArrangementGraph &g, int weight)
{
  return std::any_of(g.faces().begin(), g.faces().end(), [&](const Face &f) { return f.weight == weight; });
}

}  // namespace

TripleSignature triple_signature(const Arrangement &arr, std::size_t a, std::size_t b, std::size_t c)
{
  const std::array<std::size_t, 3> idx{a, b, c};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (idx[i] == idx[j] || !arr.crosses(idx[i], idx[j])) {
        throw Error(ErrorCode::IncompleteTriple,
                    "curves '" + arr.curve(idx[i]).id() + "' and '" + arr.curve(idx[j]).id() + "' do not cross");
      }
    }
  }
  TripleSignature sig;
  sig.v.assign(2, 0);
  for (std::size_t k = 0; k < 3; ++k) {
    const std::size_t third = idx[k];
    const std::size_t p = idx[(k + 1) % 3];
    const std::size_t q = idx[(k + 2) % 3];
    int inside = 0;
    for (std::size_t x : arr.crossings_between(p, q)) {
      const auto &cont = arr.crossings()[x].containing;
      inside += std::binary_search(cont.begin(), cont.end(), third) ? 1 : 0;
    }
    sig.pair_containment[k] = inside;
    sig.v[0] += 2 - inside;
    sig.v[1] += inside;
  }
  std::sort(sig.pair_containment.begin(), sig.pair_containment.end());
  const auto sub = std::make_shared<const Arrangement>(arr.induced(idx));
  const ArrangementGraph g(sub);
  for (const Face &f : g.faces()) {
    sig.f3 += f.weight == 3 ? 1 : 0;
    sig.bounded_w0_faces += f.weight == 0 && f.bounded ? 1 : 0;
  }
  return sig;
}

TripleType classify_triple(const TripleSignature &sig, const LabelTable &table)
{
  auto it = table.labels.find(sig.pair_containment);
  if (it == table.labels.end()) {
    throw Error(ErrorCode::UnknownSignature, "signature " + to_string(sig.pair_containment) + " has no label");
  }
  return it->second;
}

bool is_alpha4(const Arrangement &arr, std::size_t a, std::size_t b, std::size_t c, std::size_t d,
               const LabelTable &table)
{
  const std::array<std::size_t, 4> idx{a, b, c, d};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (idx[i] == idx[j] || !arr.crosses(idx[i], idx[j])) {
        return false;
      }
    }
  }
  for (std::size_t skip = 0; skip < 4; ++skip) {
    std::array<std::size_t, 3> t{};
    std::size_t k = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      if (i != skip) {
        t[k++] = idx[i];
      }
    }
    if (classify_triple(triple_signature(arr, t[0], t[1], t[2]), table) != TripleType::Alpha) {
      return false;
    }
  }
  return true;
}

PatternReport pattern_scan(const Arrangement &arr, const LabelTable &table)
{
  PatternReport report;
  report.complete = arr.is_complete();
  const std::size_t n = arr.n();
  // Triple types indexed by (a*n + b)*n + c for a < b < c.
  std::vector<TripleType> types(n * n * n, TripleType::NotComplete);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        ++report.triples;
        const bool complete = arr.crosses(a, b) && arr.crosses(a, c) && arr.crosses(b, c);
        if (!complete) {
          const std::array<std::size_t, 3> idx{a, b, c};
          const ArrangementGraph g(std::make_shared<const Arrangement>(arr.induced(idx)));
          report.helly_premise = report.helly_premise && has_face_of_weight(g, 3);
          continue;
        }
        const TripleSignature sig = triple_signature(arr, a, b, c);
        const TripleType type = classify_triple(sig, table);
        types[(a * n + b) * n + c] = type;
        ++report.complete_triples;
        ++report.type_histogram[type];
        ++report.class_histogram[sig.pair_containment];
        report.alpha_free = report.alpha_free && type != TripleType::Alpha;
        report.beta_free = report.beta_free && sig.pair_containment != table.beta_class;
        report.helly_premise = report.helly_premise && sig.f3 > 0;
      }
    }
  }
  auto type_of = [&](std::size_t a, std::size_t b, std::size_t c) { return types[(a * n + b) * n + c]; };
  for (std::size_t a = 0; a < n && report.alpha4_free; ++a) {
    for (std::size_t b = a + 1; b < n && report.alpha4_free; ++b) {
      for (std::size_t c = b + 1; c < n && report.alpha4_free; ++c) {
        if (type_of(a, b, c) != TripleType::Alpha) {
          continue;
        }
        for (std::size_t d = c + 1; d < n; ++d) {
          if (type_of(a, b, d) == TripleType::Alpha && type_of(a, c, d) == TripleType::Alpha &&
              type_of(b, c, d) == TripleType::Alpha) {
            report.alpha4_free = false;
            break;
          }
        }
      }
    }
  }
  return report;
}

namespace {

Rat random_rat(std::mt19937_64 &rng, long lo, long hi, long denominator)
{
  const auto span = static_cast<std::uint64_t>((hi - lo) * denominator + 1);
  const long k = static_cast<long>(rng() % span);
  return Rat(lo) + ratio(k, denominator);
}

/// Which weight-0 faces of the alpha triple (curves 0..2) the curve with
/// index 3 passes through: {bounded, unbounded}.
std::pair<bool, bool> weight0_faces_hit(const Arrangement &arr, const std::vector<Point> &central)
{
  const ArrangementGraph g(arr);
  bool bounded = false;
  bool unbounded = false;
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    if (g.edges()[e].curve != 3) {
      continue;
    }
    const auto pts = g.half_edge_points(2 * e);
    const Point mid{(pts[0].x + pts[1].x) / 2, (pts[0].y + pts[1].y) / 2};
    bool weight0 = true;
    for (std::size_t c = 0; c < 3 && weight0; ++c) {
      weight0 = point_in_curve(mid, arr.curve(c)) == Location::Outside;
    }
    if (!weight0) {
      continue;
    }
    if (point_in_ring(mid, central) == Location::Inside) {
      bounded = true;
    }
    else {
      unbounded = true;
    }
  }
  return {bounded, unbounded};
}

}  // namespace

BetaResolution resolve_beta(std::uint64_t seed, long candidates)
{
  BetaResolution out;
  out.seed = seed;
  const Arrangement base = alpha_triple();
  const ArrangementGraph bg(base);
  std::vector<Point> central;
  for (std::size_t f = 0; f < bg.faces().size(); ++f) {
    if (bg.faces()[f].bounded && bg.faces()[f].weight == 0) {
      central = bg.cycle_points(bg.faces()[f].cycles.front());
    }
  }
  std::mt19937_64 rng(seed);
  std::optional<std::set<SignatureClass>> necessary;
  for (long i = 0; i < candidates; ++i) {
    ++out.candidates;
    CirclePolygonSpec spec{Point{random_rat(rng, -2, 2, 64), random_rat(rng, -1, 3, 64)},
                           random_rat(rng, 0, 3, 64) + Rat(1, 4), 64, Rat(0)};
    std::vector<Arrangement::CurvePtr> curves = base.curve_ptrs();
    curves.push_back(std::make_shared<const Pseudocircle>(circle_polygon(spec, "g")));
    const ValidationReport rep = Arrangement::check(curves);
    if (!rep.ok() || !rep.arrangement->is_complete()) {
      continue;
    }
    const Arrangement &arr = *rep.arrangement;
    const auto [bounded, unbounded] = weight0_faces_hit(arr, central);
    if (!bounded || !unbounded) {
      continue;
    }
    ++out.qualifying;
    std::set<SignatureClass> seen;
    for (const auto &[x, y] : {std::pair<std::size_t, std::size_t>{0, 1}, {0, 2}, {1, 2}}) {
      const TripleSignature sig = triple_signature(arr, 3, x, y);
      if (sig.pair_containment != SignatureClass{0, 0, 0}) {
        seen.insert(sig.pair_containment);
      }
    }
    for (const auto &cls : seen) {
      ++out.occurrences[cls];
    }
    if (!necessary) {
      necessary = seen;
    }
    else {
      std::set<SignatureClass> keep;
      std::set_intersection(necessary->begin(), necessary->end(), seen.begin(), seen.end(),
                            std::inserter(keep, keep.begin()));
      necessary = std::move(keep);
    }
  }
  if (necessary) {
    out.necessary.assign(necessary->begin(), necessary->end());
    if (out.necessary.size() == 1) {
      out.beta = out.necessary.front();
    }
  }
  return out;
}

}  // namespace pseudoarr
