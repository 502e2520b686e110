// SPDX-License-Identifier: Apache-2.0
#pragma once

// Generators for the arrangement families used throughout the library, plus
// the two transformations: spanning-curve insertion and inversion.

#include "pseudoarr/arrangement.hpp"

#include <map>
#include <string>
#include <vector>

namespace pseudoarr {

struct CirclePolygonSpec {
  Point center;
  Rat radius = 1;
  std::size_t resolution = 64;
  /// Rotation of the vertex set, as a fraction of a full turn.
  Rat phase = 0;
};

/// Simple CCW polygon whose vertices lie exactly on the circle, placed with
/// the rational parameterization ((1-t^2)/(1+t^2), 2t/(1+t^2)).
Pseudocircle circle_polygon(const CirclePolygonSpec &spec, std::string id);

Arrangement chain(std::size_t n, std::size_t resolution = 64);
/// Equal circles with centers (i*spacing, 0). The default radius is
/// m*spacing/2; the default resolution grows with m.
Arrangement collinear_delta(std::size_t m, const Rat &spacing = 1, const Rat &radius = 0, std::size_t resolution = 0);
Arrangement sharp_4n6(std::size_t n);
Arrangement alpha_triple(std::size_t resolution = 64);
Arrangement venn_triple(std::size_t resolution = 64);
/// The triple whose pair containment counts are (0,2,2) and whose common
/// interior is nonempty.
Arrangement concentric_type_triple(std::size_t resolution = 64);
/// n unit circles with centers on a circle of radius 1/5 around the origin.
Arrangement concentric_family(std::size_t n, std::size_t resolution = 96);
Arrangement alpha4();
Arrangement max_complete(std::size_t n);
Arrangement hex_packing(std::size_t rows, const Rat &epsilon = Rat(1, 20), std::size_t resolution = 48);
Arrangement unit_circle_sharp(std::size_t n);

/// Adds a curve crossing every curve on the boundary of the weight-0 face
/// twice, in new weight-0 vertices, without enclosing any old vertex.
Arrangement insert_spanning_curve(const Arrangement &arr, std::size_t face, std::string id = {});

/// Inside-out transform through a point of a weight-n face.
Arrangement invert(const Arrangement &arr, std::size_t resolution = 256);

struct FamilyInfo {
  std::string name;
  std::string parameters;
  std::string summary;
};

const std::vector<FamilyInfo> &families();

/// Builds a named family; parameters are given as text ("n", "m", "rows",
/// "epsilon", "resolution"). Throws Error(UnknownFamily) or
/// Error(InvalidArgument).
Arrangement construct_family(const std::string &name, const std::map<std::string, std::string> &params);

/// Profile entries the named family is built to achieve, keyed "v_k" or
/// "f_k". Empty for families without a closed formula.
std::vector<std::pair<std::string, long>> family_expectations(const std::string &name,
                                                              const std::map<std::string, std::string> &params);

}  // namespace pseudoarr
