// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace pseudoarr {

/// Exact rational number in lowest terms with positive denominator.
using Rat = mpq_class;

struct Point {
  Rat x;
  Rat y;

  friend bool operator==(const Point &a, const Point &b) { return a.x == b.x && a.y == b.y; }
};

/// Lexicographic (y, x) order; the minimum of a point set is a hull vertex.
inline bool lower_left(const Point &a, const Point &b)
{
  if (a.y != b.y) {
    return a.y < b.y;
  }
  return a.x < b.x;
}

inline int sign(const Rat &v) { return sgn(v); }

/// p/q in lowest terms. GMP requires canonical operands, and the two-argument
/// mpq constructor does not reduce.
inline Rat ratio(long p, long q)
{
  Rat r(p, q);
  r.canonicalize();
  return r;
}

inline Rat cross(const Rat &ax, const Rat &ay, const Rat &bx, const Rat &by) { return ax * by - ay * bx; }

inline Rat squared_distance(const Point &a, const Point &b)
{
  Rat dx = a.x - b.x;
  Rat dy = a.y - b.y;
  return dx * dx + dy * dy;
}

/// Largest rational of the form m / 2^bits not exceeding sqrt(value).
Rat sqrt_floor(const Rat &value, unsigned bits = 32);

/// Canonical text form: "p" for integers, otherwise "p/q".
std::string to_string(const Rat &value);

/// Strict parser for "p" or "p/q" with decimal integers; rejects floats,
/// whitespace and zero denominators.
std::optional<Rat> parse_rational(std::string_view text);

/// Exact rational value of a finite double rounded onto the grid 2^-bits.
Rat from_double(double value, unsigned bits = 30);

}  // namespace pseudoarr
