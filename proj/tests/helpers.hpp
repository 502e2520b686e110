// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pseudoarr/arrangement.hpp"

#include <string>
#include <vector>

namespace testutil {

using pseudoarr::Point;
using pseudoarr::Pseudocircle;
using pseudoarr::Rat;

inline Point pt(long x, long y) { return Point{Rat(x), Rat(y)}; }

inline Pseudocircle rect(const std::string &id, long x0, long y0, long x1, long y1)
{
  return Pseudocircle(id, {pt(x0, y0), pt(x1, y0), pt(x1, y1), pt(x0, y1)});
}

}  // namespace testutil
