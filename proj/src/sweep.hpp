// SPDX-License-Identifier: Apache-2.0
#pragma once

// Sort-and-sweep over axis-aligned boxes. Reports every pair whose closed
// boxes overlap; callers still run the exact predicate on each pair.

#include "pseudoarr/predicates.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace pseudoarr::detail {

inline std::vector<std::size_t> order_by_xmin(const std::vector<Box> &boxes)
{
  std::vector<std::size_t> order(boxes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const int c = cmp(boxes[a].xmin, boxes[b].xmin);
    return c != 0 ? c < 0 : a < b;
  });
  return order;
}

/// Calls f(i, j) for i < j with overlapping boxes within one set.
template <class F>
void overlapping_pairs(const std::vector<Box> &boxes, F &&f)
{
  const auto order = order_by_xmin(boxes);
  std::vector<std::size_t> active;
  for (std::size_t idx : order) {
    const Box &b = boxes[idx];
    std::erase_if(active, [&](std::size_t a) { return boxes[a].xmax < b.xmin; });
    for (std::size_t a : active) {
      if (boxes[a].overlaps(b)) {
        f(std::min(a, idx), std::max(a, idx));
      }
    }
    active.push_back(idx);
  }
}

/// Calls f(i, j) for every i in `left`, j in `right` with overlapping boxes.
template <class F>
void overlapping_pairs(const std::vector<Box> &left, const std::vector<Box> &right, F &&f)
{
  struct Item {
    const Box *box;
    std::size_t index;
    bool is_left;
  };
  std::vector<Item> items;
  items.reserve(left.size() + right.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    items.push_back({&left[i], i, true});
  }
  for (std::size_t j = 0; j < right.size(); ++j) {
    items.push_back({&right[j], j, false});
  }
  std::sort(items.begin(), items.end(), [](const Item &a, const Item &b) {
    const int c = cmp(a.box->xmin, b.box->xmin);
    if (c != 0) {
      return c < 0;
    }
    if (a.is_left != b.is_left) {
      return a.is_left;
    }
    return a.index < b.index;
  });
  std::vector<const Item *> active_left;
  std::vector<const Item *> active_right;
  for (const Item &it : items) {
    auto &own = it.is_left ? active_left : active_right;
    auto &other = it.is_left ? active_right : active_left;
    std::erase_if(other, [&](const Item *a) { return a->box->xmax < it.box->xmin; });
    for (const Item *a : other) {
      if (a->box->overlaps(*it.box)) {
        if (it.is_left) {
          f(it.index, a->index);
        }
        else {
          f(a->index, it.index);
        }
      }
    }
    own.push_back(&it);
  }
}

}  // namespace pseudoarr::detail
