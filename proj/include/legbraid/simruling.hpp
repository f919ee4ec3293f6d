#pragma once

// The simultaneous construction: a crossing set that is a ruling switch set
// with theta = mu and an augmentation at the same time.  For i = 1..q, the
// strand starting at left endpoint i and the strand ending at right endpoint
// i of the current diagram either coincide or intersect; in the latter case
// their first surviving common crossing is spliced and added to X, and the
// resulting path s_i is removed together with the crossings along it,
// leaving a marker at the splice site.  The forest records which later path
// swept up which marker.

#include <map>
#include <utility>
#include <vector>

#include "legbraid/augment.hpp"
#include "legbraid/braid.hpp"

namespace legbraid {

struct SimPathStep {
  int crossing = 0;
  bool turned = false;  // turned-at (the splice) vs passed-through
  bool operator==(const SimPathStep&) const = default;
};

struct SimResult {
  CrossingSet x;
  std::vector<std::vector<SimPathStep>> paths;  // paths[i-1] = s_i
  std::map<int, int> markers;                   // splice site -> marker label
  std::vector<std::pair<int, int>> forest;      // edges i -> j, i < j
};

SimResult construct_simultaneous(const BraidWord& b);

// True iff the constructed set is a ruling with theta = mu and an
// augmentation.
bool verify_simultaneous(const BraidWord& b);

}  // namespace legbraid
