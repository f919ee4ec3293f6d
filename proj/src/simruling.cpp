#include "legbraid/simruling.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "legbraid/ruling.hpp"

namespace legbraid {

namespace {

struct Strand {
  int left = 0, right = 0;
  std::vector<int> crossings;                 // alive, ascending by position
  std::vector<std::pair<int, int>> markers;   // (site, label), ascending
  bool alive = false;
};

void erase_value(std::vector<int>& v, int x) {
  v.erase(std::remove(v.begin(), v.end(), x), v.end());
}

}  // namespace

SimResult construct_simultaneous(const BraidWord& b) {
  int q = b.strands, w = b.length();
  SimResult out;
  out.x = CrossingSet::empty(w);
  out.paths.resize(q);

  // Trace the original strands; owners[k] = the two strands through
  // crossing k.
  std::vector<Strand> strands(q + 1);
  std::vector<std::pair<int, int>> owners(w + 1, {0, 0});
  {
    std::vector<int> at_height(q + 1);
    std::iota(at_height.begin(), at_height.end(), 0);
    for (int i = 1; i <= q; ++i) {
      strands[i].left = i;
      strands[i].alive = true;
    }
    for (int k = 1; k <= w; ++k) {
      int h = b.letters[k - 1];
      int top = at_height[h], bottom = at_height[h + 1];
      owners[k] = {top, bottom};
      strands[top].crossings.push_back(k);
      strands[bottom].crossings.push_back(k);
      std::swap(at_height[h], at_height[h + 1]);
    }
    for (int h = 1; h <= q; ++h) strands[at_height[h]].right = h;
  }

  for (int i = 1; i <= q; ++i) {
    int from = 0, to = 0;
    for (size_t s = 1; s < strands.size(); ++s) {
      if (!strands[s].alive) continue;
      if (strands[s].left == i) from = int(s);
      if (strands[s].right == i) to = int(s);
    }
    if (from == 0 || to == 0)
      throw std::logic_error("simultaneous construction lost an endpoint");

    std::vector<int> dead;          // crossings removed with s_i
    std::vector<std::pair<int, int>> swept;  // markers on s_i

    if (from == to) {
      for (int k : strands[from].crossings) {
        out.paths[i - 1].push_back({k, false});
        dead.push_back(k);
      }
      swept = strands[from].markers;
      strands[from].alive = false;
    } else {
      Strand& p = strands[from];
      Strand& qs = strands[to];
      // First surviving common crossing, by original position.
      int d = 0;
      for (int k : p.crossings) {
        if (std::find(qs.crossings.begin(), qs.crossings.end(), k) !=
            qs.crossings.end()) {
          d = k;
          break;
        }
      }
      if (d == 0)
        throw std::logic_error("distinct start/end strands must intersect");

      out.x.insert(d);
      out.markers[d] = i;

      for (int k : p.crossings) {
        if (k >= d) break;
        out.paths[i - 1].push_back({k, false});
        dead.push_back(k);
      }
      out.paths[i - 1].push_back({d, true});
      dead.push_back(d);
      for (int k : qs.crossings) {
        if (k <= d) continue;
        out.paths[i - 1].push_back({k, false});
        dead.push_back(k);
      }
      std::sort(out.paths[i - 1].begin(), out.paths[i - 1].end(),
                [](const SimPathStep& a, const SimPathStep& bstep) {
                  return a.crossing < bstep.crossing;
                });

      // The surviving strand glues the head of qs to the tail of p; common
      // crossings after d lie on the removed path, not on the survivor.
      Strand glued;
      glued.alive = true;
      glued.left = qs.left;
      glued.right = p.right;
      for (int k : qs.crossings)
        if (k < d) glued.crossings.push_back(k);
      for (int k : p.crossings) {
        if (k <= d) continue;
        if (std::find(dead.begin(), dead.end(), k) == dead.end())
          glued.crossings.push_back(k);
      }
      std::sort(glued.crossings.begin(), glued.crossings.end());

      for (const auto& [site, label] : qs.markers) {
        if (site < d)
          glued.markers.push_back({site, label});
        else
          swept.push_back({site, label});
      }
      glued.markers.push_back({d, i});
      for (const auto& [site, label] : p.markers) {
        if (site > d)
          glued.markers.push_back({site, label});
        else
          swept.push_back({site, label});
      }
      std::sort(glued.markers.begin(), glued.markers.end());

      p.alive = false;
      qs.alive = false;
      strands.push_back(std::move(glued));
      int glued_id = int(strands.size()) - 1;
      for (int k : strands[glued_id].crossings) {
        if (owners[k].first == from || owners[k].first == to)
          owners[k].first = glued_id;
        if (owners[k].second == from || owners[k].second == to)
          owners[k].second = glued_id;
      }
    }

    for (const auto& [site, label] : swept) {
      (void)site;
      out.forest.push_back({label, i});
    }
    for (int k : dead) {
      int a = owners[k].first, bo = owners[k].second;
      for (int sid : {a, bo})
        if (sid > 0 && strands[sid].alive) erase_value(strands[sid].crossings, k);
      owners[k] = {0, 0};
    }
  }

  std::sort(out.forest.begin(), out.forest.end());
  return out;
}

bool verify_simultaneous(const BraidWord& b) {
  SimResult r = construct_simultaneous(b);
  int mu = diagram_stats(b).mu;
  auto theta = is_ruling(b, r.x);
  if (!theta || *theta != mu) return false;
  return is_augmentation(b, r.x).is_augmentation;
}

}  // namespace legbraid
