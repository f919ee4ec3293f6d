#include "legbraid/ruling.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace legbraid {

namespace {

constexpr int kMaxRulingStrands = 8;
constexpr int kMaxRulingLength = 30;

void check_ruling_guards(const BraidWord& b) {
  if (b.strands > kMaxRulingStrands)
    throw std::invalid_argument("ruling sweep guarded at 8 strands");
  if (b.length() > kMaxRulingLength)
    throw std::invalid_argument("ruling sweep guarded at word length 30");
}

// Sweep state: state[s-1] = closing-arc depth paired with braid slot s,
// packed 8 bits per slot for use as a hash key.
using State = std::vector<std::uint8_t>;

State rainbow_state(int q) {
  State s(q);
  for (int k = 1; k <= q; ++k) s[k - 1] = std::uint8_t(q + 1 - k);
  return s;
}

std::uint64_t pack(const State& s) {
  std::uint64_t v = 0;
  for (size_t i = 0; i < s.size(); ++i) v |= std::uint64_t(s[i]) << (8 * i);
  return v;
}

// A switch at slots (p, p+1) keeps the state and is normal exactly when the
// upper chord hangs deeper: depth(p) > depth(p+1).  (The generic normality
// test is in audit_ruling; disjoint eyes cannot happen here because the
// lower eye always contains the upper slot.)
bool switch_allowed(const State& s, int p) { return s[p - 1] > s[p]; }

void apply_pass(State& s, int p) { std::swap(s[p - 1], s[p]); }

}  // namespace

std::uint64_t RulingPolynomial::total() const {
  std::uint64_t t = 0;
  for (const auto& [e, c] : coeffs) {
    (void)e;
    t += c;
  }
  return t;
}

std::string RulingPolynomial::to_string() const {
  if (coeffs.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : coeffs) {
    if (!first) out += " + ";
    first = false;
    if (c != 1 || e == 0) out += std::to_string(c);
    if (e == 1)
      out += "z";
    else if (e != 0)
      out += "z^" + std::to_string(e);
  }
  return out;
}

std::optional<int> is_ruling(const BraidWord& b, const CrossingSet& switches) {
  if (switches.width != b.length())
    throw std::invalid_argument("crossing set length does not match the word");
  check_ruling_guards(b);
  State s = rainbow_state(b.strands);
  for (int k = 1; k <= b.length(); ++k) {
    int p = b.letters[k - 1];
    if (switches.contains(k)) {
      if (!switch_allowed(s, p)) return std::nullopt;
    } else {
      apply_pass(s, p);
    }
  }
  if (s != rainbow_state(b.strands)) return std::nullopt;
  return b.strands - switches.count();
}

namespace {

// reachable[k]: packed states from which the rainbow can be reached using
// crossings k+1..w.
std::vector<std::unordered_set<std::uint64_t>> reachability(const BraidWord& b) {
  int w = b.length(), q = b.strands;
  std::vector<std::unordered_set<std::uint64_t>> reachable(w + 1);
  reachable[w].insert(pack(rainbow_state(q)));

  // Forward-reachable states from the rainbow bound the state universe.
  std::vector<State> universe{rainbow_state(q)};
  std::unordered_set<std::uint64_t> seen{pack(rainbow_state(q))};
  for (size_t head = 0; head < universe.size(); ++head) {
    State cur = universe[head];
    for (int p = 1; p < q; ++p) {
      State next = cur;
      apply_pass(next, p);
      if (seen.insert(pack(next)).second) universe.push_back(next);
    }
  }

  for (int k = w; k >= 1; --k) {
    int p = b.letters[k - 1];
    for (const State& s : universe) {
      State crossed = s;
      apply_pass(crossed, p);
      bool ok = reachable[k].count(pack(crossed)) ||
                (switch_allowed(s, p) && reachable[k].count(pack(s)));
      if (ok) reachable[k - 1].insert(pack(s));
    }
  }
  return reachable;
}

void ruling_dfs(const BraidWord& b,
                const std::vector<std::unordered_set<std::uint64_t>>& reachable,
                int k, State& s, CrossingSet& switches,
                std::vector<std::pair<CrossingSet, int>>& out) {
  if (k > b.length()) {
    out.push_back({switches, b.strands - switches.count()});
    return;
  }
  int p = b.letters[k - 1];
  // Non-switch branch first: lexicographic order of the switch bit vector.
  apply_pass(s, p);
  if (reachable[k].count(pack(s))) ruling_dfs(b, reachable, k + 1, s, switches, out);
  apply_pass(s, p);
  if (switch_allowed(s, p) && reachable[k].count(pack(s))) {
    switches.insert(k);
    ruling_dfs(b, reachable, k + 1, s, switches, out);
    switches.bits &= ~(std::uint64_t(1) << (k - 1));
  }
}

}  // namespace

std::vector<std::pair<CrossingSet, int>> enumerate_rulings(const BraidWord& b) {
  check_ruling_guards(b);
  auto reachable = reachability(b);
  std::vector<std::pair<CrossingSet, int>> out;
  State s = rainbow_state(b.strands);
  CrossingSet switches = CrossingSet::empty(b.length());
  if (reachable[0].count(pack(s)))
    ruling_dfs(b, reachable, 1, s, switches, out);
  return out;
}

RulingPolynomial ruling_polynomial(const BraidWord& b) {
  check_ruling_guards(b);
  int q = b.strands;
  // state -> switch-count histogram.
  std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> dp;
  dp[pack(rainbow_state(q))] = {1};
  State scratch(q);
  for (int k = 1; k <= b.length(); ++k) {
    int p = b.letters[k - 1];
    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> next;
    for (const auto& [packed, hist] : dp) {
      for (int i = 0; i < q; ++i)
        scratch[i] = std::uint8_t((packed >> (8 * i)) & 0xff);
      State crossed = scratch;
      apply_pass(crossed, p);
      auto& pass_hist = next[pack(crossed)];
      if (pass_hist.size() < hist.size()) pass_hist.resize(hist.size());
      for (size_t m = 0; m < hist.size(); ++m) pass_hist[m] += hist[m];
      if (switch_allowed(scratch, p)) {
        auto& sw_hist = next[packed];
        if (sw_hist.size() < hist.size() + 1) sw_hist.resize(hist.size() + 1);
        for (size_t m = 0; m < hist.size(); ++m) sw_hist[m + 1] += hist[m];
      }
    }
    dp = std::move(next);
  }
  RulingPolynomial rp;
  auto it = dp.find(pack(rainbow_state(q)));
  if (it != dp.end()) {
    for (size_t m = 0; m < it->second.size(); ++m)
      if (it->second[m])
        rp.coeffs[1 - q + int(m)] += it->second[m];  // 1 - theta, theta = q - m
  }
  return rp;
}

RulingPolynomial torus2_closed_form(int p) {
  if (p < 1) throw std::invalid_argument("torus2_closed_form: p must be >= 1");
  RulingPolynomial rp;
  for (int k = 0; k <= p / 2; ++k) {
    std::uint64_t binom = 1;
    for (int t = 1; t <= k; ++t) binom = binom * (p - k - t + 1) / t;
    if (binom) rp.coeffs[p - 1 - 2 * k] = binom;
  }
  return rp;
}

bool audit_ruling(const BraidWord& b, const CrossingSet& switches) {
  if (!is_ruling(b, switches)) return false;
  int q = b.strands, w = b.length();

  // Replay the sweep, keeping the whole state history.
  std::vector<State> history{rainbow_state(q)};
  for (int k = 1; k <= w; ++k) {
    State s = history.back();
    if (!switches.contains(k)) apply_pass(s, b.letters[k - 1]);
    history.push_back(std::move(s));
  }

  // Reconstruct the lower arc of each eye (eyes are indexed by closing-arc
  // depth).  Rainbow endpoints mean each eye is bounded by exactly one left
  // and one right cusp.
  std::vector<std::vector<int>> slot_of_eye(q + 1, std::vector<int>(w + 1, 0));
  for (int x = 0; x <= w; ++x) {
    std::vector<char> seen(q + 1, 0);
    for (int s = 1; s <= q; ++s) {
      int d = history[x][s - 1];
      if (d < 1 || d > q || seen[d]) return false;
      seen[d] = 1;
      slot_of_eye[d][x] = s;
    }
  }
  for (int d = 1; d <= q; ++d) {
    if (slot_of_eye[d][0] != q + 1 - d) return false;
    if (slot_of_eye[d][w] != q + 1 - d) return false;
  }

  // Each switch: the two eyes' vertical intervals must not interleave.
  // Positions top to bottom: depth d at d, slot s at q + s.
  for (int k = 1; k <= w; ++k) {
    if (!switches.contains(k)) continue;
    int p = b.letters[k - 1];
    int e1 = history[k - 1][p - 1], e2 = history[k - 1][p];
    if (e1 == e2) return false;
    int top1 = e1, bottom1 = q + p;
    int top2 = e2, bottom2 = q + p + 1;
    bool disjoint = bottom1 < top2 || bottom2 < top1;
    bool nested = (top1 < top2 && bottom2 < bottom1) ||
                  (top2 < top1 && bottom1 < bottom2);
    if (!disjoint && !nested) return false;
  }

  // theta agrees with eyes - switches.
  return is_ruling(b, switches).value() == q - switches.count();
}

}  // namespace legbraid
