#include "legbraid/braid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace legbraid {

namespace {

bool is_sep(char c) {
  return c == ',' || std::isspace(static_cast<unsigned char>(c));
}

long long parse_int(std::string_view text, size_t& pos) {
  size_t start = pos;
  while (pos < text.size() &&
         std::isdigit(static_cast<unsigned char>(text[pos])))
    ++pos;
  if (pos == start)
    throw std::invalid_argument("braid word: expected integer at offset " +
                                std::to_string(start));
  long long v = 0;
  for (size_t i = start; i < pos; ++i) {
    v = v * 10 + (text[i] - '0');
    if (v > 1'000'000) throw std::invalid_argument("braid word: integer too large");
  }
  return v;
}

}  // namespace

BraidWord parse_braid_word(std::string_view text,
                           std::optional<int> strands_override) {
  if (strands_override && *strands_override < 1)
    throw std::invalid_argument("strand count must be positive");

  std::vector<int> letters;
  size_t pos = 0;
  bool any_term = false;
  while (pos < text.size() && is_sep(text[pos])) ++pos;
  while (pos < text.size()) {
    if (text[pos] == 's') ++pos;
    long long idx = parse_int(text, pos);
    long long power = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      power = parse_int(text, pos);
      if (power < 1) throw std::invalid_argument("braid word: power must be >= 1");
    }
    if (idx < 1) throw std::invalid_argument("braid word: generator index must be >= 1");
    for (long long r = 0; r < power; ++r) letters.push_back(int(idx));
    any_term = true;
    size_t sep_start = pos;
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    if (pos < text.size() && pos == sep_start)
      throw std::invalid_argument("braid word: expected separator at offset " +
                                  std::to_string(pos));
  }
  if (!any_term) throw std::invalid_argument("braid word: empty input");

  int max_letter = letters.empty()
                       ? 0
                       : *std::max_element(letters.begin(), letters.end());
  BraidWord b;
  b.strands = strands_override ? *strands_override : max_letter + 1;
  if (max_letter >= b.strands)
    throw std::invalid_argument("braid word: generator index " +
                                std::to_string(max_letter) +
                                " needs more than " +
                                std::to_string(b.strands) + " strands");
  b.letters = std::move(letters);
  return b;
}

Permutation::Permutation(int n) : images_(n) {
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<char> seen(images.size(), 0);
  for (int v : images) {
    if (v < 1 || v > int(images.size()) || seen[v - 1])
      throw std::invalid_argument("not a permutation");
    seen[v - 1] = 1;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

int Permutation::inverse_of(int j) const {
  for (int i = 1; i <= size(); ++i)
    if (images_[i - 1] == j) return i;
  throw std::invalid_argument("value out of range");
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= size(); ++i) inv[images_[i - 1] - 1] = i;
  return from_images(std::move(inv));
}

int Permutation::cycle_count() const {
  std::vector<char> seen(images_.size(), 0);
  int cycles = 0;
  for (int i = 1; i <= size(); ++i) {
    if (seen[i - 1]) continue;
    ++cycles;
    for (int j = i; !seen[j - 1]; j = images_[j - 1]) seen[j - 1] = 1;
  }
  return cycles;
}

long long Permutation::inversion_count() const {
  long long count = 0;
  for (int i = 1; i <= size(); ++i)
    for (int j = i + 1; j <= size(); ++j)
      if (images_[i - 1] > images_[j - 1]) ++count;
  return count;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if (images_[i - 1] != i) return false;
  return true;
}

Permutation underlying_permutation(const BraidWord& b, std::optional<int> upto) {
  int k = upto.value_or(b.length());
  if (k < 0 || k > b.length())
    throw std::invalid_argument("underlying_permutation: bad prefix length");
  // pi_k^{-1} = pi_{k-1}^{-1} tau_{i_k}, so the inverse table just swaps
  // two adjacent entries per crossing.
  std::vector<int> inv(b.strands);
  std::iota(inv.begin(), inv.end(), 1);
  for (int c = 0; c < k; ++c) {
    int i = b.letters[c];
    std::swap(inv[i - 1], inv[i]);
  }
  std::vector<int> images(b.strands);
  for (int j = 1; j <= b.strands; ++j) images[inv[j - 1] - 1] = j;
  return Permutation::from_images(std::move(images));
}

DiagramStats diagram_stats(const BraidWord& b) {
  DiagramStats s;
  s.w = b.length();
  s.q = b.strands;
  s.mu = underlying_permutation(b).cycle_count();
  s.tb = s.w - s.q;
  s.chi_star = s.tb;
  std::vector<char> used(b.strands, 0);
  for (int l : b.letters) used[l] = 1;
  s.connected = true;
  for (int i = 1; i <= b.strands - 1; ++i)
    if (!used[i]) s.connected = false;
  return s;
}

BraidWord cyclic_rotate(const BraidWord& b, long long steps) {
  BraidWord r = b;
  int w = b.length();
  if (w == 0) return r;
  long long shift = ((steps % w) + w) % w;
  for (int j = 0; j < w; ++j) r.letters[j] = b.letters[(j + shift) % w];
  return r;
}

BraidWord apply_r3(const BraidWord& b, int pos) {
  if (pos < 1 || pos + 2 > b.length())
    throw std::invalid_argument("apply_r3: position out of range");
  int a = b.letters[pos - 1], m = b.letters[pos], c = b.letters[pos + 1];
  bool site = (a == c) && (m == a + 1 || m + 1 == a);
  if (!site) throw std::invalid_argument("apply_r3: letters do not form a braid relation");
  BraidWord r = b;
  r.letters[pos - 1] = m;
  r.letters[pos] = a;
  r.letters[pos + 1] = m;
  return r;
}

BraidWord reduced_permutation_word(const Permutation& p) {
  int q = p.size();
  if (q == 0) return BraidWord{};
  BraidWord b;
  b.strands = q;
  // arrangement[h-1] = strand currently at height h (strand s must reach
  // height p(s) on the right).
  std::vector<int> arrangement(q);
  std::iota(arrangement.begin(), arrangement.end(), 1);
  Permutation pinv = p.inverse();
  for (int target = 1; target <= q; ++target) {
    int strand = pinv.of(target);
    int h = 1;
    while (arrangement[h - 1] != strand) ++h;
    for (int pos = h - 1; pos >= target; --pos) {
      b.letters.push_back(pos);
      std::swap(arrangement[pos - 1], arrangement[pos]);
    }
  }
  return b;
}

}  // namespace legbraid
