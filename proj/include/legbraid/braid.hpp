#pragma once

// Positive braid words, their underlying permutations, diagram statistics,
// and word moves.  Crossings are identified positionally: the k-th letter
// (1-based, left to right) is the crossing carrying the label b_k.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace legbraid {

struct BraidWord {
  int strands = 1;           // q >= 1
  std::vector<int> letters;  // generator indices, each in [1, q-1]

  int length() const { return int(letters.size()); }
  bool operator==(const BraidWord&) const = default;
};

// Grammar (bit-exact):
//   word := term (sep term)*
//   term := "s"? INT ("^" INT)?
//   sep  := [,\s]+
// Powers must be >= 1.  Without an override, q = 1 + max letter index.
BraidWord parse_braid_word(std::string_view text,
                           std::optional<int> strands_override = std::nullopt);

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);  // identity
  static Permutation from_images(std::vector<int> images);

  int size() const { return int(images_.size()); }
  int of(int i) const { return images_[i - 1]; }  // 1-based
  int inverse_of(int j) const;
  Permutation inverse() const;
  const std::vector<int>& images() const { return images_; }

  int cycle_count() const;
  long long inversion_count() const;
  bool is_identity() const;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;  // images_[i-1] = image of i, values 1..n
};

// pi_k = tau_{i_k} ... tau_{i_1}; pi_0 = id, pi_w = pi.
Permutation underlying_permutation(const BraidWord& b,
                                   std::optional<int> upto = std::nullopt);

struct DiagramStats {
  int w = 0;
  int q = 0;
  int mu = 0;        // cycles of the underlying permutation = link components
  int tb = 0;        // w - q
  int chi_star = 0;  // equals tb for these fronts
  bool connected = false;

  bool operator==(const DiagramStats&) const = default;
};

DiagramStats diagram_stats(const BraidWord& b);

// Rotates the letter sequence; labels are positional on the new word.
BraidWord cyclic_rotate(const BraidWord& b, long long steps);

// Replaces the triple at pos (1-based) by the other side of the braid
// relation s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}.  Throws if the three
// letters at pos do not form a relation site.
BraidWord apply_r3(const BraidWord& b, int pos);

// Canonical reduced word for the permutation braid of p: for each target
// position t = 1..q, a descending run pulls the strand bound for t up into
// place.  The result has underlying permutation p, length = inversion count,
// each pair of strands crossing at most once, and contains no subword
// s_i s_{i+1} s_i up to commutation of distant letters.
BraidWord reduced_permutation_word(const Permutation& p);

}  // namespace legbraid
