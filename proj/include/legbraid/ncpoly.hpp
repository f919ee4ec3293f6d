#pragma once

// Exact arithmetic in the free noncommutative algebra over Z_2 and Z on a
// finite alphabet of labeled variables, plus square matrices over it.
// Multiplication concatenates words and never commutes variables.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace legbraid {

enum class Ring { Z2, Z };

// Variables live in one flat namespace.  Crossing labels b_k carry their
// positional index k; generic matrix symbols B[i,j] carry the pair (i,j).
// The id encoding makes b-variables sort before B-variables, b_k by k and
// B[i,j] row-major, which fixes the canonical term order everywhere.
using VarId = std::int32_t;

constexpr VarId var_b(int k) { return k; }
constexpr VarId var_B(int i, int j) {
  return (VarId(1) << 24) | (VarId(i) << 12) | VarId(j);
}
constexpr bool is_generic_var(VarId v) { return (v >> 24) != 0; }
constexpr int generic_row(VarId v) { return (v >> 12) & 0xfff; }
constexpr int generic_col(VarId v) { return v & 0xfff; }
constexpr int crossing_index(VarId v) { return v; }

std::string var_name(VarId v);

// A word of variable ids; the empty word is the constant monomial 1.
using Word = std::vector<VarId>;

// Canonical term order: length first, then lexicographic by variable id.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class NcPoly {
 public:
  using TermMap = std::map<Word, long long, WordLess>;

  explicit NcPoly(Ring ring) : ring_(ring) {}

  static NcPoly zero(Ring ring) { return NcPoly(ring); }
  static NcPoly constant(Ring ring, long long c);
  static NcPoly variable(Ring ring, VarId v);
  static NcPoly monomial(Ring ring, Word w, long long c = 1);

  Ring ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const TermMap& terms() const { return terms_; }
  long long coeff(const Word& w) const;

  void add_term(const Word& w, long long c);

  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly operator-() const;
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { a += b; return a; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { a -= b; return a; }
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);

  bool operator==(const NcPoly& o) const {
    return ring_ == o.ring_ && terms_ == o.terms_;
  }

  std::vector<VarId> variables() const;
  std::string to_string() const;

 private:
  Ring ring_;
  TermMap terms_;
};

inline NcPoly nc_add(const NcPoly& x, const NcPoly& y) { return x + y; }
inline NcPoly nc_mul(const NcPoly& x, const NcPoly& y) { return x * y; }

// Ring homomorphism extending a total assignment on the variables of x.
// Throws if some variable of x has no assigned value.
long long nc_evaluate(const NcPoly& x,
                      const std::map<VarId, long long>& assignment);

// Homomorphism sending each variable to a polynomial (words map to ordered
// products).  Variables without an image are kept as themselves.
NcPoly nc_substitute(const NcPoly& x, const std::map<VarId, NcPoly>& images);

// Inverse of to_string for the canonical textual form.
NcPoly parse_nc_poly(const std::string& text, Ring ring);

class NcMatrix {
 public:
  NcMatrix(int n, Ring ring)
      : n_(n), ring_(ring), entries_(size_t(n) * n, NcPoly(ring)) {}

  static NcMatrix identity(int n, Ring ring);

  int size() const { return n_; }
  Ring ring() const { return ring_; }

  // 1-based access, matching the row/column indices used throughout.
  NcPoly& at(int i, int j) { return entries_[size_t(i - 1) * n_ + (j - 1)]; }
  const NcPoly& at(int i, int j) const {
    return entries_[size_t(i - 1) * n_ + (j - 1)];
  }

  bool operator==(const NcMatrix& o) const {
    return n_ == o.n_ && ring_ == o.ring_ && entries_ == o.entries_;
  }

  friend NcMatrix operator*(const NcMatrix& a, const NcMatrix& b);
  friend NcMatrix operator+(const NcMatrix& a, const NcMatrix& b);

 private:
  int n_;
  Ring ring_;
  std::vector<NcPoly> entries_;
};

inline NcMatrix nc_matrix_mul(const NcMatrix& a, const NcMatrix& b) {
  return a * b;
}

}  // namespace legbraid
