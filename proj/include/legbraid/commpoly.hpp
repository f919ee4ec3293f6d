#pragma once

// Commutative multivariate polynomials over Q and over GF(2), shared by the
// abelianization, determinant, and Groebner-basis code.  Monomials are
// sparse exponent vectors over the same variable namespace as the free
// algebra.  Term orders are pure lexicographic extensions of a total order
// on the variables (deliberately not degree-compatible).

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "legbraid/ncpoly.hpp"

namespace legbraid {

using Rat = boost::multiprecision::cpp_rational;

struct GF2 {
  unsigned char v = 0;
  GF2() = default;
  GF2(int x) : v(static_cast<unsigned char>(x & 1)) {}
  friend GF2 operator+(GF2 a, GF2 b) { return GF2(a.v ^ b.v); }
  friend GF2 operator-(GF2 a, GF2 b) { return GF2(a.v ^ b.v); }
  friend GF2 operator*(GF2 a, GF2 b) { return GF2(a.v & b.v); }
  friend GF2 operator/(GF2 a, GF2 b) {
    if (!b.v) throw std::invalid_argument("GF2 division by zero");
    return a;
  }
  GF2 operator-() const { return *this; }
  bool operator==(const GF2&) const = default;
};

template <typename K>
inline bool is_zero_coeff(const K& c) {
  return c == K(0);
}

// Sparse monomial: entries sorted by variable id, exponents > 0.
struct Monomial {
  std::vector<std::pair<VarId, int>> exps;

  bool is_one() const { return exps.empty(); }
  int exponent(VarId v) const {
    for (const auto& [var, e] : exps)
      if (var == v) return e;
    return 0;
  }
  int total_degree() const {
    int d = 0;
    for (const auto& [var, e] : exps) d += e;
    return d;
  }
  bool operator==(const Monomial&) const = default;
  // Structural order for container keys; not the term order.
  bool operator<(const Monomial& o) const { return exps < o.exps; }
};

Monomial mono_one();
Monomial mono_var(VarId v, int e = 1);
Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_div(const Monomial& b, const Monomial& a);  // b / a
Monomial mono_lcm(const Monomial& a, const Monomial& b);
std::string mono_to_string(const Monomial& m);

// Total order on variables (vars[0] is the largest), extended to monomials
// lexicographically.
class TermOrder {
 public:
  explicit TermOrder(std::vector<VarId> vars_desc);

  const std::vector<VarId>& vars() const { return vars_; }
  int rank(VarId v) const;  // 0 = largest

  // True iff every diagonal variable B[i,i] precedes every off-diagonal one.
  bool diagonal_dominant() const;

  // -1, 0, +1 for a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }

 private:
  std::vector<VarId> vars_;
  std::unordered_map<VarId, int> rank_;
};

// Default order for the generic q x q symbols: diagonal variables first
// (B[1,1] largest), then off-diagonals row-major.
TermOrder default_term_order(int q);

template <typename K>
class CommPoly {
 public:
  using TermMap = std::map<Monomial, K>;

  CommPoly() = default;
  static CommPoly zero() { return CommPoly(); }
  static CommPoly constant(const K& c) {
    CommPoly p;
    p.add_term(mono_one(), c);
    return p;
  }
  static CommPoly variable(VarId v) {
    CommPoly p;
    p.add_term(mono_var(v), K(1));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  K coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K(0) : it->second;
  }

  void add_term(const Monomial& m, const K& c) {
    if (is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  CommPoly& operator+=(const CommPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  CommPoly& operator-=(const CommPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  CommPoly operator-() const {
    CommPoly r;
    for (const auto& [m, c] : terms_) r.add_term(m, -c);
    return r;
  }
  friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
  friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b) {
    CommPoly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_)
        r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
  }
  CommPoly scaled(const K& c) const {
    CommPoly r;
    if (is_zero_coeff(c)) return r;
    for (const auto& [m, k] : terms_) r.add_term(m, k * c);
    return r;
  }
  CommPoly term_times(const Monomial& m, const K& c) const {
    CommPoly r;
    if (is_zero_coeff(c)) return r;
    for (const auto& [tm, tc] : terms_) r.add_term(mono_mul(tm, m), tc * c);
    return r;
  }

  bool operator==(const CommPoly& o) const { return terms_ == o.terms_; }

  std::pair<Monomial, K> leading_term(const TermOrder& order) const {
    if (terms_.empty()) throw std::invalid_argument("leading term of zero");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (order.less(best->first, it->first)) best = it;
    return {best->first, best->second};
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) out += " + ";
      first = false;
      out += coeff_to_string(c);
      if (!m.is_one()) out += mono_to_string(m);
    }
    return out;
  }

 private:
  static std::string coeff_to_string(const GF2&) { return "1"; }
  static std::string coeff_to_string(const Rat& c) { return c.str(); }
  TermMap terms_;
};

using QPoly = CommPoly<Rat>;
using F2Poly = CommPoly<GF2>;

// Abelianization onto the matching commutative ring: words become sorted
// monomials, coefficients combine in the target ring.
QPoly abelianize_q(const NcPoly& x);
F2Poly abelianize_f2(const NcPoly& x);

template <typename K>
using CommMatrix = std::vector<std::vector<CommPoly<K>>>;

template <typename K>
CommPoly<K> comm_det(const CommMatrix<K>& a) {
  size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("comm_det: not square");
  if (n == 0) return CommPoly<K>::constant(K(1));
  if (n == 1) return a[0][0];
  CommPoly<K> det;
  for (size_t j = 0; j < n; ++j) {
    if (a[0][j].is_zero()) continue;
    CommMatrix<K> minor(n - 1);
    for (size_t r = 1; r < n; ++r)
      for (size_t c = 0; c < n; ++c)
        if (c != j) minor[r - 1].push_back(a[r][c]);
    CommPoly<K> cof = a[0][j] * comm_det(minor);
    if (j % 2 == 0)
      det += cof;
    else
      det -= cof;
  }
  return det;
}

}  // namespace legbraid
