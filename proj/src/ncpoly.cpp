#include "legbraid/ncpoly.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace legbraid {

namespace {

long long normalize_coeff(Ring ring, long long c) {
  if (ring == Ring::Z2) {
    c &= 1;
  }
  return c;
}

void require_same_ring(Ring a, Ring b) {
  if (a != b) throw std::invalid_argument("coefficient ring mismatch");
}

}  // namespace

std::string var_name(VarId v) {
  if (is_generic_var(v)) {
    return "B[" + std::to_string(generic_row(v)) + "," +
           std::to_string(generic_col(v)) + "]";
  }
  return "b" + std::to_string(crossing_index(v));
}

NcPoly NcPoly::constant(Ring ring, long long c) {
  NcPoly p(ring);
  p.add_term({}, c);
  return p;
}

NcPoly NcPoly::variable(Ring ring, VarId v) {
  NcPoly p(ring);
  p.add_term({v}, 1);
  return p;
}

NcPoly NcPoly::monomial(Ring ring, Word w, long long c) {
  NcPoly p(ring);
  p.add_term(w, c);
  return p;
}

bool NcPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() &&
         terms_.begin()->second == 1;
}

long long NcPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void NcPoly::add_term(const Word& w, long long c) {
  c = normalize_coeff(ring_, c);
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second = normalize_coeff(ring_, it->second + c);
    if (it->second == 0) terms_.erase(it);
  }
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  require_same_ring(ring_, o.ring_);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  require_same_ring(ring_, o.ring_);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NcPoly NcPoly::operator-() const {
  NcPoly r(ring_);
  for (const auto& [w, c] : terms_) r.add_term(w, -c);
  return r;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  require_same_ring(a.ring_, b.ring_);
  NcPoly r(a.ring_);
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  }
  return r;
}

std::vector<VarId> NcPoly::variables() const {
  std::set<VarId> seen;
  for (const auto& [w, c] : terms_) {
    (void)c;
    seen.insert(w.begin(), w.end());
  }
  return {seen.begin(), seen.end()};
}

std::string NcPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    long long mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (w.empty()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag);
      for (VarId v : w) out += var_name(v);
    }
  }
  return out;
}

long long nc_evaluate(const NcPoly& x,
                      const std::map<VarId, long long>& assignment) {
  long long total = 0;
  for (const auto& [w, c] : x.terms()) {
    long long prod = c;
    for (VarId v : w) {
      auto it = assignment.find(v);
      if (it == assignment.end()) {
        throw std::invalid_argument("nc_evaluate: unassigned variable " +
                                    var_name(v));
      }
      prod *= it->second;
      if (prod == 0) break;
    }
    total += prod;
  }
  if (x.ring() == Ring::Z2) total &= 1;
  return total;
}

NcPoly nc_substitute(const NcPoly& x, const std::map<VarId, NcPoly>& images) {
  NcPoly r(x.ring());
  for (const auto& [w, c] : x.terms()) {
    NcPoly prod = NcPoly::constant(x.ring(), c);
    for (VarId v : w) {
      auto it = images.find(v);
      prod = it == images.end() ? prod * NcPoly::variable(x.ring(), v)
                                : prod * it->second;
      if (prod.is_zero()) break;
    }
    r += prod;
  }
  return r;
}

namespace {

struct Scanner {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool consume(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  long long integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) throw std::invalid_argument("expected integer in polynomial");
    return std::stoll(s.substr(start, pos - start));
  }
};

}  // namespace

NcPoly parse_nc_poly(const std::string& text, Ring ring) {
  Scanner sc{text};
  NcPoly p(ring);
  if (sc.eof()) throw std::invalid_argument("empty polynomial text");
  bool first = true;
  while (!sc.eof()) {
    long long sign = 1;
    if (sc.consume('-')) {
      sign = -1;
    } else if (sc.consume('+')) {
      if (first) throw std::invalid_argument("unexpected leading +");
    }
    first = false;
    long long coeff = 1;
    bool have_digits = std::isdigit(static_cast<unsigned char>(sc.peek()));
    if (have_digits) coeff = sc.integer();
    Word w;
    while (sc.peek() == 'b' || sc.peek() == 'B') {
      if (sc.consume('b')) {
        w.push_back(var_b(int(sc.integer())));
      } else {
        sc.consume('B');
        if (!sc.consume('[')) throw std::invalid_argument("expected [");
        int i = int(sc.integer());
        if (!sc.consume(',')) throw std::invalid_argument("expected ,");
        int j = int(sc.integer());
        if (!sc.consume(']')) throw std::invalid_argument("expected ]");
        w.push_back(var_B(i, j));
      }
    }
    if (!have_digits && w.empty())
      throw std::invalid_argument("malformed polynomial term");
    p.add_term(w, sign * coeff);
  }
  return p;
}

NcMatrix NcMatrix::identity(int n, Ring ring) {
  NcMatrix m(n, ring);
  for (int i = 1; i <= n; ++i) m.at(i, i) = NcPoly::constant(ring, 1);
  return m;
}

NcMatrix operator*(const NcMatrix& a, const NcMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  require_same_ring(a.ring_, b.ring_);
  NcMatrix r(a.n_, a.ring_);
  for (int i = 1; i <= a.n_; ++i) {
    for (int k = 1; k <= a.n_; ++k) {
      const NcPoly& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 1; j <= a.n_; ++j) {
        const NcPoly& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) += aik * bkj;
      }
    }
  }
  return r;
}

NcMatrix operator+(const NcMatrix& a, const NcMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  require_same_ring(a.ring_, b.ring_);
  NcMatrix r = a;
  for (int i = 1; i <= a.n_; ++i)
    for (int j = 1; j <= a.n_; ++j) r.at(i, j) += b.at(i, j);
  return r;
}

}  // namespace legbraid
