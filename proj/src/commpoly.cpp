#include "legbraid/commpoly.hpp"

namespace legbraid {

Monomial mono_one() { return Monomial{}; }

Monomial mono_var(VarId v, int e) {
  Monomial m;
  if (e > 0) m.exps.push_back({v, e});
  return m;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  size_t i = 0, j = 0;
  while (i < a.exps.size() || j < b.exps.size()) {
    if (j == b.exps.size() ||
        (i < a.exps.size() && a.exps[i].first < b.exps[j].first)) {
      r.exps.push_back(a.exps[i++]);
    } else if (i == a.exps.size() || b.exps[j].first < a.exps[i].first) {
      r.exps.push_back(b.exps[j++]);
    } else {
      r.exps.push_back({a.exps[i].first, a.exps[i].second + b.exps[j].second});
      ++i, ++j;
    }
  }
  return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  for (const auto& [v, e] : a.exps)
    if (b.exponent(v) < e) return false;
  return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
  Monomial r;
  for (const auto& [v, e] : b.exps) {
    int d = e - a.exponent(v);
    if (d < 0) throw std::invalid_argument("monomial division not exact");
    if (d > 0) r.exps.push_back({v, d});
  }
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  size_t i = 0, j = 0;
  while (i < a.exps.size() || j < b.exps.size()) {
    if (j == b.exps.size() ||
        (i < a.exps.size() && a.exps[i].first < b.exps[j].first)) {
      r.exps.push_back(a.exps[i++]);
    } else if (i == a.exps.size() || b.exps[j].first < a.exps[i].first) {
      r.exps.push_back(b.exps[j++]);
    } else {
      r.exps.push_back(
          {a.exps[i].first, std::max(a.exps[i].second, b.exps[j].second)});
      ++i, ++j;
    }
  }
  return r;
}

std::string mono_to_string(const Monomial& m) {
  std::string out;
  for (const auto& [v, e] : m.exps) {
    out += var_name(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

TermOrder::TermOrder(std::vector<VarId> vars_desc) : vars_(std::move(vars_desc)) {
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (!rank_.emplace(vars_[i], int(i)).second)
      throw std::invalid_argument("term order: repeated variable");
  }
}

int TermOrder::rank(VarId v) const {
  auto it = rank_.find(v);
  if (it == rank_.end())
    throw std::invalid_argument("term order: unknown variable " + var_name(v));
  return it->second;
}

bool TermOrder::diagonal_dominant() const {
  int last_diag = -1, first_off = int(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    VarId v = vars_[i];
    if (!is_generic_var(v)) continue;
    if (generic_row(v) == generic_col(v))
      last_diag = std::max(last_diag, int(i));
    else
      first_off = std::min(first_off, int(i));
  }
  return last_diag < first_off;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a == b) return 0;
  // Walk variables from the largest down; the first exponent difference
  // decides.  Plain lexicographic, so degree is irrelevant.
  for (VarId v : vars_) {
    int ea = a.exponent(v), eb = b.exponent(v);
    if (ea != eb) return ea > eb ? 1 : -1;
  }
  return 0;
}

TermOrder default_term_order(int q) {
  std::vector<VarId> vars;
  for (int i = 1; i <= q; ++i) vars.push_back(var_B(i, i));
  for (int i = 1; i <= q; ++i)
    for (int j = 1; j <= q; ++j)
      if (i != j) vars.push_back(var_B(i, j));
  return TermOrder(std::move(vars));
}

namespace {

Word sorted_word(const Word& w) {
  Word s = w;
  std::sort(s.begin(), s.end());
  return s;
}

Monomial word_to_monomial(const Word& w) {
  Monomial m;
  for (VarId v : sorted_word(w)) {
    if (!m.exps.empty() && m.exps.back().first == v)
      ++m.exps.back().second;
    else
      m.exps.push_back({v, 1});
  }
  return m;
}

}  // namespace

QPoly abelianize_q(const NcPoly& x) {
  QPoly r;
  for (const auto& [w, c] : x.terms()) r.add_term(word_to_monomial(w), Rat(c));
  return r;
}

F2Poly abelianize_f2(const NcPoly& x) {
  F2Poly r;
  for (const auto& [w, c] : x.terms())
    r.add_term(word_to_monomial(w), GF2(int(c & 1)));
  return r;
}

}  // namespace legbraid
