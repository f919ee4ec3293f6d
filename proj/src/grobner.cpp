#include "legbraid/grobner.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "legbraid/dga.hpp"

namespace legbraid {

template <typename K>
CommPoly<K> normal_form(const CommPoly<K>& f,
                        const std::vector<CommPoly<K>>& basis,
                        const TermOrder& order,
                        std::vector<CommPoly<K>>* cofactors) {
  if (cofactors) cofactors->assign(basis.size(), CommPoly<K>::zero());
  CommPoly<K> work = f, remainder;
  while (!work.is_zero()) {
    auto [lm, lc] = work.leading_term(order);
    bool reduced = false;
    for (size_t g = 0; g < basis.size(); ++g) {
      if (basis[g].is_zero()) continue;
      auto [glm, glc] = basis[g].leading_term(order);
      if (!mono_divides(glm, lm)) continue;
      Monomial quot = mono_div(lm, glm);
      K factor = lc / glc;
      work -= basis[g].term_times(quot, factor);
      if (cofactors) {
        CommPoly<K> t;
        t.add_term(quot, factor);
        (*cofactors)[g] += t;
      }
      reduced = true;
      break;
    }
    if (!reduced) {
      CommPoly<K> t;
      t.add_term(lm, lc);
      remainder += t;
      work -= t;
    }
  }
  return remainder;
}

namespace {

template <typename K>
CommPoly<K> make_monic(const CommPoly<K>& f, const TermOrder& order) {
  auto [lm, lc] = f.leading_term(order);
  (void)lm;
  return f.scaled(K(1) / lc);
}

template <typename K>
CommPoly<K> s_polynomial(const CommPoly<K>& f, const CommPoly<K>& g,
                         const TermOrder& order) {
  auto [fm, fc] = f.leading_term(order);
  auto [gm, gc] = g.leading_term(order);
  Monomial l = mono_lcm(fm, gm);
  return f.term_times(mono_div(l, fm), K(1) / fc) -
         g.term_times(mono_div(l, gm), K(1) / gc);
}

}  // namespace

template <typename K>
std::vector<CommPoly<K>> buchberger(std::vector<CommPoly<K>> gens,
                                    const TermOrder& order) {
  std::vector<CommPoly<K>> basis;
  for (auto& g : gens)
    if (!g.is_zero()) basis.push_back(make_monic(g, order));

  // Pair queue with the normal selection strategy: smallest lcm first.
  auto lcm_of = [&](size_t a, size_t b) {
    return mono_lcm(basis[a].leading_term(order).first,
                    basis[b].leading_term(order).first);
  };
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) pairs.push_back({i, j});

  while (!pairs.empty()) {
    size_t best = 0;
    Monomial best_lcm = lcm_of(pairs[0].first, pairs[0].second);
    for (size_t p = 1; p < pairs.size(); ++p) {
      Monomial l = lcm_of(pairs[p].first, pairs[p].second);
      if (order.less(l, best_lcm)) {
        best = p;
        best_lcm = l;
      }
    }
    auto [a, b] = pairs[best];
    pairs.erase(pairs.begin() + best);

    // Coprime leading monomials reduce to zero automatically.
    Monomial am = basis[a].leading_term(order).first;
    Monomial bm = basis[b].leading_term(order).first;
    if (mono_mul(am, bm) == best_lcm) continue;

    CommPoly<K> rem = normal_form(s_polynomial(basis[a], basis[b], order),
                                  basis, order);
    if (rem.is_zero()) continue;
    basis.push_back(make_monic(rem, order));
    for (size_t i = 0; i + 1 < basis.size(); ++i)
      pairs.push_back({i, basis.size() - 1});
  }

  // Inter-reduce to the unique reduced basis.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      std::vector<CommPoly<K>> others;
      for (size_t j = 0; j < basis.size(); ++j)
        if (j != i) others.push_back(basis[j]);
      CommPoly<K> reduced = normal_form(basis[i], others, order);
      if (!(reduced == basis[i])) {
        changed = true;
        if (reduced.is_zero()) {
          basis.erase(basis.begin() + i);
          --i;
        } else {
          basis[i] = make_monic(reduced, order);
        }
      }
    }
  }

  std::sort(basis.begin(), basis.end(),
            [&](const CommPoly<K>& x, const CommPoly<K>& y) {
              return order.less(y.leading_term(order).first,
                                x.leading_term(order).first);
            });
  return basis;
}

namespace {

template <typename K>
CommPoly<K> from_ncpoly(const NcPoly& p);

template <>
CommPoly<Rat> from_ncpoly<Rat>(const NcPoly& p) {
  return abelianize_q(p);
}

template <>
CommPoly<GF2> from_ncpoly<GF2>(const NcPoly& p) {
  return abelianize_f2(p);
}

}  // namespace

template <typename K>
CommPoly<K> corner_minor_generator(int n) {
  CommMatrix<K> m(n, std::vector<CommPoly<K>>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      m[i - 1][j - 1] = CommPoly<K>::variable(var_B(i, j));
  CommPoly<K> det = comm_det(m);
  int sign = n % 2 == 0 ? 1 : -1;
  return det - CommPoly<K>::constant(K(sign));
}

template <typename K>
CommPoly<K> diagonal_c_generator(int n, int q) {
  Ring ring = std::is_same_v<K, GF2> ? Ring::Z2 : Ring::Z;
  NcPoly c = polynomial_C(n, n, q, ring);
  return CommPoly<K>::constant(K(1)) + from_ncpoly<K>(c);
}

TermOrder random_diagonal_dominant_order(int q, std::mt19937& rng) {
  std::vector<VarId> diag, off;
  for (int i = 1; i <= q; ++i) diag.push_back(var_B(i, i));
  for (int i = 1; i <= q; ++i)
    for (int j = 1; j <= q; ++j)
      if (i != j) off.push_back(var_B(i, j));
  std::shuffle(diag.begin(), diag.end(), rng);
  std::shuffle(off.begin(), off.end(), rng);
  diag.insert(diag.end(), off.begin(), off.end());
  return TermOrder(std::move(diag));
}

namespace {

void check_verify_guard(int q, bool allow_q4) {
  int cap = allow_q4 ? 4 : 3;
  if (q < 1 || q > cap)
    throw std::invalid_argument("Groebner verification guarded at q <= " +
                                std::to_string(cap));
}

template <typename K>
bool ideal_theorem_impl(int q, const TermOrder& order) {
  std::vector<CommPoly<K>> minors, diags;
  for (int n = 1; n <= q; ++n) {
    minors.push_back(corner_minor_generator<K>(n));
    diags.push_back(diagonal_c_generator<K>(n, q));
  }
  auto gb_minors = buchberger(minors, order);
  auto gb_diags = buchberger(diags, order);
  for (int n = 0; n < q; ++n) {
    if (!normal_form(minors[n], gb_diags, order).is_zero()) return false;
    if (!normal_form(diags[n], gb_minors, order).is_zero()) return false;
  }
  return true;
}

template <typename K>
bool grobner_theorem_impl(int q, const TermOrder& order) {
  std::vector<CommPoly<K>> minors, expected;
  for (int n = 1; n <= q; ++n) {
    minors.push_back(corner_minor_generator<K>(n));
    expected.push_back(diagonal_c_generator<K>(n, q));
  }
  auto gb = buchberger(minors, order);
  if (gb.size() != size_t(q)) return false;
  // The reduced basis is unique, so compare as sets.
  for (const auto& e : expected) {
    bool found = false;
    for (const auto& g : gb)
      if (g == e) found = true;
    if (!found) return false;
  }
  return true;
}

}  // namespace

bool verify_ideal_theorem(int q, const TermOrder& order, CoeffField field,
                          bool allow_q4) {
  check_verify_guard(q, allow_q4);
  if (!order.diagonal_dominant())
    throw std::invalid_argument("term order is not diagonal-dominant");
  return field == CoeffField::Q ? ideal_theorem_impl<Rat>(q, order)
                                : ideal_theorem_impl<GF2>(q, order);
}

bool verify_grobner_theorem(int q, const TermOrder& order, CoeffField field) {
  check_verify_guard(q, false);
  if (!order.diagonal_dominant())
    throw std::invalid_argument("term order is not diagonal-dominant");
  if (!verify_initial_term_structure(q, order)) return false;
  return field == CoeffField::Q ? grobner_theorem_impl<Rat>(q, order)
                                : grobner_theorem_impl<GF2>(q, order);
}

bool verify_initial_term_structure(int q, const TermOrder& order) {
  if (q < 1 || q > 5)
    throw std::invalid_argument("initial-term check guarded at q <= 5");
  for (int n = 1; n <= q; ++n) {
    QPoly g = diagonal_c_generator<Rat>(n, q);
    auto [lm, lc] = g.leading_term(order);
    if (!(lm == mono_var(var_B(n, n))) || lc != Rat(1)) return false;
    // No term besides the leading one may contain any diagonal variable.
    for (const auto& [m, c] : g.terms()) {
      (void)c;
      if (m == lm) continue;
      for (int d = 1; d <= q; ++d)
        if (m.exponent(var_B(d, d)) > 0) return false;
    }
  }
  return true;
}

template QPoly normal_form(const QPoly&, const std::vector<QPoly>&,
                           const TermOrder&, std::vector<QPoly>*);
template F2Poly normal_form(const F2Poly&, const std::vector<F2Poly>&,
                            const TermOrder&, std::vector<F2Poly>*);
template std::vector<QPoly> buchberger(std::vector<QPoly>, const TermOrder&);
template std::vector<F2Poly> buchberger(std::vector<F2Poly>, const TermOrder&);
template QPoly corner_minor_generator<Rat>(int);
template F2Poly corner_minor_generator<GF2>(int);
template QPoly diagonal_c_generator<Rat>(int, int);
template F2Poly diagonal_c_generator<GF2>(int, int);

}  // namespace legbraid
