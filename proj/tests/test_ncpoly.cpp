#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "legbraid/commpoly.hpp"
#include "legbraid/ncpoly.hpp"

using namespace legbraid;

namespace {

NcPoly rand_poly(Ring ring, std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), wlen(0, 3), var(1, 3),
      coeff(-3, 3);
  NcPoly p(ring);
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Word w;
    int len = wlen(rng);
    for (int i = 0; i < len; ++i) w.push_back(var_b(var(rng)));
    p.add_term(w, ring == Ring::Z2 ? 1 : coeff(rng));
  }
  return p;
}

std::map<VarId, long long> rand_assignment(Ring ring, std::mt19937& rng) {
  std::uniform_int_distribution<int> val(ring == Ring::Z2 ? 0 : -2,
                                         ring == Ring::Z2 ? 1 : 2);
  std::map<VarId, long long> a;
  for (int k = 1; k <= 3; ++k) a[var_b(k)] = val(rng);
  return a;
}

}  // namespace

TEST_CASE("characteristic two and noncommutativity") {
  NcPoly one_plus_b1 = parse_nc_poly("1 + b1", Ring::Z2);
  CHECK(one_plus_b1 * one_plus_b1 == parse_nc_poly("1 + b1b1", Ring::Z2));

  NcPoly b1 = NcPoly::variable(Ring::Z2, var_b(1));
  NcPoly b2 = NcPoly::variable(Ring::Z2, var_b(2));
  CHECK(b1 * b2 == parse_nc_poly("b1b2", Ring::Z2));
  CHECK(b2 * b1 == parse_nc_poly("b2b1", Ring::Z2));
  CHECK_FALSE(b1 * b2 == b2 * b1);

  NcPoly lhs = parse_nc_poly("1 - B[1,1]", Ring::Z) *
               parse_nc_poly("1 + B[1,1]", Ring::Z);
  CHECK(lhs == parse_nc_poly("1 - B[1,1]B[1,1]", Ring::Z));
}

TEST_CASE("ring mismatch is an error") {
  NcPoly a(Ring::Z2), b(Ring::Z);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("evaluation") {
  NcPoly p = parse_nc_poly("b1 + b3 + b1b2b3", Ring::Z2);
  CHECK(nc_evaluate(p, {{var_b(1), 1}, {var_b(2), 0}, {var_b(3), 0}}) == 1);
  CHECK(nc_evaluate(p, {{var_b(1), 1}, {var_b(2), 0}, {var_b(3), 1}}) == 0);
  CHECK(nc_evaluate(NcPoly::constant(Ring::Z2, 1), {}) == 1);
  CHECK_THROWS_AS(nc_evaluate(p, {{var_b(1), 1}}), std::invalid_argument);
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(17);
  for (Ring ring : {Ring::Z2, Ring::Z}) {
    for (int trial = 0; trial < 200; ++trial) {
      NcPoly x = rand_poly(ring, rng), y = rand_poly(ring, rng);
      auto a = rand_assignment(ring, rng);
      long long ev_prod = nc_evaluate(x * y, a);
      long long prod_ev = nc_evaluate(x, a) * nc_evaluate(y, a);
      long long ev_sum = nc_evaluate(x + y, a);
      long long sum_ev = nc_evaluate(x, a) + nc_evaluate(y, a);
      if (ring == Ring::Z2) {
        prod_ev &= 1;
        sum_ev &= 1;
      }
      CHECK(ev_prod == prod_ev);
      CHECK(ev_sum == sum_ev);
    }
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(23);
  for (Ring ring : {Ring::Z2, Ring::Z}) {
    for (int trial = 0; trial < 100; ++trial) {
      NcPoly a = rand_poly(ring, rng), b = rand_poly(ring, rng),
             c = rand_poly(ring, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a + b == b + a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) * c == a * c + b * c);
      CHECK(a - a == NcPoly::zero(ring));
    }
  }
}

TEST_CASE("matrix multiplication") {
  NcMatrix a(2, Ring::Z2);
  a.at(1, 1) = parse_nc_poly("b1", Ring::Z2);
  a.at(1, 2) = parse_nc_poly("1", Ring::Z2);
  a.at(2, 1) = parse_nc_poly("1", Ring::Z2);
  NcMatrix b(2, Ring::Z2);
  b.at(1, 1) = parse_nc_poly("b2", Ring::Z2);
  b.at(1, 2) = parse_nc_poly("1", Ring::Z2);
  b.at(2, 1) = parse_nc_poly("1", Ring::Z2);

  NcMatrix prod = nc_matrix_mul(a, b);
  CHECK(prod.at(1, 1) == parse_nc_poly("1 + b1b2", Ring::Z2));
  CHECK(prod.at(1, 2) == parse_nc_poly("b1", Ring::Z2));
  CHECK(prod.at(2, 1) == parse_nc_poly("b2", Ring::Z2));
  CHECK(prod.at(2, 2) == parse_nc_poly("1", Ring::Z2));

  NcMatrix id = NcMatrix::identity(2, Ring::Z2);
  CHECK(a * id == a);
  CHECK(id * a == a);
}

TEST_CASE("abelianization") {
  NcPoly x2 = parse_nc_poly("b1b2 + b2b1", Ring::Z2);
  CHECK(abelianize_f2(x2).is_zero());

  NcPoly xz = parse_nc_poly("b1b2 + b2b1", Ring::Z);
  QPoly expected;
  expected.add_term(mono_mul(mono_var(var_b(1)), mono_var(var_b(2))), Rat(2));
  CHECK(abelianize_q(xz) == expected);

  NcPoly sorted = parse_nc_poly("1 + b1b2b3", Ring::Z);
  QPoly img = abelianize_q(sorted);
  CHECK(img.terms().size() == 2);
}

TEST_CASE("abelianization is a ring homomorphism") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    NcPoly x = rand_poly(Ring::Z, rng), y = rand_poly(Ring::Z, rng);
    CHECK(abelianize_q(x * y) == abelianize_q(x) * abelianize_q(y));
    CHECK(abelianize_q(x + y) == abelianize_q(x) + abelianize_q(y));
    NcPoly x2 = rand_poly(Ring::Z2, rng), y2 = rand_poly(Ring::Z2, rng);
    CHECK(abelianize_f2(x2 * y2) == abelianize_f2(x2) * abelianize_f2(y2));
  }
}

TEST_CASE("determinants of commutative matrices") {
  // det of the abelianized trefoil path matrix over GF(2), expanded by hand:
  // (b1+b3+b1b2b3) b2 + (1+b1b2)(1+b2b3) = 1.
  F2Poly b1 = F2Poly::variable(var_b(1));
  F2Poly b2 = F2Poly::variable(var_b(2));
  F2Poly b3 = F2Poly::variable(var_b(3));
  F2Poly one = F2Poly::constant(GF2(1));
  CommMatrix<GF2> m(2, std::vector<F2Poly>(2));
  m[0][0] = b1 + b3 + b1 * b2 * b3;
  m[0][1] = one + b1 * b2;
  m[1][0] = one + b2 * b3;
  m[1][1] = b2;
  CHECK(comm_det(m) == one);

  CommMatrix<Rat> id(3, std::vector<QPoly>(3));
  for (int i = 0; i < 3; ++i) id[i][i] = QPoly::constant(Rat(1));
  CHECK(comm_det(id) == QPoly::constant(Rat(1)));

  CommMatrix<Rat> generic(2, std::vector<QPoly>(2));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      generic[i][j] = QPoly::variable(var_B(i + 1, j + 1));
  QPoly det = comm_det(generic);
  QPoly expected = QPoly::variable(var_B(1, 1)) * QPoly::variable(var_B(2, 2)) -
                   QPoly::variable(var_B(1, 2)) * QPoly::variable(var_B(2, 1));
  CHECK(det == expected);
}

TEST_CASE("serialization round-trips") {
  std::mt19937 rng(31);
  for (Ring ring : {Ring::Z2, Ring::Z}) {
    for (int trial = 0; trial < 300; ++trial) {
      NcPoly p = rand_poly(ring, rng);
      if (p.is_zero()) continue;
      std::string text = p.to_string();
      CHECK(parse_nc_poly(text, ring) == p);
      CHECK(parse_nc_poly(text, ring).to_string() == text);
    }
  }
  NcPoly generic = parse_nc_poly("1 + 2B[2,1]B[1,2] - 3b1", Ring::Z);
  CHECK(generic.to_string() == "1 - 3b1 + 2B[2,1]B[1,2]");
}

TEST_CASE("canonical term order sorts by length then variable ids") {
  NcPoly p = parse_nc_poly("b1b2b3 + b2 + 1 + b1b2", Ring::Z2);
  CHECK(p.to_string() == "1 + b2 + b1b2 + b1b2b3");
}
