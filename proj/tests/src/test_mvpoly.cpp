#include "doctest.h"

#include <cstdint>
#include <vector>

#include "rdlab/gf.hpp"
#include "rdlab/mvpoly.hpp"

using namespace rdlab;

TEST_CASE("monomial order is graded lex") {
  Monomial a{{2, 0, 0}};
  Monomial b{{1, 1, 0}};
  Monomial c{{0, 0, 1}};
  CHECK(a.degree() == 2);
  CHECK(c < a);       // lower total degree first
  CHECK(b < a);       // same degree, lex on exponents
  CHECK_FALSE(a < b);
  CHECK((a == Monomial{{2, 0, 0}}));
}

TEST_CASE("constructors and render") {
  auto f5 = Field::make(5, 1);
  CHECK(MultiPoly::zero(f5, 3).is_zero());
  CHECK(MultiPoly::zero(f5, 3).render() == "0");
  CHECK(MultiPoly::constant(f5, 3, 4).render() == "4");
  CHECK(MultiPoly::variable(f5, 3, 1).render() == "1 * x2^1");

  // The documented sample rendering, rebuilt term by term.
  MultiPoly p = MultiPoly::monomial(f5, 3, Monomial{{1, 3, 0}}, 2) +
                MultiPoly::monomial(f5, 3, Monomial{{0, 0, 2}}, 1) +
                MultiPoly::constant(f5, 3, 4);
  CHECK(p.render() == "2 * x1^1 x2^3 + 1 * x3^2 + 4");
  CHECK(p.degree() == 4);
  CHECK(p.term_count() == 3);
  CHECK_FALSE(p.homogeneous());
}

TEST_CASE("arithmetic in characteristic p") {
  auto f2 = Field::make(2, 1);
  MultiPoly x = MultiPoly::variable(f2, 2, 0);
  MultiPoly y = MultiPoly::variable(f2, 2, 1);
  CHECK((x + x).is_zero());
  // Freshman's dream: (x + y)^2 = x^2 + y^2 over F2.
  CHECK((x + y).pow(2) == x.pow(2) + y.pow(2));
  CHECK((x + y) * (x + y) == (x + y).pow(2));

  auto f7 = Field::make(7, 1);
  MultiPoly u = MultiPoly::variable(f7, 1, 0);
  MultiPoly q = (u + MultiPoly::constant(f7, 1, 3)) *
                (u + MultiPoly::constant(f7, 1, 5));
  // (x+3)(x+5) = x^2 + x + 1 mod 7
  CHECK(q == u.pow(2) + u + MultiPoly::constant(f7, 1, 1));
  CHECK((q - q).is_zero());
  CHECK(q.scaled(2) == q + q);
  CHECK((-q) + q == MultiPoly::zero(f7, 1));
}

TEST_CASE("elementary symmetric polynomials") {
  auto f7 = Field::make(7, 1);
  MultiPoly s1 = MultiPoly::elementary_symmetric(f7, 4, 1);
  MultiPoly s2 = MultiPoly::elementary_symmetric(f7, 4, 2);
  MultiPoly s3 = MultiPoly::elementary_symmetric(f7, 4, 3);
  CHECK(s1.term_count() == 4);
  CHECK(s2.term_count() == 6);   // C(4,2)
  CHECK(s3.term_count() == 4);   // C(4,3)
  CHECK(s1.degree() == 1);
  CHECK(s2.degree() == 2);
  CHECK(s3.degree() == 3);
  CHECK(s2.homogeneous());
  // Newton at a concrete point: x = (1,2,3,4).
  std::vector<uint32_t> x{1, 2, 3, 4};
  CHECK(s1.evaluate(x) == (1 + 2 + 3 + 4) % 7);
  CHECK(s2.evaluate(x) == (2 + 3 + 4 + 6 + 8 + 12) % 7);
  CHECK(s3.evaluate(x) == (24 + 12 + 8 + 6) % 7);  // products of 3-subsets
  // Vieta: prod (t - x_i) has coefficients (-1)^j s_j.
}

TEST_CASE("symplectic form polynomial") {
  auto f3 = Field::make(3, 1);
  MultiPoly w = MultiPoly::symplectic_form(f3, 1);  // x1 x2^3 - x2 x1^3
  CHECK(w.nvars() == 2);
  CHECK(w.degree() == 4);
  CHECK(w.homogeneous());
  CHECK(w.term_count() == 2);
  for (uint32_t a = 0; a < 3; ++a)
    for (uint32_t b = 0; b < 3; ++b) {
      uint32_t want = (a * b * b * b + 2 * b * a * a * a) % 3;
      CHECK(w.evaluate({a, b}) == want);
    }
}

TEST_CASE("hermitian norm polynomial") {
  auto f4 = Field::make_quadratic(2, 1);
  MultiPoly h = MultiPoly::hermitian_norm(f4, 2, 2);  // x1^3 + x2^3
  CHECK(h.nvars() == 2);
  CHECK(h.degree() == 3);
  CHECK(h.term_count() == 2);
  // x^(q+1) = x conj(x) is the norm, so every value lies in F_q.
  for (uint32_t a = 0; a < 4; ++a)
    for (uint32_t b = 0; b < 4; ++b)
      CHECK(f4->in_prime_subfield(h.evaluate({a, b})));
}

TEST_CASE("compose and linear substitution") {
  auto f7 = Field::make(7, 1);
  MultiPoly x = MultiPoly::variable(f7, 2, 0);
  MultiPoly y = MultiPoly::variable(f7, 2, 1);
  MultiPoly p = x * y + x;

  // Substitute x -> y, y -> x via compose.
  MultiPoly swapped = p.compose({y, x});
  CHECK(swapped == x * y + y);

  // Same swap as a linear substitution with the permutation matrix.
  CHECK(p.linear_substitute({0, 1, 1, 0}, 2) == swapped);
  // Identity substitution is a no-op.
  CHECK(p.linear_substitute({1, 0, 0, 1}, 2) == p);

  // Rectangular: collapse both variables onto one.
  MultiPoly r = p.linear_substitute_rect({1, 1}, 2, 1);
  MultiPoly t = MultiPoly::variable(f7, 1, 0);
  CHECK(r == t * t + t);
}

TEST_CASE("affine shift expansion matches direct composition") {
  auto f7 = Field::make(7, 1);
  MultiPoly s2 = MultiPoly::elementary_symmetric(f7, 3, 2);
  MultiPoly shifted = s2.affine_shift_expand();
  CHECK(shifted.nvars() == 5);
  // Evaluate at x = (1,2,3), a = 2, b = 5 and compare against substituting
  // directly.
  uint32_t direct = s2.evaluate({(2 * 1 + 5) % 7, (2 * 2 + 5) % 7, (2 * 3 + 5) % 7});
  CHECK(shifted.evaluate({1, 2, 3, 2, 5}) == direct);
  // a = 1, b = 0 restores the original values everywhere.
  for (uint32_t v = 0; v < 7; ++v)
    CHECK(shifted.evaluate({v, 3, 6, 1, 0}) == s2.evaluate({v, 3, 6}));
}

TEST_CASE("partial derivatives") {
  auto f5 = Field::make(5, 1);
  MultiPoly x = MultiPoly::variable(f5, 2, 0);
  MultiPoly y = MultiPoly::variable(f5, 2, 1);
  // d/dx (x^3 y) = 3 x^2 y
  CHECK((x.pow(3) * y).partial_derivative(0) == x.pow(2).scaled(3) * y);
  // d/dy (x^3 y) = x^3
  CHECK((x.pow(3) * y).partial_derivative(1) == x.pow(3));
  // The p-th power has identically zero derivative in characteristic p.
  CHECK(x.pow(5).partial_derivative(0).is_zero());
  CHECK(MultiPoly::constant(f5, 2, 3).partial_derivative(0).is_zero());
}

TEST_CASE("embedding into an extension field") {
  auto f7 = Field::make(7, 1);
  auto f49 = Field::make(7, 2);
  MultiPoly p = MultiPoly::elementary_symmetric(f7, 3, 2) +
                MultiPoly::constant(f7, 3, 4);
  MultiPoly big = p.embed_into(f49);
  CHECK(big.field().size() == 49);
  CHECK(big.term_count() == p.term_count());
  // Prime-subfield points evaluate identically.
  CHECK(big.evaluate({1, 2, 3}) == p.evaluate({1, 2, 3}));
  // A genuinely new point of F49: index 8 lies outside the prime subfield.
  // s2(8,1,0) + 4 = 8*1 + 8*0 + 1*0 + 4.
  CHECK(big.evaluate({8, 1, 0}) == f49->add(f49->mul(8, 1), 4));
}

TEST_CASE("evaluation via pointer overload agrees") {
  auto f9 = Field::make(3, 2);
  MultiPoly h = MultiPoly::hermitian_norm(f9, 3, 3);
  std::vector<uint32_t> pt{2, 5, 7};
  CHECK(h.evaluate(pt) == h.evaluate(pt.data()));
}
