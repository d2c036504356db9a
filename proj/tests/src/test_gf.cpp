#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rdlab/gf.hpp"

using namespace rdlab;

TEST_CASE("primality helper") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(7));
  CHECK(is_prime(1009));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(4));
  CHECK_FALSE(is_prime(49));
  CHECK_FALSE(is_prime(1001));  // 7 * 11 * 13
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(2, 30), std::invalid_argument);  // over budget
  CHECK_THROWS_AS(Field::make_quadratic(5, 0), std::invalid_argument);
}

TEST_CASE("frozen moduli, little-endian with leading 1") {
  // Lex-least means lex on (c_0, ..., c_{r-1}) with c_0 most significant.
  CHECK(Field::make(2, 2)->modulus() == std::vector<uint32_t>({1, 1, 1}));
  CHECK(Field::make(2, 3)->modulus() == std::vector<uint32_t>({1, 0, 1, 1}));
  CHECK(Field::make(3, 2)->modulus() == std::vector<uint32_t>({1, 0, 1}));
  CHECK(Field::make(5, 2)->modulus() == std::vector<uint32_t>({1, 1, 1}));
  CHECK(Field::make(7, 2)->modulus() == std::vector<uint32_t>({1, 0, 1}));
  // Prime fields carry no modulus.
  CHECK(Field::make(7, 1)->modulus().empty());
}

TEST_CASE("field sizes and descriptors") {
  auto f9 = Field::make(3, 2);
  CHECK(f9->p() == 3);
  CHECK(f9->r() == 2);
  CHECK(f9->size() == 9);
  CHECK_FALSE(f9->prime_field());
  CHECK_FALSE(f9->has_conj());
  CHECK(Field::make(7, 1)->prime_field());

  auto f9q = Field::make_quadratic(3, 1);
  CHECK(f9q->size() == 9);
  CHECK(f9q->has_conj());
  CHECK(f9q->base_q() == 3);
  CHECK(f9q->modulus() == f9->modulus());

  auto f49 = Field::make_quadratic(7, 1);
  CHECK(f49->size() == 49);
  CHECK(f49->base_q() == 7);
}

TEST_CASE("F9 lex element order is frozen") {
  auto f = Field::make(3, 2);
  std::vector<uint32_t> want{0, 3, 6, 1, 4, 7, 2, 5, 8};
  CHECK(f->elements_lex() == want);
  for (uint32_t i = 0; i < want.size(); ++i) CHECK(f->lex_rank(want[i]) == i);
}

static void check_field_laws(const FieldPtr& f) {
  uint32_t q = f->size();
  for (uint32_t a = 0; a < q; ++a) {
    CHECK(f->add(a, 0) == a);
    CHECK(f->mul(a, 1) == a);
    CHECK(f->add(a, f->neg(a)) == 0);
    CHECK(f->sub(a, a) == 0);
    if (a) CHECK(f->mul(a, f->inv(a)) == 1);
    for (uint32_t b = 0; b < q; ++b) {
      CHECK(f->add(a, b) == f->add(b, a));
      CHECK(f->mul(a, b) == f->mul(b, a));
      if (b) CHECK(f->div(f->mul(a, b), b) == a);
    }
  }
  // Associativity and distributivity on all triples.
  for (uint32_t a = 0; a < q; ++a)
    for (uint32_t b = 0; b < q; ++b)
      for (uint32_t c = 0; c < q; ++c) {
        CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
        CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
        CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      }
}

TEST_CASE("field laws, exhaustive on small fields") {
  check_field_laws(Field::make(2, 2));
  check_field_laws(Field::make(2, 3));
  check_field_laws(Field::make(3, 2));
  check_field_laws(Field::make(5, 2));
  check_field_laws(Field::make(7, 1));
}

TEST_CASE("pow, inv and frobenius") {
  auto f = Field::make(3, 2);
  CHECK(f->pow(0, 0) == 1);
  CHECK(f->pow(0, 5) == 0);
  for (uint32_t a = 0; a < 9; ++a) {
    CHECK(f->pow(a, 1) == a);
    uint32_t sq = f->mul(a, a);
    CHECK(f->pow(a, 2) == sq);
    CHECK(f->pow(a, 9) == a);          // x^q = x on F_q
    CHECK(f->frob(a) == f->pow(a, 3));  // Frobenius is x -> x^p
    CHECK(f->frob_iter(a, 2) == a);
    if (a) CHECK(f->pow(a, 8) == 1);  // multiplicative order divides q-1
  }
  CHECK_THROWS_AS(f->inv(0), std::domain_error);
}

TEST_CASE("conjugation on quadratic extensions") {
  auto f = Field::make_quadratic(3, 1);  // F9 over F3
  for (uint32_t a = 0; a < 9; ++a) {
    CHECK(f->conj(a) == f->pow(a, 3));
    CHECK(f->conj(f->conj(a)) == a);  // involution
    // Norm and trace land in the base field.
    CHECK(f->in_prime_subfield(f->mul(a, f->conj(a))));
    CHECK(f->in_prime_subfield(f->add(a, f->conj(a))));
  }
  // Fixed points of conj are exactly the prime subfield here.
  uint32_t fixed = 0;
  for (uint32_t a = 0; a < 9; ++a)
    if (f->conj_fixed(a)) ++fixed;
  CHECK(fixed == 3);

  auto plain = Field::make(3, 2);
  CHECK_THROWS_AS(plain->conj(0), std::logic_error);

  auto f49 = Field::make_quadratic(7, 1);
  for (uint32_t a = 0; a < 49; ++a) CHECK(f49->conj(a) == f49->pow(a, 7));
}

TEST_CASE("frobenius fixed fields") {
  auto f = Field::make(2, 4);  // F16
  CHECK(f->frob_fixed_elements(1).size() == 2);   // F2
  CHECK(f->frob_fixed_elements(2).size() == 4);   // F4
  CHECK(f->frob_fixed_elements(3).size() == 2);   // gcd(3,4) = 1
  CHECK(f->frob_fixed_elements(4).size() == 16);  // everything
}

TEST_CASE("coefficient round trips") {
  auto f = Field::make(5, 2);
  for (uint32_t a = 0; a < 25; ++a) {
    auto c = f->coeffs(a);
    REQUIRE(c.size() == 2);
    CHECK(c[0] == a % 5);
    CHECK(c[1] == a / 5);
    CHECK(f->from_coeffs(c) == a);
  }
  CHECK_THROWS_AS(f->from_coeffs({1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(f->from_coeffs({5, 0}), std::invalid_argument);
}

TEST_CASE("rendering") {
  auto f7 = Field::make(7, 1);
  CHECK(f7->render(5) == "5");
  auto f9 = Field::make(3, 2);
  CHECK(f9->render(5) == "(2,1)");  // 5 = 2 + 1*3
  CHECK(f9->describe() == "(p=3, r=2, modulus=[1,0,1])");
}

TEST_CASE("element wrapper arithmetic") {
  auto f = Field::make(3, 2);
  FieldElement a(*f, 4), b(*f, 7);
  CHECK((a + b).index() == f->add(4, 7));
  CHECK((a * b).index() == f->mul(4, 7));
  CHECK((a - a).is_zero());
  CHECK(a.pow(9) == a);
  CHECK(a.frobenius().index() == f->frob(4));
  auto g = Field::make(2, 2);
  FieldElement c(*g, 1);
  CHECK_THROWS_AS((void)(a + c), std::invalid_argument);
}

TEST_CASE("descriptor cache returns the identical object") {
  auto a = Field::make(3, 2);
  auto b = Field::make(3, 2);
  CHECK(a.get() == b.get());
  auto q = Field::make_quadratic(3, 1);
  CHECK(a.get() != q.get());  // quadratic flag is part of the identity
}
