#ifndef RDLAB_MVPOLY_HPP
#define RDLAB_MVPOLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rdlab/gf.hpp"

namespace rdlab {

/*
 * Monomial as an exponent vector over a fixed variable count. Comparison is
 * graded lexicographic: total degree first, then exponent vectors compared
 * left to right (x1 beats x2). All canonical forms in this library sort
 * terms by descending graded-lex order, which makes equality of polynomials
 * a term-by-term comparison.
 */
struct Monomial {
  std::vector<uint8_t> e;

  uint32_t degree() const {
    uint32_t d = 0;
    for (uint8_t k : e) d += k;
    return d;
  }
  bool operator==(const Monomial& o) const { return e == o.e; }
  // graded-lex "less": lower degree, or same degree and lex-smaller
  bool operator<(const Monomial& o) const;
};

class MultiPoly {
public:
  MultiPoly() = default;
  MultiPoly(FieldPtr f, uint32_t nvars) : field_(std::move(f)), nvars_(nvars) {}

  static MultiPoly zero(FieldPtr f, uint32_t nvars);
  static MultiPoly constant(FieldPtr f, uint32_t nvars, uint32_t c);
  static MultiPoly variable(FieldPtr f, uint32_t nvars, uint32_t i);
  static MultiPoly monomial(FieldPtr f, uint32_t nvars, Monomial m, uint32_t c);

  // sum over all j-subsets of {x_1..x_n} of the product of the subset
  static MultiPoly elementary_symmetric(FieldPtr f, uint32_t n, uint32_t j);
  // sum_i (x_{2i-1} x_{2i}^q - x_{2i} x_{2i-1}^q), 2m vars, q = |f|
  static MultiPoly symplectic_form(FieldPtr f, uint32_t m);
  // sum_i x_i^(q+1), n vars; q is passed so the poly can be built over F_q
  // or already inside F_{q^2}
  static MultiPoly hermitian_norm(FieldPtr f, uint32_t n, uint32_t q);

  const Field& field() const { return *field_; }
  FieldPtr field_ptr() const { return field_; }
  uint32_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  uint32_t degree() const;  // 0 for the zero polynomial
  bool homogeneous() const;
  const std::vector<std::pair<Monomial, uint32_t>>& terms() const {
    return terms_;
  }

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly scaled(uint32_t c) const;
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly pow(uint32_t e) const;

  // exact composition: substitute images[i] for x_i; all images share a
  // variable count and field
  MultiPoly compose(const std::vector<MultiPoly>& images) const;

  // x_i -> sum_j m[i][j] x_j for a square matrix given row-major
  MultiPoly linear_substitute(const std::vector<uint32_t>& m_row_major,
                              uint32_t n) const;
  // same with an n x k matrix; result lives in k variables
  MultiPoly linear_substitute_rect(const std::vector<uint32_t>& m_row_major,
                                   uint32_t rows, uint32_t cols) const;

  // x_i -> a x_i + b where a = x_{n+1}, b = x_{n+2} are fresh variables;
  // result has nvars + 2 variables
  MultiPoly affine_shift_expand() const;

  // formal partial derivative in variable i (coefficients times exponent
  // reduced mod p)
  MultiPoly partial_derivative(uint32_t i) const;

  uint32_t evaluate(const std::vector<uint32_t>& x) const;
  uint32_t evaluate(const uint32_t* x) const;

  // requires every coefficient in the prime subfield and equal
  // characteristic; remaps coefficients through the residue embedding
  MultiPoly embed_into(FieldPtr target) const;

  // "2 * x1^1 x2^3 + 1 * x3^2 + 4"; terms in descending graded-lex order
  std::string render() const;

private:
  void sort_and_prune();

  FieldPtr field_;
  uint32_t nvars_ = 0;
  std::vector<std::pair<Monomial, uint32_t>> terms_;
};

}  // namespace rdlab

#endif
