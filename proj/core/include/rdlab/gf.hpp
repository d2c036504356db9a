#ifndef RDLAB_GF_HPP
#define RDLAB_GF_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace rdlab {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/*
 * Finite field F_{p^r} with table-driven arithmetic on element indices.
 *
 * An element index encodes the little-endian base-p digit vector of its
 * coefficient sequence in the modulus basis, so index k of a prime field
 * is the residue k, and 0/1 are the additive/multiplicative identities in
 * every field. The modulus is the lexicographically least monic irreducible
 * polynomial of degree r over F_p, comparing little-endian coefficient
 * tuples left to right; irreducibility is established by trial division
 * against every monic polynomial of degree <= r/2.
 *
 * Fields are immutable and shared; obtain them through Field::make or
 * Field::make_quadratic and keep the FieldPtr alive while elements of the
 * field are in use.
 */
class Field {
public:
  // Plain field of size p^r. Throws std::invalid_argument for p not prime,
  // r = 0, or p^r exceeding max_cardinality.
  static FieldPtr make(uint32_t p, uint32_t r,
                       uint64_t max_cardinality = 200000);

  // F_{q^2} for q = p^half_r, flagged so conj() is available. The base
  // subfield is located as the fixed set of frob^half_r.
  static FieldPtr make_quadratic(uint32_t p, uint32_t half_r,
                                 uint64_t max_cardinality = 200000);

  uint32_t p() const { return p_; }
  uint32_t r() const { return r_; }
  uint32_t size() const { return q_; }
  bool prime_field() const { return r_ == 1; }

  // Quadratic-extension flag; base_q() is p^(r/2) when set.
  bool has_conj() const { return base_q_ != 0; }
  uint32_t base_q() const { return base_q_; }

  // Little-endian modulus coefficients including the leading 1
  // (size r+1); empty for prime fields.
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  // --- arithmetic on element indices -------------------------------------
  uint32_t add(uint32_t a, uint32_t b) const {
    return add_ ? add_[size_t(a) * q_ + b] : add_slow(a, b);
  }
  uint32_t neg(uint32_t a) const { return neg_[a]; }
  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg_[b]); }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return (a && b) ? exp_[size_t(log_[a]) + log_[b]] : 0;
  }
  uint32_t inv(uint32_t a) const;   // throws on a = 0
  uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
  uint32_t pow(uint32_t a, uint64_t e) const;
  uint32_t frob(uint32_t a) const { return frob_[a]; }  // a^p
  uint32_t frob_iter(uint32_t a, uint32_t k) const;     // a^(p^k)
  uint32_t conj(uint32_t a) const;  // a^base_q; throws if !has_conj()

  bool in_prime_subfield(uint32_t a) const { return a < p_; }
  bool conj_fixed(uint32_t a) const;

  // Count and list of elements with frob^k(x) = x (the F_{p^k} subfield
  // when k | r).
  std::vector<uint32_t> frob_fixed_elements(uint32_t k) const;

  // --- enumeration and serialization --------------------------------------
  // All q elements ordered lexicographically by little-endian coefficient
  // tuple; 0 comes first.
  std::vector<uint32_t> elements_lex() const;
  // Rank in elements_lex order, usable as a sort key.
  uint32_t lex_rank(uint32_t a) const;

  std::vector<uint32_t> coeffs(uint32_t a) const;  // little-endian, size r
  uint32_t from_coeffs(const std::vector<uint32_t>& c) const;

  // "5" for prime fields, "(2,1)" for extension elements.
  std::string render(uint32_t a) const;
  // "(p=3, r=2, modulus=[1,0,1])"
  std::string describe() const;

  ~Field();
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

protected:
  Field(uint32_t p, uint32_t r, uint32_t base_q, uint64_t max_cardinality);

private:
  uint32_t add_slow(uint32_t a, uint32_t b) const;
  std::vector<uint32_t> polmulmod(const std::vector<uint32_t>& a,
                                  const std::vector<uint32_t>& b) const;
  void choose_modulus();
  void build_tables();

  uint32_t p_ = 0, r_ = 0, q_ = 0;
  uint32_t base_q_ = 0;
  std::vector<uint32_t> modulus_;     // little-endian incl. leading 1
  std::vector<uint32_t> exp_;         // g^k, k in [0, 2(q-1)); exp_[0] = 1
  std::vector<uint32_t> log_;         // log_[exp_[k]] = k for k < q-1
  std::vector<uint32_t> neg_;
  std::vector<uint32_t> frob_;
  uint32_t* add_ = nullptr;           // q x q when small enough, else null
  std::vector<uint32_t> add_storage_;
};

/*
 * Value-type wrapper pairing an element index with its field. Arithmetic
 * between elements of distinct fields throws. Ordering is coefficient-
 * lexicographic, matching Field::elements_lex.
 */
class FieldElement {
public:
  FieldElement() = default;
  FieldElement(const Field& f, uint32_t idx) : f_(&f), v_(idx) {}

  const Field& field() const { return *f_; }
  uint32_t index() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  FieldElement operator+(const FieldElement& o) const { return at(f_->add(v_, same(o))); }
  FieldElement operator-(const FieldElement& o) const { return at(f_->sub(v_, same(o))); }
  FieldElement operator*(const FieldElement& o) const { return at(f_->mul(v_, same(o))); }
  FieldElement operator/(const FieldElement& o) const { return at(f_->div(v_, same(o))); }
  FieldElement operator-() const { return at(f_->neg(v_)); }
  FieldElement pow(uint64_t e) const { return at(f_->pow(v_, e)); }
  FieldElement frobenius() const { return at(f_->frob(v_)); }
  FieldElement conj() const { return at(f_->conj(v_)); }

  bool operator==(const FieldElement& o) const { return f_ == o.f_ && v_ == o.v_; }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  bool operator<(const FieldElement& o) const {
    return f_->lex_rank(v_) < o.f_->lex_rank(o.v_);
  }

  std::string render() const { return f_->render(v_); }

private:
  FieldElement at(uint32_t w) const { return FieldElement(*f_, w); }
  uint32_t same(const FieldElement& o) const;

  const Field* f_ = nullptr;
  uint32_t v_ = 0;
};

bool is_prime(uint64_t n);

}  // namespace rdlab

#endif
