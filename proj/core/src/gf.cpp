#include "rdlab/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace rdlab {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Shared cache so repeated make() calls reuse the tables.
std::mutex g_field_mutex;
std::map<std::tuple<uint32_t, uint32_t, uint32_t>, std::weak_ptr<const Field>>
    g_field_cache;

struct FieldDeleter {
  void operator()(const Field* f) const { delete f; }
};

FieldPtr get_or_make(uint32_t p, uint32_t r, uint32_t base_q,
                     uint64_t max_cardinality) {
  std::lock_guard<std::mutex> lock(g_field_mutex);
  auto key = std::make_tuple(p, r, base_q);
  auto it = g_field_cache.find(key);
  if (it != g_field_cache.end()) {
    if (auto sp = it->second.lock()) return sp;
  }
  struct Access : Field {
    Access(uint32_t p, uint32_t r, uint32_t bq, uint64_t mc)
        : Field(p, r, bq, mc) {}
  };
  FieldPtr sp = std::make_shared<const Access>(p, r, base_q, max_cardinality);
  g_field_cache[key] = sp;
  return sp;
}

}  // namespace

FieldPtr Field::make(uint32_t p, uint32_t r, uint64_t max_cardinality) {
  return get_or_make(p, r, 0, max_cardinality);
}

FieldPtr Field::make_quadratic(uint32_t p, uint32_t half_r,
                               uint64_t max_cardinality) {
  if (half_r == 0) throw std::invalid_argument("quadratic field: r = 0");
  uint64_t bq = 1;
  for (uint32_t i = 0; i < half_r; ++i) bq *= p;
  if (bq > 0xffffffffull) throw std::invalid_argument("base field too large");
  return get_or_make(p, 2 * half_r, uint32_t(bq), max_cardinality);
}

Field::Field(uint32_t p, uint32_t r, uint32_t base_q,
             uint64_t max_cardinality) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (r == 0) throw std::invalid_argument("field degree must be positive");
  uint64_t q = 1;
  for (uint32_t i = 0; i < r; ++i) {
    q *= p;
    if (q > max_cardinality)
      throw std::invalid_argument("field cardinality exceeds budget");
  }
  p_ = p;
  r_ = r;
  q_ = uint32_t(q);
  base_q_ = base_q;
  if (r_ > 1) choose_modulus();
  build_tables();
}

Field::~Field() = default;

std::vector<uint32_t> Field::coeffs(uint32_t a) const {
  std::vector<uint32_t> c(r_);
  for (uint32_t k = 0; k < r_; ++k) {
    c[k] = a % p_;
    a /= p_;
  }
  return c;
}

uint32_t Field::from_coeffs(const std::vector<uint32_t>& c) const {
  if (c.size() != r_) throw std::invalid_argument("coefficient count != r");
  uint32_t a = 0;
  for (uint32_t k = r_; k-- > 0;) {
    if (c[k] >= p_) throw std::invalid_argument("coefficient out of range");
    a = a * p_ + c[k];
  }
  return a;
}

std::vector<uint32_t> Field::polmulmod(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) const {
  // digit-vector multiply, reduce by the monic modulus
  std::vector<uint64_t> res(2 * r_ - 1, 0);
  for (uint32_t i = 0; i < r_; ++i)
    if (a[i])
      for (uint32_t j = 0; j < r_; ++j) res[i + j] += uint64_t(a[i]) * b[j];
  for (uint32_t d = 2 * r_ - 2; d >= r_; --d) {
    uint64_t c = res[d] % p_;
    res[d] = 0;
    if (c) {
      uint64_t mc = p_ - c;  // subtract c * modulus * x^(d-r)
      for (uint32_t k = 0; k < r_; ++k)
        res[d - r_ + k] += mc * modulus_[k];
    }
    if (d == r_) break;
  }
  std::vector<uint32_t> out(r_);
  for (uint32_t k = 0; k < r_; ++k) out[k] = uint32_t(res[k] % p_);
  return out;
}

void Field::choose_modulus() {
  // Candidates x^r + c_{r-1} x^{r-1} + ... + c_0 scanned in lexicographic
  // order of (c_0, ..., c_{r-1}); first one with no monic divisor of degree
  // <= r/2 wins.
  std::vector<uint32_t> c(r_, 0);
  auto divides = [&](const std::vector<uint32_t>& g, uint32_t d) {
    // does monic g (degree d, little-endian, g[d] = 1) divide
    // x^r + c? long division remainder test
    std::vector<int64_t> rem(r_ + 1, 0);
    for (uint32_t k = 0; k < r_; ++k) rem[k] = c[k];
    rem[r_] = 1;
    for (int64_t i = r_; i >= int64_t(d); --i) {
      int64_t f = rem[i] % p_;
      if (f) {
        for (uint32_t k = 0; k <= d; ++k) {
          int64_t& slot = rem[i - d + k];
          slot = ((slot - f * g[k]) % p_ + p_) % p_;
        }
      }
    }
    for (uint32_t k = 0; k < d; ++k)
      if (rem[k] % p_) return false;
    return true;
  };
  auto irreducible = [&]() {
    for (uint32_t d = 1; d <= r_ / 2; ++d) {
      std::vector<uint32_t> g(d + 1, 0);
      g[d] = 1;
      while (true) {
        if (divides(g, d)) return false;
        uint32_t k = 0;
        while (k < d && ++g[k] == p_) g[k++] = 0;
        if (k == d) break;
      }
    }
    return true;
  };
  while (true) {
    if (irreducible()) break;
    uint32_t k = r_;
    while (k-- > 0) {
      if (++c[k] < p_) break;
      c[k] = 0;
      if (k == 0) throw std::runtime_error("no irreducible modulus found");
    }
    // lexicographic order on (c_0, ..., c_{r-1}) means c_{r-1} is the
    // fastest digit; the loop above increments from the back
  }
  modulus_.assign(c.begin(), c.end());
  modulus_.push_back(1);
}

void Field::build_tables() {
  neg_.resize(q_);
  for (uint32_t a = 0; a < q_; ++a) {
    uint32_t v = 0;
    uint32_t x = a;
    for (uint32_t k = 0, base = 1; k < r_; ++k, base *= p_) {
      uint32_t d = x % p_;
      x /= p_;
      v += ((p_ - d) % p_) * base;
    }
    neg_[a] = v;
  }

  if (uint64_t(q_) * q_ <= 6250000) {  // up to F_2500: full addition table
    add_storage_.resize(size_t(q_) * q_);
    add_ = add_storage_.data();
    for (uint32_t a = 0; a < q_; ++a)
      for (uint32_t b = 0; b < q_; ++b)
        add_storage_[size_t(a) * q_ + b] = add_slow(a, b);
  }

  // exp/log from the least generator of the multiplicative group
  exp_.assign(2 * (q_ - 1), 0);
  log_.assign(q_, 0);
  std::vector<uint32_t> factors;
  {
    uint32_t m = q_ - 1;
    for (uint32_t d = 2; uint64_t(d) * d <= m; ++d)
      while (m % d == 0) {
        if (factors.empty() || factors.back() != d) factors.push_back(d);
        m /= d;
      }
    if (m > 1) factors.push_back(m);
  }
  auto pow_digits = [&](uint32_t a, uint32_t e) {
    std::vector<uint32_t> base = coeffs(a), acc(r_, 0);
    acc[0] = 1;
    while (e) {
      if (e & 1) acc = r_ == 1 ? std::vector<uint32_t>{acc[0] * base[0] % p_}
                               : polmulmod(acc, base);
      base = r_ == 1 ? std::vector<uint32_t>{base[0] * base[0] % p_}
                     : polmulmod(base, base);
      e >>= 1;
    }
    return from_coeffs(acc);
  };
  uint32_t g = 0;
  for (uint32_t cand = 1; cand < q_; ++cand) {
    bool ok = cand != 1 || q_ == 2;
    for (uint32_t f : factors)
      if (pow_digits(cand, (q_ - 1) / f) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      g = cand;
      break;
    }
  }
  if (!g && q_ == 2) g = 1;
  if (!g) throw std::runtime_error("no multiplicative generator found");
  uint32_t cur = 1;
  for (uint32_t k = 0; k < q_ - 1; ++k) {
    exp_[k] = cur;
    exp_[k + q_ - 1] = cur;
    log_[cur] = k;
    std::vector<uint32_t> nd = r_ == 1
        ? std::vector<uint32_t>{cur * g % p_}
        : polmulmod(coeffs(cur), coeffs(g));
    cur = r_ == 1 ? nd[0] : from_coeffs(nd);
  }
  if (cur != 1) throw std::runtime_error("generator order mismatch");

  frob_.resize(q_);
  frob_[0] = 0;
  for (uint32_t a = 1; a < q_; ++a)
    frob_[a] = exp_[uint32_t((uint64_t(log_[a]) * p_) % (q_ - 1))];
}

uint32_t Field::add_slow(uint32_t a, uint32_t b) const {
  uint32_t v = 0;
  for (uint32_t k = 0, base = 1; k < r_; ++k, base *= p_) {
    v += ((a % p_ + b % p_) % p_) * base;
    a /= p_;
    b /= p_;
  }
  return v;
}

uint32_t Field::inv(uint32_t a) const {
  if (!a) throw std::domain_error("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
  if (!a) return e ? 0 : 1;
  return exp_[uint32_t((uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1))];
}

uint32_t Field::frob_iter(uint32_t a, uint32_t k) const {
  for (uint32_t i = 0; i < k; ++i) a = frob_[a];
  return a;
}

uint32_t Field::conj(uint32_t a) const {
  if (!has_conj())
    throw std::logic_error("conj on a field not flagged as quadratic");
  return frob_iter(a, r_ / 2);
}

bool Field::conj_fixed(uint32_t a) const { return conj(a) == a; }

std::vector<uint32_t> Field::frob_fixed_elements(uint32_t k) const {
  std::vector<uint32_t> out;
  for (uint32_t a = 0; a < q_; ++a)
    if (frob_iter(a, k) == a) out.push_back(a);
  return out;
}

std::vector<uint32_t> Field::elements_lex() const {
  std::vector<uint32_t> out;
  out.reserve(q_);
  // lexicographic order on (c_0, ..., c_{r-1}) = index order with digits
  // reversed
  std::vector<uint32_t> c(r_, 0);
  while (true) {
    out.push_back(from_coeffs(c));
    uint32_t k = r_;
    while (k-- > 0) {
      if (++c[k] < p_) break;
      c[k] = 0;
      if (k == 0) return out;
    }
  }
}

uint32_t Field::lex_rank(uint32_t a) const {
  if (r_ == 1) return a;
  // lex compares c_0 first, so c_0 carries the highest weight
  uint32_t rank = 0;
  std::vector<uint32_t> c = coeffs(a);
  for (uint32_t k = 0; k < r_; ++k) rank = rank * p_ + c[k];
  return rank;
}

std::string Field::render(uint32_t a) const {
  if (r_ == 1) return std::to_string(a);
  std::ostringstream os;
  os << '(';
  std::vector<uint32_t> c = coeffs(a);
  for (uint32_t k = 0; k < r_; ++k) {
    if (k) os << ',';
    os << c[k];
  }
  os << ')';
  return os.str();
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "(p=" << p_ << ", r=" << r_ << ", modulus=[";
  for (size_t k = 0; k < modulus_.size(); ++k) {
    if (k) os << ',';
    os << modulus_[k];
  }
  os << "])";
  return os.str();
}

uint32_t FieldElement::same(const FieldElement& o) const {
  if (f_ != o.f_)
    throw std::invalid_argument("elements of distinct fields");
  return o.v_;
}

}  // namespace rdlab
