#include "rdlab/mvpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rdlab {

bool Monomial::operator<(const Monomial& o) const {
  uint32_t da = degree(), db = o.degree();
  if (da != db) return da < db;
  // same degree: lex with x1 most significant; bigger exponent early = bigger
  for (size_t k = 0; k < e.size(); ++k)
    if (e[k] != o.e[k]) return e[k] < o.e[k];
  return false;
}

namespace {
struct DescGrlex {
  bool operator()(const Monomial& a, const Monomial& b) const { return b < a; }
};
}  // namespace

MultiPoly MultiPoly::zero(FieldPtr f, uint32_t nvars) {
  return MultiPoly(std::move(f), nvars);
}

MultiPoly MultiPoly::constant(FieldPtr f, uint32_t nvars, uint32_t c) {
  MultiPoly p(std::move(f), nvars);
  if (c) p.terms_.push_back({Monomial{std::vector<uint8_t>(nvars, 0)}, c});
  return p;
}

MultiPoly MultiPoly::variable(FieldPtr f, uint32_t nvars, uint32_t i) {
  if (i >= nvars) throw std::invalid_argument("variable index out of range");
  MultiPoly p(std::move(f), nvars);
  Monomial m{std::vector<uint8_t>(nvars, 0)};
  m.e[i] = 1;
  p.terms_.push_back({std::move(m), 1});
  return p;
}

MultiPoly MultiPoly::monomial(FieldPtr f, uint32_t nvars, Monomial m,
                              uint32_t c) {
  if (m.e.size() != nvars) throw std::invalid_argument("monomial arity");
  MultiPoly p(std::move(f), nvars);
  if (c) p.terms_.push_back({std::move(m), c});
  return p;
}

MultiPoly MultiPoly::elementary_symmetric(FieldPtr f, uint32_t n, uint32_t j) {
  if (j > n) throw std::invalid_argument("elementary symmetric: j > n");
  MultiPoly p(f, n);
  if (j == 0) return constant(std::move(f), n, 1);
  // iterate j-subsets in increasing colex order
  std::vector<uint32_t> idx(j);
  for (uint32_t k = 0; k < j; ++k) idx[k] = k;
  while (true) {
    Monomial m{std::vector<uint8_t>(n, 0)};
    for (uint32_t k : idx) m.e[k] = 1;
    p.terms_.push_back({std::move(m), 1});
    uint32_t k = j;
    while (k-- > 0) {
      if (++idx[k] <= n - (j - k)) {
        for (uint32_t t = k + 1; t < j; ++t) idx[t] = idx[t - 1] + 1;
        break;
      }
      if (k == 0) {
        p.sort_and_prune();
        return p;
      }
    }
  }
}

MultiPoly MultiPoly::symplectic_form(FieldPtr f, uint32_t m) {
  uint32_t q = f->size();
  uint32_t n = 2 * m;
  MultiPoly p(f, n);
  for (uint32_t i = 0; i < m; ++i) {
    Monomial a{std::vector<uint8_t>(n, 0)}, b{std::vector<uint8_t>(n, 0)};
    a.e[2 * i] = 1;
    a.e[2 * i + 1] = uint8_t(q);
    b.e[2 * i] = uint8_t(q);
    b.e[2 * i + 1] = 1;
    p.terms_.push_back({std::move(a), 1});
    p.terms_.push_back({std::move(b), f->neg(1)});
  }
  p.sort_and_prune();
  return p;
}

MultiPoly MultiPoly::hermitian_norm(FieldPtr f, uint32_t n, uint32_t q) {
  MultiPoly p(f, n);
  for (uint32_t i = 0; i < n; ++i) {
    Monomial m{std::vector<uint8_t>(n, 0)};
    m.e[i] = uint8_t(q + 1);
    p.terms_.push_back({std::move(m), 1});
  }
  p.sort_and_prune();
  return p;
}

uint32_t MultiPoly::degree() const {
  return terms_.empty() ? 0 : terms_.front().first.degree();
}

bool MultiPoly::homogeneous() const {
  if (terms_.empty()) return true;
  uint32_t d = terms_.front().first.degree();
  for (const auto& t : terms_)
    if (t.first.degree() != d) return false;
  return true;
}

void MultiPoly::sort_and_prune() {
  std::sort(terms_.begin(), terms_.end(),
            [](const auto& a, const auto& b) { return b.first < a.first; });
  std::vector<std::pair<Monomial, uint32_t>> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second = field_->add(out.back().second, t.second);
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const auto& t) { return t.second == 0; }),
            out.end());
  terms_ = std::move(out);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (field_.get() != o.field_.get() || nvars_ != o.nvars_)
    throw std::invalid_argument("polynomial ring mismatch");
  MultiPoly out(field_, nvars_);
  out.terms_.reserve(terms_.size() + o.terms_.size());
  out.terms_ = terms_;
  out.terms_.insert(out.terms_.end(), o.terms_.begin(), o.terms_.end());
  out.sort_and_prune();
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(field_, nvars_);
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.second = field_->neg(t.second);
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  return *this + (-o);
}

MultiPoly MultiPoly::scaled(uint32_t c) const {
  MultiPoly out(field_, nvars_);
  if (!c) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.second = field_->mul(t.second, c);
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (field_.get() != o.field_.get() || nvars_ != o.nvars_)
    throw std::invalid_argument("polynomial ring mismatch");
  std::map<Monomial, uint32_t, DescGrlex> acc;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Monomial m{std::vector<uint8_t>(nvars_)};
      for (uint32_t k = 0; k < nvars_; ++k) {
        uint32_t s = uint32_t(a.first.e[k]) + b.first.e[k];
        if (s > 255) throw std::overflow_error("monomial exponent overflow");
        m.e[k] = uint8_t(s);
      }
      uint32_t c = field_->mul(a.second, b.second);
      auto [it, fresh] = acc.try_emplace(std::move(m), c);
      if (!fresh) it->second = field_->add(it->second, c);
    }
  MultiPoly out(field_, nvars_);
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c) out.terms_.push_back({m, c});
  return out;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return field_.get() == o.field_.get() && nvars_ == o.nvars_ &&
         terms_ == o.terms_;
}

MultiPoly MultiPoly::pow(uint32_t e) const {
  MultiPoly acc = constant(field_, nvars_, 1);
  MultiPoly base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& images) const {
  if (images.size() != nvars_)
    throw std::invalid_argument("compose: image count != nvars");
  if (terms_.empty())
    return images.empty() ? MultiPoly(field_, 0)
                          : MultiPoly(images[0].field_, images[0].nvars_);
  FieldPtr tf = images[0].field_;
  uint32_t tn = images[0].nvars_;
  for (const auto& g : images)
    if (g.field_.get() != tf.get() || g.nvars_ != tn)
      throw std::invalid_argument("compose: inconsistent images");
  if (tf.get() != field_.get())
    throw std::invalid_argument("compose: field mismatch");

  // cache image powers: pw[i][e] = images[i]^e
  std::vector<std::vector<MultiPoly>> pw(nvars_);
  for (uint32_t i = 0; i < nvars_; ++i)
    pw[i].push_back(constant(tf, tn, 1));
  auto power = [&](uint32_t i, uint32_t e) -> const MultiPoly& {
    while (pw[i].size() <= e)
      pw[i].push_back(pw[i].back() * images[i]);
    return pw[i][e];
  };

  MultiPoly out(tf, tn);
  for (const auto& t : terms_) {
    MultiPoly term = constant(tf, tn, t.second);
    for (uint32_t i = 0; i < nvars_; ++i)
      if (t.first.e[i]) term = term * power(i, t.first.e[i]);
    out = out + term;
  }
  return out;
}

MultiPoly MultiPoly::linear_substitute(const std::vector<uint32_t>& m,
                                       uint32_t n) const {
  if (n != nvars_ || m.size() != size_t(n) * n)
    throw std::invalid_argument("linear_substitute: shape mismatch");
  return linear_substitute_rect(m, n, n);
}

MultiPoly MultiPoly::linear_substitute_rect(const std::vector<uint32_t>& m,
                                            uint32_t rows,
                                            uint32_t cols) const {
  if (rows != nvars_ || m.size() != size_t(rows) * cols)
    throw std::invalid_argument("linear_substitute: shape mismatch");
  std::vector<MultiPoly> images;
  images.reserve(rows);
  for (uint32_t i = 0; i < rows; ++i) {
    MultiPoly L(field_, cols);
    for (uint32_t j = 0; j < cols; ++j) {
      uint32_t c = m[size_t(i) * cols + j];
      if (c) {
        Monomial mo{std::vector<uint8_t>(cols, 0)};
        mo.e[j] = 1;
        L.terms_.push_back({std::move(mo), c});
      }
    }
    L.sort_and_prune();
    images.push_back(std::move(L));
  }
  return compose(images);
}

MultiPoly MultiPoly::affine_shift_expand() const {
  uint32_t tn = nvars_ + 2;
  std::vector<MultiPoly> images;
  images.reserve(nvars_);
  for (uint32_t i = 0; i < nvars_; ++i) {
    MultiPoly L(field_, tn);
    Monomial ax{std::vector<uint8_t>(tn, 0)};
    ax.e[i] = 1;
    ax.e[nvars_] = 1;  // alpha * x_i
    Monomial b{std::vector<uint8_t>(tn, 0)};
    b.e[nvars_ + 1] = 1;  // + beta
    L.terms_.push_back({std::move(ax), 1});
    L.terms_.push_back({std::move(b), 1});
    L.sort_and_prune();
    images.push_back(std::move(L));
  }
  // widen self to tn variables, then compose
  MultiPoly wide(field_, tn);
  wide.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m{std::vector<uint8_t>(tn, 0)};
    std::copy(t.first.e.begin(), t.first.e.end(), m.e.begin());
    wide.terms_.push_back({std::move(m), t.second});
  }
  wide.sort_and_prune();
  std::vector<MultiPoly> full = images;
  full.push_back(variable(field_, tn, nvars_));
  full.push_back(variable(field_, tn, nvars_ + 1));
  return wide.compose(full);
}

MultiPoly MultiPoly::partial_derivative(uint32_t i) const {
  if (i >= nvars_) throw std::invalid_argument("derivative index");
  MultiPoly out(field_, nvars_);
  for (const auto& t : terms_) {
    uint8_t e = t.first.e[i];
    if (!e) continue;
    uint32_t c = field_->mul(t.second, e % field_->p());
    if (!c) continue;
    Monomial m = t.first;
    m.e[i] = uint8_t(e - 1);
    out.terms_.push_back({std::move(m), c});
  }
  out.sort_and_prune();
  return out;
}

uint32_t MultiPoly::evaluate(const std::vector<uint32_t>& x) const {
  if (x.size() != nvars_) throw std::invalid_argument("evaluate arity");
  return evaluate(x.data());
}

uint32_t MultiPoly::evaluate(const uint32_t* x) const {
  const Field& F = *field_;
  uint32_t acc = 0;
  for (const auto& t : terms_) {
    uint32_t v = t.second;
    for (uint32_t k = 0; k < nvars_ && v; ++k)
      if (t.first.e[k]) v = F.mul(v, F.pow(x[k], t.first.e[k]));
    acc = F.add(acc, v);
  }
  return acc;
}

MultiPoly MultiPoly::embed_into(FieldPtr target) const {
  if (target->p() != field_->p())
    throw std::invalid_argument("embedding across characteristics");
  MultiPoly out(target, nvars_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!field_->in_prime_subfield(t.second))
      throw std::invalid_argument(
          "embedding requires prime-subfield coefficients");
    out.terms_.push_back(t);  // residue c embeds as index c in any F_{p^r}
  }
  return out;
}

std::string MultiPoly::render() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    if (t.first.degree() == 0) {
      os << field_->render(t.second);
      continue;
    }
    os << field_->render(t.second) << " *";
    for (uint32_t k = 0; k < nvars_; ++k)
      if (t.first.e[k]) os << " x" << (k + 1) << '^' << uint32_t(t.first.e[k]);
  }
  return os.str();
}

}  // namespace rdlab
