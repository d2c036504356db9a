#include "rdlab/grouplab.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "rdlab/projgeom.hpp"

namespace rdlab {

uint64_t vector_domain_size(const Field& f, uint32_t n) {
  uint64_t d = 1;
  for (uint32_t i = 0; i < n; ++i) d *= f.size();
  return d - 1;
}

std::vector<uint32_t> vector_of_index(const Field& f, uint32_t n,
                                      uint64_t idx) {
  std::vector<uint32_t> v(n);
  uint64_t x = idx + 1;
  for (uint32_t k = 0; k < n; ++k) {
    v[k] = uint32_t(x % f.size());
    x /= f.size();
  }
  return v;
}

uint64_t index_of_vector(const Field& f, const std::vector<uint32_t>& v) {
  uint64_t x = 0, w = 1;
  for (uint32_t k = 0; k < v.size(); ++k) {
    x += w * v[k];
    w *= f.size();
  }
  if (x == 0) throw std::invalid_argument("zero vector has no index");
  return x - 1;
}

Perm matrix_vector_perm(const Mat& g) {
  const Field& f = g.field();
  if (g.rows() != g.cols()) throw std::invalid_argument("non-square");
  uint64_t domain = vector_domain_size(f, g.rows());
  if (domain > 65535)
    throw BudgetExceeded("vector action domain exceeds 65535 points");
  std::vector<uint32_t> img(static_cast<size_t>(domain));
  for (uint64_t i = 0; i < domain; ++i) {
    auto v = vector_of_index(f, g.rows(), i);
    img[size_t(i)] = uint32_t(index_of_vector(f, g.apply(v)));
  }
  return Perm(std::move(img));
}

GroupHandle GroupHandle::permutation_group(std::string name, uint32_t degree,
                                           std::vector<Perm> gens,
                                           uint64_t expected_order) {
  GroupHandle h;
  h.kind_ = GroupKind::permutation;
  h.name_ = std::move(name);
  h.degree_ = degree;
  h.pgens_ = std::move(gens);
  h.expected_order_ = expected_order;
  return h;
}

GroupHandle GroupHandle::matrix_group(std::string name, FieldPtr f,
                                      uint32_t dim, std::vector<Mat> gens,
                                      std::optional<Form> form,
                                      uint64_t expected_order) {
  GroupHandle h;
  h.kind_ = GroupKind::matrix;
  h.name_ = std::move(name);
  h.field_ = std::move(f);
  h.dim_ = dim;
  h.mgens_ = std::move(gens);
  h.form_ = std::move(form);
  h.expected_order_ = expected_order;
  for (const Mat& g : h.mgens_) {
    if (g.rows() != dim || g.cols() != dim ||
        g.field_ptr().get() != h.field_.get())
      throw std::invalid_argument("matrix generator shape/field mismatch");
    if (g.det() == 0) throw std::invalid_argument("singular generator");
    if (h.form_ && !preserves_form(g, *h.form_))
      throw std::logic_error(h.name_ + ": generator breaks the declared form");
  }
  return h;
}

const PermGroup& GroupHandle::action() const {
  if (chain_) return *chain_;
  std::vector<Perm> gens;
  uint32_t degree = degree_;
  if (kind_ == GroupKind::matrix) {
    uint64_t domain = vector_domain_size(*field_, dim_);
    if (domain > 65535)
      throw BudgetExceeded(name_ + ": vector action domain too large");
    degree = uint32_t(domain);
    for (const Mat& g : mgens_) gens.push_back(matrix_vector_perm(g));
  } else {
    gens = pgens_;
  }
  auto chain = std::make_shared<PermGroup>(degree, std::move(gens));
  if (expected_order_ && chain->order() != expected_order_) {
    std::ostringstream os;
    os << name_ << ": chain order " << chain->order()
       << " contradicts the expected order " << expected_order_;
    throw std::logic_error(os.str());
  }
  chain_ = std::move(chain);
  return *chain_;
}

uint32_t GroupHandle::scalar_count() const {
  if (kind_ != GroupKind::matrix)
    throw std::logic_error("scalar_count: matrix groups only");
  const PermGroup& chain = action();
  uint32_t count = 0;
  for (uint32_t lam = 1; lam < field_->size(); ++lam) {
    Mat s = Mat::identity(field_, dim_);
    for (uint32_t i = 0; i < dim_; ++i) s.at(i, i) = lam;
    if (chain.contains(matrix_vector_perm(s))) ++count;
  }
  return count;
}

namespace {
uint64_t factorial(uint32_t n) {
  uint64_t f = 1;
  for (uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}
}  // namespace

GroupHandle symmetric_group(uint32_t n) {
  std::vector<Perm> gens;
  if (n >= 2) {
    gens.push_back(Perm::from_cycles(n, {{0, 1}}));
    std::vector<uint32_t> full(n);
    for (uint32_t i = 0; i < n; ++i) full[i] = i;
    gens.push_back(Perm::from_cycles(n, {full}));
  }
  return GroupHandle::permutation_group("S" + std::to_string(n), n,
                                        std::move(gens), factorial(n));
}

GroupHandle alternating_group(uint32_t n) {
  std::vector<Perm> gens;
  if (n >= 3) {
    gens.push_back(Perm::from_cycles(n, {{0, 1, 2}}));
    if (n > 3) {
      std::vector<uint32_t> cyc;
      if (n % 2 == 1) {  // n-cycle is even
        for (uint32_t i = 0; i < n; ++i) cyc.push_back(i);
      } else {  // (n-1)-cycle on 1..n-1 is even
        for (uint32_t i = 1; i < n; ++i) cyc.push_back(i);
      }
      gens.push_back(Perm::from_cycles(n, {cyc}));
    }
  }
  uint64_t order = n >= 2 ? factorial(n) / 2 : 1;
  return GroupHandle::permutation_group("A" + std::to_string(n), n,
                                        std::move(gens), order);
}

GroupHandle cyclic_group(uint32_t n) {
  std::vector<Perm> gens;
  if (n >= 2) {
    std::vector<uint32_t> cyc(n);
    for (uint32_t i = 0; i < n; ++i) cyc[i] = i;
    gens.push_back(Perm::from_cycles(n, {cyc}));
  }
  return GroupHandle::permutation_group("Z/" + std::to_string(n),
                                        std::max<uint32_t>(n, 1),
                                        std::move(gens), n);
}

uint64_t sp_order_formula(uint32_t m, uint64_t q) {
  uint64_t order = 1;
  for (uint32_t i = 0; i < m * m; ++i) order *= q;
  for (uint32_t i = 1; i <= m; ++i) {
    uint64_t q2i = 1;
    for (uint32_t j = 0; j < 2 * i; ++j) q2i *= q;
    order *= q2i - 1;
  }
  return order;
}

uint64_t su_order_formula(uint32_t n, uint64_t q) {
  uint64_t order = 1;
  for (uint32_t i = 0; i < n * (n - 1) / 2; ++i) order *= q;
  for (uint32_t i = 2; i <= n; ++i) {
    uint64_t qi = 1;
    for (uint32_t j = 0; j < i; ++j) qi *= q;
    order *= (i % 2 == 0) ? qi - 1 : qi + 1;  // q^i - (-1)^i
  }
  return order;
}

namespace {

struct PQ {
  uint32_t p, r;
};
PQ factor_prime_power(uint32_t q) {
  for (uint32_t p = 2; p <= q; ++p) {
    if (!is_prime(p) || q % p) continue;
    uint32_t r = 0, x = q;
    while (x > 1) {
      if (x % p) throw std::invalid_argument("q is not a prime power");
      x /= p;
      ++r;
    }
    return {p, r};
  }
  throw std::invalid_argument("q < 2");
}

// F_p-basis of the trace-zero subspace {c : c + conj(c) = 0} of F_{q^2},
// chosen greedily in index order
std::vector<uint32_t> trace_zero_basis(const Field& f) {
  std::vector<uint32_t> span{0};
  std::vector<uint32_t> basis;
  const uint64_t target = f.base_q();  // subspace has q elements
  for (uint32_t c = 1; c < f.size() && span.size() < target; ++c) {
    if (f.add(c, f.conj(c)) != 0) continue;
    if (std::find(span.begin(), span.end(), c) != span.end()) continue;
    basis.push_back(c);
    std::vector<uint32_t> grown = span;
    for (uint32_t s : span) {
      uint32_t t = s;
      for (uint32_t k = 1; k < f.p(); ++k) {
        t = f.add(t, c);
        grown.push_back(t);
      }
    }
    span = std::move(grown);
  }
  return basis;
}

// smallest field index of multiplicative order exactly n
uint32_t least_of_order(const Field& f, uint32_t n) {
  for (uint32_t x = 1; x < f.size(); ++x) {
    uint32_t acc = x;
    uint32_t ord = 1;
    while (acc != 1) {
      acc = f.mul(acc, x);
      if (++ord > n) break;
    }
    if (ord == n) return x;
  }
  throw std::logic_error("no element of the requested order");
}

bool should_certify(const Field& f, uint32_t dim, uint64_t expected) {
  uint64_t domain = 1;
  for (uint32_t i = 0; i < dim; ++i) {
    domain *= f.size();
    if (domain > 65536) return false;
  }
  return domain - 1 <= 65535 && expected <= 2000000;
}

// Deterministic augmentation: while the certified order falls short,
// adjoin the lexicographically least (entry tuple, row-major) matrix
// that preserves the form, has determinant 1 and is not yet generated.
// Needed only for SU_3(2), where transvections generate index 4.
void augment_to_expected(const std::string& name, const FieldPtr& f,
                         uint32_t n, const Form& form, uint64_t expected,
                         std::vector<Mat>& gens) {
  std::vector<Perm> perms;
  for (const Mat& g : gens) perms.push_back(matrix_vector_perm(g));
  uint32_t degree = perms.empty() ? 0 : perms[0].degree();
  PermGroup chain(degree, perms);
  while (chain.order() < expected) {
    std::vector<uint32_t> e(size_t(n) * n, 0);
    bool found = false;
    for (;;) {
      Mat cand(f, n, n);
      for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j)
          cand.at(i, j) = e[size_t(i) * n + j];
      if (preserves_form(cand, form) && cand.det() == 1) {
        Perm cp = matrix_vector_perm(cand);
        if (!chain.contains(cp)) {
          gens.push_back(cand);
          perms.push_back(cp);
          chain = PermGroup(degree, perms);
          found = true;
          break;
        }
      }
      int64_t k = int64_t(e.size()) - 1;
      while (k >= 0) {
        if (++e[size_t(k)] < f->size()) break;
        e[size_t(k)] = 0;
        --k;
      }
      if (k < 0) break;  // search space exhausted
    }
    if (!found)
      throw std::logic_error(name + ": cannot reach the expected order");
  }
  if (chain.order() != expected)
    throw std::logic_error(name + ": augmented past the expected order");
}

}  // namespace

GroupHandle symplectic_group(uint32_t m, uint32_t q) {
  if (m == 0) throw std::invalid_argument("symplectic_group: m = 0");
  PQ pq = factor_prime_power(q);
  FieldPtr f = Field::make(pq.p, pq.r);
  const uint32_t n = 2 * m;
  Form form = Form::standard_symplectic(f, m);

  // F_p-basis of F_q: the coefficient unit vectors have indices p^k
  std::vector<uint32_t> coeffs;
  for (uint32_t k = 0, idx = 1; k < pq.r; ++k, idx *= pq.p)
    coeffs.push_back(idx);

  // directions e_i and e_i + e_j
  std::vector<std::vector<uint32_t>> dirs;
  for (uint32_t i = 0; i < n; ++i) {
    std::vector<uint32_t> v(n, 0);
    v[i] = 1;
    dirs.push_back(v);
  }
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = i + 1; j < n; ++j) {
      std::vector<uint32_t> v(n, 0);
      v[i] = v[j] = 1;
      dirs.push_back(v);
    }

  std::vector<Mat> gens;
  for (const auto& v : dirs) {
    std::vector<uint32_t> jv = form.gram.apply(v);
    for (uint32_t c : coeffs) {
      Mat t = Mat::identity(f, n);
      for (uint32_t a = 0; a < n; ++a) {
        if (!v[a]) continue;
        uint32_t cv = f->mul(c, v[a]);
        for (uint32_t b = 0; b < n; ++b)
          if (jv[b]) t.at(a, b) = f->add(t.at(a, b), f->mul(cv, jv[b]));
      }
      gens.push_back(std::move(t));
    }
  }

  uint64_t expected = sp_order_formula(m, q);
  std::string name = "Sp" + std::to_string(n) + "(" + std::to_string(q) + ")";
  GroupHandle h = GroupHandle::matrix_group(name, f, n, std::move(gens),
                                            std::move(form), expected);
  if (should_certify(*f, n, expected)) h.action();  // certifies, fatal on bug
  return h;
}

namespace {

GroupHandle build_unitary(uint32_t n, uint32_t q, bool full_unitary) {
  if (n < 2) throw std::invalid_argument("unitary groups need n >= 2");
  PQ pq = factor_prime_power(q);
  FieldPtr f = Field::make_quadratic(pq.p, pq.r);  // F_{q^2} with conj
  Form form = Form::standard_hermitian(f, n);

  std::vector<uint32_t> coeffs = trace_zero_basis(*f);

  // all normalized isotropic directions h(v, v) = 0
  std::vector<std::vector<uint32_t>> dirs;
  enumerate_projective(f, n, 1u << 24, [&](const ProjPoint& v) {
    uint32_t norm = 0;
    for (uint32_t c : v) norm = f->add(norm, f->mul(c, f->conj(c)));
    if (norm == 0) dirs.push_back(v);
  });

  std::vector<Mat> gens;
  for (const auto& v : dirs) {
    std::vector<uint32_t> vbar(n);
    for (uint32_t b = 0; b < n; ++b) vbar[b] = f->conj(v[b]);
    for (uint32_t c : coeffs) {
      Mat t = Mat::identity(f, n);
      for (uint32_t a = 0; a < n; ++a) {
        if (!v[a]) continue;
        uint32_t cv = f->mul(c, v[a]);
        for (uint32_t b = 0; b < n; ++b)
          if (vbar[b]) t.at(a, b) = f->add(t.at(a, b), f->mul(cv, vbar[b]));
      }
      if (t.det() != 1)
        throw std::logic_error("unitary transvection with det != 1");
      gens.push_back(std::move(t));
    }
  }

  uint64_t expected = su_order_formula(n, q);
  if (should_certify(*f, n, expected))
    augment_to_expected("SU" + std::to_string(n), f, n, form, expected, gens);

  if (full_unitary) {
    uint32_t zeta = least_of_order(*f, q + 1);
    Mat d = Mat::identity(f, n);
    d.at(0, 0) = zeta;
    gens.push_back(std::move(d));
    expected *= q + 1;
  }

  std::string base = full_unitary ? "U" : "SU";
  std::string name =
      base + std::to_string(n) + "(" + std::to_string(q) + ")";
  GroupHandle h = GroupHandle::matrix_group(name, f, n, std::move(gens),
                                            std::move(form), expected);
  if (should_certify(*f, n, expected)) h.action();
  return h;
}

}  // namespace

GroupHandle special_unitary_group(uint32_t n, uint32_t q) {
  return build_unitary(n, q, false);
}

GroupHandle unitary_group(uint32_t n, uint32_t q) {
  return build_unitary(n, q, true);
}

ProjectiveImage projective_image(const GroupHandle& g) {
  if (g.kind() != GroupKind::matrix)
    throw std::logic_error("projective_image: matrix groups only");
  ProjectiveImage image;
  image.points = projective_points(g.field(), g.dim(), 1u << 24);
  std::map<ProjPoint, uint32_t> index;
  for (uint32_t i = 0; i < image.points.size(); ++i)
    index.emplace(image.points[i], i);
  std::vector<Perm> pgens;
  for (const Mat& mg : g.matrix_generators()) {
    std::vector<uint32_t> img(image.points.size());
    for (uint32_t i = 0; i < image.points.size(); ++i)
      img[i] = index.at(normalize_point(*g.field(), mg.apply(image.points[i])));
    pgens.emplace_back(std::move(img));
  }
  image.group = PermGroup(uint32_t(image.points.size()), std::move(pgens));
  image.scalar_count = g.scalar_count();
  image.source_order = g.order();
  if (image.group.order() * image.scalar_count != image.source_order)
    throw std::logic_error(g.name() +
                           ": projective image order times scalar count "
                           "does not recover the group order");
  return image;
}

std::vector<std::vector<int>> e6_roots() {
  // Bourbaki numbering: chain 1-3-4-5-6 with node 2 attached to 4
  static const int A[6][6] = {
      {2, 0, -1, 0, 0, 0},  {0, 2, 0, -1, 0, 0}, {-1, 0, 2, -1, 0, 0},
      {0, -1, -1, 2, -1, 0}, {0, 0, 0, -1, 2, -1}, {0, 0, 0, 0, -1, 2}};
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> queue;
  for (int i = 0; i < 6; ++i) {
    std::vector<int> e(6, 0);
    e[size_t(i)] = 1;
    roots.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    std::vector<int> r = queue.back();
    queue.pop_back();
    for (int i = 0; i < 6; ++i) {
      int pairing = 0;
      for (int j = 0; j < 6; ++j) pairing += A[i][j] * r[size_t(j)];
      std::vector<int> s = r;
      s[size_t(i)] -= pairing;
      if (roots.insert(s).second) queue.push_back(s);
    }
  }
  if (roots.size() != 72)
    throw std::logic_error("E6 reflection closure produced " +
                           std::to_string(roots.size()) + " roots, not 72");
  return {roots.begin(), roots.end()};
}

PermGroup weyl_e6() {
  static const int A[6][6] = {
      {2, 0, -1, 0, 0, 0},  {0, 2, 0, -1, 0, 0}, {-1, 0, 2, -1, 0, 0},
      {0, -1, -1, 2, -1, 0}, {0, 0, 0, -1, 2, -1}, {0, 0, 0, 0, -1, 2}};
  auto roots = e6_roots();
  std::map<std::vector<int>, uint32_t> index;
  for (uint32_t i = 0; i < roots.size(); ++i) index.emplace(roots[i], i);
  std::vector<Perm> gens;
  for (int i = 0; i < 6; ++i) {
    std::vector<uint32_t> img(roots.size());
    for (uint32_t k = 0; k < roots.size(); ++k) {
      int pairing = 0;
      for (int j = 0; j < 6; ++j) pairing += A[i][j] * roots[k][size_t(j)];
      std::vector<int> s = roots[k];
      s[size_t(i)] -= pairing;
      img[k] = index.at(s);
    }
    gens.emplace_back(std::move(img));
  }
  PermGroup w(uint32_t(roots.size()), std::move(gens));
  if (w.order() != 51840)
    throw std::logic_error("W(E6) chain order is not 51840");
  return w;
}

OrbitStabilizer orbit_stabilizer(
    const PermGroup& g,
    const std::function<uint64_t(const Perm&, uint64_t)>& action, uint64_t x) {
  std::vector<uint64_t> orbit{x};
  // parent pointers: point -> (previous point, generator index)
  std::unordered_map<uint64_t, std::pair<uint64_t, uint32_t>> parent;
  parent.emplace(x, std::make_pair(x, UINT32_MAX));
  const auto& gens = g.generators();
  for (size_t qi = 0; qi < orbit.size(); ++qi)
    for (uint32_t gi = 0; gi < gens.size(); ++gi) {
      uint64_t y = action(gens[gi], orbit[qi]);
      if (parent.emplace(y, std::make_pair(orbit[qi], gi)).second)
        orbit.push_back(y);
    }
  auto transversal = [&](uint64_t pt) {
    Perm t = Perm::identity(g.degree());
    uint64_t y = pt;
    for (;;) {
      auto [prev, gi] = parent.at(y);
      if (gi == UINT32_MAX) break;
      t = t * gens[gi];
      y = prev;
    }
    return t;
  };
  std::vector<Perm> sgens;
  std::set<std::vector<uint32_t>> seen;
  for (uint64_t pt : orbit) {
    Perm tp = transversal(pt);
    for (const Perm& gen : gens) {
      Perm u = transversal(action(gen, pt)).inverse() * (gen * tp);
      if (u.is_identity()) continue;
      if (seen.insert(u.images()).second) sgens.push_back(u);
    }
  }
  return {orbit.size(), PermGroup(g.degree(), std::move(sgens))};
}

namespace {
struct PairHash {
  size_t operator()(const std::vector<uint32_t>& v) const {
    uint64_t h = 1469598103934665603ull;
    for (uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return size_t(h);
  }
};

std::vector<uint32_t> flatten(const Perm& a, const Perm& b) {
  std::vector<uint32_t> key = a.images();
  key.insert(key.end(), b.images().begin(), b.images().end());
  return key;
}
}  // namespace

CentralProductInfo central_product(const CentralProductSpec& spec,
                                   uint64_t cap) {
  const PermGroup& G = *spec.g;
  const PermGroup& H = *spec.h;
  if (spec.z1.size() != spec.z2.size() || spec.z1.empty())
    throw std::invalid_argument("central subgroup lists mismatched");
  const size_t zn = spec.z1.size();

  // centrality: z commutes with every generator, and z lies in the group
  for (const Perm& z : spec.z1) {
    if (!G.contains(z)) throw std::invalid_argument("Z1 not inside G");
    for (const Perm& g : G.generators())
      if (g * z != z * g) throw std::invalid_argument("Z1 not central in G");
  }
  for (const Perm& z : spec.z2) {
    if (!H.contains(z)) throw std::invalid_argument("Z2 not inside H");
    for (const Perm& h : H.generators())
      if (h * z != z * h) throw std::invalid_argument("Z2 not central in H");
  }
  // phi (z1[i] -> z2[i]) must be a bijective homomorphism on the closed
  // multiplication tables
  for (size_t i = 0; i < zn; ++i)
    for (size_t j = 0; j < zn; ++j) {
      Perm p1 = spec.z1[i] * spec.z1[j];
      size_t k = zn;
      for (size_t t = 0; t < zn; ++t)
        if (spec.z1[t] == p1) {
          k = t;
          break;
        }
      if (k == zn) throw std::invalid_argument("Z1 not closed");
      if (spec.z2[i] * spec.z2[j] != spec.z2[k])
        throw std::invalid_argument("phi is not a homomorphism");
    }
  for (size_t i = 0; i < zn; ++i)
    for (size_t j = i + 1; j < zn; ++j)
      if (spec.z2[i] == spec.z2[j] || spec.z1[i] == spec.z1[j])
        throw std::invalid_argument("phi is not a bijection");

  CentralProductInfo info;
  info.name = spec.name;
  info.g_order = G.order();
  info.h_order = H.order();
  info.z_size = zn;
  uint64_t predicted = info.g_order * info.h_order / zn;
  if (predicted > cap) throw BudgetExceeded("central product too large");

  std::vector<Perm> z2inv;
  for (const Perm& z : spec.z2) z2inv.push_back(z.inverse());

  // canonical coset representative: lexicographically least first
  // component across the |Z1| pair variants
  auto canon = [&](Perm a, Perm b) {
    Perm besta = a, bestb = b;
    for (size_t i = 0; i < zn; ++i) {
      Perm ca = a * spec.z1[i];
      if (ca < besta) {
        besta = ca;
        bestb = b * z2inv[i];
      }
    }
    return std::make_pair(besta, bestb);
  };

  std::unordered_set<std::vector<uint32_t>, PairHash> visited;
  std::vector<std::pair<Perm, Perm>> queue;
  auto push = [&](const Perm& a, const Perm& b) {
    auto [ca, cb] = canon(a, b);
    if (visited.insert(flatten(ca, cb)).second) queue.emplace_back(ca, cb);
  };
  push(Perm::identity(G.degree()), Perm::identity(H.degree()));
  while (!queue.empty()) {
    auto [a, b] = queue.back();
    queue.pop_back();
    if (visited.size() > predicted)
      throw std::logic_error("central product overshot the order law");
    for (const Perm& g : G.generators()) push(a * g, b);
    for (const Perm& h : H.generators()) push(a, b * h);
  }
  info.order = visited.size();
  info.order_law = info.order == predicted;

  // natural-map injectivity, exhaustively on both components
  {
    std::unordered_set<std::vector<uint32_t>, PairHash> seen;
    bool ok = true;
    Perm idh = Perm::identity(H.degree());
    for (const Perm& a : G.elements()) {
      auto [ca, cb] = canon(a, idh);
      if (!seen.insert(flatten(ca, cb)).second) {
        ok = false;
        break;
      }
    }
    info.g_injective = ok;
  }
  {
    std::unordered_set<std::vector<uint32_t>, PairHash> seen;
    bool ok = true;
    Perm idg = Perm::identity(G.degree());
    for (const Perm& b : H.elements()) {
      auto [ca, cb] = canon(idg, b);
      if (!seen.insert(flatten(ca, cb)).second) {
        ok = false;
        break;
      }
    }
    info.h_injective = ok;
  }
  return info;
}

}  // namespace rdlab
