#include "rdlab/perm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace rdlab {

Perm::Perm(std::vector<uint32_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (uint32_t v : img_) {
    if (v >= img_.size() || seen[v])
      throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

Perm Perm::identity(uint32_t n) {
  std::vector<uint32_t> img(n);
  for (uint32_t i = 0; i < n; ++i) img[i] = i;
  return Perm(std::move(img));
}

Perm Perm::from_cycles(uint32_t n,
                       const std::vector<std::vector<uint32_t>>& cycles) {
  Perm p = identity(n);
  for (const auto& c : cycles) {
    for (size_t i = 0; i < c.size(); ++i) {
      uint32_t from = c[i];
      uint32_t to = c[(i + 1) % c.size()];
      if (from >= n || to >= n) throw std::invalid_argument("cycle point");
      p.img_[from] = to;
    }
  }
  // validate via ctor rules
  return Perm(std::move(p.img_));
}

Perm Perm::operator*(const Perm& o) const {
  if (degree() != o.degree()) throw std::invalid_argument("degree mismatch");
  std::vector<uint32_t> img(degree());
  for (uint32_t x = 0; x < degree(); ++x) img[x] = img_[o.img_[x]];
  Perm p;
  p.img_ = std::move(img);
  return p;
}

Perm Perm::inverse() const {
  std::vector<uint32_t> img(degree());
  for (uint32_t x = 0; x < degree(); ++x) img[img_[x]] = x;
  Perm p;
  p.img_ = std::move(img);
  return p;
}

bool Perm::is_identity() const {
  for (uint32_t x = 0; x < degree(); ++x)
    if (img_[x] != x) return false;
  return true;
}

uint32_t Perm::first_moved() const {
  for (uint32_t x = 0; x < degree(); ++x)
    if (img_[x] != x) return x;
  return degree();
}

std::string Perm::render() const {
  std::ostringstream os;
  std::vector<bool> done(degree(), false);
  bool any = false;
  for (uint32_t x = 0; x < degree(); ++x) {
    if (done[x] || img_[x] == x) continue;
    any = true;
    os << '(';
    uint32_t y = x;
    bool first = true;
    while (!done[y]) {
      if (!first) os << ' ';
      os << y;
      done[y] = true;
      first = false;
      y = img_[y];
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

uint64_t perm_hash(const Perm& p) {
  uint64_t h = 1469598103934665603ull;
  for (uint32_t v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {
struct ImgHash {
  size_t operator()(const std::vector<uint32_t>& v) const {
    uint64_t h = 1469598103934665603ull;
    for (uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return size_t(h);
  }
};
}  // namespace

PermGroup::PermGroup(uint32_t degree, std::vector<Perm> gens)
    : degree_(degree), gens_(std::move(gens)) {
  for (const Perm& g : gens_)
    if (g.degree() != degree_)
      throw std::invalid_argument("generator degree mismatch");
  build();
}

void PermGroup::build() {
  levels_.clear();
  std::vector<Perm> g0;
  for (const Perm& g : gens_)
    if (!g.is_identity()) g0.push_back(g);
  if (g0.empty()) return;
  levels_.emplace_back();
  levels_[0].base = g0[0].first_moved();
  levels_[0].gens = std::move(g0);
  schreier_sims(0);
}

void PermGroup::rebuild_orbit(size_t k) {
  Level& L = levels_[k];
  L.orbit.clear();
  L.parent_gen.assign(degree_, -1);
  L.parent_pt.assign(degree_, 0);
  L.parent_gen[L.base] = -2;
  L.orbit.push_back(L.base);
  for (size_t qi = 0; qi < L.orbit.size(); ++qi) {
    uint32_t x = L.orbit[qi];
    for (size_t gi = 0; gi < L.gens.size(); ++gi) {
      uint32_t y = L.gens[gi](x);
      if (L.parent_gen[y] == -1) {
        L.parent_gen[y] = int32_t(gi);
        L.parent_pt[y] = x;
        L.orbit.push_back(y);
      }
    }
  }
}

Perm PermGroup::transversal(size_t k, uint32_t pt) const {
  const Level& L = levels_[k];
  Perm t = Perm::identity(degree_);
  uint32_t y = pt;
  while (L.parent_gen[y] != -2) {
    t = t * L.gens[size_t(L.parent_gen[y])];  // applied before what we have
    y = L.parent_pt[y];
  }
  // t currently maps base -> pt when read right-to-left from base's side:
  // chain was built pt <- parent <- ... <- base, and we multiplied so that
  // the generator nearest the base is applied first.
  return t;
}

std::pair<Perm, size_t> PermGroup::strip(const Perm& g, size_t start) const {
  Perm h = g;
  for (size_t i = start; i < levels_.size(); ++i) {
    if (h.is_identity()) return {h, i};
    uint32_t x = h(levels_[i].base);
    if (levels_[i].parent_gen[x] == -1) return {h, i};
    h = transversal(i, x).inverse() * h;
  }
  return {h, levels_.size()};
}

void PermGroup::schreier_sims(size_t k) {
  rebuild_orbit(k);
  for (size_t oi = 0; oi < levels_[k].orbit.size(); ++oi) {
    uint32_t x = levels_[k].orbit[oi];
    Perm tx = transversal(k, x);
    for (size_t gi = 0; gi < levels_[k].gens.size(); ++gi) {
      const Perm s = levels_[k].gens[gi];  // copy: recursion may reallocate
      uint32_t sx = s(x);
      Perm schreier = transversal(k, sx).inverse() * (s * tx);
      auto [h, j] = strip(schreier, k + 1);
      if (h.is_identity()) continue;
      if (j == levels_.size()) {
        levels_.emplace_back();
        levels_.back().base = h.first_moved();
        rebuild_orbit(levels_.size() - 1);
      }
      for (size_t l = k + 1; l <= j; ++l) levels_[l].gens.push_back(h);
      for (size_t l = j; l > k; --l) schreier_sims(l);
    }
  }
}

uint64_t PermGroup::order() const {
  uint64_t n = 1;
  for (const Level& L : levels_) n *= L.orbit.size();
  return n;
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  auto [h, j] = strip(g, 0);
  (void)j;
  return h.is_identity();
}

std::vector<uint32_t> PermGroup::base() const {
  std::vector<uint32_t> b;
  for (const Level& L : levels_) b.push_back(L.base);
  return b;
}

std::vector<uint32_t> PermGroup::orbit_of(uint32_t x) const {
  std::vector<uint32_t> orbit{x};
  std::vector<bool> seen(degree_, false);
  seen[x] = true;
  for (size_t qi = 0; qi < orbit.size(); ++qi)
    for (const Perm& g : gens_) {
      uint32_t y = g(orbit[qi]);
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::vector<std::vector<uint32_t>> PermGroup::orbits() const {
  std::vector<std::vector<uint32_t>> out;
  std::vector<bool> seen(degree_, false);
  for (uint32_t x = 0; x < degree_; ++x) {
    if (seen[x]) continue;
    auto orb = orbit_of(x);
    for (uint32_t y : orb) seen[y] = true;
    out.push_back(std::move(orb));
  }
  return out;
}

bool PermGroup::is_transitive() const {
  if (degree_ == 0) return true;
  return orbit_of(0).size() == degree_;
}

bool PermGroup::is_2transitive() const {
  if (degree_ < 2) return false;
  if (!is_transitive()) return false;
  return point_stabilizer(0).orbit_of(1).size() == degree_ - 1;
}

bool PermGroup::is_abelian() const {
  for (size_t i = 0; i < gens_.size(); ++i)
    for (size_t j = i + 1; j < gens_.size(); ++j)
      if (gens_[i] * gens_[j] != gens_[j] * gens_[i]) return false;
  return true;
}

PermGroup PermGroup::point_stabilizer(uint32_t x) const {
  // Schreier generators over the natural orbit of x
  std::vector<uint32_t> orbit{x};
  std::vector<int32_t> pgen(degree_, -1);
  std::vector<uint32_t> ppt(degree_, 0);
  pgen[x] = -2;
  for (size_t qi = 0; qi < orbit.size(); ++qi)
    for (size_t gi = 0; gi < gens_.size(); ++gi) {
      uint32_t y = gens_[gi](orbit[qi]);
      if (pgen[y] == -1) {
        pgen[y] = int32_t(gi);
        ppt[y] = orbit[qi];
        orbit.push_back(y);
      }
    }
  auto trans = [&](uint32_t pt) {
    Perm t = Perm::identity(degree_);
    uint32_t y = pt;
    while (pgen[y] != -2) {
      t = t * gens_[size_t(pgen[y])];
      y = ppt[y];
    }
    return t;
  };
  std::vector<Perm> sgens;
  std::unordered_set<std::vector<uint32_t>, ImgHash> seen;
  for (uint32_t pt : orbit) {
    Perm tp = trans(pt);
    for (const Perm& g : gens_) {
      Perm u = trans(g(pt)).inverse() * (g * tp);
      if (u.is_identity()) continue;
      if (seen.insert(u.images()).second) sgens.push_back(u);
    }
  }
  return PermGroup(degree_, std::move(sgens));
}

PermGroup PermGroup::normal_closure(const std::vector<Perm>& hgens) const {
  std::vector<Perm> cgens;
  for (const Perm& h : hgens)
    if (!h.is_identity()) cgens.push_back(h);
  PermGroup K(degree_, cgens);
  std::vector<Perm> work = cgens;
  while (!work.empty()) {
    Perm h = work.back();
    work.pop_back();
    for (const Perm& g : gens_) {
      Perm c = g * h * g.inverse();
      if (!K.contains(c)) {
        cgens.push_back(c);
        work.push_back(c);
        K = PermGroup(degree_, cgens);
      }
    }
  }
  return K;
}

PermGroup PermGroup::derived_subgroup() const {
  std::vector<Perm> comms;
  for (size_t i = 0; i < gens_.size(); ++i)
    for (size_t j = 0; j < gens_.size(); ++j) {
      if (i == j) continue;
      Perm c = gens_[i].inverse() * gens_[j].inverse() * gens_[i] * gens_[j];
      if (!c.is_identity()) comms.push_back(c);
    }
  return normal_closure(comms);
}

void PermGroup::elements_rec(size_t k, const Perm& acc,
                             std::vector<Perm>& out) const {
  if (k == levels_.size()) {
    out.push_back(acc);
    return;
  }
  for (uint32_t pt : levels_[k].orbit)
    elements_rec(k + 1, acc * transversal(k, pt), out);
}

std::vector<Perm> PermGroup::elements(uint64_t cap) const {
  if (order() > cap) throw std::runtime_error("element enumeration too large");
  std::vector<Perm> out;
  out.reserve(size_t(order()));
  elements_rec(0, Perm::identity(degree_), out);
  return out;
}

std::vector<Perm> PermGroup::conjugacy_class_reps(uint64_t cap) const {
  std::vector<Perm> elts = elements(cap);
  std::unordered_set<std::vector<uint32_t>, ImgHash> visited;
  std::vector<Perm> reps;
  for (const Perm& e : elts) {
    if (visited.count(e.images())) continue;
    reps.push_back(e);
    // BFS over the conjugation orbit
    std::vector<Perm> queue{e};
    visited.insert(e.images());
    while (!queue.empty()) {
      Perm a = queue.back();
      queue.pop_back();
      for (const Perm& g : gens_) {
        Perm c = g * a * g.inverse();
        if (visited.insert(c.images()).second) queue.push_back(std::move(c));
      }
    }
  }
  return reps;
}

bool PermGroup::is_simple(uint64_t cap) const {
  uint64_t n = order();
  if (n == 1) return false;
  for (const Perm& rep : conjugacy_class_reps(cap)) {
    if (rep.is_identity()) continue;
    if (normal_closure({rep}).order() != n) return false;
  }
  return true;
}

}  // namespace rdlab
