#include <random>
#include <sstream>

#include "rdlab/checks.hpp"
#include "rdlab/grouplab.hpp"
#include "rdlab/matrix.hpp"
#include "rdlab/mvpoly.hpp"
#include "rdlab/projgeom.hpp"

namespace rdlab::checks {

namespace {

std::string clip(const std::string& s, size_t limit = 200) {
  if (s.size() <= limit) return s;
  return s.substr(0, limit) + "...";
}

// pullback of f under x -> g x
MultiPoly pullback(const MultiPoly& f, const Mat& g) {
  return f.linear_substitute(g.data(), g.rows());
}

// deterministic product words over the generator list
std::vector<Mat> random_words(const std::vector<Mat>& gens, uint32_t count,
                              uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Mat> words;
  for (uint32_t w = 0; w < count; ++w) {
    uint32_t len = 2 + uint32_t(rng() % 5);
    Mat acc = gens[rng() % gens.size()];
    for (uint32_t i = 1; i < len; ++i) acc = acc * gens[rng() % gens.size()];
    words.push_back(std::move(acc));
  }
  return words;
}

// shared core: Delta(g) = f(gx) - f(x) must vanish identically for every
// matrix in `mats`; on the first nonzero Delta, fills the witness and
// reports fail
bool all_deltas_zero(const MultiPoly& f, const std::vector<Mat>& mats,
                     const char* label, ordered_json& witness) {
  for (size_t i = 0; i < mats.size(); ++i) {
    MultiPoly delta = pullback(f, mats[i]) - f;
    if (!delta.is_zero()) {
      witness["kind"] = label;
      witness["index"] = i;
      witness["matrix"] = mats[i].render();
      witness["delta"] = clip(delta.render());
      witness["delta_terms"] = delta.term_count();
      return false;
    }
  }
  return true;
}

}  // namespace

CheckReport check_symplectic_invariance(uint32_t m, uint32_t q,
                                        uint32_t extra_random_words,
                                        uint64_t seed) {
  CheckReport rep;
  rep.id = "prop3.1a.sympl-invariance";
  rep.paper_anchor =
      "Prop. 3.1(a) proof: f(x) = omega(x, x^q) is Sp_2m(F_q)-invariant";
  rep.params = {{"m", m}, {"q", q}, {"words", extra_random_words}};
  rep.seed = seed;

  GroupHandle sp = symplectic_group(m, q);
  MultiPoly f = MultiPoly::symplectic_form(sp.field(), m);
  const auto& gens = sp.matrix_generators();

  bool ok = all_deltas_zero(f, gens, "generator", rep.witness);
  uint32_t words_checked = 0;
  if (ok && extra_random_words) {
    auto words = random_words(gens, extra_random_words, seed);
    ok = all_deltas_zero(f, words, "random word", rep.witness);
    words_checked = uint32_t(words.size());
  }

  rep.stats = {{"generators", gens.size()},
               {"random_words", words_checked},
               {"form_terms", f.term_count()},
               {"group_order", sp.order()}};
  if (ok) rep.witness = {{"delta", "0 for every generator and word"}};
  rep.status = ok ? CheckStatus::pass : CheckStatus::fail;
  return rep;
}

CheckReport check_symplectic_invariance_negative() {
  CheckReport rep;
  rep.id = "neg.sympl-invariance";
  rep.paper_anchor =
      "Prop. 3.1(a) negative control: diag(2,1,1,1) is not symplectic";
  rep.params = {{"m", 2}, {"q", 3}, {"generator", "diag(2,1,1,1)"}};

  FieldPtr f3 = Field::make(3, 1);
  MultiPoly f = MultiPoly::symplectic_form(f3, 2);
  Mat g = Mat::identity(f3, 4);
  g.at(0, 0) = 2;

  Form omega = Form::standard_symplectic(f3, 2);
  MultiPoly delta = pullback(f, g) - f;
  // the control must both break the form and produce a nonzero Delta
  bool broke = !preserves_form(g, omega) && !delta.is_zero();
  rep.witness = {{"matrix", g.render()},
                 {"preserves_form", preserves_form(g, omega)},
                 {"delta", clip(delta.render())},
                 {"delta_terms", delta.term_count()}};
  rep.stats = {{"expected", "fail with nonzero Delta"}};
  rep.status = broke ? CheckStatus::fail : CheckStatus::error;
  return rep;
}

CheckReport check_unitary_invariance(uint32_t n, uint32_t q,
                                     uint32_t extra_random_words,
                                     uint64_t seed) {
  CheckReport rep;
  rep.id = "prop3.1b.unit-invariance";
  rep.paper_anchor =
      "Prop. 3.1(b) proof: Delta(x) := f(g x) - f(x) is the zero polynomial";
  rep.params = {{"n", n}, {"q", q}, {"words", extra_random_words}};
  rep.seed = seed;

  GroupHandle u = unitary_group(n, q);
  MultiPoly f = MultiPoly::hermitian_norm(u.field(), n, q);
  const auto& gens = u.matrix_generators();

  // authoritative route: exact symbolic Delta = 0
  bool ok = all_deltas_zero(f, gens, "generator", rep.witness);
  uint32_t words_checked = 0;
  if (ok && extra_random_words) {
    auto words = random_words(gens, extra_random_words, seed);
    ok = all_deltas_zero(f, words, "random word", rep.witness);
    words_checked = uint32_t(words.size());
  }

  // corroborating route: deg Delta <= q+1 < q^2+1, so Delta = 0 follows
  // from f(g x) = f(x) at every rational point of P^{n-1}(F_{q^2})
  uint64_t route_points = 0;
  bool route_ok = true;
  std::vector<uint32_t> bad_point;
  enumerate_projective(u.field(), n, 1u << 24, [&](const ProjPoint& x) {
    ++route_points;
    if (!route_ok) return;
    uint32_t fx = f.evaluate(x);
    for (const Mat& g : gens) {
      if (f.evaluate(g.apply(x)) != fx) {
        route_ok = false;
        bad_point = x;
        return;
      }
    }
  });
  if (!route_ok && rep.witness.empty()) {
    rep.witness = {{"kind", "pointwise"}, {"point", bad_point}};
  }

  rep.stats = {{"generators", gens.size()},
               {"random_words", words_checked},
               {"degree_bound", q + 1},
               {"mr98_threshold", q * q + 1},
               {"rational_points_checked", route_points},
               {"pointwise_invariant", route_ok}};
  if (n == 3 && q == 2) {
    // small enough to corroborate with the minimal-degree computation
    CheckReport mv = check_min_vanishing_degree(n, q);
    rep.stats["min_vanishing_degree"] = mv.stats["min_degree"];
  }
  if (ok && route_ok)
    rep.witness = {{"delta", "0 for every generator and word"}};
  rep.status = (ok && route_ok) ? CheckStatus::pass : CheckStatus::fail;
  return rep;
}

CheckReport check_unitary_invariance_negative() {
  CheckReport rep;
  rep.id = "neg.unit-invariance";
  rep.paper_anchor =
      "Prop. 3.1(b) negative control: a non-unitary diagonal matrix";
  rep.params = {{"n", 3}, {"q", 3}};

  FieldPtr f9 = Field::make_quadratic(3, 1);
  const uint32_t q = 3;
  MultiPoly f = MultiPoly::hermitian_norm(f9, 3, q);
  // least index c with c^(q+1) != 1 gives a diagonal non-unitary matrix
  uint32_t c = 0;
  for (uint32_t x = 1; x < f9->size(); ++x)
    if (f9->pow(x, q + 1) != 1) {
      c = x;
      break;
    }
  Mat g = Mat::identity(f9, 3);
  g.at(0, 0) = c;

  MultiPoly delta = pullback(f, g) - f;
  // Delta must be nonzero and must be seen by some rational point
  std::vector<uint32_t> bad_point;
  enumerate_projective(f9, 3, 1u << 16, [&](const ProjPoint& x) {
    if (bad_point.empty() && delta.evaluate(x) != 0) bad_point = x;
  });
  bool broke = !delta.is_zero() && !bad_point.empty();
  rep.witness = {{"matrix", g.render()},
                 {"delta", clip(delta.render())},
                 {"nonvanishing_point", bad_point}};
  rep.stats = {{"expected", "fail with nonzero Delta and a witness point"},
               {"c", c}};
  rep.status = broke ? CheckStatus::fail : CheckStatus::error;
  return rep;
}

namespace {

// exponent vectors of total degree d in n variables, lexicographic
void degree_d_monomials(uint32_t n, uint32_t d,
                        std::vector<std::vector<uint8_t>>& out) {
  std::vector<uint8_t> e(n, 0);
  std::function<void(uint32_t, uint32_t)> rec = [&](uint32_t i,
                                                    uint32_t left) {
    if (i + 1 == n) {
      e[i] = uint8_t(left);
      out.push_back(e);
      return;
    }
    for (uint32_t v = 0; v <= left; ++v) {
      e[i] = uint8_t(v);
      rec(i + 1, left - v);
    }
  };
  rec(0, d);
}

}  // namespace

CheckReport check_min_vanishing_degree(uint32_t n, uint32_t q) {
  CheckReport rep;
  rep.id = "prop3.1b.min-vanish";
  rep.paper_anchor =
      "Prop. 3.1(b) proof: the minimal degree of a nonzero form vanishing "
      "at every rational point is q^2 + 1";
  uint32_t expected = q * q + 1;
  rep.params = {{"n", n}, {"q", q}, {"expected", expected}};

  auto pq = [&] {
    for (uint32_t p = 2;; ++p)
      if (is_prime(p) && q % p == 0) {
        uint32_t r = 0, x = q;
        while (x > 1) x /= p, ++r;
        return std::make_pair(p, r);
      }
  }();
  FieldPtr f = Field::make_quadratic(pq.first, pq.second);  // F_{q^2}
  auto points = projective_points(f, n, 1u << 20);

  ordered_json ranks = ordered_json::array();
  uint32_t found = 0;
  MultiPoly kernel_poly(f, n);
  for (uint32_t d = 1; d <= expected + 2 && !found; ++d) {
    std::vector<std::vector<uint8_t>> monos;
    degree_d_monomials(n, d, monos);
    Mat ev(f, uint32_t(points.size()), uint32_t(monos.size()));
    for (uint32_t i = 0; i < points.size(); ++i)
      for (uint32_t j = 0; j < monos.size(); ++j) {
        uint32_t v = 1;
        for (uint32_t k = 0; k < n; ++k)
          v = f->mul(v, f->pow(points[i][k], monos[j][k]));
        ev.at(i, j) = v;
      }
    uint32_t rank = ev.rank();
    ranks.push_back({{"d", d},
                     {"monomials", monos.size()},
                     {"rank", rank},
                     {"kernel_dim", monos.size() - rank}});
    if (rank < monos.size()) {
      found = d;
      auto basis = ev.kernel_basis();
      for (uint32_t j = 0; j < monos.size(); ++j)
        if (basis[0][j])
          kernel_poly = kernel_poly + MultiPoly::monomial(
                                          f, n, Monomial{monos[j]}, basis[0][j]);
    }
  }

  bool ok = found == expected;
  rep.stats = {{"points", points.size()},
               {"min_degree", found},
               {"ranks", ranks}};
  if (found) {
    // re-verify the kernel witness by direct evaluation
    bool vanishes = true;
    for (const auto& x : points)
      if (kernel_poly.evaluate(x) != 0) vanishes = false;
    ok = ok && vanishes && !kernel_poly.is_zero();
    rep.witness = {{"kernel_polynomial", clip(kernel_poly.render())},
                   {"vanishes_everywhere", vanishes}};
  }
  if (n >= 2 && q == 2) {
    // the classical witness x1^4 x2 - x1 x2^4 (a^4 = a in F_4)
    MultiPoly w =
        MultiPoly::monomial(f, n, Monomial{[&] {
                              std::vector<uint8_t> e(n, 0);
                              e[0] = 4;
                              e[1] = 1;
                              return e;
                            }()},
                            1) -
        MultiPoly::monomial(f, n, Monomial{[&] {
                              std::vector<uint8_t> e(n, 0);
                              e[0] = 1;
                              e[1] = 4;
                              return e;
                            }()},
                            1);
    bool wv = true;
    for (const auto& x : points)
      if (w.evaluate(x) != 0) wv = false;
    rep.stats["classical_witness_degree"] = w.degree();
    rep.stats["classical_witness_vanishes"] = wv;
    ok = ok && wv && w.degree() == expected;
  }
  rep.status = ok ? CheckStatus::pass : CheckStatus::fail;
  return rep;
}

namespace {

// common smoothness core: checks the gradient against sign * (L x)^q
// coordinatewise and enumerates singular points over the tower
CheckReport smoothness_core(const char* id, const char* anchor,
                            ordered_json params, const FieldPtr& f,
                            const MultiPoly& poly, const Mat& lmap,
                            const std::vector<uint32_t>& signs, uint32_t q,
                            uint32_t tower_depth) {
  CheckReport rep;
  rep.id = id;
  rep.paper_anchor = anchor;
  rep.params = std::move(params);

  const uint32_t n = poly.nvars();
  bool symbolic_ok = true;
  for (uint32_t i = 0; i < n && symbolic_ok; ++i) {
    // closed form: signs[i] * (sum_j L[i][j] x_j)^q
    MultiPoly lin(f, n);
    for (uint32_t j = 0; j < n; ++j)
      if (lmap.at(i, j))
        lin = lin + MultiPoly::variable(f, n, j).scaled(lmap.at(i, j));
    MultiPoly closed = lin.pow(q).scaled(signs[i]);
    if (poly.partial_derivative(i) != closed) symbolic_ok = false;
  }
  bool lmap_invertible = lmap.det() != 0;

  ordered_json towers = ordered_json::array();
  bool enumerative_ok = true;
  ordered_json sing_witness;
  for (uint32_t m = 1; m <= tower_depth; ++m) {
    FieldPtr fm = m == 1 ? f : Field::make(f->p(), f->r() * m);
    MultiPoly pm = m == 1 ? poly : poly.embed_into(fm);
    auto sing = singular_points(pm);
    towers.push_back({{"m", m},
                      {"field_size", fm->size()},
                      {"points", projective_size(fm->size(), n)},
                      {"singular", sing.size()}});
    if (!sing.empty()) {
      enumerative_ok = false;
      sing_witness = {{"m", m}, {"point", sing.front()}};
    }
  }

  bool ok = symbolic_ok && lmap_invertible && enumerative_ok;
  rep.stats = {{"symbolic_gradient_matches", symbolic_ok},
               {"linear_map_invertible", lmap_invertible},
               {"towers", towers}};
  rep.witness = ok ? ordered_json{{"singular_points", "none"}}
                   : (enumerative_ok ? ordered_json{{"kind", "symbolic"}}
                                     : sing_witness);
  rep.status = ok ? CheckStatus::pass : CheckStatus::fail;
  return rep;
}

}  // namespace

CheckReport check_smoothness_symplectic(uint32_t m, uint32_t q,
                                        uint32_t tower_depth) {
  FieldPtr f = [&] {
    for (uint32_t p = 2;; ++p)
      if (is_prime(p) && q % p == 0) {
        uint32_t r = 0, x = q;
        while (x > 1) x /= p, ++r;
        return Field::make(p, r);
      }
  }();
  MultiPoly poly = MultiPoly::symplectic_form(f, m);
  // gradient: d/dx_{2i-1} = x_{2i}^q, d/dx_{2i} = -x_{2i-1}^q, so the
  // gradient is the coordinatewise q-th power of J x up to the sign of
  // (-1)^q absorbed below
  const uint32_t n = 2 * m;
  Mat lmap(f, n, n);
  std::vector<uint32_t> signs(n, 1);
  for (uint32_t i = 0; i < m; ++i) {
    lmap.at(2 * i, 2 * i + 1) = 1;      // row 2i selects x_{2i+1}
    lmap.at(2 * i + 1, 2 * i) = 1;      // row 2i+1 selects x_{2i}
    signs[2 * i + 1] = f->neg(1);
  }
  return smoothness_core(
      "prop3.1a.smoothness",
      "Prop. 3.1(a) proof: Jacobian criterion, f(x) = omega(x, x^q) cuts "
      "out a smooth hypersurface",
      {{"kind", "symplectic"}, {"m", m}, {"q", q}, {"tower_depth", tower_depth}},
      f, poly, lmap, signs, q, tower_depth);
}

CheckReport check_smoothness_hermitian(uint32_t n, uint32_t q,
                                       uint32_t tower_depth) {
  FieldPtr f = [&] {
    for (uint32_t p = 2;; ++p)
      if (is_prime(p) && q % p == 0) {
        uint32_t r = 0, x = q;
        while (x > 1) x /= p, ++r;
        return Field::make_quadratic(p, r);
      }
  }();
  MultiPoly poly = MultiPoly::hermitian_norm(f, n, q);
  // d/dx_i = (q+1) x_i^q = x_i^q since q+1 = 1 mod p
  Mat lmap = Mat::identity(f, n);
  std::vector<uint32_t> signs(n, 1);
  return smoothness_core(
      "prop3.1b.smoothness",
      "Prop. 3.1(b) proof: Jacobian criterion for the hermitian "
      "hypersurface, d/dx_i = (q+1) x_i^q with q+1 = 1 mod p",
      {{"kind", "hermitian"}, {"n", n}, {"q", q}, {"tower_depth", tower_depth}},
      f, poly, lmap, signs, q, tower_depth);
}

CheckReport check_smoothness_negative(uint32_t p) {
  CheckReport rep;
  rep.id = "neg.smoothness";
  rep.paper_anchor =
      "Prop. 3.1 negative control: f = x_1^p has an identically vanishing "
      "gradient in characteristic p";
  rep.params = {{"p", p}};

  FieldPtr f = Field::make(p, 1);
  MultiPoly poly = MultiPoly::variable(f, 2, 0).pow(p);
  bool grad_vanishes = poly.partial_derivative(0).is_zero() &&
                       poly.partial_derivative(1).is_zero();
  auto sing = singular_points(poly);
  rep.witness = {{"f", poly.render()},
                 {"gradient_identically_zero", grad_vanishes},
                 {"singular_points", sing.size()}};
  if (!sing.empty()) rep.witness["example"] = sing.front();
  rep.stats = {{"expected", "nonempty singular locus"}};
  rep.status = (grad_vanishes && !sing.empty()) ? CheckStatus::fail
                                                : CheckStatus::error;
  return rep;
}

}  // namespace rdlab::checks
