#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "rdlab/checks.hpp"
#include "rdlab/projgeom.hpp"

namespace rdlab::checks {

namespace {

std::pair<uint32_t, uint32_t> factor_pp(uint32_t q) {
  for (uint32_t p = 2; p <= q; ++p) {
    if (q % p) continue;
    uint32_t r = 0;
    uint64_t t = 1;
    while (t < q) {
      t *= p;
      ++r;
    }
    if (t != q) throw std::invalid_argument("q is not a prime power");
    return {p, r};
  }
  throw std::invalid_argument("bad field size");
}

VarietySystem y123_system(const FieldPtr& f, uint32_t n) {
  return VarietySystem::make({MultiPoly::elementary_symmetric(f, n, 1),
                              MultiPoly::elementary_symmetric(f, n, 2),
                              MultiPoly::elementary_symmetric(f, n, 3)});
}

std::vector<uint32_t> apply_perm(const std::vector<uint32_t>& y,
                                 const std::vector<uint32_t>& s) {
  std::vector<uint32_t> out(y.size());
  for (size_t i = 0; i < y.size(); ++i) out[i] = y[s[i]];
  return out;
}

// Y123 \ {vertex} -> P^{n-2}: subtract y_n * (1,..,1), drop the now-zero
// last coordinate, renormalize. Scaling-invariant by construction.
ProjPoint z_rep(const Field& f, const std::vector<uint32_t>& y) {
  uint32_t last = y.back();
  std::vector<uint32_t> u(y.size() - 1);
  for (size_t i = 0; i + 1 < y.size(); ++i) u[i] = f.sub(y[i], last);
  return normalize_point(f, u);
}

bool is_vertex(const std::vector<uint32_t>& y) {
  for (uint32_t c : y)
    if (c != y[0]) return false;
  return true;
}

std::vector<uint32_t> identity_perm(uint32_t n) {
  std::vector<uint32_t> s(n);
  for (uint32_t i = 0; i < n; ++i) s[i] = i;
  return s;
}

// stabilizer of [y] in S_n: sigma with normalize(sigma y) == y
uint64_t point_stabilizer_order(const Field& f, const ProjPoint& y,
                                bool early_exit_nontrivial) {
  std::vector<uint32_t> s = identity_perm(uint32_t(y.size()));
  uint64_t count = 0;
  do {
    if (normalize_point(f, apply_perm(y, s)) == y) {
      ++count;
      if (early_exit_nontrivial && count > 1) return count;
    }
  } while (std::next_permutation(s.begin(), s.end()));
  return count;
}

ProjPoint sigma_star(const Field& f, const ProjPoint& z,
                     const std::vector<uint32_t>& s) {
  std::vector<uint32_t> zhat = z;
  zhat.push_back(0);
  return z_rep(f, apply_perm(zhat, s));
}

uint64_t z_stabilizer_order(const Field& f, const ProjPoint& z,
                            bool early_exit_nontrivial) {
  std::vector<uint32_t> s = identity_perm(uint32_t(z.size()) + 1);
  uint64_t count = 0;
  do {
    if (sigma_star(f, z, s) == z) {
      ++count;
      if (early_exit_nontrivial && count > 1) return count;
    }
  } while (std::next_permutation(s.begin(), s.end()));
  return count;
}

bool has_repeated_coord(const std::vector<uint32_t>& y) {
  for (size_t i = 0; i < y.size(); ++i)
    for (size_t j = i + 1; j < y.size(); ++j)
      if (y[i] == y[j]) return true;
  return false;
}

// Triangular sampler for Y123(F_Q) \ {cone of vertex}: draw the tail
// coordinates, scan (y_2, y_3), solve y_1 from s_1 = 0 and keep points
// with s_2 = s_3 = 0. `accept` returns true to stop the search.
struct SampleResult {
  bool found = false;
  std::vector<uint32_t> point;
  uint32_t draws_used = 0;
};
SampleResult sample_y_points(
    const FieldPtr& fq, uint32_t n, uint64_t seed, uint32_t draw_cap,
    const std::function<bool(const std::vector<uint32_t>&)>& accept) {
  const Field& F = *fq;
  uint32_t Q = F.size();
  MultiPoly s2 = MultiPoly::elementary_symmetric(fq, n, 2);
  MultiPoly s3 = MultiPoly::elementary_symmetric(fq, n, 3);
  std::mt19937_64 rng(seed);
  SampleResult res;
  std::vector<uint32_t> y(n, 0);
  for (uint32_t draw = 1; draw <= draw_cap; ++draw) {
    for (uint32_t i = 3; i < n; ++i) y[i] = uint32_t(rng() % Q);
    for (uint32_t a = 0; a < Q; ++a)
      for (uint32_t b = 0; b < Q; ++b) {
        y[1] = a;
        y[2] = b;
        uint32_t s = 0;
        for (uint32_t i = 1; i < n; ++i) s = F.add(s, y[i]);
        y[0] = F.neg(s);
        bool zero = true;
        for (uint32_t c : y) zero &= c == 0;
        if (zero || is_vertex(y)) continue;
        if (s2.evaluate(y) != 0 || s3.evaluate(y) != 0) continue;
        if (!accept(y)) continue;
        res.found = true;
        res.point = y;
        res.draws_used = draw;
        return res;
      }
    res.draws_used = draw;
  }
  return res;
}

}  // namespace

CheckReport y123_generic_freeness(uint32_t n, uint32_t q,
                                  const std::vector<uint32_t>& escalation,
                                  uint64_t seed, uint64_t budget_points) {
  CheckReport rep;
  rep.id = "lem5.1c.generic-freeness";
  rep.paper_anchor = "Lemma 5.1(c): the S_n-action on Y_123 is generically free";
  rep.params = {{"n", n}, {"q", q}, {"escalation", escalation}};
  rep.seed = seed;

  auto [p, r] = factor_pp(q);
  FieldPtr f = Field::make(p, r);
  VarietySystem Y = y123_system(f, n);
  std::vector<ProjPoint> points = variety_points(Y, budget_points);

  // base-field census: stabilizer of every rational point
  ProjPoint vertex(n, 1);
  bool vertex_found = false;
  uint64_t vertex_stab = 0;
  uint64_t trivial_count = 0;
  uint64_t repeat_inconsistent = 0;
  ProjPoint base_witness;
  for (const ProjPoint& y : points) {
    if (y == vertex) {
      vertex_found = true;
      vertex_stab = point_stabilizer_order(*f, y, false);
      continue;
    }
    uint64_t stab = point_stabilizer_order(*f, y, true);
    if (stab == 1) {
      ++trivial_count;
      if (base_witness.empty()) base_witness = y;
    }
    // a repeated coordinate forces a stabilizing transposition
    if (has_repeated_coord(y) && stab == 1) ++repeat_inconsistent;
  }
  uint64_t fact = 1;
  for (uint32_t i = 2; i <= n; ++i) fact *= i;

  rep.stats = {{"candidates", projective_size(q, n)},
               {"y_points", points.size()},
               {"vertex_on_variety", vertex_found},
               {"vertex_stabilizer", vertex_stab},
               {"vertex_stabilizer_full", vertex_stab == fact},
               {"base_trivial_stabilizer_points", trivial_count},
               {"repeated_coord_inconsistencies", repeat_inconsistent}};

  if (repeat_inconsistent || !vertex_found || vertex_stab != fact) {
    rep.status = CheckStatus::error;
    rep.witness = {{"error", "stabilizer machinery failed a sanity check"}};
    return rep;
  }

  if (trivial_count > 0) {
    rep.status = CheckStatus::evidence;
    rep.witness = {{"field", q},
                   {"point", base_witness},
                   {"stabilizer_order", 1},
                   {"source", "exhaustive base-field scan"}};
    return rep;
  }

  // no free rational point over F_q: escalate through the given extensions
  ordered_json escalations = ordered_json::array();
  for (uint32_t Q : escalation) {
    auto [p2, r2] = factor_pp(Q);
    if (p2 != p) continue;
    FieldPtr fQ = Field::make(p2, r2);
    const Field& F = *fQ;
    auto accept = [&](const std::vector<uint32_t>& y) {
      ProjPoint yn = normalize_point(F, y);
      return point_stabilizer_order(F, yn, true) == 1;
    };
    SampleResult res =
        sample_y_points(fQ, n, seed ^ (uint64_t(Q) << 32), 500, accept);
    escalations.push_back({{"field", Q},
                           {"draws_used", res.draws_used},
                           {"witness_found", res.found}});
    if (!res.found) continue;

    // independent re-verification of the witness
    ProjPoint yn = normalize_point(F, res.point);
    MultiPoly s1 = MultiPoly::elementary_symmetric(fQ, n, 1);
    MultiPoly s2 = MultiPoly::elementary_symmetric(fQ, n, 2);
    MultiPoly s3 = MultiPoly::elementary_symmetric(fQ, n, 3);
    bool on_variety = s1.evaluate(yn) == 0 && s2.evaluate(yn) == 0 &&
                      s3.evaluate(yn) == 0;
    bool distinct = !has_repeated_coord(yn);
    uint64_t stab = point_stabilizer_order(F, yn, false);
    rep.stats["escalations"] = escalations;
    if (!on_variety || !distinct || stab != 1) {
      rep.status = CheckStatus::error;
      rep.witness = {{"error", "witness failed re-verification"},
                     {"point", yn}};
      return rep;
    }
    rep.status = CheckStatus::evidence;
    rep.witness = {{"field", Q},
                   {"point", yn},
                   {"stabilizer_order", 1},
                   {"distinct_coordinates", true},
                   {"draws_used", res.draws_used},
                   {"source", "triangular sampler"}};
    return rep;
  }

  rep.stats["escalations"] = escalations;
  rep.status = CheckStatus::error;
  rep.witness = {{"error",
                  "no point with trivial stabilizer found within the draw "
                  "caps; inconclusive"}};
  return rep;
}

CheckReport z123_construct_and_verify(uint32_t n, uint32_t q,
                                      const std::vector<uint32_t>& escalation,
                                      uint64_t seed, uint64_t budget_points) {
  CheckReport rep;
  rep.id = "prop6.1b.z123-freeness";
  rep.paper_anchor =
      "Prop. 6.1(b) proof: the S_n-action on Z_123 = Y_123 / G_m is "
      "generically free";
  rep.params = {{"n", n}, {"q", q}, {"escalation", escalation}};
  rep.seed = seed;

  auto [p, r] = factor_pp(q);
  FieldPtr f = Field::make(p, r);
  const Field& F = *f;
  VarietySystem Y = y123_system(f, n);
  std::vector<ProjPoint> points = variety_points(Y, budget_points);

  ProjPoint vertex(n, 1);
  std::map<ProjPoint, uint32_t> fiber;
  std::vector<ProjPoint> nonvertex;
  for (const ProjPoint& y : points) {
    if (y == vertex) continue;
    nonvertex.push_back(y);
    ++fiber[z_rep(F, y)];
  }
  bool fibers_uniform = true;
  for (const auto& [z, cnt] : fiber) fibers_uniform &= cnt == q;
  bool cone_law = points.size() == 1 + uint64_t(q) * fiber.size();

  // well-definedness: y and alpha*y + beta*(1,..,1) map to the same rep
  uint64_t welldef_checked = 0;
  bool welldef = true;
  for (const ProjPoint& y : nonvertex) {
    ProjPoint zy = z_rep(F, y);
    std::vector<uint32_t> shifted(n);
    for (uint32_t a = 1; a < q && welldef; ++a)
      for (uint32_t b = 0; b < q && welldef; ++b) {
        for (uint32_t i = 0; i < n; ++i)
          shifted[i] = F.add(F.mul(a, y[i]), b);
        ++welldef_checked;
        welldef &= z_rep(F, shifted) == zy;
      }
    if (!welldef) break;
  }

  // equivariance: z_rep(sigma y) == sigma_star(z_rep(y)) for all sigma, y
  std::vector<ProjPoint> zs;
  zs.reserve(nonvertex.size());
  for (const ProjPoint& y : nonvertex) zs.push_back(z_rep(F, y));
  bool equivariant = true;
  uint64_t equi_checked = 0;
  {
    std::vector<uint32_t> s = identity_perm(n);
    do {
      for (size_t i = 0; i < nonvertex.size(); ++i) {
        ++equi_checked;
        if (z_rep(F, apply_perm(nonvertex[i], s)) !=
            sigma_star(F, zs[i], s)) {
          equivariant = false;
          break;
        }
      }
    } while (equivariant && std::next_permutation(s.begin(), s.end()));
  }

  std::set<ProjPoint> reps(zs.begin(), zs.end());
  rep.stats = {{"y_points", points.size()},
               {"z_points", reps.size()},
               {"cone_law_holds", cone_law},
               {"fibers_all_size_q", fibers_uniform},
               {"well_definedness_checks", welldef_checked},
               {"well_defined", welldef},
               {"equivariance_checks", equi_checked},
               {"equivariant", equivariant}};

  if (!cone_law || !fibers_uniform || !welldef || !equivariant) {
    rep.status = CheckStatus::fail;
    rep.witness = {{"error", "structural property of z_rep failed"}};
    return rep;
  }

  // freeness: look for a rational z with trivial induced stabilizer
  uint64_t trivial_count = 0;
  ProjPoint base_witness;
  for (const ProjPoint& z : reps) {
    if (z_stabilizer_order(F, z, true) == 1) {
      ++trivial_count;
      if (base_witness.empty()) base_witness = z;
    }
  }
  rep.stats["base_trivial_stabilizer_points"] = trivial_count;

  if (trivial_count > 0) {
    rep.status = CheckStatus::evidence;
    rep.witness = {{"field", q},
                   {"point", base_witness},
                   {"stabilizer_order", 1},
                   {"source", "exhaustive base-field scan"}};
    return rep;
  }

  ordered_json escalations = ordered_json::array();
  for (uint32_t Q : escalation) {
    auto [p2, r2] = factor_pp(Q);
    if (p2 != p) continue;
    FieldPtr fQ = Field::make(p2, r2);
    const Field& FQ = *fQ;
    ProjPoint zfound;
    auto accept = [&](const std::vector<uint32_t>& y) {
      ProjPoint z = z_rep(FQ, y);
      if (z_stabilizer_order(FQ, z, true) != 1) return false;
      zfound = z;
      return true;
    };
    SampleResult res =
        sample_y_points(fQ, n, seed ^ (uint64_t(Q) << 32), 500, accept);
    escalations.push_back({{"field", Q},
                           {"draws_used", res.draws_used},
                           {"witness_found", res.found}});
    if (!res.found) continue;

    uint64_t stab = z_stabilizer_order(FQ, zfound, false);
    rep.stats["escalations"] = escalations;
    if (stab != 1) {
      rep.status = CheckStatus::error;
      rep.witness = {{"error", "witness failed re-verification"}};
      return rep;
    }
    rep.status = CheckStatus::evidence;
    rep.witness = {{"field", Q},
                   {"point", zfound},
                   {"stabilizer_order", 1},
                   {"from_y_point", res.point},
                   {"draws_used", res.draws_used},
                   {"source", "triangular sampler through z_rep"}};
    return rep;
  }

  rep.stats["escalations"] = escalations;
  rep.status = CheckStatus::error;
  rep.witness = {{"error",
                  "no z-point with trivial stabilizer found within the draw "
                  "caps; inconclusive"}};
  return rep;
}

CheckReport y123_degree_and_dimension(uint32_t n, uint32_t q,
                                      uint32_t tower_depth, uint32_t trials,
                                      uint64_t seed, uint64_t budget_points) {
  CheckReport rep;
  rep.id = "lem5.1b.degree-dimension";
  rep.paper_anchor =
      "Lemma 5.1(b): Y_123 is a complete intersection of dimension n - 4 "
      "and degree 6 in P^{n-1}";
  rep.params = {{"n", n},
                {"q", q},
                {"tower_depth", tower_depth},
                {"trials", trials}};
  rep.seed = seed;

  auto [p, r] = factor_pp(q);
  FieldPtr f = Field::make(p, r);
  const Field& F = *f;
  VarietySystem Y = y123_system(f, n);
  uint64_t ceiling = Y.degree_product();

  GrowthResult growth = point_count_growth(Y, 2, budget_points);
  ordered_json levels = ordered_json::array();
  for (const auto& lv : growth.levels)
    levels.push_back(
        {{"m", lv.m}, {"count", lv.count}, {"dim_estimate", lv.dim_estimate}});
  double y_dim = growth.levels.empty() ? -1.0 : growth.levels[0].dim_estimate;

  // Z123 dimension from the base-field representative count
  std::vector<ProjPoint> points = variety_points(Y, budget_points);
  ProjPoint vertex(n, 1);
  std::set<ProjPoint> reps;
  for (const ProjPoint& y : points)
    if (y != vertex) reps.insert(z_rep(F, y));
  double z_dim = std::log(double(reps.size())) / std::log(double(q));

  double y_target = double(n) - 4.0, z_target = double(n) - 5.0;
  bool y_dim_ok = std::abs(y_dim - y_target) <= 0.5;
  bool z_dim_ok = std::abs(z_dim - z_target) <= 0.5;

  // slice sampling: 0-dimensional generic slices stay within the Bezout
  // ceiling at every tower level
  uint32_t T = trials ? trials : 50;
  uint32_t t3 = T / 10, t2 = T * 3 / 10, t1 = T - t2 - t3;
  std::vector<uint32_t> split{t1, t2, t3};
  ordered_json slice_levels = ordered_json::array();
  bool slices_ok = true;
  uint32_t depth = std::min(tower_depth ? tower_depth : 3u, 3u);
  for (uint32_t m = 1; m <= depth; ++m) {
    uint32_t tm = split[m - 1];
    if (!tm) continue;
    FieldPtr fm = m == 1 ? f : Field::make(p, r * m);
    VarietySystem Ym = m == 1 ? Y : Y.base_change(fm);
    SliceStats st =
        slice_point_count(Ym, 3, tm, seed + m, ceiling, budget_points);
    ordered_json hist = ordered_json::object();
    for (const auto& [count, times] : st.histogram)
      hist[std::to_string(count)] = times;
    uint64_t qm = 1;
    for (uint32_t i = 0; i < m; ++i) qm *= q;
    slice_levels.push_back({{"m", m},
                            {"field", qm},
                            {"trials", st.trials},
                            {"improper", st.improper_count},
                            {"min_count", st.min_count},
                            {"max_count", st.max_count},
                            {"histogram", hist}});
    slices_ok &= st.improper_count == 0 && st.max_count <= ceiling;
  }

  // control: a hyperplane has dimension n - 2 and degree 1
  VarietySystem H = VarietySystem::make(
      {MultiPoly::elementary_symmetric(f, n, 1)});
  GrowthResult hg = point_count_growth(H, 1, budget_points);
  double h_dim = hg.levels.empty() ? -1.0 : hg.levels[0].dim_estimate;
  SliceStats hs = slice_point_count(H, 1, 5, seed + 99, 1, budget_points);
  bool control_ok = std::abs(h_dim - (double(n) - 2.0)) <= 0.5 &&
                    hs.improper_count == 0 && hs.min_count == 1 &&
                    hs.max_count == 1;

  rep.stats = {{"bezout_ceiling", ceiling},
               {"growth_levels", levels},
               {"growth_truncated_at_m", growth.truncated_at_m},
               {"y_dim_estimate", y_dim},
               {"y_dim_target", y_target},
               {"z_points", reps.size()},
               {"z_dim_estimate", z_dim},
               {"z_dim_target", z_target},
               {"slice_levels", slice_levels},
               {"hyperplane_dim_estimate", h_dim},
               {"hyperplane_slice_min", hs.min_count},
               {"hyperplane_slice_max", hs.max_count},
               {"y_dim_ok", y_dim_ok},
               {"z_dim_ok", z_dim_ok},
               {"slices_ok", slices_ok},
               {"control_ok", control_ok}};

  bool ok = y_dim_ok && z_dim_ok && slices_ok && control_ok;
  rep.status = ok ? CheckStatus::evidence : CheckStatus::fail;
  if (!ok)
    rep.witness = {{"y_dim_ok", y_dim_ok},
                   {"z_dim_ok", z_dim_ok},
                   {"slices_ok", slices_ok},
                   {"control_ok", control_ok}};
  else
    rep.witness = {{"summary",
                    "dimension estimates inside the half-integer windows; "
                    "every proper slice within the Bezout ceiling"}};
  return rep;
}

}  // namespace rdlab::checks
