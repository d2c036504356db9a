#include "rdlab/projgeom.hpp"

#include <algorithm>
#include <cmath>

namespace rdlab {

uint64_t projective_size(uint64_t q, uint32_t n) {
  // (q^n - 1)/(q - 1) without overflow for the sizes we admit
  uint64_t total = 0, power = 1;
  for (uint32_t k = 0; k < n; ++k) {
    total += power;
    if (power > (UINT64_MAX / q)) return UINT64_MAX;  // saturate
    power *= q;
  }
  return total;
}

ProjPoint normalize_point(const Field& f, ProjPoint x) {
  for (uint32_t& c : x) {
    if (c == 0) continue;
    if (c == 1) return x;  // leading coefficient already 1
    uint32_t inv = f.inv(c);
    for (uint32_t& d : x) d = f.mul(d, inv);
    return x;
  }
  throw std::invalid_argument("zero tuple has no projective point");
}

void enumerate_projective(const FieldPtr& f, uint32_t n, uint64_t budget,
                          const std::function<void(const ProjPoint&)>& visit) {
  if (n == 0) throw std::invalid_argument("enumerate_projective: n = 0");
  uint64_t total = projective_size(f->size(), n);
  if (total > budget)
    throw BudgetExceeded("projective space larger than point budget");
  const uint32_t q = f->size();
  ProjPoint x(n, 0);
  for (uint32_t lead = 0; lead < n; ++lead) {
    std::fill(x.begin(), x.end(), 0);
    x[lead] = 1;
    // odometer over coordinates lead+1..n-1, last fastest
    for (;;) {
      visit(x);
      int64_t k = int64_t(n) - 1;
      while (k > int64_t(lead)) {
        if (++x[size_t(k)] < q) break;
        x[size_t(k)] = 0;
        --k;
      }
      if (k == int64_t(lead)) break;  // free block wrapped
    }
  }
}

std::vector<ProjPoint> projective_points(const FieldPtr& f, uint32_t n,
                                         uint64_t budget) {
  std::vector<ProjPoint> pts;
  pts.reserve(size_t(projective_size(f->size(), n)));
  enumerate_projective(f, n, budget,
                       [&](const ProjPoint& x) { pts.push_back(x); });
  return pts;
}

VarietySystem VarietySystem::make(std::vector<MultiPoly> members) {
  if (members.empty()) throw std::invalid_argument("empty variety system");
  VarietySystem sys;
  sys.field = members[0].field_ptr();
  sys.nvars = members[0].nvars();
  for (const MultiPoly& m : members) {
    if (m.field_ptr().get() != sys.field.get() || m.nvars() != sys.nvars)
      throw std::invalid_argument("system members disagree on field/arity");
    if (!m.homogeneous())
      throw std::invalid_argument("system member not homogeneous");
  }
  sys.members = std::move(members);
  return sys;
}

VarietySystem VarietySystem::base_change(const FieldPtr& bigger) const {
  std::vector<MultiPoly> lifted;
  lifted.reserve(members.size());
  for (const MultiPoly& m : members) lifted.push_back(m.embed_into(bigger));
  return VarietySystem::make(std::move(lifted));
}

uint64_t VarietySystem::degree_product() const {
  uint64_t d = 1;
  for (const MultiPoly& m : members) d *= std::max<uint32_t>(1, m.degree());
  return d;
}

bool VarietySystem::vanishes_at(const ProjPoint& x) const {
  for (const MultiPoly& m : members)
    if (m.evaluate(x.data()) != 0) return false;
  return true;
}

std::vector<ProjPoint> variety_points(const VarietySystem& sys,
                                      uint64_t budget) {
  std::vector<ProjPoint> pts;
  enumerate_projective(sys.field, sys.nvars, budget, [&](const ProjPoint& x) {
    if (sys.vanishes_at(x)) pts.push_back(x);
  });
  return pts;
}

uint64_t variety_point_count(const VarietySystem& sys, uint64_t budget) {
  uint64_t count = 0;
  enumerate_projective(sys.field, sys.nvars, budget, [&](const ProjPoint& x) {
    if (sys.vanishes_at(x)) ++count;
  });
  return count;
}

std::vector<ProjPoint> singular_points(const MultiPoly& f, uint64_t budget) {
  if (f.is_zero()) throw std::invalid_argument("singular_points of zero");
  std::vector<MultiPoly> sys{f};
  for (uint32_t i = 0; i < f.nvars(); ++i)
    sys.push_back(f.partial_derivative(i));
  std::vector<ProjPoint> pts;
  enumerate_projective(f.field_ptr(), f.nvars(), budget,
                       [&](const ProjPoint& x) {
                         for (const MultiPoly& m : sys)
                           if (m.evaluate(x.data()) != 0) return;
                         pts.push_back(x);
                       });
  return pts;
}

VarietySystem random_linear_slice(const VarietySystem& sys, uint32_t slice_dim,
                                  std::mt19937_64& rng, uint32_t max_redraws) {
  const uint32_t n = sys.nvars;
  if (slice_dim + 1 > n) throw std::invalid_argument("slice_dim too large");
  const uint32_t forms = n - 1 - slice_dim;
  const uint32_t q = sys.field->size();
  for (uint32_t attempt = 0; attempt < max_redraws; ++attempt) {
    Mat a(sys.field, forms, n);
    for (uint32_t i = 0; i < forms; ++i)
      for (uint32_t j = 0; j < n; ++j) a.at(i, j) = uint32_t(rng() % q);
    if (a.rank() != forms) continue;  // dependent forms: redraw
    auto kernel = a.kernel_basis();   // slice_dim + 1 column vectors
    // substitution matrix: rows indexed by original variables, columns by
    // the fresh parameters
    std::vector<uint32_t> rows(size_t(n) * kernel.size());
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = 0; j < kernel.size(); ++j)
        rows[size_t(i) * kernel.size() + j] = kernel[j][i];
    std::vector<MultiPoly> sliced;
    sliced.reserve(sys.members.size());
    bool collapsed = false;
    for (const MultiPoly& m : sys.members) {
      MultiPoly s =
          m.linear_substitute_rect(rows, n, uint32_t(kernel.size()));
      if (s.is_zero()) {
        collapsed = true;  // slice inside the member's zero set: redraw
        break;
      }
      sliced.push_back(std::move(s));
    }
    if (collapsed) continue;
    return VarietySystem::make(std::move(sliced));
  }
  throw std::runtime_error("random_linear_slice: redraw budget exhausted");
}

SliceStats slice_point_count(const VarietySystem& sys, uint32_t slice_dim,
                             uint32_t trials, uint64_t seed,
                             uint64_t bezout_ceiling, uint64_t budget) {
  SliceStats stats;
  stats.trials = trials;
  bool have_proper = false;
  for (uint32_t t = 0; t < trials; ++t) {
    // splitmix of (seed, trial) so trials are independent of each other
    uint64_t z = seed + 0x9e3779b97f4a7c15ull * (t + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    std::mt19937_64 rng(z ^ (z >> 31));
    VarietySystem sliced = random_linear_slice(sys, slice_dim, rng);
    uint64_t count = variety_point_count(sliced, budget);
    if (count > bezout_ceiling) {
      ++stats.improper_count;  // positive-dimensional slice suspected
      continue;
    }
    ++stats.histogram[count];
    if (!have_proper) {
      stats.min_count = stats.max_count = count;
      have_proper = true;
    } else {
      stats.min_count = std::min(stats.min_count, count);
      stats.max_count = std::max(stats.max_count, count);
    }
  }
  if (!have_proper)
    throw std::runtime_error("slice_point_count: every trial improper");
  return stats;
}

GrowthResult point_count_growth(const VarietySystem& sys, uint32_t max_m,
                                uint64_t budget) {
  GrowthResult result;
  const Field& base = *sys.field;
  for (uint32_t m = 1; m <= max_m; ++m) {
    uint64_t qm = 1;
    for (uint32_t i = 0; i < base.r() * m; ++i) qm *= base.p();
    if (projective_size(qm, sys.nvars) > budget) {
      result.truncated_at_m = m;
      break;
    }
    FieldPtr fm = m == 1 ? sys.field : Field::make(base.p(), base.r() * m);
    VarietySystem lifted = m == 1 ? sys : sys.base_change(fm);
    GrowthLevel level;
    level.m = m;
    level.count = variety_point_count(lifted, budget);
    level.dim_estimate =
        level.count == 0
            ? 0.0
            : std::log(double(level.count)) / (m * std::log(double(base.size())));
    result.levels.push_back(level);
  }
  return result;
}

}  // namespace rdlab
