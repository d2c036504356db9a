#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "rdlab/gf.hpp"
#include "rdlab/matrix.hpp"
#include "rdlab/mvpoly.hpp"

namespace rdlab {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Projective points are canonical coordinate tuples (field element
// indices): the first nonzero coordinate is 1. Two points are equal iff
// their tuples are equal.
using ProjPoint = std::vector<uint32_t>;

uint64_t projective_size(uint64_t q, uint32_t n);  // (q^n - 1)/(q - 1)

// Normalizes a nonzero coordinate tuple; throws on the zero tuple.
ProjPoint normalize_point(const Field& f, ProjPoint x);

// Visits every point of P^{n-1}(F) exactly once, in a fixed order:
// blocks by position of the first nonzero coordinate, remaining
// coordinates in odometer order (last coordinate fastest).
void enumerate_projective(const FieldPtr& f, uint32_t n, uint64_t budget,
                          const std::function<void(const ProjPoint&)>& visit);
std::vector<ProjPoint> projective_points(const FieldPtr& f, uint32_t n,
                                         uint64_t budget);

// A list of homogeneous polynomials over one field in a common variable
// count. Members may have different degrees.
struct VarietySystem {
  FieldPtr field;
  uint32_t nvars = 0;
  std::vector<MultiPoly> members;

  static VarietySystem make(std::vector<MultiPoly> members);
  // same system over an extension (coefficients must lie in the prime
  // subfield, as they do for all systems built here)
  VarietySystem base_change(const FieldPtr& bigger) const;
  uint64_t degree_product() const;  // Bezout ceiling
  bool vanishes_at(const ProjPoint& x) const;
};

std::vector<ProjPoint> variety_points(const VarietySystem& sys,
                                      uint64_t budget = 200000000);
uint64_t variety_point_count(const VarietySystem& sys,
                             uint64_t budget = 200000000);

// Points where f and all its partials vanish (Jacobian criterion locus
// over the given field).
std::vector<ProjPoint> singular_points(const MultiPoly& f,
                                       uint64_t budget = 200000000);

// Parameterized generic slice: draws n-1-s independent linear forms and
// substitutes a basis of their common kernel, so the result is a system
// in s+1 homogeneous parameters (a copy of P^s). Degenerate draws
// (dependent forms, or a member collapsing to zero) are redrawn.
VarietySystem random_linear_slice(const VarietySystem& sys, uint32_t slice_dim,
                                  std::mt19937_64& rng,
                                  uint32_t max_redraws = 32);

struct SliceStats {
  uint32_t trials = 0;
  uint32_t improper_count = 0;  // count > ceiling; excluded from min/max
  uint64_t min_count = 0;
  uint64_t max_count = 0;
  std::map<uint64_t, uint32_t> histogram;  // proper trials only
};

// Runs `trials` seeded slice draws and counts distinct points of each
// sliced system. Throws if every trial is improper.
SliceStats slice_point_count(const VarietySystem& sys, uint32_t slice_dim,
                             uint32_t trials, uint64_t seed,
                             uint64_t bezout_ceiling,
                             uint64_t budget = 200000000);

struct GrowthLevel {
  uint32_t m = 0;
  uint64_t count = 0;
  double dim_estimate = 0.0;  // log(count) / (m * log q)
};
struct GrowthResult {
  std::vector<GrowthLevel> levels;
  uint32_t truncated_at_m = 0;  // first level over budget; 0 = none
};

// F_{q^m}-point counts for m = 1..max_m; levels whose projective space
// exceeds the budget truncate the sequence (recorded, not fatal).
GrowthResult point_count_growth(const VarietySystem& sys, uint32_t max_m,
                                uint64_t budget = 200000000);

}  // namespace rdlab
