#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rdlab/report.hpp"

namespace rdlab::checks {

// Shared run configuration. trials/tower_depth of 0 mean "per-check
// default"; budget_secs 0 means unlimited.
struct Context {
  uint64_t base_seed = 42;
  uint64_t budget_points = 200000000;
  double budget_secs = 0.0;
  uint32_t trials = 0;
  uint32_t tower_depth = 0;
  bool timings = false;
};

// C(n, k) mod p by base-p digit products.
uint32_t lucas_binomial(uint64_t n, uint64_t k, uint32_t p);
// C(n,1), C(n,2), C(n,3) all zero mod p.
bool cone_condition(uint64_t n, uint32_t p);

// --- invariance -----------------------------------------------------------
CheckReport check_symplectic_invariance(uint32_t m, uint32_t q,
                                        uint32_t extra_random_words,
                                        uint64_t seed);
CheckReport check_unitary_invariance(uint32_t n, uint32_t q,
                                     uint32_t extra_random_words,
                                     uint64_t seed);
// fixed negative controls: diag(2,1,1,1) against the symplectic form over
// F_3; a non-unitary diagonal against the hermitian norm with q = 3
CheckReport check_symplectic_invariance_negative();
CheckReport check_unitary_invariance_negative();

// least degree of a nonzero form on P^{n-1}(F_{q^2}) vanishing at every
// rational point, by exact kernel ranks of evaluation matrices
CheckReport check_min_vanishing_degree(uint32_t n, uint32_t q);

// --- smoothness -----------------------------------------------------------
CheckReport check_smoothness_symplectic(uint32_t m, uint32_t q,
                                        uint32_t tower_depth);
CheckReport check_smoothness_hermitian(uint32_t n, uint32_t q,
                                       uint32_t tower_depth);
CheckReport check_smoothness_negative(uint32_t p);  // f = x_1^p

// --- cone of Y123 ---------------------------------------------------------
CheckReport check_cone_condition_table();           // n <= 64, p in {2,3,5,7}
CheckReport check_shift_identities(uint32_t max_n);
CheckReport check_cone_closure(uint32_t n, uint32_t q);
CheckReport check_cone_closure_negative();          // (6, 5)

// --- Y123 / Z123 ----------------------------------------------------------
CheckReport y123_generic_freeness(uint32_t n, uint32_t q,
                                  const std::vector<uint32_t>& escalation,
                                  uint64_t seed, uint64_t budget_points);
CheckReport z123_construct_and_verify(uint32_t n, uint32_t q,
                                      const std::vector<uint32_t>& escalation,
                                      uint64_t seed, uint64_t budget_points);
CheckReport y123_degree_and_dimension(uint32_t n, uint32_t q,
                                      uint32_t tower_depth, uint32_t trials,
                                      uint64_t seed, uint64_t budget_points);

// --- group facts ----------------------------------------------------------
CheckReport check_psl2_9_facts();
CheckReport check_weyl_e6_facts();
CheckReport check_classical_orders();
CheckReport check_central_products();

// --- registry ---------------------------------------------------------------
struct RegistryEntry {
  std::string id;
  std::string paper_anchor;
  ordered_json params;
  bool negative_control = false;
  std::function<CheckReport(const Context&, const ordered_json&)> run;
};

// Stable enumeration of every registered check instance. Negative
// controls are flagged; they are expected to report `fail`.
const std::vector<RegistryEntry>& registry();

// fnv1a(id) xor base seed: decouples the checks' random streams
uint64_t derive_seed(const std::string& id, uint64_t base_seed);

// Runs one entry (optionally with overridden params), stamping seed,
// elapsed (when ctx.timings) and mapping exceptions to status error.
CheckReport run_entry(const RegistryEntry& entry, const Context& ctx);
CheckReport run_entry(const RegistryEntry& entry, const Context& ctx,
                      const ordered_json& params);

// Runs the whole registry on a worker pool (jobs 0 = hardware
// concurrency); reports come back in registry order.
std::vector<CheckReport> run_all(const Context& ctx,
                                 bool include_negative_controls,
                                 uint32_t jobs);

}  // namespace rdlab::checks
