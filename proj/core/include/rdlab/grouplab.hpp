#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rdlab/gf.hpp"
#include "rdlab/matrix.hpp"
#include "rdlab/perm.hpp"

namespace rdlab {

enum class GroupKind { permutation, matrix, product };

// Index of a nonzero vector of F^n: sum x_k q^k over coordinates, minus 1.
// Small enough domains only (the cap keeps Schreier-Sims tables sane).
uint64_t vector_domain_size(const Field& f, uint32_t n);  // q^n - 1
Perm matrix_vector_perm(const Mat& g);
std::vector<uint32_t> vector_of_index(const Field& f, uint32_t n, uint64_t idx);
uint64_t index_of_vector(const Field& f, const std::vector<uint32_t>& v);

class GroupHandle {
 public:
  static GroupHandle permutation_group(std::string name, uint32_t degree,
                                       std::vector<Perm> gens,
                                       uint64_t expected_order = 0);
  static GroupHandle matrix_group(std::string name, FieldPtr f, uint32_t dim,
                                  std::vector<Mat> gens,
                                  std::optional<Form> form,
                                  uint64_t expected_order = 0);

  GroupKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const std::vector<Perm>& perm_generators() const { return pgens_; }
  const std::vector<Mat>& matrix_generators() const { return mgens_; }
  const std::optional<Form>& form() const { return form_; }
  const FieldPtr& field() const { return field_; }
  uint32_t dim() const { return dim_; }
  uint64_t expected_order() const { return expected_order_; }

  // Faithful permutation action: the natural points for permutation
  // groups, nonzero vectors for matrix groups. Built lazily (not
  // thread-safe across concurrent first calls on one handle). A declared
  // expected order is certified on first build; mismatch is fatal.
  const PermGroup& action() const;
  uint64_t order() const { return action().order(); }
  uint32_t scalar_count() const;  // matrix kind: scalars lambda*I inside G

 private:
  GroupHandle() = default;
  GroupKind kind_ = GroupKind::permutation;
  std::string name_;
  uint32_t degree_ = 0;
  std::vector<Perm> pgens_;
  std::vector<Mat> mgens_;
  std::optional<Form> form_;
  FieldPtr field_;
  uint32_t dim_ = 0;
  uint64_t expected_order_ = 0;
  mutable std::shared_ptr<const PermGroup> chain_;
};

GroupHandle symmetric_group(uint32_t n);
GroupHandle alternating_group(uint32_t n);
GroupHandle cyclic_group(uint32_t n);

uint64_t sp_order_formula(uint32_t m, uint64_t q);
uint64_t su_order_formula(uint32_t n, uint64_t q);

// Sp_{2m}(q): symplectic transvections over the standard directions
// e_i and e_i + e_j with coefficients running over an F_p-basis of F_q.
// The order formula certifies generation (fatal mismatch) whenever the
// chain is buildable within budget.
GroupHandle symplectic_group(uint32_t m, uint32_t q);

// SU_n(q): unitary transvections over all normalized isotropic
// directions with trace-zero coefficients. If the certified order falls
// short (it does for SU_3(2), where transvections generate a proper
// subgroup), deterministically augments with the lexicographically
// least missing unitary determinant-1 matrices until the order matches.
GroupHandle special_unitary_group(uint32_t n, uint32_t q);

// U_n(q) = SU_n(q) generators plus diag(zeta, 1, ..., 1) where zeta is
// the least element of multiplicative order q+1.
GroupHandle unitary_group(uint32_t n, uint32_t q);

struct ProjectiveImage {
  PermGroup group;
  std::vector<std::vector<uint32_t>> points;  // normalized reps, fixed order
  uint32_t scalar_count = 0;
  uint64_t source_order = 0;  // 0 when the source chain is out of budget
};
// Permutation action on projective points. When the source order is
// certifiable, verifies |image| * #scalars == |G| (fatal mismatch).
ProjectiveImage projective_image(const GroupHandle& g);

// E6 root system in simple-root coordinates (reflection closure from the
// Cartan matrix; exactly 72 roots or fatal) and its Weyl group as the
// permutation action of the simple reflections on the sorted roots.
std::vector<std::vector<int>> e6_roots();
PermGroup weyl_e6();

// Orbit and stabilizer of a point under an external action of G, via
// Schreier generators. `action` maps (group element, point) -> point.
struct OrbitStabilizer {
  uint64_t orbit_size = 0;
  PermGroup stabilizer;
};
OrbitStabilizer orbit_stabilizer(
    const PermGroup& g,
    const std::function<uint64_t(const Perm&, uint64_t)>& action, uint64_t x);

// Central product (G x H)/N with N = {(z, phi(z)^{-1})}: elements are
// canonical coset representatives (lexicographically least first
// component). z1/z2 are matched element lists defining phi: z1[i] ->
// z2[i]; centrality, closure and phi being an isomorphism are verified.
struct CentralProductSpec {
  std::string name;
  const PermGroup* g = nullptr;
  const PermGroup* h = nullptr;
  std::vector<Perm> z1, z2;
};
struct CentralProductInfo {
  std::string name;
  uint64_t order = 0;
  uint64_t g_order = 0, h_order = 0, z_size = 0;
  bool order_law = false;    // order == |G|*|H|/|Z1|
  bool g_injective = false;  // natural map G -> G o H
  bool h_injective = false;
};
CentralProductInfo central_product(const CentralProductSpec& spec,
                                   uint64_t cap = 1000000);

}  // namespace rdlab
