#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rdlab {

// Permutation of {0,...,n-1}. Composition is right-to-left:
// (a*b)(x) = a(b(x)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<uint32_t> images);
  static Perm identity(uint32_t n);
  // cycles use 0-based points; points not mentioned are fixed
  static Perm from_cycles(uint32_t n,
                          const std::vector<std::vector<uint32_t>>& cycles);

  uint32_t degree() const { return uint32_t(img_.size()); }
  uint32_t operator()(uint32_t x) const { return img_[x]; }
  const std::vector<uint32_t>& images() const { return img_; }

  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  bool is_identity() const;
  uint32_t first_moved() const;  // degree() if identity

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  std::string render() const;  // cycle notation, 0-based

 private:
  std::vector<uint32_t> img_;
};

uint64_t perm_hash(const Perm& p);

// Permutation group with a deterministic Schreier-Sims stabilizer chain.
// Base points are always the first moved point of the residue that forced
// the level, so identical generator lists give identical chains.
class PermGroup {
 public:
  PermGroup() : degree_(0) {}
  PermGroup(uint32_t degree, std::vector<Perm> gens);

  uint32_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  uint64_t order() const;
  bool is_trivial() const { return levels_.empty(); }
  bool contains(const Perm& g) const;
  std::vector<uint32_t> base() const;

  std::vector<uint32_t> orbit_of(uint32_t x) const;
  std::vector<std::vector<uint32_t>> orbits() const;
  bool is_transitive() const;
  bool is_2transitive() const;
  bool is_abelian() const;

  PermGroup point_stabilizer(uint32_t x) const;
  PermGroup normal_closure(const std::vector<Perm>& hgens) const;
  PermGroup derived_subgroup() const;

  // Elements in deterministic transversal-product order. Throws if the
  // order exceeds cap.
  std::vector<Perm> elements(uint64_t cap = 2000000) const;
  // One representative per conjugacy class, each the enumeration-least
  // member of its class.
  std::vector<Perm> conjugacy_class_reps(uint64_t cap = 2000000) const;
  bool is_simple(uint64_t cap = 2000000) const;

 private:
  struct Level {
    uint32_t base = 0;
    std::vector<Perm> gens;          // strong generators active at this level
    std::vector<uint32_t> orbit;     // BFS discovery order
    std::vector<int32_t> parent_gen; // -1 outside orbit, -2 at base
    std::vector<uint32_t> parent_pt;
  };

  uint32_t degree_;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;

  void build();
  void schreier_sims(size_t k);
  void rebuild_orbit(size_t k);
  Perm transversal(size_t k, uint32_t pt) const;  // maps base_k -> pt
  // strips g through levels [start..); returns residue and drop level
  std::pair<Perm, size_t> strip(const Perm& g, size_t start) const;
  void elements_rec(size_t k, const Perm& acc, std::vector<Perm>& out) const;
};

}  // namespace rdlab
