#pragma once

#include <string>
#include <vector>

#include "eqhom/gset.hpp"

namespace eqhom {

/// The G-map R_a : G/H -> G/K, gH |-> gaK, for a with a^{-1}Ha in K.
/// Objects are indices into the category's family; `rep` is the least
/// element of the coset aK.
struct OrbitMorphism {
  std::size_t source = 0;
  std::size_t target = 0;
  Element rep = 0;

  bool operator==(const OrbitMorphism& other) const = default;
};

/// The orbit category O_F(G): coset G-sets G/H for H in a family F, which
/// need not be closed under conjugation or subgroups.
class OrbitCategory {
 public:
  OrbitCategory(Group group, std::vector<Subgroup> family);

  const Group& group() const { return group_; }
  const std::vector<Subgroup>& family() const { return family_; }
  std::size_t object_count() const { return family_.size(); }
  /// Index of h in the family, or -1.
  int index_of(const Subgroup& h) const;

  /// Canonical representatives of hom(G/H, G/K), ascending.
  const std::vector<Element>& hom(std::size_t h, std::size_t k) const { return hom_[h][k]; }
  std::vector<OrbitMorphism> morphisms(std::size_t h, std::size_t k) const;
  /// Position of f within hom(f.source, f.target).
  std::size_t position(const OrbitMorphism& f) const;

  OrbitMorphism identity(std::size_t h) const { return {h, h, 0}; }
  /// Canonical form of R_a : G/H -> G/K; throws unless a^{-1}Ha is in K.
  OrbitMorphism morphism(std::size_t h, std::size_t k, Element a) const;
  /// second o first; for R_a : H -> K and R_b : K -> L this is R_{ab}.
  OrbitMorphism compose(const OrbitMorphism& second, const OrbitMorphism& first) const;

  const GSet& coset_set(std::size_t h) const { return cosets_[h]; }
  /// The underlying G-map of coset G-sets.
  GMap realize(const OrbitMorphism& f) const;

  /// Human-readable hom sets and composition table.
  std::string table() const;

 private:
  Element canonical_rep(std::size_t k, Element a) const;

  Group group_;
  std::vector<Subgroup> family_;
  std::vector<CosetSpace> coset_spaces_;
  std::vector<GSet> cosets_;
  std::vector<std::vector<std::vector<Element>>> hom_;
};

}  // namespace eqhom
