#pragma once

#include <vector>

#include "eqhom/group.hpp"

namespace eqhom {

/// A finite set with a left action of a finite group. Points are 0..size-1.
class GSet {
 public:
  /// action[g][x] is g.x; validated to be a homomorphism into permutations.
  GSet(Group group, std::vector<std::vector<int>> action);

  static GSet trivial(const Group& group, std::size_t size);

  const Group& group() const { return group_; }
  std::size_t size() const { return size_; }
  int apply(Element g, int x) const { return action_[static_cast<std::size_t>(g)][static_cast<std::size_t>(x)]; }
  const std::vector<std::vector<int>>& action() const { return action_; }
  bool is_transitive() const;

  bool operator==(const GSet& other) const = default;

 private:
  Group group_;
  std::size_t size_ = 0;
  std::vector<std::vector<int>> action_;
};

/// An equivariant map of G-sets.
class GMap {
 public:
  /// Validates values against equivariance.
  GMap(GSet source, GSet target, std::vector<int> values);

  const GSet& source() const { return source_; }
  const GSet& target() const { return target_; }
  const std::vector<int>& values() const { return values_; }
  int operator()(int x) const { return values_[static_cast<std::size_t>(x)]; }
  bool is_injective() const;

  bool operator==(const GMap& other) const = default;

 private:
  GSet source_;
  GSet target_;
  std::vector<int> values_;
};

/// Left cosets gH listed by least representative, ascending.
struct CosetSpace {
  Subgroup subgroup;
  std::vector<Element> representatives;
  std::vector<int> coset_of;  // element -> coset index
};
CosetSpace left_cosets(const Group& g, const Subgroup& h);

/// G/H with action g.(g'H) = (gg')H.
GSet coset_gset(const Group& g, const Subgroup& h);

struct Orbit {
  int representative;
  Subgroup stabilizer;  // in the full acting group
  std::vector<int> members;
};

struct OrbitAnalysis {
  std::vector<Orbit> orbits;
  std::vector<int> fixed;  // points fixed by every element of the queried subgroup
};

OrbitAnalysis orbit_analysis(const GSet& x, const Subgroup& h);

/// Points fixed by every element of h.
std::vector<int> fixed_points(const GSet& x, const Subgroup& h);

Subgroup stabilizer(const GSet& x, int point);

/// All equivariant maps out of a transitive G-set, in order of the image of
/// point 0. Evaluation at point 0 is checked to be a bijection onto the
/// fixed points of the stabilizer of point 0.
std::vector<GMap> equivariant_maps(const GSet& source, const GSet& target);

/// Product with the diagonal action; point (x, y) has index x * |Y| + y.
GSet product(const GSet& x, const GSet& y);

struct GSetPushout {
  GSet object;
  std::vector<int> from_a;  // a -> pushout
  std::vector<int> from_b;  // b -> pushout
};

/// Pushout of a <- c -> b along an injective c -> b. Points of a come first,
/// then the points of b outside the image in ascending order.
GSetPushout pushout(const GMap& to_a, const GMap& mono_to_b);

}  // namespace eqhom
