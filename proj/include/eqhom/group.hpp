#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace eqhom {

/// Group elements are dense identifiers 0..order-1; 0 is the identity.
using Element = int;

inline constexpr std::size_t kDefaultMaxGroupOrder = 64;

/// A finite group given by its multiplication table. Cheap to copy: the
/// table is shared and immutable.
class Group {
 public:
  /// Validates associativity, the identity 0 and inverses exhaustively.
  static Group from_table(std::vector<std::vector<Element>> mult);
  /// Closes permutations of {0..degree-1} under composition. Elements are
  /// numbered in breadth-first order from the identity, multiplying by the
  /// generators in the order given. Product is composition: (ab)(x) = a(b(x)).
  static Group from_permutations(std::size_t degree, const std::vector<std::vector<int>>& generators,
                                 std::size_t max_order = kDefaultMaxGroupOrder);

  static Group trivial();
  static Group cyclic(std::size_t n);
  /// Dihedral group of order 2n acting on an n-gon.
  static Group dihedral(std::size_t n);
  static Group symmetric(std::size_t n);
  static Group direct_product(const Group& a, const Group& b);

  std::size_t order() const { return data_->mult.size(); }
  Element mul(Element a, Element b) const { return data_->mult[a][b]; }
  Element inv(Element a) const { return data_->inv[a]; }
  /// a^{-1} h a
  Element conjugate(Element h, Element a) const { return mul(mul(inv(a), h), a); }
  const std::vector<std::vector<Element>>& table() const { return data_->mult; }
  /// Permutation realizing each element when built from generators (else empty).
  const std::vector<std::vector<int>>& permutations() const { return data_->perms; }

  bool operator==(const Group& other) const {
    return data_ == other.data_ || data_->mult == other.data_->mult;
  }

 private:
  struct Data {
    std::vector<std::vector<Element>> mult;
    std::vector<Element> inv;
    std::vector<std::vector<int>> perms;
  };
  explicit Group(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static Group validated(Data data);
  std::shared_ptr<const Data> data_;
};

/// A subgroup, stored as its sorted member list.
class Subgroup {
 public:
  /// Validates closure; members need not be sorted.
  Subgroup(Group parent, std::vector<Element> members);

  static Subgroup trivial(const Group& g) { return Subgroup(g, {0}); }
  static Subgroup whole(const Group& g);
  static Subgroup generated_by(const Group& g, const std::vector<Element>& generators);

  const Group& parent() const { return parent_; }
  const std::vector<Element>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Element x) const { return mask_[x]; }
  bool is_subset_of(const Subgroup& other) const;
  /// a^{-1} H a
  Subgroup conjugate_by(Element a) const;
  /// A small generating set, chosen greedily by identifier.
  std::vector<Element> generators() const;
  std::string str() const;

  bool operator==(const Subgroup& other) const { return members_ == other.members_; }
  /// Size first, then lexicographic membership.
  bool operator<(const Subgroup& other) const;

 private:
  Group parent_;
  std::vector<Element> members_;
  std::vector<bool> mask_;
};

/// Every subgroup exactly once, sorted by size then membership. Built by
/// closing the cyclic subgroups under joins.
std::vector<Subgroup> all_subgroups(const Group& g, std::size_t max_order = kDefaultMaxGroupOrder);

/// Least a (by identifier) with a^{-1} H a contained in K.
std::optional<Element> conjugating_element(const Subgroup& h, const Subgroup& k);

/// True when a^{-1} H a = K for some a.
bool are_conjugate(const Subgroup& h, const Subgroup& k);

/// Stabilizer subgroups are compared against a family in two readings: up to
/// conjugacy (some member is conjugate to H) and strictly (H is a member).
struct FamilyMembership {
  bool up_to_conjugacy = false;
  bool strict = false;
};
FamilyMembership family_membership(const Subgroup& h, const std::vector<Subgroup>& family);

}  // namespace eqhom
