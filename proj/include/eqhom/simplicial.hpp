#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqhom/gset.hpp"

namespace eqhom {

using SimplexId = int;

inline constexpr int kDefaultMaxDimension = 8;

/// A simplex in Eilenberg-Zilber normal form: s_{i_k} ... s_{i_1} x with x
/// nondegenerate and i_k > ... > i_1. `word` lists i_k first.
struct SimplexRef {
  SimplexId base = 0;
  std::vector<int> word;

  bool is_degenerate() const { return !word.empty(); }
  std::string str() const;
  bool operator==(const SimplexRef& other) const = default;
  auto operator<=>(const SimplexRef& other) const = default;
};

/// Order-preserving surjection [m] -> [n], listed by values.
using Surjection = std::vector<int>;

Surjection word_to_surjection(const std::vector<int>& word, int base_dim);
std::vector<int> surjection_to_word(const Surjection& s);

/// Face or degeneracy operator for apply_operator.
struct SimplicialOperator {
  enum class Kind { Face, Degeneracy };
  Kind kind;
  int index;
  static SimplicialOperator face(int i) { return {Kind::Face, i}; }
  static SimplicialOperator degeneracy(int i) { return {Kind::Degeneracy, i}; }
};

/// A finite simplicial set with a group action, stored through its
/// nondegenerate simplices. Identifiers are dense and dimension-major; faces
/// of a nondegenerate simplex are normal forms; the action permutes
/// nondegenerate simplices of each dimension.
class GSSet {
 public:
  /// Validates face dimensions, the simplicial identities, the action
  /// homomorphism and equivariance of faces.
  GSSet(Group group, std::vector<int> dims, std::vector<std::vector<SimplexRef>> faces,
        std::vector<std::vector<SimplexId>> action, int max_dim = kDefaultMaxDimension);
  /// Trivial action by `group`.
  GSSet(Group group, std::vector<int> dims, std::vector<std::vector<SimplexRef>> faces);

  static GSSet empty(const Group& group = Group::trivial());
  static GSSet point(const Group& group = Group::trivial());
  /// Delta[n]: nondegenerate simplices are the nonempty subsets of {0..n},
  /// ordered by dimension then lexicographically.
  static GSSet standard_simplex(int n, const Group& group = Group::trivial());
  /// The boundary of Delta[n], with identifiers shared with standard_simplex(n).
  static GSSet boundary(int n, const Group& group = Group::trivial());
  /// Vertex list of each simplex of standard_simplex(n).
  static std::vector<std::vector<int>> standard_simplex_vertices(int n);

  const Group& group() const { return group_; }
  std::size_t size() const { return dims_.size(); }
  int dim(SimplexId x) const { return dims_[static_cast<std::size_t>(x)]; }
  int dim(const SimplexRef& x) const { return dim(x.base) + static_cast<int>(x.word.size()); }
  /// -1 when empty.
  int top_dim() const { return dims_.empty() ? -1 : dims_.back(); }
  std::vector<SimplexId> simplices(int n) const;
  std::size_t count(int n) const;
  const std::vector<int>& dims() const { return dims_; }
  const std::vector<SimplexRef>& faces(SimplexId x) const { return faces_[static_cast<std::size_t>(x)]; }
  const std::vector<std::vector<SimplexId>>& action() const { return action_; }
  bool has_trivial_action() const;

  SimplexRef face(const SimplexRef& x, int i) const;
  SimplexRef degeneracy(const SimplexRef& x, int i) const;
  SimplexRef apply_operator(const SimplexRef& x, SimplicialOperator op) const;

  SimplexId act(Element g, SimplexId x) const { return action_[static_cast<std::size_t>(g)][static_cast<std::size_t>(x)]; }
  SimplexRef act(Element g, const SimplexRef& x) const { return {act(g, x.base), x.word}; }
  Subgroup stabilizer(SimplexId x) const;
  bool is_fixed(SimplexId x, const Subgroup& h) const;

  /// Same simplicial set over the trivial group.
  GSSet forget_action() const;
  /// Same simplicial set with `group` acting trivially; requires a trivial action.
  GSSet with_trivial_action(const Group& group) const;

  bool operator==(const GSSet& other) const = default;

 private:
  Group group_;
  std::vector<int> dims_;
  std::vector<std::vector<SimplexRef>> faces_;
  std::vector<std::vector<SimplexId>> action_;
};

/// A simplicial G-map, determined by the images of nondegenerate simplices.
class SMap {
 public:
  /// Validates dimensions, compatibility with faces and equivariance.
  SMap(GSSet source, GSSet target, std::vector<SimplexRef> values);

  static SMap identity(const GSSet& x);
  static SMap from_empty(const GSSet& target);

  const GSSet& source() const { return source_; }
  const GSSet& target() const { return target_; }
  const std::vector<SimplexRef>& values() const { return values_; }
  SimplexRef operator()(const SimplexRef& x) const;
  SimplexRef operator()(SimplexId x) const { return values_[static_cast<std::size_t>(x)]; }

  /// Injective on all simplices: nondegenerate images, pairwise distinct.
  bool is_injective() const;
  bool is_isomorphism() const;
  /// First simplex witnessing non-injectivity, if any.
  std::optional<SimplexId> injectivity_witness() const;

  bool operator==(const SMap& other) const = default;

 private:
  GSSet source_;
  GSSet target_;
  std::vector<SimplexRef> values_;
};

SMap compose(const SMap& second, const SMap& first);

struct SubObject {
  GSSet object;
  SMap inclusion;
};

/// Sub-simplicial set on the simplices marked `keep` (must be closed under
/// faces). With keep_action the marked set must be invariant and the action
/// restricts; otherwise the result carries the trivial group and includes
/// into x.forget_action().
SubObject restrict_to(const GSSet& x, const std::vector<bool>& keep, bool keep_action);

/// X^H as a plain simplicial set, with its inclusion into X.
SubObject fixed_sset(const GSSet& x, const Subgroup& h);

/// Sk_n X with the restricted action; Sk_{-1} X is empty.
SubObject skeleton(const GSSet& x, int n);

/// S (x) A: simplices S x A_n with G acting on S. A must carry the trivial
/// group. Nondegenerate simplex (s, a) in dimension d has identifier
/// offset_d + s * |A_d| + index of a among A_d.
GSSet gtensor(const GSet& s, const GSSet& a);

struct Coproduct {
  GSSet object;
  std::vector<SMap> injections;
};
Coproduct coproduct(const std::vector<GSSet>& parts);

struct SSetPushout {
  GSSet object;
  SMap from_a;
  SMap from_b;
};
/// Pushout of a <- c -> b along a monomorphism c -> b. Simplices of a keep
/// their relative order; new simplices of b follow within each dimension.
SSetPushout pushout(const SMap& to_a, const SMap& mono_to_b);

/// X x Delta[1] together with its two ends and the projection.
struct Prism {
  /// Nondegenerate simplex of the product: base x, optional split index j
  /// (the first factor is s_j x) and the position where the Delta[1]
  /// coordinate switches from 0 to 1 (0 = constant 1, m+1 = constant 0).
  struct Cell {
    SimplexId base;
    int split;  // -1 when the first factor is x itself
    int jump;
  };
  GSSet product;
  std::vector<Cell> cells;
  SMap end0;
  SMap end1;
  SMap proj;

  /// Identifier of (s_j x, s_{others} iota): the (n+1)-simplex whose
  /// coordinate switches right after position j.
  SimplexId shuffle_cell(SimplexId x, int j) const;
};
Prism prism(const GSSet& x);

struct Cell {
  SimplexId representative;
  Subgroup stabilizer;
  std::vector<SimplexRef> attaching;  // faces d_0..d_n of the representative, in B
};

/// Equivariant cells of a monomorphism A -> B, per dimension.
struct CellStructure {
  std::vector<std::vector<Cell>> cells;  // cells[n]
  std::size_t cell_count() const;
};

CellStructure cell_decomposition(const SMap& f);

/// Result of attaching the cells of a CellStructure dimension by dimension
/// via pushouts of G/G_x (x) dDelta[n] -> G/G_x (x) Delta[n].
struct CellReplay {
  std::vector<GSSet> stages;  // stages[n] = A u Sk_n B as built by pushouts
  std::vector<SMap> comparisons;  // stages[n] -> B, verified injective onto A u Sk_n B
  SMap final_comparison;  // verified isomorphism onto B
};

/// Rebuilds B from A and the cells; throws VerificationError if any stage
/// fails to match A u Sk_n B.
CellReplay replay_cells(const SMap& f, const CellStructure& cells);

struct CofibrationVerdict {
  bool is_cofibration = false;
  bool injective = false;
  std::optional<SimplexId> witness;  // first failing simplex of the target
  std::optional<Subgroup> witness_stabilizer;
  /// Some new simplex has a stabilizer conjugate to, but not in, the family.
  bool strict_reading_differs = false;
};

/// Monomorphism whose new nondegenerate simplices have stabilizers
/// conjugate to members of the family.
CofibrationVerdict check_F_cofibration(const SMap& f, const std::vector<Subgroup>& family);

/// Isomorphism by backtracking over dimension-wise bijections of
/// nondegenerate simplices, respecting faces and the action.
std::optional<SMap> find_isomorphism(const GSSet& x, const GSSet& y);

}  // namespace eqhom
