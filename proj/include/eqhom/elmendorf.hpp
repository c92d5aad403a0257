#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqhom/chain.hpp"
#include "eqhom/orbit_category.hpp"

namespace eqhom {

template <class C>
struct FixedPart {
  typename C::Object object;
  typename C::Morphism inclusion;  // into the carrier
};

/// Finite sets, carried as G-sets over the trivial group.
struct FinSetCat {
  using Object = GSet;
  using Morphism = GMap;
  using GObject = GSet;
  static constexpr const char* name = "FinSet";

  static Morphism identity(const Object& x);
  static Morphism compose(const Morphism& second, const Morphism& first);
  static bool is_iso(const Morphism& f);
  static std::optional<bool> weak_equivalence(const Morphism&) { return std::nullopt; }
  static std::string summary(const Object& x);

  static Object carrier(const GObject& x);
  static Morphism act(const GObject& x, Element g);
  static GObject make_gobject(const Group& g, const Object& carrier, const std::vector<Morphism>& acts);
  static FixedPart<FinSetCat> fixed(const GObject& x, const Subgroup& h);
  /// Some u with mono o u = f, or nullopt.
  static std::optional<Morphism> factor(const Morphism& f, const Morphism& mono);
  /// Coproduct of n copies, copy-major.
  static Object copower(std::size_t n, const Object& c);
  /// copower(n, c) -> copower(m, c) sending copy i identically onto copy copies[i].
  static Morphism copy_map(const Object& c, std::size_t m, const std::vector<int>& copies);
};

/// Finite simplicial sets, carried as G-simplicial sets over the trivial group.
struct FinSSetCat {
  using Object = GSSet;
  using Morphism = SMap;
  using GObject = GSSet;
  static constexpr const char* name = "FinSSet";

  static Morphism identity(const Object& x);
  static Morphism compose(const Morphism& second, const Morphism& first);
  static bool is_iso(const Morphism& f);
  static std::optional<bool> weak_equivalence(const Morphism&) { return std::nullopt; }
  static std::string summary(const Object& x);

  static Object carrier(const GObject& x);
  static Morphism act(const GObject& x, Element g);
  static GObject make_gobject(const Group& g, const Object& carrier, const std::vector<Morphism>& acts);
  static FixedPart<FinSSetCat> fixed(const GObject& x, const Subgroup& h);
  static std::optional<Morphism> factor(const Morphism& f, const Morphism& mono);
  /// Layout of gtensor with a trivial n-point set.
  static Object copower(std::size_t n, const Object& c);
  static Morphism copy_map(const Object& c, std::size_t m, const std::vector<int>& copies);
};

/// Bounded chain complexes of free modules. Isomorphisms are degreewise
/// invertible maps; quasi-isomorphisms are reported separately.
struct ChainCat {
  using Object = ChainComplex;
  using Morphism = ChainMap;
  using GObject = EqChainComplex;
  static constexpr const char* name = "Ch";

  static Morphism identity(const Object& x);
  static Morphism compose(const Morphism& second, const Morphism& first);
  static bool is_iso(const Morphism& f);
  static std::optional<bool> weak_equivalence(const Morphism& f) { return is_quasi_iso(f); }
  static std::string summary(const Object& x);

  static Object carrier(const GObject& x) { return x.complex(); }
  static Morphism act(const GObject& x, Element g);
  static GObject make_gobject(const Group& g, const Object& carrier, const std::vector<Morphism>& acts);
  static FixedPart<ChainCat> fixed(const GObject& x, const Subgroup& h);
  static std::optional<Morphism> factor(const Morphism& f, const Morphism& mono);
  /// Direct sum of n copies, block-major in each degree.
  static Object copower(std::size_t n, const Object& c);
  static Morphism copy_map(const Object& c, std::size_t m, const std::vector<int>& copies);
};

/// A contravariant functor O_F(G)^op -> C. The structure map of
/// f : G/H -> G/K goes from value(K) to value(H).
template <class C>
class OrbitDiagram {
 public:
  using Object = typename C::Object;
  using Morphism = typename C::Morphism;

  /// maps[h][k][i] is the structure map of the i-th morphism of hom(h, k).
  /// Validates shapes, identities and composition exhaustively.
  OrbitDiagram(OrbitCategory category, std::vector<Object> values, std::vector<std::vector<std::vector<Morphism>>> maps);

  const OrbitCategory& category() const { return category_; }
  const Object& value(std::size_t h) const { return values_[h]; }
  const std::vector<Object>& values() const { return values_; }
  const Morphism& map(const OrbitMorphism& f) const;

 private:
  OrbitCategory category_;
  std::vector<Object> values_;
  std::vector<std::vector<std::vector<Morphism>>> maps_;
};

template <class C>
OrbitDiagram<C> constant_diagram(const OrbitCategory& category, const typename C::Object& c);

/// i^*: the value at G/e with g acting through R_g.
template <class C>
typename C::GObject i_upper(const OrbitDiagram<C>& t);

/// i_*: H |-> X^H with R_a acting by x |-> a.x.
template <class C>
OrbitDiagram<C> i_lower(const OrbitCategory& category, const typename C::GObject& x);

/// hom(-, G/K) (x) c.
template <class C>
OrbitDiagram<C> free_cell_diagram(const OrbitCategory& category, std::size_t k, const typename C::Object& c);

/// S (x) c with G permuting the copies.
template <class C>
typename C::GObject copower_gobject(const GSet& s, const typename C::Object& c);

/// True when the components form a natural transformation s -> t.
template <class C>
bool is_natural(const OrbitDiagram<C>& s, const OrbitDiagram<C>& t, const std::vector<typename C::Morphism>& components);

struct ObjectReport {
  std::string subgroup;
  bool unit_iso = false;
  std::optional<bool> unit_weak_equivalence;
  std::string source;
  std::string target;
};

struct AdjunctionReport {
  bool unit_iso = false;
  bool unit_natural = false;
  bool counit_iso = false;
  bool counit_equivariant = false;
  bool triangle_identities = false;
  std::vector<ObjectReport> per_object;
};

template <class C>
struct AdjunctionCheck {
  OrbitDiagram<C> round_trip;  // i_* i^* t
  std::vector<typename C::Morphism> unit;  // t -> round_trip, per object
  typename C::Morphism counit;  // i^* i_* x -> x on carriers
  AdjunctionReport report;
};

template <class C>
AdjunctionCheck<C> adjunction_check(const OrbitDiagram<C>& t, const typename C::GObject& x);

struct CellularityReport {
  std::string h;
  std::string k;
  std::size_t fixed_cosets = 0;  // |(G/K)^H|
  std::size_t orbit_count = 0;  // |H\(G/K)|
  bool iso = false;
  std::string lhs;
  std::string rhs;
};

template <class C>
struct CellularityCheck {
  typename C::Object lhs;  // (G/K)^H (x) A
  typename C::Object rhs;  // (G/K (x) A)^H
  typename C::Morphism comparison;
  CellularityReport report;
};

template <class C>
CellularityCheck<C> cellularity_report(const Subgroup& h, const Subgroup& k, const typename C::Object& a);

/// Diagrams valued in the poset 0 -> 1 are assignments with
/// value(K) <= value(H) whenever hom(G/H, G/K) is nonempty.
struct ArrowCensus {
  std::vector<std::vector<int>> diagrams;
  std::size_t g_objects = 2;
  std::size_t diagram_count() const { return diagrams.size(); }
};
ArrowCensus arrow_poset_census(const OrbitCategory& category);

/// Both sides of Set^G(i^* t, x) = Nat(t, i_* x), enumerated exhaustively.
struct HomBijection {
  std::size_t g_maps = 0;
  std::size_t natural_transformations = 0;
  bool bijective = false;
};
HomBijection hom_bijection_check(const OrbitDiagram<FinSetCat>& t, const GSet& x);

}  // namespace eqhom
