#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqhom/linalg.hpp"
#include "eqhom/simplicial.hpp"

namespace eqhom {

/// A bounded complex of finitely generated free R-modules in degrees
/// 0..top. d(n) is the rank(n-1) x rank(n) matrix of d_n : C_n -> C_{n-1};
/// it is defined (possibly with zero rows or columns) for every n >= 0.
class ChainComplex {
 public:
  /// `differentials[n-1]` is d_n for n = 1..top. Validates shapes, ring
  /// membership of the entries and d^2 = 0.
  ChainComplex(Ring ring, std::vector<std::size_t> ranks, std::vector<Matrix> differentials);

  static ChainComplex zero(const Ring& ring);
  /// R concentrated in degree n.
  static ChainComplex concentrated(const Ring& ring, int n);
  /// D^n: R in degrees n and n-1 with identity differential (n >= 1).
  static ChainComplex disk(const Ring& ring, int n);

  const Ring& ring() const { return ring_; }
  /// -1 for the zero complex.
  int top() const { return static_cast<int>(ranks_.size()) - 1; }
  std::size_t rank(int n) const;
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  Matrix d(int n) const;
  bool is_zero() const;

  bool operator==(const ChainComplex& other) const = default;

 private:
  Ring ring_;
  std::vector<std::size_t> ranks_;
  std::vector<Matrix> d_;  // d_[n-1] = d_n
};

/// A chain complex with a group acting by chain automorphisms.
class EqChainComplex {
 public:
  /// rep[g][n] is rho(g) in degree n. Validates the homomorphism property,
  /// invertibility and commutation with d.
  EqChainComplex(Group group, ChainComplex complex, std::vector<std::vector<Matrix>> rep);
  static EqChainComplex trivial(const Group& group, ChainComplex complex);

  const Group& group() const { return group_; }
  const ChainComplex& complex() const { return complex_; }
  const Ring& ring() const { return complex_.ring(); }
  /// Identity of the right size outside the stored degrees.
  Matrix rho(Element g, int n) const;
  const std::vector<std::vector<Matrix>>& rep() const { return rep_; }
  bool is_permutation_representation() const;

  bool operator==(const EqChainComplex& other) const = default;

 private:
  Group group_;
  ChainComplex complex_;
  std::vector<std::vector<Matrix>> rep_;
};

/// Degreewise matrices f_n : C_n -> D_n, defined for n = 0..max(top).
class ChainMap {
 public:
  /// Validates shapes and d f = f d.
  ChainMap(ChainComplex source, ChainComplex target, std::vector<Matrix> components);
  static ChainMap identity(const ChainComplex& c);
  static ChainMap zero(const ChainComplex& source, const ChainComplex& target);

  const ChainComplex& source() const { return source_; }
  const ChainComplex& target() const { return target_; }
  /// Zero-shaped outside the stored range.
  Matrix at(int n) const;
  const std::vector<Matrix>& components() const { return f_; }
  int length() const { return static_cast<int>(f_.size()); }

  bool operator==(const ChainMap& other) const = default;

 private:
  ChainComplex source_;
  ChainComplex target_;
  std::vector<Matrix> f_;
};

ChainMap compose(const ChainMap& second, const ChainMap& first);
ChainMap subtract(const ChainMap& a, const ChainMap& b);
bool is_equivariant(const ChainMap& f, const EqChainComplex& source, const EqChainComplex& target);

/// Degree +1 maps h_n : C_n -> D_{n+1}; no structural constraint.
struct ChainHomotopy {
  ChainComplex source;
  ChainComplex target;
  std::vector<Matrix> components;  // h_n for n = 0..max(top)

  Matrix at(int n) const;
  static ChainHomotopy zero(const ChainComplex& source, const ChainComplex& target);
};

/// d h + h d, as a degreewise family C_n -> D_n.
std::vector<Matrix> homotopy_boundary(const ChainHomotopy& h);
/// True when d h + h d = g - f in every degree.
bool is_homotopy(const ChainHomotopy& h, const ChainMap& f, const ChainMap& g);
bool is_equivariant(const ChainHomotopy& h, const EqChainComplex& source, const EqChainComplex& target);

struct HomologyGroup {
  int degree = 0;
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // each divides the next, all > 1

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  /// e.g. "Z^2 + Z/2", "F3", "0".
  std::string str(const Ring& ring) const;
  bool operator==(const HomologyGroup& other) const = default;
};

std::vector<HomologyGroup> homology(const ChainComplex& c);
/// One line per degree: "H_n = ...".
std::string homology_text(const ChainComplex& c, const std::vector<HomologyGroup>& h);
bool is_acyclic(const ChainComplex& c);

/// Cone of f : C -> D with C(f)_n = C_{n-1} + D_n and
/// d(c, e) = (-d c, f c + d e).
ChainComplex mapping_cone(const ChainMap& f);
bool is_quasi_iso(const ChainMap& f);

/// Normalized chains: basis the nondegenerate n-simplices in identifier
/// order, d the alternating face sum with degenerate faces dropped, and the
/// action by permutation matrices.
EqChainComplex normalized_chains(const GSSet& x, const Ring& ring);
/// C(f; R) for a simplicial G-map.
ChainMap induced_map(const SMap& f, const Ring& ring);

/// Position of a nondegenerate simplex among those of its dimension.
std::size_t local_index(const GSSet& x, SimplexId id);

struct Invariants {
  ChainComplex complex;
  ChainMap inclusion;  // into the underlying complex
  bool orbit_sum_basis = false;
};

/// H-invariants: orbit sums for permutation representations, otherwise the
/// exact kernel of the stacked rho(h) - 1 over generators of H.
Invariants invariants(const EqChainComplex& c, const Subgroup& h);

/// Chain map between invariants induced by an equivariant f.
ChainMap invariants_map(const ChainMap& f, const Invariants& source, const Invariants& target);

/// phi_n = (-1)^n hc o shuffle(x (x) iota) for a chain map hc out of the
/// normalized chains of prism(x).product, where
///   shuffle(x (x) iota) = sum_j (-1)^(n-j) (s_j x, s_{others} iota).
/// Verifies d phi + phi d = hc o C(end1) - hc o C(end0) and, when
/// representations are supplied, equivariance.
ChainHomotopy prism_homotopy(const ChainMap& hc, const GSSet& x,
                             const std::optional<EqChainComplex>& target_rep = std::nullopt);

}  // namespace eqhom
