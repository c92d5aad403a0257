#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqhom/chain.hpp"

namespace eqhom {

inline constexpr std::size_t kDefaultMaxUnknowns = 5000;

/// Equivariant homotopy inverse g : D -> C of f : C -> D with
/// f g - id = d s + s d on D and g f - id = d t + t d on C.
struct Certificate {
  ChainMap g;
  ChainHomotopy s;
  ChainHomotopy t;
};

/// Basis of the equivariant matrices X : A_n -> B_m (rho_B X = X rho_A).
/// Over Z the basis spans every integral solution.
std::vector<Matrix> equivariant_hom_basis(const EqChainComplex& a, int n, const EqChainComplex& b, int m);

/// Solves the linear system in (g, s, t) at once. Returns nullopt when it
/// has no solution over the ring of f. Throws InputError if f is not
/// equivariant or the system exceeds max_unknowns.
std::optional<Certificate> certificate_search(const ChainMap& f, const EqChainComplex& c, const EqChainComplex& d,
                                              std::size_t max_unknowns = kDefaultMaxUnknowns);

/// Rechecks every identity of the certificate by exact arithmetic.
bool verify_certificate(const Certificate& cert, const ChainMap& f, const EqChainComplex& c, const EqChainComplex& d);

struct IsotropyReport {
  bool holds = false;  // every stabilizer conjugate to a member of the family
  bool strict_holds = false;  // every stabilizer is itself a member
  std::optional<std::string> witness;  // "source simplex 3" / "target simplex 0"
  std::optional<Subgroup> witness_stabilizer;
};

struct SubgroupCheck {
  Subgroup subgroup;
  bool quasi_iso = false;
  std::vector<HomologyGroup> source_homology;
  std::vector<HomologyGroup> target_homology;
};

struct WhiteheadReport {
  Ring ring;
  IsotropyReport isotropy;
  std::vector<SubgroupCheck> hyp_a;  // invariants of chains
  std::vector<SubgroupCheck> hyp_b;  // chains of fixed points
  bool searched = false;
  std::optional<Certificate> certificate;

  bool hyp_a_holds() const;
  bool hyp_b_holds() const;
  /// Isotropy and one of the hypotheses hold, so a certificate must exist.
  bool theorem_applies() const { return isotropy.holds && (hyp_a_holds() || hyp_b_holds()); }
  /// First subgroup where a hypothesis fails, per hypothesis.
  std::optional<Subgroup> first_failure_a() const;
  std::optional<Subgroup> first_failure_b() const;
};

/// Checks isotropy, hypothesis (a) and (b) for each member of the family and
/// searches for a certificate for C(f; R) when (a) or (b) holds throughout.
WhiteheadReport whitehead_verify(const SMap& f, const std::vector<Subgroup>& family, const Ring& ring,
                                 std::size_t max_unknowns = kDefaultMaxUnknowns);

}  // namespace eqhom
