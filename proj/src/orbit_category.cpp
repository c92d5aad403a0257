#include "eqhom/orbit_category.hpp"

#include <algorithm>
#include <sstream>

#include "eqhom/errors.hpp"

namespace eqhom {

OrbitCategory::OrbitCategory(Group group, std::vector<Subgroup> family)
    : group_(std::move(group)), family_(std::move(family)) {
  if (family_.empty()) throw InputError("orbit category: empty family");
  for (const auto& h : family_)
    if (!(h.parent() == group_)) throw InputError("orbit category: family member " + h.str() + " not a subgroup");
  for (const auto& h : family_) {
    coset_spaces_.push_back(left_cosets(group_, h));
    cosets_.push_back(coset_gset(group_, h));
  }
  const std::size_t n = family_.size();
  hom_.assign(n, std::vector<std::vector<Element>>(n));
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t k = 0; k < n; ++k)
      // hom(G/H, G/K) is (G/K)^H: cosets aK with a^{-1}Ha in K.
      for (int c : fixed_points(cosets_[k], family_[h]))
        hom_[h][k].push_back(coset_spaces_[k].representatives[static_cast<std::size_t>(c)]);
}

int OrbitCategory::index_of(const Subgroup& h) const {
  for (std::size_t i = 0; i < family_.size(); ++i)
    if (family_[i] == h) return static_cast<int>(i);
  return -1;
}

Element OrbitCategory::canonical_rep(std::size_t k, Element a) const {
  const auto& cs = coset_spaces_[k];
  return cs.representatives[static_cast<std::size_t>(cs.coset_of[static_cast<std::size_t>(a)])];
}

std::vector<OrbitMorphism> OrbitCategory::morphisms(std::size_t h, std::size_t k) const {
  std::vector<OrbitMorphism> out;
  for (Element a : hom_[h][k]) out.push_back({h, k, a});
  return out;
}

std::size_t OrbitCategory::position(const OrbitMorphism& f) const {
  const auto& list = hom_[f.source][f.target];
  auto it = std::lower_bound(list.begin(), list.end(), f.rep);
  if (it == list.end() || *it != f.rep) throw InputError("orbit category: morphism not in hom set");
  return static_cast<std::size_t>(it - list.begin());
}

OrbitMorphism OrbitCategory::morphism(std::size_t h, std::size_t k, Element a) const {
  for (Element x : family_[h].members())
    if (!family_[k].contains(group_.conjugate(x, a)))
      throw InputError("orbit category: R_" + std::to_string(a) + " is not a map G/" + family_[h].str() + " -> G/" +
                       family_[k].str());
  return {h, k, canonical_rep(k, a)};
}

OrbitMorphism OrbitCategory::compose(const OrbitMorphism& second, const OrbitMorphism& first) const {
  if (first.target != second.source) throw InputError("orbit category: composing mismatched endpoints");
  return morphism(first.source, second.target, group_.mul(first.rep, second.rep));
}

GMap OrbitCategory::realize(const OrbitMorphism& f) const {
  const auto& src = coset_spaces_[f.source];
  const auto& tgt = coset_spaces_[f.target];
  std::vector<int> values(src.representatives.size());
  for (std::size_t c = 0; c < values.size(); ++c)
    values[c] = tgt.coset_of[static_cast<std::size_t>(group_.mul(src.representatives[c], f.rep))];
  return GMap(cosets_[f.source], cosets_[f.target], std::move(values));
}

std::string OrbitCategory::table() const {
  std::ostringstream out;
  out << "objects:\n";
  for (std::size_t i = 0; i < family_.size(); ++i)
    out << "  [" << i << "] G/" << family_[i].str() << "  (" << cosets_[i].size() << " cosets)\n";
  out << "hom sets (coset representatives a of R_a):\n";
  for (std::size_t h = 0; h < family_.size(); ++h)
    for (std::size_t k = 0; k < family_.size(); ++k) {
      out << "  hom([" << h << "],[" << k << "]) = {";
      for (std::size_t i = 0; i < hom_[h][k].size(); ++i) out << (i ? "," : "") << hom_[h][k][i];
      out << "}\n";
    }
  out << "composition (R_b o R_a = R_ab):\n";
  for (std::size_t h = 0; h < family_.size(); ++h)
    for (std::size_t k = 0; k < family_.size(); ++k)
      for (std::size_t l = 0; l < family_.size(); ++l)
        for (Element a : hom_[h][k])
          for (Element b : hom_[k][l]) {
            auto c = compose({k, l, b}, {h, k, a});
            out << "  [" << h << "]->[" << k << "]->[" << l << "]: R_" << b << " o R_" << a << " = R_" << c.rep << "\n";
          }
  return out.str();
}

}  // namespace eqhom
