#include "eqhom/gset.hpp"

#include <algorithm>

#include "eqhom/errors.hpp"

namespace eqhom {

GSet::GSet(Group group, std::vector<std::vector<int>> action)
    : group_(std::move(group)), action_(std::move(action)) {
  if (action_.size() != group_.order())
    throw InputError("gset: need one permutation per group element");
  size_ = action_[0].size();
  for (std::size_t g = 0; g < action_.size(); ++g) {
    const auto& p = action_[g];
    if (p.size() != size_) throw InputError("gset: permutation " + std::to_string(g) + " has wrong length");
    std::vector<bool> hit(size_, false);
    for (int v : p) {
      if (v < 0 || static_cast<std::size_t>(v) >= size_ || hit[static_cast<std::size_t>(v)])
        throw InputError("gset: action of " + std::to_string(g) + " is not a permutation");
      hit[static_cast<std::size_t>(v)] = true;
    }
  }
  for (std::size_t x = 0; x < size_; ++x)
    if (action_[0][x] != static_cast<int>(x)) throw InputError("gset: identity does not act trivially");
  for (std::size_t g = 0; g < action_.size(); ++g)
    for (std::size_t h = 0; h < action_.size(); ++h) {
      const auto gh = static_cast<std::size_t>(group_.mul(static_cast<Element>(g), static_cast<Element>(h)));
      for (std::size_t x = 0; x < size_; ++x)
        if (action_[g][static_cast<std::size_t>(action_[h][x])] != action_[gh][x])
          throw InputError("gset: action is not a homomorphism at (" + std::to_string(g) + "," +
                           std::to_string(h) + ")");
    }
}

GSet GSet::trivial(const Group& group, std::size_t size) {
  std::vector<int> id(size);
  for (std::size_t i = 0; i < size; ++i) id[i] = static_cast<int>(i);
  return GSet(group, std::vector<std::vector<int>>(group.order(), id));
}

bool GSet::is_transitive() const {
  if (size_ == 0) return false;
  std::vector<bool> reached(size_, false);
  for (const auto& p : action_) reached[static_cast<std::size_t>(p[0])] = true;
  return std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
}

GMap::GMap(GSet source, GSet target, std::vector<int> values)
    : source_(std::move(source)), target_(std::move(target)), values_(std::move(values)) {
  if (!(source_.group() == target_.group())) throw InputError("gmap: source and target groups differ");
  if (values_.size() != source_.size()) throw InputError("gmap: wrong number of values");
  for (int v : values_)
    if (v < 0 || static_cast<std::size_t>(v) >= target_.size()) throw InputError("gmap: value out of range");
  for (std::size_t g = 0; g < source_.group().order(); ++g)
    for (std::size_t x = 0; x < source_.size(); ++x) {
      auto ge = static_cast<Element>(g);
      if (values_[static_cast<std::size_t>(source_.apply(ge, static_cast<int>(x)))] != target_.apply(ge, values_[x]))
        throw InputError("gmap: not equivariant at point " + std::to_string(x));
    }
}

bool GMap::is_injective() const {
  std::vector<bool> hit(target_.size(), false);
  for (int v : values_) {
    if (hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

CosetSpace left_cosets(const Group& g, const Subgroup& h) {
  if (!(h.parent() == g)) throw InputError("left_cosets: subgroup of a different group");
  CosetSpace cs{h, {}, std::vector<int>(g.order(), -1)};
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (cs.coset_of[a] >= 0) continue;
    const int idx = static_cast<int>(cs.representatives.size());
    cs.representatives.push_back(static_cast<Element>(a));
    for (Element x : h.members()) cs.coset_of[static_cast<std::size_t>(g.mul(static_cast<Element>(a), x))] = idx;
  }
  return cs;
}

GSet coset_gset(const Group& g, const Subgroup& h) {
  CosetSpace cs = left_cosets(g, h);
  std::vector<std::vector<int>> act(g.order(), std::vector<int>(cs.representatives.size()));
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t c = 0; c < cs.representatives.size(); ++c)
      act[x][c] = cs.coset_of[static_cast<std::size_t>(g.mul(static_cast<Element>(x), cs.representatives[c]))];
  return GSet(g, std::move(act));
}

Subgroup stabilizer(const GSet& x, int point) {
  std::vector<Element> members;
  for (std::size_t g = 0; g < x.group().order(); ++g)
    if (x.apply(static_cast<Element>(g), point) == point) members.push_back(static_cast<Element>(g));
  return Subgroup(x.group(), std::move(members));
}

std::vector<int> fixed_points(const GSet& x, const Subgroup& h) {
  std::vector<int> out;
  for (std::size_t p = 0; p < x.size(); ++p) {
    auto pi = static_cast<int>(p);
    if (std::all_of(h.members().begin(), h.members().end(), [&](Element e) { return x.apply(e, pi) == pi; }))
      out.push_back(pi);
  }
  return out;
}

OrbitAnalysis orbit_analysis(const GSet& x, const Subgroup& h) {
  if (!(h.parent() == x.group())) throw InputError("orbit_analysis: subgroup of a different group");
  OrbitAnalysis out;
  std::vector<bool> seen(x.size(), false);
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (seen[p]) continue;
    std::vector<int> members;
    for (std::size_t g = 0; g < x.group().order(); ++g) {
      int y = x.apply(static_cast<Element>(g), static_cast<int>(p));
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    out.orbits.push_back(Orbit{static_cast<int>(p), stabilizer(x, static_cast<int>(p)), std::move(members)});
  }
  out.fixed = fixed_points(x, h);
  return out;
}

std::vector<GMap> equivariant_maps(const GSet& source, const GSet& target) {
  if (!source.is_transitive()) throw InputError("equivariant_maps: source is not transitive");
  const Group& g = source.group();
  Subgroup h = stabilizer(source, 0);
  // Any point of source is g.0 for the least such g.
  std::vector<Element> lift(source.size(), -1);
  for (std::size_t e = 0; e < g.order(); ++e) {
    int p = source.apply(static_cast<Element>(e), 0);
    if (lift[static_cast<std::size_t>(p)] < 0) lift[static_cast<std::size_t>(p)] = static_cast<Element>(e);
  }
  std::vector<GMap> maps;
  const auto fixed = fixed_points(target, h);
  for (int y : fixed) {
    std::vector<int> values(source.size());
    for (std::size_t p = 0; p < source.size(); ++p) values[p] = target.apply(lift[p], y);
    maps.emplace_back(source, target, std::move(values));
  }
  // Evaluation at the base point must be a bijection onto the H-fixed points.
  std::vector<int> evaluated;
  for (const auto& m : maps) evaluated.push_back(m(0));
  if (evaluated != fixed) throw VerificationError("equivariant_maps: evaluation is not a bijection onto X^H");
  return maps;
}

GSet product(const GSet& x, const GSet& y) {
  if (!(x.group() == y.group())) throw InputError("product: different groups");
  std::vector<std::vector<int>> act(x.group().order(), std::vector<int>(x.size() * y.size()));
  for (std::size_t g = 0; g < act.size(); ++g)
    for (std::size_t a = 0; a < x.size(); ++a)
      for (std::size_t b = 0; b < y.size(); ++b) {
        auto ge = static_cast<Element>(g);
        act[g][a * y.size() + b] = x.apply(ge, static_cast<int>(a)) * static_cast<int>(y.size()) +
                                   y.apply(ge, static_cast<int>(b));
      }
  return GSet(x.group(), std::move(act));
}

GSetPushout pushout(const GMap& to_a, const GMap& mono_to_b) {
  if (!(to_a.source() == mono_to_b.source())) throw InputError("pushout: legs have different sources");
  if (!mono_to_b.is_injective()) throw InputError("pushout: leg into b is not injective");
  const GSet& a = to_a.target();
  const GSet& b = mono_to_b.target();
  std::vector<int> from_b(b.size(), -1);
  for (std::size_t c = 0; c < to_a.source().size(); ++c) from_b[static_cast<std::size_t>(mono_to_b(static_cast<int>(c)))] = to_a(static_cast<int>(c));
  int next = static_cast<int>(a.size());
  for (auto& v : from_b)
    if (v < 0) v = next++;
  std::vector<std::vector<int>> act(a.group().order(), std::vector<int>(static_cast<std::size_t>(next)));
  for (std::size_t g = 0; g < act.size(); ++g) {
    auto ge = static_cast<Element>(g);
    for (std::size_t p = 0; p < a.size(); ++p) act[g][p] = a.apply(ge, static_cast<int>(p));
    for (std::size_t p = 0; p < b.size(); ++p)
      if (from_b[p] >= static_cast<int>(a.size()))
        act[g][static_cast<std::size_t>(from_b[p])] = from_b[static_cast<std::size_t>(b.apply(ge, static_cast<int>(p)))];
  }
  std::vector<int> from_a(a.size());
  for (std::size_t p = 0; p < a.size(); ++p) from_a[p] = static_cast<int>(p);
  return GSetPushout{GSet(a.group(), std::move(act)), std::move(from_a), std::move(from_b)};
}

}  // namespace eqhom
