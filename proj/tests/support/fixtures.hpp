#pragma once

// Small groups, G-simplicial sets and monomorphisms shared by the suites.

#include <string>
#include <vector>

#include "eqhom/simplicial.hpp"

namespace fixtures {

using namespace eqhom;

inline Group c2() { return Group::cyclic(2); }
inline Group c3() { return Group::cyclic(3); }
inline Group c4() { return Group::cyclic(4); }
inline Group s3() { return Group::symmetric(3); }
inline Group d4() { return Group::dihedral(4); }
inline Group klein() { return Group::direct_product(Group::cyclic(2), Group::cyclic(2)); }

inline std::vector<Group> small_groups() {
  return {Group::trivial(), c2(), c3(), c4(), klein(), s3(), Group::cyclic(6), d4(), Group::dihedral(6)};
}

// Action of C_n where element k acts by the k-th power of `gen`.
inline std::vector<std::vector<SimplexId>> cyclic_action(const Group& g, const std::vector<SimplexId>& gen) {
  std::vector<std::vector<SimplexId>> act(g.order());
  std::vector<SimplexId> cur(gen.size());
  for (std::size_t i = 0; i < gen.size(); ++i) cur[i] = static_cast<SimplexId>(i);
  // Element numbering of cyclic groups follows powers of the generator.
  for (std::size_t k = 0; k < g.order(); ++k) {
    act[k] = cur;
    std::vector<SimplexId> next(gen.size());
    for (std::size_t i = 0; i < gen.size(); ++i) next[i] = gen[static_cast<std::size_t>(cur[i])];
    cur = next;
  }
  return act;
}

inline SimplexRef v(SimplexId id) { return SimplexRef{id, {}}; }

// Two points swapped by C2.
inline GSSet swap_points() { return GSSet(c2(), {0, 0}, {{}, {}}, cyclic_action(c2(), {1, 0})); }

// Circle with two vertices and two edges, C2 rotating it freely.
inline GSSet free_circle2() {
  return GSSet(c2(), {0, 0, 1, 1}, {{}, {}, {v(1), v(0)}, {v(0), v(1)}}, cyclic_action(c2(), {1, 0, 3, 2}));
}

// Circle with three vertices and edges i -> i+1, C3 rotating it.
inline GSSet free_circle3() {
  return GSSet(c3(), {0, 0, 0, 1, 1, 1}, {{}, {}, {}, {v(1), v(0)}, {v(2), v(1)}, {v(0), v(2)}},
               cyclic_action(c3(), {1, 2, 0, 4, 5, 3}));
}

// Two edges a -> b0, a -> b1 swapped by C2; a is fixed.
inline GSSet wedge() {
  return GSSet(c2(), {0, 0, 0, 1, 1}, {{}, {}, {}, {v(1), v(0)}, {v(2), v(0)}}, cyclic_action(c2(), {0, 2, 1, 4, 3}));
}

// Vertices 0, 1, 2 with edges 0->1, 0->2, 1->2, 2->1; C2 swaps 1 and 2.
inline GSSet swap_triangle() {
  return GSSet(c2(), {0, 0, 0, 1, 1, 1, 1}, {{}, {}, {}, {v(1), v(0)}, {v(2), v(0)}, {v(2), v(1)}, {v(1), v(2)}},
               cyclic_action(c2(), {0, 2, 1, 4, 3, 6, 5}));
}

// Delta[2] with trivial action plus a free pair of vertices attached by edges.
inline GSSet mixed_triangle() {
  // 0,1,2 simplex vertices (fixed); 3,4 swapped; edges 01,02,12 fixed; edges 0->3, 0->4 swapped; one 2-simplex.
  std::vector<int> dims{0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 2};
  std::vector<std::vector<SimplexRef>> faces{{},           {},           {},           {},          {},
                                             {v(1), v(0)}, {v(2), v(0)}, {v(2), v(1)}, {v(3), v(0)}, {v(4), v(0)},
                                             {v(7), v(6), v(5)}};
  return GSSet(c2(), dims, faces, cyclic_action(c2(), {0, 1, 2, 4, 3, 5, 6, 7, 9, 8, 10}));
}

inline SMap inclusion_of_skeleton(const GSSet& x, int n) { return skeleton(x, n).inclusion; }

struct Mono {
  std::string name;
  SMap map;
};

// Monomorphisms covering free, trivial and mixed stabilizers.
inline std::vector<Mono> monomorphisms() {
  std::vector<Mono> out;
  const Group g2 = c2();
  out.push_back({"empty -> swap points", SMap::from_empty(swap_points())});
  out.push_back({"empty -> trivial Delta[1]", SMap::from_empty(GSSet::standard_simplex(1, g2))});
  {
    GSSet b = GSSet::standard_simplex(1, g2);
    std::vector<SimplexRef> vals{v(0), v(1)};
    out.push_back({"boundary -> trivial Delta[1]", SMap(GSSet::boundary(1, g2), b, vals)});
  }
  out.push_back({"empty -> free circle (C2)", SMap::from_empty(free_circle2())});
  out.push_back({"swap points -> free circle (C2)", inclusion_of_skeleton(free_circle2(), 0)});
  out.push_back({"empty -> free circle (C3)", SMap::from_empty(free_circle3())});
  out.push_back({"empty -> wedge", SMap::from_empty(wedge())});
  out.push_back({"vertices -> wedge", inclusion_of_skeleton(wedge(), 0)});
  out.push_back({"empty -> swap triangle", SMap::from_empty(swap_triangle())});
  out.push_back({"empty -> mixed triangle", SMap::from_empty(mixed_triangle())});
  out.push_back({"1-skeleton -> mixed triangle", inclusion_of_skeleton(mixed_triangle(), 1)});
  {
    Group g = s3();
    Subgroup h = Subgroup::generated_by(g, {1});
    GSSet b = gtensor(coset_gset(g, h), GSSet::standard_simplex(1));
    out.push_back({"empty -> S3/<t> (x) Delta[1]", SMap::from_empty(b)});
  }
  {
    Group g = klein();
    Subgroup h = Subgroup::generated_by(g, {1});
    GSSet b = gtensor(coset_gset(g, h), GSSet::standard_simplex(2));
    out.push_back({"empty -> K/C2 (x) Delta[2]", SMap::from_empty(b)});
  }
  {
    Prism p = prism(wedge());
    out.push_back({"wedge -> wedge x Delta[1]", p.end0});
  }
  out.push_back({"identity on mixed triangle", SMap::identity(mixed_triangle())});
  return out;
}

// Disjoint union of coset G-sets G/H_1 + ... + G/H_k.
inline GSet union_of_orbits(const Group& g, const std::vector<Subgroup>& hs) {
  std::vector<std::vector<int>> act(g.order());
  int offset = 0;
  for (const auto& h : hs) {
    GSet orbit = coset_gset(g, h);
    for (std::size_t e = 0; e < g.order(); ++e)
      for (std::size_t p = 0; p < orbit.size(); ++p) act[e].push_back(offset + orbit.apply(static_cast<Element>(e), static_cast<int>(p)));
    offset += static_cast<int>(orbit.size());
  }
  return GSet(g, std::move(act));
}

}  // namespace fixtures
