#include <catch2/catch_amalgamated.hpp>

#include "eqhom/elmendorf.hpp"
#include "eqhom/errors.hpp"
#include "support/fixtures.hpp"

using namespace eqhom;

namespace {

const Ring Z = Ring::integers();

OrbitCategory all_orbits(const Group& g) { return OrbitCategory(g, all_subgroups(g)); }

GSet points(std::size_t n) { return GSet::trivial(Group::trivial(), n); }

// G-sets of size <= max_size built from orbits, including the empty one.
std::vector<GSet> small_gsets(const Group& g, std::size_t max_size) {
  std::vector<GSet> out{GSet::trivial(g, 0)};
  auto subs = all_subgroups(g);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (g.order() / subs[i].size() > max_size) continue;
    out.push_back(coset_gset(g, subs[i]));
    for (std::size_t j = i; j < subs.size(); ++j)
      if (g.order() / subs[i].size() + g.order() / subs[j].size() <= max_size)
        out.push_back(fixtures::union_of_orbits(g, {subs[i], subs[j]}));
  }
  return out;
}

std::vector<GSSet> plain_cells() {
  return {GSSet::standard_simplex(0), GSSet::standard_simplex(1), GSSet::boundary(1), GSSet::boundary(2),
          fixtures::wedge().forget_action()};
}

}  // namespace

TEST_CASE("i_upper and i_lower on small examples", "[elmendorf]") {
  Group c2 = fixtures::c2();
  OrbitCategory oc = all_orbits(c2);
  GSet up = i_upper(constant_diagram<FinSetCat>(oc, points(3)));
  CHECK(up == GSet::trivial(c2, 3));

  GSSet cell = i_upper(free_cell_diagram<FinSSetCat>(oc, 0, GSSet::standard_simplex(0)));
  CHECK(cell.size() == 2);
  CHECK(cell.act(1, 0) == 1);
  CHECK(find_isomorphism(cell, fixtures::swap_points()).has_value());

  auto reg = i_lower<FinSetCat>(oc, coset_gset(c2, Subgroup::trivial(c2)));
  CHECK(reg.value(0).size() == 2);
  CHECK(reg.value(1).size() == 0);

  auto trivial_x = i_lower<FinSetCat>(oc, GSet::trivial(c2, 2));
  CHECK(trivial_x.value(0) == trivial_x.value(1));
  CHECK(trivial_x.map(oc.morphism(0, 1, 0)) == FinSetCat::identity(points(2)));

  EqChainComplex zc2(c2, ChainComplex(Z, {2}, {}), {{Matrix::identity(2)}, {Matrix{{0, 1}, {1, 0}}}});
  auto inv = i_lower<ChainCat>(oc, zc2);
  CHECK(inv.value(0).rank(0) == 2);
  CHECK(inv.value(1).rank(0) == 1);
  CHECK(inv.map(oc.morphism(0, 1, 0)).at(0) == Matrix({{1}, {1}}));

  OrbitCategory only_g(c2, {Subgroup::whole(c2)});
  CHECK_THROWS_AS(i_upper(constant_diagram<FinSetCat>(only_g, points(1))), InputError);
}

TEST_CASE("free cell diagrams", "[elmendorf]") {
  for (const Group& g : {fixtures::c2(), fixtures::s3()}) {
    OrbitCategory oc = all_orbits(g);
    const std::size_t whole = oc.object_count() - 1;
    auto t = free_cell_diagram<FinSSetCat>(oc, whole, GSSet::boundary(2));
    for (std::size_t h = 0; h < oc.object_count(); ++h) CHECK(t.value(h) == FinSSetCat::copower(1, GSSet::boundary(2)));
    for (std::size_t h = 0; h < oc.object_count(); ++h)
      for (std::size_t k = 0; k < oc.object_count(); ++k) {
        // Values count hom(G/H, G/K) = (G/K)^H.
        auto f = free_cell_diagram<FinSetCat>(oc, k, points(1));
        CHECK(f.value(h).size() == fixed_points(coset_gset(g, oc.family()[k]), oc.family()[h]).size());
      }
  }
  OrbitCategory oc = all_orbits(fixtures::c2());
  auto pt = free_cell_diagram<FinSSetCat>(oc, 0, GSSet::standard_simplex(0));
  CHECK(pt.value(0).size() == 2);
  CHECK(pt.value(1).size() == 0);
  auto ch = free_cell_diagram<ChainCat>(oc, 0, ChainComplex::concentrated(Z, 0));
  CHECK(ch.value(0).rank(0) == 2);
  CHECK(ch.value(1).rank(0) == 0);
}

TEST_CASE("diagram functoriality is enforced", "[elmendorf]") {
  Group c2 = fixtures::c2();
  OrbitCategory oc = all_orbits(c2);
  GSet two = points(2), none = points(0), one = points(1);
  GMap id = FinSetCat::identity(two);
  GMap swap(two, two, {1, 0});
  GMap collapse(two, two, {0, 0});
  auto maps = [&](const GMap& act, const GMap& down, const GSet& top) {
    std::vector<std::vector<std::vector<GMap>>> m(2, std::vector<std::vector<GMap>>(2));
    m[0][0] = {id, act};
    m[0][1] = {down};
    m[1][1] = {FinSetCat::identity(top)};
    return m;
  };
  GMap from_none(none, two, {});
  CHECK_NOTHROW(OrbitDiagram<FinSetCat>(oc, {two, none}, maps(swap, from_none, none)));
  // Collapsing is not an action: t(R_t)^2 must be the identity.
  CHECK_THROWS_AS(OrbitDiagram<FinSetCat>(oc, {two, none}, maps(collapse, from_none, none)), InputError);
  // R_e o R_t = R_e : G/e -> G/C2, so the point at G/C2 must land on a swap-fixed point.
  CHECK_THROWS_AS(OrbitDiagram<FinSetCat>(oc, {two, one}, maps(swap, GMap(one, two, {0}), one)), InputError);
  CHECK_NOTHROW(OrbitDiagram<FinSetCat>(oc, {two, one}, maps(id, GMap(one, two, {0}), one)));
}

TEST_CASE("counit and triangle identities", "[elmendorf]") {
  for (const auto& g : fixtures::small_groups()) {
    if (g.order() > 8) continue;
    OrbitCategory oc = all_orbits(g);
    for (const auto& x : small_gsets(g, 4)) {
      auto chk = adjunction_check(i_lower<FinSetCat>(oc, x), x);
      CHECK(chk.report.counit_iso);
      CHECK(chk.report.counit_equivariant);
      CHECK(chk.report.triangle_identities);
      CHECK(chk.report.unit_natural);
    }
  }
  Group c2 = fixtures::c2();
  OrbitCategory oc = all_orbits(c2);
  for (const GSSet& x : {fixtures::swap_points(), fixtures::free_circle2(), fixtures::wedge(), fixtures::swap_triangle(),
                         fixtures::mixed_triangle(), prism(fixtures::wedge()).product}) {
    auto t = free_cell_diagram<FinSSetCat>(oc, 0, GSSet::boundary(1));
    auto chk = adjunction_check(t, x);
    CHECK(chk.report.counit_iso);
    CHECK(chk.report.counit_equivariant);
    CHECK(chk.report.triangle_identities);
    auto self = adjunction_check(i_lower<FinSSetCat>(oc, x), x);
    CHECK(self.report.unit_iso);
    for (const Ring& r : {Z, Ring::rationals(), Ring::prime_field(2)}) {
      auto cx = normalized_chains(x, r);
      auto cc = adjunction_check(free_cell_diagram<ChainCat>(oc, 1, ChainComplex::concentrated(r, 1)), cx);
      CHECK(cc.report.counit_iso);
      CHECK(cc.report.counit_equivariant);
      CHECK(cc.report.triangle_identities);
    }
  }
  EqChainComplex sign(c2, ChainComplex::concentrated(Z, 0), {{Matrix{{1}}}, {Matrix{{-1}}}});
  auto chk = adjunction_check(constant_diagram<ChainCat>(oc, ChainComplex::disk(Z, 2)), sign);
  CHECK(chk.report.counit_iso);
  CHECK(chk.report.triangle_identities);
  CHECK(chk.report.unit_iso);
}

TEST_CASE("unit on free cells matches cellularity", "[elmendorf]") {
  Group s3 = fixtures::s3();
  std::vector<OrbitCategory> cats{all_orbits(fixtures::c2()), all_orbits(s3),
                                  OrbitCategory(s3, {Subgroup::trivial(s3), Subgroup::generated_by(s3, {1})})};
  for (const auto& oc : cats)
    for (std::size_t k = 0; k < oc.object_count(); ++k) {
      for (const auto& c : plain_cells()) {
        auto chk = adjunction_check(free_cell_diagram<FinSSetCat>(oc, k, c), GSSet::empty(oc.group()));
        CHECK(chk.report.unit_iso);
        CHECK(chk.report.unit_natural);
        for (std::size_t h = 0; h < oc.object_count(); ++h) {
          auto cell = cellularity_report<FinSSetCat>(oc.family()[h], oc.family()[k], c);
          CHECK(chk.report.per_object[h].unit_iso == cell.report.iso);
        }
      }
      for (std::size_t n : {0u, 1u, 3u}) {
        auto chk = adjunction_check(free_cell_diagram<FinSetCat>(oc, k, points(n)), GSet::trivial(oc.group(), 1));
        CHECK(chk.report.unit_iso);
        for (std::size_t h = 0; h < oc.object_count(); ++h)
          CHECK(cellularity_report<FinSetCat>(oc.family()[h], oc.family()[k], points(n)).report.iso);
      }
    }
}

TEST_CASE("chain complexes break cellularity", "[elmendorf]") {
  Group c2 = fixtures::c2();
  OrbitCategory oc = all_orbits(c2);
  auto cell = cellularity_report<ChainCat>(Subgroup::whole(c2), Subgroup::trivial(c2), ChainComplex::concentrated(Z, 0));
  CHECK(cell.lhs.rank(0) == 0);
  CHECK(cell.rhs.rank(0) == 1);
  CHECK_FALSE(cell.report.iso);
  CHECK(cell.report.fixed_cosets == 0);
  CHECK(cell.report.orbit_count == 1);
  CHECK(cell.report.rhs == "H_0 = Z");

  auto chk = adjunction_check(free_cell_diagram<ChainCat>(oc, 0, ChainComplex::concentrated(Z, 0)), EqChainComplex::trivial(c2, ChainComplex::zero(Z)));
  CHECK_FALSE(chk.report.unit_iso);
  const auto& at_c2 = chk.report.per_object[1];
  CHECK(at_c2.source == "H_0 = 0");
  CHECK(at_c2.target == "H_0 = Z");
  CHECK(at_c2.unit_weak_equivalence == false);
  CHECK(chk.report.per_object[0].unit_iso);
  CHECK(chk.report.triangle_identities);

  // Over the whole group the orbit set is a point and both sides agree.
  for (const auto& h : all_subgroups(c2)) {
    auto whole = cellularity_report<ChainCat>(h, Subgroup::whole(c2), ChainComplex::disk(Z, 1));
    CHECK(whole.report.iso);
  }
}

TEST_CASE("arrow poset census", "[elmendorf]") {
  Group c2 = fixtures::c2();
  auto census = arrow_poset_census(all_orbits(c2));
  CHECK(census.diagram_count() == 3);
  CHECK(census.g_objects == 2);
  CHECK(arrow_poset_census(OrbitCategory(c2, {Subgroup::whole(c2)})).diagram_count() == 2);
  CHECK(arrow_poset_census(all_orbits(Group::trivial())).diagram_count() == 2);
  // Chains of subgroups up to conjugacy: C4 has e < C2 < C4, four up-sets.
  CHECK(arrow_poset_census(all_orbits(fixtures::c4())).diagram_count() == 4);
  // Oracle: sets of subgroups closed under passing to subconjugates.
  for (const auto& g : fixtures::small_groups()) {
    auto subs = all_subgroups(g);
    std::size_t closed = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << subs.size()); ++mask) {
      bool ok = true;
      for (std::size_t h = 0; h < subs.size() && ok; ++h)
        for (std::size_t k = 0; k < subs.size() && ok; ++k)
          if ((mask >> k & 1) && !(mask >> h & 1) && conjugating_element(subs[h], subs[k])) ok = false;
      if (ok) ++closed;
    }
    CHECK(arrow_poset_census(all_orbits(g)).diagram_count() == closed);
  }
}

TEST_CASE("hom-set bijection of the adjunction", "[elmendorf]") {
  for (const auto& g : fixtures::small_groups()) {
    if (g.order() > 8) continue;
    OrbitCategory oc = all_orbits(g);
    std::vector<OrbitDiagram<FinSetCat>> ts{constant_diagram<FinSetCat>(oc, points(0)), constant_diagram<FinSetCat>(oc, points(2))};
    for (std::size_t k = 0; k < oc.object_count(); ++k)
      if (g.order() / oc.family()[k].size() <= 4) ts.push_back(free_cell_diagram<FinSetCat>(oc, k, points(1)));
    for (const auto& y : small_gsets(g, 4)) ts.push_back(i_lower<FinSetCat>(oc, y));
    for (const auto& t : ts)
      for (const auto& x : small_gsets(g, 4)) {
        auto hb = hom_bijection_check(t, x);
        CHECK(hb.bijective);
      }
  }
  // A free cell on G/K corepresents the K-fixed points.
  Group s3 = fixtures::s3();
  OrbitCategory oc = all_orbits(s3);
  for (std::size_t k = 0; k < oc.object_count(); ++k) {
    GSet x = fixtures::union_of_orbits(s3, {Subgroup::generated_by(s3, {1}), Subgroup::whole(s3)});
    auto hb = hom_bijection_check(free_cell_diagram<FinSetCat>(oc, k, points(1)), x);
    CHECK(hb.g_maps == fixed_points(x, oc.family()[k]).size());
  }
}
