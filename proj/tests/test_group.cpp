#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "eqhom/errors.hpp"
#include "eqhom/orbit_category.hpp"
#include "support/fixtures.hpp"

using namespace eqhom;

namespace {

// Subgroups by testing every subset for closure.
std::size_t brute_force_subgroup_count(const Group& g) {
  const std::size_t n = g.order();
  std::size_t count = 0;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    if (!(mask & 1)) continue;
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a)
      for (std::size_t b = 0; b < n && closed; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && !(mask >> g.mul(static_cast<Element>(a), static_cast<Element>(b)) & 1))
          closed = false;
    if (closed) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("group construction", "[group]") {
  CHECK(Group::from_table({{0}}).order() == 1);
  CHECK(Group::from_permutations(2, {{1, 0}}).order() == 2);
  CHECK(Group::from_permutations(3, {{1, 0, 2}, {1, 2, 0}}).order() == 6);
  CHECK_THROWS_AS(Group::from_table({{0, 1}, {1, 1}}), InputError);
  CHECK_THROWS_AS(Group::from_table({{1, 0}, {0, 1}}), InputError);
  CHECK_THROWS_AS(Group::from_permutations(5, {{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}}, 64), InputError);
  for (const auto& g : fixtures::small_groups())
    for (std::size_t x = 0; x < g.order(); ++x)
      for (std::size_t y = 0; y < g.order(); ++y)
        for (std::size_t z = 0; z < g.order(); ++z) {
          auto a = static_cast<Element>(x), b = static_cast<Element>(y), c = static_cast<Element>(z);
          REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
        }
  // Cyclic groups are numbered by powers of the generator.
  Group c4 = fixtures::c4();
  CHECK(c4.mul(1, 1) == 2);
  CHECK(c4.mul(1, 2) == 3);
}

TEST_CASE("subgroup lattices", "[group]") {
  CHECK(all_subgroups(Group::trivial()).size() == 1);
  CHECK(all_subgroups(fixtures::c2()).size() == 2);
  auto s3 = all_subgroups(fixtures::s3());
  REQUIRE(s3.size() == 6);
  std::vector<std::size_t> sizes;
  for (const auto& h : s3) sizes.push_back(h.size());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 2, 2, 3, 6});
  for (const auto& g : fixtures::small_groups()) {
    auto subs = all_subgroups(g);
    CHECK(subs.size() == brute_force_subgroup_count(g));
    for (std::size_t i = 0; i + 1 < subs.size(); ++i) CHECK(subs[i] < subs[i + 1]);
  }
  CHECK(all_subgroups(fixtures::d4()).size() == 10);
}

TEST_CASE("conjugating elements", "[group]") {
  for (const auto& g : fixtures::small_groups()) {
    auto subs = all_subgroups(g);
    for (const auto& h : subs)
      for (const auto& k : subs) {
        std::optional<Element> brute;
        for (std::size_t a = 0; a < g.order() && !brute; ++a)
          if (h.conjugate_by(static_cast<Element>(a)).is_subset_of(k)) brute = static_cast<Element>(a);
        auto found = conjugating_element(h, k);
        REQUIRE(found == brute);
        if (found)
          for (Element x : h.members()) CHECK(k.contains(g.conjugate(x, *found)));
      }
  }
  Group c2 = fixtures::c2();
  CHECK(conjugating_element(Subgroup::whole(c2), Subgroup::trivial(c2)) == std::nullopt);
  CHECK(conjugating_element(Subgroup::whole(c2), Subgroup::whole(c2)) == 0);
  CHECK_THROWS_AS(conjugating_element(Subgroup::whole(c2), Subgroup::whole(fixtures::s3())), InputError);
}

TEST_CASE("coset G-sets and orbits", "[gset]") {
  Group g = fixtures::s3();
  auto t = Subgroup::generated_by(g, {1});
  GSet x = coset_gset(g, t);
  CHECK(x.size() == 3);
  auto cs = left_cosets(g, t);
  for (std::size_t e = 0; e < g.order(); ++e)
    for (std::size_t c = 0; c < x.size(); ++c)
      CHECK(cs.coset_of[static_cast<std::size_t>(g.mul(static_cast<Element>(e), cs.representatives[c]))] ==
            x.apply(static_cast<Element>(e), static_cast<int>(c)));
  auto oa = orbit_analysis(x, t);
  CHECK(oa.fixed.size() == 1);
  CHECK(oa.orbits.size() == 1);
  CHECK(coset_gset(g, Subgroup::whole(g)).size() == 1);

  GSet free2 = coset_gset(fixtures::c2(), Subgroup::trivial(fixtures::c2()));
  CHECK(orbit_analysis(free2, Subgroup::whole(fixtures::c2())).fixed.empty());
  GSet triv = GSet::trivial(fixtures::c2(), 3);
  auto ta = orbit_analysis(triv, Subgroup::whole(fixtures::c2()));
  CHECK(ta.orbits.size() == 3);
  CHECK(ta.fixed.size() == 3);
}

TEST_CASE("maps out of orbits are fixed points", "[gset]") {
  Group c2 = fixtures::c2();
  auto e = Subgroup::trivial(c2), whole = Subgroup::whole(c2);
  CHECK(equivariant_maps(coset_gset(c2, whole), GSet::trivial(c2, 2)).size() == 2);
  CHECK(equivariant_maps(coset_gset(c2, e), coset_gset(c2, e)).size() == 2);
  CHECK(equivariant_maps(coset_gset(c2, whole), coset_gset(c2, e)).empty());
  CHECK_THROWS_AS(equivariant_maps(GSet::trivial(c2, 2), GSet::trivial(c2, 1)), InputError);

  std::mt19937 rng(3);
  for (const auto& g : fixtures::small_groups()) {
    auto subs = all_subgroups(g);
    std::uniform_int_distribution<std::size_t> pick(0, subs.size() - 1);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Subgroup> parts;
      std::size_t total = 0;
      while (parts.size() < 3) {
        const auto& h = subs[pick(rng)];
        if (total + g.order() / h.size() > 12) break;
        total += g.order() / h.size();
        parts.push_back(h);
      }
      if (parts.empty()) parts.push_back(Subgroup::whole(g));
      GSet x = fixtures::union_of_orbits(g, parts);
      GSet y = fixtures::union_of_orbits(g, {subs[pick(rng)]});
      for (const auto& h : subs) {
        auto maps = equivariant_maps(coset_gset(g, h), x);
        CHECK(maps.size() == fixed_points(x, h).size());
        // Fixed points of products are products of fixed points.
        GSet xy = product(x, y);
        std::set<int> expected;
        for (int a : fixed_points(x, h))
          for (int b : fixed_points(y, h)) expected.insert(a * static_cast<int>(y.size()) + b);
        auto fp = fixed_points(xy, h);
        CHECK(std::set<int>(fp.begin(), fp.end()) == expected);
      }
    }
  }
}

TEST_CASE("fixed points of pushouts along injections", "[gset]") {
  Group g = fixtures::s3();
  auto subs = all_subgroups(g);
  // c = G/H, b = G/H + G/K, a = G/L with a map G/H -> G/L.
  for (const auto& h : subs)
    for (const auto& k : subs)
      for (const auto& l : subs) {
        auto a_rep = conjugating_element(h, l);
        if (!a_rep) continue;
        GSet c = coset_gset(g, h);
        GSet b = fixtures::union_of_orbits(g, {h, k});
        GSet a = coset_gset(g, l);
        auto cl = left_cosets(g, h), ll = left_cosets(g, l);
        std::vector<int> to_a(c.size()), to_b(c.size());
        for (std::size_t p = 0; p < c.size(); ++p) {
          to_a[p] = ll.coset_of[static_cast<std::size_t>(g.mul(cl.representatives[p], *a_rep))];
          to_b[p] = static_cast<int>(p);
        }
        auto po = pushout(GMap(c, a, to_a), GMap(c, b, to_b));
        for (const auto& q : subs) {
          // |P^Q| = |A^Q| + |B^Q| - |C^Q| for an injective leg.
          CHECK(fixed_points(po.object, q).size() ==
                fixed_points(a, q).size() + fixed_points(b, q).size() - fixed_points(c, q).size());
        }
      }
}

TEST_CASE("orbit categories", "[orbitcat]") {
  Group c2 = fixtures::c2();
  OrbitCategory oc(c2, {Subgroup::trivial(c2), Subgroup::whole(c2)});
  CHECK(oc.hom(0, 0).size() == 2);
  CHECK(oc.hom(0, 1).size() == 1);
  CHECK(oc.hom(1, 0).empty());
  CHECK(oc.hom(1, 1).size() == 1);
  auto t = oc.morphism(0, 0, 1);
  CHECK(oc.compose(t, t) == oc.identity(0));
  CHECK_THROWS_AS(oc.morphism(1, 0, 0), InputError);

  OrbitCategory one(c2, {Subgroup::whole(c2)});
  CHECK(one.hom(0, 0).size() == 1);
  Group s3 = fixtures::s3();
  OrbitCategory free_s3(s3, {Subgroup::trivial(s3)});
  CHECK(free_s3.hom(0, 0).size() == 6);
  CHECK_FALSE(oc.table().empty());
}
