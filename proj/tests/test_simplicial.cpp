#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "eqhom/errors.hpp"
#include "eqhom/simplicial.hpp"
#include "support/fixtures.hpp"

using namespace eqhom;
using fixtures::v;

namespace {

// Independent normal-form engine: applies the raw simplicial identities to a
// word of degeneracies (outermost first) over a nondegenerate base.
struct Raw {
  SimplexId base;
  std::vector<int> degs;  // outermost first, any order
};

std::vector<int> sort_degeneracies(std::vector<int> w) {
  // s_a s_b = s_{b+1} s_a for a <= b, until strictly decreasing.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
      if (w[k] <= w[k + 1]) {
        int a = w[k], b = w[k + 1];
        w[k] = b + 1;
        w[k + 1] = a;
        changed = true;
      }
  }
  return w;
}

Raw oracle_face(const GSSet& x, Raw r, int i) {
  std::vector<int> prefix;
  std::size_t k = 0;
  for (; k < r.degs.size(); ++k) {
    int j = r.degs[k];
    if (i < j) {
      prefix.push_back(j - 1);
    } else if (i == j || i == j + 1) {
      // d_i s_j = id: the face disappears.
      std::vector<int> rest(prefix);
      rest.insert(rest.end(), r.degs.begin() + static_cast<std::ptrdiff_t>(k) + 1, r.degs.end());
      return Raw{r.base, sort_degeneracies(rest)};
    } else {
      prefix.push_back(j);
      --i;
    }
  }
  SimplexRef f = x.faces(r.base)[static_cast<std::size_t>(i)];
  prefix.insert(prefix.end(), f.word.begin(), f.word.end());
  return Raw{f.base, sort_degeneracies(prefix)};
}

Raw oracle_degeneracy(Raw r, int i) {
  r.degs.insert(r.degs.begin(), i);
  r.degs = sort_degeneracies(r.degs);
  return r;
}

void check_words(const GSSet& x, const SimplexRef& cur, const Raw& raw, int depth) {
  REQUIRE(cur.base == raw.base);
  REQUIRE(cur.word == raw.degs);
  if (depth == 0) return;
  const int m = x.dim(cur);
  for (int i = 0; i <= m; ++i) {
    check_words(x, x.degeneracy(cur, i), oracle_degeneracy(raw, i), depth - 1);
    if (m >= 1) check_words(x, x.face(cur, i), oracle_face(x, raw, i), depth - 1);
  }
}

}  // namespace

TEST_CASE("normal forms agree with raw rewriting on words of length four", "[simplicial]") {
  for (const GSSet& x : {GSSet::standard_simplex(2), GSSet::boundary(3), fixtures::mixed_triangle(),
                         fixtures::free_circle3(), prism(fixtures::wedge()).product}) {
    for (std::size_t s = 0; s < x.size(); ++s) check_words(x, v(static_cast<SimplexId>(s)), Raw{static_cast<SimplexId>(s), {}}, 4);
  }
}

TEST_CASE("surjection and word encodings are inverse", "[simplicial]") {
  for (const std::vector<int>& w : std::vector<std::vector<int>>{{}, {0}, {2, 0}, {3, 1, 0}, {2}}) {
    auto s = word_to_surjection(w, 2);
    CHECK(surjection_to_word(s) == w);
  }
  CHECK_THROWS_AS(word_to_surjection({0, 1}, 1), InputError);
}

TEST_CASE("standard simplices and boundaries", "[simplicial]") {
  CHECK(GSSet::standard_simplex(0).size() == 1);
  GSSet b2 = GSSet::boundary(2);
  CHECK(b2.count(0) == 3);
  CHECK(b2.count(1) == 3);
  CHECK(b2.count(2) == 0);
  GSSet d1 = GSSet::standard_simplex(1);
  CHECK(d1.face(v(2), 0) == v(1));
  CHECK(d1.face(d1.degeneracy(v(0), 0), 0) == v(0));
  // d_1 s_0 s_0 x = s_0 x on a vertex
  SimplexRef ss = d1.degeneracy(d1.degeneracy(v(0), 0), 0);
  CHECK(ss.word == std::vector<int>{1, 0});
  CHECK(d1.face(ss, 1) == SimplexRef{0, {0}});
  CHECK_THROWS_AS(d1.face(v(0), 0), InputError);
}

TEST_CASE("action validation", "[simplicial]") {
  CHECK_NOTHROW(fixtures::swap_points());
  // Fixing vertex 0 and swapping 1, 2 on the boundary of Delta[2] would send
  // the edge 1->2 to a nonexistent edge 2->1.
  GSSet b2 = GSSet::boundary(2);
  std::vector<std::vector<SimplexId>> act{{0, 1, 2, 3, 4, 5}, {0, 2, 1, 4, 3, 5}};
  CHECK_THROWS_AS(GSSet(fixtures::c2(), b2.dims(), {b2.faces(0), b2.faces(1), b2.faces(2), b2.faces(3), b2.faces(4), b2.faces(5)}, act),
                  InputError);
  // Broken simplicial identity.
  CHECK_THROWS_AS(GSSet(Group::trivial(), {0, 0, 1, 2},
                        {{}, {}, {v(1), v(0)}, {v(2), v(2), v(2)}}),
                  InputError);
}

TEST_CASE("fixed points and skeleta", "[simplicial]") {
  GSSet sp = fixtures::swap_points();
  auto whole = Subgroup::whole(sp.group());
  CHECK(fixed_sset(sp, whole).object.size() == 0);
  CHECK(fixed_sset(sp, Subgroup::trivial(sp.group())).object.size() == 2);

  GSSet tri = fixtures::swap_triangle();
  auto f = fixed_sset(tri, Subgroup::whole(tri.group()));
  CHECK(f.object.size() == 1);

  GSSet d2 = GSSet::standard_simplex(2);
  CHECK(skeleton(d2, -1).object.size() == 0);
  CHECK(skeleton(d2, 2).object == d2);
  auto sk1 = skeleton(d2, 1).object;
  CHECK(find_isomorphism(sk1, GSSet::boundary(2)).has_value());
}

TEST_CASE("tensors with orbits", "[simplicial]") {
  Group g = fixtures::c2();
  auto e = Subgroup::trivial(g);
  auto whole = Subgroup::whole(g);
  GSSet a = gtensor(coset_gset(g, whole), GSSet::standard_simplex(1));
  CHECK(a.has_trivial_action());
  CHECK(a.forget_action() == GSSet::standard_simplex(1));
  GSSet free_pts = gtensor(coset_gset(g, e), GSSet::standard_simplex(0));
  CHECK(free_pts == fixtures::swap_points());
  CHECK(fixed_sset(gtensor(coset_gset(g, e), GSSet::standard_simplex(1)), whole).object.size() == 0);
  CHECK(fixed_sset(a, whole).object == GSSet::standard_simplex(1));
}

TEST_CASE("prisms", "[simplicial]") {
  Prism p0 = prism(GSSet::standard_simplex(0));
  CHECK(find_isomorphism(p0.product, GSSet::standard_simplex(1)).has_value());
  Prism p1 = prism(GSSet::standard_simplex(1));
  CHECK(p1.product.count(0) == 4);
  CHECK(p1.product.count(1) == 5);
  CHECK(p1.product.count(2) == 2);
  for (const GSSet& x : {GSSet::standard_simplex(2), fixtures::wedge(), fixtures::mixed_triangle()}) {
    Prism p = prism(x);
    CHECK(compose(p.proj, p.end0) == SMap::identity(x));
    CHECK(compose(p.proj, p.end1) == SMap::identity(x));
    CHECK(p.end0.is_injective());
  }
  // Delta[2] x Delta[1]: 6 vertices, 6 + 3 + 3 edges... counted by Euler characteristic 1.
  Prism p2 = prism(GSSet::standard_simplex(2));
  long chi = 0;
  for (int n = 0; n <= p2.product.top_dim(); ++n) chi += (n % 2 ? -1 : 1) * static_cast<long>(p2.product.count(n));
  CHECK(chi == 1);
  CHECK(p2.product.count(3) == 3);
}

TEST_CASE("pushouts of simplicial sets", "[simplicial]") {
  // Gluing two copies of Delta[1] along their endpoints gives a circle.
  GSSet d1 = GSSet::standard_simplex(1);
  GSSet pts = GSSet::boundary(1);
  SMap incl(pts, d1, {v(0), v(1)});
  auto po = pushout(incl, incl);
  CHECK(po.object.count(0) == 2);
  CHECK(po.object.count(1) == 2);
}

TEST_CASE("cell decompositions", "[simplicial]") {
  Group g = fixtures::c2();
  GSSet d1 = GSSet::standard_simplex(1, g);
  auto cells = cell_decomposition(SMap::from_empty(d1));
  REQUIRE(cells.cells.size() == 2);
  CHECK(cells.cells[0].size() == 2);
  CHECK(cells.cells[1].size() == 1);
  for (const auto& dim : cells.cells)
    for (const auto& c : dim) CHECK(c.stabilizer.size() == 2);
  CHECK(cell_decomposition(SMap::identity(d1)).cell_count() == 0);

  auto free_cells = cell_decomposition(SMap::from_empty(fixtures::swap_points()));
  REQUIRE(free_cells.cells[0].size() == 1);
  CHECK(free_cells.cells[0][0].stabilizer.size() == 1);

  for (const auto& m : fixtures::monomorphisms()) {
    INFO(m.name);
    auto cs = cell_decomposition(m.map);
    auto replay = replay_cells(m.map, cs);
    auto iso = replay.final_comparison;
    CHECK(iso.is_isomorphism());
    CHECK(iso.target() == m.map.target());
  }
}

TEST_CASE("cofibration verdicts", "[simplicial]") {
  Group g = fixtures::c2();
  std::vector<Subgroup> only_e{Subgroup::trivial(g)};
  auto yes = check_F_cofibration(SMap::from_empty(fixtures::swap_points()), only_e);
  CHECK(yes.is_cofibration);
  auto no = check_F_cofibration(SMap::from_empty(GSSet::point(g)), only_e);
  CHECK_FALSE(no.is_cofibration);
  REQUIRE(no.witness.has_value());
  CHECK(*no.witness == 0);
  CHECK(check_F_cofibration(SMap::identity(fixtures::wedge()), only_e).is_cofibration);

  // Conjugate but not equal stabilizers: S3 acting on S3/<t>, family {<t'>}.
  Group s3 = fixtures::s3();
  auto subs = all_subgroups(s3);
  std::vector<Subgroup> order2;
  for (const auto& h : subs)
    if (h.size() == 2) order2.push_back(h);
  REQUIRE(order2.size() == 3);
  GSSet orbit = gtensor(coset_gset(s3, order2[0]), GSSet::standard_simplex(0));
  auto v1 = check_F_cofibration(SMap::from_empty(orbit), {order2[1]});
  CHECK(v1.is_cofibration);
  CHECK(v1.strict_reading_differs);

  // Non-injective maps are rejected with a witness.
  GSSet two = GSSet::boundary(1);
  SMap collapse(two, GSSet::point(), {v(0), v(0)});
  auto ni = check_F_cofibration(collapse, {Subgroup::trivial(Group::trivial())});
  CHECK_FALSE(ni.is_cofibration);
  CHECK_FALSE(ni.injective);
}

TEST_CASE("maps validate faces and equivariance", "[simplicial]") {
  GSSet sp = fixtures::swap_points();
  GSSet pt = GSSet::point(fixtures::c2());
  CHECK_NOTHROW(SMap(sp, pt, {v(0), v(0)}));
  CHECK_THROWS_AS(SMap(pt, sp, {v(0)}), InputError);
  GSSet d1 = GSSet::standard_simplex(1);
  CHECK_THROWS_AS(SMap(d1, d1, {v(0), v(1), v(1)}), InputError);
  CHECK_NOTHROW(SMap(d1, d1, {v(0), v(0), SimplexRef{0, {0}}}));
}
