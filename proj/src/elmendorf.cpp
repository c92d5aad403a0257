#include "eqhom/elmendorf.hpp"

#include <set>
#include <sstream>

#include "eqhom/errors.hpp"

namespace eqhom {

namespace {

std::vector<int> iota(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i);
  return v;
}

template <class M>
M must(std::optional<M> m, const std::string& what) {
  if (!m) throw VerificationError(what);
  return std::move(*m);
}

std::size_t trivial_index(const OrbitCategory& cat) {
  int e = cat.index_of(Subgroup::trivial(cat.group()));
  if (e < 0) throw InputError("the family must contain the trivial subgroup");
  return static_cast<std::size_t>(e);
}

}  // namespace

// --- FinSet ----------------------------------------------------------------

GMap FinSetCat::identity(const GSet& x) { return GMap(x, x, iota(x.size())); }

GMap FinSetCat::compose(const GMap& second, const GMap& first) {
  std::vector<int> v(first.source().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = second(first(static_cast<int>(i)));
  return GMap(first.source(), second.target(), std::move(v));
}

bool FinSetCat::is_iso(const GMap& f) { return f.is_injective() && f.source().size() == f.target().size(); }

std::string FinSetCat::summary(const GSet& x) { return std::to_string(x.size()) + " points"; }

GSet FinSetCat::carrier(const GSet& x) { return GSet::trivial(Group::trivial(), x.size()); }

GMap FinSetCat::act(const GSet& x, Element g) {
  GSet c = carrier(x);
  return GMap(c, c, x.action()[static_cast<std::size_t>(g)]);
}

GSet FinSetCat::make_gobject(const Group& g, const GSet& carrier, const std::vector<GMap>& acts) {
  std::vector<std::vector<int>> action;
  for (const auto& a : acts) {
    if (!(a.source() == carrier) || !(a.target() == carrier)) throw InputError("G-object: action on the wrong object");
    action.push_back(a.values());
  }
  return GSet(g, std::move(action));
}

FixedPart<FinSetCat> FinSetCat::fixed(const GSet& x, const Subgroup& h) {
  auto fp = fixed_points(x, h);
  GSet obj = GSet::trivial(Group::trivial(), fp.size());
  return {obj, GMap(obj, carrier(x), fp)};
}

std::optional<GMap> FinSetCat::factor(const GMap& f, const GMap& mono) {
  std::vector<int> pre(mono.target().size(), -1);
  for (std::size_t i = 0; i < mono.source().size(); ++i) pre[static_cast<std::size_t>(mono(static_cast<int>(i)))] = static_cast<int>(i);
  std::vector<int> v(f.source().size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = pre[static_cast<std::size_t>(f(static_cast<int>(i)))];
    if (v[i] < 0) return std::nullopt;
  }
  return GMap(f.source(), mono.source(), std::move(v));
}

GSet FinSetCat::copower(std::size_t n, const GSet& c) { return GSet::trivial(Group::trivial(), n * c.size()); }

GMap FinSetCat::copy_map(const GSet& c, std::size_t m, const std::vector<int>& copies) {
  const std::size_t k = c.size();
  std::vector<int> v(copies.size() * k);
  for (std::size_t i = 0; i < copies.size(); ++i)
    for (std::size_t y = 0; y < k; ++y) v[i * k + y] = static_cast<int>(static_cast<std::size_t>(copies[i]) * k + y);
  return GMap(copower(copies.size(), c), copower(m, c), std::move(v));
}

// --- FinSSet ---------------------------------------------------------------

SMap FinSSetCat::identity(const GSSet& x) { return SMap::identity(x); }

SMap FinSSetCat::compose(const SMap& second, const SMap& first) { return eqhom::compose(second, first); }

bool FinSSetCat::is_iso(const SMap& f) { return f.is_isomorphism(); }

std::string FinSSetCat::summary(const GSSet& x) {
  if (x.size() == 0) return "empty";
  std::string out = "simplices (";
  for (int n = 0; n <= x.top_dim(); ++n) out += (n ? "," : "") + std::to_string(x.count(n));
  return out + ")";
}

GSSet FinSSetCat::carrier(const GSSet& x) { return x.forget_action(); }

SMap FinSSetCat::act(const GSSet& x, Element g) {
  GSSet c = x.forget_action();
  std::vector<SimplexRef> v;
  for (std::size_t s = 0; s < x.size(); ++s) v.push_back({x.act(g, static_cast<SimplexId>(s)), {}});
  return SMap(c, c, std::move(v));
}

GSSet FinSSetCat::make_gobject(const Group& g, const GSSet& carrier, const std::vector<SMap>& acts) {
  std::vector<std::vector<SimplexId>> action;
  for (const auto& a : acts) {
    if (!(a.source() == carrier) || !(a.target() == carrier)) throw InputError("G-object: action on the wrong object");
    std::vector<SimplexId> row;
    for (const auto& r : a.values()) {
      if (r.is_degenerate()) throw InputError("G-object: action must permute nondegenerate simplices");
      row.push_back(r.base);
    }
    action.push_back(std::move(row));
  }
  std::vector<std::vector<SimplexRef>> faces;
  for (std::size_t s = 0; s < carrier.size(); ++s) faces.push_back(carrier.faces(static_cast<SimplexId>(s)));
  return GSSet(g, carrier.dims(), std::move(faces), std::move(action));
}

FixedPart<FinSSetCat> FinSSetCat::fixed(const GSSet& x, const Subgroup& h) {
  SubObject s = fixed_sset(x, h);
  return {s.object, s.inclusion};
}

std::optional<SMap> FinSSetCat::factor(const SMap& f, const SMap& mono) {
  std::vector<SimplexId> pre(mono.target().size(), -1);
  for (std::size_t i = 0; i < mono.source().size(); ++i) {
    const auto& r = mono(static_cast<SimplexId>(i));
    if (r.is_degenerate()) return std::nullopt;
    pre[static_cast<std::size_t>(r.base)] = static_cast<SimplexId>(i);
  }
  std::vector<SimplexRef> v;
  for (const auto& r : f.values()) {
    SimplexId b = pre[static_cast<std::size_t>(r.base)];
    if (b < 0) return std::nullopt;
    v.push_back({b, r.word});
  }
  return SMap(f.source(), mono.source(), std::move(v));
}

GSSet FinSSetCat::copower(std::size_t n, const GSSet& c) {
  return gtensor(GSet::trivial(Group::trivial(), n), c);
}

SMap FinSSetCat::copy_map(const GSSet& c, std::size_t m, const std::vector<int>& copies) {
  GSSet src = copower(copies.size(), c), tgt = copower(m, c);
  // Simplex (copy i, a) sits at offset_d(n) + i * |c_d| + local index of a.
  auto id = [&](std::size_t n, std::size_t copy, SimplexId a) {
    std::size_t d = static_cast<std::size_t>(c.dim(a)), offset = 0;
    for (std::size_t e = 0; e < d; ++e) offset += n * c.count(static_cast<int>(e));
    return static_cast<SimplexId>(offset + copy * c.count(static_cast<int>(d)) + local_index(c, a));
  };
  std::vector<SimplexRef> v(src.size());
  for (std::size_t i = 0; i < copies.size(); ++i)
    for (std::size_t a = 0; a < c.size(); ++a)
      v[static_cast<std::size_t>(id(copies.size(), i, static_cast<SimplexId>(a)))] = {
          id(m, static_cast<std::size_t>(copies[i]), static_cast<SimplexId>(a)), {}};
  return SMap(src, tgt, std::move(v));
}

// --- Ch(R) -----------------------------------------------------------------

ChainMap ChainCat::identity(const ChainComplex& x) { return ChainMap::identity(x); }

ChainMap ChainCat::compose(const ChainMap& second, const ChainMap& first) { return eqhom::compose(second, first); }

bool ChainCat::is_iso(const ChainMap& f) {
  const Ring& r = f.source().ring();
  for (int n = 0; n < f.length(); ++n) {
    Matrix m = f.at(n);
    if (!m.is_square() || !is_invertible(r, m)) return false;
  }
  return true;
}

std::string ChainCat::summary(const ChainComplex& x) {
  std::string text = homology_text(x, homology(x));
  if (text.empty()) return "0";
  std::string out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out += (out.empty() ? "" : ", ") + line;
  return out;
}

ChainMap ChainCat::act(const EqChainComplex& x, Element g) {
  std::vector<Matrix> m;
  for (int n = 0; n <= x.complex().top(); ++n) m.push_back(x.rho(g, n));
  return ChainMap(x.complex(), x.complex(), std::move(m));
}

EqChainComplex ChainCat::make_gobject(const Group& g, const ChainComplex& carrier, const std::vector<ChainMap>& acts) {
  std::vector<std::vector<Matrix>> rep;
  for (const auto& a : acts) {
    if (!(a.source() == carrier) || !(a.target() == carrier)) throw InputError("G-object: action on the wrong object");
    std::vector<Matrix> per;
    for (int n = 0; n <= carrier.top(); ++n) per.push_back(a.at(n));
    rep.push_back(std::move(per));
  }
  return EqChainComplex(g, carrier, std::move(rep));
}

FixedPart<ChainCat> ChainCat::fixed(const EqChainComplex& x, const Subgroup& h) {
  Invariants inv = invariants(x, h);
  return {inv.complex, inv.inclusion};
}

std::optional<ChainMap> ChainCat::factor(const ChainMap& f, const ChainMap& mono) {
  const Ring& r = f.source().ring();
  const int len = std::max(f.source().top(), mono.source().top()) + 1;
  std::vector<Matrix> comps;
  for (int n = 0; n < len; ++n) {
    auto u = solve(r, mono.at(n), f.at(n));
    if (!u) return std::nullopt;
    comps.push_back(std::move(*u));
  }
  return ChainMap(f.source(), mono.source(), std::move(comps));
}

ChainComplex ChainCat::copower(std::size_t n, const ChainComplex& c) {
  std::vector<std::size_t> ranks;
  for (auto r : c.ranks()) ranks.push_back(n * r);
  std::vector<Matrix> d;
  for (int k = 1; k <= c.top(); ++k) {
    Matrix sum(0, 0);
    for (std::size_t i = 0; i < n; ++i) sum = direct_sum(sum, c.d(k));
    if (n == 0) sum = Matrix(0, 0);
    d.push_back(sum);
  }
  return ChainComplex(c.ring(), std::move(ranks), std::move(d));
}

ChainMap ChainCat::copy_map(const ChainComplex& c, std::size_t m, const std::vector<int>& copies) {
  ChainComplex src = copower(copies.size(), c), tgt = copower(m, c);
  std::vector<Matrix> comps;
  for (int n = 0; n <= c.top(); ++n) {
    const std::size_t r = c.rank(n);
    Matrix a(m * r, copies.size() * r);
    for (std::size_t i = 0; i < copies.size(); ++i)
      for (std::size_t y = 0; y < r; ++y) a(static_cast<std::size_t>(copies[i]) * r + y, i * r + y) = 1;
    comps.push_back(std::move(a));
  }
  return ChainMap(src, tgt, std::move(comps));
}

// --- diagrams --------------------------------------------------------------

template <class C>
OrbitDiagram<C>::OrbitDiagram(OrbitCategory category, std::vector<Object> values,
                              std::vector<std::vector<std::vector<Morphism>>> maps)
    : category_(std::move(category)), values_(std::move(values)), maps_(std::move(maps)) {
  const std::size_t n = category_.object_count();
  if (values_.size() != n || maps_.size() != n) throw InputError("orbit diagram: need one value per object");
  for (std::size_t h = 0; h < n; ++h) {
    if (maps_[h].size() != n) throw InputError("orbit diagram: structure maps incomplete");
    for (std::size_t k = 0; k < n; ++k) {
      if (maps_[h][k].size() != category_.hom(h, k).size())
        throw InputError("orbit diagram: wrong number of structure maps from " + category_.family()[k].str());
      for (const auto& m : maps_[h][k])
        if (!(m.source() == values_[k]) || !(m.target() == values_[h]))
          throw InputError("orbit diagram: structure map with wrong ends");
    }
  }
  for (std::size_t h = 0; h < n; ++h)
    if (!(map(category_.identity(h)) == C::identity(values_[h])))
      throw InputError("orbit diagram: identity of " + category_.family()[h].str() + " not sent to the identity");
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& f : category_.morphisms(h, k))
        for (std::size_t l = 0; l < n; ++l)
          for (const auto& g : category_.morphisms(k, l))
            if (!(map(category_.compose(g, f)) == C::compose(map(f), map(g))))
              throw InputError("orbit diagram: composition not respected");
}

template <class C>
const typename C::Morphism& OrbitDiagram<C>::map(const OrbitMorphism& f) const {
  return maps_[f.source][f.target][category_.position(f)];
}

template <class C>
OrbitDiagram<C> constant_diagram(const OrbitCategory& cat, const typename C::Object& c) {
  const std::size_t n = cat.object_count();
  std::vector<std::vector<std::vector<typename C::Morphism>>> maps(n, std::vector<std::vector<typename C::Morphism>>(n));
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t k = 0; k < n; ++k) maps[h][k].assign(cat.hom(h, k).size(), C::identity(c));
  return OrbitDiagram<C>(cat, std::vector<typename C::Object>(n, c), std::move(maps));
}

template <class C>
typename C::GObject i_upper(const OrbitDiagram<C>& t) {
  const auto& cat = t.category();
  const std::size_t e = trivial_index(cat);
  std::vector<typename C::Morphism> acts;
  for (std::size_t g = 0; g < cat.group().order(); ++g)
    acts.push_back(t.map(cat.morphism(e, e, static_cast<Element>(g))));
  return C::make_gobject(cat.group(), t.value(e), acts);
}

template <class C>
OrbitDiagram<C> i_lower(const OrbitCategory& cat, const typename C::GObject& x) {
  const std::size_t n = cat.object_count();
  std::vector<FixedPart<C>> parts;
  std::vector<typename C::Object> values;
  for (const auto& h : cat.family()) {
    parts.push_back(C::fixed(x, h));
    values.push_back(parts.back().object);
  }
  std::vector<std::vector<std::vector<typename C::Morphism>>> maps(n, std::vector<std::vector<typename C::Morphism>>(n));
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t k = 0; k < n; ++k)
      for (Element a : cat.hom(h, k))
        maps[h][k].push_back(must(C::factor(C::compose(C::act(x, a), parts[k].inclusion), parts[h].inclusion),
                                  "i_lower: translate of fixed points is not fixed"));
  return OrbitDiagram<C>(cat, std::move(values), std::move(maps));
}

template <class C>
OrbitDiagram<C> free_cell_diagram(const OrbitCategory& cat, std::size_t k, const typename C::Object& c) {
  if (k >= cat.object_count()) throw InputError("free cell: subgroup not in the family");
  const std::size_t n = cat.object_count();
  std::vector<typename C::Object> values;
  for (std::size_t h = 0; h < n; ++h) values.push_back(C::copower(cat.hom(h, k).size(), c));
  std::vector<std::vector<std::vector<typename C::Morphism>>> maps(n, std::vector<std::vector<typename C::Morphism>>(n));
  for (std::size_t h2 = 0; h2 < n; ++h2)
    for (std::size_t h = 0; h < n; ++h)
      for (const auto& b : cat.morphisms(h2, h)) {
        // Copy R_a of hom(H, K) goes to copy R_a o R_b of hom(H', K).
        std::vector<int> copies;
        for (const auto& a : cat.morphisms(h, k)) copies.push_back(static_cast<int>(cat.position(cat.compose(a, b))));
        maps[h2][h].push_back(C::copy_map(c, cat.hom(h2, k).size(), copies));
      }
  return OrbitDiagram<C>(cat, std::move(values), std::move(maps));
}

template <class C>
typename C::GObject copower_gobject(const GSet& s, const typename C::Object& c) {
  std::vector<typename C::Morphism> acts;
  for (const auto& row : s.action()) acts.push_back(C::copy_map(c, s.size(), row));
  return C::make_gobject(s.group(), C::copower(s.size(), c), acts);
}

template <class C>
bool is_natural(const OrbitDiagram<C>& s, const OrbitDiagram<C>& t, const std::vector<typename C::Morphism>& comps) {
  const auto& cat = s.category();
  const std::size_t n = cat.object_count();
  if (comps.size() != n) return false;
  for (std::size_t h = 0; h < n; ++h)
    if (!(comps[h].source() == s.value(h)) || !(comps[h].target() == t.value(h))) return false;
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& f : cat.morphisms(h, k))
        if (!(C::compose(t.map(f), comps[k]) == C::compose(comps[h], s.map(f)))) return false;
  return true;
}

template <class C>
AdjunctionCheck<C> adjunction_check(const OrbitDiagram<C>& t, const typename C::GObject& x) {
  const auto& cat = t.category();
  const std::size_t e = trivial_index(cat);
  const std::size_t n = cat.object_count();
  const Group& g = cat.group();

  auto up = i_upper(t);
  OrbitDiagram<C> round = i_lower<C>(cat, up);
  std::vector<typename C::Morphism> unit;
  AdjunctionReport rep;
  rep.unit_iso = true;
  for (std::size_t h = 0; h < n; ++h) {
    unit.push_back(must(C::factor(t.map(cat.morphism(e, h, 0)), C::fixed(up, cat.family()[h]).inclusion),
                        "unit does not land in fixed points"));
    ObjectReport o;
    o.subgroup = cat.family()[h].str();
    o.unit_iso = C::is_iso(unit.back());
    o.unit_weak_equivalence = C::weak_equivalence(unit.back());
    o.source = C::summary(t.value(h));
    o.target = C::summary(round.value(h));
    rep.unit_iso = rep.unit_iso && o.unit_iso;
    rep.per_object.push_back(std::move(o));
  }
  rep.unit_natural = is_natural(t, round, unit);

  OrbitDiagram<C> lower = i_lower<C>(cat, x);
  auto up_lower = i_upper(lower);
  const Subgroup triv = Subgroup::trivial(g);
  auto counit = C::fixed(x, triv).inclusion;
  rep.counit_iso = C::is_iso(counit);
  rep.counit_equivariant = true;
  for (std::size_t a = 0; a < g.order(); ++a) {
    auto el = static_cast<Element>(a);
    if (!(C::compose(counit, C::act(up_lower, el)) == C::compose(C::act(x, el), counit))) rep.counit_equivariant = false;
  }

  // epsilon_{i^* t} o i^*(eta_t) = id and i_*(epsilon_x) o eta_{i_* x} = id.
  bool triangles = C::compose(C::fixed(up, triv).inclusion, unit[e]) == C::identity(t.value(e));
  for (std::size_t h = 0; h < n && triangles; ++h) {
    const Subgroup& sub = cat.family()[h];
    auto inner = C::fixed(up_lower, sub).inclusion;
    auto eta = must(C::factor(lower.map(cat.morphism(e, h, 0)), inner), "unit of i_* x does not land in fixed points");
    auto eps = must(C::factor(C::compose(counit, inner), C::fixed(x, sub).inclusion), "counit does not preserve fixed points");
    triangles = C::compose(eps, eta) == C::identity(lower.value(h));
  }
  rep.triangle_identities = triangles;
  return AdjunctionCheck<C>{std::move(round), std::move(unit), std::move(counit), std::move(rep)};
}

template <class C>
CellularityCheck<C> cellularity_report(const Subgroup& h, const Subgroup& k, const typename C::Object& a) {
  if (!(h.parent() == k.parent())) throw InputError("cellularity: subgroups of different groups");
  const Group& g = h.parent();
  GSet cosets = coset_gset(g, k);
  auto fp = fixed_points(cosets, h);
  auto lhs = C::copower(fp.size(), a);
  auto x = copower_gobject<C>(cosets, a);
  auto rhs = C::fixed(x, h);
  auto comparison = must(C::factor(C::copy_map(a, cosets.size(), fp), rhs.inclusion),
                         "cellularity: fixed copies are not fixed");
  CellularityReport rep;
  rep.h = h.str();
  rep.k = k.str();
  rep.fixed_cosets = fp.size();
  rep.orbit_count = orbit_analysis(cosets, h).orbits.size();
  rep.iso = C::is_iso(comparison);
  rep.lhs = C::summary(lhs);
  rep.rhs = C::summary(rhs.object);
  return CellularityCheck<C>{std::move(lhs), std::move(rhs.object), std::move(comparison), std::move(rep)};
}

#define EQHOM_INSTANTIATE(C)                                                                                      \
  template class OrbitDiagram<C>;                                                                                 \
  template OrbitDiagram<C> constant_diagram<C>(const OrbitCategory&, const C::Object&);                          \
  template C::GObject i_upper<C>(const OrbitDiagram<C>&);                                                         \
  template OrbitDiagram<C> i_lower<C>(const OrbitCategory&, const C::GObject&);                                   \
  template OrbitDiagram<C> free_cell_diagram<C>(const OrbitCategory&, std::size_t, const C::Object&);            \
  template C::GObject copower_gobject<C>(const GSet&, const C::Object&);                                          \
  template bool is_natural<C>(const OrbitDiagram<C>&, const OrbitDiagram<C>&, const std::vector<C::Morphism>&); \
  template AdjunctionCheck<C> adjunction_check<C>(const OrbitDiagram<C>&, const C::GObject&);                    \
  template CellularityCheck<C> cellularity_report<C>(const Subgroup&, const Subgroup&, const C::Object&);

EQHOM_INSTANTIATE(FinSetCat)
EQHOM_INSTANTIATE(FinSSetCat)
EQHOM_INSTANTIATE(ChainCat)

#undef EQHOM_INSTANTIATE

// --- census and hom sets ---------------------------------------------------

ArrowCensus arrow_poset_census(const OrbitCategory& cat) {
  const std::size_t n = cat.object_count();
  if (n > 20) throw InputError("census: family too large");
  ArrowCensus out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    bool ok = true;
    for (std::size_t h = 0; h < n && ok; ++h)
      for (std::size_t k = 0; k < n && ok; ++k)
        if (!cat.hom(h, k).empty() && (mask >> k & 1) > (mask >> h & 1)) ok = false;
    if (!ok) continue;
    std::vector<int> d(n);
    for (std::size_t h = 0; h < n; ++h) d[h] = static_cast<int>(mask >> h & 1);
    out.diagrams.push_back(std::move(d));
  }
  return out;
}

namespace {

using Components = std::vector<std::vector<int>>;  // per object, values in the G-set

struct NatSearch {
  const OrbitDiagram<FinSetCat>& t;
  const GSet& x;
  std::vector<std::vector<int>> fixed;
  std::set<Components> found;
  Components current;

  bool consistent(std::size_t upto) const {
    const auto& cat = t.category();
    for (std::size_t h = 0; h <= upto; ++h)
      for (std::size_t k = 0; k <= upto; ++k)
        for (const auto& f : cat.morphisms(h, k)) {
          const GMap& m = t.map(f);
          for (std::size_t y = 0; y < t.value(k).size(); ++y)
            if (x.apply(f.rep, current[k][y]) != current[h][static_cast<std::size_t>(m(static_cast<int>(y)))]) return false;
        }
    return true;
  }

  void run(std::size_t h) {
    if (h == fixed.size()) {
      found.insert(current);
      return;
    }
    const std::size_t size = t.value(h).size(), choices = fixed[h].size();
    if (size > 0 && choices == 0) return;
    std::vector<std::size_t> digits(size, 0);
    for (;;) {
      current[h].resize(size);
      for (std::size_t y = 0; y < size; ++y) current[h][y] = fixed[h][digits[y]];
      if (consistent(h)) run(h + 1);
      std::size_t pos = 0;
      while (pos < size && ++digits[pos] == choices) digits[pos++] = 0;
      if (pos == size) break;
    }
  }
};

}  // namespace

HomBijection hom_bijection_check(const OrbitDiagram<FinSetCat>& t, const GSet& x) {
  const auto& cat = t.category();
  if (!(x.group() == cat.group())) throw InputError("hom bijection: G-set over a different group");
  const std::size_t e = trivial_index(cat);
  GSet up = i_upper(t);
  const std::size_t n = up.size(), m = x.size();
  double total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(m);
  if (total > 1e6) throw InputError("hom bijection: too many functions to enumerate");

  NatSearch search{t, x, {}, {}, Components(cat.object_count())};
  for (const auto& h : cat.family()) search.fixed.push_back(fixed_points(x, h));
  search.run(0);

  // phi |-> (i_* phi) o eta: the component at H is phi o t(R_e : G/e -> G/H).
  HomBijection out;
  out.natural_transformations = search.found.size();
  std::set<Components> images;
  bool all_natural = true;
  std::vector<std::size_t> digits(n, 0);
  for (;;) {
    bool equivariant = m > 0 || n == 0;
    for (std::size_t g = 0; g < cat.group().order() && equivariant; ++g)
      for (std::size_t p = 0; p < n && equivariant; ++p)
        if (static_cast<int>(digits[static_cast<std::size_t>(up.apply(static_cast<Element>(g), static_cast<int>(p)))]) !=
            x.apply(static_cast<Element>(g), static_cast<int>(digits[p])))
          equivariant = false;
    if (equivariant) {
      ++out.g_maps;
      Components c(cat.object_count());
      for (std::size_t h = 0; h < cat.object_count(); ++h) {
        const GMap& r = t.map(cat.morphism(e, h, 0));
        for (std::size_t y = 0; y < t.value(h).size(); ++y) c[h].push_back(static_cast<int>(digits[static_cast<std::size_t>(r(static_cast<int>(y)))]));
      }
      if (!search.found.count(c)) all_natural = false;
      images.insert(std::move(c));
    }
    if (m == 0) break;
    std::size_t pos = 0;
    while (pos < n && ++digits[pos] == m) digits[pos++] = 0;
    if (pos == n) break;
  }
  out.bijective = all_natural && images.size() == out.g_maps && out.g_maps == out.natural_transformations;
  return out;
}

}  // namespace eqhom
