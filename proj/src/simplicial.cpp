#include "eqhom/simplicial.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "eqhom/errors.hpp"

namespace eqhom {

std::string SimplexRef::str() const {
  std::string out;
  for (int i : word) out += "s" + std::to_string(i) + " ";
  return out + "#" + std::to_string(base);
}

Surjection word_to_surjection(const std::vector<int>& word, int base_dim) {
  const int m = base_dim + static_cast<int>(word.size());
  std::vector<bool> repeat(static_cast<std::size_t>(std::max(m, 0)), false);
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k > 0 && word[k] >= word[k - 1]) throw InputError("degeneracy word must be strictly decreasing");
    if (word[k] < 0 || word[k] >= m) throw InputError("degeneracy index out of range");
    repeat[static_cast<std::size_t>(word[k])] = true;
  }
  Surjection s(static_cast<std::size_t>(m + 1));
  for (int t = 0; t < m; ++t)
    s[static_cast<std::size_t>(t + 1)] = s[static_cast<std::size_t>(t)] + (repeat[static_cast<std::size_t>(t)] ? 0 : 1);
  return s;
}

std::vector<int> surjection_to_word(const Surjection& s) {
  std::vector<int> word;
  for (std::size_t t = s.size(); t-- > 1;)
    if (s[t] == s[t - 1]) word.push_back(static_cast<int>(t - 1));
  return word;
}

namespace {

std::vector<SimplexId> identity_perm(std::size_t n) {
  std::vector<SimplexId> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<SimplexId>(i);
  return p;
}

Surjection compose_surjections(const Surjection& outer, const Surjection& inner) {
  // outer o inner
  Surjection c(inner.size());
  for (std::size_t t = 0; t < inner.size(); ++t) c[t] = outer[static_cast<std::size_t>(inner[t])];
  return c;
}

std::string at(SimplexId x) { return "simplex " + std::to_string(x); }

}  // namespace

GSSet::GSSet(Group group, std::vector<int> dims, std::vector<std::vector<SimplexRef>> faces,
             std::vector<std::vector<SimplexId>> action, int max_dim)
    : group_(std::move(group)), dims_(std::move(dims)), faces_(std::move(faces)), action_(std::move(action)) {
  const std::size_t n = dims_.size();
  if (faces_.size() != n) throw InputError("sset: faces missing for some simplices");
  for (std::size_t x = 0; x < n; ++x) {
    if (dims_[x] < 0 || dims_[x] > max_dim)
      throw InputError("sset: dimension of " + at(static_cast<SimplexId>(x)) + " outside [0," + std::to_string(max_dim) + "]");
    if (x > 0 && dims_[x] < dims_[x - 1]) throw InputError("sset: identifiers must be dimension-major");
    const std::size_t expected = dims_[x] == 0 ? 0 : static_cast<std::size_t>(dims_[x] + 1);
    if (faces_[x].size() != expected)
      throw InputError("sset: " + at(static_cast<SimplexId>(x)) + " needs " + std::to_string(expected) + " faces");
    for (const auto& f : faces_[x]) {
      if (f.base < 0 || static_cast<std::size_t>(f.base) >= n)
        throw InputError("sset: face of " + at(static_cast<SimplexId>(x)) + " references unknown simplex");
      word_to_surjection(f.word, dims_[static_cast<std::size_t>(f.base)]);
      if (dim(f) != dims_[x] - 1)
        throw InputError("sset: face of " + at(static_cast<SimplexId>(x)) + " has wrong dimension");
      if (dims_[static_cast<std::size_t>(f.base)] >= dims_[x])
        throw InputError("sset: face of " + at(static_cast<SimplexId>(x)) + " is not of lower dimension");
    }
  }
  // Simplicial identities d_i d_j = d_{j-1} d_i for i < j.
  for (std::size_t x = 0; x < n; ++x) {
    const int d = dims_[x];
    if (d < 2) continue;
    const SimplexRef self{static_cast<SimplexId>(x), {}};
    for (int j = 1; j <= d; ++j)
      for (int i = 0; i < j; ++i)
        if (face(face(self, j), i) != face(face(self, i), j - 1))
          throw InputError("sset: simplicial identity d" + std::to_string(i) + " d" + std::to_string(j) + " = d" +
                           std::to_string(j - 1) + " d" + std::to_string(i) + " fails at " + at(static_cast<SimplexId>(x)));
  }
  if (action_.size() != group_.order()) throw InputError("sset: need one action permutation per group element");
  for (std::size_t g = 0; g < action_.size(); ++g) {
    if (action_[g].size() != n) throw InputError("sset: action of element " + std::to_string(g) + " has wrong length");
    std::vector<bool> hit(n, false);
    for (std::size_t x = 0; x < n; ++x) {
      SimplexId y = action_[g][x];
      if (y < 0 || static_cast<std::size_t>(y) >= n || hit[static_cast<std::size_t>(y)] ||
          dims_[static_cast<std::size_t>(y)] != dims_[x])
        throw InputError("sset: action of element " + std::to_string(g) +
                         " is not a dimension-preserving permutation of nondegenerate simplices");
      hit[static_cast<std::size_t>(y)] = true;
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    if (action_.empty() || action_[0][x] != static_cast<SimplexId>(x))
      throw InputError("sset: identity element does not act trivially");
  for (std::size_t g = 0; g < action_.size(); ++g)
    for (std::size_t h = 0; h < action_.size(); ++h) {
      auto gh = static_cast<std::size_t>(group_.mul(static_cast<Element>(g), static_cast<Element>(h)));
      for (std::size_t x = 0; x < n; ++x)
        if (action_[g][static_cast<std::size_t>(action_[h][x])] != action_[gh][x])
          throw InputError("sset: action is not a homomorphism at (" + std::to_string(g) + "," + std::to_string(h) + ")");
    }
  for (std::size_t g = 0; g < action_.size(); ++g)
    for (std::size_t x = 0; x < n; ++x)
      for (int i = 0; i < static_cast<int>(faces_[x].size()); ++i) {
        auto ge = static_cast<Element>(g);
        if (faces_[static_cast<std::size_t>(action_[g][x])][static_cast<std::size_t>(i)] != act(ge, faces_[x][static_cast<std::size_t>(i)]))
          throw InputError("sset: face d" + std::to_string(i) + " is not equivariant at " + at(static_cast<SimplexId>(x)) +
                           " under element " + std::to_string(g));
      }
}

GSSet::GSSet(Group group, std::vector<int> dims, std::vector<std::vector<SimplexRef>> faces)
    : GSSet(group, dims, std::move(faces),
            std::vector<std::vector<SimplexId>>(group.order(), identity_perm(dims.size()))) {}

GSSet GSSet::empty(const Group& group) { return GSSet(group, {}, {}); }

GSSet GSSet::point(const Group& group) { return GSSet(group, {0}, {{}}); }

std::vector<std::vector<int>> GSSet::standard_simplex_vertices(int n) {
  std::vector<std::vector<int>> out;
  for (int d = 0; d <= n; ++d) {
    // All (d+1)-subsets of {0..n} in lexicographic order.
    std::vector<int> sub(static_cast<std::size_t>(d + 1));
    for (int i = 0; i <= d; ++i) sub[static_cast<std::size_t>(i)] = i;
    for (;;) {
      out.push_back(sub);
      int i = d;
      while (i >= 0 && sub[static_cast<std::size_t>(i)] == n - d + i) --i;
      if (i < 0) break;
      ++sub[static_cast<std::size_t>(i)];
      for (int k = i + 1; k <= d; ++k) sub[static_cast<std::size_t>(k)] = sub[static_cast<std::size_t>(k - 1)] + 1;
    }
  }
  return out;
}

namespace {

GSSet simplex_or_boundary(int n, const Group& group, bool boundary) {
  if (n < 0) throw InputError("standard simplex: negative dimension");
  auto verts = GSSet::standard_simplex_vertices(n);
  if (boundary) verts.pop_back();
  std::map<std::vector<int>, SimplexId> index;
  for (std::size_t i = 0; i < verts.size(); ++i) index.emplace(verts[i], static_cast<SimplexId>(i));
  std::vector<int> dims;
  std::vector<std::vector<SimplexRef>> faces;
  for (const auto& v : verts) {
    dims.push_back(static_cast<int>(v.size()) - 1);
    std::vector<SimplexRef> fs;
    if (v.size() > 1)
      for (std::size_t i = 0; i < v.size(); ++i) {
        auto w = v;
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
        fs.push_back({index.at(w), {}});
      }
    faces.push_back(std::move(fs));
  }
  return GSSet(group, std::move(dims), std::move(faces));
}

}  // namespace

GSSet GSSet::standard_simplex(int n, const Group& group) { return simplex_or_boundary(n, group, false); }

GSSet GSSet::boundary(int n, const Group& group) { return simplex_or_boundary(n, group, true); }

std::vector<SimplexId> GSSet::simplices(int n) const {
  std::vector<SimplexId> out;
  for (std::size_t x = 0; x < dims_.size(); ++x)
    if (dims_[x] == n) out.push_back(static_cast<SimplexId>(x));
  return out;
}

std::size_t GSSet::count(int n) const {
  return static_cast<std::size_t>(std::count(dims_.begin(), dims_.end(), n));
}

bool GSSet::has_trivial_action() const {
  for (const auto& p : action_)
    for (std::size_t x = 0; x < p.size(); ++x)
      if (p[x] != static_cast<SimplexId>(x)) return false;
  return true;
}

SimplexRef GSSet::face(const SimplexRef& x, int i) const {
  const int n = dim(x.base);
  const int m = n + static_cast<int>(x.word.size());
  if (m < 1 || i < 0 || i > m)
    throw InputError("face d" + std::to_string(i) + " out of range for a " + std::to_string(m) + "-simplex");
  Surjection s = word_to_surjection(x.word, n);
  const int v = s[static_cast<std::size_t>(i)];
  s.erase(s.begin() + i);
  if (std::find(s.begin(), s.end(), v) != s.end()) return {x.base, surjection_to_word(s)};
  // The vertex v of the base is skipped: pass to the stored face d_v.
  for (auto& t : s)
    if (t > v) --t;
  const SimplexRef& f = faces_[static_cast<std::size_t>(x.base)][static_cast<std::size_t>(v)];
  Surjection inner = word_to_surjection(f.word, dim(f.base));
  return {f.base, surjection_to_word(compose_surjections(inner, s))};
}

SimplexRef GSSet::degeneracy(const SimplexRef& x, int i) const {
  const int n = dim(x.base);
  const int m = n + static_cast<int>(x.word.size());
  if (i < 0 || i > m)
    throw InputError("degeneracy s" + std::to_string(i) + " out of range for a " + std::to_string(m) + "-simplex");
  Surjection s = word_to_surjection(x.word, n);
  s.insert(s.begin() + i, s[static_cast<std::size_t>(i)]);
  return {x.base, surjection_to_word(s)};
}

SimplexRef GSSet::apply_operator(const SimplexRef& x, SimplicialOperator op) const {
  return op.kind == SimplicialOperator::Kind::Face ? face(x, op.index) : degeneracy(x, op.index);
}

Subgroup GSSet::stabilizer(SimplexId x) const {
  std::vector<Element> members;
  for (std::size_t g = 0; g < action_.size(); ++g)
    if (action_[g][static_cast<std::size_t>(x)] == x) members.push_back(static_cast<Element>(g));
  return Subgroup(group_, std::move(members));
}

bool GSSet::is_fixed(SimplexId x, const Subgroup& h) const {
  return std::all_of(h.members().begin(), h.members().end(), [&](Element g) { return act(g, x) == x; });
}

GSSet GSSet::forget_action() const { return GSSet(Group::trivial(), dims_, faces_); }

GSSet GSSet::with_trivial_action(const Group& group) const {
  if (!has_trivial_action()) throw InputError("sset: action is not trivial");
  return GSSet(group, dims_, faces_);
}

// ---------------------------------------------------------------------------

SMap::SMap(GSSet source, GSSet target, std::vector<SimplexRef> values)
    : source_(std::move(source)), target_(std::move(target)), values_(std::move(values)) {
  if (!(source_.group() == target_.group())) throw InputError("map: source and target groups differ");
  if (values_.size() != source_.size()) throw InputError("map: need one value per nondegenerate source simplex");
  for (std::size_t x = 0; x < values_.size(); ++x) {
    const auto& v = values_[x];
    if (v.base < 0 || static_cast<std::size_t>(v.base) >= target_.size())
      throw InputError("map: value of " + at(static_cast<SimplexId>(x)) + " references unknown simplex");
    word_to_surjection(v.word, target_.dim(v.base));
    if (target_.dim(v) != source_.dim(static_cast<SimplexId>(x)))
      throw InputError("map: value of " + at(static_cast<SimplexId>(x)) + " has wrong dimension");
  }
  for (std::size_t x = 0; x < values_.size(); ++x) {
    const auto& fs = source_.faces(static_cast<SimplexId>(x));
    for (std::size_t i = 0; i < fs.size(); ++i)
      if ((*this)(fs[i]) != target_.face(values_[x], static_cast<int>(i)))
        throw InputError("map: does not commute with d" + std::to_string(i) + " at " + at(static_cast<SimplexId>(x)));
    for (std::size_t g = 0; g < source_.group().order(); ++g) {
      auto ge = static_cast<Element>(g);
      if (values_[static_cast<std::size_t>(source_.act(ge, static_cast<SimplexId>(x)))] != target_.act(ge, values_[x]))
        throw InputError("map: not equivariant at " + at(static_cast<SimplexId>(x)) + " under element " + std::to_string(g));
    }
  }
}

SMap SMap::identity(const GSSet& x) {
  std::vector<SimplexRef> v;
  for (std::size_t i = 0; i < x.size(); ++i) v.push_back({static_cast<SimplexId>(i), {}});
  return SMap(x, x, std::move(v));
}

SMap SMap::from_empty(const GSSet& target) { return SMap(GSSet::empty(target.group()), target, {}); }

SimplexRef SMap::operator()(const SimplexRef& x) const {
  const SimplexRef& v = values_[static_cast<std::size_t>(x.base)];
  if (x.word.empty()) return v;
  Surjection outer = word_to_surjection(v.word, target_.dim(v.base));
  Surjection inner = word_to_surjection(x.word, source_.dim(x.base));
  return {v.base, surjection_to_word(compose_surjections(outer, inner))};
}

std::optional<SimplexId> SMap::injectivity_witness() const {
  std::vector<SimplexId> seen(target_.size(), -1);
  for (std::size_t x = 0; x < values_.size(); ++x) {
    const auto& v = values_[x];
    if (v.is_degenerate()) return static_cast<SimplexId>(x);
    if (seen[static_cast<std::size_t>(v.base)] >= 0) return static_cast<SimplexId>(x);
    seen[static_cast<std::size_t>(v.base)] = static_cast<SimplexId>(x);
  }
  return std::nullopt;
}

bool SMap::is_injective() const { return !injectivity_witness().has_value(); }

bool SMap::is_isomorphism() const { return is_injective() && source_.size() == target_.size(); }

SMap compose(const SMap& second, const SMap& first) {
  if (!(first.target() == second.source())) throw InputError("compose: maps are not composable");
  std::vector<SimplexRef> v;
  for (const auto& r : first.values()) v.push_back(second(r));
  return SMap(first.source(), second.target(), std::move(v));
}

// ---------------------------------------------------------------------------

SubObject restrict_to(const GSSet& x, const std::vector<bool>& keep, bool keep_action) {
  std::vector<SimplexId> new_id(x.size(), -1);
  std::vector<SimplexId> old_id;
  for (std::size_t s = 0; s < x.size(); ++s)
    if (keep[s]) {
      new_id[s] = static_cast<SimplexId>(old_id.size());
      old_id.push_back(static_cast<SimplexId>(s));
    }
  std::vector<int> dims;
  std::vector<std::vector<SimplexRef>> faces;
  for (SimplexId s : old_id) {
    dims.push_back(x.dim(s));
    std::vector<SimplexRef> fs;
    for (const auto& f : x.faces(s)) {
      if (new_id[static_cast<std::size_t>(f.base)] < 0)
        throw VerificationError("restrict_to: kept simplices are not closed under faces at " + at(s));
      fs.push_back({new_id[static_cast<std::size_t>(f.base)], f.word});
    }
    faces.push_back(std::move(fs));
  }
  std::vector<SimplexRef> values;
  for (SimplexId s : old_id) values.push_back({s, {}});
  if (!keep_action) {
    GSSet sub(Group::trivial(), std::move(dims), std::move(faces));
    return SubObject{sub, SMap(sub, x.forget_action(), std::move(values))};
  }
  std::vector<std::vector<SimplexId>> action(x.group().order(), std::vector<SimplexId>(old_id.size()));
  for (std::size_t g = 0; g < action.size(); ++g)
    for (std::size_t i = 0; i < old_id.size(); ++i) {
      SimplexId y = new_id[static_cast<std::size_t>(x.act(static_cast<Element>(g), old_id[i]))];
      if (y < 0) throw InputError("restrict_to: kept simplices are not invariant");
      action[g][i] = y;
    }
  GSSet sub(x.group(), std::move(dims), std::move(faces), std::move(action));
  return SubObject{sub, SMap(sub, x, std::move(values))};
}

SubObject fixed_sset(const GSSet& x, const Subgroup& h) {
  if (!(h.parent() == x.group())) throw InputError("fixed_sset: subgroup of a different group");
  std::vector<bool> keep(x.size());
  for (std::size_t s = 0; s < x.size(); ++s) keep[s] = x.is_fixed(static_cast<SimplexId>(s), h);
  // Faces of a fixed simplex are fixed because the action commutes with faces.
  for (std::size_t s = 0; s < x.size(); ++s)
    if (keep[s])
      for (const auto& f : x.faces(static_cast<SimplexId>(s)))
        if (!keep[static_cast<std::size_t>(f.base)]) throw VerificationError("fixed_sset: not closed under faces");
  return restrict_to(x, keep, false);
}

SubObject skeleton(const GSSet& x, int n) {
  std::vector<bool> keep(x.size());
  for (std::size_t s = 0; s < x.size(); ++s) keep[s] = x.dim(static_cast<SimplexId>(s)) <= n;
  return restrict_to(x, keep, true);
}

GSSet gtensor(const GSet& s, const GSSet& a) {
  if (a.group().order() != 1) throw InputError("gtensor: second factor must be a plain simplicial set");
  const int top = a.top_dim();
  std::vector<std::size_t> offset(static_cast<std::size_t>(top + 2), 0);
  std::vector<std::size_t> index_in_dim(a.size());
  std::vector<std::size_t> per_dim(static_cast<std::size_t>(top + 1), 0);
  for (std::size_t x = 0; x < a.size(); ++x) index_in_dim[x] = per_dim[static_cast<std::size_t>(a.dim(static_cast<SimplexId>(x)))]++;
  for (int d = 0; d <= top; ++d)
    offset[static_cast<std::size_t>(d + 1)] = offset[static_cast<std::size_t>(d)] + s.size() * per_dim[static_cast<std::size_t>(d)];
  auto id = [&](int c, SimplexId x) {
    auto d = static_cast<std::size_t>(a.dim(x));
    return static_cast<SimplexId>(offset[d] + static_cast<std::size_t>(c) * per_dim[d] + index_in_dim[static_cast<std::size_t>(x)]);
  };
  const std::size_t total = offset.back();
  std::vector<int> dims(total);
  std::vector<std::vector<SimplexRef>> faces(total);
  std::vector<std::vector<SimplexId>> action(s.group().order(), std::vector<SimplexId>(total));
  for (std::size_t c = 0; c < s.size(); ++c)
    for (std::size_t x = 0; x < a.size(); ++x) {
      auto me = static_cast<std::size_t>(id(static_cast<int>(c), static_cast<SimplexId>(x)));
      dims[me] = a.dim(static_cast<SimplexId>(x));
      for (const auto& f : a.faces(static_cast<SimplexId>(x))) faces[me].push_back({id(static_cast<int>(c), f.base), f.word});
      for (std::size_t g = 0; g < action.size(); ++g)
        action[g][me] = id(s.apply(static_cast<Element>(g), static_cast<int>(c)), static_cast<SimplexId>(x));
    }
  return GSSet(s.group(), std::move(dims), std::move(faces), std::move(action));
}

Coproduct coproduct(const std::vector<GSSet>& parts) {
  if (parts.empty()) throw InputError("coproduct: no parts");
  const Group& g = parts.front().group();
  int top = -1;
  for (const auto& p : parts) {
    if (!(p.group() == g)) throw InputError("coproduct: parts over different groups");
    top = std::max(top, p.top_dim());
  }
  // new id of (part, simplex)
  std::vector<std::vector<SimplexId>> ids(parts.size());
  for (std::size_t k = 0; k < parts.size(); ++k) ids[k].assign(parts[k].size(), -1);
  SimplexId next = 0;
  std::vector<int> dims;
  for (int d = 0; d <= top; ++d)
    for (std::size_t k = 0; k < parts.size(); ++k)
      for (SimplexId x : parts[k].simplices(d)) {
        ids[k][static_cast<std::size_t>(x)] = next++;
        dims.push_back(d);
      }
  std::vector<std::vector<SimplexRef>> faces(dims.size());
  std::vector<std::vector<SimplexId>> action(g.order(), std::vector<SimplexId>(dims.size()));
  for (std::size_t k = 0; k < parts.size(); ++k)
    for (std::size_t x = 0; x < parts[k].size(); ++x) {
      auto me = static_cast<std::size_t>(ids[k][x]);
      for (const auto& f : parts[k].faces(static_cast<SimplexId>(x)))
        faces[me].push_back({ids[k][static_cast<std::size_t>(f.base)], f.word});
      for (std::size_t e = 0; e < g.order(); ++e)
        action[e][me] = ids[k][static_cast<std::size_t>(parts[k].act(static_cast<Element>(e), static_cast<SimplexId>(x)))];
    }
  Coproduct out{GSSet(g, std::move(dims), std::move(faces), std::move(action)), {}};
  for (std::size_t k = 0; k < parts.size(); ++k) {
    std::vector<SimplexRef> v;
    for (SimplexId id : ids[k]) v.push_back({id, {}});
    out.injections.emplace_back(parts[k], out.object, std::move(v));
  }
  return out;
}

SSetPushout pushout(const SMap& to_a, const SMap& mono_to_b) {
  if (!(to_a.source() == mono_to_b.source())) throw InputError("pushout: legs have different sources");
  if (!mono_to_b.is_injective()) throw InputError("pushout: leg into b is not a monomorphism");
  const GSSet& a = to_a.target();
  const GSSet& b = mono_to_b.target();
  const Group& g = a.group();
  std::vector<SimplexId> preimage(b.size(), -1);
  for (std::size_t c = 0; c < mono_to_b.values().size(); ++c)
    preimage[static_cast<std::size_t>(mono_to_b.values()[c].base)] = static_cast<SimplexId>(c);

  const int top = std::max(a.top_dim(), b.top_dim());
  std::vector<SimplexId> a_id(a.size(), -1), b_id(b.size(), -1);
  std::vector<int> dims;
  SimplexId next = 0;
  for (int d = 0; d <= top; ++d) {
    for (SimplexId x : a.simplices(d)) {
      a_id[static_cast<std::size_t>(x)] = next++;
      dims.push_back(d);
    }
    for (SimplexId x : b.simplices(d))
      if (preimage[static_cast<std::size_t>(x)] < 0) {
        b_id[static_cast<std::size_t>(x)] = next++;
        dims.push_back(d);
      }
  }
  // Every simplex of b as a simplex of the pushout.
  auto from_b = [&](const SimplexRef& r) -> SimplexRef {
    SimplexId c = preimage[static_cast<std::size_t>(r.base)];
    if (c < 0) return {b_id[static_cast<std::size_t>(r.base)], r.word};
    SimplexRef in_a = to_a(SimplexRef{c, r.word});
    return {a_id[static_cast<std::size_t>(in_a.base)], in_a.word};
  };
  std::vector<std::vector<SimplexRef>> faces(dims.size());
  std::vector<std::vector<SimplexId>> action(g.order(), std::vector<SimplexId>(dims.size()));
  for (std::size_t x = 0; x < a.size(); ++x) {
    auto me = static_cast<std::size_t>(a_id[x]);
    for (const auto& f : a.faces(static_cast<SimplexId>(x))) faces[me].push_back({a_id[static_cast<std::size_t>(f.base)], f.word});
    for (std::size_t e = 0; e < g.order(); ++e)
      action[e][me] = a_id[static_cast<std::size_t>(a.act(static_cast<Element>(e), static_cast<SimplexId>(x)))];
  }
  for (std::size_t x = 0; x < b.size(); ++x) {
    if (b_id[x] < 0) continue;
    auto me = static_cast<std::size_t>(b_id[x]);
    for (const auto& f : b.faces(static_cast<SimplexId>(x))) faces[me].push_back(from_b(f));
    for (std::size_t e = 0; e < g.order(); ++e) {
      SimplexId y = b.act(static_cast<Element>(e), static_cast<SimplexId>(x));
      if (b_id[static_cast<std::size_t>(y)] < 0) throw InputError("pushout: image of c is not invariant");
      action[e][me] = b_id[static_cast<std::size_t>(y)];
    }
  }
  GSSet p(g, std::move(dims), std::move(faces), std::move(action));
  std::vector<SimplexRef> va, vb;
  for (SimplexId id : a_id) va.push_back({id, {}});
  for (std::size_t x = 0; x < b.size(); ++x) vb.push_back(from_b({static_cast<SimplexId>(x), {}}));
  SMap leg_a(a, p, std::move(va));
  SMap leg_b(b, p, std::move(vb));
  if (compose(leg_a, to_a) != compose(leg_b, mono_to_b)) throw VerificationError("pushout: square does not commute");
  return SSetPushout{std::move(p), std::move(leg_a), std::move(leg_b)};
}

// ---------------------------------------------------------------------------

namespace {

Surjection split_surjection(int n, int split) {
  if (split < 0) {
    Surjection s(static_cast<std::size_t>(n + 1));
    for (int t = 0; t <= n; ++t) s[static_cast<std::size_t>(t)] = t;
    return s;
  }
  Surjection s(static_cast<std::size_t>(n + 2));
  for (int t = 0; t <= n + 1; ++t) s[static_cast<std::size_t>(t)] = t <= split ? t : t - 1;
  return s;
}

}  // namespace

SimplexId Prism::shuffle_cell(SimplexId x, int j) const {
  for (std::size_t c = 0; c < cells.size(); ++c)
    if (cells[c].base == x && cells[c].split == j) return static_cast<SimplexId>(c);
  throw InputError("prism: no shuffle cell for simplex " + std::to_string(x));
}

Prism prism(const GSSet& x) {
  std::vector<Prism::Cell> cells;
  std::map<std::tuple<SimplexId, int, int>, SimplexId> index;
  const int top = x.top_dim();
  for (int m = 0; m <= top + 1; ++m)
    for (std::size_t s = 0; s < x.size(); ++s) {
      const int n = x.dim(static_cast<SimplexId>(s));
      if (n == m)
        for (int k = 0; k <= n + 1; ++k) cells.push_back({static_cast<SimplexId>(s), -1, k});
      else if (n + 1 == m)
        for (int j = 0; j <= n; ++j) cells.push_back({static_cast<SimplexId>(s), j, j + 1});
    }
  std::vector<int> dims;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    index.emplace(std::make_tuple(cells[c].base, cells[c].split, cells[c].jump), static_cast<SimplexId>(c));
    dims.push_back(x.dim(cells[c].base) + (cells[c].split >= 0 ? 1 : 0));
  }

  // Normal form of the raw pair (sigma^* y, b) in the product.
  auto normalize = [&](SimplexId y, const Surjection& sigma, const std::vector<int>& b) -> SimplexRef {
    Surjection collapse;
    Surjection s_nd;
    std::vector<int> b_nd;
    for (std::size_t t = 0; t < sigma.size(); ++t) {
      if (t > 0 && sigma[t] == sigma[t - 1] && b[t] == b[t - 1]) {
        collapse.push_back(collapse.back());
        continue;
      }
      collapse.push_back(static_cast<int>(s_nd.size()));
      s_nd.push_back(sigma[t]);
      b_nd.push_back(b[t]);
    }
    const int n = x.dim(y);
    const int m = static_cast<int>(s_nd.size()) - 1;
    int split = -1;
    if (m == n + 1) {
      for (int t = 0; t < m; ++t)
        if (s_nd[static_cast<std::size_t>(t)] == s_nd[static_cast<std::size_t>(t + 1)]) split = t;
    } else if (m != n) {
      throw VerificationError("prism: nondegenerate part has unexpected dimension");
    }
    int jump = static_cast<int>(std::count(b_nd.begin(), b_nd.end(), 0));
    return {index.at(std::make_tuple(y, split, jump)), surjection_to_word(collapse)};
  };

  std::vector<std::vector<SimplexRef>> faces(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto& cell = cells[c];
    const int n = x.dim(cell.base);
    const int m = dims[c];
    if (m == 0) continue;
    Surjection sigma = split_surjection(n, cell.split);
    std::vector<int> b(static_cast<std::size_t>(m + 1));
    for (int t = 0; t <= m; ++t) b[static_cast<std::size_t>(t)] = t < cell.jump ? 0 : 1;
    for (int i = 0; i <= m; ++i) {
      SimplexRef f = x.face(SimplexRef{cell.base, surjection_to_word(sigma)}, i);
      std::vector<int> bf = b;
      bf.erase(bf.begin() + i);
      faces[c].push_back(normalize(f.base, word_to_surjection(f.word, x.dim(f.base)), bf));
    }
  }
  std::vector<std::vector<SimplexId>> action(x.group().order(), std::vector<SimplexId>(cells.size()));
  for (std::size_t g = 0; g < action.size(); ++g)
    for (std::size_t c = 0; c < cells.size(); ++c)
      action[g][c] = index.at(std::make_tuple(x.act(static_cast<Element>(g), cells[c].base), cells[c].split, cells[c].jump));
  GSSet product(x.group(), dims, std::move(faces), std::move(action), kDefaultMaxDimension + 1);

  std::vector<SimplexRef> e0, e1, proj;
  for (std::size_t s = 0; s < x.size(); ++s) {
    const int n = x.dim(static_cast<SimplexId>(s));
    e0.push_back({index.at(std::make_tuple(static_cast<SimplexId>(s), -1, n + 1)), {}});
    e1.push_back({index.at(std::make_tuple(static_cast<SimplexId>(s), -1, 0)), {}});
  }
  for (const auto& cell : cells)
    proj.push_back({cell.base, surjection_to_word(split_surjection(x.dim(cell.base), cell.split))});
  SMap end0(x, product, std::move(e0));
  SMap end1(x, product, std::move(e1));
  SMap projection(product, x, std::move(proj));
  return Prism{std::move(product), std::move(cells), std::move(end0), std::move(end1), std::move(projection)};
}

// ---------------------------------------------------------------------------

std::size_t CellStructure::cell_count() const {
  std::size_t n = 0;
  for (const auto& c : cells) n += c.size();
  return n;
}

namespace {

std::vector<bool> image_marks(const SMap& f) {
  std::vector<bool> in_image(f.target().size(), false);
  for (const auto& v : f.values()) in_image[static_cast<std::size_t>(v.base)] = true;
  return in_image;
}

// The face of x spanned by a vertex subset of {0..n}.
SimplexRef sub_face(const GSSet& b, SimplexId x, const std::vector<int>& vertices) {
  const int n = b.dim(x);
  SimplexRef r{x, {}};
  for (int i = n; i >= 0; --i)
    if (!std::binary_search(vertices.begin(), vertices.end(), i)) r = b.face(r, i);
  return r;
}

}  // namespace

CellStructure cell_decomposition(const SMap& f) {
  if (auto w = f.injectivity_witness())
    throw InputError("cell_decomposition: map is not injective at source simplex " + std::to_string(*w));
  const GSSet& b = f.target();
  auto in_image = image_marks(f);
  CellStructure out;
  out.cells.resize(static_cast<std::size_t>(std::max(b.top_dim() + 1, 0)));
  std::vector<bool> seen = in_image;
  for (std::size_t x = 0; x < b.size(); ++x) {
    if (seen[x]) continue;
    for (std::size_t g = 0; g < b.group().order(); ++g)
      seen[static_cast<std::size_t>(b.act(static_cast<Element>(g), static_cast<SimplexId>(x)))] = true;
    auto xs = static_cast<SimplexId>(x);
    out.cells[static_cast<std::size_t>(b.dim(xs))].push_back(Cell{xs, b.stabilizer(xs), b.faces(xs)});
  }
  return out;
}

CellReplay replay_cells(const SMap& f, const CellStructure& structure) {
  const GSSet& b = f.target();
  const Group& g = b.group();
  auto in_a = image_marks(f);
  GSSet stage = f.source();
  SMap comparison = f;
  CellReplay out{{}, {}, f};

  for (int n = 0; n <= b.top_dim(); ++n) {
    const auto& cells = static_cast<std::size_t>(n) < structure.cells.size() ? structure.cells[static_cast<std::size_t>(n)]
                                                                             : std::vector<Cell>{};
    if (!cells.empty()) {
      // Inverse of the comparison on nondegenerate simplices.
      std::vector<SimplexId> back(b.size(), -1);
      for (std::size_t s = 0; s < comparison.values().size(); ++s)
        back[static_cast<std::size_t>(comparison.values()[s].base)] = static_cast<SimplexId>(s);

      const GSSet disk = GSSet::standard_simplex(n);
      const GSSet sphere = GSSet::boundary(n);
      const auto verts = GSSet::standard_simplex_vertices(n);
      std::vector<GSSet> disks, spheres;
      std::vector<CosetSpace> cosets;
      for (const auto& cell : cells) {
        GSet orbit = coset_gset(g, cell.stabilizer);
        cosets.push_back(left_cosets(g, cell.stabilizer));
        disks.push_back(gtensor(orbit, disk));
        spheres.push_back(gtensor(orbit, sphere));
      }
      Coproduct big = coproduct(disks);
      Coproduct small = coproduct(spheres);

      // The boundary sits inside the disk with the same identifiers per part.
      std::vector<SimplexRef> incl_values(small.object.size());
      std::vector<SimplexRef> attach_values(small.object.size());
      for (std::size_t k = 0; k < cells.size(); ++k) {
        const auto& sph = spheres[k];
        const std::size_t per_coset_dims = sphere.size();
        for (std::size_t s = 0; s < sph.size(); ++s) {
          auto sid = small.injections[k](static_cast<SimplexId>(s)).base;
          incl_values[static_cast<std::size_t>(sid)] = big.injections[k](static_cast<SimplexId>(s));
          // Recover (coset, simplex of dDelta[n]) from the gtensor layout.
          const int d = sph.dim(static_cast<SimplexId>(s));
          std::size_t offset = 0;
          for (int e = 0; e < d; ++e) offset += sph.count(e);
          const std::size_t per = sphere.count(d);
          const std::size_t local = static_cast<std::size_t>(s) - offset;
          const std::size_t coset = local / per;
          std::size_t simplex = local % per;
          for (int e = 0; e < d; ++e) simplex += sphere.count(e);
          (void)per_coset_dims;
          SimplexRef in_b = b.act(cosets[k].representatives[coset],
                                  sub_face(b, cells[k].representative, verts[simplex]));
          SimplexId s_stage = back[static_cast<std::size_t>(in_b.base)];
          if (s_stage < 0) throw VerificationError("replay: attaching map leaves the previous stage");
          attach_values[static_cast<std::size_t>(sid)] = {s_stage, in_b.word};
        }
      }
      SMap attach(small.object, stage, std::move(attach_values));
      SMap inclusion(small.object, big.object, std::move(incl_values));
      SSetPushout po = pushout(attach, inclusion);

      // Comparison from the new stage to B: old part through the old
      // comparison, the cell over coset gG_x onto gx.
      std::vector<SimplexRef> values(po.object.size());
      std::vector<bool> filled(po.object.size(), false);
      for (std::size_t s = 0; s < stage.size(); ++s) {
        auto p = static_cast<std::size_t>(po.from_a(static_cast<SimplexId>(s)).base);
        values[p] = comparison(static_cast<SimplexId>(s));
        filled[p] = true;
      }
      for (std::size_t k = 0; k < cells.size(); ++k) {
        const auto& dk = disks[k];
        const std::size_t per = disk.count(n);
        std::size_t offset = 0;
        for (int e = 0; e < n; ++e) offset += dk.count(e);
        for (std::size_t c = 0; c < cosets[k].representatives.size(); ++c) {
          auto t = static_cast<SimplexId>(offset + c * per);
          SimplexRef p = po.from_b(big.injections[k](t));
          values[static_cast<std::size_t>(p.base)] = b.act(cosets[k].representatives[c], SimplexRef{cells[k].representative, {}});
          filled[static_cast<std::size_t>(p.base)] = true;
        }
      }
      if (std::find(filled.begin(), filled.end(), false) != filled.end())
        throw VerificationError("replay: pushout has simplices outside stage and cells");
      comparison = SMap(po.object, b, std::move(values));
      stage = po.object;
    }
    // The comparison must be an injection onto A u Sk_n B.
    if (!comparison.is_injective()) throw VerificationError("replay: stage " + std::to_string(n) + " is not embedded");
    std::vector<bool> hit(b.size(), false);
    for (const auto& v : comparison.values()) hit[static_cast<std::size_t>(v.base)] = true;
    for (std::size_t x = 0; x < b.size(); ++x) {
      bool expected = in_a[x] || b.dim(static_cast<SimplexId>(x)) <= n;
      if (hit[x] != expected)
        throw VerificationError("replay: stage " + std::to_string(n) + " differs from A u Sk_n B at " + at(static_cast<SimplexId>(x)));
    }
    out.stages.push_back(stage);
    out.comparisons.push_back(comparison);
  }
  if (!comparison.is_isomorphism()) throw VerificationError("replay: final stage is not isomorphic to B");
  out.final_comparison = comparison;
  return out;
}

CofibrationVerdict check_F_cofibration(const SMap& f, const std::vector<Subgroup>& family) {
  CofibrationVerdict v;
  if (auto w = f.injectivity_witness()) {
    // Report the offending image simplex in the target.
    v.witness = f(*w).base;
    return v;
  }
  v.injective = true;
  auto in_image = image_marks(f);
  const GSSet& b = f.target();
  for (std::size_t x = 0; x < b.size(); ++x) {
    if (in_image[x]) continue;
    Subgroup stab = b.stabilizer(static_cast<SimplexId>(x));
    auto m = family_membership(stab, family);
    if (!m.up_to_conjugacy) {
      v.witness = static_cast<SimplexId>(x);
      v.witness_stabilizer = stab;
      return v;
    }
    if (!m.strict) v.strict_reading_differs = true;
  }
  v.is_cofibration = true;
  return v;
}

std::optional<SMap> find_isomorphism(const GSSet& x, const GSSet& y) {
  if (!(x.group() == y.group()) || x.dims() != y.dims()) return std::nullopt;
  const std::size_t n = x.size();
  std::vector<SimplexId> assign(n, -1);
  std::vector<bool> used(n, false);
  auto consistent = [&](std::size_t s, SimplexId t) {
    const auto& fx = x.faces(static_cast<SimplexId>(s));
    const auto& fy = y.faces(t);
    for (std::size_t i = 0; i < fx.size(); ++i)
      if (SimplexRef{assign[static_cast<std::size_t>(fx[i].base)], fx[i].word} != fy[i]) return false;
    return x.stabilizer(static_cast<SimplexId>(s)).size() == y.stabilizer(t).size();
  };
  std::optional<SMap> found;
  auto search = [&](auto&& self, std::size_t s) -> bool {
    if (s == n) {
      std::vector<SimplexRef> values;
      for (SimplexId t : assign) values.push_back({t, {}});
      try {
        found.emplace(x, y, std::move(values));
        return true;
      } catch (const InputError&) {
        return false;
      }
    }
    for (SimplexId t : y.simplices(x.dim(static_cast<SimplexId>(s)))) {
      if (used[static_cast<std::size_t>(t)] || !consistent(s, t)) continue;
      assign[s] = t;
      used[static_cast<std::size_t>(t)] = true;
      if (self(self, s + 1)) return true;
      used[static_cast<std::size_t>(t)] = false;
      assign[s] = -1;
    }
    return false;
  };
  search(search, 0);
  return found;
}

}  // namespace eqhom
