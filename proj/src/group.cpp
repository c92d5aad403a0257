#include "eqhom/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "eqhom/errors.hpp"

namespace eqhom {

Group Group::validated(Data data) {
  const auto& m = data.mult;
  const std::size_t n = m.size();
  if (n == 0) throw InputError("group: empty multiplication table");
  if (n > kDefaultMaxGroupOrder * 16) throw InputError("group: table too large");
  for (std::size_t a = 0; a < n; ++a) {
    if (m[a].size() != n) throw InputError("group: table is not square (row " + std::to_string(a) + ")");
    for (Element v : m[a])
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw InputError("group: entry out of range in row " + std::to_string(a));
  }
  for (std::size_t a = 0; a < n; ++a)
    if (m[0][a] != static_cast<Element>(a) || m[a][0] != static_cast<Element>(a))
      throw InputError("group: 0 is not a two-sided identity (element " + std::to_string(a) + ")");
  data.inv.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (m[a][b] == 0 && m[b][a] == 0) {
        data.inv[a] = static_cast<Element>(b);
        break;
      }
    if (data.inv[a] < 0) throw InputError("group: element " + std::to_string(a) + " has no inverse");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (m[m[a][b]][c] != m[a][m[b][c]])
          throw InputError("group: not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                           std::to_string(c) + ")");
  return Group(std::make_shared<const Data>(std::move(data)));
}

Group Group::from_table(std::vector<std::vector<Element>> mult) {
  Data d;
  d.mult = std::move(mult);
  return validated(std::move(d));
}

Group Group::from_permutations(std::size_t degree, const std::vector<std::vector<int>>& generators,
                               std::size_t max_order) {
  using Perm = std::vector<int>;
  for (const auto& g : generators) {
    if (g.size() != degree) throw InputError("group: generator has wrong degree");
    Perm sorted = g;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < degree; ++i)
      if (sorted[i] != static_cast<int>(i)) throw InputError("group: generator is not a permutation");
  }
  auto compose = [](const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) c[x] = a[static_cast<std::size_t>(b[x])];
    return c;
  };
  Perm id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<int>(i);

  std::vector<Perm> elems{id};
  std::map<Perm, Element> index{{id, 0}};
  std::deque<Element> queue{0};
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      Perm y = compose(elems[static_cast<std::size_t>(x)], g);
      if (index.count(y)) continue;
      if (elems.size() >= max_order)
        throw InputError("group: closure exceeds order bound " + std::to_string(max_order));
      index.emplace(y, static_cast<Element>(elems.size()));
      queue.push_back(static_cast<Element>(elems.size()));
      elems.push_back(std::move(y));
    }
  }
  Data d;
  const std::size_t n = elems.size();
  d.mult.assign(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) d.mult[a][b] = index.at(compose(elems[a], elems[b]));
  d.perms = std::move(elems);
  return validated(std::move(d));
}

Group Group::trivial() { return from_table({{0}}); }

Group Group::cyclic(std::size_t n) {
  std::vector<int> rot(n);
  for (std::size_t i = 0; i < n; ++i) rot[i] = static_cast<int>((i + 1) % n);
  if (n <= 1) return trivial();
  return from_permutations(n, {rot});
}

Group Group::dihedral(std::size_t n) {
  if (n < 2) throw InputError("group: dihedral group needs n >= 2");
  std::vector<int> rot(n), flip(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<int>((i + 1) % n);
    flip[i] = static_cast<int>((n - i) % n);
  }
  if (n == 2) {
    // D_2 = C2 x C2 realized on four points.
    return from_permutations(4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
  }
  return from_permutations(n, {rot, flip});
}

Group Group::symmetric(std::size_t n) {
  if (n <= 1) return trivial();
  std::vector<int> swap(n), cycle(n);
  for (std::size_t i = 0; i < n; ++i) {
    swap[i] = static_cast<int>(i);
    cycle[i] = static_cast<int>((i + 1) % n);
  }
  std::swap(swap[0], swap[1]);
  if (n == 2) return from_permutations(n, {swap});
  return from_permutations(n, {swap, cycle});
}

Group Group::direct_product(const Group& a, const Group& b) {
  const std::size_t na = a.order(), nb = b.order();
  std::vector<std::vector<Element>> mult(na * nb, std::vector<Element>(na * nb));
  for (std::size_t x = 0; x < na * nb; ++x)
    for (std::size_t y = 0; y < na * nb; ++y) {
      auto ax = static_cast<Element>(x / nb), bx = static_cast<Element>(x % nb);
      auto ay = static_cast<Element>(y / nb), by = static_cast<Element>(y % nb);
      mult[x][y] = static_cast<Element>(static_cast<std::size_t>(a.mul(ax, ay)) * nb +
                                        static_cast<std::size_t>(b.mul(bx, by)));
    }
  return from_table(std::move(mult));
}

Subgroup::Subgroup(Group parent, std::vector<Element> members)
    : parent_(std::move(parent)), members_(std::move(members)), mask_(parent_.order(), false) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Element x : members_) {
    if (x < 0 || static_cast<std::size_t>(x) >= parent_.order())
      throw InputError("subgroup: element " + std::to_string(x) + " not in group");
    mask_[static_cast<std::size_t>(x)] = true;
  }
  if (members_.empty() || members_.front() != 0) throw InputError("subgroup: must contain the identity 0");
  for (Element x : members_) {
    if (!mask_[static_cast<std::size_t>(parent_.inv(x))]) throw InputError("subgroup: not closed under inverses");
    for (Element y : members_)
      if (!mask_[static_cast<std::size_t>(parent_.mul(x, y))])
        throw InputError("subgroup: " + str() + " not closed under products");
  }
}

Subgroup Subgroup::whole(const Group& g) {
  std::vector<Element> all(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) all[i] = static_cast<Element>(i);
  return Subgroup(g, std::move(all));
}

Subgroup Subgroup::generated_by(const Group& g, const std::vector<Element>& generators) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Element> members{0};
  seen[0] = true;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Element s : generators) {
      Element y = g.mul(members[i], s);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        members.push_back(y);
      }
    }
  return Subgroup(g, std::move(members));
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::all_of(members_.begin(), members_.end(), [&](Element x) { return other.contains(x); });
}

Subgroup Subgroup::conjugate_by(Element a) const {
  std::vector<Element> out;
  out.reserve(members_.size());
  for (Element h : members_) out.push_back(parent_.conjugate(h, a));
  return Subgroup(parent_, std::move(out));
}

std::vector<Element> Subgroup::generators() const {
  std::vector<Element> gens;
  Subgroup span = trivial(parent_);
  for (Element x : members_) {
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = generated_by(parent_, gens);
  }
  return gens;
}

std::string Subgroup::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) out += (i ? "," : "") + std::to_string(members_[i]);
  return out + "}";
}

bool Subgroup::operator<(const Subgroup& other) const {
  if (members_.size() != other.members_.size()) return members_.size() < other.members_.size();
  return members_ < other.members_;
}

std::vector<Subgroup> all_subgroups(const Group& g, std::size_t max_order) {
  if (g.order() > max_order)
    throw InputError("all_subgroups: group order " + std::to_string(g.order()) + " exceeds bound " +
                     std::to_string(max_order));
  std::set<std::vector<Element>> found;
  std::vector<std::vector<Element>> frontier;
  for (std::size_t x = 0; x < g.order(); ++x) {
    auto c = Subgroup::generated_by(g, {static_cast<Element>(x)}).members();
    if (found.insert(c).second) frontier.push_back(c);
  }
  std::vector<std::vector<Element>> cyclic(found.begin(), found.end());
  // Every subgroup is a join of cyclic ones, so joining with cyclics suffices.
  while (!frontier.empty()) {
    std::vector<std::vector<Element>> next;
    for (const auto& s : frontier)
      for (const auto& c : cyclic) {
        std::vector<Element> gens = s;
        gens.insert(gens.end(), c.begin(), c.end());
        auto j = Subgroup::generated_by(g, gens).members();
        if (found.insert(j).second) next.push_back(j);
      }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  for (const auto& m : found) out.emplace_back(g, m);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Element> conjugating_element(const Subgroup& h, const Subgroup& k) {
  if (!(h.parent() == k.parent())) throw InputError("conjugating_element: subgroups of different groups");
  if (h.size() > k.size()) return std::nullopt;
  const Group& g = h.parent();
  for (std::size_t a = 0; a < g.order(); ++a) {
    auto ae = static_cast<Element>(a);
    bool ok = std::all_of(h.members().begin(), h.members().end(),
                          [&](Element x) { return k.contains(g.conjugate(x, ae)); });
    if (ok) return ae;
  }
  return std::nullopt;
}

bool are_conjugate(const Subgroup& h, const Subgroup& k) {
  return h.size() == k.size() && conjugating_element(h, k).has_value();
}

FamilyMembership family_membership(const Subgroup& h, const std::vector<Subgroup>& family) {
  FamilyMembership out;
  for (const auto& k : family) {
    if (k == h) out.strict = true;
    if (are_conjugate(h, k)) out.up_to_conjugacy = true;
  }
  return out;
}

}  // namespace eqhom
