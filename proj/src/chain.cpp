#include "eqhom/chain.hpp"

#include <algorithm>
#include <sstream>

#include "eqhom/errors.hpp"

namespace eqhom {

namespace {

std::string deg(int n) { return "degree " + std::to_string(n); }

void check_shape(const Matrix& m, std::size_t rows, std::size_t cols, const std::string& what) {
  if (m.rows() != rows || m.cols() != cols)
    throw InputError(what + ": expected " + std::to_string(rows) + "x" + std::to_string(cols) + ", got " +
                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

int common_length(const ChainComplex& a, const ChainComplex& b) { return std::max(a.top(), b.top()) + 1; }

bool is_permutation_matrix(const Matrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    int ones = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (m(i, j) == 1) ++ones;
      else if (m(i, j) != 0) return false;
    }
    if (ones != 1) return false;
  }
  return true;
}

}  // namespace

ChainComplex::ChainComplex(Ring ring, std::vector<std::size_t> ranks, std::vector<Matrix> differentials)
    : ring_(std::move(ring)), ranks_(std::move(ranks)), d_(std::move(differentials)) {
  const std::size_t expected = ranks_.empty() ? 0 : ranks_.size() - 1;
  if (d_.size() != expected)
    throw InputError("chain complex: need " + std::to_string(expected) + " differentials, got " + std::to_string(d_.size()));
  for (std::size_t n = 1; n < ranks_.size(); ++n) {
    check_shape(d_[n - 1], ranks_[n - 1], ranks_[n], "chain complex: d_" + std::to_string(n));
    d_[n - 1] = canonical(ring_, d_[n - 1]);
  }
  for (std::size_t n = 2; n < ranks_.size(); ++n)
    if (!mul(ring_, d_[n - 2], d_[n - 1]).is_zero())
      throw InputError("chain complex: d_" + std::to_string(n - 1) + " d_" + std::to_string(n) + " != 0");
}

ChainComplex ChainComplex::zero(const Ring& ring) { return ChainComplex(ring, {}, {}); }

ChainComplex ChainComplex::concentrated(const Ring& ring, int n) {
  if (n < 0) throw InputError("concentrated: negative degree");
  std::vector<std::size_t> ranks(static_cast<std::size_t>(n + 1), 0);
  ranks.back() = 1;
  std::vector<Matrix> d;
  for (int k = 1; k <= n; ++k) d.emplace_back(ranks[static_cast<std::size_t>(k - 1)], ranks[static_cast<std::size_t>(k)]);
  return ChainComplex(ring, std::move(ranks), std::move(d));
}

ChainComplex ChainComplex::disk(const Ring& ring, int n) {
  if (n < 1) throw InputError("disk: degree must be at least 1");
  std::vector<std::size_t> ranks(static_cast<std::size_t>(n + 1), 0);
  ranks[static_cast<std::size_t>(n)] = ranks[static_cast<std::size_t>(n - 1)] = 1;
  std::vector<Matrix> d;
  for (int k = 1; k <= n; ++k) d.emplace_back(ranks[static_cast<std::size_t>(k - 1)], ranks[static_cast<std::size_t>(k)]);
  d.back() = Matrix::identity(1);
  return ChainComplex(ring, std::move(ranks), std::move(d));
}

std::size_t ChainComplex::rank(int n) const {
  if (n < 0 || n > top()) return 0;
  return ranks_[static_cast<std::size_t>(n)];
}

Matrix ChainComplex::d(int n) const {
  if (n >= 1 && n <= top()) return d_[static_cast<std::size_t>(n - 1)];
  return Matrix(rank(n - 1), rank(n));
}

bool ChainComplex::is_zero() const {
  return std::all_of(ranks_.begin(), ranks_.end(), [](std::size_t r) { return r == 0; });
}

// ---------------------------------------------------------------------------

EqChainComplex::EqChainComplex(Group group, ChainComplex complex, std::vector<std::vector<Matrix>> rep)
    : group_(std::move(group)), complex_(std::move(complex)), rep_(std::move(rep)) {
  const Ring& r = complex_.ring();
  if (rep_.size() != group_.order()) throw InputError("representation: need one entry per group element");
  const auto levels = static_cast<std::size_t>(complex_.top() + 1);
  for (std::size_t g = 0; g < rep_.size(); ++g) {
    if (rep_[g].size() != levels)
      throw InputError("representation: element " + std::to_string(g) + " needs " + std::to_string(levels) + " matrices");
    for (std::size_t n = 0; n < levels; ++n) {
      auto rk = complex_.rank(static_cast<int>(n));
      check_shape(rep_[g][n], rk, rk, "representation of " + std::to_string(g) + " in " + deg(static_cast<int>(n)));
      rep_[g][n] = canonical(r, rep_[g][n]);
    }
  }
  for (std::size_t n = 0; n < levels; ++n) {
    if (rep_.empty()) break;
    if (rep_[0][n] != Matrix::identity(complex_.rank(static_cast<int>(n))))
      throw InputError("representation: identity acts nontrivially in " + deg(static_cast<int>(n)));
    for (std::size_t g = 0; g < rep_.size(); ++g)
      for (std::size_t h = 0; h < rep_.size(); ++h) {
        auto gh = static_cast<std::size_t>(group_.mul(static_cast<Element>(g), static_cast<Element>(h)));
        if (mul(r, rep_[g][n], rep_[h][n]) != rep_[gh][n])
          throw InputError("representation: not a homomorphism at (" + std::to_string(g) + "," + std::to_string(h) +
                           ") in " + deg(static_cast<int>(n)));
      }
  }
  for (std::size_t g = 0; g < rep_.size(); ++g)
    for (int n = 1; n <= complex_.top(); ++n) {
      auto ge = static_cast<Element>(g);
      if (mul(r, complex_.d(n), rho(ge, n)) != mul(r, rho(ge, n - 1), complex_.d(n)))
        throw InputError("representation: element " + std::to_string(g) + " does not commute with d_" + std::to_string(n));
    }
}

EqChainComplex EqChainComplex::trivial(const Group& group, ChainComplex complex) {
  std::vector<Matrix> ids;
  for (int n = 0; n <= complex.top(); ++n) ids.push_back(Matrix::identity(complex.rank(n)));
  return EqChainComplex(group, std::move(complex), std::vector<std::vector<Matrix>>(group.order(), ids));
}

Matrix EqChainComplex::rho(Element g, int n) const {
  if (n < 0 || n > complex_.top()) return Matrix::identity(complex_.rank(n));
  return rep_[static_cast<std::size_t>(g)][static_cast<std::size_t>(n)];
}

bool EqChainComplex::is_permutation_representation() const {
  for (const auto& per_g : rep_)
    for (const auto& m : per_g)
      if (!is_permutation_matrix(m)) return false;
  return true;
}

// ---------------------------------------------------------------------------

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::vector<Matrix> components)
    : source_(std::move(source)), target_(std::move(target)), f_(std::move(components)) {
  if (!(source_.ring() == target_.ring())) throw InputError("chain map: rings differ");
  const int len = common_length(source_, target_);
  if (static_cast<int>(f_.size()) != len)
    throw InputError("chain map: need " + std::to_string(len) + " components, got " + std::to_string(f_.size()));
  const Ring& r = source_.ring();
  for (int n = 0; n < len; ++n) {
    auto& m = f_[static_cast<std::size_t>(n)];
    check_shape(m, target_.rank(n), source_.rank(n), "chain map in " + deg(n));
    m = canonical(r, m);
  }
  for (int n = 1; n < len; ++n)
    if (mul(r, target_.d(n), at(n)) != mul(r, at(n - 1), source_.d(n)))
      throw InputError("chain map: does not commute with d_" + std::to_string(n));
}

ChainMap ChainMap::identity(const ChainComplex& c) {
  std::vector<Matrix> f;
  for (int n = 0; n <= c.top(); ++n) f.push_back(Matrix::identity(c.rank(n)));
  return ChainMap(c, c, std::move(f));
}

ChainMap ChainMap::zero(const ChainComplex& source, const ChainComplex& target) {
  std::vector<Matrix> f;
  for (int n = 0; n < common_length(source, target); ++n) f.emplace_back(target.rank(n), source.rank(n));
  return ChainMap(source, target, std::move(f));
}

Matrix ChainMap::at(int n) const {
  if (n >= 0 && n < length()) return f_[static_cast<std::size_t>(n)];
  return Matrix(target_.rank(n), source_.rank(n));
}

ChainMap compose(const ChainMap& second, const ChainMap& first) {
  if (!(first.target() == second.source())) throw InputError("compose: chain maps are not composable");
  const Ring& r = first.source().ring();
  std::vector<Matrix> f;
  for (int n = 0; n < common_length(first.source(), second.target()); ++n) f.push_back(mul(r, second.at(n), first.at(n)));
  return ChainMap(first.source(), second.target(), std::move(f));
}

ChainMap subtract(const ChainMap& a, const ChainMap& b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target())) throw InputError("subtract: chain maps differ in shape");
  std::vector<Matrix> f;
  for (int n = 0; n < a.length(); ++n) f.push_back(sub(a.source().ring(), a.at(n), b.at(n)));
  return ChainMap(a.source(), a.target(), std::move(f));
}

bool is_equivariant(const ChainMap& f, const EqChainComplex& source, const EqChainComplex& target) {
  if (!(source.complex() == f.source()) || !(target.complex() == f.target()) || !(source.group() == target.group()))
    throw InputError("is_equivariant: representations do not match the map");
  const Ring& r = f.source().ring();
  for (std::size_t g = 0; g < source.group().order(); ++g)
    for (int n = 0; n < f.length(); ++n) {
      auto ge = static_cast<Element>(g);
      if (mul(r, target.rho(ge, n), f.at(n)) != mul(r, f.at(n), source.rho(ge, n))) return false;
    }
  return true;
}

Matrix ChainHomotopy::at(int n) const {
  if (n >= 0 && n < static_cast<int>(components.size())) return components[static_cast<std::size_t>(n)];
  return Matrix(target.rank(n + 1), source.rank(n));
}

ChainHomotopy ChainHomotopy::zero(const ChainComplex& source, const ChainComplex& target) {
  ChainHomotopy h{source, target, {}};
  for (int n = 0; n < common_length(source, target); ++n) h.components.emplace_back(target.rank(n + 1), source.rank(n));
  return h;
}

std::vector<Matrix> homotopy_boundary(const ChainHomotopy& h) {
  const Ring& r = h.source.ring();
  std::vector<Matrix> out;
  for (int n = 0; n < common_length(h.source, h.target); ++n) {
    check_shape(h.at(n), h.target.rank(n + 1), h.source.rank(n), "homotopy in " + deg(n));
    out.push_back(add(r, mul(r, h.target.d(n + 1), h.at(n)), mul(r, h.at(n - 1), h.source.d(n))));
  }
  return out;
}

bool is_homotopy(const ChainHomotopy& h, const ChainMap& f, const ChainMap& g) {
  if (!(f.source() == h.source) || !(f.target() == h.target) || !(g.source() == h.source) || !(g.target() == h.target))
    throw InputError("is_homotopy: shapes differ");
  auto b = homotopy_boundary(h);
  const Ring& r = h.source.ring();
  for (int n = 0; n < static_cast<int>(b.size()); ++n)
    if (b[static_cast<std::size_t>(n)] != sub(r, g.at(n), f.at(n))) return false;
  return true;
}

bool is_equivariant(const ChainHomotopy& h, const EqChainComplex& source, const EqChainComplex& target) {
  if (!(source.complex() == h.source) || !(target.complex() == h.target)) throw InputError("is_equivariant: shapes differ");
  const Ring& r = h.source.ring();
  for (std::size_t g = 0; g < source.group().order(); ++g)
    for (int n = 0; n < common_length(h.source, h.target); ++n) {
      auto ge = static_cast<Element>(g);
      if (mul(r, target.rho(ge, n + 1), h.at(n)) != mul(r, h.at(n), source.rho(ge, n))) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------

std::string HomologyGroup::str(const Ring& ring) const {
  std::vector<std::string> parts;
  const std::string label =
      ring.kind() == Ring::Kind::PrimeField ? "F" + std::to_string(ring.characteristic()) : ring.name();
  if (free_rank > 0) parts.push_back(label + (free_rank > 1 ? "^" + std::to_string(free_rank) : ""));
  for (const auto& t : torsion) parts.push_back("Z/" + t.get_str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

std::vector<HomologyGroup> homology(const ChainComplex& c) {
  const Ring& r = c.ring();
  std::vector<HomologyGroup> out;
  std::vector<std::size_t> ranks(static_cast<std::size_t>(c.top() + 2), 0);
  std::vector<std::vector<Integer>> diag(static_cast<std::size_t>(c.top() + 2));
  for (int n = 1; n <= c.top(); ++n) {
    if (r.is_field()) {
      ranks[static_cast<std::size_t>(n)] = rank(r, c.d(n));
    } else {
      diag[static_cast<std::size_t>(n)] = smith_diagonal(c.d(n));
      ranks[static_cast<std::size_t>(n)] = diag[static_cast<std::size_t>(n)].size();
    }
  }
  for (int n = 0; n <= c.top(); ++n) {
    HomologyGroup h;
    h.degree = n;
    h.free_rank = c.rank(n) - ranks[static_cast<std::size_t>(n)] - ranks[static_cast<std::size_t>(n + 1)];
    for (const auto& e : diag[static_cast<std::size_t>(n + 1)])
      if (e > 1) h.torsion.push_back(e);
    out.push_back(std::move(h));
  }
  return out;
}

std::string homology_text(const ChainComplex& c, const std::vector<HomologyGroup>& h) {
  std::ostringstream out;
  for (const auto& g : h) out << "H_" << g.degree << " = " << g.str(c.ring()) << "\n";
  return out.str();
}

bool is_acyclic(const ChainComplex& c) {
  auto h = homology(c);
  return std::all_of(h.begin(), h.end(), [](const HomologyGroup& g) { return g.is_zero(); });
}

ChainComplex mapping_cone(const ChainMap& f) {
  const ChainComplex& c = f.source();
  const ChainComplex& d = f.target();
  const Ring& r = c.ring();
  const int top = std::max(c.top() + 1, d.top());
  std::vector<std::size_t> ranks;
  for (int n = 0; n <= top; ++n) ranks.push_back(c.rank(n - 1) + d.rank(n));
  std::vector<Matrix> diffs;
  for (int n = 1; n <= top; ++n) {
    Matrix m(ranks[static_cast<std::size_t>(n - 1)], ranks[static_cast<std::size_t>(n)]);
    m.set_block(0, 0, scale(r, -1, c.d(n - 1)));
    m.set_block(c.rank(n - 2), 0, f.at(n - 1));
    m.set_block(c.rank(n - 2), c.rank(n - 1), d.d(n));
    diffs.push_back(std::move(m));
  }
  return ChainComplex(r, std::move(ranks), std::move(diffs));
}

bool is_quasi_iso(const ChainMap& f) { return is_acyclic(mapping_cone(f)); }

// ---------------------------------------------------------------------------

std::size_t local_index(const GSSet& x, SimplexId id) {
  const int d = x.dim(id);
  std::size_t first = static_cast<std::size_t>(id);
  while (first > 0 && x.dim(static_cast<SimplexId>(first - 1)) == d) --first;
  return static_cast<std::size_t>(id) - first;
}

namespace {

std::vector<std::size_t> local_indices(const GSSet& x) {
  std::vector<std::size_t> out(x.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0 && x.dim(static_cast<SimplexId>(i)) != x.dim(static_cast<SimplexId>(i - 1))) k = 0;
    out[i] = k++;
  }
  return out;
}

}  // namespace

EqChainComplex normalized_chains(const GSSet& x, const Ring& ring) {
  const int top = x.top_dim();
  const auto local = local_indices(x);
  std::vector<std::size_t> ranks;
  for (int n = 0; n <= top; ++n) ranks.push_back(x.count(n));
  std::vector<Matrix> diffs;
  for (int n = 1; n <= top; ++n) {
    Matrix m(ranks[static_cast<std::size_t>(n - 1)], ranks[static_cast<std::size_t>(n)]);
    for (SimplexId s : x.simplices(n)) {
      const auto& fs = x.faces(s);
      for (std::size_t i = 0; i < fs.size(); ++i) {
        if (fs[i].is_degenerate()) continue;
        auto& e = m(local[static_cast<std::size_t>(fs[i].base)], local[static_cast<std::size_t>(s)]);
        e += (i % 2 == 0) ? 1 : -1;
      }
    }
    diffs.push_back(std::move(m));
  }
  ChainComplex c(ring, std::move(ranks), std::move(diffs));
  std::vector<std::vector<Matrix>> rep(x.group().order());
  for (std::size_t g = 0; g < rep.size(); ++g)
    for (int n = 0; n <= top; ++n) {
      std::vector<int> perm;
      for (SimplexId s : x.simplices(n))
        perm.push_back(static_cast<int>(local[static_cast<std::size_t>(x.act(static_cast<Element>(g), s))]));
      rep[g].push_back(permutation_matrix(perm));
    }
  return EqChainComplex(x.group(), std::move(c), std::move(rep));
}

ChainMap induced_map(const SMap& f, const Ring& ring) {
  ChainComplex src = normalized_chains(f.source(), ring).complex();
  ChainComplex tgt = normalized_chains(f.target(), ring).complex();
  const auto ls = local_indices(f.source());
  const auto lt = local_indices(f.target());
  std::vector<Matrix> comps;
  for (int n = 0; n < common_length(src, tgt); ++n) comps.emplace_back(tgt.rank(n), src.rank(n));
  for (std::size_t s = 0; s < f.source().size(); ++s) {
    const auto& v = f.values()[s];
    if (v.is_degenerate()) continue;
    auto n = static_cast<std::size_t>(f.source().dim(static_cast<SimplexId>(s)));
    comps[n](lt[static_cast<std::size_t>(v.base)], ls[s]) = 1;
  }
  return ChainMap(std::move(src), std::move(tgt), std::move(comps));
}

// ---------------------------------------------------------------------------

Invariants invariants(const EqChainComplex& c, const Subgroup& h) {
  if (!(h.parent() == c.group())) throw InputError("invariants: subgroup of a different group");
  const Ring& r = c.ring();
  const ChainComplex& cx = c.complex();
  bool permutation = true;
  for (Element g : h.members())
    for (int n = 0; n <= cx.top(); ++n)
      if (!is_permutation_matrix(c.rho(g, n))) permutation = false;

  std::vector<Matrix> basis;
  for (int n = 0; n <= cx.top(); ++n) {
    const std::size_t rk = cx.rank(n);
    if (permutation) {
      std::vector<int> orbit(rk, -1);
      std::vector<std::vector<std::size_t>> orbits;
      for (std::size_t i = 0; i < rk; ++i) {
        if (orbit[i] >= 0) continue;
        orbits.emplace_back();
        for (Element g : h.members()) {
          Matrix m = c.rho(g, n);
          std::size_t j = 0;
          while (m(j, i) == 0) ++j;
          if (orbit[j] < 0) {
            orbit[j] = static_cast<int>(orbits.size() - 1);
            orbits.back().push_back(j);
          }
        }
      }
      Matrix b(rk, orbits.size());
      for (std::size_t o = 0; o < orbits.size(); ++o)
        for (std::size_t i : orbits[o]) b(i, o) = 1;
      basis.push_back(std::move(b));
    } else {
      Matrix stacked(0, rk);
      for (Element g : h.generators()) stacked = vstack(stacked, sub(r, c.rho(g, n), Matrix::identity(rk)));
      basis.push_back(kernel(r, stacked));
    }
  }
  std::vector<std::size_t> ranks;
  for (const auto& b : basis) ranks.push_back(b.cols());
  std::vector<Matrix> diffs;
  for (int n = 1; n <= cx.top(); ++n) {
    auto x = solve(r, basis[static_cast<std::size_t>(n - 1)], mul(r, cx.d(n), basis[static_cast<std::size_t>(n)]));
    if (!x) throw VerificationError("invariants: differential does not preserve invariants in " + deg(n));
    diffs.push_back(*x);
  }
  ChainComplex inv(r, std::move(ranks), std::move(diffs));
  ChainMap incl(inv, cx, std::move(basis));
  return Invariants{std::move(inv), std::move(incl), permutation};
}

ChainMap invariants_map(const ChainMap& f, const Invariants& source, const Invariants& target) {
  const Ring& r = f.source().ring();
  std::vector<Matrix> comps;
  for (int n = 0; n < common_length(source.complex, target.complex); ++n) {
    auto x = solve(r, target.inclusion.at(n), mul(r, f.at(n), source.inclusion.at(n)));
    if (!x) throw VerificationError("invariants_map: map does not preserve invariants in " + deg(n));
    comps.push_back(*x);
  }
  return ChainMap(source.complex, target.complex, std::move(comps));
}

ChainHomotopy prism_homotopy(const ChainMap& hc, const GSSet& x, const std::optional<EqChainComplex>& target_rep) {
  const Ring& r = hc.source().ring();
  Prism p = prism(x);
  EqChainComplex cp = normalized_chains(p.product, r);
  if (!(cp.complex() == hc.source())) throw InputError("prism_homotopy: map does not start at the prism chains");
  EqChainComplex cx = normalized_chains(x, r);
  const auto local_x = local_indices(x);
  const auto local_p = local_indices(p.product);

  ChainHomotopy phi = ChainHomotopy::zero(cx.complex(), hc.target());
  for (std::size_t s = 0; s < x.size(); ++s) {
    const int n = x.dim(static_cast<SimplexId>(s));
    if (n >= static_cast<int>(phi.components.size())) continue;
    Matrix hcn = hc.at(n + 1);
    auto& out = phi.components[static_cast<std::size_t>(n)];
    for (int j = 0; j <= n; ++j) {
      // (-1)^n from the homotopy times (-1)^(n-j) from the shuffle.
      const int sign = (j % 2 == 0) ? 1 : -1;
      auto cell = local_p[static_cast<std::size_t>(p.shuffle_cell(static_cast<SimplexId>(s), j))];
      for (std::size_t i = 0; i < hcn.rows(); ++i)
        out(i, local_x[s]) = r.add(out(i, local_x[s]), r.mul(sign, hcn(i, cell)));
    }
  }
  ChainMap f0 = compose(hc, induced_map(p.end0, r));
  ChainMap f1 = compose(hc, induced_map(p.end1, r));
  if (!is_homotopy(phi, f0, f1))
    throw VerificationError("prism_homotopy: d phi + phi d differs from the end difference");
  if (target_rep) {
    if (!is_equivariant(hc, cp, *target_rep)) throw InputError("prism_homotopy: map is not equivariant");
    if (!is_equivariant(phi, cx, *target_rep)) throw VerificationError("prism_homotopy: phi is not equivariant");
  }
  return phi;
}

}  // namespace eqhom
