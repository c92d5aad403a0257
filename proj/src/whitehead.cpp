#include "eqhom/whitehead.hpp"

#include <algorithm>
#include <map>

#include "eqhom/errors.hpp"

namespace eqhom {

namespace {

// Image of basis vector j under a permutation matrix.
std::vector<int> permutation_of(const Matrix& m) {
  std::vector<int> p(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (m(i, j) == 1) p[j] = static_cast<int>(i);
  return p;
}

// Orbit indicators of the diagonal action on (row, column) pairs.
std::vector<Matrix> orbit_basis(const EqChainComplex& a, int n, const EqChainComplex& b, int m) {
  const std::size_t rows = b.complex().rank(m), cols = a.complex().rank(n);
  const Group& g = a.group();
  std::vector<std::vector<int>> pa, pb;
  for (std::size_t e = 0; e < g.order(); ++e) {
    pa.push_back(permutation_of(a.rho(static_cast<Element>(e), n)));
    pb.push_back(permutation_of(b.rho(static_cast<Element>(e), m)));
  }
  std::vector<int> orbit(rows * cols, -1);
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      if (orbit[i * cols + j] >= 0) continue;
      Matrix x(rows, cols);
      for (std::size_t e = 0; e < g.order(); ++e) {
        auto r = static_cast<std::size_t>(pb[e][i]), c = static_cast<std::size_t>(pa[e][j]);
        orbit[r * cols + c] = static_cast<int>(out.size());
        x(r, c) = 1;
      }
      out.push_back(std::move(x));
    }
  return out;
}

// Kernel of X |-> rho_B(x) X - X rho_A(x) over generators x.
std::vector<Matrix> kernel_basis(const EqChainComplex& a, int n, const EqChainComplex& b, int m) {
  const std::size_t rows = b.complex().rank(m), cols = a.complex().rank(n);
  const Ring& ring = a.ring();
  auto gens = Subgroup::whole(a.group()).generators();
  Matrix system(gens.size() * rows * cols, rows * cols);
  std::size_t base = 0;
  for (Element x : gens) {
    Matrix ra = a.rho(x, n), rb = b.rho(x, m);
    // Row (r, c), unknown (i, j): rho_B(r, i) [j = c] - [i = r] rho_A(j, c).
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        for (std::size_t i = 0; i < rows; ++i) system(base + r * cols + c, i * cols + c) += rb(r, i);
        for (std::size_t j = 0; j < cols; ++j) system(base + r * cols + c, r * cols + j) -= ra(j, c);
      }
    base += rows * cols;
  }
  Matrix k = kernel(ring, canonical(ring, system));
  std::vector<Matrix> out;
  for (std::size_t col = 0; col < k.cols(); ++col) {
    Matrix x(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) x(i, j) = k(i * cols + j, col);
    out.push_back(std::move(x));
  }
  return out;
}

struct Block {
  std::vector<Matrix> basis;
  std::size_t offset = 0;
  std::size_t rows = 0, cols = 0;
};

// One matrix equation sum_k L_k X_k R_k = rhs.
struct Term {
  const Block* block;
  Matrix left;
  Matrix right;
  int sign;
};
struct Equation {
  std::vector<Term> terms;
  Matrix rhs;
};

Matrix assemble(const Ring& ring, const Block& b, const std::vector<Rational>& coeffs) {
  Matrix x(b.rows, b.cols);
  for (std::size_t i = 0; i < b.basis.size(); ++i)
    if (coeffs[b.offset + i] != 0) x = add(ring, x, scale(ring, coeffs[b.offset + i], b.basis[i]));
  return x;
}

}  // namespace

std::vector<Matrix> equivariant_hom_basis(const EqChainComplex& a, int n, const EqChainComplex& b, int m) {
  if (!(a.group() == b.group())) throw InputError("equivariant maps: different groups");
  if (a.complex().rank(n) == 0 || b.complex().rank(m) == 0) return {};
  if (a.is_permutation_representation() && b.is_permutation_representation()) return orbit_basis(a, n, b, m);
  return kernel_basis(a, n, b, m);
}

std::optional<Certificate> certificate_search(const ChainMap& f, const EqChainComplex& c, const EqChainComplex& d,
                                              std::size_t max_unknowns) {
  if (!is_equivariant(f, c, d)) throw InputError("certificate search: the map is not equivariant");
  const Ring& ring = f.source().ring();
  const ChainComplex& cc = c.complex();
  const ChainComplex& dd = d.complex();
  const int top = std::max(cc.top(), dd.top());

  // g_n : D_n -> C_n, s_n : D_n -> D_{n+1}, t_n : C_n -> C_{n+1}.
  std::vector<Block> g(static_cast<std::size_t>(top + 2)), s(g.size()), t(g.size());
  std::size_t unknowns = 0;
  auto place = [&](Block& b, const EqChainComplex& from, int n, const EqChainComplex& to, int m) {
    b.rows = to.complex().rank(m);
    b.cols = from.complex().rank(n);
    b.basis = equivariant_hom_basis(from, n, to, m);
    b.offset = unknowns;
    unknowns += b.basis.size();
    if (unknowns > max_unknowns)
      throw InputError("certificate search: more than " + std::to_string(max_unknowns) + " unknowns");
  };
  for (int n = 0; n <= top; ++n) {
    auto k = static_cast<std::size_t>(n);
    place(g[k], d, n, c, n);
    place(s[k], d, n, d, n + 1);
    place(t[k], c, n, c, n + 1);
  }
  // Degree -1 blocks stay empty with the right shapes.
  Block s_low, t_low;
  s_low.rows = dd.rank(0);
  t_low.rows = cc.rank(0);
  auto below = [&](std::vector<Block>& v, int n, Block& low) -> const Block& {
    return n >= 1 ? v[static_cast<std::size_t>(n - 1)] : low;
  };

  std::vector<Equation> eqs;
  for (int n = 0; n <= top; ++n) {
    auto k = static_cast<std::size_t>(n);
    const std::size_t dn = dd.rank(n), cn = cc.rank(n);
    if (n >= 1) {
      // d g_n - g_{n-1} d = 0
      eqs.push_back({{{&g[k], cc.d(n), Matrix::identity(dn), 1}, {&g[k - 1], Matrix::identity(cc.rank(n - 1)), dd.d(n), -1}},
                     Matrix(cc.rank(n - 1), dn)});
    }
    // f g_n - d s_n - s_{n-1} d = 1
    eqs.push_back({{{&g[k], f.at(n), Matrix::identity(dn), 1},
                    {&s[k], dd.d(n + 1), Matrix::identity(dn), -1},
                    {&below(s, n, s_low), Matrix::identity(dn), dd.d(n), -1}},
                   Matrix::identity(dn)});
    // g_n f - d t_n - t_{n-1} d = 1
    eqs.push_back({{{&g[k], Matrix::identity(cn), f.at(n), 1},
                    {&t[k], cc.d(n + 1), Matrix::identity(cn), -1},
                    {&below(t, n, t_low), Matrix::identity(cn), cc.d(n), -1}},
                   Matrix::identity(cn)});
  }

  std::size_t rows = 0;
  for (const auto& e : eqs) rows += e.rhs.rows() * e.rhs.cols();
  Matrix a(rows, unknowns), b(rows, 1);
  std::size_t row = 0;
  for (const auto& e : eqs) {
    const std::size_t w = e.rhs.cols();
    for (const auto& term : e.terms)
      for (std::size_t i = 0; i < term.block->basis.size(); ++i) {
        Matrix v = mul(ring, mul(ring, term.left, term.block->basis[i]), term.right);
        for (std::size_t p = 0; p < v.rows(); ++p)
          for (std::size_t q = 0; q < w; ++q) a(row + p * w + q, term.block->offset + i) += term.sign * v(p, q);
      }
    for (std::size_t p = 0; p < e.rhs.rows(); ++p)
      for (std::size_t q = 0; q < w; ++q) b(row + p * w + q, 0) = e.rhs(p, q);
    row += e.rhs.rows() * w;
  }

  auto x = solve(ring, canonical(ring, a), b);
  if (!x) return std::nullopt;
  std::vector<Rational> coeffs(unknowns);
  for (std::size_t i = 0; i < unknowns; ++i) coeffs[i] = (*x)(i, 0);

  std::vector<Matrix> gm;
  ChainHomotopy sh{dd, dd, {}}, th{cc, cc, {}};
  for (int n = 0; n <= top; ++n) {
    auto k = static_cast<std::size_t>(n);
    gm.push_back(assemble(ring, g[k], coeffs));
    if (n <= dd.top()) sh.components.push_back(assemble(ring, s[k], coeffs));
    if (n <= cc.top()) th.components.push_back(assemble(ring, t[k], coeffs));
  }
  Certificate cert{ChainMap(dd, cc, std::move(gm)), std::move(sh), std::move(th)};
  if (!verify_certificate(cert, f, c, d)) throw VerificationError("certificate search: solution fails verification");
  return cert;
}

bool verify_certificate(const Certificate& cert, const ChainMap& f, const EqChainComplex& c, const EqChainComplex& d) {
  try {
    const ChainComplex& cc = c.complex();
    const ChainComplex& dd = d.complex();
    if (!(f.source() == cc) || !(f.target() == dd)) return false;
    if (!(cert.g.source() == dd) || !(cert.g.target() == cc)) return false;
    if (!(cert.s.source == dd) || !(cert.s.target == dd) || !(cert.t.source == cc) || !(cert.t.target == cc)) return false;
    const Ring& r = cc.ring();
    for (int n = 1; n < cert.g.length(); ++n)
      if (mul(r, cc.d(n), cert.g.at(n)) != mul(r, cert.g.at(n - 1), dd.d(n))) return false;
    if (!is_homotopy(cert.s, ChainMap::identity(dd), compose(f, cert.g))) return false;
    if (!is_homotopy(cert.t, ChainMap::identity(cc), compose(cert.g, f))) return false;
    return is_equivariant(cert.g, d, c) && is_equivariant(cert.s, d, d) && is_equivariant(cert.t, c, c);
  } catch (const std::exception&) {
    return false;
  }
}

// ---------------------------------------------------------------------------

namespace {

bool all_hold(const std::vector<SubgroupCheck>& v) {
  return std::all_of(v.begin(), v.end(), [](const SubgroupCheck& s) { return s.quasi_iso; });
}

std::optional<Subgroup> first_failure(const std::vector<SubgroupCheck>& v) {
  for (const auto& s : v)
    if (!s.quasi_iso) return s.subgroup;
  return std::nullopt;
}

// f restricted to X^H -> Y^H.
SMap restrict_to_fixed(const SMap& f, const SubObject& fx, const SubObject& fy) {
  std::map<SimplexId, SimplexId> pre;
  for (std::size_t i = 0; i < fy.object.size(); ++i) pre[fy.inclusion(static_cast<SimplexId>(i)).base] = static_cast<SimplexId>(i);
  std::vector<SimplexRef> values;
  for (std::size_t i = 0; i < fx.object.size(); ++i) {
    SimplexRef image = f(fx.inclusion(static_cast<SimplexId>(i)));
    auto it = pre.find(image.base);
    if (it == pre.end()) throw VerificationError("fixed simplex mapped outside the fixed points");
    values.push_back({it->second, image.word});
  }
  return SMap(fx.object, fy.object, std::move(values));
}

}  // namespace

bool WhiteheadReport::hyp_a_holds() const { return all_hold(hyp_a); }
bool WhiteheadReport::hyp_b_holds() const { return all_hold(hyp_b); }
std::optional<Subgroup> WhiteheadReport::first_failure_a() const { return first_failure(hyp_a); }
std::optional<Subgroup> WhiteheadReport::first_failure_b() const { return first_failure(hyp_b); }

WhiteheadReport whitehead_verify(const SMap& f, const std::vector<Subgroup>& family, const Ring& ring,
                                 std::size_t max_unknowns) {
  const GSSet& x = f.source();
  const GSSet& y = f.target();
  for (const auto& h : family)
    if (!(h.parent() == x.group())) throw InputError("whitehead: family member over a different group");

  WhiteheadReport rep{ring, {}, {}, {}, false, std::nullopt};
  auto vx = check_F_cofibration(SMap::from_empty(x), family);
  auto vy = check_F_cofibration(SMap::from_empty(y), family);
  rep.isotropy.holds = vx.is_cofibration && vy.is_cofibration;
  rep.isotropy.strict_holds = rep.isotropy.holds && !vx.strict_reading_differs && !vy.strict_reading_differs;
  if (!vx.is_cofibration && vx.witness) {
    rep.isotropy.witness = "source simplex " + std::to_string(*vx.witness);
    rep.isotropy.witness_stabilizer = vx.witness_stabilizer;
  } else if (!vy.is_cofibration && vy.witness) {
    rep.isotropy.witness = "target simplex " + std::to_string(*vy.witness);
    rep.isotropy.witness_stabilizer = vy.witness_stabilizer;
  }

  EqChainComplex cx = normalized_chains(x, ring);
  EqChainComplex cy = normalized_chains(y, ring);
  ChainMap cf = induced_map(f, ring);
  for (const auto& h : family) {
    Invariants ix = invariants(cx, h), iy = invariants(cy, h);
    ChainMap m = invariants_map(cf, ix, iy);
    rep.hyp_a.push_back({h, is_quasi_iso(m), homology(ix.complex), homology(iy.complex)});

    SubObject fx = fixed_sset(x, h), fy = fixed_sset(y, h);
    ChainMap mb = induced_map(restrict_to_fixed(f, fx, fy), ring);
    rep.hyp_b.push_back({h, is_quasi_iso(mb), homology(mb.source()), homology(mb.target())});
  }
  if (rep.hyp_a_holds() || rep.hyp_b_holds()) {
    rep.searched = true;
    rep.certificate = certificate_search(cf, cx, cy, max_unknowns);
  }
  return rep;
}

}  // namespace eqhom
