#include "eqhom/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eqhom {

namespace {

using Column = std::vector<Integer>;

Integer to_integer(const Rational& x) {
  if (x.get_den() != 1) throw InputError("integer algorithm given non-integral entry " + x.get_str());
  return x.get_num();
}

// col_k -= q * col_r, touching only rows >= from.
void axpy(Column& target, const Column& source, const Integer& q, std::size_t from) {
  for (std::size_t i = from; i < target.size(); ++i)
    if (source[i] != 0) target[i] -= q * source[i];
}

// Columns carry the matrix rows followed by the rows of the running
// unimodular transform, so every column operation updates both.
struct HermiteWork {
  std::size_t m = 0, n = 0;
  std::vector<Column> cols;
  std::vector<std::size_t> pivot_rows;

  explicit HermiteWork(const Matrix& a) : m(a.rows()), n(a.cols()), cols(a.cols()) {
    for (std::size_t j = 0; j < n; ++j) {
      cols[j].assign(m + n, 0);
      for (std::size_t i = 0; i < m; ++i) cols[j][i] = to_integer(a(i, j));
      cols[j][m + j] = 1;
    }
  }

  void run() {
    std::size_t r = 0;
    for (std::size_t i = 0; i < m && r < n; ++i) {
      for (;;) {
        // Smallest nonzero |entry| in row i among active columns; ties by position.
        std::size_t best = n;
        for (std::size_t k = r; k < n; ++k) {
          if (cols[k][i] == 0) continue;
          if (best == n || abs(cols[k][i]) < abs(cols[best][i])) best = k;
        }
        if (best == n) break;
        std::swap(cols[r], cols[best]);
        bool done = true;
        for (std::size_t k = r + 1; k < n; ++k) {
          if (cols[k][i] == 0) continue;
          Integer q;
          mpz_fdiv_q(q.get_mpz_t(), cols[k][i].get_mpz_t(), cols[r][i].get_mpz_t());
          axpy(cols[k], cols[r], q, i);
          if (cols[k][i] != 0) done = false;
        }
        if (done) {
          if (cols[r][i] < 0)
            for (std::size_t t = i; t < m + n; ++t) cols[r][t] = -cols[r][t];
          for (std::size_t j = 0; j < r; ++j) {
            if (cols[j][i] == 0) continue;
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), cols[j][i].get_mpz_t(), cols[r][i].get_mpz_t());
            if (q != 0) axpy(cols[j], cols[r], q, i);
          }
          pivot_rows.push_back(i);
          ++r;
          break;
        }
      }
    }
  }
};

// Reduced row echelon form over a field; returns pivot columns.
std::vector<std::size_t> rref(const Ring& ring, Matrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t j = 0; j < a.cols() && r < a.rows(); ++j) {
    std::size_t p = r;
    while (p < a.rows() && a(p, j) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t t = 0; t < a.cols(); ++t) std::swap(a(p, t), a(r, t));
    Rational inv = ring.inverse(a(r, j));
    for (std::size_t t = j; t < a.cols(); ++t) a(r, t) = ring.mul(a(r, t), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, j) == 0) continue;
      Rational f = a(i, j);
      for (std::size_t t = j; t < a.cols(); ++t)
        if (a(r, t) != 0) a(i, t) = ring.sub(a(i, t), ring.mul(f, a(r, t)));
    }
    pivots.push_back(j);
    ++r;
  }
  return pivots;
}

}  // namespace

HermiteForm column_hermite_form(const Matrix& a) {
  HermiteWork work(a);
  work.run();
  HermiteForm out{Matrix(a.rows(), a.cols()), Matrix(a.cols(), a.cols()), work.pivot_rows};
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) out.hermite(i, j) = Rational(work.cols[j][i]);
    for (std::size_t i = 0; i < a.cols(); ++i) out.transform(i, j) = Rational(work.cols[j][a.rows() + i]);
  }
  return out;
}

std::vector<Integer> smith_diagonal(const Matrix& a) {
  std::size_t m = a.rows(), n = a.cols();
  std::vector<std::vector<Integer>> w(m, std::vector<Integer>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) w[i][j] = to_integer(a(i, j));

  std::vector<Integer> diag;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // Pivot: smallest nonzero absolute value in the trailing block, first by position.
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (w[i][j] != 0 && (pi == m || abs(w[i][j]) < abs(w[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == m) goto finished;
      std::swap(w[t], w[pi]);
      for (std::size_t i = 0; i < m; ++i) std::swap(w[i][t], w[i][pj]);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (w[i][t] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), w[i][t].get_mpz_t(), w[t][t].get_mpz_t());
        for (std::size_t j = t; j < n; ++j)
          if (w[t][j] != 0) w[i][j] -= q * w[t][j];
        if (w[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (w[t][j] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), w[t][j].get_mpz_t(), w[t][t].get_mpz_t());
        for (std::size_t i = t; i < m; ++i)
          if (w[i][t] != 0) w[i][j] -= q * w[i][t];
        if (w[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
    diag.push_back(abs(w[t][t]));
  }
finished:
  // diag(a, b) ~ diag(gcd, lcm); repeat until each entry divides the next.
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      Integer g = gcd(diag[i], diag[j]);
      Integer l = lcm(diag[i], diag[j]);
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

std::size_t rank(const Ring& ring, const Matrix& a) {
  if (ring.is_field()) {
    Matrix w = canonical(ring, a);
    return rref(ring, w).size();
  }
  return smith_diagonal(a).size();
}

Matrix kernel(const Ring& ring, const Matrix& a) {
  if (!ring.is_field()) {
    HermiteForm h = column_hermite_form(a);
    return h.transform.block(0, h.rank(), a.cols(), a.cols() - h.rank());
  }
  Matrix w = canonical(ring, a);
  auto pivots = rref(ring, w);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix basis(a.cols(), a.cols() - pivots.size());
  std::size_t c = 0;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(free, c) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], c) = ring.canonical(-w(r, free));
    ++c;
  }
  return basis;
}

std::optional<Matrix> solve(const Ring& ring, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row counts differ");
  const std::size_t n = a.cols();
  Matrix x(n, b.cols());

  if (ring.is_field()) {
    Matrix w = canonical(ring, hstack(a, b));
    auto pivots = rref(ring, w);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (pivots[r] >= n) return std::nullopt;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) x(pivots[r], c) = w(r, n + c);
    return x;
  }

  HermiteForm h = column_hermite_form(a);
  const std::size_t r = h.rank();
  for (std::size_t c = 0; c < b.cols(); ++c) {
    std::vector<Integer> y(r);
    for (std::size_t t = 0; t < r; ++t) {
      std::size_t row = h.pivot_rows[t];
      Integer acc = to_integer(b(row, c));
      for (std::size_t j = 0; j < t; ++j) acc -= h.hermite(row, j).get_num() * y[j];
      const Integer& piv = h.hermite(row, t).get_num();
      if (!mpz_divisible_p(acc.get_mpz_t(), piv.get_mpz_t())) return std::nullopt;
      mpz_divexact(y[t].get_mpz_t(), acc.get_mpz_t(), piv.get_mpz_t());
    }
    // Rows without a pivot must be met by the partial solution as well.
    for (std::size_t i = 0; i < a.rows(); ++i) {
      Integer acc = 0;
      for (std::size_t t = 0; t < r; ++t)
        if (h.hermite(i, t) != 0) acc += h.hermite(i, t).get_num() * y[t];
      if (acc != to_integer(b(i, c))) return std::nullopt;
    }
    for (std::size_t i = 0; i < n; ++i) {
      Integer acc = 0;
      for (std::size_t t = 0; t < r; ++t)
        if (h.transform(i, t) != 0) acc += h.transform(i, t).get_num() * y[t];
      x(i, c) = Rational(acc);
    }
  }
  return x;
}

bool is_invertible(const Ring& ring, const Matrix& a) {
  if (!a.is_square()) return false;
  if (a.rows() == 0) return true;
  if (ring.is_field()) return rank(ring, a) == a.rows();
  auto d = smith_diagonal(a);
  return d.size() == a.rows() && d.back() == 1;
}

}  // namespace eqhom
