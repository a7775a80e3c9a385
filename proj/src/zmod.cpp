#include "agrp/zmod.hpp"

#include <utility>

#include "agrp/common.hpp"

namespace agrp {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b, std::int64_t m) {
  require(a.cols == b.rows, "mat_mul: shape mismatch");
  IntMatrix r(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int l = 0; l < a.cols; ++l) {
      const std::int64_t x = a(i, l);
      if (x == 0) continue;
      for (int j = 0; j < b.cols; ++j) r(i, j) = (r(i, j) + x * b(l, j)) % m;
    }
  return r;
}

std::vector<std::int64_t> vec_mat_mul(const std::vector<std::int64_t>& x, const IntMatrix& a, std::int64_t m) {
  require(static_cast<int>(x.size()) == a.rows, "vec_mat_mul: shape mismatch");
  std::vector<std::int64_t> r(a.cols, 0);
  for (int i = 0; i < a.rows; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < a.cols; ++j) r[j] = (r[j] + x[i] * a(i, j)) % m;
  }
  return r;
}

std::int64_t PrimePowerRing::modulus() const {
  std::int64_t m = 1;
  for (int i = 0; i < k; ++i) m *= p;
  return m;
}

int PrimePowerRing::valuation(std::int64_t a) const {
  a = mod(a, modulus());
  if (a == 0) return k;
  int v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return v;
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols; ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < m.rows; ++i) std::swap(m(i, a), m(i, b));
}

// row a += f * row b
void add_row(IntMatrix& m, int a, int b, std::int64_t f, std::int64_t q) {
  for (int j = 0; j < m.cols; ++j) m(a, j) = mod(m(a, j) + f * m(b, j), q);
}

// col a += f * col b
void add_col(IntMatrix& m, int a, int b, std::int64_t f, std::int64_t q) {
  for (int i = 0; i < m.rows; ++i) m(i, a) = mod(m(i, a) + f * m(i, b), q);
}

void scale_row(IntMatrix& m, int a, std::int64_t f, std::int64_t q) {
  for (int j = 0; j < m.cols; ++j) m(a, j) = mod(m(a, j) * f, q);
}

void scale_col(IntMatrix& m, int a, std::int64_t f, std::int64_t q) {
  for (int i = 0; i < m.rows; ++i) m(i, a) = mod(m(i, a) * f, q);
}

}  // namespace

SmithForm smith_form(const IntMatrix& A, const PrimePowerRing& R) {
  const std::int64_t q = R.modulus();
  const int r = A.rows, c = A.cols, n = std::min(r, c);
  IntMatrix W = A;
  for (auto& x : W.data) x = mod(x, q);
  SmithForm S{IntMatrix::identity(r), IntMatrix::identity(c), IntMatrix::identity(r), IntMatrix::identity(c),
              std::vector<int>(n, R.k)};
  for (int t = 0; t < n; ++t) {
    int bi = -1, bj = -1, bv = R.k;
    for (int i = t; i < r; ++i)
      for (int j = t; j < c; ++j) {
        const int v = R.valuation(W(i, j));
        if (v < bv) {
          bv = v;
          bi = i;
          bj = j;
        }
      }
    if (bi < 0) break;
    swap_rows(W, t, bi);
    swap_rows(S.U, t, bi);
    swap_cols(S.Uinv, t, bi);
    swap_cols(W, t, bj);
    swap_cols(S.V, t, bj);
    swap_rows(S.Vinv, t, bj);
    std::int64_t pv = 1;
    for (int i = 0; i < bv; ++i) pv *= R.p;
    const std::int64_t unit = W(t, t) / pv;
    const std::int64_t uinv = inverse_mod(unit, q);
    scale_row(W, t, uinv, q);
    scale_row(S.U, t, uinv, q);
    scale_col(S.Uinv, t, unit, q);
    for (int i = 0; i < r; ++i) {
      if (i == t || W(i, t) == 0) continue;
      const std::int64_t f = W(i, t) / pv;
      add_row(W, i, t, -f, q);
      add_row(S.U, i, t, -f, q);
      add_col(S.Uinv, t, i, f, q);
    }
    for (int j = 0; j < c; ++j) {
      if (j == t || W(t, j) == 0) continue;
      const std::int64_t f = W(t, j) / pv;
      add_col(W, j, t, -f, q);
      add_col(S.V, j, t, -f, q);
      add_row(S.Vinv, t, j, f, q);
    }
    S.diag_valuation[t] = bv;
  }
  return S;
}

std::optional<SolutionSpace> solve_left(const IntMatrix& A, const std::vector<std::int64_t>& b,
                                        const PrimePowerRing& R) {
  require(static_cast<int>(b.size()) == A.cols, "solve_left: right-hand side has wrong length");
  const std::int64_t q = R.modulus();
  const int r = A.rows, c = A.cols, n = std::min(r, c);
  SmithForm S = smith_form(A, R);
  std::vector<std::int64_t> bb(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) bb[i] = mod(b[i], q);
  const auto cv = vec_mat_mul(bb, S.V, q);
  std::vector<std::int64_t> y(r, 0);
  for (int i = 0; i < n; ++i) {
    const int v = S.diag_valuation[i];
    if (R.valuation(cv[i]) < v) return std::nullopt;
    if (v < R.k) {
      std::int64_t pv = 1;
      for (int t = 0; t < v; ++t) pv *= R.p;
      y[i] = cv[i] / pv;
    }
  }
  for (int j = n; j < c; ++j)
    if (cv[j] != 0) return std::nullopt;
  SolutionSpace sol;
  sol.particular = vec_mat_mul(y, S.U, q);
  for (int i = 0; i < r; ++i) {
    const int v = i < n ? S.diag_valuation[i] : R.k;
    if (v == 0) continue;
    std::int64_t scale = 1;
    for (int t = 0; t < R.k - v; ++t) scale *= R.p;
    std::vector<std::int64_t> g(r);
    for (int j = 0; j < r; ++j) g[j] = S.U(i, j) * scale % q;
    std::int64_t order = 1;
    for (int t = 0; t < v; ++t) order *= R.p;
    sol.generators.push_back(std::move(g));
    sol.orders.push_back(order);
  }
  return sol;
}

RowBasis row_space_basis(const IntMatrix& G, const PrimePowerRing& R) {
  const std::int64_t q = R.modulus();
  SmithForm S = smith_form(G, R);
  RowBasis B;
  for (std::size_t i = 0; i < S.diag_valuation.size(); ++i) {
    const int v = S.diag_valuation[i];
    if (v == R.k) continue;
    std::int64_t pv = 1, order = 1;
    for (int t = 0; t < v; ++t) pv *= R.p;
    for (int t = 0; t < R.k - v; ++t) order *= R.p;
    std::vector<std::int64_t> row(G.cols);
    for (int j = 0; j < G.cols; ++j) row[j] = S.Vinv(static_cast<int>(i), j) * pv % q;
    B.vectors.push_back(std::move(row));
    B.orders.push_back(order);
  }
  return B;
}

std::int64_t det_mod_prime(IntMatrix a, std::int64_t p) {
  require(a.rows == a.cols, "det_mod_prime: matrix not square");
  const int n = a.rows;
  for (auto& x : a.data) x = mod(x, p);
  std::int64_t det = 1;
  for (int t = 0; t < n; ++t) {
    int piv = -1;
    for (int i = t; i < n; ++i)
      if (a(i, t) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != t) {
      swap_rows(a, t, piv);
      det = mod(-det, p);
    }
    det = det * a(t, t) % p;
    const std::int64_t inv = inverse_mod(a(t, t), p);
    for (int i = t + 1; i < n; ++i) {
      if (a(i, t) == 0) continue;
      add_row(a, i, t, mod(-a(i, t) * inv, p), p);
    }
  }
  return det;
}

std::optional<IntMatrix> mat_inverse(const IntMatrix& a, const PrimePowerRing& R) {
  require(a.rows == a.cols, "mat_inverse: matrix not square");
  const std::int64_t q = R.modulus();
  const int n = a.rows;
  IntMatrix w = a, inv = IntMatrix::identity(n);
  for (auto& x : w.data) x = mod(x, q);
  for (int t = 0; t < n; ++t) {
    int piv = -1;
    for (int i = t; i < n; ++i)
      if (w(i, t) % R.p != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return std::nullopt;
    swap_rows(w, t, piv);
    swap_rows(inv, t, piv);
    const std::int64_t u = inverse_mod(w(t, t), q);
    scale_row(w, t, u, q);
    scale_row(inv, t, u, q);
    for (int i = 0; i < n; ++i) {
      if (i == t || w(i, t) == 0) continue;
      const std::int64_t f = w(i, t);
      add_row(w, i, t, -f, q);
      add_row(inv, i, t, -f, q);
    }
  }
  return inv;
}

}  // namespace agrp
