// Enumeration oracles for modules over finite abelian groups. They only read
// matrix entries and never call the library's linear algebra.
#pragma once

#include <cstdint>
#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "agrp/abelian.hpp"
#include "agrp/permgroup.hpp"
#include "agrp/representation.hpp"

namespace agrp::brute {



using Vec = std::vector<std::int64_t>;

inline Vec row_times(const Vec& x, const HomMatrix& M) {
  const auto& n = M.shape.moduli;
  Vec r(n.size(), 0);
  for (std::size_t i = 0; i < n.size(); ++i)
    for (std::size_t j = 0; j < n.size(); ++j)
      r[j] = (r[j] + x[i] * M.m(static_cast<int>(i), static_cast<int>(j))) % n[j];
  return r;
}

inline std::vector<Vec> all_vectors(const ModuleShape& s) {
  std::vector<Vec> out{Vec(s.moduli.size(), 0)};
  for (std::size_t i = 0; i < s.moduli.size(); ++i) {
    std::vector<Vec> next;
    for (const auto& v : out)
      for (std::int64_t c = 0; c < s.moduli[i]; ++c) {
        auto w = v;
        w[i] = c;
        next.push_back(w);
      }
    out = std::move(next);
  }
  return out;
}

inline bool is_bijective_matrix(const HomMatrix& M) {
  std::set<Vec> img;
  for (const auto& v : all_vectors(M.shape)) img.insert(row_times(v, M));
  return img.size() == all_vectors(M.shape).size();
}

// Every endomorphism: entry (i, j) runs over the multiples of n_j / gcd(n_i, n_j).
inline void for_each_endo(const ModuleShape& s, const std::function<void(const HomMatrix&)>& visit) {
  const int t = s.rank();
  HomMatrix M = HomMatrix::zero(s);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == t * t) {
      visit(M);
      return;
    }
    const int i = pos / t, j = pos % t;
    const std::int64_t nj = s.moduli[j], step = nj / std::gcd<std::int64_t>(s.moduli[i], nj);
    for (std::int64_t v = 0; v < nj; v += step) {
      M.m(i, j) = v;
      rec(pos + 1);
    }
    M.m(i, j) = 0;
  };
  rec(0);
}

inline std::vector<HomMatrix> all_automorphisms(const ModuleShape& s) {
  std::vector<HomMatrix> out;
  for_each_endo(s, [&](const HomMatrix& M) {
    if (is_bijective_matrix(M)) out.push_back(M);
  });
  return out;
}

inline bool commutes(const HomMatrix& A, const HomMatrix& B, const HomMatrix& X, const HomMatrix& Y) {
  // A·X == Y·B on every vector
  for (const auto& v : all_vectors(A.shape))
    if (row_times(row_times(v, A), X) != row_times(row_times(v, Y), B)) return false;
  return true;
}

// ψ with ψ^{-1} α(h) ψ = β(h) for all h, i.e. α(h)ψ = ψβ(h).
inline bool intertwines(const Representation& a, const Representation& b, const HomMatrix& psi) {
  for (agrp::Elem h = 0; h < a.group().order(); ++h)
    if (!commutes(a(h), b(h), psi, psi)) return false;
  return true;
}

inline std::vector<HomMatrix> intertwiners(const Representation& a, const Representation& b,
                                           const std::vector<HomMatrix>& auts) {
  std::vector<HomMatrix> out;
  for (const auto& psi : auts)
    if (intertwines(a, b, psi)) out.push_back(psi);
  return out;
}

// Subspaces of F_p^m as sorted sets of vectors.
inline std::set<std::set<Vec>> all_subspaces(std::int64_t p, int m) {
  ModuleShape s{std::vector<int>(m, static_cast<int>(p))};
  const auto vecs = all_vectors(s);
  auto close = [&](std::set<Vec> S) {
    while (true) {
      std::set<Vec> next = S;
      for (const auto& a : S)
        for (const auto& b : S) {
          Vec c(m);
          for (int i = 0; i < m; ++i) c[i] = (a[i] + b[i]) % p;
          next.insert(c);
        }
      if (next.size() == S.size()) return S;
      S = std::move(next);
    }
  };
  std::set<std::set<Vec>> out{{Vec(m, 0)}};
  std::vector<std::set<Vec>> todo{{Vec(m, 0)}};
  while (!todo.empty()) {
    auto S = todo.back();
    todo.pop_back();
    for (const auto& v : vecs) {
      if (S.count(v)) continue;
      auto T = S;
      T.insert(v);
      T = close(T);
      if (out.insert(T).second) todo.push_back(T);
    }
  }
  return out;
}

inline bool invariant(const Representation& a, const std::set<Vec>& S) {
  for (agrp::Elem h = 0; h < a.group().order(); ++h)
    for (const auto& v : S)
      if (!S.count(row_times(v, a(h)))) return false;
  return true;
}

// Minimal nonzero invariant subspaces.
inline std::set<std::set<Vec>> irreducible_submodules(const Representation& a) {
  const std::int64_t p = a.shape().moduli[0];
  std::vector<std::set<Vec>> inv;
  for (const auto& S : all_subspaces(p, a.shape().rank()))
    if (S.size() > 1 && invariant(a, S)) inv.push_back(S);
  std::set<std::set<Vec>> out;
  for (const auto& S : inv) {
    bool minimal = true;
    for (const auto& T : inv)
      if (T.size() < S.size() && std::includes(S.begin(), S.end(), T.begin(), T.end())) minimal = false;
    if (minimal) out.insert(S);
  }
  return out;
}

// Permutation of mixed-radix indices, computed entrywise.
inline Perm naive_perm(const HomMatrix& M) {
  const auto vecs = all_vectors(M.shape);
  Perm p(vecs.size());
  for (std::size_t x = 0; x < vecs.size(); ++x) p[M.shape.index(vecs[x])] = M.shape.index(row_times(vecs[x], M));
  return p;
}

inline std::set<Perm> intertwiner_perms(const Representation& a, const Representation& b,
                                        const std::vector<HomMatrix>& auts) {
  std::set<Perm> out;
  for (const auto& psi : intertwiners(a, b, auts)) out.insert(naive_perm(psi));
  return out;
}

// entrywise X·Y for endomorphism matrices
inline std::vector<std::int64_t> naive_mul(const HomMatrix& X, const HomMatrix& Y) {
  const auto& n = X.shape.moduli;
  const int t = X.shape.rank();
  std::vector<std::int64_t> r(t * t, 0);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      std::int64_t s = 0;
      for (int l = 0; l < t; ++l) s += X.m(i, l) * Y.m(l, j);
      r[i * t + j] = s % n[j];
    }
  return r;
}

// {φ ∈ P : ∃ψ α(φ^{-1}h)ψ = ψβ(h) ∀h}, every pair enumerated
inline std::set<Perm> double_enumeration(const std::vector<Perm>& P, const Representation& a, const Representation& b,
                                         const std::vector<HomMatrix>& autA) {
  std::set<Perm> out;
  const int n = a.group().order();
  for (const Perm& phi : P) {
    const Perm inv = perm_inv(phi);
    for (const auto& psi : autA) {
      bool ok = true;
      for (Elem h = 1; h < n && ok; ++h) ok = naive_mul(a(inv[h]), psi) == naive_mul(psi, b(h));
      if (ok) {
        out.insert(phi);
        break;
      }
    }
  }
  return out;
}

}  // namespace agrp::brute
