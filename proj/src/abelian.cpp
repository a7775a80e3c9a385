#include "agrp/abelian.hpp"

#include <algorithm>
#include <numeric>

namespace agrp {

int ModuleShape::size() const {
  int s = 1;
  for (int n : moduli) s *= n;
  return s;
}

int ModuleShape::index(const std::vector<std::int64_t>& v) const {
  int idx = 0, stride = 1;
  for (int i = 0; i < rank(); ++i) {
    idx += static_cast<int>(mod(v[i], moduli[i])) * stride;
    stride *= moduli[i];
  }
  return idx;
}

std::vector<std::int64_t> ModuleShape::vector(int index) const {
  std::vector<std::int64_t> v(moduli.size());
  for (int i = 0; i < rank(); ++i) {
    v[i] = index % moduli[i];
    index /= moduli[i];
  }
  return v;
}

// -- basis -------------------------------------------------------------------

AbelianBasis abelian_basis(const CayleyGroup& A) {
  require(is_abelian(A), "abelian_basis: group is not abelian");
  struct Gen {
    std::int64_t p;
    int order;
    int rank_in_prime;
    Elem g;
  };
  std::vector<Gen> gens;
  for (std::int64_t p : prime_divisors(A.order())) {
    const auto P = p_elements(A, p);
    const std::int64_t target = p_part(A.order(), p);
    std::vector<char> span(A.order(), 0);
    std::vector<Elem> span_list{0};
    span[0] = 1;
    int pick_no = 0;
    while (static_cast<std::int64_t>(span_list.size()) < target) {
      // order of y modulo the current span
      auto quotient_order = [&](Elem y) {
        int o = 1;
        Elem z = y;
        while (!span[z]) {
          z = A.pow(z, p);
          o *= static_cast<int>(p);
        }
        return o;
      };
      int best = 1;
      for (Elem y : P) best = std::max(best, quotient_order(y));
      Elem pick = -1;
      for (Elem y : P)
        if (A.elem_order(y) == best && quotient_order(y) == best) {
          pick = y;
          break;
        }
      ensure(pick >= 0, "abelian_basis: no complementing cyclic generator");
      gens.push_back({p, best, pick_no++, pick});
      // span += <pick>
      const std::size_t old = span_list.size();
      Elem pw = pick;
      for (int k = 1; k < best; ++k) {
        for (std::size_t i = 0; i < old; ++i) {
          Elem z = A.mul(span_list[i], pw);
          if (!span[z]) {
            span[z] = 1;
            span_list.push_back(z);
          }
        }
        pw = A.mul(pw, pick);
      }
    }
  }
  std::stable_sort(gens.begin(), gens.end(), [](const Gen& a, const Gen& b) {
    return a.p != b.p ? a.p < b.p : a.order < b.order;
  });
  AbelianBasis B;
  for (const auto& g : gens) {
    B.generators.push_back(g.g);
    B.shape.moduli.push_back(g.order);
  }
  const int N = B.shape.size();
  ensure(N == A.order(), "abelian_basis: generator orders do not multiply to |A|");
  B.element_of.assign(N, 0);
  B.index_of.assign(A.order(), -1);
  for (int idx = 0; idx < N; ++idx) {
    const auto v = B.shape.vector(idx);
    Elem x = 0;
    for (int i = 0; i < B.shape.rank(); ++i) x = A.mul(x, A.pow(B.generators[i], v[i]));
    ensure(B.index_of[x] < 0, "abelian_basis: coordinates are not unique");
    B.element_of[idx] = x;
    B.index_of[x] = idx;
  }
  return B;
}

HomocyclicDecomposition homocyclic_decomposition(const ModuleShape& shape) {
  HomocyclicDecomposition D;
  D.shape = shape;
  if (shape.moduli.empty()) return D;
  const auto primes = prime_divisors(shape.moduli.front());
  require(primes.size() == 1, "homocyclic_decomposition: modulus is not a prime power");
  D.p = primes.front();
  for (int i = 0; i < shape.rank(); ++i) {
    const int n = shape.moduli[i];
    require(log_p(n, D.p) >= 1, "homocyclic_decomposition: not a p-group");
    require(i == 0 || n >= shape.moduli[i - 1], "homocyclic_decomposition: moduli not ascending");
    if (D.components.empty() || D.components.back().exponent != n) D.components.push_back({n, 0, {}});
    D.components.back().rank++;
    D.components.back().positions.push_back(i);
  }
  return D;
}

// -- matrices ----------------------------------------------------------------

HomMatrix HomMatrix::identity(const ModuleShape& s) { return {s, IntMatrix::identity(s.rank())}; }
HomMatrix HomMatrix::zero(const ModuleShape& s) { return {s, IntMatrix(s.rank(), s.rank())}; }

HomMatrix HomMatrix::from_rows(const ModuleShape& s, const std::vector<std::vector<std::int64_t>>& rows) {
  const int t = s.rank();
  require(static_cast<int>(rows.size()) == t, "HomMatrix: wrong number of rows");
  HomMatrix M = zero(s);
  for (int i = 0; i < t; ++i) {
    require(static_cast<int>(rows[i].size()) == t, "HomMatrix: wrong row length");
    for (int j = 0; j < t; ++j) M.m(i, j) = mod(rows[i][j], s.moduli[j]);
  }
  require(M.is_valid(), "HomMatrix: entries violate the order constraints");
  return M;
}

bool HomMatrix::is_valid() const {
  const int t = shape.rank();
  if (m.rows != t || m.cols != t) return false;
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      const std::int64_t ni = shape.moduli[i], nj = shape.moduli[j];
      const std::int64_t v = m(i, j);
      if (v < 0 || v >= nj) return false;
      if (v % (nj / gcd64(ni, nj)) != 0) return false;
    }
  return true;
}

std::vector<std::int64_t> HomMatrix::apply(const std::vector<std::int64_t>& x) const {
  const int t = shape.rank();
  std::vector<std::int64_t> r(t, 0);
  for (int i = 0; i < t; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < t; ++j) r[j] = (r[j] + x[i] * m(i, j)) % shape.moduli[j];
  }
  return r;
}

HomMatrix hom_mul(const HomMatrix& a, const HomMatrix& b) {
  require(a.shape == b.shape, "hom_mul: shape mismatch");
  const int t = a.shape.rank();
  HomMatrix r = HomMatrix::zero(a.shape);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      const std::int64_t x = a.m(i, j);
      if (x == 0) continue;
      for (int k = 0; k < t; ++k) r.m(i, k) = (r.m(i, k) + x * b.m(j, k)) % a.shape.moduli[k];
    }
  return r;
}

HomMatrix hom_add(const HomMatrix& a, const HomMatrix& b) {
  require(a.shape == b.shape, "hom_add: shape mismatch");
  HomMatrix r = a;
  const int t = a.shape.rank();
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) r.m(i, j) = (a.m(i, j) + b.m(i, j)) % a.shape.moduli[j];
  return r;
}

HomMatrix hom_scale(const HomMatrix& a, std::int64_t c) {
  HomMatrix r = a;
  const int t = a.shape.rank();
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) r.m(i, j) = mod(a.m(i, j) * c, a.shape.moduli[j]);
  return r;
}

std::int64_t hom_additive_order(const HomMatrix& a) {
  std::int64_t o = 1;
  const int t = a.shape.rank();
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      const std::int64_t n = a.shape.moduli[j];
      o = lcm64(o, n / gcd64(a.m(i, j), n));
    }
  return o;
}

Perm hom_to_perm(const HomMatrix& M) {
  const int N = M.shape.size();
  Perm p(N);
  for (int x = 0; x < N; ++x) p[x] = M.shape.index(M.apply(M.shape.vector(x)));
  return p;
}

HomMatrix perm_to_hom(const ModuleShape& s, const Perm& p) {
  std::vector<std::vector<std::int64_t>> rows;
  for (int i = 0; i < s.rank(); ++i) {
    std::vector<std::int64_t> e(s.rank(), 0);
    e[i] = 1;
    rows.push_back(s.vector(p[s.index(e)]));
  }
  return HomMatrix::from_rows(s, rows);
}

HomMatrix endo_to_matrix(const CayleyGroup& A, const AbelianBasis& B, const std::vector<Elem>& images) {
  require(static_cast<int>(images.size()) == A.order(), "endo_to_matrix: wrong image count");
  GroupHom f{A.order(), images};
  require(is_homomorphism(A, A, f), "endo_to_matrix: map is not an endomorphism");
  std::vector<std::vector<std::int64_t>> rows;
  for (Elem g : B.generators) rows.push_back(B.coords(images[g]));
  return HomMatrix::from_rows(B.shape, rows);
}

std::vector<Elem> matrix_to_endo(const AbelianBasis& B, const HomMatrix& M) {
  std::vector<Elem> out(B.index_of.size());
  for (std::size_t x = 0; x < out.size(); ++x)
    out[x] = B.element(M.apply(B.coords(static_cast<Elem>(x))));
  return out;
}

IntMatrix hom_block(const HomMatrix& M, const HomocyclicDecomposition& D, int a, int b) {
  const auto& pa = D.components[a].positions;
  const auto& pb = D.components[b].positions;
  IntMatrix r(static_cast<int>(pa.size()), static_cast<int>(pb.size()));
  for (std::size_t i = 0; i < pa.size(); ++i)
    for (std::size_t j = 0; j < pb.size(); ++j) r(static_cast<int>(i), static_cast<int>(j)) = M.m(pa[i], pb[j]);
  return r;
}

bool is_automorphism(const HomMatrix& M, const HomocyclicDecomposition& D) {
  for (std::size_t a = 0; a < D.components.size(); ++a)
    if (det_mod_prime(hom_block(M, D, static_cast<int>(a), static_cast<int>(a)), D.p) == 0) return false;
  return true;
}

std::vector<IntMatrix> lambda_map(const HomMatrix& M, const HomocyclicDecomposition& D) {
  std::vector<IntMatrix> out;
  for (std::size_t a = 0; a < D.components.size(); ++a) {
    IntMatrix b = hom_block(M, D, static_cast<int>(a), static_cast<int>(a));
    for (auto& x : b.data) x %= D.p;
    out.push_back(std::move(b));
  }
  return out;
}

HomMatrix lambda_lift(const std::vector<IntMatrix>& blocks, const HomocyclicDecomposition& D) {
  require(blocks.size() == D.components.size(), "lambda_lift: wrong number of blocks");
  HomMatrix M = HomMatrix::zero(D.shape);
  for (std::size_t a = 0; a < blocks.size(); ++a) {
    const auto& pos = D.components[a].positions;
    require(blocks[a].rows == static_cast<int>(pos.size()) && blocks[a].cols == static_cast<int>(pos.size()),
            "lambda_lift: block has wrong size");
    for (std::size_t i = 0; i < pos.size(); ++i)
      for (std::size_t j = 0; j < pos.size(); ++j)
        M.m(pos[i], pos[j]) = mod(blocks[a](static_cast<int>(i), static_cast<int>(j)), D.p);
  }
  return M;
}

namespace {

// generators of (Z/e)^x by greedy closure
std::vector<std::int64_t> unit_generators(std::int64_t e) {
  std::vector<char> in(e, 0);
  std::vector<std::int64_t> span{1 % e}, gens;
  in[1 % e] = 1;
  for (std::int64_t u = 2; u < e; ++u) {
    if (gcd64(u, e) != 1 || in[u]) continue;
    gens.push_back(u);
    for (std::size_t i = 0; i < span.size(); ++i)
      for (std::int64_t g : gens) {
        std::int64_t z = span[i] * g % e;
        if (!in[z]) {
          in[z] = 1;
          span.push_back(z);
        }
      }
  }
  return gens;
}

}  // namespace

std::vector<HomMatrix> aut_generators(const HomocyclicDecomposition& D) {
  std::vector<HomMatrix> out;
  const auto& s = D.shape;
  for (const auto& c : D.components) {
    for (std::int64_t u : unit_generators(c.exponent)) {
      HomMatrix M = HomMatrix::identity(s);
      M.m(c.positions[0], c.positions[0]) = u;
      out.push_back(M);
    }
    for (int a : c.positions)
      for (int b : c.positions)
        if (a != b) {
          HomMatrix M = HomMatrix::identity(s);
          M.m(a, b) = 1;
          out.push_back(M);
        }
  }
  for (std::size_t i = 0; i < D.components.size(); ++i)
    for (std::size_t j = 0; j < D.components.size(); ++j) {
      if (i == j) continue;
      const int a = D.components[i].positions[0], b = D.components[j].positions[0];
      HomMatrix M = HomMatrix::identity(s);
      M.m(a, b) = s.moduli[b] / gcd64(s.moduli[a], s.moduli[b]);
      out.push_back(M);
    }
  return out;
}

PermGroup aut_permgroup(const HomocyclicDecomposition& D) {
  std::vector<Perm> gens;
  for (const auto& M : aut_generators(D)) gens.push_back(hom_to_perm(M));
  PermGroup P(D.shape.size(), std::move(gens));
  ensure(P.order() == aut_order(D), "aut_permgroup: generators do not reach |Aut(A)|");
  return P;
}

std::uint64_t aut_order(const HomocyclicDecomposition& D) {
  unsigned __int128 r = 1;
  const auto lim = static_cast<unsigned __int128>(~std::uint64_t{0});
  auto mul = [&](unsigned __int128 x) {
    r *= x;
    if (r > lim) throw ResourceExhausted("aut_order: |Aut(A)| exceeds 2^64");
  };
  const auto& n = D.shape.moduli;
  // |End(A)| / p^{Σ m_i^2} first, to keep the intermediate small
  for (std::size_t a = 0; a < n.size(); ++a)
    for (std::size_t b = 0; b < n.size(); ++b) {
      std::int64_t g = gcd64(n[a], n[b]);
      if (D.shape.moduli[a] == D.shape.moduli[b]) g /= D.p;
      mul(static_cast<unsigned __int128>(g));
    }
  for (const auto& c : D.components) {
    unsigned __int128 pm = 1;
    for (int i = 0; i < c.rank; ++i) pm *= D.p;
    unsigned __int128 pi = 1;
    for (int i = 0; i < c.rank; ++i) {
      mul(pm - pi);
      pi *= D.p;
    }
  }
  return static_cast<std::uint64_t>(r);
}

HomMatrix hom_inverse(const HomMatrix& M) {
  Perm p = hom_to_perm(M);
  require(perm_is_bijection(p), "hom_inverse: matrix is not invertible");
  return perm_to_hom(M.shape, perm_inv(p));
}

std::vector<PrimaryBlock> primary_blocks(const ModuleShape& s) {
  std::vector<PrimaryBlock> out;
  for (int i = 0; i < s.rank();) {
    const auto ps = prime_divisors(s.moduli[i]);
    require(ps.size() == 1, "primary_blocks: modulus is not a prime power");
    int j = i;
    while (j < s.rank() && s.moduli[j] % ps[0] == 0) ++j;
    for (const auto& b : out) require(b.p != ps[0], "primary_blocks: primes are not contiguous");
    ModuleShape sub{std::vector<int>(s.moduli.begin() + i, s.moduli.begin() + j)};
    out.push_back({ps[0], i, j, homocyclic_decomposition(sub)});
    i = j;
  }
  return out;
}

HomMatrix restrict_block(const HomMatrix& M, const PrimaryBlock& b) {
  HomMatrix r = HomMatrix::zero(b.decomposition.shape);
  for (int i = b.begin; i < b.end; ++i)
    for (int j = b.begin; j < b.end; ++j) r.m(i - b.begin, j - b.begin) = M.m(i, j);
  return r;
}

bool is_invertible(const HomMatrix& M) {
  for (const auto& b : primary_blocks(M.shape))
    if (!is_automorphism(restrict_block(M, b), b.decomposition)) return false;
  return true;
}

}  // namespace agrp
