// Small named groups for tests.
#pragma once

#include <cstdint>
#include <vector>

#include "agrp/cayley.hpp"

namespace testgroups {

using agrp::CayleyGroup;
using agrp::Elem;

// generator of C_q acts on C_n by multiplication by k
inline std::vector<std::vector<Elem>> cyclic_mult_action(int n, int q, int k) {
  std::vector<std::vector<Elem>> act(q, std::vector<Elem>(n));
  std::int64_t m = 1;
  for (int h = 0; h < q; ++h) {
    for (int a = 0; a < n; ++a) act[h][a] = static_cast<Elem>(a * m % n);
    m = m * k % n;
  }
  return act;
}

inline CayleyGroup metacyclic(int n, int q, int k) {
  return agrp::semidirect_product(agrp::cyclic_group(n), agrp::cyclic_group(q), cyclic_mult_action(n, q, k)).group;
}

// F_p^m ⋊ C_q, the generator acting on row vectors by M
inline CayleyGroup elab_by_cyclic(int p, const std::vector<std::vector<int>>& M, int q) {
  const int m = static_cast<int>(M.size());
  int size = 1;
  for (int i = 0; i < m; ++i) size *= p;
  auto vec = [&](int x) {
    std::vector<int> v(m);
    for (int i = 0; i < m; ++i, x /= p) v[i] = x % p;
    return v;
  };
  auto idx = [&](const std::vector<int>& v) {
    int x = 0;
    for (int i = m - 1; i >= 0; --i) x = x * p + v[i];
    return x;
  };
  std::vector<std::vector<Elem>> act(q, std::vector<Elem>(size));
  for (int a = 0; a < size; ++a) act[0][a] = a;
  for (int h = 1; h < q; ++h)
    for (int a = 0; a < size; ++a) {
      auto v = vec(act[h - 1][a]);
      std::vector<int> w(m, 0);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) w[j] = (w[j] + v[i] * M[i][j]) % p;
      act[h][a] = idx(w);
    }
  return agrp::semidirect_product(agrp::abelian_group(std::vector<int>(m, p)), agrp::cyclic_group(q), act).group;
}

inline CayleyGroup direct(const CayleyGroup& a, const CayleyGroup& b) { return agrp::direct_product(a, b).group; }

inline CayleyGroup c7c3() { return metacyclic(7, 3, 2); }
inline CayleyGroup dic3() { return metacyclic(3, 4, 2); }
inline CayleyGroup s3() { return agrp::symmetric_group(3); }
inline CayleyGroup a4() { return agrp::alternating_group(4); }
inline CayleyGroup a5() { return agrp::alternating_group(5); }
inline CayleyGroup s3xa4() { return direct(s3(), a4()); }
inline CayleyGroup c2xa5() { return direct(agrp::cyclic_group(2), a5()); }
inline CayleyGroup s3xc5() { return direct(s3(), agrp::cyclic_group(5)); }
inline CayleyGroup d8() { return metacyclic(4, 2, 3); }
inline CayleyGroup d10() { return metacyclic(5, 2, 4); }
inline CayleyGroup f20() { return metacyclic(5, 4, 2); }

}  // namespace testgroups
