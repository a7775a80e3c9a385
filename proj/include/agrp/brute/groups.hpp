// Brute-force reference computations used by the tests. Deliberately naive
// and independent of the library algorithms they check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "agrp/cayley.hpp"

namespace agrp::brute {



// Fixpoint of S <- S ∪ S·S, starting from S ∪ {1}.
inline std::set<Elem> naive_closure(const CayleyGroup& G, std::vector<Elem> S) {
  std::set<Elem> cur(S.begin(), S.end());
  cur.insert(0);
  while (true) {
    std::set<Elem> next = cur;
    for (Elem a : cur)
      for (Elem b : cur) next.insert(G.mul(a, b));
    if (next.size() == cur.size()) return cur;
    cur = std::move(next);
  }
}

// All subgroups generated by at most two elements.
inline std::set<std::vector<Elem>> two_generated_subgroups(const CayleyGroup& G) {
  std::set<std::vector<Elem>> out;
  for (Elem a = 0; a < G.order(); ++a)
    for (Elem b = a; b < G.order(); ++b) {
      auto s = naive_closure(G, {a, b});
      out.insert(std::vector<Elem>(s.begin(), s.end()));
    }
  return out;
}

inline bool commutes_all(const CayleyGroup& G, const std::set<Elem>& s) {
  for (Elem a : s)
    for (Elem b : s)
      if (G.mul(a, b) != G.mul(b, a)) return false;
  return true;
}

// Every homomorphism G -> H, found by assigning images to a generating
// list and propagating along products. `visit` returns false to stop.
inline void for_each_hom(const CayleyGroup& G, const CayleyGroup& H,
                         const std::function<bool(const std::vector<Elem>&)>& visit) {
  std::vector<Elem> gens;
  {
    std::set<Elem> span{0};
    for (Elem x = 0; x < G.order(); ++x)
      if (!span.count(x)) {
        gens.push_back(x);
        span = naive_closure(G, gens);
      }
  }
  std::vector<Elem> img(gens.size(), 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == gens.size()) {
      std::vector<Elem> f(G.order(), -1);
      f[0] = 0;
      std::vector<Elem> frontier{0};
      for (std::size_t k = 0; k < frontier.size(); ++k)
        for (std::size_t j = 0; j < gens.size(); ++j) {
          Elem y = G.mul(frontier[k], gens[j]);
          Elem v = H.mul(f[frontier[k]], img[j]);
          if (f[y] < 0) {
            f[y] = v;
            frontier.push_back(y);
          }
        }
      for (Elem a = 0; a < G.order(); ++a)
        for (Elem b = 0; b < G.order(); ++b)
          if (f[G.mul(a, b)] != H.mul(f[a], f[b])) return true;
      return visit(f);
    }
    for (Elem v = 0; v < H.order(); ++v) {
      img[i] = v;
      if (!rec(i + 1)) return false;
    }
    return true;
  };
  rec(0);
}

inline bool bijective(const std::vector<Elem>& f, int n) {
  std::vector<char> seen(n, 0);
  for (Elem x : f) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = 1;
  }
  return static_cast<int>(f.size()) == n;
}

inline std::int64_t count_homs(const CayleyGroup& G, const CayleyGroup& H) {
  std::int64_t c = 0;
  for_each_hom(G, H, [&](const std::vector<Elem>&) {
    ++c;
    return true;
  });
  return c;
}

inline std::vector<std::vector<Elem>> all_automorphisms(const CayleyGroup& G) {
  std::vector<std::vector<Elem>> out;
  for_each_hom(G, G, [&](const std::vector<Elem>& f) {
    if (bijective(f, G.order())) out.push_back(f);
    return true;
  });
  return out;
}

// <S> by breadth-first right multiplication.
inline std::vector<char> bfs_closure(const CayleyGroup& G, const std::vector<Elem>& S) {
  std::vector<char> in(G.order(), 0);
  std::vector<Elem> q{0};
  in[0] = 1;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (Elem s : S) {
      const Elem y = G.mul(q[i], s);
      if (!in[y]) {
        in[y] = 1;
        q.push_back(y);
      }
    }
  return in;
}

// A generating set of minimal size among at most three elements, found by search.
inline std::vector<Elem> generating_tuple(const CayleyGroup& G) {
  const int n = G.order();
  auto gen = [&](const std::vector<Elem>& S) {
    auto in = bfs_closure(G, S);
    return std::count(in.begin(), in.end(), 1) == n;
  };
  if (n == 1) return {};
  for (Elem a = 1; a < n; ++a)
    if (gen({a})) return {a};
  for (Elem a = 1; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (gen({a, b})) return {a, b};
  for (Elem a = 1; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      for (Elem c = b + 1; c < n; ++c)
        if (gen({a, b, c})) return {a, b, c};
  return {};
}

// Automorphisms by trying every order-preserving image tuple of a short
// generating tuple and checking the extension on all pairs.
inline std::vector<std::vector<Elem>> automorphisms_by_generators(const CayleyGroup& G) {
  const int n = G.order();
  const auto gens = generating_tuple(G);
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> img(gens.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == gens.size()) {
      std::vector<Elem> f(n, -1);
      f[0] = 0;
      std::vector<Elem> q{0};
      for (std::size_t k = 0; k < q.size(); ++k)
        for (std::size_t j = 0; j < gens.size(); ++j) {
          const Elem y = G.mul(q[k], gens[j]);
          const Elem v = G.mul(f[q[k]], img[j]);
          if (f[y] < 0) {
            f[y] = v;
            q.push_back(y);
          } else if (f[y] != v) {
            return;
          }
        }
      if (!bijective(f, n)) return;
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          if (f[G.mul(a, b)] != G.mul(f[a], f[b])) return;
      out.push_back(std::move(f));
      return;
    }
    for (Elem v = 0; v < n; ++v)
      if (G.elem_order(v) == G.elem_order(gens[i])) {
        img[i] = v;
        rec(i + 1);
      }
  };
  rec(0);
  return out;
}

inline std::optional<std::vector<Elem>> find_isomorphism(const CayleyGroup& G, const CayleyGroup& H) {
  if (G.order() != H.order()) return std::nullopt;
  std::optional<std::vector<Elem>> found;
  for_each_hom(G, H, [&](const std::vector<Elem>& f) {
    if (bijective(f, H.order())) {
      found = f;
      return false;
    }
    return true;
  });
  return found;
}

// First isomorphism found by mapping a short generating tuple of G to
// order-matching tuples of H.
inline std::optional<std::vector<Elem>> iso_by_generators(const CayleyGroup& G, const CayleyGroup& H) {
  if (G.order() != H.order()) return std::nullopt;
  const int n = G.order();
  const auto gens = generating_tuple(G);
  std::vector<Elem> img(gens.size());
  std::optional<std::vector<Elem>> found;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (found) return;
    if (i == gens.size()) {
      std::vector<Elem> f(n, -1);
      f[0] = 0;
      std::vector<Elem> q{0};
      for (std::size_t k = 0; k < q.size(); ++k)
        for (std::size_t j = 0; j < gens.size(); ++j) {
          const Elem y = G.mul(q[k], gens[j]);
          const Elem v = H.mul(f[q[k]], img[j]);
          if (f[y] < 0) {
            f[y] = v;
            q.push_back(y);
          } else if (f[y] != v) {
            return;
          }
        }
      if (!bijective(f, n)) return;
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          if (f[G.mul(a, b)] != H.mul(f[a], f[b])) return;
      found = std::move(f);
      return;
    }
    for (Elem v = 0; v < n && !found; ++v)
      if (H.elem_order(v) == G.elem_order(gens[i])) {
        img[i] = v;
        rec(i + 1);
      }
  };
  rec(0);
  return found;
}

}  // namespace agrp::brute
