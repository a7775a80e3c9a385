#include "agrp/cayley.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace agrp {

namespace {

std::vector<Elem> identity_perm(int n) {
  std::vector<Elem> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

// -- CayleyGroup -------------------------------------------------------------

CayleyGroup::CayleyGroup() : CayleyGroup(1, {0}, "1") {}

CayleyGroup::CayleyGroup(int n, std::vector<Elem> table, std::string name)
    : n_(n), table_(std::move(table)), name_(std::move(name)) {
  compute_caches();
}

void CayleyGroup::compute_caches() {
  inverse_.assign(n_, -1);
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b)
      if (mul(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
  orders_.assign(n_, 0);
  for (Elem a = 0; a < n_; ++a) {
    int k = 1;
    Elem x = a;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    orders_[a] = k;
  }
}

CayleyGroup CayleyGroup::from_trusted_table(int n, std::vector<Elem> table, std::string name) {
  return CayleyGroup(n, std::move(table), std::move(name));
}

CayleyGroup CayleyGroup::from_table(int n, std::vector<Elem> table, std::string name,
                                    const ValidationOptions& opts) {
  require(n >= 1, "group order must be positive");
  require(table.size() == static_cast<std::size_t>(n) * n, "table has wrong size");
  for (Elem v : table) require(v >= 0 && v < n, "table entry out of range");
  auto at = [&](Elem a, Elem b) { return table[static_cast<std::size_t>(a) * n + b]; };
  std::vector<char> seen(n);
  for (Elem a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem b = 0; b < n; ++b) {
      if (seen[at(a, b)]) throw InvalidInput("not a Latin square: row " + std::to_string(a));
      seen[at(a, b)] = 1;
    }
  }
  for (Elem b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem a = 0; a < n; ++a) {
      if (seen[at(a, b)]) throw InvalidInput("not a Latin square: column " + std::to_string(b));
      seen[at(a, b)] = 1;
    }
  }
  Elem e = -1;
  for (Elem a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (Elem b = 0; b < n && ok; ++b) ok = at(a, b) == b && at(b, a) == b;
    if (ok) e = a;
  }
  if (e < 0) throw InvalidInput("table has no identity element");

  if (n <= opts.full_associativity_bound) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        const Elem ab = at(a, b);
        for (Elem c = 0; c < n; ++c)
          if (at(ab, c) != at(a, at(b, c))) throw InvalidInput("table is not associative");
      }
  } else {
    Rng rng(opts.sample_seed);
    const std::uint64_t samples = 10ull * n * n;
    for (std::uint64_t s = 0; s < samples; ++s) {
      Elem a = static_cast<Elem>(rng.below(n)), b = static_cast<Elem>(rng.below(n)),
           c = static_cast<Elem>(rng.below(n));
      if (at(at(a, b), c) != at(a, at(b, c))) throw InvalidInput("table is not associative");
    }
  }

  if (e != 0) {
    // swap labels e and 0
    auto sw = [&](Elem x) { return x == e ? 0 : (x == 0 ? e : x); };
    std::vector<Elem> t(table.size());
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) t[static_cast<std::size_t>(sw(a)) * n + sw(b)] = sw(at(a, b));
    table = std::move(t);
  }
  return CayleyGroup(n, std::move(table), std::move(name));
}

Elem CayleyGroup::pow(Elem a, std::int64_t k) const {
  const int o = orders_[a];
  k = mod(k, o);
  Elem r = 0;
  Elem base = a;
  while (k > 0) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

// -- subgroups ---------------------------------------------------------------

namespace {

std::vector<Elem> group_generators(const CayleyGroup& G) {
  // greedy by index: a generating set of size at most log2 |G|
  std::vector<Elem> gens;
  std::vector<char> mask(G.order(), 0);
  std::vector<Elem> elems{0};
  mask[0] = 1;
  for (Elem x = 1; x < G.order(); ++x) {
    if (mask[x]) continue;
    gens.push_back(x);
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (Elem g : gens) {
        Elem y = G.mul(elems[i], g);
        if (!mask[y]) {
          mask[y] = 1;
          elems.push_back(y);
        }
      }
  }
  return gens;
}

void close_list(const CayleyGroup& G, std::vector<Elem>& elems, std::vector<char>& mask,
                std::span<const Elem> gens) {
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (Elem g : gens) {
      Elem y = G.mul(elems[i], g);
      if (!mask[y]) {
        mask[y] = 1;
        elems.push_back(y);
      }
    }
}

Subgroup finish(std::vector<Elem> elems, std::vector<char> mask, std::vector<Elem> gens) {
  std::sort(elems.begin(), elems.end());
  Subgroup s;
  s.elements = std::move(elems);
  s.mask = std::move(mask);
  s.generators = std::move(gens);
  return s;
}

}  // namespace

Subgroup whole_group(const CayleyGroup& G) {
  Subgroup s;
  s.elements.resize(G.order());
  std::iota(s.elements.begin(), s.elements.end(), 0);
  s.mask.assign(G.order(), 1);
  s.generators = group_generators(G);
  return s;
}

Subgroup trivial_subgroup(const CayleyGroup& G) {
  Subgroup s;
  s.elements = {0};
  s.mask.assign(G.order(), 0);
  s.mask[0] = 1;
  return s;
}

Subgroup subgroup_from_elements(const CayleyGroup& G, std::vector<Elem> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  Subgroup cur = trivial_subgroup(G);
  for (Elem x : elems) {
    require(x >= 0 && x < G.order(), "element index out of range");
    if (!cur.contains(x)) {
      Elem e[1] = {x};
      cur = join(G, cur, e);
    }
  }
  require(cur.order() == static_cast<int>(elems.size()), "element set is not a subgroup");
  return cur;
}

Subgroup closure(const CayleyGroup& G, std::span<const Elem> gens) {
  for (Elem g : gens) require(g >= 0 && g < G.order(), "closure: index out of range");
  std::vector<char> mask(G.order(), 0);
  std::vector<Elem> elems{0};
  mask[0] = 1;
  close_list(G, elems, mask, gens);
  return finish(std::move(elems), std::move(mask), std::vector<Elem>(gens.begin(), gens.end()));
}

Subgroup join(const CayleyGroup& G, const Subgroup& X, std::span<const Elem> extra) {
  std::vector<Elem> gens = X.generators;
  bool grows = false;
  for (Elem e : extra) {
    require(e >= 0 && e < G.order(), "join: index out of range");
    if (!X.contains(e)) grows = true;
    gens.push_back(e);
  }
  if (!grows) return X;
  std::vector<char> mask = X.mask;
  std::vector<Elem> elems = X.elements;
  close_list(G, elems, mask, gens);
  // drop extra generators that were already inside X
  std::vector<Elem> kept = X.generators;
  for (Elem e : extra)
    if (!X.contains(e)) kept.push_back(e);
  return finish(std::move(elems), std::move(mask), std::move(kept));
}

Subgroup join(const CayleyGroup& G, const Subgroup& X, const Subgroup& Y) {
  return join(G, X, Y.generators);
}

Subgroup intersection(const CayleyGroup& G, const Subgroup& X, const Subgroup& Y) {
  std::vector<Elem> elems;
  for (Elem x : X.elements)
    if (Y.contains(x)) elems.push_back(x);
  return subgroup_from_elements(G, std::move(elems));
}

Subgroup normal_closure(const CayleyGroup& G, const Subgroup& X, std::span<const Elem> S) {
  Subgroup N = closure(G, S);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Elem> add;
    for (Elem t : N.generators)
      for (Elem x : X.generators) {
        Elem c = G.conj(t, x);
        if (!N.contains(c)) add.push_back(c);
      }
    if (!add.empty()) {
      // add one at a time to keep the generator list short
      for (Elem c : add)
        if (!N.contains(c)) {
          Elem e[1] = {c};
          N = join(G, N, e);
        }
      changed = true;
    }
  }
  return N;
}

Subgroup normal_closure(const CayleyGroup& G, std::span<const Elem> S) {
  return normal_closure(G, whole_group(G), S);
}

Subgroup centralizer(const CayleyGroup& G, std::span<const Elem> S) {
  std::vector<Elem> elems;
  for (Elem g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (Elem s : S)
      if (G.mul(g, s) != G.mul(s, g)) {
        ok = false;
        break;
      }
    if (ok) elems.push_back(g);
  }
  return subgroup_from_elements(G, std::move(elems));
}

Subgroup centralizer(const CayleyGroup& G, const Subgroup& X) {
  return centralizer(G, X.generators);
}

Subgroup normalizer(const CayleyGroup& G, const Subgroup& X) {
  std::vector<Elem> elems;
  for (Elem g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (Elem x : X.generators)
      if (!X.contains(G.conj(x, g))) {
        ok = false;
        break;
      }
    if (ok) elems.push_back(g);
  }
  return subgroup_from_elements(G, std::move(elems));
}

Subgroup centre(const CayleyGroup& G) { return centralizer(G, whole_group(G)); }

Subgroup derived_subgroup(const CayleyGroup& G, const Subgroup& X) {
  std::vector<Elem> comms;
  const auto& gens = X.generators;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Elem c = G.comm(gens[i], gens[j]);
      if (c != 0) comms.push_back(c);
    }
  return normal_closure(G, X, comms);
}

std::vector<Subgroup> derived_series(const CayleyGroup& G, const Subgroup& X) {
  std::vector<Subgroup> series{X};
  while (true) {
    Subgroup D = derived_subgroup(G, series.back());
    if (D.order() == series.back().order()) break;
    series.push_back(std::move(D));
  }
  return series;
}

std::vector<Subgroup> derived_series(const CayleyGroup& G) {
  return derived_series(G, whole_group(G));
}

bool is_abelian(const CayleyGroup& G, const Subgroup& X) {
  const auto& g = X.generators;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (G.mul(g[i], g[j]) != G.mul(g[j], g[i])) return false;
  return true;
}

bool is_abelian(const CayleyGroup& G) { return is_abelian(G, whole_group(G)); }

bool is_solvable(const CayleyGroup& G, const Subgroup& X) {
  return derived_series(G, X).back().is_trivial();
}

bool is_solvable(const CayleyGroup& G) { return is_solvable(G, whole_group(G)); }

bool normalizes(const CayleyGroup& G, const Subgroup& X, const Subgroup& N) {
  for (Elem x : X.generators)
    for (Elem n : N.generators)
      if (!N.contains(G.conj(n, x))) return false;
  return true;
}

bool is_normal(const CayleyGroup& G, const Subgroup& N) {
  return normalizes(G, whole_group(G), N);
}

std::vector<std::vector<Elem>> conjugacy_classes(const CayleyGroup& G) {
  const auto gens = group_generators(G);
  std::vector<char> seen(G.order(), 0);
  std::vector<std::vector<Elem>> classes;
  for (Elem x = 0; x < G.order(); ++x) {
    if (seen[x]) continue;
    std::vector<Elem> cls{x};
    seen[x] = 1;
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (Elem g : gens) {
        Elem y = G.conj(cls[i], g);
        if (!seen[y]) {
          seen[y] = 1;
          cls.push_back(y);
        }
      }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<Elem> p_elements(const CayleyGroup& G, std::int64_t p) {
  std::vector<Elem> out;
  for (Elem x = 0; x < G.order(); ++x)
    if (log_p(G.elem_order(x), p) >= 0) out.push_back(x);
  return out;
}

Subgroup subgroup_generated_by_p_elements(const CayleyGroup& G, std::int64_t p) {
  Subgroup K = trivial_subgroup(G);
  for (Elem x : p_elements(G, p))
    if (!K.contains(x)) {
      Elem e[1] = {x};
      K = join(G, K, e);
    }
  return K;
}

Subgroup sylow_subgroup(const CayleyGroup& G, std::int64_t p) {
  require(is_prime(p), "sylow_subgroup: p is not prime");
  const std::int64_t target = p_part(G.order(), p);
  Subgroup P = trivial_subgroup(G);
  while (P.order() < target) {
    Subgroup N = normalizer(G, P);
    Elem pick = -1;
    for (Elem x : N.elements) {
      if (P.contains(x)) continue;
      if (P.contains(G.pow(x, p))) {
        pick = x;
        break;
      }
    }
    ensure(pick >= 0, "sylow_subgroup: normalizer climbing stalled");
    Elem e[1] = {pick};
    P = join(G, P, e);
  }
  return P;
}

Subgroup solvable_radical(const CayleyGroup& G) {
  Subgroup R = trivial_subgroup(G);
  for (const auto& cls : conjugacy_classes(G)) {
    const Elem x = cls.front();
    if (R.contains(x)) continue;
    Elem e[1] = {x};
    Subgroup N = normal_closure(G, e);
    if (is_solvable(G, N)) R = join(G, R, N);
  }
  return R;
}

bool is_agroup(const CayleyGroup& G) {
  for (std::int64_t p : prime_divisors(G.order()))
    if (!is_abelian(G, sylow_subgroup(G, p))) return false;
  return true;
}

// -- derived groups ----------------------------------------------------------

EmbeddedGroup embed(const CayleyGroup& G, const Subgroup& X) {
  EmbeddedGroup E;
  const int m = X.order();
  E.to_parent = X.elements;
  E.from_parent.assign(G.order(), -1);
  for (int i = 0; i < m; ++i) E.from_parent[X.elements[i]] = i;
  std::vector<Elem> t(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      t[static_cast<std::size_t>(i) * m + j] = E.from_parent[G.mul(X.elements[i], X.elements[j])];
  E.group = CayleyGroup::from_trusted_table(m, std::move(t));
  return E;
}

Subgroup lift(const CayleyGroup& parent, const EmbeddedGroup& E, const Subgroup& local) {
  std::vector<Elem> elems, gens;
  std::vector<char> mask(parent.order(), 0);
  for (Elem x : local.elements) {
    elems.push_back(E.to_parent[x]);
    mask[E.to_parent[x]] = 1;
  }
  for (Elem g : local.generators) gens.push_back(E.to_parent[g]);
  return finish(std::move(elems), std::move(mask), std::move(gens));
}

Subgroup restrict_to(const EmbeddedGroup& E, const Subgroup& parent_sub) {
  std::vector<Elem> elems, gens;
  std::vector<char> mask(E.group.order(), 0);
  for (Elem x : parent_sub.elements) {
    Elem l = E.from_parent[x];
    require(l >= 0, "restrict_to: subgroup not contained in embedded group");
    elems.push_back(l);
    mask[l] = 1;
  }
  for (Elem g : parent_sub.generators) gens.push_back(E.from_parent[g]);
  return finish(std::move(elems), std::move(mask), std::move(gens));
}

Quotient quotient(const CayleyGroup& G, const Subgroup& N) {
  require(is_normal(G, N), "quotient: subgroup is not normal");
  Quotient Q;
  std::vector<Elem> label(G.order(), -1);
  for (Elem g = 0; g < G.order(); ++g) {
    if (label[g] >= 0) continue;
    const Elem id = static_cast<Elem>(Q.coset_rep.size());
    Q.coset_rep.push_back(g);
    for (Elem n : N.elements) label[G.mul(g, n)] = id;
  }
  const int m = static_cast<int>(Q.coset_rep.size());
  std::vector<Elem> t(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      t[static_cast<std::size_t>(i) * m + j] = label[G.mul(Q.coset_rep[i], Q.coset_rep[j])];
  Q.group = CayleyGroup::from_trusted_table(m, std::move(t));
  Q.projection.target_order = m;
  Q.projection.images = std::move(label);
  return Q;
}

Subgroup preimage(const CayleyGroup& G, const Quotient& Q, const Subgroup& local) {
  std::vector<Elem> elems;
  std::vector<char> mask(G.order(), 0);
  for (Elem g = 0; g < G.order(); ++g)
    if (local.contains(Q.projection.images[g])) {
      elems.push_back(g);
      mask[g] = 1;
    }
  // lifts of the local generators, then whatever of the kernel is missing
  std::vector<Elem> gens;
  for (Elem q : local.generators) gens.push_back(Q.coset_rep[q]);
  Subgroup cur = closure(G, gens);
  for (Elem g = 0; g < G.order() && cur.order() < static_cast<int>(elems.size()); ++g)
    if (mask[g] && !cur.contains(g)) {
      Elem e[1] = {g};
      cur = join(G, cur, e);
    }
  return cur;
}

Product direct_product(const CayleyGroup& G, const CayleyGroup& H) {
  const int a = G.order(), b = H.order(), n = a * b;
  std::vector<Elem> t(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[static_cast<std::size_t>(x) * n + y] = G.mul(x / b, y / b) * b + H.mul(x % b, y % b);
  Product P;
  P.group = CayleyGroup::from_trusted_table(n, std::move(t));
  for (int g = 0; g < a; ++g) P.embed_first.push_back(g * b);
  for (int h = 0; h < b; ++h) P.embed_second.push_back(h);
  return P;
}

Product semidirect_product(const CayleyGroup& A, const CayleyGroup& H,
                           const std::vector<std::vector<Elem>>& action) {
  require(is_abelian(A), "semidirect_product: A must be abelian");
  const int a = A.order(), h = H.order(), n = a * h;
  require(static_cast<int>(action.size()) == h, "semidirect_product: action size mismatch");
  for (int x = 0; x < h; ++x) {
    require(static_cast<int>(action[x].size()) == a, "semidirect_product: action size mismatch");
    require(is_automorphism(A, action[x]), "semidirect_product: action image is not an automorphism");
  }
  for (Elem v = 0; v < a; ++v) require(action[0][v] == v, "semidirect_product: α(1) is not trivial");
  for (int x = 0; x < h; ++x)
    for (int y = 0; y < h; ++y) {
      const auto& xy = action[H.mul(x, y)];
      for (Elem v = 0; v < a; ++v)
        require(xy[v] == action[y][action[x][v]], "semidirect_product: action is not a homomorphism");
    }
  std::vector<Elem> t(static_cast<std::size_t>(n) * n);
  for (int p = 0; p < n; ++p) {
    const int ph = p / a, pa = p % a;
    const auto& inv_act = action[H.inv(ph)];
    for (int q = 0; q < n; ++q) {
      const int qh = q / a, qa = q % a;
      t[static_cast<std::size_t>(p) * n + q] = H.mul(ph, qh) * a + A.mul(pa, inv_act[qa]);
    }
  }
  Product P;
  P.group = CayleyGroup::from_trusted_table(n, std::move(t));
  for (int v = 0; v < a; ++v) P.embed_first.push_back(v);
  for (int x = 0; x < h; ++x) P.embed_second.push_back(x * a);
  return P;
}

// -- homomorphisms -----------------------------------------------------------

bool is_homomorphism(const CayleyGroup& G, const CayleyGroup& H, const GroupHom& f) {
  if (static_cast<int>(f.images.size()) != G.order() || f.target_order != H.order()) return false;
  for (Elem x : f.images)
    if (x < 0 || x >= H.order()) return false;
  if (f.images[0] != 0) return false;
  for (Elem a = 0; a < G.order(); ++a)
    for (Elem b = 0; b < G.order(); ++b)
      if (f.images[G.mul(a, b)] != H.mul(f.images[a], f.images[b])) return false;
  return true;
}

bool is_bijective(const GroupHom& f) {
  if (static_cast<int>(f.images.size()) != f.target_order) return false;
  std::vector<char> seen(f.target_order, 0);
  for (Elem x : f.images) {
    if (seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

bool is_automorphism(const CayleyGroup& G, std::span<const Elem> images) {
  GroupHom f{G.order(), std::vector<Elem>(images.begin(), images.end())};
  return is_bijective(f) && is_homomorphism(G, G, f);
}

GroupHom compose(const GroupHom& f, const GroupHom& g) {
  GroupHom r;
  r.target_order = g.target_order;
  r.images.resize(f.images.size());
  for (std::size_t i = 0; i < f.images.size(); ++i) r.images[i] = g.images[f.images[i]];
  return r;
}

Subgroup kernel(const CayleyGroup& G, const GroupHom& f) {
  std::vector<Elem> elems;
  for (Elem x = 0; x < G.order(); ++x)
    if (f.images[x] == 0) elems.push_back(x);
  return subgroup_from_elements(G, std::move(elems));
}

Subgroup image(const CayleyGroup& H, const GroupHom& f) {
  return subgroup_from_elements(H, f.images);
}

std::vector<Elem> small_generating_set(const CayleyGroup& G) {
  std::vector<Elem> gens;
  Subgroup cur = trivial_subgroup(G);
  while (cur.order() < G.order()) {
    Elem best = -1;
    int best_size = 0;
    for (Elem x = 1; x < G.order(); ++x) {
      if (cur.contains(x)) continue;
      Elem e[1] = {x};
      const int sz = join(G, cur, e).order();
      if (sz > best_size) {
        best_size = sz;
        best = x;
        if (sz == G.order()) break;
      }
    }
    Elem e[1] = {best};
    cur = join(G, cur, e);
    gens.push_back(best);
  }
  return gens;
}

std::pair<CayleyGroup, std::vector<Elem>> relabel(const CayleyGroup& G, std::uint64_t seed) {
  const int n = G.order();
  std::vector<Elem> rest;
  for (Elem x = 1; x < n; ++x) rest.push_back(x);
  Rng rng(seed);
  shuffle(rest, rng);
  std::vector<Elem> perm(n);
  perm[0] = 0;
  for (int i = 1; i < n; ++i) perm[i] = rest[i - 1];
  std::vector<Elem> t(static_cast<std::size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t[static_cast<std::size_t>(perm[a]) * n + perm[b]] = perm[G.mul(a, b)];
  return {CayleyGroup::from_trusted_table(n, std::move(t), G.name()), perm};
}

// -- standard groups ---------------------------------------------------------

CayleyGroup cyclic_group(int n) {
  require(n >= 1, "cyclic_group: n must be positive");
  std::vector<Elem> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return CayleyGroup::from_trusted_table(n, std::move(t), "C" + std::to_string(n));
}

CayleyGroup abelian_group(const std::vector<int>& orders) {
  int n = 1;
  for (int o : orders) {
    require(o >= 1, "abelian_group: orders must be positive");
    n *= o;
  }
  std::vector<Elem> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int x = a, y = b, r = 0, stride = 1;
      for (int o : orders) {
        r += ((x % o + y % o) % o) * stride;
        x /= o;
        y /= o;
        stride *= o;
      }
      t[static_cast<std::size_t>(a) * n + b] = r;
    }
  return CayleyGroup::from_trusted_table(n, std::move(t));
}

namespace {

CayleyGroup perm_table_group(int deg, bool even_only) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p = identity_perm(deg);
  do {
    int inversions = 0;
    for (int i = 0; i < deg; ++i)
      for (int j = i + 1; j < deg; ++j)
        if (p[i] > p[j]) ++inversions;
    if (!even_only || inversions % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  const int n = static_cast<int>(perms.size());
  std::vector<Elem> t(static_cast<std::size_t>(n) * n);
  std::vector<int> r(deg);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // first a, then b
      for (int x = 0; x < deg; ++x) r[x] = perms[b][perms[a][x]];
      t[static_cast<std::size_t>(a) * n + b] = index.at(r);
    }
  return CayleyGroup::from_trusted_table(n, std::move(t));
}

}  // namespace

CayleyGroup symmetric_group(int n) {
  require(n >= 1 && n <= 7, "symmetric_group: degree must be in 1..7");
  auto G = perm_table_group(n, false);
  G.set_name("Sym(" + std::to_string(n) + ")");
  return G;
}

CayleyGroup alternating_group(int n) {
  require(n >= 1 && n <= 7, "alternating_group: degree must be in 1..7");
  auto G = perm_table_group(n, true);
  G.set_name("Alt(" + std::to_string(n) + ")");
  return G;
}

// -- file format -------------------------------------------------------------

CayleyGroup read_group(std::istream& in, const ValidationOptions& opts) {
  std::string line, name;
  int n = -1;
  std::vector<Elem> entries;
  while (std::getline(in, line)) {
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::istringstream hs(line.substr(first + 1));
      std::string key;
      hs >> key;
      if (key == "name") {
        std::getline(hs >> std::ws, name);
        while (!name.empty() && (name.back() == '\r' || name.back() == ' ')) name.pop_back();
      }
      continue;
    }
    std::istringstream ls(line);
    if (n < 0) {
      std::string key;
      ls >> key >> n;
      if (key != "order" || !ls || n < 1) throw InvalidInput("group file: expected 'order <n>'");
      entries.reserve(static_cast<std::size_t>(n) * n);
      continue;
    }
    long long v;
    while (ls >> v) entries.push_back(static_cast<Elem>(v));
    if (!ls.eof()) throw InvalidInput("group file: non-numeric table entry");
  }
  if (n < 0) throw InvalidInput("group file: missing 'order' line");
  if (entries.size() != static_cast<std::size_t>(n) * n)
    throw InvalidInput("group file: expected " + std::to_string(n * n) + " entries, got " +
                       std::to_string(entries.size()));
  return CayleyGroup::from_table(n, std::move(entries), name, opts);
}

CayleyGroup read_group_file(const std::string& path, const ValidationOptions& opts) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open group file: " + path);
  return read_group(in, opts);
}

void write_group(std::ostream& out, const CayleyGroup& G) {
  const int n = G.order();
  out << "order " << n << '\n';
  if (!G.name().empty()) out << "# name " << G.name() << '\n';
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (b) out << ' ';
      out << G.mul(a, b);
    }
    out << '\n';
  }
}

}  // namespace agrp
