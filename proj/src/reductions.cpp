#include "agrp/reductions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "agrp/abelian.hpp"
#include "agrp/autgroup.hpp"

namespace agrp {

AgenOracle default_agen() {
  return [](const CayleyGroup& X) {
    if (is_agroup(X)) return aut_agroup(X).aut;
    return aut_bruteforce(X);
  };
}

AcountOracle acount_from(AgenOracle agen) {
  return [agen = std::move(agen)](const CayleyGroup& X) { return agen(X).order(); };
}

AcountOracle acount_from_icount(IcountOracle icount) {
  return [icount = std::move(icount)](const CayleyGroup& X) { return icount(X, X); };
}

namespace {

std::vector<int> abelian_invariants(const CayleyGroup& A) {
  auto m = abelian_basis(A).shape.moduli;
  std::sort(m.begin(), m.end());
  return m;
}

std::vector<int> abelianization_invariants(const CayleyGroup& A) {
  const Quotient Q = quotient(A, derived_subgroup(A, whole_group(A)));
  return abelian_invariants(Q.group);
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > ~std::uint64_t{0} / b) throw ResourceExhausted("count exceeds 2^64");
  return a * b;
}

}  // namespace

std::uint64_t count_homs_to_abelian(const CayleyGroup& A, const CayleyGroup& B) {
  require(is_abelian(B), "count_homs_to_abelian: B is not abelian");
  std::uint64_t r = 1;
  for (int a : abelianization_invariants(A))
    for (int b : abelian_invariants(B)) r = checked_mul(r, static_cast<std::uint64_t>(gcd64(a, b)));
  return r;
}

bool invariance_check(const CayleyGroup& G, const CayleyGroup& H, const PermGroup& autGH) {
  const int nh = H.order();
  require(autGH.degree() == G.order() * nh, "invariance_check: Aut(G×H) acts on the wrong set");
  const Subgroup Z = centre(H);
  auto in_S = [&](int x) { return Z.contains(x % nh); };
  for (const Perm& f : autGH.generators())
    for (int x = 0; x < autGH.degree(); ++x)
      if (in_S(x) && !in_S(f[x])) return false;
  return true;
}

Perm bidwell_action(const CayleyGroup& G, const CayleyGroup& H, const BidwellMatrix& M) {
  const int ng = G.order(), nh = H.order();
  Perm f(static_cast<std::size_t>(ng) * nh);
  for (Elem g = 0; g < ng; ++g)
    for (Elem h = 0; h < nh; ++h)
      f[g * nh + h] = G.mul(M.alpha[g], M.beta[h]) * nh + H.mul(M.gamma[g], M.delta[h]);
  return f;
}

std::uint64_t bidwell_order(const CayleyGroup& G, const CayleyGroup& H, const AcountOracle& acount) {
  const CayleyGroup ZG = embed(G, centre(G)).group, ZH = embed(H, centre(H)).group;
  std::uint64_t r = checked_mul(acount(G), acount(H));
  r = checked_mul(r, count_homs_to_abelian(G, ZH));
  return checked_mul(r, count_homs_to_abelian(H, ZG));
}

namespace {

std::vector<Subgroup> normal_subgroups(const CayleyGroup& G, std::size_t cap = 200000) {
  std::vector<Subgroup> closures;
  for (const auto& cls : conjugacy_classes(G)) {
    const Elem x[1] = {cls.front()};
    if (x[0] != 0) closures.push_back(normal_closure(G, x));
  }
  std::set<std::vector<Elem>> seen;
  std::vector<Subgroup> out{trivial_subgroup(G)};
  seen.insert(out[0].elements);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& C : closures) {
      if (std::all_of(C.elements.begin(), C.elements.end(), [&](Elem c) { return out[i].contains(c); })) continue;
      Subgroup J = join(G, out[i], C);
      if (seen.insert(J.elements).second) {
        out.push_back(std::move(J));
        if (out.size() > cap) throw ResourceExhausted("direct_factorization: too many normal subgroups");
      }
    }
  return out;
}

std::vector<Subgroup> factor_local(const CayleyGroup& G) {
  if (G.order() == 1) return {};
  if (is_abelian(G)) {
    std::vector<Subgroup> out;
    for (Elem g : abelian_basis(G).generators) {
      const Elem x[1] = {g};
      out.push_back(closure(G, x));
    }
    return out;
  }
  auto normals = normal_subgroups(G);
  std::sort(normals.begin(), normals.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.elements < b.elements;
  });
  for (const auto& N : normals) {
    if (N.is_trivial() || N.order() == G.order()) continue;
    for (const auto& M : normals) {
      if (static_cast<std::int64_t>(N.order()) * M.order() != G.order()) continue;
      if (!intersection(G, N, M).is_trivial()) continue;
      std::vector<Subgroup> out;
      for (const Subgroup* X : {&N, &M}) {
        const EmbeddedGroup E = embed(G, *X);
        for (const auto& f : factor_local(E.group)) out.push_back(lift(G, E, f));
      }
      return out;
    }
  }
  return {whole_group(G)};
}

// Element decomposition g = x_1⋯x_k over an internal direct product.
std::vector<std::vector<Elem>> components(const CayleyGroup& G, const std::vector<Subgroup>& F) {
  std::vector<std::vector<Elem>> comp(G.order());
  std::vector<std::pair<Elem, std::vector<Elem>>> cur{{0, {}}};
  for (const auto& X : F) {
    std::vector<std::pair<Elem, std::vector<Elem>>> next;
    for (const auto& [g, parts] : cur)
      for (Elem x : X.elements) {
        auto p = parts;
        p.push_back(x);
        next.emplace_back(G.mul(g, x), std::move(p));
      }
    cur = std::move(next);
  }
  ensure(static_cast<int>(cur.size()) == G.order(), "components: factors do not multiply to G");
  for (auto& [g, parts] : cur) {
    ensure(comp[g].empty(), "components: decomposition is not unique");
    comp[g] = std::move(parts);
  }
  return comp;
}

struct Factor {
  CayleyGroup group;
  Subgroup sub;
  std::vector<Elem> to_parent;
  std::vector<Elem> from_parent;
};

std::vector<Factor> factors_of(const CayleyGroup& G) {
  std::vector<Factor> out;
  for (auto& S : direct_factorization(G)) {
    EmbeddedGroup E = embed(G, S);
    out.push_back({std::move(E.group), std::move(S), std::move(E.to_parent), std::move(E.from_parent)});
  }
  return out;
}

bool indecomposables_isomorphic(const CayleyGroup& G, const CayleyGroup& H, const AcountOracle& acount) {
  if (G.order() != H.order()) return false;
  const bool ag = is_abelian(G), ah = is_abelian(H);
  if (ag || ah) return ag && ah;  // both cyclic of the same prime-power order
  return epsilon(G, H, acount) == 2;
}

// χ(g) = π_H(ψ((g, 1))) for a generator ψ moving G×Z(H), nonabelian case.
std::optional<std::vector<Elem>> indecomposable_map(const CayleyGroup& G, const CayleyGroup& H, const AgenOracle& agen) {
  if (G.order() != H.order()) return std::nullopt;
  const bool ag = is_abelian(G), ah = is_abelian(H);
  if (ag || ah) {
    if (!(ag && ah)) return std::nullopt;
    // cyclic: generator to generator
    Elem g = 0, h = 0;
    for (Elem x = 0; x < G.order(); ++x)
      if (G.elem_order(x) == G.order()) g = x;
    for (Elem x = 0; x < H.order(); ++x)
      if (H.elem_order(x) == H.order()) h = x;
    if (G.elem_order(g) != G.order() || H.elem_order(h) != H.order()) return std::nullopt;
    std::vector<Elem> f(G.order());
    Elem x = 0, y = 0;
    for (int k = 0; k < G.order(); ++k, x = G.mul(x, g), y = H.mul(y, h)) f[x] = y;
    return f;
  }
  const Product P = direct_product(G, H);
  const PermGroup aut = agen(P.group);
  const int nh = H.order();
  const Subgroup Z = centre(H);
  for (const Perm& psi : aut.generators()) {
    bool moves = false;
    for (int x = 0; x < P.group.order() && !moves; ++x)
      if (Z.contains(x % nh) && !Z.contains(psi[x] % nh)) moves = true;
    if (!moves) continue;
    std::vector<Elem> chi(G.order());
    for (Elem g = 0; g < G.order(); ++g) chi[g] = psi[g * nh] % nh;
    GroupHom hom{H.order(), chi};
    ensure(is_homomorphism(G, H, hom) && is_bijective(hom), "grp_imap: χ is not an isomorphism");
    return chi;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Subgroup> direct_factorization(const CayleyGroup& G, int max_order) {
  if (G.order() > max_order) throw ResourceExhausted("direct_factorization: group exceeds the order cap");
  return factor_local(G);
}

int epsilon(const CayleyGroup& G, const CayleyGroup& H, const AcountOracle& acount) {
  const std::uint64_t whole = acount(direct_product(G, H).group);
  const std::uint64_t base = bidwell_order(G, H, acount);
  if (whole == base) return 1;
  if (whole == 2 * base) return 2;
  throw InternalError("epsilon: |Aut(G×H)| does not match the counting identity");
}

bool grp_iso(const CayleyGroup& G, const CayleyGroup& H, const AcountOracle& acount) {
  if (G.order() != H.order()) return false;
  const bool ag = is_abelian(G), ah = is_abelian(H);
  if (ag || ah) return ag && ah && abelian_invariants(G) == abelian_invariants(H);
  const auto fg = factors_of(G), fh = factors_of(H);
  if (fg.size() != fh.size()) return false;
  std::vector<char> used(fh.size(), 0);
  for (const auto& a : fg) {
    bool matched = false;
    for (std::size_t j = 0; j < fh.size() && !matched; ++j)
      if (!used[j] && indecomposables_isomorphic(a.group, fh[j].group, acount)) used[j] = matched = true;
    if (!matched) return false;
  }
  return true;
}

std::optional<std::vector<Elem>> grp_imap(const CayleyGroup& G, const CayleyGroup& H, const AgenOracle& agen) {
  if (G.order() != H.order()) return std::nullopt;
  const auto fg = factors_of(G), fh = factors_of(H);
  if (fg.size() != fh.size()) return std::nullopt;
  std::vector<char> used(fh.size(), 0);
  std::vector<std::vector<Elem>> maps(fg.size());
  std::vector<Subgroup> targets(fg.size());
  for (std::size_t i = 0; i < fg.size(); ++i) {
    for (std::size_t j = 0; j < fh.size() && maps[i].empty(); ++j) {
      if (used[j]) continue;
      auto chi = indecomposable_map(fg[i].group, fh[j].group, agen);
      if (!chi) continue;
      used[j] = 1;
      maps[i].resize(chi->size());
      for (std::size_t x = 0; x < chi->size(); ++x) maps[i][x] = fh[j].to_parent[(*chi)[x]];
      targets[i] = fh[j].sub;
    }
    if (maps[i].empty()) return std::nullopt;
  }
  std::vector<Subgroup> subs;
  for (const auto& f : fg) subs.push_back(f.sub);
  const auto comp = components(G, subs);
  std::vector<Elem> phi(G.order());
  for (Elem g = 0; g < G.order(); ++g) {
    Elem y = 0;
    for (std::size_t i = 0; i < fg.size(); ++i) {
      const Elem local = fg[i].from_parent[comp[g][i]];
      y = H.mul(y, maps[i][local]);
    }
    phi[g] = y;
  }
  GroupHom hom{H.order(), phi};
  ensure(is_homomorphism(G, H, hom) && is_bijective(hom), "grp_imap: assembled map is not an isomorphism");
  return phi;
}

std::uint64_t grp_icount(const CayleyGroup& G, const CayleyGroup& H, const AcountOracle& acount) {
  return grp_iso(G, H, acount) ? acount(G) : 0;
}

std::uint64_t grp_acount(const CayleyGroup& G, const AgenOracle& agen) { return agen(G).order(); }

std::vector<std::vector<Elem>> grp_apart(const CayleyGroup& G, const AgenOracle& agen) {
  const PermGroup P = agen(G);
  std::vector<int> parent(G.order());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const Perm& f : P.generators())
    for (Elem x = 0; x < G.order(); ++x) {
      const int a = find(x), b = find(f[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<int, std::vector<Elem>> orbits;
  for (Elem x = 0; x < G.order(); ++x) orbits[find(x)].push_back(x);
  std::vector<std::vector<Elem>> out;
  for (auto& [k, v] : orbits) out.push_back(std::move(v));
  return out;
}

}  // namespace agrp
