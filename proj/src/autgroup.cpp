#include "agrp/autgroup.hpp"

#include <algorithm>
#include <functional>

#include "agrp/representation.hpp"
#include "agrp/transport.hpp"
#include "image_search.hpp"

namespace agrp {

const char* method_name(AutMethod m) {
  switch (m) {
    case AutMethod::Recursive: return "recursive";
    case AutMethod::BruteForceBase: return "brute-force-base";
    case AutMethod::AbelianBase: return "abelian-base";
    case AutMethod::Trivial: return "trivial";
  }
  return "?";
}

namespace {

bool preserves_products(const CayleyGroup& G, const Perm& f, std::span<const Elem> gens) {
  for (Elem x = 0; x < G.order(); ++x)
    for (Elem s : gens)
      if (f[G.mul(x, s)] != G.mul(f[x], f[s])) return false;
  return true;
}

}  // namespace

bool verify_automorphisms(const CayleyGroup& G, const PermGroup& P) {
  if (P.degree() != G.order()) return false;
  for (const Perm& f : P.generators()) {
    if (!perm_is_bijection(f)) return false;
    for (Elem a = 0; a < G.order(); ++a)
      for (Elem b = 0; b < G.order(); ++b)
        if (f[G.mul(a, b)] != G.mul(f[a], f[b])) return false;
  }
  return true;
}

PermGroup aut_abelian(const CayleyGroup& A) {
  require(is_abelian(A), "aut_abelian: group is not abelian");
  const AbelianBasis B = abelian_basis(A);
  std::vector<Perm> gens;
  for (const auto& M : aut_generators(B.shape)) gens.push_back(matrix_to_endo(B, M));
  return PermGroup(A.order(), std::move(gens));
}

PermGroup lift_aut(const CayleyGroup& G, const CharComplement& cc, const PermGroup& autH,
                   const IntertwinerOptions& opts, bool* randomized) {
  require(cc.p > 0 && log_p(cc.A.order(), cc.p) >= 0, "lift_aut: A is not a p-group");
  const ConjugationRep cr = conjugation_rep(G, cc.A, cc.H);
  const CayleyGroup& H = cr.H.group;
  const Representation& alpha = cr.rep;
  require(autH.degree() == H.order(), "lift_aut: Aut(H) acts on the wrong set");
  const std::int64_t p = cc.p;

  // K = ⟨p-elements of H⟩ acts trivially; ᾱ on H̄ = H/K
  const Subgroup K = subgroup_generated_by_p_elements(H, p);
  const Quotient Q = quotient(H, K);
  for (Elem k : K.elements) ensure(alpha(k) == HomMatrix::identity(alpha.shape()), "lift_aut: p-element acts nontrivially");
  auto Hbar = std::make_shared<const CayleyGroup>(Q.group);
  std::vector<HomMatrix> bar_images;
  for (Elem x = 0; x < Hbar->order(); ++x) bar_images.push_back(alpha(Q.coset_rep[x]));
  const Representation abar(Hbar, alpha.shape(), std::move(bar_images));

  // η ↦ η̄, with kernel C and image P
  std::vector<Perm> images;
  for (const Perm& eta : autH.generators()) {
    Perm bar(Hbar->order());
    for (Elem x = 0; x < Hbar->order(); ++x) bar[x] = Q.projection.images[eta[Q.coset_rep[x]]];
    images.push_back(std::move(bar));
  }
  const TrackedHom bar_map(H.order(), autH.generators(), images, Hbar->order());
  const Coset stab = transport_general(bar_map.image(), abar, abar);
  ensure(!stab.empty && stab.contains(perm_identity(Hbar->order())), "lift_aut: ᾱ is not self-transporting");

  std::vector<Perm> SH;
  for (const Perm& g : stab.subgroup.generators()) SH.push_back(bar_map.preimage(g));
  for (const Perm& c : bar_map.kernel().generators()) SH.push_back(c);

  // a·h decomposition of G
  const int na = cr.A.group.order(), nh = H.order();
  std::vector<std::pair<Elem, Elem>> parts(G.order(), {-1, -1});
  for (Elem a = 0; a < na; ++a)
    for (Elem h = 0; h < nh; ++h) parts[G.mul(cr.A.to_parent[a], cr.H.to_parent[h])] = {a, h};
  auto assemble = [&](const HomMatrix& nu, const Perm& eta) {
    const std::vector<Elem> nu_el = matrix_to_endo(cr.basis, nu);
    Perm f(G.order());
    for (Elem g = 0; g < G.order(); ++g) {
      const auto [a, h] = parts[g];
      f[g] = G.mul(cr.A.to_parent[nu_el[a]], cr.H.to_parent[eta[h]]);
    }
    return f;
  };

  std::vector<Perm> gens;
  const IntertwiningCoset self = intertwining_coset(alpha, alpha, opts);
  if (randomized && self.randomized) *randomized = true;
  const Perm id_h = perm_identity(nh);
  for (const auto& u : self.unit_generators) gens.push_back(assemble(u, id_h));
  for (const Perm& eta : SH) {
    // (ν, η) ∈ S iff α^ν = α∘η
    const auto nu = module_isomorphism(alpha, act_by_autH(alpha, perm_inv(eta)), opts);
    ensure(nu.has_value(), "lift_aut: no ν for a generator of S_H");
    gens.push_back(assemble(*nu, eta));
  }
  for (Elem x : whole_group(G).generators) {
    Perm iota(G.order());
    for (Elem g = 0; g < G.order(); ++g) iota[g] = G.conj(g, x);
    gens.push_back(std::move(iota));
  }
  const auto ggens = whole_group(G).generators;
  for (const Perm& f : gens) ensure(preserves_products(G, f, ggens), "lift_aut: assembled map is not an automorphism");
  return PermGroup(G.order(), std::move(gens));
}

std::uint64_t default_node_budget(int order) {
  const std::uint64_t cap = std::uint64_t{1} << 62;
  int k = 0;
  while ((1 << k) < order) ++k;
  std::uint64_t b = 1;
  for (int i = 0; i < k; ++i) {
    if (b > cap / static_cast<std::uint64_t>(order)) return cap;
    b *= static_cast<std::uint64_t>(order);
  }
  return std::max<std::uint64_t>(b, 1024);
}

namespace {

using detail::ImageSearch;

// Some completion of the current partial map, or false.
bool find_completion(ImageSearch& s, int order_h) {
  if (s.depth() == s.generator_count()) return s.complete();
  for (Elem v = 0; v < order_h; ++v) {
    if (!s.push(v)) continue;
    if (find_completion(s, order_h)) return true;
    s.pop();
  }
  return false;
}

}  // namespace

PermGroup aut_bruteforce(const CayleyGroup& G, std::uint64_t budget, std::uint64_t* nodes) {
  if (budget == 0) budget = default_node_budget(G.order());
  const auto gens = small_generating_set(G);
  const int k = static_cast<int>(gens.size());
  ImageSearch s(G, G, gens, budget);
  // U_j fixes g_1..g_{j-1}; built from the innermost level outwards
  PermGroup U = PermGroup::trivial(G.order());
  for (int j = k - 1; j >= 0; --j) {
    for (int i = 0; i < j; ++i) ensure(s.push(gens[i]), "aut_bruteforce: identity prefix rejected");
    std::vector<char> reached(G.order(), 0);
    auto mark_orbit = [&] {
      std::fill(reached.begin(), reached.end(), 0);
      for (int x : pointwise_stabilizer(U, std::span<const Elem>(gens.data(), j)).orbit(gens[j])) reached[x] = 1;
    };
    mark_orbit();
    for (Elem v = 0; v < G.order(); ++v) {
      if (reached[v] || G.elem_order(v) != G.elem_order(gens[j])) continue;
      if (!s.push(v)) continue;
      if (find_completion(s, G.order())) {
        Perm f = s.map();
        while (s.depth() > j + 1) s.pop();
        U = U.with_generators(std::span<const Perm>(&f, 1));
        mark_orbit();
      }
      s.pop();
    }
    while (s.depth() > 0) s.pop();
  }
  if (nodes) *nodes = s.nodes();
  return PermGroup(G.order(), U.generators());
}

AutResult aut_agroup(const CayleyGroup& G, const AutOptions& opts) {
  require(is_agroup(G), "aut_agroup: G is not an A-group");
  AutResult r{PermGroup::trivial(G.order()), AutMethod::Trivial, {}, false};
  if (G.order() == 1) {
    r.levels.push_back({1, AutMethod::Trivial});
    return r;
  }
  if (opts.abelian_base && is_abelian(G)) {
    r.aut = aut_abelian(G);
    r.method = AutMethod::AbelianBase;
    r.levels.push_back({G.order(), r.method});
    return r;
  }
  if (solvable_radical(G).is_trivial()) {
    r.aut = aut_bruteforce(G, opts.bruteforce_budget);
    r.method = AutMethod::BruteForceBase;
    r.levels.push_back({G.order(), r.method});
    return r;
  }
  const CharComplement cc = characteristic_complement(G);
  ensure(cc.H.order() < G.order(), "aut_agroup: complement is not smaller than G");
  const EmbeddedGroup EH = embed(G, cc.H);
  AutResult sub = aut_agroup(EH.group, opts);
  bool randomized = sub.randomized;
  r.aut = lift_aut(G, cc, sub.aut, opts.intertwiner, &randomized);
  r.method = AutMethod::Recursive;
  r.randomized = randomized;
  r.levels.push_back({G.order(), r.method, cc.H.order(), cc.p});
  for (const auto& l : sub.levels) r.levels.push_back(l);
  return r;
}

}  // namespace agrp
