#include "agrp/transport.hpp"

#include <algorithm>
#include <set>

#include "agrp/transporter.hpp"

namespace agrp {

namespace {

void check_instance(const PermGroup& P, const Representation& alpha, const Representation& beta) {
  const CayleyGroup& H = alpha.group();
  require(alpha.group_ptr() == beta.group_ptr() || alpha.group().order() == beta.group().order(),
          "transport: representations of different groups");
  require(alpha.shape() == beta.shape(), "transport: representations on different modules");
  require(P.degree() == H.order(), "transport: P must act on the elements of H");
  const auto gens = whole_group(H).generators;
  for (const Perm& g : P.generators()) {
    require(g[0] == 0, "transport: generator of P moves the identity");
    for (Elem x = 0; x < H.order(); ++x)
      for (Elem s : gens)
        require(g[H.mul(x, s)] == H.mul(g[x], g[s]), "transport: generator of P is not an automorphism of H");
  }
}

// Constituent classes met so far, identified up to equivalence.
class ClassTable {
 public:
  int find_or_add(const Representation& r) {
    for (std::size_t i = 0; i < reps_.size(); ++i)
      if (reps_[i] == r || detail::equivalent_unchecked(reps_[i], r)) return static_cast<int>(i);
    reps_.push_back(r);
    return static_cast<int>(reps_.size()) - 1;
  }
  int size() const { return static_cast<int>(reps_.size()); }
  const Representation& operator[](int i) const { return reps_[i]; }

 private:
  std::vector<Representation> reps_;
};

Coset transport_elementary_subgroup(const PermGroup& Q, const Representation& alpha, const Representation& beta) {
  const int n = alpha.group().order();
  if (alpha.shape().rank() == 0) return Coset::of(Q);
  const Decomposition da = decompose(alpha), db = decompose(beta);

  ClassTable omega;
  std::vector<int> mult_a, mult_b;
  auto note = [&](std::vector<int>& mult, int cls, int m) {
    if (static_cast<int>(mult.size()) <= cls) mult.resize(cls + 1, 0);
    mult[cls] += m;
  };
  for (const auto& c : da.classes) note(mult_a, omega.find_or_add(c.rep), c.multiplicity);
  for (const auto& c : db.classes) note(mult_b, omega.find_or_add(c.rep), c.multiplicity);

  // close Ω under the generators of Q
  std::vector<std::vector<int>> action(Q.generators().size());
  for (int w = 0; w < omega.size(); ++w) {
    ensure(omega.size() <= n, "transport: more constituent classes than elements of H");
    for (std::size_t g = 0; g < Q.generators().size(); ++g) {
      const int img = omega.find_or_add(act_by_autH(omega[w], Q.generators()[g]));
      action[g].push_back(img);
    }
  }
  const int k = omega.size();
  ensure(k <= n, "transport: more constituent classes than elements of H");
  mult_a.resize(k, 0);
  mult_b.resize(k, 0);

  std::vector<Perm> ext;
  for (std::size_t g = 0; g < Q.generators().size(); ++g) {
    Perm p = Q.generators()[g];
    for (int w = 0; w < k; ++w) p.push_back(n + action[g][w]);
    ensure(perm_is_bijection(p), "transport: class action is not a permutation");
    ext.push_back(std::move(p));
  }
  const PermGroup E(n + k, ext);

  // distinct nonzero multiplicities get letters 1..l-1, multiplicity 0 is last
  std::set<int> values;
  for (int w = 0; w < k; ++w) {
    if (mult_a[w]) values.insert(mult_a[w]);
    if (mult_b[w]) values.insert(mult_b[w]);
  }
  const std::vector<int> sorted(values.begin(), values.end());
  const int background = static_cast<int>(sorted.size()) + 1;
  auto letter = [&](int m) {
    if (m == 0) return background;
    return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), m) - sorted.begin()) + 1;
  };
  GroupString fa{std::vector<int>(n + k, background), background};
  GroupString fb = fa;
  for (int w = 0; w < k; ++w) {
    fa.letters[n + w] = letter(mult_a[w]);
    fb.letters[n + w] = letter(mult_b[w]);
  }

  const Coset iso = string_isomorphisms(E, fa, fb);
  if (iso.empty) return Coset::none(n);
  auto restrict = [n](const Perm& p) { return Perm(p.begin(), p.begin() + n); };
  std::vector<Perm> gens;
  for (const Perm& g : iso.subgroup.generators()) gens.push_back(restrict(g));
  return Coset{PermGroup(n, gens), restrict(iso.representative), false};
}

template <class Step>
Coset on_coset(const Coset& C, const Representation& alpha, const Representation& beta, Step step) {
  if (C.empty) return C;
  check_instance(C.subgroup, alpha, beta);
  // (Q·r)_{α→β} = Q_{α→β^{r^{-1}}}·r
  const Coset inner = step(C.subgroup, alpha, act_by_autH(beta, perm_inv(C.representative)));
  return inner.right_mul(C.representative);
}

Coset transport_general_subgroup(const PermGroup& Q, const Representation& alpha, const Representation& beta) {
  if (alpha.shape().rank() == 0) return Coset::of(Q);
  const HomocyclicDecomposition D = homocyclic_decomposition(alpha.shape());
  require(alpha.group().order() % D.p != 0, "transport: p divides |H|");
  Coset cur = Coset::of(Q);
  for (std::size_t c = 0; c < D.components.size() && !cur.empty; ++c) {
    const int i = static_cast<int>(c);
    const Coset next = on_coset(cur, lambda_component(alpha, D, i), lambda_component(beta, D, i),
                                transport_elementary_subgroup);
    ensure(next.empty || next.subgroup.is_subgroup_of(cur.subgroup), "transport: chain is not decreasing");
    cur = next;
  }
  return cur;
}

}  // namespace

Coset transport_elementary(const Coset& C, const Representation& alpha, const Representation& beta) {
  require(is_elementary(alpha.shape()) || alpha.shape().rank() == 0, "transport_elementary: A is not elementary");
  if (alpha.shape().rank() > 0)
    require(alpha.group().order() % alpha.shape().moduli[0] != 0, "transport: p divides |H|");
  return on_coset(C, alpha, beta, transport_elementary_subgroup);
}

Coset transport_elementary(const PermGroup& P, const Representation& alpha, const Representation& beta) {
  return transport_elementary(Coset::of(P), alpha, beta);
}

Coset transport_general(const Coset& C, const Representation& alpha, const Representation& beta) {
  return on_coset(C, alpha, beta, transport_general_subgroup);
}

Coset transport_general(const PermGroup& P, const Representation& alpha, const Representation& beta) {
  return transport_general(Coset::of(P), alpha, beta);
}

}  // namespace agrp
