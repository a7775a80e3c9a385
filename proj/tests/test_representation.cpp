#include <gtest/gtest.h>

#include <map>
#include <numeric>

#include "agrp/representation.hpp"
#include "module_oracles.hpp"
#include "oracles.hpp"

using namespace agrp;

namespace {

std::shared_ptr<const CayleyGroup> cyc(int n) { return std::make_shared<const CayleyGroup>(cyclic_group(n)); }

ModuleShape elab(int p, int m) { return ModuleShape{std::vector<int>(m, p)}; }

// C_n acting through its generator 1 by X.
Representation cyclic_rep(int n, const ModuleShape& s, std::vector<std::vector<std::int64_t>> X) {
  Elem g[1] = {1};
  HomMatrix M[1] = {HomMatrix::from_rows(s, X)};
  return Representation::from_generators(cyc(n), s, g, M);
}

std::set<oracle::Vec> as_set(const Subspace& W) {
  std::set<oracle::Vec> out;
  ModuleShape s = elab(static_cast<int>(W.p), W.ambient);
  for (int x : W.element_indices()) out.insert(s.vector(x));
  return out;
}

// random matrix of order dividing n
HomMatrix random_order_dividing(const ModuleShape& s, int n, Rng& rng) {
  while (true) {
    HomMatrix M = HomMatrix::zero(s);
    for (auto& x : M.m.data) x = static_cast<std::int64_t>(rng.below(s.moduli[0]));
    if (!oracle::is_bijective_matrix(M)) continue;
    HomMatrix P = HomMatrix::identity(s);
    for (int i = 0; i < n; ++i) P = hom_mul(P, M);
    if (P == HomMatrix::identity(s)) return M;
  }
}

HomMatrix random_invertible(const ModuleShape& s, Rng& rng) {
  while (true) {
    HomMatrix M = HomMatrix::zero(s);
    for (auto& x : M.m.data) x = static_cast<std::int64_t>(rng.below(s.moduli[0]));
    if (oracle::is_bijective_matrix(M)) return M;
  }
}

Elem perm_index(int n, std::vector<int> images) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Elem idx = 0;
  do {
    if (p == images) return idx;
    ++idx;
  } while (std::next_permutation(p.begin(), p.end()));
  return -1;
}

}  // namespace

TEST(Representation, ValidationAndKernel) {
  auto s = elab(3, 1);
  auto a = cyclic_rep(4, s, {{2}});
  EXPECT_EQ(a.kernel().order(), 2);  // ·2 has order 2 in F3^x
  EXPECT_EQ(a(2), HomMatrix::identity(s));
  std::vector<HomMatrix> bad(4, HomMatrix::identity(s));
  bad[1] = HomMatrix::from_rows(s, {{2}});
  EXPECT_THROW(Representation(cyc(4), s, bad), InvalidInput);
  // a generator of C3 cannot act with order 2
  EXPECT_THROW(cyclic_rep(3, s, {{2}}), InvalidInput);
}

TEST(Representation, ConjugationDirectProduct) {
  auto P = direct_product(cyclic_group(3), cyclic_group(4));
  auto A = subgroup_from_elements(P.group, P.embed_first);
  auto H = subgroup_from_elements(P.group, P.embed_second);
  auto c = conjugation_rep(P.group, A, H);
  EXPECT_EQ(c.rep.kernel().order(), 4);
}

TEST(Representation, ConjugationAlt4) {
  auto G = alternating_group(4);
  auto V = sylow_subgroup(G, 2);
  auto H = sylow_subgroup(G, 3);
  auto c = conjugation_rep(G, V, H);
  EXPECT_TRUE(c.rep.kernel().is_trivial());
  // direct conjugation in the table agrees with the matrices
  for (Elem h = 0; h < 3; ++h)
    for (Elem a = 0; a < 4; ++a) {
      const Elem ap = c.A.to_parent[a], hp = c.H.to_parent[h];
      const Elem direct = c.A.from_parent[G.mul(G.mul(G.inv(hp), ap), hp)];
      EXPECT_EQ(c.basis.element(c.rep(h).apply(c.basis.coords(a))), direct);
    }
  EXPECT_THROW(conjugation_rep(G, H, V), InvalidInput);
}

TEST(Representation, ConjugationC7C3) {
  std::vector<std::vector<Elem>> act(3, std::vector<Elem>(7));
  for (int h = 0, m = 1; h < 3; ++h, m = m * 2 % 7)
    for (int a = 0; a < 7; ++a) act[h][a] = a * m % 7;
  auto P = semidirect_product(cyclic_group(7), cyclic_group(3), act);
  auto A = subgroup_from_elements(P.group, P.embed_first);
  auto H = subgroup_from_elements(P.group, P.embed_second);
  auto c = conjugation_rep(P.group, A, H);
  EXPECT_TRUE(c.rep.kernel().is_trivial());
  std::set<std::int64_t> scalars;
  for (Elem h = 0; h < 3; ++h) scalars.insert(c.rep(h).at(0, 0));
  EXPECT_EQ(scalars, (std::set<std::int64_t>{1, 2, 4}));
}

TEST(Representation, ActionsCommute) {
  auto G = alternating_group(4);
  auto c = conjugation_rep(G, sylow_subgroup(G, 2), sylow_subgroup(G, 3));
  const auto& H = c.rep.group();
  auto autA = oracle::all_automorphisms(c.rep.shape());
  ASSERT_EQ(autA.size(), 6u);
  auto autH = oracle::all_automorphisms(H);
  ASSERT_EQ(autH.size(), 2u);
  EXPECT_EQ(act_by_autA(c.rep, HomMatrix::identity(c.rep.shape())), c.rep);
  Rng rng(4);
  for (int t = 0; t < 100; ++t) {
    const auto& psi = autA[rng.below(autA.size())];
    const auto& phi = autH[rng.below(autH.size())];
    // start from a random conjugate so that the triples vary
    auto a = act_by_autA(c.rep, autA[rng.below(autA.size())]);
    auto x = act_by_autH(act_by_autA(a, psi), phi);
    auto y = act_by_autA(act_by_autH(a, phi), psi);
    EXPECT_EQ(x, y);
  }
  // ψ centralizing the image leaves α unchanged
  for (Elem h = 0; h < H.order(); ++h) EXPECT_EQ(act_by_autA(c.rep, c.rep(h)), c.rep);
}

TEST(Representation, IrreducibleSubmoduleExamples) {
  auto s = elab(2, 2);
  auto rot = cyclic_rep(3, s, {{0, 1}, {1, 1}});
  auto irr = irreducible_submodules(rot);
  ASSERT_EQ(irr.size(), 1u);
  EXPECT_EQ(irr[0].dim(), 2);
  // none of the three lines is invariant
  for (int x = 1; x < 4; ++x) EXPECT_NE(rot(1).apply(s.vector(x)), s.vector(x));
  EXPECT_TRUE(is_irreducible(rot));

  auto triv = Representation::trivial(cyc(3), s);
  EXPECT_EQ(irreducible_submodules(triv).size(), 3u);
  EXPECT_FALSE(is_irreducible(triv));

  auto one = cyclic_rep(4, elab(5, 1), {{2}});
  auto irr1 = irreducible_submodules(one);
  ASSERT_EQ(irr1.size(), 1u);
  EXPECT_EQ(irr1[0].dim(), 1);

  EXPECT_THROW(irreducible_submodules(Representation::trivial(cyc(2), ModuleShape{{4}})), InvalidInput);
}

TEST(Representation, IrreducibleSubmodulesVsEnumeration) {
  Rng rng(7);
  struct Case {
    int n, p, m;
  };
  for (Case c : {Case{3, 2, 3}, Case{2, 3, 2}, Case{4, 5, 2}, Case{3, 2, 4}, Case{2, 2, 3}, Case{6, 7, 2}}) {
    auto s = elab(c.p, c.m);
    for (int t = 0; t < 4; ++t) {
      HomMatrix X = random_order_dividing(s, c.n, rng);
      Elem g[1] = {1};
      auto a = Representation::from_generators(cyc(c.n), s, g, std::span<const HomMatrix>(&X, 1));
      std::set<std::set<oracle::Vec>> got;
      for (const auto& W : irreducible_submodules(a)) got.insert(as_set(W));
      EXPECT_EQ(got, oracle::irreducible_submodules(a));
    }
  }
}

TEST(Representation, EquivalenceExamples) {
  auto s = elab(3, 1);
  auto plus = Representation::trivial(cyc(2), s);
  auto minus = cyclic_rep(2, s, {{2}});
  EXPECT_FALSE(irreducible_equivalent(plus, minus).has_value());
  // both elements of Aut(F3) fail
  EXPECT_TRUE(oracle::intertwiners(plus, minus, oracle::all_automorphisms(s)).empty());
  auto self = irreducible_equivalent(minus, minus);
  ASSERT_TRUE(self.has_value());
  EXPECT_TRUE(oracle::intertwines(minus, minus, *self));

  auto rot = cyclic_rep(3, elab(2, 2), {{0, 1}, {1, 1}});
  for (const auto& psi : oracle::all_automorphisms(rot.shape())) {
    auto b = act_by_autA(rot, psi);
    auto f = irreducible_equivalent(rot, b);
    ASSERT_TRUE(f.has_value());
    EXPECT_EQ(act_by_autA(rot, *f), b);
  }
  EXPECT_THROW(irreducible_equivalent(Representation::trivial(cyc(3), elab(2, 2)), rot), InvalidInput);
}

TEST(Representation, EquivalenceVsBruteForce) {
  Rng rng(9);
  auto s = elab(2, 3);
  const auto auts = oracle::all_automorphisms(s);
  ASSERT_EQ(auts.size(), 168u);
  // C7 on F2^3: the two irreducible 3-dimensional classes
  std::vector<Representation> irr;
  for (int t = 0; t < 40 && irr.size() < 6; ++t) {
    HomMatrix X = random_order_dividing(s, 7, rng);
    if (X == HomMatrix::identity(s)) continue;
    Elem g[1] = {1};
    irr.push_back(Representation::from_generators(cyc(7), s, g, std::span<const HomMatrix>(&X, 1)));
  }
  for (const auto& a : irr) ASSERT_TRUE(is_irreducible(a));
  for (const auto& a : irr)
    for (const auto& b : irr) {
      auto f = irreducible_equivalent(a, b);
      EXPECT_EQ(f.has_value(), !oracle::intertwiners(a, b, auts).empty());
      if (f) {
        EXPECT_TRUE(oracle::intertwines(a, b, *f));
      }
    }
}

TEST(Representation, DecomposeExamples) {
  auto triv = decompose(Representation::trivial(cyc(3), elab(2, 3)));
  ASSERT_EQ(triv.classes.size(), 1u);
  EXPECT_EQ(triv.classes[0].multiplicity, 3);

  auto diag = decompose(cyclic_rep(2, elab(3, 2), {{1, 0}, {0, 2}}));
  ASSERT_EQ(diag.classes.size(), 2u);
  EXPECT_EQ(diag.classes[0].multiplicity, 1);
  EXPECT_EQ(diag.classes[1].multiplicity, 1);

  auto rot = decompose(cyclic_rep(3, elab(2, 2), {{0, 1}, {1, 1}}));
  ASSERT_EQ(rot.classes.size(), 1u);
  EXPECT_EQ(rot.classes[0].multiplicity, 1);

  EXPECT_THROW(decompose(cyclic_rep(2, elab(2, 2), {{1, 1}, {0, 1}})), InvalidInput);
}

TEST(Representation, DecomposeProperties) {
  Rng rng(21);
  struct Case {
    std::shared_ptr<const CayleyGroup> H;
    int p, m;
  };
  auto S3 = std::make_shared<const CayleyGroup>(symmetric_group(3));
  std::vector<Case> cases{{cyc(3), 2, 4}, {cyc(5), 2, 4}, {cyc(4), 5, 3}, {cyc(7), 2, 6}, {S3, 5, 2}};
  for (const auto& c : cases) {
    auto s = elab(c.p, c.m);
    for (int t = 0; t < 3; ++t) {
      std::optional<Representation> a;
      if (c.H->order() == 6) {
        // Sym(3) on F5^2 by a permutation of the coordinates, twisted
        Elem t01 = perm_index(3, {1, 0, 2}), c3 = perm_index(3, {1, 2, 0});
        Elem g[2] = {t01, c3};
        HomMatrix M[2] = {HomMatrix::from_rows(s, {{0, 1}, {1, 0}}), HomMatrix::from_rows(s, {{0, 1}, {4, 4}})};
        a = Representation::from_generators(c.H, s, g, M);
      } else {
        HomMatrix X = random_order_dividing(s, c.H->order(), rng);
        Elem g[1] = {1};
        a = Representation::from_generators(c.H, s, g, std::span<const HomMatrix>(&X, 1));
      }
      auto D = decompose(*a);
      int total = 0;
      for (std::size_t i = 0; i < D.summands.size(); ++i) total += D.summands[i].dim();
      EXPECT_EQ(total, c.m);
      int by_class = 0;
      for (const auto& k : D.classes) by_class += k.multiplicity * k.rep.shape().rank();
      EXPECT_EQ(by_class, c.m);
      EXPECT_LE(static_cast<int>(D.classes.size()), c.H->order());
      // a conjugate decomposes into matching classes
      HomMatrix psi = random_invertible(s, rng);
      auto E = decompose(act_by_autA(*a, psi));
      ASSERT_EQ(D.classes.size(), E.classes.size());
      for (const auto& k : D.classes) {
        int match = -1;
        for (std::size_t j = 0; j < E.classes.size(); ++j)
          if (irreducible_equivalent(k.rep, E.classes[j].rep)) match = static_cast<int>(j);
        ASSERT_GE(match, 0);
        EXPECT_EQ(E.classes[match].multiplicity, k.multiplicity);
      }
    }
  }
}
