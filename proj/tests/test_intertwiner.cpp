#include <gtest/gtest.h>

#include <set>

#include "agrp/intertwiner.hpp"
#include "module_oracles.hpp"
#include "oracles.hpp"

using namespace agrp;

namespace {

using GroupPtr = std::shared_ptr<const CayleyGroup>;

GroupPtr share(CayleyGroup G) { return std::make_shared<const CayleyGroup>(std::move(G)); }

ModuleShape elab(int p, int m) { return ModuleShape{std::vector<int>(m, p)}; }

Representation cyclic_rep(int n, const ModuleShape& s, std::vector<std::vector<std::int64_t>> X) {
  Elem g[1] = {1};
  HomMatrix M[1] = {HomMatrix::from_rows(s, X)};
  return Representation::from_generators(share(cyclic_group(n)), s, g, M);
}

Representation random_rep(const GroupPtr& H, const ModuleShape& s, const std::vector<HomMatrix>& autA, Rng& rng) {
  const auto gens = small_generating_set(*H);
  for (int t = 0; t < 100000; ++t) {
    std::vector<HomMatrix> img;
    for (std::size_t i = 0; i < gens.size(); ++i) img.push_back(autA[rng.below(autA.size())]);
    try {
      return Representation::from_generators(H, s, gens, img);
    } catch (const InvalidInput&) {
    }
  }
  ADD_FAILURE() << "no random representation found";
  return Representation::trivial(H, s);
}

// permutation of mixed-radix indices, computed entrywise
Perm naive_perm(const HomMatrix& M) {
  const auto vecs = oracle::all_vectors(M.shape);
  Perm p(vecs.size());
  for (std::size_t x = 0; x < vecs.size(); ++x) p[M.shape.index(vecs[x])] = M.shape.index(oracle::row_times(vecs[x], M));
  return p;
}

std::set<Perm> brute_coset(const Representation& a, const Representation& b, const std::vector<HomMatrix>& autA) {
  std::set<Perm> out;
  for (const auto& psi : oracle::intertwiners(a, b, autA)) out.insert(naive_perm(psi));
  return out;
}

std::set<Perm> as_set(const Coset& C) {
  auto v = coset_elements(C);
  return {v.begin(), v.end()};
}

std::set<std::vector<std::int64_t>> module_elements(const HomModule& K) {
  std::set<std::vector<std::int64_t>> out;
  for (std::uint64_t k = 0; k < *K.size(); ++k) out.insert(K.element(k).m.data);
  return out;
}

std::set<std::vector<std::int64_t>> brute_hom(const Representation& a, const Representation& b) {
  std::set<std::vector<std::int64_t>> out;
  oracle::for_each_endo(a.shape(), [&](const HomMatrix& M) {
    for (Elem h = 0; h < a.group().order(); ++h)
      if (!oracle::commutes(a(h), b(h), M, M)) return;
    out.insert(M.m.data);
  });
  return out;
}

struct Case {
  CayleyGroup H;
  ModuleShape A;
};

std::vector<Case> cases() {
  std::vector<Case> c;
  c.push_back({cyclic_group(2), elab(3, 2)});
  c.push_back({cyclic_group(2), elab(2, 2)});  // p | |H|
  c.push_back({cyclic_group(4), elab(2, 3)});
  c.push_back({cyclic_group(3), elab(2, 3)});
  c.push_back({symmetric_group(3), elab(3, 2)});
  c.push_back({cyclic_group(2), ModuleShape{{3, 9}}});
  c.push_back({cyclic_group(2), ModuleShape{{2, 4}}});
  c.push_back({cyclic_group(2), ModuleShape{{2, 4, 3}}});
  c.push_back({abelian_group({2, 2}), ModuleShape{{2, 2, 3, 3}}});
  c.push_back({cyclic_group(6), ModuleShape{{4, 4}}});
  return c;
}

}  // namespace

TEST(Intertwiner, GroupRing) {
  auto H = share(symmetric_group(3));
  GroupRing R(H, 4);
  Rng rng(1);
  auto rnd = [&] {
    GroupRing::Element x(6);
    for (auto& c : x) c = static_cast<std::int64_t>(rng.below(4));
    return x;
  };
  for (int t = 0; t < 50; ++t) {
    auto x = rnd(), y = rnd(), z = rnd();
    EXPECT_EQ(R.mul(R.mul(x, y), z), R.mul(x, R.mul(y, z)));
    EXPECT_EQ(R.mul(R.one(), x), x);
    EXPECT_EQ(R.mul(x, R.add(y, z)), R.add(R.mul(x, y), R.mul(x, z)));
  }
  // the action is a ring homomorphism into End(A)
  auto s = ModuleShape{{4, 4}};
  Rng r2(5);
  auto a = random_rep(H, s, oracle::all_automorphisms(s), r2);
  for (int t = 0; t < 20; ++t) {
    auto x = rnd(), y = rnd();
    EXPECT_EQ(ring_action(a, R, R.mul(x, y)), hom_mul(ring_action(a, R, x), ring_action(a, R, y)));
  }
  EXPECT_EQ(ring_action(a, R, R.one()), HomMatrix::identity(s));
}

TEST(Intertwiner, HomModuleExamples) {
  auto s = elab(3, 2);
  auto triv = Representation::trivial(share(cyclic_group(2)), s);
  EXPECT_EQ(hom_module(triv, triv).size(), 81u);
  auto d = cyclic_rep(2, s, {{1, 0}, {0, 2}});
  auto e = cyclic_rep(2, s, {{2, 0}, {0, 1}});
  auto K = hom_module(d, d);
  EXPECT_EQ(K.size(), 9u);
  for (std::uint64_t k = 0; k < 9; ++k) {
    auto M = K.element(k);
    EXPECT_EQ(M.at(0, 1), 0);
    EXPECT_EQ(M.at(1, 0), 0);
  }
  EXPECT_EQ(module_elements(K), brute_hom(d, d));
  auto X = hom_module(d, e);
  EXPECT_EQ(X.size(), 9u);
  for (std::uint64_t k = 0; k < 9; ++k) {
    auto M = X.element(k);
    EXPECT_EQ(M.at(0, 0), 0);
    EXPECT_EQ(M.at(1, 1), 0);
  }
  EXPECT_EQ(module_elements(X), brute_hom(d, e));
}

TEST(Intertwiner, HomModuleVsEnumeration) {
  Rng rng(21);
  for (const auto& c : cases()) {
    auto H = share(c.H);
    const auto autA = oracle::all_automorphisms(c.A);
    for (int t = 0; t < 4; ++t) {
      auto a = random_rep(H, c.A, autA, rng);
      auto b = t % 2 ? random_rep(H, c.A, autA, rng) : act_by_autA(a, autA[rng.below(autA.size())]);
      const auto K = hom_module(a, b);
      for (std::size_t i = 0; i < K.basis.size(); ++i) EXPECT_EQ(hom_additive_order(K.basis[i]), K.orders[i]);
      const auto got = module_elements(K);
      EXPECT_EQ(got.size(), *K.size());  // the basis is free over its orders
      EXPECT_EQ(got, brute_hom(a, b));
    }
  }
}

TEST(Intertwiner, ModuleIsomorphismExamples) {
  auto d = cyclic_rep(2, elab(3, 2), {{1, 0}, {0, 2}});
  EXPECT_EQ(module_isomorphism(d, d), HomMatrix::identity(d.shape()));
  auto e = cyclic_rep(2, elab(3, 2), {{2, 0}, {0, 1}});
  auto swap = module_isomorphism(d, e);
  ASSERT_TRUE(swap.has_value());
  EXPECT_EQ(act_by_autA(d, *swap), e);
  EXPECT_EQ(brute_coset(d, e, oracle::all_automorphisms(d.shape())).size(), 4u);
  // non-coprime: upper and lower transvection
  auto s = elab(2, 2);
  auto up = cyclic_rep(2, s, {{1, 1}, {0, 1}});
  auto low = cyclic_rep(2, s, {{1, 0}, {1, 1}});
  auto f = module_isomorphism(up, low);
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(act_by_autA(up, *f), low);
  EXPECT_TRUE(oracle::intertwines(up, low, HomMatrix::from_rows(s, {{0, 1}, {1, 0}})));
  EXPECT_FALSE(module_isomorphism(up, Representation::trivial(up.group_ptr(), s)).has_value());
}

TEST(Intertwiner, ModuleIsomorphismPaths) {
  Rng rng(8);
  auto s = elab(2, 3);
  auto H = share(cyclic_group(3));
  const auto autA = oracle::all_automorphisms(s);
  IntertwinerOptions random_first;
  random_first.exhaustive_limit = 0;
  IntertwinerOptions capped = random_first;
  capped.scan_cap = 1;
  for (int t = 0; t < 20; ++t) {
    auto a = random_rep(H, s, autA, rng);
    auto b = random_rep(H, s, autA, rng);
    const bool equiv = !oracle::intertwiners(a, b, autA).empty();
    for (const auto& o : {IntertwinerOptions{}, random_first}) {
      auto f = module_isomorphism(a, b, o);
      EXPECT_EQ(f.has_value(), equiv);
      if (f) {
        EXPECT_TRUE(oracle::intertwines(a, b, *f));
      }
    }
    if (!equiv) {
      EXPECT_THROW(module_isomorphism(a, b, capped), ResourceExhausted);
    }
  }
}

TEST(Intertwiner, UnitGroupExamples) {
  ModuleShape z4{{4}};
  HomModule scalars{z4, {HomMatrix::identity(z4)}, {4}};
  EXPECT_EQ(unit_group(scalars).group.order(), 2u);

  auto s = elab(2, 2);
  auto triv = Representation::trivial(share(cyclic_group(1)), s);
  auto all = centralizer_ring(triv);
  EXPECT_EQ(all.size(), 16u);
  EXPECT_EQ(unit_group(all).group.order(), 6u);

  auto tv = cyclic_rep(2, s, {{1, 1}, {0, 1}});
  auto K = centralizer_ring(tv);
  EXPECT_EQ(K.size(), 4u);
  auto U = unit_group(K);
  EXPECT_EQ(U.group.order(), 2u);
  EXPECT_FALSE(U.randomized);
  // 1 + x is the transvection itself
  EXPECT_TRUE(U.group.contains(hom_to_perm(tv(1))));

  IntertwinerOptions o;
  o.exhaustive_limit = 0;
  auto R = unit_group(K, o);
  EXPECT_EQ(R.group.order(), 2u);
  EXPECT_TRUE(R.randomized);
}

TEST(Intertwiner, CosetExamples) {
  auto s = elab(3, 2);
  auto autA = oracle::all_automorphisms(s);
  ASSERT_EQ(autA.size(), 48u);
  auto triv = Representation::trivial(share(cyclic_group(2)), s);
  EXPECT_EQ(intertwining_coset(triv, triv).coset.size(), 48u);
  auto d = cyclic_rep(2, s, {{1, 0}, {0, 2}});
  auto e = cyclic_rep(2, s, {{2, 0}, {0, 1}});
  auto dd = intertwining_coset(d, d);
  EXPECT_EQ(dd.coset.size(), 4u);
  EXPECT_EQ(as_set(dd.coset), brute_coset(d, d, autA));
  auto de = intertwining_coset(d, e);
  EXPECT_EQ(de.coset.size(), 4u);
  EXPECT_TRUE(de.coset.contains(naive_perm(HomMatrix::from_rows(s, {{0, 1}, {1, 0}}))));
  EXPECT_EQ(as_set(de.coset), brute_coset(d, e, autA));
  EXPECT_TRUE(intertwining_coset(d, triv).coset.empty);
}

TEST(Intertwiner, CosetVsBruteForce) {
  Rng rng(31);
  IntertwinerOptions randomized;
  randomized.exhaustive_limit = 0;
  randomized.seed = 99;
  for (const auto& c : cases()) {
    auto H = share(c.H);
    const auto autA = oracle::all_automorphisms(c.A);
    ASSERT_LE(autA.size(), 100000u);
    for (int t = 0; t < 4; ++t) {
      auto a = random_rep(H, c.A, autA, rng);
      auto b = t % 2 ? random_rep(H, c.A, autA, rng) : act_by_autA(a, autA[rng.below(autA.size())]);
      const auto want = brute_coset(a, b, autA);
      const auto got = intertwining_coset(a, b);
      EXPECT_EQ(as_set(got.coset), want);
      EXPECT_FALSE(got.randomized);
      if (!got.coset.empty) {
        // coset law: every element intertwines, and so does each unit times μ
        for (const auto& u : got.unit_generators)
          EXPECT_EQ(act_by_autA(a, hom_mul(u, *got.representative)), b);
        EXPECT_EQ(as_set(intertwining_coset(a, b, randomized).coset), want);
      }
    }
  }
}
