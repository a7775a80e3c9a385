#include <gtest/gtest.h>

#include <numeric>
#include <sstream>

#include "agrp/cayley.hpp"
#include "oracles.hpp"

using namespace agrp;

namespace {

// index of the permutation with the given images inside symmetric_group(n)
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

std::vector<std::vector<Elem>> cyclic_mult_action(int a_order, int h_order, int k) {
  // generator of C_h acts on C_a by multiplication by k
  std::vector<std::vector<Elem>> act(h_order, std::vector<Elem>(a_order));
  std::int64_t m = 1;
  for (int h = 0; h < h_order; ++h) {
    for (int a = 0; a < a_order; ++a) act[h][a] = static_cast<Elem>(a * m % a_order);
    m = m * k % a_order;
  }
  return act;
}

}  // namespace

TEST(Cayley, TableValidation) {
  EXPECT_THROW(CayleyGroup::from_table(2, {0, 1, 0, 1}), InvalidInput);
  EXPECT_THROW(CayleyGroup::from_table(2, {0, 1, 1}), InvalidInput);
  // identity at position 1 gets moved to 0
  auto G = CayleyGroup::from_table(2, {1, 0, 0, 1});
  EXPECT_EQ(G.mul(0, 1), 1);
  EXPECT_EQ(G.mul(1, 1), 0);
  // Latin square that is not associative: a loop of order 5
  std::vector<Elem> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  EXPECT_THROW(CayleyGroup::from_table(5, loop), InvalidInput);
}

TEST(Cayley, ClosureSym3) {
  auto S3 = symmetric_group(3);
  Elem t = perm_index(3, {1, 0, 2}), c = perm_index(3, {1, 2, 0});
  Elem s[2] = {t, c};
  EXPECT_EQ(closure(S3, s).order(), 6);
  EXPECT_EQ(closure(S3, std::vector<Elem>{}).order(), 1);
}

TEST(Cayley, ClosureCyclic12) {
  auto C12 = cyclic_group(12);
  for (Elem x = 0; x < 12; ++x) {
    if (C12.elem_order(x) != 4) continue;
    Elem s[1] = {x};
    auto H = closure(C12, s);
    EXPECT_EQ(H.order(), 4);
    auto ref = oracle::naive_closure(C12, {x});
    EXPECT_EQ(H.elements, std::vector<Elem>(ref.begin(), ref.end()));
  }
  Elem bad[1] = {12};
  EXPECT_THROW(closure(C12, bad), InvalidInput);
}

TEST(Cayley, SolvableRadical) {
  EXPECT_TRUE(solvable_radical(alternating_group(5)).is_trivial());
  EXPECT_EQ(solvable_radical(cyclic_group(12)).order(), 12);
  auto P = direct_product(symmetric_group(3), alternating_group(5));
  auto R = solvable_radical(P.group);
  // the Sym(3) factor is {(g, 1)} = indices g*60
  ASSERT_EQ(R.order(), 6);
  for (Elem x : R.elements) EXPECT_EQ(x % 60, 0);
}

TEST(Cayley, SolvableRadicalContainsSolvableNormalClosures) {
  for (auto G : {symmetric_group(4), direct_product(cyclic_group(2), alternating_group(5)).group,
                 alternating_group(4)}) {
    auto R = solvable_radical(G);
    EXPECT_TRUE(is_normal(G, R));
    EXPECT_TRUE(is_solvable(G, R));
    for (Elem x = 0; x < G.order(); ++x) {
      Elem e[1] = {x};
      auto N = normal_closure(G, e);
      if (is_solvable(G, N)) {
        EXPECT_TRUE(R.contains(x));
      }
    }
  }
}

TEST(Cayley, Sylow) {
  EXPECT_EQ(sylow_subgroup(cyclic_group(6), 2).order(), 2);
  auto A4 = alternating_group(4);
  auto V = sylow_subgroup(A4, 2);
  // the unique subgroup of order 4 in Alt(4)
  std::vector<std::vector<Elem>> fours;
  for (const auto& s : oracle::two_generated_subgroups(A4))
    if (s.size() == 4) fours.push_back(s);
  ASSERT_EQ(fours.size(), 1u);
  EXPECT_EQ(V.elements, fours[0]);
  auto S3 = symmetric_group(3);
  auto P3 = sylow_subgroup(S3, 3);
  EXPECT_EQ(P3.order(), 3);
  EXPECT_TRUE(P3.contains(perm_index(3, {1, 2, 0})));
  EXPECT_TRUE(sylow_subgroup(S3, 5).is_trivial());
  EXPECT_THROW(sylow_subgroup(S3, 4), InvalidInput);
}

TEST(Cayley, SylowOrdersOnSeveralGroups) {
  for (auto G : {symmetric_group(4), alternating_group(5), cyclic_group(36),
                 direct_product(symmetric_group(3), alternating_group(4)).group}) {
    for (std::int64_t p : prime_divisors(G.order())) {
      auto P = sylow_subgroup(G, p);
      EXPECT_EQ(P.order(), p_part(G.order(), p));
    }
  }
}

TEST(Cayley, DerivedSeries) {
  auto s = derived_series(symmetric_group(3));
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].order(), 6);
  EXPECT_EQ(s[1].order(), 3);
  EXPECT_EQ(s[2].order(), 1);
  auto a = derived_series(abelian_group({2, 4}));
  ASSERT_EQ(a.size(), 2u);
  EXPECT_TRUE(a[1].is_trivial());
  auto a5 = derived_series(alternating_group(5));
  ASSERT_EQ(a5.size(), 1u);
  EXPECT_EQ(a5.back().order(), 60);
  EXPECT_FALSE(is_solvable(alternating_group(5)));
}

TEST(Cayley, Quotients) {
  auto S3 = symmetric_group(3);
  EXPECT_EQ(quotient(S3, whole_group(S3)).group.order(), 1);
  auto Q = quotient(S3, derived_subgroup(S3, whole_group(S3)));
  EXPECT_EQ(Q.group.order(), 2);
  auto A4 = alternating_group(4);
  auto QA = quotient(A4, sylow_subgroup(A4, 2));
  EXPECT_EQ(QA.group.order(), 3);
  EXPECT_TRUE(oracle::find_isomorphism(QA.group, cyclic_group(3)).has_value());
  EXPECT_TRUE(is_homomorphism(A4, QA.group, QA.projection));
  Elem t[1] = {perm_index(3, {1, 0, 2})};
  EXPECT_THROW(quotient(S3, closure(S3, t)), InvalidInput);
}

TEST(Cayley, SemidirectProducts) {
  auto C7 = cyclic_group(7), C3 = cyclic_group(3);
  // trivial action gives the direct product
  auto triv = cyclic_mult_action(7, 3, 1);
  auto D = semidirect_product(C7, C3, triv);
  EXPECT_TRUE(is_abelian(D.group));
  EXPECT_TRUE(oracle::find_isomorphism(D.group, cyclic_group(21)).has_value());

  auto F = semidirect_product(C7, C3, cyclic_mult_action(7, 3, 2));
  EXPECT_EQ(F.group.order(), 21);
  EXPECT_FALSE(is_abelian(F.group));
  EXPECT_TRUE(centre(F.group).is_trivial());
  // conjugation by the embedded H realizes the action
  for (Elem h = 0; h < 3; ++h)
    for (Elem a = 0; a < 7; ++a)
      EXPECT_EQ(F.group.conj(F.embed_first[a], F.embed_second[h]),
                F.embed_first[cyclic_mult_action(7, 3, 2)[h][a]]);

  // V4 ⋊ C3 is Alt(4)
  auto V4 = abelian_group({2, 2});
  std::vector<std::vector<Elem>> act = {{0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  auto A = semidirect_product(V4, C3, act);
  EXPECT_TRUE(oracle::find_isomorphism(A.group, alternating_group(4)).has_value());

  // 2 has order 3 mod 7, not 2: not a homomorphism from C2
  EXPECT_THROW(semidirect_product(C7, cyclic_group(2), cyclic_mult_action(7, 2, 2)), InvalidInput);
}

TEST(Cayley, AgroupFlags) {
  auto G = direct_product(symmetric_group(3), alternating_group(4)).group;
  EXPECT_TRUE(is_agroup(G));
  EXPECT_TRUE(is_agroup(alternating_group(5)));
  EXPECT_FALSE(is_agroup(symmetric_group(4)));
  // D8 has a nonabelian Sylow 2-subgroup
  auto D8 = semidirect_product(cyclic_group(4), cyclic_group(2), cyclic_mult_action(4, 2, 3));
  EXPECT_FALSE(is_agroup(D8.group));
}

TEST(Cayley, Sym3xAlt4HasNoAbelianSylowTower) {
  // A Sylow tower would give a normal series with abelian Sylow factors in
  // some prime order; both primes fail.
  auto G = direct_product(symmetric_group(3), alternating_group(4)).group;
  // normal Sylow 3-subgroup? normal Sylow 2-subgroup?
  auto P2 = sylow_subgroup(G, 2), P3 = sylow_subgroup(G, 3);
  EXPECT_FALSE(is_normal(G, P2));
  EXPECT_FALSE(is_normal(G, P3));
}

TEST(Cayley, HomUtilities) {
  auto C12 = cyclic_group(12), C4 = cyclic_group(4);
  GroupHom f{4, {}};
  for (Elem x = 0; x < 12; ++x) f.images.push_back(x % 4);
  EXPECT_TRUE(is_homomorphism(C12, C4, f));
  EXPECT_EQ(kernel(C12, f).order(), 3);
  EXPECT_EQ(image(C4, f).order(), 4);
  GroupHom g{2, {0, 1, 0, 1}};
  auto h = compose(f, g);
  EXPECT_EQ(kernel(C12, h).order(), 6);
}

TEST(Cayley, RelabelAndIo) {
  auto G = alternating_group(4);
  auto [R, map] = relabel(G, 7);
  for (Elem a = 0; a < 12; ++a)
    for (Elem b = 0; b < 12; ++b) EXPECT_EQ(R.mul(map[a], map[b]), map[G.mul(a, b)]);
  auto [R2, map2] = relabel(G, 7);
  EXPECT_TRUE(R == R2);

  std::stringstream ss;
  G.set_name("Alt(4)");
  write_group(ss, G);
  auto back = read_group(ss);
  EXPECT_TRUE(back == G);
  EXPECT_EQ(back.name(), "Alt(4)");

  std::stringstream bad("order 2\n0 1\n1\n");
  EXPECT_THROW(read_group(bad), InvalidInput);
  std::stringstream comments("# a comment\n\norder 2\n# more\n1 0\n0 1\n");
  auto C2 = read_group(comments);
  EXPECT_EQ(C2.mul(1, 1), 0);
}

TEST(Cayley, SmallGeneratingSet) {
  EXPECT_EQ(small_generating_set(cyclic_group(12)).size(), 1u);
  EXPECT_EQ(small_generating_set(alternating_group(5)).size(), 2u);
  EXPECT_EQ(small_generating_set(abelian_group({2, 2, 2})).size(), 3u);
}
