#include <gtest/gtest.h>

#include "agrp/autgroup.hpp"
#include "groups.hpp"
#include "oracles.hpp"

using namespace agrp;
namespace tg = testgroups;

namespace {

std::uint64_t brute_count(const CayleyGroup& G) { return oracle::automorphisms_by_generators(G).size(); }

CharComplement make_cc(const CayleyGroup&, const Subgroup& A, const Subgroup& H, std::int64_t p) {
  return CharComplement{A, H, p, {}};
}

std::vector<CayleyGroup> agroup_corpus() {
  using namespace testgroups;
  std::vector<CayleyGroup> c{cyclic_group(1),
                             cyclic_group(6),
                             cyclic_group(12),
                             abelian_group({2, 4}),
                             abelian_group({3, 9}),
                             abelian_group({2, 2, 3}),
                             s3(),
                             a4(),
                             c7c3(),
                             dic3(),
                             s3xc5(),
                             s3xa4(),
                             a5(),
                             c2xa5(),
                             metacyclic(5, 4, 2),
                             metacyclic(13, 3, 3),
                             metacyclic(11, 5, 3),
                             direct(s3(), s3()),
                             direct(c7c3(), cyclic_group(2)),
                             direct(a4(), cyclic_group(3)),
                             direct(a4(), cyclic_group(5)),
                             elab_by_cyclic(2, {{0, 1, 0}, {0, 0, 1}, {1, 1, 0}}, 7),
                             elab_by_cyclic(3, {{0, 1}, {2, 0}}, 4),
                             elab_by_cyclic(3, {{2, 0}, {0, 1}}, 2),
                             direct(dic3(), cyclic_group(5)),
                             relabel(direct(s3(), cyclic_group(7)), 3).first};
  return c;
}

}  // namespace

TEST(Autgroup, BruteForceExamples) {
  EXPECT_EQ(aut_bruteforce(cyclic_group(5)).order(), 4u);
  EXPECT_EQ(aut_bruteforce(tg::s3()).order(), 6u);
  EXPECT_EQ(aut_bruteforce(tg::a5()).order(), 120u);
  EXPECT_EQ(aut_bruteforce(cyclic_group(1)).order(), 1u);
  EXPECT_EQ(aut_bruteforce(tg::d8()).order(), 8u);
  EXPECT_EQ(aut_bruteforce(abelian_group({2, 2, 2})).order(), 168u);
  EXPECT_THROW(aut_bruteforce(tg::a5(), 10), ResourceExhausted);
  for (const auto& G : {tg::a4(), tg::c7c3(), symmetric_group(4), tg::dic3(), abelian_group({2, 4})}) {
    auto P = aut_bruteforce(G);
    EXPECT_EQ(P.order(), brute_count(G));
    EXPECT_TRUE(verify_automorphisms(G, P));
  }
}

TEST(Autgroup, AbelianBase) {
  EXPECT_EQ(aut_abelian(abelian_group({2, 4})).order(), 8u);
  EXPECT_EQ(aut_abelian(abelian_group({3, 9})).order(), 108u);
  EXPECT_EQ(aut_abelian(cyclic_group(6)).order(), 2u);
  auto Z = relabel(abelian_group({2, 2, 3, 4}), 2).first;
  auto P = aut_abelian(Z);
  EXPECT_EQ(P.order(), brute_count(Z));
  EXPECT_TRUE(verify_automorphisms(Z, P));
}

TEST(Autgroup, LiftExamples) {
  // C6 = C2 × C3, A = C2
  auto C6 = cyclic_group(6);
  auto A = closure(C6, std::vector<Elem>{3});
  auto H = closure(C6, std::vector<Elem>{2});
  auto EH = embed(C6, H);
  auto L = lift_aut(C6, make_cc(C6, A, H, 2), aut_bruteforce(EH.group));
  EXPECT_EQ(L.order(), 2u);
  EXPECT_TRUE(verify_automorphisms(C6, L));

  auto G = tg::c7c3();
  auto A7 = sylow_subgroup(G, 7);
  auto H3 = sylow_subgroup(G, 3);
  auto E3 = embed(G, H3);
  auto M = lift_aut(G, make_cc(G, A7, H3, 7), aut_bruteforce(E3.group));
  EXPECT_EQ(M.order(), 42u);
  EXPECT_TRUE(verify_automorphisms(G, M));

  auto A4 = tg::a4();
  auto V = sylow_subgroup(A4, 2);
  auto T = sylow_subgroup(A4, 3);
  auto N = lift_aut(A4, make_cc(A4, V, T, 2), aut_bruteforce(embed(A4, T).group));
  EXPECT_EQ(N.order(), 24u);
  EXPECT_TRUE(verify_automorphisms(A4, N));
}

TEST(Autgroup, AgroupExamples) {
  auto triv = aut_agroup(cyclic_group(1));
  EXPECT_EQ(triv.aut.order(), 1u);
  EXPECT_EQ(triv.method, AutMethod::Trivial);
  auto s = aut_agroup(tg::s3xa4());
  EXPECT_EQ(s.aut.order(), 144u);
  EXPECT_EQ(s.method, AutMethod::Recursive);
  auto a = aut_agroup(tg::a5());
  EXPECT_EQ(a.aut.order(), 120u);
  EXPECT_EQ(a.method, AutMethod::BruteForceBase);
  EXPECT_THROW(aut_agroup(tg::d8()), InvalidInput);
  AutOptions no_abelian;
  no_abelian.abelian_base = false;
  EXPECT_EQ(aut_agroup(abelian_group({3, 9}), no_abelian).aut.order(), 108u);
  EXPECT_EQ(aut_agroup(abelian_group({2, 4}), no_abelian).aut.order(), 8u);
}

TEST(Autgroup, CorpusVsBruteForce) {
  AutOptions no_abelian;
  no_abelian.abelian_base = false;
  for (const auto& G : agroup_corpus()) {
    ASSERT_TRUE(is_agroup(G));
    const std::uint64_t want = brute_count(G);
    for (const auto& o : {AutOptions{}, no_abelian}) {
      auto r = aut_agroup(G, o);
      EXPECT_EQ(r.aut.order(), want) << "order " << G.order();
      EXPECT_TRUE(verify_automorphisms(G, r.aut));
      for (std::size_t i = 1; i < r.levels.size(); ++i) EXPECT_LT(r.levels[i].order, r.levels[i - 1].order);
      // inner automorphisms
      for (Elem x : small_generating_set(G)) {
        Perm iota(G.order());
        for (Elem g = 0; g < G.order(); ++g) iota[g] = G.conj(g, x);
        EXPECT_TRUE(r.aut.contains(iota));
      }
    }
  }
}
