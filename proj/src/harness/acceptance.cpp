#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <sstream>

#include <sys/wait.h>

#include "agrp/abelian.hpp"
#include "agrp/autgroup.hpp"
#include "agrp/brute/groups.hpp"
#include "agrp/brute/modules.hpp"
#include "agrp/harness.hpp"
#include "agrp/intertwiner.hpp"
#include "agrp/reductions.hpp"
#include "agrp/structure.hpp"
#include "agrp/transport.hpp"

namespace agrp {

namespace {

using Clock = std::chrono::steady_clock;
using GroupPtr = std::shared_ptr<const CayleyGroup>;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

GroupPtr share(CayleyGroup G) { return std::make_shared<const CayleyGroup>(std::move(G)); }

struct CorpusGroup {
  std::string expr;
  CayleyGroup G;
};

// Collects failures; the first few are reported.
struct Tally {
  int checks = 0;
  int failures = 0;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (notes.size() < 5) notes.push_back(what);
  }
  ReportLine line(int k, const std::string& summary) const {
    ReportLine r{"criterion:" + std::to_string(k), failures == 0 && checks > 0, summary, 0};
    if (checks == 0) r.detail += "; nothing checked";
    if (failures) {
      r.detail += "; " + std::to_string(failures) + " of " + std::to_string(checks) + " checks failed";
      for (const auto& n : notes) r.detail += "; " + n;
    }
    return r;
  }
};

bool sylow_abelian_directly(const CayleyGroup& G) {
  for (auto p : prime_divisors(G.order())) {
    const Subgroup S = sylow_subgroup(G, p);
    for (Elem x : S.elements)
      for (Elem y : S.elements)
        if (G.mul(x, y) != G.mul(y, x)) return false;
  }
  return true;
}

std::uint64_t aut_count(const CayleyGroup& G) {
  return is_agroup(G) ? aut_agroup(G).aut.order() : aut_bruteforce(G).order();
}

bool as_bool(const std::string& s) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw InvalidInput("expected a boolean, got '" + s + "'");
}

ReportLine check_entry(const ManifestEntry& e, const BuildOptions& bo, std::vector<CorpusGroup>& corpus) {
  ReportLine r{"entry:" + std::to_string(e.line), false, e.expr, 0};
  const auto t0 = Clock::now();
  const auto want_error = e.expect.find("error");
  std::optional<CayleyGroup> G;
  try {
    G = build_group(e.expr, bo);
  } catch (const std::exception& ex) {
    const std::string msg = ex.what();
    r.pass = want_error != e.expect.end() && msg.find(want_error->second) != std::string::npos;
    r.detail += r.pass ? "; rejected as expected: " + msg : "; " + msg;
    r.seconds = since(t0);
    return r;
  }
  if (want_error != e.expect.end()) {
    r.detail += "; built, but an error was expected";
    r.seconds = since(t0);
    return r;
  }
  std::vector<std::string> bad;
  try {
    CayleyGroup::from_table(G->order(), G->table());
  } catch (const InvalidInput& ex) {
    bad.push_back(std::string("table validation: ") + ex.what());
  }
  const bool ag = is_agroup(*G);
  if (ag != sylow_abelian_directly(*G)) bad.push_back("is_agroup disagrees with the Sylow check");
  for (const auto& [k, v] : e.expect) {
    try {
      if (k == "order") {
        if (std::to_string(G->order()) != v) bad.push_back("order " + std::to_string(G->order()));
      } else if (k == "agroup") {
        if (ag != as_bool(v)) bad.push_back(std::string("agroup ") + (ag ? "true" : "false"));
      } else if (k == "abelian") {
        if (is_abelian(*G) != as_bool(v)) bad.push_back("abelian mismatch");
      } else if (k == "aut") {
        const auto n = aut_count(*G);
        if (std::to_string(n) != v) bad.push_back("aut " + std::to_string(n));
      } else if (k != "name") {
        bad.push_back("unknown key " + k);
      }
    } catch (const std::exception& ex) {
      bad.push_back(k + ": " + ex.what());
    }
  }
  r.pass = bad.empty();
  r.detail += "; order " + std::to_string(G->order()) + (ag ? ", A-group" : "");
  for (const auto& b : bad) r.detail += "; " + b;
  if (r.pass) corpus.push_back({e.expr, std::move(*G)});
  r.seconds = since(t0);
  return r;
}

// -- 1 -------------------------------------------------------------------------

ReportLine criterion_aut(const std::vector<CorpusGroup>& corpus) {
  Tally t;
  int groups = 0;
  for (const auto& c : corpus) {
    if (!is_agroup(c.G) || c.G.order() > 200) continue;
    ++groups;
    const AutResult r = aut_agroup(c.G);
    const std::uint64_t brute = aut_bruteforce(c.G).order();
    t.check(r.aut.order() == brute, c.expr + ": " + std::to_string(r.aut.order()) + " vs " + std::to_string(brute));
    t.check(verify_automorphisms(c.G, r.aut), c.expr + ": a generator is not an automorphism");
  }
  t.check(groups >= 25, "only " + std::to_string(groups) + " A-groups of order <= 200");
  return t.line(1, std::to_string(groups) + " A-groups");
}

// -- 2 -------------------------------------------------------------------------

ReportLine criterion_iso(const std::vector<CorpusGroup>& corpus, const AcceptanceOptions& opts) {
  Tally t;
  std::map<int, std::vector<std::pair<std::string, CayleyGroup>>> by_order;
  std::uint64_t s = opts.seed;
  for (const auto& c : corpus) {
    if (c.G.order() > 200) continue;
    auto& v = by_order[c.G.order()];
    v.push_back({c.expr, c.G});
    for (int k = 0; k < 2; ++k) v.push_back({"relabel(" + c.expr + ")", relabel(c.G, ++s).first});
  }
  const auto acount = acount_from(default_agen());
  int pairs = 0, positive = 0;
  for (const auto& [n, gs] : by_order)
    for (std::size_t i = 0; i < gs.size(); ++i)
      for (std::size_t j = i + 1; j < gs.size(); ++j) {
        const auto& [ni, G] = gs[i];
        const auto& [nj, H] = gs[j];
        const bool want = oracle_iso(G, H, opts.oracle_budget).has_value();
        t.check(oracle_iso(H, G, opts.oracle_budget).has_value() == want, "oracle asymmetric on " + ni + " / " + nj);
        t.check(grp_iso(G, H, acount) == want, ni + " vs " + nj);
        ++pairs;
        positive += want;
      }
  t.check(pairs >= 100, "only " + std::to_string(pairs) + " pairs");
  return t.line(2, std::to_string(pairs) + " pairs, " + std::to_string(positive) + " isomorphic");
}

// -- 3 and 4: module instances -----------------------------------------------------

Representation cyclic_rep(int n, const ModuleShape& s, const std::vector<std::vector<std::int64_t>>& X) {
  const Elem g[1] = {1};
  const HomMatrix M[1] = {HomMatrix::from_rows(s, X)};
  return Representation::from_generators(share(cyclic_group(n)), s, g, M);
}

std::optional<Representation> random_rep(const GroupPtr& H, const ModuleShape& s, const std::vector<HomMatrix>& autA,
                                         Rng& rng) {
  const auto gens = small_generating_set(*H);
  for (int t = 0; t < 20000; ++t) {
    std::vector<HomMatrix> img;
    for (std::size_t i = 0; i < gens.size(); ++i) img.push_back(autA[rng.below(autA.size())]);
    try {
      return Representation::from_generators(H, s, gens, img);
    } catch (const InvalidInput&) {
    }
  }
  return std::nullopt;
}

std::set<Perm> coset_set(const Coset& C) {
  if (C.empty) return {};
  const auto v = coset_elements(C);
  return {v.begin(), v.end()};
}

ModuleShape elab_shape(int p, int m) { return ModuleShape{std::vector<int>(m, p)}; }

ReportLine criterion_intertwiner(const AcceptanceOptions& opts) {
  Tally t;
  int instances = 0;
  auto compare = [&](const Representation& a, const Representation& b, const std::vector<HomMatrix>& autA,
                     const std::string& what, std::optional<std::uint64_t> size = {}) {
    const auto want = brute::intertwiner_perms(a, b, autA);
    const IntertwiningCoset got = intertwining_coset(a, b);
    const auto have = coset_set(got.coset);
    t.check(have == want, what + ": " + std::to_string(have.size()) + " vs " + std::to_string(want.size()));
    t.check(!got.randomized, what + ": randomized");
    if (size) t.check(want.size() == *size, what + ": brute-force size " + std::to_string(want.size()));
    ++instances;
  };
  {
    const auto s = elab_shape(3, 2);
    const auto autA = brute::all_automorphisms(s);
    const auto d = cyclic_rep(2, s, {{1, 0}, {0, 2}}), e = cyclic_rep(2, s, {{2, 0}, {0, 1}});
    compare(d, e, autA, "F3^2/C2 diag(1,2) to diag(2,1)", 4);
    compare(d, d, autA, "F3^2/C2 diag(1,2)", 4);
  }
  {
    const auto s = elab_shape(2, 2);
    const auto tr = cyclic_rep(2, s, {{1, 1}, {0, 1}});
    compare(tr, tr, brute::all_automorphisms(s), "F2^2/C2 transvection", 2);
  }
  struct Case {
    CayleyGroup H;
    ModuleShape A;
  };
  const std::vector<Case> cases{{cyclic_group(2), elab_shape(3, 2)},
                                {cyclic_group(2), elab_shape(2, 2)},
                                {cyclic_group(4), elab_shape(2, 3)},
                                {cyclic_group(3), elab_shape(2, 3)},
                                {symmetric_group(3), elab_shape(3, 2)},
                                {cyclic_group(2), ModuleShape{{3, 9}}},
                                {cyclic_group(2), ModuleShape{{2, 4}}},
                                {cyclic_group(2), ModuleShape{{2, 4, 3}}},
                                {abelian_group({2, 2}), ModuleShape{{2, 2, 3, 3}}},
                                {cyclic_group(6), ModuleShape{{4, 4}}},
                                {cyclic_group(4), elab_shape(5, 2)}};
  Rng rng(opts.seed);
  for (const auto& c : cases) {
    const auto H = share(c.H);
    const auto autA = brute::all_automorphisms(c.A);
    if (autA.size() > 100000) continue;
    for (int k = 0; k < 4; ++k) {
      const auto a = random_rep(H, c.A, autA, rng);
      const auto b = random_rep(H, c.A, autA, rng);
      if (!a || !b) {
        t.check(false, "no random representation");
        continue;
      }
      compare(*a, *b, autA, "random pair");
      compare(*a, act_by_autA(*a, autA[rng.below(autA.size())]), autA, "conjugate pair");
    }
  }
  return t.line(3, std::to_string(instances) + " instances");
}

ReportLine criterion_transport(const AcceptanceOptions& opts) {
  Tally t;
  int instances = 0;
  auto compare = [&](const PermGroup& P, const Representation& a, const Representation& b,
                     const std::vector<HomMatrix>& autA, const std::string& what) {
    const auto want = brute::double_enumeration(P.elements(), a, b, autA);
    const auto have = coset_set(transport_general(P, a, b));
    t.check(have == want, what + ": " + std::to_string(have.size()) + " vs " + std::to_string(want.size()));
    ++instances;
    return want;
  };
  const auto full_aut = [](const CayleyGroup& H) { return PermGroup(H.order(), brute::all_automorphisms(H)); };
  {
    const auto s = elab_shape(5, 1);
    const auto a = cyclic_rep(4, s, {{2}}), b = cyclic_rep(4, s, {{3}});
    const auto want = compare(full_aut(cyclic_group(4)), a, b, brute::all_automorphisms(s), "C4 on F5");
    t.check(want == std::set<Perm>{Perm{0, 3, 2, 1}}, "C4 on F5: brute force is not {inversion}");
  }
  struct Case {
    CayleyGroup H;
    ModuleShape A;
  };
  const std::vector<Case> cases{{cyclic_group(2), elab_shape(3, 2)},    {cyclic_group(4), elab_shape(5, 1)},
                                {cyclic_group(4), elab_shape(3, 2)},    {cyclic_group(3), elab_shape(2, 3)},
                                {cyclic_group(3), ModuleShape{{2, 4}}},  {cyclic_group(2), ModuleShape{{3, 9}}},
                                {symmetric_group(3), elab_shape(5, 2)}, {abelian_group({2, 2}), elab_shape(3, 2)},
                                {cyclic_group(6), elab_shape(7, 1)},    {cyclic_group(5), elab_shape(11, 1)},
                                {abelian_group({3, 3}), elab_shape(2, 2)}};
  Rng rng(opts.seed + 1);
  for (const auto& c : cases) {
    const auto H = share(c.H);
    const PermGroup P = full_aut(c.H);
    const auto autA = brute::all_automorphisms(c.A);
    if (P.order() > 5000 || autA.size() > 100000) continue;
    const auto autH = P.elements();
    for (int k = 0; k < 3; ++k) {
      const auto a = random_rep(H, c.A, autA, rng);
      const auto b = random_rep(H, c.A, autA, rng);
      if (!a || !b) {
        t.check(false, "no random representation");
        continue;
      }
      compare(P, *a, *b, autA, "random pair");
      const auto moved = act_by_autH(act_by_autA(*a, autA[rng.below(autA.size())]), autH[rng.below(autH.size())]);
      compare(P, *a, moved, autA, "moved pair");
    }
  }
  return t.line(4, std::to_string(instances) + " instances");
}

// -- 5 -------------------------------------------------------------------------

HomMatrix random_endo(const ModuleShape& s, Rng& rng) {
  HomMatrix M = HomMatrix::zero(s);
  for (int i = 0; i < s.rank(); ++i)
    for (int j = 0; j < s.rank(); ++j) {
      const std::int64_t nj = s.moduli[j], step = nj / gcd64(s.moduli[i], nj);
      M.m(i, j) = step * static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(nj / step)));
    }
  return M;
}

void lambda_checks(Tally& t, Rng& rng) {
  for (auto orders : {std::vector<int>{2, 4}, std::vector<int>{3, 9}, std::vector<int>{2, 2, 8}}) {
    const auto B = abelian_basis(abelian_group(orders));
    const auto D = homocyclic_decomposition(B.shape);
    int bad = 0;
    for (int k = 0; k < 500; ++k) {
      const auto U = random_endo(B.shape, rng), V = random_endo(B.shape, rng);
      const auto lu = lambda_map(U, D), lv = lambda_map(V, D), luv = lambda_map(hom_mul(U, V), D);
      for (std::size_t a = 0; a < lu.size(); ++a) bad += !(luv[a] == mat_mul(lu[a], lv[a], D.p));
    }
    t.check(bad == 0, "Λ not multiplicative on " + std::to_string(bad) + " pairs");
  }
  // Λ on Aut(A) by enumeration: image size and kernel order
  for (auto orders : {std::vector<int>{2, 4}, std::vector<int>{3, 9}}) {
    const CayleyGroup A = abelian_group(orders);
    const auto B = abelian_basis(A);
    const auto D = homocyclic_decomposition(B.shape);
    std::set<std::vector<std::vector<std::int64_t>>> image;
    std::uint64_t kernel = 0;
    const auto autos = brute::all_automorphisms(A);
    for (const auto& f : autos) {
      std::vector<std::vector<std::int64_t>> key;
      bool trivial = true;
      for (const auto& blk : lambda_map(endo_to_matrix(A, B, f), D)) {
        key.push_back(blk.data);
        trivial = trivial && blk == IntMatrix::identity(blk.rows);
      }
      image.insert(key);
      kernel += trivial;
    }
    std::uint64_t gl = 1;  // ∏ |GL_m(F_p)| over the components
    for (const auto& c : D.components) {
      std::uint64_t pm = 1, pi = 1;
      for (int i = 0; i < c.rank; ++i) pm *= static_cast<std::uint64_t>(D.p);
      for (int i = 0; i < c.rank; ++i, pi *= static_cast<std::uint64_t>(D.p)) gl *= pm - pi;
    }
    t.check(image.size() == gl, "Λ is not onto the block units");
    t.check(image.size() * kernel == autos.size(), "|image|·|kernel| differs from |Aut(A)|");
    std::uint64_t k = kernel;
    while (k % D.p == 0) k /= D.p;
    t.check(k == 1, "kernel of Λ is not a p-group");
  }
}

bool conjugate_in(const CayleyGroup& G, const Subgroup& X, const std::vector<char>& target) {
  for (Elem g = 0; g < G.order(); ++g) {
    bool all = true;
    for (Elem x : X.elements)
      if (!target[G.conj(x, g)]) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

ReportLine criterion_structure(const std::vector<CorpusGroup>& corpus, const AcceptanceOptions& opts) {
  Tally t;
  Rng rng(opts.seed + 2);
  lambda_checks(t, rng);
  int complements = 0;
  for (const auto& c : corpus) {
    const CayleyGroup& G = c.G;
    if (!is_agroup(G) || G.order() > 200 || solvable_radical(G).is_trivial()) continue;
    const CharComplement cc = characteristic_complement(G);
    ++complements;
    t.check(intersection(G, cc.A, cc.H).is_trivial(), c.expr + ": A ∩ H != 1");
    t.check(static_cast<std::int64_t>(cc.A.order()) * cc.H.order() == G.order(), c.expr + ": AH != G");
    const PermGroup aut = aut_bruteforce(G);
    for (int k = 0; k < 50; ++k) {
      const Perm f = aut.random_element(rng);
      std::vector<char> fA(G.order(), 0), fH(G.order(), 0);
      for (Elem a : cc.A.elements) fA[f[a]] = 1;
      for (Elem h : cc.H.elements) fH[f[h]] = 1;
      bool fixed = true;
      for (Elem a : cc.A.elements) fixed = fixed && fA[a];
      t.check(fixed, c.expr + ": A is moved by an automorphism");
      t.check(conjugate_in(G, cc.H, fH), c.expr + ": an image of H is not conjugate to H");
    }
  }
  t.check(complements > 0, "no characteristic complements checked");
  return t.line(5, "Λ identities, " + std::to_string(complements) + " characteristic complements");
}

// -- 6 -------------------------------------------------------------------------

ReportLine criterion_reductions(const std::vector<CorpusGroup>& corpus, const AcceptanceOptions& opts) {
  Tally t;
  const std::vector<std::pair<std::string, std::string>> L{
      {"Sym(3)", "sym(3)"},
      {"D8", "semidirect(cyclic(4), cyclic(2), pow(3))"},
      {"C3:C4", "semidirect(cyclic(3), cyclic(4), pow(2))"},
      {"D10", "semidirect(cyclic(5), cyclic(2), pow(4))"},
      {"Alt(4)", "alt(4)"},
      {"C7:C3", "semidirect(cyclic(7), cyclic(3), pow(2))"},
      {"C5:C4", "semidirect(cyclic(5), cyclic(4), pow(2))"}};
  std::vector<CayleyGroup> gs;
  std::vector<std::uint64_t> auts;
  for (const auto& [name, e] : L) {
    gs.push_back(build_group(e));
    auts.push_back(aut_bruteforce(gs.back()).order());
  }
  const auto acount = acount_from(default_agen());
  int pairs = 0;
  bool s3_case = false;
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i; j < gs.size(); ++j) {
      const CayleyGroup& G = gs[i];
      // a relabeled copy keeps the G = H case honest
      const CayleyGroup H = i == j ? relabel(gs[j], opts.seed).first : gs[j];
      if (G.order() * H.order() > 400) continue;
      const std::string what = L[i].first + " x " + L[j].first;
      const std::uint64_t whole = aut_bruteforce(direct_product(G, H).group).order();
      const int eps = oracle_iso(G, H, opts.oracle_budget) ? 2 : 1;
      const std::uint64_t formula = auts[i] * auts[j] *
                                    static_cast<std::uint64_t>(brute::count_homs(G, embed(H, centre(H)).group)) *
                                    static_cast<std::uint64_t>(brute::count_homs(H, embed(G, centre(G)).group)) * eps;
      t.check(whole == formula, what + ": " + std::to_string(whole) + " vs formula " + std::to_string(formula));
      t.check(epsilon(G, H, acount) == eps, what + ": ε");
      if (i == 0 && j == 0) {
        s3_case = true;
        t.check(whole == 72 && eps == 2, "Sym(3)^2: |Aut| " + std::to_string(whole));
      }
      ++pairs;
    }
  t.check(s3_case, "Sym(3)^2 case missing");
  t.check(pairs >= 20, "only " + std::to_string(pairs) + " pairs");
  // imap certificates on the corpus
  const auto agen = default_agen();
  int maps = 0;
  std::uint64_t s = opts.seed;
  for (const auto& c : corpus) {
    if (c.G.order() > 200) continue;
    const CayleyGroup H = relabel(c.G, ++s).first;
    const auto f = grp_imap(c.G, H, agen);
    t.check(f.has_value(), c.expr + ": no isomorphism to a relabeled copy");
    if (f) {
      const GroupHom hom{H.order(), *f};
      t.check(is_homomorphism(c.G, H, hom) && is_bijective(hom), c.expr + ": imap output is not an isomorphism");
    }
    ++maps;
  }
  return t.line(6, std::to_string(pairs) + " product pairs, " + std::to_string(maps) + " imap certificates");
}

// -- 7 -------------------------------------------------------------------------

ReportLine criterion_scaling(const AcceptanceOptions& opts) {
  // F_2^k ⋊ C_q with C_q acting block-diagonally
  struct Instance {
    std::string name;
    std::string expr;
  };
  const std::vector<Instance> family{
      {"F2^6:C21",
       "semidirect(elab(2,6), cyclic(21), mat([[0,1,0,0,0,0],[0,0,1,0,0,0],[1,1,0,0,0,0],[0,0,0,0,1,0],"
       "[0,0,0,1,1,0],[0,0,0,0,0,1]]))"},
      {"F2^9:C3",
       "semidirect(elab(2,9), cyclic(3), mat([[0,1,0,0,0,0,0,0,0],[1,1,0,0,0,0,0,0,0],[0,0,0,1,0,0,0,0,0],"
       "[0,0,1,1,0,0,0,0,0],[0,0,0,0,0,1,0,0,0],[0,0,0,0,1,1,0,0,0],[0,0,0,0,0,0,0,1,0],[0,0,0,0,0,0,1,1,0],"
       "[0,0,0,0,0,0,0,0,1]]))"},
      {"F2^8:C7",
       "semidirect(elab(2,8), cyclic(7), mat([[0,1,0,0,0,0,0,0],[0,0,1,0,0,0,0,0],[1,1,0,0,0,0,0,0],"
       "[0,0,0,0,1,0,0,0],[0,0,0,0,0,1,0,0],[0,0,0,1,1,0,0,0],[0,0,0,0,0,0,1,0],[0,0,0,0,0,0,0,1]]))"},
      {"F2^7:C15",
       "semidirect(elab(2,7), cyclic(15), mat([[0,1,0,0,0,0,0],[0,0,1,0,0,0,0],[0,0,0,1,0,0,0],[1,1,0,0,0,0,0],"
       "[0,0,0,0,0,1,0],[0,0,0,0,1,1,0],[0,0,0,0,0,0,1]]))"}};
  bool pipeline_ok = true, oracle_exhausted = false;
  std::ostringstream detail;
  for (const auto& inst : family) {
    const CayleyGroup G = build_group(inst.expr);
    auto t0 = Clock::now();
    bool done = true;
    std::uint64_t order = 0;
    try {
      order = aut_agroup(G).aut.order();
    } catch (const std::exception&) {
      done = false;
    }
    const double pipe = since(t0);
    pipeline_ok = pipeline_ok && done && pipe < 60;
    detail << inst.name << " (order " << G.order() << "): aut_agroup ";
    if (done) detail << "|Aut| " << order << " in " << pipe << " s";
    else detail << "failed";
    if (G.order() >= 1024) {
      const CayleyGroup H = relabel(G, opts.seed).first;
      OracleStats st;
      t0 = Clock::now();
      try {
        const bool found = oracle_iso(G, H, opts.oracle_budget, &st).has_value();
        detail << ", oracle_iso " << (found ? "found" : "no") << " isomorphism after " << st.nodes << " nodes";
      } catch (const ResourceExhausted&) {
        oracle_exhausted = true;
        detail << ", oracle_iso exceeded " << opts.oracle_budget << " nodes";
      }
      detail << " in " << since(t0) << " s";
    }
    detail << "; ";
  }
  if (!oracle_exhausted) detail << "no oracle run exceeded the node budget";
  return ReportLine{"criterion:7", pipeline_ok && oracle_exhausted, detail.str(), 0};
}

// -- 8 -------------------------------------------------------------------------

struct RunOutput {
  int code = 0;
  std::string out;
  friend bool operator==(const RunOutput&, const RunOutput&) = default;
};

std::string shell_quote(const std::string& s) {
  std::string r = "'";
  for (char c : s) r += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return r + "'";
}

RunOutput run_command(const std::string& cli, const std::vector<std::string>& args) {
  RunOutput r;
  if (cli.empty()) {
    std::ostringstream out, err;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    return r;
  }
  std::string cmd = shell_quote(cli);
  for (const auto& a : args) cmd += " " + shell_quote(a);
  cmd += " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw ResourceExhausted("cannot start " + cli);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ReportLine criterion_determinism(const AcceptanceOptions& opts) {
  Tally t;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("agrp-accept-" + std::to_string(opts.seed) + "-" +
                                                    std::to_string(Clock::now().time_since_epoch().count()));
  fs::create_directories(dir);
  const std::string seed = std::to_string(opts.seed);
  const std::string a = (dir / "a.grp").string(), b = (dir / "b.grp").string();
  const std::string ea = "direct(sym(3), alt(4))", eb = "relabel(direct(alt(4), sym(3)))";
  int runs = 0;
  auto twice = [&](std::vector<std::string> args, const std::string& file = {}) {
    args.insert(args.end(), {"--seed", seed});
    const RunOutput r1 = run_command(opts.cli_path, args);
    const std::string f1 = file.empty() ? "" : slurp(file);
    const RunOutput r2 = run_command(opts.cli_path, args);
    const std::string f2 = file.empty() ? "" : slurp(file);
    std::string name;
    for (const auto& x : args) name += x + " ";
    t.check(r1 == r2 && f1 == f2, "output differs: " + name);
    t.check(r1.code == 0, "exit " + std::to_string(r1.code) + ": " + name);
    ++runs;
  };
  twice({"gen", ea, "-o", a}, a);
  twice({"gen", eb, "-o", b}, b);
  for (const std::string flag : {"", "--json"}) {
    auto with = [&](std::vector<std::string> v) {
      if (!flag.empty()) v.push_back(flag);
      return v;
    };
    twice(with({"gen", "semidirect(cyclic(7), cyclic(3), pow(2))"}));
    twice(with({"iso", a, b}));
    twice(with({"imap", a, b}));
    twice(with({"icount", a, b}));
    twice(with({"acount", a}));
    twice(with({"apart", a}));
    twice(with({"aut", a}));
    twice(with({"oracle-iso", a, b}));
    twice(with({"oracle-aut", a}));
  }
  std::error_code ec;
  fs::remove_all(dir, ec);
  return t.line(8, std::to_string(runs) + " commands run twice" + (opts.cli_path.empty() ? " in-process" : ""));
}

}  // namespace

AcceptanceReport run_acceptance(const Manifest& m, const AcceptanceOptions& opts) {
  AcceptanceReport report;
  BuildOptions bo;
  bo.seed = opts.seed;
  bo.base_dir = m.base_dir;
  std::vector<CorpusGroup> corpus;
  for (const auto& e : m.entries) report.lines.push_back(check_entry(e, bo, corpus));

  std::set<int> chosen(m.criteria.begin(), m.criteria.end());
  using Job = std::function<ReportLine()>;
  std::map<int, Job> jobs{{1, [&] { return criterion_aut(corpus); }},
                          {2, [&] { return criterion_iso(corpus, opts); }},
                          {3, [&] { return criterion_intertwiner(opts); }},
                          {4, [&] { return criterion_transport(opts); }},
                          {5, [&] { return criterion_structure(corpus, opts); }},
                          {6, [&] { return criterion_reductions(corpus, opts); }},
                          {7, [&] { return criterion_scaling(opts); }},
                          {8, [&] { return criterion_determinism(opts); }}};
  auto timed = [](int k, const Job& job) {
    const auto t0 = Clock::now();
    ReportLine r;
    try {
      r = job();
    } catch (const std::exception& ex) {
      r = ReportLine{"criterion:" + std::to_string(k), false, std::string("error: ") + ex.what(), 0};
    }
    r.seconds = since(t0);
    return r;
  };
  std::vector<std::future<ReportLine>> running;
  for (int k : chosen)
    running.push_back(std::async(opts.parallel ? std::launch::async : std::launch::deferred, timed, k, jobs.at(k)));
  for (auto& f : running) report.lines.push_back(f.get());
  return report;
}

}  // namespace agrp
