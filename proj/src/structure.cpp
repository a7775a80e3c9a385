#include "agrp/structure.hpp"

#include <algorithm>

namespace agrp {

namespace {

bool is_complement(const CayleyGroup& G, const Subgroup& A, const Subgroup& H) {
  return static_cast<std::int64_t>(A.order()) * H.order() == G.order() && intersection(G, A, H).is_trivial();
}

bool is_p_power(std::int64_t n, std::int64_t p) { return log_p(n, p) >= 0; }

std::int64_t exponent_of(const CayleyGroup& G, const Subgroup& X) {
  std::int64_t e = 1;
  for (Elem x : X.elements) e = lcm64(e, G.elem_order(x));
  return e;
}

// Complement to the abelian radical A of G via the recursion on A's Sylow
// parts and on C_G(A).
Subgroup radical_complement(const CayleyGroup& G, const Subgroup& A) {
  if (A.is_trivial()) return whole_group(G);
  const auto primes = prime_divisors(A.order());
  const std::int64_t p = primes.front();
  const Subgroup Ap = sylow_of_abelian(G, A, p);
  if (Ap.order() != A.order()) {
    // complement L/A_p to A/A_p, then a complement to A_p inside L
    const Quotient Q = quotient(G, Ap);
    std::vector<Elem> img;
    for (Elem a : A.elements) img.push_back(Q.projection.images[a]);
    const Subgroup Abar = subgroup_from_elements(Q.group, img);
    const Subgroup L = preimage(G, Q, radical_complement(Q.group, Abar));
    const EmbeddedGroup EL = embed(G, L);
    const Subgroup H = lift(G, EL, radical_complement(EL.group, restrict_to(EL, Ap)));
    ensure(is_complement(G, A, H), "complement: recursion on Sylow parts failed");
    return H;
  }
  const Subgroup C = centralizer(G, A);
  if (C.order() != A.order()) {
    const Subgroup S = derived_subgroup(G, C);
    ensure(!S.is_trivial() && intersection(G, A, S).is_trivial() &&
               static_cast<std::int64_t>(A.order()) * S.order() == C.order(),
           "complement: centralizer is not A × [C,C]; G is not an A-group");
    const Quotient Q = quotient(G, S);
    std::vector<Elem> img;
    for (Elem a : A.elements) img.push_back(Q.projection.images[a]);
    const Subgroup H = preimage(G, Q, radical_complement(Q.group, subgroup_from_elements(Q.group, img)));
    ensure(is_complement(G, A, H), "complement: recursion modulo [C,C] failed");
    return H;
  }
  ensure(A.order() == p_part(G.order(), p), "complement: self-centralizing A is not a Sylow subgroup");
  return schur_zassenhaus(G, A);
}

Subgroup hall_local(const CayleyGroup& N, const std::vector<std::int64_t>& pi) {
  if (N.order() == 1) return whole_group(N);
  const auto series = derived_series(N);
  const Subgroup& D = series[series.size() - 2];  // last nontrivial term, abelian
  const std::int64_t p = prime_divisors(D.order()).front();
  const Subgroup V = sylow_of_abelian(N, D, p);
  const Quotient Q = quotient(N, V);
  const Subgroup K = preimage(N, Q, hall_local(Q.group, pi));
  if (std::find(pi.begin(), pi.end(), p) != pi.end()) return K;
  const EmbeddedGroup EK = embed(N, K);
  return lift(N, EK, schur_zassenhaus(EK.group, restrict_to(EK, V)));
}

std::int64_t pi_part(std::int64_t n, const std::vector<std::int64_t>& pi) {
  std::int64_t r = 1;
  for (std::int64_t p : pi) r *= p_part(n, p);
  return r;
}

// A_p and A_{p'}·H for the smallest prime p of |A|.
CharComplement split_prime(const CayleyGroup& G, const Subgroup& A, const Subgroup& H,
                           std::vector<Subgroup> system) {
  const auto primes = prime_divisors(A.order());
  const std::int64_t p = primes.front();
  std::vector<Elem> rest;
  for (Elem a : A.elements)
    if (G.elem_order(a) % p != 0) rest.push_back(a);
  const Subgroup Aq = subgroup_from_elements(G, rest);
  CharComplement out{sylow_of_abelian(G, A, p), join(G, Aq, H), p, std::move(system)};
  ensure(is_complement(G, out.A, out.H), "characteristic_complement: p-part split failed");
  return out;
}

}  // namespace

Subgroup sylow_of_abelian(const CayleyGroup& G, const Subgroup& X, std::int64_t p) {
  std::vector<Elem> e;
  for (Elem x : X.elements)
    if (is_p_power(G.elem_order(x), p)) e.push_back(x);
  return subgroup_from_elements(G, e);
}

Subgroup schur_zassenhaus(const CayleyGroup& G, const Subgroup& A) {
  require(is_normal(G, A), "schur_zassenhaus: A is not normal");
  require(is_abelian(G, A), "schur_zassenhaus: A is not abelian");
  const std::int64_t m = G.order() / A.order();
  require(gcd64(A.order(), m) == 1, "schur_zassenhaus: |A| and |G:A| are not coprime");
  const Quotient Q = quotient(G, A);
  const auto& sigma = Q.coset_rep;
  const CayleyGroup& X = Q.group;
  const std::int64_t k = inverse_mod(mod(m, exponent_of(G, A)), exponent_of(G, A));
  std::vector<Elem> tau(X.order());
  for (Elem x = 0; x < X.order(); ++x) {
    // b(x) = Π_z σ(x)σ(z)σ(xz)^{-1}
    Elem b = 0;
    for (Elem z = 0; z < X.order(); ++z) {
      const Elem c = G.mul(G.mul(sigma[x], sigma[z]), G.inv(sigma[X.mul(x, z)]));
      ensure(A.contains(c), "schur_zassenhaus: cocycle outside A");
      b = G.mul(b, c);
    }
    tau[x] = G.mul(G.pow(G.inv(b), k), sigma[x]);
  }
  Subgroup H = subgroup_from_elements(G, tau);
  ensure(H.order() == m && intersection(G, A, H).is_trivial(), "schur_zassenhaus: corrected transversal is not a complement");
  for (Elem x = 0; x < X.order(); ++x)
    for (Elem z = 0; z < X.order(); ++z)
      ensure(G.mul(tau[x], tau[z]) == tau[X.mul(x, z)], "schur_zassenhaus: corrected transversal is not closed");
  return H;
}

Subgroup hall_subgroup(const CayleyGroup& G, const Subgroup& N, const std::vector<std::int64_t>& pi) {
  require(is_solvable(G, N), "hall_subgroup: N is not solvable");
  const EmbeddedGroup E = embed(G, N);
  Subgroup H = lift(G, E, hall_local(E.group, pi));
  ensure(H.order() == pi_part(N.order(), pi), "hall_subgroup: wrong order");
  return H;
}

CharComplement complement_abelian_radical(const CayleyGroup& G) {
  require(is_agroup(G), "complement_abelian_radical: G is not an A-group");
  const Subgroup A = solvable_radical(G);
  require(!A.is_trivial(), "complement_abelian_radical: trivial radical");
  require(is_abelian(G, A), "complement_abelian_radical: radical is not abelian");
  CharComplement out{A, radical_complement(G, A), 0, {}};
  const auto primes = prime_divisors(A.order());
  if (primes.size() == 1) out.p = primes[0];
  return out;
}

CharComplement characteristic_complement(const CayleyGroup& G) {
  require(is_agroup(G), "characteristic_complement: G is not an A-group");
  const Subgroup S = solvable_radical(G);
  require(!S.is_trivial(), "characteristic_complement: trivial radical");
  if (is_abelian(G, S)) {
    const CharComplement c = complement_abelian_radical(G);
    return split_prime(G, c.A, c.H, {});
  }
  const auto series = derived_series(G, S);
  const Subgroup& N = series[series.size() - 3];
  const Subgroup& A = series[series.size() - 2];
  const auto primes = prime_divisors(N.order());
  std::vector<Subgroup> halls;
  for (std::int64_t p : primes) {
    std::vector<std::int64_t> pi;
    for (std::int64_t q : primes)
      if (q != p) pi.push_back(q);
    halls.push_back(hall_subgroup(G, N, pi));
  }
  std::vector<Subgroup> system;
  Subgroup H = whole_group(G);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    Subgroup P = N;
    for (std::size_t j = 0; j < primes.size(); ++j)
      if (j != i) P = intersection(G, P, halls[j]);
    ensure(P.order() == p_part(N.order(), primes[i]), "characteristic_complement: not a Sylow system");
    H = intersection(G, H, normalizer(G, P));
    system.push_back(std::move(P));
  }
  ensure(is_complement(G, A, H), "characteristic_complement: system normalizer is not a complement");
  return split_prime(G, A, H, std::move(system));
}

}  // namespace agrp
