#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "agrp/cayley.hpp"
#include "agrp/permgroup.hpp"

namespace agrp {

/// Aut(X) as permutations of the elements of X.
using AgenOracle = std::function<PermGroup(const CayleyGroup&)>;
/// |Aut(X)|
using AcountOracle = std::function<std::uint64_t(const CayleyGroup&)>;

/// Number of isomorphisms X → Y.
using IcountOracle = std::function<std::uint64_t(const CayleyGroup&, const CayleyGroup&)>;

/// aut_agroup for A-groups, aut_bruteforce otherwise.
AgenOracle default_agen();
AcountOracle acount_from(AgenOracle agen);
/// |Aut(X)| = #Iso(X, X)
AcountOracle acount_from_icount(IcountOracle icount);

/// |Hom(A, B)| for abelian B, from the invariants of A/[A,A] and B.
std::uint64_t count_homs_to_abelian(const CayleyGroup& A, const CayleyGroup& B);

/// Whether every generator of Aut(G×H) maps G×Z(H) onto itself. The
/// product is indexed as in direct_product.
bool invariance_check(const CayleyGroup& G, const CayleyGroup& H, const PermGroup& autGH);

/// Block matrix [[α, β], [γ, δ]] acting on G×H by
/// (g, h) ↦ (α(g)β(h), γ(g)δ(h)). Maps are element image lists.
struct BidwellMatrix {
  std::vector<Elem> alpha;  // Aut(G)
  std::vector<Elem> beta;   // Hom(H, Z(G))
  std::vector<Elem> gamma;  // Hom(G, Z(H))
  std::vector<Elem> delta;  // Aut(H)
};
/// The action on the elements of direct_product(G, H).
Perm bidwell_action(const CayleyGroup& G, const CayleyGroup& H, const BidwellMatrix& M);
/// |Aut(G)|·|Aut(H)|·|Hom(G, Z(H))|·|Hom(H, Z(G))|
std::uint64_t bidwell_order(const CayleyGroup& G, const CayleyGroup& H, const AcountOracle& acount);

/// Directly indecomposable factors as subgroups of G whose internal direct
/// product is G. Exhaustive over normal subgroups; ResourceExhausted past
/// `max_order`.
std::vector<Subgroup> direct_factorization(const CayleyGroup& G, int max_order = 512);

bool grp_iso(const CayleyGroup& G, const CayleyGroup& H, const AcountOracle& acount);
/// An isomorphism G → H as element images.
std::optional<std::vector<Elem>> grp_imap(const CayleyGroup& G, const CayleyGroup& H, const AgenOracle& agen);
std::uint64_t grp_icount(const CayleyGroup& G, const CayleyGroup& H, const AcountOracle& acount);
std::uint64_t grp_acount(const CayleyGroup& G, const AgenOracle& agen);
/// Orbits of Aut(G) on G, each sorted, ordered by smallest element.
std::vector<std::vector<Elem>> grp_apart(const CayleyGroup& G, const AgenOracle& agen);

/// ε for indecomposable G, H: 2 when isomorphic, 1 otherwise, read off the
/// counting identity.
int epsilon(const CayleyGroup& G, const CayleyGroup& H, const AcountOracle& acount);

}  // namespace agrp
