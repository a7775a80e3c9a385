#pragma once

#include <cstdint>
#include <vector>

#include "agrp/cayley.hpp"

namespace agrp {

/// A characteristic abelian subgroup A with a complement H (A ∩ H = 1,
/// AH = G) whose images under Aut(G) are conjugate to H.
struct CharComplement {
  Subgroup A;
  Subgroup H;
  /// The prime of A when A is a p-group, 0 otherwise.
  std::int64_t p = 0;
  /// The Sylow system whose normalizer gave H; empty when the solvable
  /// radical is abelian.
  std::vector<Subgroup> sylow_system;
};

/// Complement of an abelian normal A with gcd(|A|, |G:A|) = 1, by
/// averaging the cocycle of a transversal.
Subgroup schur_zassenhaus(const CayleyGroup& G, const Subgroup& A);

/// Hall π-subgroup of a solvable N ≤ G.
Subgroup hall_subgroup(const CayleyGroup& G, const Subgroup& N, const std::vector<std::int64_t>& pi);

/// For an A-group whose solvable radical A is abelian and nontrivial:
/// A and a complement to it.
CharComplement complement_abelian_radical(const CayleyGroup& G);

/// For an A-group with nontrivial solvable radical: a characteristic
/// abelian p-subgroup and its complement.
CharComplement characteristic_complement(const CayleyGroup& G);

/// Elements of p-power order in an abelian X.
Subgroup sylow_of_abelian(const CayleyGroup& G, const Subgroup& X, std::int64_t p);

}  // namespace agrp
