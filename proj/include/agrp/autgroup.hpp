#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agrp/cayley.hpp"
#include "agrp/intertwiner.hpp"
#include "agrp/permgroup.hpp"
#include "agrp/structure.hpp"

namespace agrp {

enum class AutMethod { Recursive, BruteForceBase, AbelianBase, Trivial };
const char* method_name(AutMethod m);

/// One step of the recursion: the group order and how it was handled.
struct AutLevel {
  int order;
  AutMethod method;
  int complement_order = 0;  // |H| for recursive levels
  std::int64_t p = 0;
};

struct AutResult {
  PermGroup aut;  // on the elements of the group
  AutMethod method;
  std::vector<AutLevel> levels;  // outermost first
  /// Some unit group along the way was generated by random sampling only.
  bool randomized = false;
};

struct AutOptions {
  IntertwinerOptions intertwiner;
  /// Node budget for brute-force bases; 0 means the default for the order.
  std::uint64_t bruteforce_budget = 0;
  /// Use the abelian basis for abelian groups instead of recursing.
  bool abelian_base = true;
};

/// Aut(G) from Aut(H) for a characteristic complement (A, H). `autH` acts
/// on the elements of embed(G, cc.H).group.
PermGroup lift_aut(const CayleyGroup& G, const CharComplement& cc, const PermGroup& autH,
                   const IntertwinerOptions& opts = {}, bool* randomized = nullptr);

/// Aut(G) for an A-group by recursion along characteristic complements.
AutResult aut_agroup(const CayleyGroup& G, const AutOptions& opts = {});

/// |G|^⌈log2 |G|⌉, saturated at 2^62.
std::uint64_t default_node_budget(int order);

/// Aut(G) by backtracking over generator images, one coset representative
/// per stabilizer level. ResourceExhausted past `budget` search nodes.
PermGroup aut_bruteforce(const CayleyGroup& G, std::uint64_t budget = 0, std::uint64_t* nodes = nullptr);

/// Aut(A) of an abelian group as permutations of its elements.
PermGroup aut_abelian(const CayleyGroup& A);

/// Every generator maps products to products (exhaustive) and is bijective.
bool verify_automorphisms(const CayleyGroup& G, const PermGroup& P);

}  // namespace agrp
