#pragma once

#include <span>
#include <vector>

#include "agrp/permgroup.hpp"

namespace agrp {

/// Largest |A| accepted by the subset transporter; the table has 2^|A| cells.
inline constexpr int kSubsetTransporterCap = 22;

/// String on points 0..domain-1 with letters 1..alphabet. Permutations act
/// by f^π(x) = f(x^{π^{-1}}).
struct GroupString {
  std::vector<int> letters;
  int alphabet = 1;

  int domain() const { return static_cast<int>(letters.size()); }
  /// Points carrying letter i, ascending.
  std::vector<int> preimage(int letter) const;
  GroupString act(const Perm& pi) const;
  friend bool operator==(const GroupString&, const GroupString&) = default;
};

/// {π ∈ C : A^π = B}. Dynamic program over the subsets of B, processing A
/// in the given order.
Coset subset_transporter(const Coset& C, std::span<const int> A, std::span<const int> B,
                         int cap = kSubsetTransporterCap);
Coset subset_transporter(const PermGroup& P, std::span<const int> A, std::span<const int> B,
                         int cap = kSubsetTransporterCap);

/// {π ∈ P : f1^π = f2}. The last letter is the background letter and is
/// never transported, so the cost depends only on the other letters.
Coset string_isomorphisms(const PermGroup& P, const GroupString& f1, const GroupString& f2,
                          int cap = kSubsetTransporterCap);
Coset string_isomorphisms(const Coset& C, const GroupString& f1, const GroupString& f2,
                          int cap = kSubsetTransporterCap);

}  // namespace agrp
