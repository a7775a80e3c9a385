#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "agrp/common.hpp"

namespace agrp {

struct ValidationOptions {
  /// Triples are checked exhaustively up to this order, sampled above it.
  int full_associativity_bound = 512;
  std::uint64_t sample_seed = 0x5eed;
};

/// A finite group given by its full multiplication table. Element 0 is the
/// identity; `mul(a, b)` is the product ab. Immutable after construction.
class CayleyGroup {
 public:
  /// The trivial group.
  CayleyGroup();

  /// Validates the table (Latin square, identity, associativity) and
  /// re-indexes so that the identity becomes element 0.
  static CayleyGroup from_table(int n, std::vector<Elem> table, std::string name = {},
                                const ValidationOptions& opts = {});

  /// No validation; for tables produced by the library itself.
  static CayleyGroup from_trusted_table(int n, std::vector<Elem> table, std::string name = {});

  int order() const { return n_; }
  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem pow(Elem a, std::int64_t k) const;
  int elem_order(Elem a) const { return orders_[a]; }
  /// x^{-1} a x
  Elem conj(Elem a, Elem x) const { return mul(mul(inverse_[x], a), x); }
  /// a^{-1} b^{-1} a b
  Elem comm(Elem a, Elem b) const { return mul(mul(inverse_[a], inverse_[b]), mul(a, b)); }

  const std::vector<Elem>& table() const { return table_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  friend bool operator==(const CayleyGroup& a, const CayleyGroup& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  CayleyGroup(int n, std::vector<Elem> table, std::string name);
  void compute_caches();

  int n_ = 1;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<int> orders_;
  std::string name_;
};

/// Subgroup of a CayleyGroup stored as its sorted element list plus the
/// generators it was built from.
struct Subgroup {
  std::vector<Elem> elements;
  std::vector<Elem> generators;
  std::vector<char> mask;

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(Elem x) const { return mask[x] != 0; }
  bool is_trivial() const { return elements.size() == 1; }
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
};

/// Homomorphism between table groups, as the list of images of all elements.
struct GroupHom {
  int target_order = 1;
  std::vector<Elem> images;
};

/// A subgroup re-expressed as a standalone table group.
struct EmbeddedGroup {
  CayleyGroup group;
  std::vector<Elem> to_parent;    // local -> parent
  std::vector<Elem> from_parent;  // parent -> local, -1 outside
};

struct Quotient {
  CayleyGroup group;
  GroupHom projection;
  std::vector<Elem> coset_rep;  // smallest element of each coset
};

struct Product {
  CayleyGroup group;
  std::vector<Elem> embed_first;
  std::vector<Elem> embed_second;
};

// -- subgroups ---------------------------------------------------------------

Subgroup whole_group(const CayleyGroup& G);
Subgroup trivial_subgroup(const CayleyGroup& G);
Subgroup subgroup_from_elements(const CayleyGroup& G, std::vector<Elem> elems);

/// <S>, breadth-first product closure. S is kept as the generator list.
Subgroup closure(const CayleyGroup& G, std::span<const Elem> gens);
/// <X, extra>
Subgroup join(const CayleyGroup& G, const Subgroup& X, std::span<const Elem> extra);
Subgroup join(const CayleyGroup& G, const Subgroup& X, const Subgroup& Y);
Subgroup intersection(const CayleyGroup& G, const Subgroup& X, const Subgroup& Y);

/// Smallest subgroup of X containing S that is normalized by X.
Subgroup normal_closure(const CayleyGroup& G, const Subgroup& X, std::span<const Elem> S);
Subgroup normal_closure(const CayleyGroup& G, std::span<const Elem> S);

Subgroup centralizer(const CayleyGroup& G, std::span<const Elem> S);
Subgroup centralizer(const CayleyGroup& G, const Subgroup& X);
Subgroup normalizer(const CayleyGroup& G, const Subgroup& X);
Subgroup centre(const CayleyGroup& G);

Subgroup derived_subgroup(const CayleyGroup& G, const Subgroup& X);
/// X, [X,X], ... until stable. The last entry is trivial iff X is solvable.
std::vector<Subgroup> derived_series(const CayleyGroup& G, const Subgroup& X);
std::vector<Subgroup> derived_series(const CayleyGroup& G);

bool is_abelian(const CayleyGroup& G);
bool is_abelian(const CayleyGroup& G, const Subgroup& X);
bool is_solvable(const CayleyGroup& G, const Subgroup& X);
bool is_solvable(const CayleyGroup& G);
/// X normalizes N (N need not lie in X).
bool normalizes(const CayleyGroup& G, const Subgroup& X, const Subgroup& N);
bool is_normal(const CayleyGroup& G, const Subgroup& N);

std::vector<std::vector<Elem>> conjugacy_classes(const CayleyGroup& G);

/// All elements of p-power order (the identity included).
std::vector<Elem> p_elements(const CayleyGroup& G, std::int64_t p);
Subgroup subgroup_generated_by_p_elements(const CayleyGroup& G, std::int64_t p);

/// Sylow p-subgroup by normalizer climbing; trivial when p does not divide |G|.
Subgroup sylow_subgroup(const CayleyGroup& G, std::int64_t p);
/// Largest normal solvable subgroup.
Subgroup solvable_radical(const CayleyGroup& G);
/// Every Sylow subgroup is abelian.
bool is_agroup(const CayleyGroup& G);

// -- derived groups ----------------------------------------------------------

EmbeddedGroup embed(const CayleyGroup& G, const Subgroup& X);
/// Maps a subgroup of an embedded group back into its parent.
Subgroup lift(const CayleyGroup& parent, const EmbeddedGroup& E, const Subgroup& local);
/// Restricts a parent subgroup contained in E to local indices.
Subgroup restrict_to(const EmbeddedGroup& E, const Subgroup& parent_sub);

Quotient quotient(const CayleyGroup& G, const Subgroup& N);
/// Full preimage of a subgroup of G/N.
Subgroup preimage(const CayleyGroup& G, const Quotient& Q, const Subgroup& local);

Product direct_product(const CayleyGroup& G, const CayleyGroup& H);
/// A ⋊ H where action[h][a] = a^{α(h)}. Elements are (a, h) with index
/// h*|A| + a and product (a,h)(b,k) = (a·b^{α(h)^{-1}}, hk), so that
/// conjugation by h realizes α(h) on A.
Product semidirect_product(const CayleyGroup& A, const CayleyGroup& H,
                           const std::vector<std::vector<Elem>>& action);

// -- homomorphisms -----------------------------------------------------------

bool is_homomorphism(const CayleyGroup& G, const CayleyGroup& H, const GroupHom& f);
bool is_bijective(const GroupHom& f);
bool is_automorphism(const CayleyGroup& G, std::span<const Elem> images);
/// First f, then g.
GroupHom compose(const GroupHom& f, const GroupHom& g);
Subgroup kernel(const CayleyGroup& G, const GroupHom& f);
Subgroup image(const CayleyGroup& H, const GroupHom& f);

/// Greedy small generating sequence: repeatedly adds the element that
/// enlarges the generated subgroup the most (ties: lowest index).
std::vector<Elem> small_generating_set(const CayleyGroup& G);

/// Relabels non-identity elements by a seeded random permutation.
/// Returns the new group and the map old index -> new index.
std::pair<CayleyGroup, std::vector<Elem>> relabel(const CayleyGroup& G, std::uint64_t seed);

// -- standard groups ---------------------------------------------------------

CayleyGroup cyclic_group(int n);
/// Z/n1 × ... × Z/nk in mixed radix (first coordinate fastest).
CayleyGroup abelian_group(const std::vector<int>& orders);
CayleyGroup symmetric_group(int n);
CayleyGroup alternating_group(int n);

// -- file format -------------------------------------------------------------

/// `order <n>` then n rows of n indices; `# name <s>` header optional.
CayleyGroup read_group(std::istream& in, const ValidationOptions& opts = {});
CayleyGroup read_group_file(const std::string& path, const ValidationOptions& opts = {});
void write_group(std::ostream& out, const CayleyGroup& G);

}  // namespace agrp
