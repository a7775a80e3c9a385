#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "agrp/common.hpp"

namespace agrp {

class CayleyGroup;

/// Permutation as an image array: x^π = π[x]. Products act on the right,
/// so `perm_mul(a, b)` is first a, then b.
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_mul(const Perm& a, const Perm& b);
Perm perm_inv(const Perm& a);
bool perm_is_identity(const Perm& a);
bool perm_is_bijection(const Perm& a);

/// One level of a stabilizer chain.
struct ChainLevel {
  int base_point = 0;
  std::vector<Perm> generators;    // strong generators fixing earlier base points
  std::vector<int> orbit;          // orbit of base_point, in discovery order
  std::vector<int> orbit_pos;      // point -> index in orbit, -1 if absent
  std::vector<Perm> transversal;   // transversal[k] maps base_point to orbit[k]
  std::vector<Perm> inverse_transversal;
};

/// Permutation group with a deterministic stabilizer chain, built eagerly
/// on construction and immutable afterwards. Copies share the chain, so a
/// constructed group may be read from several threads.
class PermGroup {
 public:
  PermGroup() : PermGroup(0, {}) {}
  /// `base_prefix` forces the first base points (used for pointwise
  /// stabilizers); further points are chosen as the first moved point.
  PermGroup(int degree, std::vector<Perm> generators, std::vector<int> base_prefix = {});

  static PermGroup trivial(int degree) { return PermGroup(degree, {}); }
  /// Right regular action of a table group on its elements.
  static PermGroup regular(const CayleyGroup& G);

  int degree() const { return degree_; }
  /// Input generators that were not redundant when added.
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<std::shared_ptr<const ChainLevel>>& chain() const { return *levels_; }
  std::vector<int> base() const;

  /// Exact order; throws ResourceExhausted past 2^64.
  std::uint64_t order() const;
  bool is_trivial() const { return generators_.empty(); }
  bool contains(const Perm& g) const;
  std::vector<int> orbit(int x) const;
  bool is_subgroup_of(const PermGroup& other) const;
  friend bool operator==(const PermGroup& a, const PermGroup& b);

  /// Same group, chain rebuilt so that the base starts with `prefix`.
  PermGroup with_base(std::vector<int> prefix) const;
  /// ⟨this, extra⟩, keeping the existing chain.
  PermGroup with_generators(std::span<const Perm> extra) const;
  /// Subgroup given by the chain below the first `k` levels.
  PermGroup chain_suffix(std::size_t k) const;

  /// All elements; only for small groups.
  std::vector<Perm> elements(std::uint64_t cap = 1000000) const;
  /// Seeded uniform random element via the transversals.
  Perm random_element(Rng& rng) const;

 private:
  struct Builder;
  PermGroup(int degree, std::vector<Perm> generators,
            std::shared_ptr<const std::vector<std::shared_ptr<const ChainLevel>>> levels)
      : degree_(degree), generators_(std::move(generators)), levels_(std::move(levels)) {}
  int degree_ = 0;
  std::vector<Perm> generators_;
  std::shared_ptr<const std::vector<std::shared_ptr<const ChainLevel>>> levels_;
};

/// Right coset H·rep of a permutation group, or the empty set.
struct Coset {
  PermGroup subgroup;
  Perm representative;
  bool empty = false;

  static Coset none(int degree);
  static Coset of(PermGroup H);
  std::uint64_t size() const { return empty ? 0 : subgroup.order(); }
  bool contains(const Perm& g) const;
  /// {x·g : x in this}
  Coset right_mul(const Perm& g) const;
  friend bool operator==(const Coset& a, const Coset& b);
};

/// The elementwise image of a coset as an explicit list (small cases only).
std::vector<Perm> coset_elements(const Coset& c, std::uint64_t cap = 1000000);

/// {π ∈ P : x^π = y}
Coset point_transporter(const PermGroup& P, int x, int y);
/// (Q·r)_{x→y} = Q_{x→r^{-1}(y)}·r
Coset point_transporter(const Coset& C, int x, int y);
/// Pointwise stabilizer of Δ.
PermGroup pointwise_stabilizer(const PermGroup& P, std::span<const int> delta);

/// Union of cosets known to be a single coset: representative of the first
/// nonempty one, subgroup generated by all subgroups and every π_j π_1^{-1}.
Coset union_of_cosets(std::span<const Coset> cosets);

/// Homomorphism from a permutation group on Ω to Sym(Π), given by the images
/// of the source generators. Works on the graph group {(g, f(g))} acting on
/// Ω ⊔ Π with the base of the image group first.
class TrackedHom {
 public:
  /// images[i] is f(generators[i]). InvalidInput when the assignment does
  /// not extend to a homomorphism.
  TrackedHom(int source_degree, std::vector<Perm> generators, std::vector<Perm> images,
             int target_degree);

  const PermGroup& source() const { return source_; }
  const PermGroup& image() const { return image_; }
  const PermGroup& kernel() const { return kernel_; }
  /// Some g with f(g) = h; InvalidInput when h is not in the image.
  Perm preimage(const Perm& h) const;

 private:
  PermGroup source_;
  int source_degree_;
  int target_degree_;
  PermGroup image_;
  PermGroup graph_;
  std::size_t prefix_len_ = 0;
  PermGroup kernel_;
};

void write_perm(std::ostream& out, const Perm& p);
void write_permgroup(std::ostream& out, const PermGroup& P);
void write_coset(std::ostream& out, const Coset& C);

}  // namespace agrp
