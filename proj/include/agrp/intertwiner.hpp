#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "agrp/permgroup.hpp"
#include "agrp/representation.hpp"

namespace agrp {

/// (Z/e)[H] with coefficient vectors indexed by the elements of H.
class GroupRing {
 public:
  GroupRing(std::shared_ptr<const CayleyGroup> H, std::int64_t e);

  using Element = std::vector<std::int64_t>;
  std::int64_t modulus() const { return e_; }
  int dimension() const { return H_->order(); }
  Element zero() const { return Element(H_->order(), 0); }
  Element one() const;
  Element basis(Elem h) const;
  Element add(const Element& x, const Element& y) const;
  Element mul(const Element& x, const Element& y) const;

 private:
  std::shared_ptr<const CayleyGroup> H_;
  std::int64_t e_;
};

/// The action of a group ring element r on A through α: Σ_h r_h α(h).
/// The exponent of A must divide the ring modulus.
HomMatrix ring_action(const Representation& alpha, const GroupRing& R, const GroupRing::Element& r);

/// Subgroup of End(A) given by a basis of a direct sum of cyclic groups:
/// every element is Σ c_i basis[i] with 0 <= c_i < orders[i], uniquely.
struct HomModule {
  ModuleShape shape;
  std::vector<HomMatrix> basis;
  std::vector<std::int64_t> orders;

  /// log2 of the number of elements.
  double log2_size() const;
  /// Exact size, or nothing past 2^62.
  std::optional<std::uint64_t> size() const;
  HomMatrix combination(const std::vector<std::int64_t>& coefficients) const;
  /// Element with mixed-radix index k over `orders`.
  HomMatrix element(std::uint64_t k) const;
  HomMatrix random_element(Rng& rng) const;
};

/// The centralizer ring K = {ψ ∈ End(A) : α(h)ψ = ψα(h) for all h}.
using CentralizerRing = HomModule;

/// All ψ ∈ End(A) with α(h)ψ = ψβ(h) for every h, from the commutation
/// system over Z/p^k in each primary part.
HomModule hom_module(const Representation& alpha, const Representation& beta);
CentralizerRing centralizer_ring(const Representation& alpha);

struct IntertwinerOptions {
  std::uint64_t seed = 1;
  /// Scan every element of Hom up to this size.
  std::uint64_t exhaustive_limit = std::uint64_t{1} << 20;
  /// Last-resort scan when random trials find nothing; larger Hom groups
  /// raise ResourceExhausted.
  std::uint64_t scan_cap = std::uint64_t{1} << 26;
};

/// ψ ∈ Aut(A) with α^ψ = β, or nothing. Absence is always the result of a
/// full scan.
std::optional<HomMatrix> module_isomorphism(const Representation& alpha, const Representation& beta,
                                            const IntertwinerOptions& opts = {});

struct UnitGroup {
  PermGroup group;  // acting on the mixed-radix indices of A
  std::vector<HomMatrix> generators;
  /// Generation was only checked by order stabilization.
  bool randomized = false;
};

/// Generators of K^× for a subring K of End(A).
UnitGroup unit_group(const CentralizerRing& K, const IntertwinerOptions& opts = {});

struct IntertwiningCoset {
  Coset coset;  // {ψ : α^ψ = β} as permutations of A
  std::vector<HomMatrix> unit_generators;
  std::optional<HomMatrix> representative;
  bool randomized = false;
};

/// Aut(A, α∼β) = K^×·μ for any μ with α^μ = β.
IntertwiningCoset intertwining_coset(const Representation& alpha, const Representation& beta,
                                     const IntertwinerOptions& opts = {});

/// Generators of Aut(A) for any finite abelian shape (primary parts sorted).
std::vector<HomMatrix> aut_generators(const ModuleShape& s);

}  // namespace agrp
