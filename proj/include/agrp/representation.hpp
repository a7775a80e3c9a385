#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "agrp/abelian.hpp"
#include "agrp/cayley.hpp"

namespace agrp {

/// A homomorphism α: H → Aut(A) for A = ⊕ Z/n_i, stored as one matrix
/// per element of H. Vectors are rows: a^{α(h)} = a·images[h], so
/// images[hk] = images[h]·images[k].
class Representation {
 public:
  /// Validates the homomorphism property against a generating set of H.
  Representation(std::shared_ptr<const CayleyGroup> H, ModuleShape shape, std::vector<HomMatrix> images);

  static Representation trivial(std::shared_ptr<const CayleyGroup> H, ModuleShape shape);
  /// Extends generator images to all of H. InvalidInput when the
  /// assignment does not define a homomorphism.
  static Representation from_generators(std::shared_ptr<const CayleyGroup> H, ModuleShape shape,
                                        std::span<const Elem> gens, std::span<const HomMatrix> images);

  const CayleyGroup& group() const { return *H_; }
  const std::shared_ptr<const CayleyGroup>& group_ptr() const { return H_; }
  const ModuleShape& shape() const { return shape_; }
  const HomMatrix& operator()(Elem h) const { return images_[h]; }
  const std::vector<HomMatrix>& images() const { return images_; }
  /// Generators of H used for validation and commutation systems.
  const std::vector<Elem>& group_generators() const { return gens_; }
  Subgroup kernel() const;

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.shape_ == b.shape_ && a.images_ == b.images_;
  }

 private:
  struct Unchecked {};
  Representation(Unchecked, std::shared_ptr<const CayleyGroup> H, ModuleShape shape, std::vector<HomMatrix> images,
                 std::vector<Elem> gens);

  std::shared_ptr<const CayleyGroup> H_;
  ModuleShape shape_;
  std::vector<HomMatrix> images_;
  std::vector<Elem> gens_;

  friend Representation act_by_autA(const Representation&, const HomMatrix&);
  friend Representation act_by_autH(const Representation&, const Perm&);
  friend Representation compose_images(const Representation&, ModuleShape, const std::vector<HomMatrix>&);
};

/// α^ψ(h) = ψ^{-1}·α(h)·ψ
Representation act_by_autA(const Representation& alpha, const HomMatrix& psi);
/// α^φ(h) = α(h^{φ^{-1}}) for φ ∈ Aut(H) given as a permutation of H.
Representation act_by_autH(const Representation& alpha, const Perm& phi);
/// Same group and generators, new images (trusted to be a homomorphism).
Representation compose_images(const Representation& alpha, ModuleShape shape, const std::vector<HomMatrix>& images);

/// α∘Λ_c: the action on A_c/pA_c of homocyclic component c.
Representation lambda_component(const Representation& alpha, const HomocyclicDecomposition& D, int c);

/// The conjugation action of a complement H on a normal abelian A ≤ G,
/// in local indices of both subgroups.
struct ConjugationRep {
  EmbeddedGroup A;
  EmbeddedGroup H;
  AbelianBasis basis;
  Representation rep;
};
ConjugationRep conjugation_rep(const CayleyGroup& G, const Subgroup& A, const Subgroup& H);

// -- elementary abelian modules ----------------------------------------------

/// Subspace of F_p^m in reduced row echelon form; comparable and hashable
/// by its basis.
struct Subspace {
  std::int64_t p = 2;
  int ambient = 0;
  std::vector<std::vector<std::int64_t>> basis;
  std::vector<int> pivots;

  int dim() const { return static_cast<int>(basis.size()); }
  bool contains(const std::vector<std::int64_t>& v) const;
  /// Coordinates of a vector of the subspace in `basis`.
  std::vector<std::int64_t> coordinates(const std::vector<std::int64_t>& v) const;
  /// Mixed-radix indices of all vectors (p^dim of them).
  std::vector<int> element_indices() const;
  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis == b.basis; }
  friend bool operator<(const Subspace& a, const Subspace& b) { return a.basis < b.basis; }
};

Subspace span_mod_p(std::vector<std::vector<std::int64_t>> rows, std::int64_t p, int ambient);
Subspace subspace_sum(const Subspace& a, const Subspace& b);

/// Requires every modulus equal to one prime.
bool is_elementary(const ModuleShape& s);

/// The α(H)-submodule generated by v.
Subspace submodule_generated(const Representation& alpha, const std::vector<std::int64_t>& v);
bool is_irreducible(const Representation& alpha);
/// Every irreducible submodule, each as the span of one orbit. Sorted.
std::vector<Subspace> irreducible_submodules(const Representation& alpha);
/// The action on an invariant subspace, in the coordinates of its basis.
Representation restrict_to(const Representation& alpha, const Subspace& W);

/// ψ ∈ Aut(A) with α^ψ = β for irreducible α, β, or nothing.
std::optional<HomMatrix> irreducible_equivalent(const Representation& alpha, const Representation& beta);

struct ConstituentClass {
  Representation rep;  // first summand met of this class
  int multiplicity;
};
struct Decomposition {
  std::vector<Subspace> summands;  // A = ⊕ summands
  std::vector<int> class_of;       // summand -> class
  std::vector<ConstituentClass> classes;
};
/// Greedy decomposition into irreducible summands grouped by equivalence.
/// Requires p ∤ |H|.
Decomposition decompose(const Representation& alpha);

namespace detail {
/// irreducible_equivalent without the irreducibility checks.
std::optional<HomMatrix> equivalent_unchecked(const Representation& alpha, const Representation& beta);
}  // namespace detail

}  // namespace agrp
