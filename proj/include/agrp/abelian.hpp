#pragma once

#include <cstdint>
#include <vector>

#include "agrp/cayley.hpp"
#include "agrp/permgroup.hpp"
#include "agrp/zmod.hpp"

namespace agrp {

/// Vectors of Z/n_1 ⊕ ... ⊕ Z/n_t, indexed in mixed radix with the first
/// coordinate fastest.
struct ModuleShape {
  std::vector<int> moduli;

  int rank() const { return static_cast<int>(moduli.size()); }
  int size() const;
  int index(const std::vector<std::int64_t>& v) const;
  std::vector<std::int64_t> vector(int index) const;
  friend bool operator==(const ModuleShape&, const ModuleShape&) = default;
};

/// Cyclic generators of an abelian table group with prime-power orders,
/// sorted by (prime, order), and the coordinate map.
struct AbelianBasis {
  std::vector<Elem> generators;
  ModuleShape shape;
  std::vector<int> index_of;   // element -> mixed-radix index
  std::vector<Elem> element_of;  // mixed-radix index -> element

  std::vector<std::int64_t> coords(Elem x) const { return shape.vector(index_of[x]); }
  Elem element(const std::vector<std::int64_t>& c) const { return element_of[shape.index(c)]; }
};

AbelianBasis abelian_basis(const CayleyGroup& A);

struct HomocyclicComponent {
  std::int64_t exponent;
  int rank;
  std::vector<int> positions;  // coordinates belonging to the component
};

/// Homocyclic components of an abelian p-group, exponents increasing.
struct HomocyclicDecomposition {
  std::int64_t p = 0;
  ModuleShape shape;
  std::vector<HomocyclicComponent> components;
};

/// Requires every modulus to be a power of one prime, ascending.
HomocyclicDecomposition homocyclic_decomposition(const ModuleShape& shape);

/// Endomorphism of ⊕ Z/n_i acting on row vectors: x ↦ xM. Entry (i, j) is
/// taken mod n_j and divisible by n_j / gcd(n_i, n_j). Row i is the image
/// of the i-th generator. Composition "first M, then N" is M·N.
struct HomMatrix {
  ModuleShape shape;
  IntMatrix m;

  static HomMatrix identity(const ModuleShape& s);
  static HomMatrix zero(const ModuleShape& s);
  /// Rows are the images of the generators; validated.
  static HomMatrix from_rows(const ModuleShape& s, const std::vector<std::vector<std::int64_t>>& rows);

  std::int64_t at(int i, int j) const { return m(i, j); }
  bool is_valid() const;
  std::vector<std::int64_t> apply(const std::vector<std::int64_t>& x) const;
  friend bool operator==(const HomMatrix&, const HomMatrix&) = default;
  friend bool operator<(const HomMatrix& a, const HomMatrix& b) { return a.m.data < b.m.data; }
};

HomMatrix hom_mul(const HomMatrix& a, const HomMatrix& b);
HomMatrix hom_add(const HomMatrix& a, const HomMatrix& b);
HomMatrix hom_scale(const HomMatrix& a, std::int64_t c);
/// Additive order in End(A).
std::int64_t hom_additive_order(const HomMatrix& a);

/// The permutation of mixed-radix indices induced by M (bijective M only).
Perm hom_to_perm(const HomMatrix& M);
/// Reads the matrix off a permutation that is known to be an endomorphism.
HomMatrix perm_to_hom(const ModuleShape& s, const Perm& p);

/// ψ given as element images of the table group; InvalidInput unless ψ is a homomorphism.
HomMatrix endo_to_matrix(const CayleyGroup& A, const AbelianBasis& B, const std::vector<Elem>& images);
std::vector<Elem> matrix_to_endo(const AbelianBasis& B, const HomMatrix& M);

/// Block u_ab of M for homocyclic components a, b.
IntMatrix hom_block(const HomMatrix& M, const HomocyclicDecomposition& D, int a, int b);

/// Diagonal blocks invertible mod p.
bool is_automorphism(const HomMatrix& M, const HomocyclicDecomposition& D);

/// Diagonal blocks reduced mod p.
std::vector<IntMatrix> lambda_map(const HomMatrix& M, const HomocyclicDecomposition& D);

/// Lifts a tuple of matrices over F_p (one per component) to an element of
/// End(A) by reading the entries verbatim; block-diagonal.
HomMatrix lambda_lift(const std::vector<IntMatrix>& blocks, const HomocyclicDecomposition& D);

/// Generators of Aut(A): transvections and unit diagonals inside each
/// component, plus 1 + d·E_ab across components.
std::vector<HomMatrix> aut_generators(const HomocyclicDecomposition& D);
/// Aut(A) as a permutation group on mixed-radix indices.
PermGroup aut_permgroup(const HomocyclicDecomposition& D);
/// |End(A)| · ∏ |GL_{m_i}(F_p)| / p^{Σ m_i^2}
std::uint64_t aut_order(const HomocyclicDecomposition& D);

/// Inverse of an automorphism.
HomMatrix hom_inverse(const HomMatrix& M);

/// Coordinates [begin, end) belonging to one prime. Bases are sorted by
/// prime, so each primary part is contiguous.
struct PrimaryBlock {
  std::int64_t p;
  int begin, end;
  HomocyclicDecomposition decomposition;
};
std::vector<PrimaryBlock> primary_blocks(const ModuleShape& s);

/// The square sub-block of M on the coordinates of b.
HomMatrix restrict_block(const HomMatrix& M, const PrimaryBlock& b);

/// Bijectivity of M for any finite abelian shape, by the diagonal-block
/// criterion in each primary part. Off-prime blocks of a valid M vanish.
bool is_invertible(const HomMatrix& M);

}  // namespace agrp
