#pragma once

#include "agrp/permgroup.hpp"
#include "agrp/representation.hpp"

namespace agrp {

/// {φ ∈ C : α^φ ∼ β} where C is a coset of automorphisms of H acting on
/// the elements of H. A must be elementary abelian with p ∤ |H|.
Coset transport_elementary(const Coset& C, const Representation& alpha, const Representation& beta);
Coset transport_elementary(const PermGroup& P, const Representation& alpha, const Representation& beta);

/// Same for any abelian p-group A, one homocyclic component at a time.
Coset transport_general(const Coset& C, const Representation& alpha, const Representation& beta);
Coset transport_general(const PermGroup& P, const Representation& alpha, const Representation& beta);

}  // namespace agrp
