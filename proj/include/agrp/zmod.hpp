#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace agrp {

/// Dense matrix with int64 entries; the modulus is carried by the caller.
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}
  static IntMatrix identity(int n);

  std::int64_t& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  std::int64_t operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b, std::int64_t m);
std::vector<std::int64_t> vec_mat_mul(const std::vector<std::int64_t>& x, const IntMatrix& a, std::int64_t m);

/// Ring Z/p^k.
struct PrimePowerRing {
  std::int64_t p;
  int k;
  std::int64_t modulus() const;
  /// p-adic valuation of a mod p^k; k for zero.
  int valuation(std::int64_t a) const;
};

/// U·A·V = D with U, V invertible over Z/p^k and D diagonal with entries
/// p^{v_i} (v_i = k for zero). Pivots on minimal valuation, then lowest
/// row-major index.
struct SmithForm {
  IntMatrix U, V, Uinv, Vinv;
  std::vector<int> diag_valuation;  // length min(rows, cols)
};
SmithForm smith_form(const IntMatrix& A, const PrimePowerRing& R);

struct SolutionSpace {
  std::vector<std::int64_t> particular;
  /// Kernel generators x with xA = 0, each with its exact additive order.
  std::vector<std::vector<std::int64_t>> generators;
  std::vector<std::int64_t> orders;
};

/// All solutions of xA = b over Z/p^k; nullopt when inconsistent.
std::optional<SolutionSpace> solve_left(const IntMatrix& A, const std::vector<std::int64_t>& b,
                                        const PrimePowerRing& R);

/// Basis of the subgroup of (Z/p^k)^n generated by the rows of G:
/// a direct sum of cyclic groups, with the order of each basis vector.
struct RowBasis {
  std::vector<std::vector<std::int64_t>> vectors;
  std::vector<std::int64_t> orders;
};
RowBasis row_space_basis(const IntMatrix& G, const PrimePowerRing& R);

/// Determinant modulo a prime.
std::int64_t det_mod_prime(IntMatrix a, std::int64_t p);
/// Inverse over Z/p^k (requires det a unit).
std::optional<IntMatrix> mat_inverse(const IntMatrix& a, const PrimePowerRing& R);

}  // namespace agrp
