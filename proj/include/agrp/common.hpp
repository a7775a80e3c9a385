#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace agrp {

/// Element index inside a Cayley table. The identity is always 0.
using Elem = int;

/// Raised when an input violates a documented precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a configured resource cap (search budget, table size, ...)
/// is exceeded. Never used to signal a mathematical answer.
class ResourceExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal consistency check that follows from theory fails.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InvalidInput(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw InternalError(what);
}

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
bool is_prime(std::int64_t n);

/// Distinct prime divisors, ascending.
std::vector<std::int64_t> prime_divisors(std::int64_t n);

/// Largest power of p dividing n.
std::int64_t p_part(std::int64_t n, std::int64_t p);

/// Exponent k with p^k = n, or -1 if n is not a power of p.
int log_p(std::int64_t n, std::int64_t p);

/// Inverse of a modulo m (gcd(a, m) = 1 required).
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// splitmix64: small, portable, seedable. Used everywhere randomness is
/// needed so that output is identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v;
    do v = next(); while (v >= limit);
    return v % bound;
  }

 private:
  std::uint64_t state_;
};

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = rng.below(i);
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace agrp
