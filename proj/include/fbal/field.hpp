#pragma once

#include <cstdint>

namespace fbal {

/// Residue type for F_p. Values are always reduced into [0, p).
using Scalar = std::uint32_t;

namespace field {

inline constexpr std::uint32_t kDefaultPrime = 101;

/// The session modulus. Set once before building any data; every matrix
/// and representation assumes its entries are reduced modulo this value.
std::uint32_t prime();

/// Throws std::invalid_argument unless p is a prime below 2^31.
void set_prime(std::uint32_t p);

bool is_prime(std::uint64_t n);

inline Scalar add(Scalar a, Scalar b) {
  std::uint64_t s = std::uint64_t(a) + b;
  std::uint32_t p = prime();
  return Scalar(s >= p ? s - p : s);
}

inline Scalar sub(Scalar a, Scalar b) {
  std::uint32_t p = prime();
  return a >= b ? a - b : Scalar(std::uint64_t(a) + p - b);
}

inline Scalar neg(Scalar a) { return a == 0 ? 0 : prime() - a; }

inline Scalar mul(Scalar a, Scalar b) {
  return Scalar((std::uint64_t(a) * b) % prime());
}

Scalar inv(Scalar a);

/// Maps an arbitrary signed integer to its residue.
Scalar from_int(std::int64_t v);

/// Scoped override of the session modulus, restoring the previous value.
class PrimeGuard {
 public:
  explicit PrimeGuard(std::uint32_t p);
  ~PrimeGuard();
  PrimeGuard(const PrimeGuard&) = delete;
  PrimeGuard& operator=(const PrimeGuard&) = delete;

 private:
  std::uint32_t saved_;
};

}  // namespace field
}  // namespace fbal
