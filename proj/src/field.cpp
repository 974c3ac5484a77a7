#include "fbal/field.hpp"

#include <atomic>
#include <stdexcept>
#include <string>

namespace fbal::field {

namespace {
std::atomic<std::uint32_t> g_prime{kDefaultPrime};
}

std::uint32_t prime() { return g_prime.load(std::memory_order_relaxed); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void set_prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
  g_prime.store(p, std::memory_order_relaxed);
}

Scalar inv(Scalar a) {
  if (a == 0) throw std::domain_error("inverse of zero in F_p");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = prime(), new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return from_int(t);
}

Scalar from_int(std::int64_t v) {
  std::int64_t p = prime();
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return Scalar(r);
}

PrimeGuard::PrimeGuard(std::uint32_t p) : saved_(prime()) { set_prime(p); }
PrimeGuard::~PrimeGuard() { g_prime.store(saved_, std::memory_order_relaxed); }

}  // namespace fbal::field
