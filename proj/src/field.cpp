#include "wtate/field.hpp"

namespace wtate {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) throw Error("characteristic " + std::to_string(p) + " exceeds 2^31");
  if (!is_prime(p)) throw Error("characteristic " + std::to_string(p) + " is not prime");
}

FieldElement PrimeField::inv(FieldElement a) const {
  if (a.value == 0) throw DivisionByZero();
  std::int64_t r0 = p_, r1 = a.value;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  return normalize(t0);
}

}  // namespace wtate
