#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace wtate {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in prime field") {}
};

/// Raised when a computation would exceed a configured size budget.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A residue in [0, p). Only a PrimeField knows how to combine them.
struct FieldElement {
  std::uint32_t value = 0;

  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t v) : value(v) {}

  constexpr bool is_zero() const { return value == 0; }
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

/// The prime field F_p for a word-sized prime p < 2^31.
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultCharacteristic = 32003;

  explicit PrimeField(std::uint32_t p = kDefaultCharacteristic);

  std::uint32_t characteristic() const { return p_; }

  FieldElement normalize(std::int64_t n) const {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return FieldElement(static_cast<std::uint32_t>(r));
  }

  FieldElement zero() const { return FieldElement(0); }
  FieldElement one() const { return FieldElement(1); }

  FieldElement add(FieldElement a, FieldElement b) const {
    std::uint32_t s = a.value + b.value;
    return FieldElement(s >= p_ ? s - p_ : s);
  }
  FieldElement sub(FieldElement a, FieldElement b) const {
    return FieldElement(a.value >= b.value ? a.value - b.value : a.value + p_ - b.value);
  }
  FieldElement neg(FieldElement a) const {
    return FieldElement(a.value == 0 ? 0 : p_ - a.value);
  }
  FieldElement mul(FieldElement a, FieldElement b) const {
    return FieldElement(static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(a.value) * b.value % p_));
  }
  /// a - b*c
  FieldElement sub_mul(FieldElement a, FieldElement b, FieldElement c) const {
    return sub(a, mul(b, c));
  }

  /// Multiplicative inverse by the extended Euclidean algorithm.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

  /// Signed representative in (-p/2, p/2], for printing.
  std::int64_t centered(FieldElement a) const {
    return a.value > p_ / 2 ? static_cast<std::int64_t>(a.value) - p_ : a.value;
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace wtate
