#pragma once

#include <cstdint>
#include <stdexcept>

#include <gmpxx.h>

namespace superell {

// The field F_p for a prime modulus p < 2^31. Elements are residues in
// [0, p) carried as uint64_t; products never overflow.
class PrimeField {
 public:
  static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31) - 1;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return (a * b) % p_;
  }
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

  std::uint64_t reduce_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return static_cast<std::uint64_t>(r);
  }
  std::uint64_t reduce(const mpz_class& v) const;

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

  // Deterministic Miller-Rabin; exact for all n < 3.2e9, which covers the
  // admissible modulus range.
  static bool is_prime(std::uint64_t n);

 private:
  std::uint64_t p_;
};

}  // namespace superell
