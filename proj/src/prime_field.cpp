#include "superell/prime_field.hpp"

namespace superell {

namespace {

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = (r * a) % m;
    a = (a * a) % m;
    e >>= 1;
  }
  return r;
}

}  // namespace

bool PrimeField::is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Witnesses {2,3,5,7} decide primality for all n < 3,215,031,751.
  for (std::uint64_t a : {2, 3, 5, 7}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = (x * x) % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p > kMaxModulus)
    throw std::invalid_argument("PrimeField: modulus exceeds 2^31-1");
  if (!is_prime(p))
    throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) +
                                " is not prime");
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
  return pow_mod(a, e, p_);
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw std::domain_error("PrimeField: inverse of zero");
  return pow_mod(a % p_, p_ - 2, p_);
}

std::uint64_t PrimeField::reduce(const mpz_class& v) const {
  mpz_class r = v % static_cast<unsigned long>(p_);
  if (r < 0) r += static_cast<unsigned long>(p_);
  return r.get_ui();
}

}  // namespace superell
