#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "superell/prime_field.hpp"

namespace superell {

class ModPoly;

// Univariate polynomial with arbitrary-precision integer coefficients,
// stored in ascending degree order with no trailing zeros. The zero
// polynomial has an empty coefficient list and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  static IntPoly from_ints(std::vector<long> coeffs);
  static IntPoly x_power(std::size_t k);  // x^k

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const mpz_class& coeff(std::size_t k) const;
  const mpz_class& leading_coeff() const;
  const std::vector<mpz_class>& coeffs() const { return c_; }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly negated() const;
  IntPoly derivative() const;
  mpz_class evaluate(const mpz_class& x) const;
  mpq_class evaluate(const mpq_class& x) const;

  ModPoly reduce_mod(const PrimeField& field) const;

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  // Human-readable form ("x^5 - x - 1"); parse_polynomial round-trips it.
  std::string to_string() const;

 private:
  std::vector<mpz_class> c_;
  void normalize();
};

// Determinant of the Sylvester matrix of a and b, computed exactly by
// fraction-free (Bareiss) elimination. Requires deg a, deg b >= 1.
mpz_class resultant(const IntPoly& a, const IntPoly& b);

// (-1)^{n(n-1)/2} resultant(f, f') / lc(f); zero iff f has a repeated root.
// Requires deg f >= 2.
mpz_class discriminant(const IntPoly& f);

}  // namespace superell
