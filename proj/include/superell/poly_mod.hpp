#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "superell/prime_field.hpp"
#include "superell/rng.hpp"

namespace superell {

// Univariate polynomial over F_p, ascending coefficients, canonical
// (no trailing zeros; zero polynomial is the empty list).
class ModPoly {
 public:
  explicit ModPoly(PrimeField field) : f_(field) {}
  ModPoly(PrimeField field, std::vector<std::uint64_t> coeffs);
  static ModPoly x_power(PrimeField field, std::size_t k);
  static ModPoly constant(PrimeField field, std::uint64_t c);

  const PrimeField& field() const { return f_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::uint64_t coeff(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
  std::uint64_t leading_coeff() const;
  const std::vector<std::uint64_t>& coeffs() const { return c_; }

  ModPoly operator+(const ModPoly& o) const;
  ModPoly operator-(const ModPoly& o) const;
  ModPoly operator*(const ModPoly& o) const;
  ModPoly scaled(std::uint64_t c) const;
  ModPoly monic() const;
  ModPoly derivative() const;
  std::uint64_t evaluate(std::uint64_t x) const;

  // Quotient and remainder; divisor must be nonzero.
  std::pair<ModPoly, ModPoly> divmod(const ModPoly& divisor) const;
  ModPoly operator/(const ModPoly& o) const { return divmod(o).first; }
  ModPoly operator%(const ModPoly& o) const { return divmod(o).second; }

  ModPoly shifted(std::uint64_t alpha) const;  // f(x + alpha)
  ModPoly reversed() const;                    // x^deg * f(1/x)

  bool operator==(const ModPoly& o) const {
    return f_ == o.f_ && c_ == o.c_;
  }
  bool operator!=(const ModPoly& o) const { return !(*this == o); }
  // Degree-then-coefficient order; gives factor lists a canonical sort.
  bool operator<(const ModPoly& o) const;

  std::string to_string() const;  // includes " mod p" suffix

 private:
  PrimeField f_;
  std::vector<std::uint64_t> c_;
  void normalize();
};

// Monic gcd; errors when both inputs are zero.
ModPoly poly_gcd(const ModPoly& a, const ModPoly& b);

ModPoly pow_mod(const ModPoly& base, const mpz_class& e, const ModPoly& mod);

bool is_squarefree(const ModPoly& f);

struct PolyFactor {
  ModPoly factor;  // monic irreducible
  unsigned multiplicity;
};

struct Factorization {
  std::uint64_t unit;  // leading coefficient of the input
  std::vector<PolyFactor> factors;  // sorted by (degree, coefficients)
  ModPoly product_times_unit() const;  // rebuilds the input exactly
};

// Complete factorization into monic irreducibles (squarefree split,
// distinct-degree split, then seeded Cantor-Zassenhaus). Deterministic
// for a fixed seed. Requires deg f >= 1.
Factorization factor_mod_p(const ModPoly& f, RngSeed seed);

bool is_irreducible(const ModPoly& f);

// Resultant/discriminant over F_p via Sylvester determinant — kept as an
// independent route for cross-checking the integer versions after reduction.
std::uint64_t resultant_mod(const ModPoly& a, const ModPoly& b);
std::uint64_t discriminant_mod(const ModPoly& f);

}  // namespace superell
