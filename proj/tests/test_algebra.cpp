#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superell/matrix.hpp"
#include "superell/poly_int.hpp"
#include "superell/poly_mod.hpp"
#include "superell/quotient.hpp"
#include "superell/rng.hpp"

using namespace superell;

namespace {

PrimeFieldMatrix matrix_from(PrimeField f, std::size_t rows, std::size_t cols,
                             std::vector<std::uint64_t> vals) {
  PrimeFieldMatrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, vals[i * cols + j]);
  return m;
}

ModPoly mod_poly(std::uint64_t p, std::vector<std::uint64_t> asc) {
  return ModPoly(PrimeField(p), std::move(asc));
}

}  // namespace

TEST_CASE("prime field basics") {
  CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(91), std::invalid_argument);  // 7*13
  CHECK_THROWS_AS(PrimeField(std::uint64_t{1} << 32), std::invalid_argument);
  PrimeField f(7);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.pow(3, 6) == 1);
  CHECK(f.reduce_int(-1) == 6);
  CHECK(PrimeField::is_prime(2147483647));  // 2^31 - 1
  CHECK_FALSE(PrimeField::is_prime(2147483647ull - 2));
}

TEST_CASE("rank_nullspace on the spec examples") {
  // identity 3x3 over F_5
  auto id = PrimeFieldMatrix::identity(PrimeField(5), 3);
  auto rn = rank_nullspace(id);
  CHECK(rn.rank == 3);
  CHECK(rn.nullspace.empty());

  // zero 2x4 over F_3
  PrimeFieldMatrix zero(PrimeField(3), 2, 4);
  rn = rank_nullspace(zero);
  CHECK(rn.rank == 0);
  CHECK(rn.nullspace.size() == 4);

  // [[1,2],[2,1]] over F_3: rank 1, kernel spanned by (1,1).
  // Oracle: exhaustive over all 9 vectors.
  auto m = matrix_from(PrimeField(3), 2, 2, {1, 2, 2, 1});
  std::vector<Vec> kernel_by_force;
  for (std::uint64_t a = 0; a < 3; ++a)
    for (std::uint64_t b = 0; b < 3; ++b) {
      Vec v{a, b};
      Vec mv = m.apply(v);
      if (mv[0] == 0 && mv[1] == 0 && !(a == 0 && b == 0))
        kernel_by_force.push_back(v);
    }
  CHECK(kernel_by_force.size() == 2);  // (1,1) and (2,2)
  rn = rank_nullspace(m);
  CHECK(rn.rank == 1);
  REQUIRE(rn.nullspace.size() == 1);
  CHECK(rn.nullspace[0] == Vec{1, 1});
}

TEST_CASE("rank + nullity, kernel membership, rowspace reproduction") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    PrimeField f(p);
    Rng rng(1234 + p);
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t rows = 1 + rng.below(12);
      std::size_t cols = 1 + rng.below(12);
      PrimeFieldMatrix m(f, rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rng.below(p));
      auto rn = rank_nullspace(m);
      CHECK(rn.rank + rn.nullspace.size() == cols);
      for (const Vec& v : rn.nullspace) {
        Vec mv = m.apply(v);
        CHECK(std::all_of(mv.begin(), mv.end(),
                          [](std::uint64_t x) { return x == 0; }));
      }
      // Every original row lies in the row space of the echelon form.
      PrimeFieldMatrix ech = rref(m);
      EchelonBasis basis(f, cols);
      for (std::size_t i = 0; i < rows; ++i) basis.insert(ech.row(i));
      for (std::size_t i = 0; i < rows; ++i) CHECK(basis.contains(m.row(i)));
    }
  }
}

TEST_CASE("solve_linear") {
  PrimeField f2(2);
  auto id = PrimeFieldMatrix::identity(f2, 3);
  Vec b{1, 0, 1};
  auto x = solve_linear(id, b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  PrimeFieldMatrix zero(f2, 2, 2);
  CHECK_FALSE(solve_linear(zero, Vec{1, 0}).has_value());

  // [[1,1],[0,0]] over F_2, b = (1,0): solvable; verified by multiplication.
  // Oracle: exhaustive over the 4 candidate vectors.
  auto m = matrix_from(f2, 2, 2, {1, 1, 0, 0});
  std::size_t solutions = 0;
  for (std::uint64_t a = 0; a < 2; ++a)
    for (std::uint64_t b2 = 0; b2 < 2; ++b2)
      if (m.apply(Vec{a, b2}) == Vec{1, 0}) ++solutions;
  CHECK(solutions == 2);
  auto sol = solve_linear(m, Vec{1, 0});
  REQUIRE(sol.has_value());
  CHECK(m.apply(*sol) == Vec{1, 0});

  CHECK_THROWS_AS(solve_linear(m, Vec{1, 0, 0}), std::invalid_argument);
}

TEST_CASE("poly_gcd examples") {
  // gcd(f, 0) = monic(f)
  ModPoly f = mod_poly(5, {1, 0, 2});  // 2x^2 + 1
  ModPoly zero(PrimeField(5));
  CHECK(poly_gcd(f, zero) == f.monic());
  CHECK_THROWS_AS(poly_gcd(zero, zero), std::invalid_argument);

  // gcd(x^2-1, x-1) = x-1 over F_5
  ModPoly a = mod_poly(5, {4, 0, 1});
  ModPoly b = mod_poly(5, {4, 1});
  CHECK(poly_gcd(a, b) == b.monic());

  // gcd(x^5+x+1, x^4+1) over F_2 is 1. Oracle: brute-force scan over all
  // divisor candidates of degree 1..4.
  ModPoly f2 = mod_poly(2, {1, 1, 0, 0, 0, 1});
  ModPoly d2 = f2.derivative();
  CHECK(d2 == mod_poly(2, {1, 0, 0, 0, 1}));
  bool common_divisor_found = false;
  for (std::uint64_t mask = 2; mask < 64; ++mask) {
    std::vector<std::uint64_t> coeffs;
    for (int bit = 0; bit < 6; ++bit) coeffs.push_back((mask >> bit) & 1);
    ModPoly cand = mod_poly(2, std::move(coeffs));
    if (cand.degree() < 1) continue;
    if ((f2 % cand).is_zero() && (d2 % cand).is_zero())
      common_divisor_found = true;
  }
  CHECK_FALSE(common_divisor_found);
  CHECK(poly_gcd(f2, d2).degree() == 0);
  CHECK(is_squarefree(f2));
}

TEST_CASE("factor_mod_p examples") {
  // x^2+1 = (x+1)^2 over F_2
  auto fac = factor_mod_p(mod_poly(2, {1, 0, 1}), 0);
  REQUIRE(fac.factors.size() == 1);
  CHECK(fac.factors[0].factor == mod_poly(2, {1, 1}));
  CHECK(fac.factors[0].multiplicity == 2);

  // x^5+x+1 = (x^2+x+1)(x^3+x^2+1) over F_2; verified by multiplication.
  auto f = mod_poly(2, {1, 1, 0, 0, 0, 1});
  fac = factor_mod_p(f, 7);
  REQUIRE(fac.factors.size() == 2);
  CHECK(fac.factors[0].factor == mod_poly(2, {1, 1, 1}));
  CHECK(fac.factors[1].factor == mod_poly(2, {1, 0, 1, 1}));
  CHECK(fac.factors[0].factor * fac.factors[1].factor == f);

  // x^2+1 = (x+2)(x+3) over F_5
  fac = factor_mod_p(mod_poly(5, {1, 0, 1}), 1);
  REQUIRE(fac.factors.size() == 2);
  CHECK(fac.factors[0].factor == mod_poly(5, {2, 1}));
  CHECK(fac.factors[1].factor == mod_poly(5, {3, 1}));

  CHECK_THROWS_AS(factor_mod_p(mod_poly(5, {3}), 0), std::invalid_argument);
}

TEST_CASE("factorization product identity on 500 seeded random inputs") {
  std::uint64_t primes[] = {2, 3, 5, 7, 11};
  Rng rng(20240901);
  int cases = 0;
  while (cases < 500) {
    PrimeField f(primes[rng.below(5)]);
    std::size_t deg = 1 + rng.below(10);
    std::vector<std::uint64_t> c(deg + 1);
    for (auto& x : c) x = rng.below(f.modulus());
    if (c[deg] == 0) c[deg] = 1;
    ModPoly poly(f, std::move(c));
    Factorization fac = factor_mod_p(poly, rng.next());
    CHECK(fac.product_times_unit() == poly);
    for (const PolyFactor& pf : fac.factors)
      CHECK(is_irreducible(pf.factor));
    ++cases;
  }
}

TEST_CASE("factorization is deterministic for a fixed seed") {
  ModPoly f = mod_poly(11, {3, 1, 4, 1, 5, 9, 2, 6, 1});
  auto fac1 = factor_mod_p(f, 42);
  auto fac2 = factor_mod_p(f, 42);
  REQUIRE(fac1.factors.size() == fac2.factors.size());
  for (std::size_t i = 0; i < fac1.factors.size(); ++i) {
    CHECK(fac1.factors[i].factor == fac2.factors[i].factor);
    CHECK(fac1.factors[i].multiplicity == fac2.factors[i].multiplicity);
  }
}

TEST_CASE("resultant and discriminant") {
  CHECK(discriminant(IntPoly::from_ints({1, 0, 1})) == -4);       // x^2+1
  CHECK(discriminant(IntPoly::from_ints({-1, -1, 0, 1})) == -23); // x^3-x-1
  CHECK(discriminant(IntPoly::from_ints({-1, -1, 0, 0, 0, 1})) == 2869);
  CHECK_THROWS_AS(discriminant(IntPoly::from_ints({1, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(resultant(IntPoly::from_ints({1}),
                            IntPoly::from_ints({1, 1})),
                  std::invalid_argument);
  // disc of a polynomial with a repeated root vanishes.
  IntPoly sq = IntPoly::from_ints({1, 1}) * IntPoly::from_ints({1, 1}) *
               IntPoly::from_ints({-1, 1});
  CHECK(discriminant(sq) == 0);
}

TEST_CASE("discriminant commutes with reduction mod ell") {
  Rng rng(777);
  std::uint64_t ells[] = {3, 5, 7, 11, 13, 17};
  int done = 0;
  while (done < 50) {
    std::size_t deg = 2 + rng.below(5);
    std::vector<mpz_class> c(deg + 1);
    for (auto& x : c)
      x = mpz_class(static_cast<long>(rng.below(41)) - 20);
    IntPoly f{std::move(c)};
    if (f.degree() < 2) continue;
    std::uint64_t ell = ells[rng.below(6)];
    PrimeField F(ell);
    if (F.reduce(f.leading_coeff()) == 0) continue;  // keep degree stable
    mpz_class d = discriminant(f);
    ModPoly fm = f.reduce_mod(F);
    CHECK(F.reduce(d) == discriminant_mod(fm));
    ++done;
  }
}

TEST_CASE("quotient ring inversion") {
  RationalField Q;
  // invert x in Q[x]/(x^2+1) -> -x
  RatPoly mod_poly_q(Q, {mpq_class(1), mpq_class(0), mpq_class(1)});
  RatQuotient x(mod_poly_q, RatPoly(Q, {mpq_class(0), mpq_class(1)}));
  RatQuotient inv = quotient_invert(x);
  CHECK(inv == RatQuotient(mod_poly_q, RatPoly(Q, {mpq_class(0), mpq_class(-1)})));
  CHECK((inv * x).representative() == RatPoly(Q, {mpq_class(1)}));

  // invert 1 -> 1
  RatQuotient one(mod_poly_q, RatPoly(Q, {mpq_class(1)}));
  CHECK(quotient_invert(one) == one);

  // invert x in F_7[x]/(x^3+x+1); checked by multiplication.
  FpField F7{PrimeField(7)};
  FpPoly mod7(F7, {1, 1, 0, 1});
  FpQuotient x7(mod7, FpPoly(F7, {0, 1}));
  FpQuotient inv7 = quotient_invert(x7);
  CHECK((inv7 * x7).representative() == FpPoly(F7, {1}));

  // zero divisor: x in Q[x]/(x^2) carries the factor found.
  RatPoly x_squared(Q, {mpq_class(0), mpq_class(0), mpq_class(1)});
  RatQuotient zd(x_squared, RatPoly(Q, {mpq_class(0), mpq_class(1)}));
  CHECK_THROWS_AS(quotient_invert(zd), NonInvertibleError);
}

TEST_CASE("quotient inversion exhaustive over F_3[x]/(x^2+1)") {
  FpField F3{PrimeField(3)};
  FpPoly mod3(F3, {1, 0, 1});
  int invertible = 0;
  for (std::uint64_t a = 0; a < 3; ++a)
    for (std::uint64_t b = 0; b < 3; ++b) {
      if (a == 0 && b == 0) continue;
      FpQuotient e(mod3, FpPoly(F3, {a, b}));
      FpQuotient inv = quotient_invert(e);
      CHECK((inv * e).representative() == FpPoly(F3, {1}));
      ++invertible;
    }
  CHECK(invertible == 8);
}

TEST_CASE("IntPoly string round trip pieces") {
  IntPoly f = IntPoly::from_ints({-1, -1, 0, 0, 0, 1});
  CHECK(f.to_string() == "x^5 - x - 1");
  CHECK(IntPoly::from_ints({2, 0, 3}).to_string() == "3*x^2 + 2");
  CHECK(IntPoly().to_string() == "0");
}
