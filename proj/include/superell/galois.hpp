#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "superell/permutation.hpp"
#include "superell/poly_int.hpp"
#include "superell/poly_mod.hpp"
#include "superell/rng.hpp"

namespace superell {

// Factorization pattern of f mod ell for a prime ell dividing neither the
// leading coefficient nor the discriminant; such a cycle type occurs in
// the Galois group of f.
struct FrobeniusWitness {
  std::uint64_t ell;
  CycleType pattern;
  std::vector<ModPoly> factors;  // stored so the witness can be re-verified
};

enum class GaloisVerdict {
  SymmetricGroup,
  AlternatingGroup,
  ContainsAlternating,  // parity undetermined; unreachable over Q, where the
                        // discriminant always settles it
  Inconclusive
};

std::string to_string(GaloisVerdict v);

struct GaloisCertificate {
  GaloisVerdict verdict = GaloisVerdict::Inconclusive;
  std::vector<FrobeniusWitness> witnesses;  // sorted by ell
  mpz_class disc;
  bool disc_square = false;
  std::vector<std::string> rules_fired;
  std::vector<std::string> notes;
};

FrobeniusWitness frobenius_cycle_type(const IntPoly& f, std::uint64_t ell,
                                      RngSeed seed = 0);

// Scans primes ell <= prime_budget (skipping divisors of disc and lc) and
// assembles a conservative verdict:
//   R1  pattern [n]: the group is transitive and contains an n-cycle.
//   R2  pattern [q,1,...,1] with q prime, n/2 < q < n-2, plus R1: the group
//       contains the full alternating group.
//   R3  pattern with a single even part equal to 2 and all other parts odd,
//       plus R1 and primitivity (n prime, or 2-transitivity witnessed by a
//       pattern [n-1,1]): the group is the full symmetric group.
// The discriminant's squareness settles the parity. Verdicts only ever say
// what the fired rules prove.
GaloisCertificate certify(const IntPoly& f, std::uint64_t prime_budget,
                          RngSeed seed);

// d > 0 and exactly a square. d = 0 is rejected (non-squarefree upstream).
bool disc_is_square(const mpz_class& d);

}  // namespace superell
