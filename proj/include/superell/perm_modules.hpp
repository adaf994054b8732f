#pragma once

#include <string>
#include <vector>

#include "superell/matrix.hpp"
#include "superell/perm_group.hpp"

namespace superell {

// A representation given by one invertible matrix per group generator.
struct GModule {
  PrimeField field;
  std::size_t dim;
  std::vector<PrimeFieldMatrix> generators;
  std::string label;

  GModule(PrimeField f, std::size_t d, std::vector<PrimeFieldMatrix> gens,
          std::string lbl);
};

// Matrix of the action (s.h)(b) = h(s^{-1} b) of s on the heart module:
// the sum-zero subspace of F_p^B in the basis {e_i - e_{n-1}, i < n-1},
// quotiented by the all-ones vector (coset reps: first n-2 basis vectors)
// when p divides n.
PrimeFieldMatrix heart_action_matrix(const PrimeField& p,
                                     const Permutation& s);

// The module (F_p^B)^00 for Sym(B) or Alt(B) on #B = n points, acting via
// standard_generators. dim = n-1 when p does not divide n, else n-2.
GModule build_v00(std::size_t n, const PrimeField& p, const GroupSpec& g);

// Full permutation module F_p^B (permutation matrices of the generators).
GModule build_permutation_module(std::size_t n, const PrimeField& p,
                                 const GroupSpec& g);

// Invertible T with T * rho'(s) = rho(s) * T for all generators s of the
// stabilizer of the point n-1, where rho' is the heart module on n-1 points
// and rho the restriction of the n-point heart module. Requires p | n.
PrimeFieldMatrix oddeven_intertwiner(std::size_t n, const PrimeField& p,
                                     GroupFamily family);

// Number of fixed points, and the character of the reflection-type
// subrepresentation (fixed points minus one).
long permutation_character(const CycleType& t);
long chi(const CycleType& t);

// Integer Brauer character of the heart module at a p-regular class:
// chi(t) when p does not divide n, chi(t) - 1 when it does. (The source
// text states the divisible case self-referentially; it is read as
// chi - 1, which matches the dimension at the identity.)
long brauer_phi(const CycleType& t, std::size_t n, const PrimeField& p);

}  // namespace superell
