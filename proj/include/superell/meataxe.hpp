#pragma once

#include <optional>
#include <vector>

#include "superell/perm_modules.hpp"
#include "superell/rng.hpp"

namespace superell {

struct SubmoduleReport {
  std::vector<std::size_t> dims;  // sorted, one entry per distinct submodule
  std::size_t count = 0;
  bool exhaustive = false;
};

struct SimplicityVerdict {
  bool simple = false;
  bool absolutely_simple = false;
  std::size_t commutant_dim = 0;
  // Echelon basis of a proper nonzero submodule when not simple.
  std::optional<std::vector<Vec>> witness;
};

// Echelonized basis of the smallest subspace containing the seeds and
// stable under every generator.
std::vector<Vec> spin(const GModule& m, const std::vector<Vec>& seeds);

// Dimension over F_p of {X : Xg = gX for all generators g}, via the
// nullspace of the stacked commutator system.
std::size_t commutant_dimension(const GModule& m);

// Decides simplicity. Randomized search for singular algebra elements with
// full kernel scans (Norton-style certificates in both directions), plus an
// exhaustive spin of every vector as fallback when p^dim <= 2^20. Never
// reports "simple" without a certificate; witnesses are returned verified.
SimplicityVerdict is_simple(const GModule& m, RngSeed seed);

// simple && commutant == F_p. Over a prime field the commutant of a simple
// module is a finite division ring, hence a field, so this criterion is
// exact.
SimplicityVerdict is_absolutely_simple(const GModule& m, RngSeed seed);

// Spins every vector of the space (requires p^dim <= 2^20), deduplicates
// the resulting submodules, and always counts the zero and full submodules.
SubmoduleReport enumerate_submodules_tiny(const GModule& m);

// Heuristic refutation probe for very simplicity: searches for a proper
// unital subalgebra of End(V) stable under conjugation by the generators.
// A returned basis is re-verified exactly (certified counterexample); a
// nullopt result proves nothing.
std::optional<std::vector<PrimeFieldMatrix>> stable_subalgebra_probe(
    const GModule& m, RngSeed seed, std::size_t budget);

}  // namespace superell
