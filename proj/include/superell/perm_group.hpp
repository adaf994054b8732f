#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "superell/permutation.hpp"

namespace superell {

enum class GroupFamily { Symmetric, Alternating };

struct GroupSpec {
  GroupFamily family;
  std::size_t n;

  std::string name() const {
    return (family == GroupFamily::Symmetric ? "S" : "A") + std::to_string(n);
  }
};

// Fixed generating sets:
//   Symmetric n>=2:   (0 1) and the n-cycle (0 1 ... n-1).
//   Alternating n>=3: (0 1 2) and, for odd n, the n-cycle; for even n the
//                     (n-1)-cycle (1 2 ... n-1) fixing 0.
std::vector<Permutation> standard_generators(const GroupSpec& g);

mpz_class group_order(const GroupSpec& g);  // n! or n!/2

// Size of the subgroup generated by gens, by breadth-first closure.
// Intended for small n (tests use n <= 8).
std::size_t enumerate_group_order(const std::vector<Permutation>& gens);

}  // namespace superell
