#include "superell/perm_group.hpp"

#include <set>
#include <stdexcept>

namespace superell {

std::vector<Permutation> standard_generators(const GroupSpec& g) {
  const std::size_t n = g.n;
  if (g.family == GroupFamily::Symmetric) {
    if (n < 2) throw std::invalid_argument("standard_generators: S_n needs n >= 2");
    std::vector<std::uint32_t> full(n);
    for (std::size_t i = 0; i < n; ++i) full[i] = static_cast<std::uint32_t>(i);
    return {Permutation::from_cycle(n, {0, 1}), Permutation::from_cycle(n, full)};
  }
  if (n < 3) throw std::invalid_argument("standard_generators: A_n needs n >= 3");
  Permutation three_cycle = Permutation::from_cycle(n, {0, 1, 2});
  if (n % 2 == 1) {
    std::vector<std::uint32_t> full(n);
    for (std::size_t i = 0; i < n; ++i) full[i] = static_cast<std::uint32_t>(i);
    return {three_cycle, Permutation::from_cycle(n, full)};
  }
  std::vector<std::uint32_t> long_cycle(n - 1);
  for (std::size_t i = 0; i < n - 1; ++i)
    long_cycle[i] = static_cast<std::uint32_t>(i + 1);
  return {three_cycle, Permutation::from_cycle(n, long_cycle)};
}

mpz_class group_order(const GroupSpec& g) {
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(g.n));
  if (g.family == GroupFamily::Alternating) fact /= 2;
  return fact;
}

std::size_t enumerate_group_order(const std::vector<Permutation>& gens) {
  if (gens.empty()) throw std::invalid_argument("enumerate_group_order: no generators");
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<Permutation> frontier{Permutation::identity(gens.front().size())};
  seen.insert(frontier.front().images());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& s : frontier) {
      for (const Permutation& g : gens) {
        Permutation t = g.compose(s);
        if (seen.insert(t.images()).second) next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace superell
