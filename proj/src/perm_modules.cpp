#include "superell/perm_modules.hpp"

#include <stdexcept>

namespace superell {

GModule::GModule(PrimeField f, std::size_t d,
                 std::vector<PrimeFieldMatrix> gens, std::string lbl)
    : field(f), dim(d), generators(std::move(gens)), label(std::move(lbl)) {
  if (generators.empty())
    throw std::invalid_argument("GModule: need at least one generator");
  for (const PrimeFieldMatrix& g : generators) {
    if (g.rows() != dim || g.cols() != dim || g.field() != field)
      throw std::invalid_argument("GModule: generator shape mismatch");
    if (dim > 0 && !try_inverse(g))
      throw std::invalid_argument("GModule: generator not invertible");
  }
}

namespace {

// Coordinates of s.(e_i - e_{n-1}) in the basis u_j = e_j - e_{n-1} of the
// sum-zero subspace: u_{s(i)} - u_{s(n-1)} with the convention u_{n-1} = 0.
Vec sum_zero_image(const PrimeField& p, const Permutation& s,
                   std::uint32_t i) {
  const std::size_t n = s.size();
  Vec c(n - 1, 0);
  std::uint32_t a = s(i);
  std::uint32_t b = s(static_cast<std::uint32_t>(n - 1));
  if (a != n - 1) c[a] = p.add(c[a], 1);
  if (b != n - 1) c[b] = p.sub(c[b], 1);
  return c;
}

// Quotient by the all-ones coordinate vector (the image of 1_B): drop the
// last coordinate after subtracting it from the others.
Vec quotient_by_ones(const PrimeField& p, const Vec& c) {
  Vec r(c.size() - 1);
  for (std::size_t j = 0; j + 1 < c.size(); ++j) r[j] = p.sub(c[j], c.back());
  return r;
}

}  // namespace

PrimeFieldMatrix heart_action_matrix(const PrimeField& p,
                                     const Permutation& s) {
  const std::size_t n = s.size();
  if (n < 2) throw std::invalid_argument("heart_action_matrix: n < 2");
  const bool divides = (n % p.modulus() == 0);
  const std::size_t dim = divides ? n - 2 : n - 1;
  PrimeFieldMatrix m(p, dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    Vec col = sum_zero_image(p, s, static_cast<std::uint32_t>(i));
    if (divides) col = quotient_by_ones(p, col);
    for (std::size_t r = 0; r < dim; ++r) m.set(r, i, col[r]);
  }
  return m;
}

GModule build_v00(std::size_t n, const PrimeField& p, const GroupSpec& g) {
  if (g.n != n) throw std::invalid_argument("build_v00: group size mismatch");
  std::vector<Permutation> gens = standard_generators(g);
  std::vector<PrimeFieldMatrix> mats;
  mats.reserve(gens.size());
  for (const Permutation& s : gens) mats.push_back(heart_action_matrix(p, s));
  const bool divides = (n % p.modulus() == 0);
  const std::size_t dim = divides ? n - 2 : n - 1;
  std::string label = "V00(n=" + std::to_string(n) +
                      ",p=" + std::to_string(p.modulus()) + "," +
                      (g.family == GroupFamily::Symmetric ? "Sym" : "Alt") +
                      ")";
  return GModule(p, dim, std::move(mats), std::move(label));
}

GModule build_permutation_module(std::size_t n, const PrimeField& p,
                                 const GroupSpec& g) {
  if (g.n != n)
    throw std::invalid_argument("build_permutation_module: size mismatch");
  std::vector<Permutation> gens = standard_generators(g);
  std::vector<PrimeFieldMatrix> mats;
  for (const Permutation& s : gens) {
    PrimeFieldMatrix m(p, n, n);
    // s.e_j = e_{s(j)}.
    for (std::size_t j = 0; j < n; ++j)
      m.set(s(static_cast<std::uint32_t>(j)), j, 1);
    mats.push_back(std::move(m));
  }
  std::string label = "FpB(n=" + std::to_string(n) +
                      ",p=" + std::to_string(p.modulus()) + "," +
                      (g.family == GroupFamily::Symmetric ? "Sym" : "Alt") +
                      ")";
  return GModule(p, n, std::move(mats), std::move(label));
}

PrimeFieldMatrix oddeven_intertwiner(std::size_t n, const PrimeField& p,
                                     GroupFamily family) {
  (void)family;  // the matrix is the same for both families
  if (n % p.modulus() != 0)
    throw std::invalid_argument(
        "oddeven_intertwiner: p must divide n (otherwise the modules "
        "already coincide)");
  if (n < 3) throw std::invalid_argument("oddeven_intertwiner: n too small");
  const std::size_t dim = n - 2;  // = (n-1) - 1, both sides
  // Following the composition: a basis vector e_i - e_{n-2} of the
  // (n-1)-point sum-zero space, viewed inside F_p^B with value 0 at n-1,
  // then reduced modulo the all-ones vector.
  PrimeFieldMatrix t(p, dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    Vec c(n - 1, 0);
    c[i] = p.add(c[i], 1);
    c[n - 2] = p.sub(c[n - 2], 1);
    Vec reduced = quotient_by_ones(p, c);
    for (std::size_t r = 0; r < dim; ++r) t.set(r, i, reduced[r]);
  }
  if (!try_inverse(t))
    throw std::logic_error("oddeven_intertwiner: matrix unexpectedly singular");
  return t;
}

long permutation_character(const CycleType& t) {
  return static_cast<long>(t.fixed_points());
}

long chi(const CycleType& t) { return permutation_character(t) - 1; }

long brauer_phi(const CycleType& t, std::size_t n, const PrimeField& p) {
  if (t.n() != n)
    throw std::invalid_argument("brauer_phi: cycle type does not sum to n");
  if (!t.is_p_regular(p.modulus()))
    throw std::invalid_argument("brauer_phi: cycle type is p-singular");
  long value = chi(t);
  if (n % p.modulus() == 0) value -= 1;
  return value;
}

}  // namespace superell
