#include "superell/meataxe.hpp"

#include <set>
#include <stdexcept>

namespace superell {

namespace {

constexpr std::size_t kTinySpaceBound = std::size_t{1} << 20;
// Kernels with more 1-dimensional subspaces than this are only used for
// the reducibility direction, not for simplicity certificates.
constexpr std::size_t kKernelScanCap = 4096;
constexpr std::size_t kAttemptCap = 10000;

// base^exp, clamped to bound+1 on overflow past bound.
std::size_t checked_pow(std::uint64_t base, std::size_t exp,
                        std::size_t bound) {
  std::size_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (v > bound / base) return bound + 1;
    v *= base;
  }
  return v;
}

// Closes the basis under the generator action. Correctness relies on
// processing the reduced snapshot of every vector ever inserted: the span
// never changes under the in-place back-substitution, so closure of the
// snapshots implies closure of the final span.
void close_under_action(const GModule& m, EchelonBasis& basis) {
  std::vector<Vec> worklist;
  for (std::size_t i = 0; i < basis.dim(); ++i)
    worklist.push_back(basis.row_unsorted(i));
  while (!worklist.empty()) {
    Vec v = std::move(worklist.back());
    worklist.pop_back();
    for (const PrimeFieldMatrix& g : m.generators) {
      if (basis.insert(g.apply(v)))
        worklist.push_back(basis.row_unsorted(basis.dim() - 1));
    }
  }
}

EchelonBasis spin_one(const GModule& m, const Vec& seed) {
  EchelonBasis basis(m.field, m.dim);
  basis.insert(seed);
  close_under_action(m, basis);
  return basis;
}

GModule transpose_module(const GModule& m) {
  std::vector<PrimeFieldMatrix> gens;
  gens.reserve(m.generators.size());
  for (const PrimeFieldMatrix& g : m.generators) gens.push_back(g.transpose());
  return GModule(m.field, m.dim, std::move(gens), m.label + "^t");
}

// Representatives of the 1-dimensional subspaces spanned inside the given
// basis (first nonzero odometer coefficient normalized to 1).
std::vector<Vec> subspace_line_reps(const PrimeField& F,
                                    const std::vector<Vec>& basis,
                                    std::size_t ambient) {
  std::vector<Vec> reps;
  if (basis.empty()) return reps;
  const std::uint64_t p = F.modulus();
  std::vector<std::uint64_t> coeffs(basis.size(), 0);
  while (true) {
    std::size_t i = 0;
    while (i < coeffs.size() && coeffs[i] == p - 1) coeffs[i++] = 0;
    if (i == coeffs.size()) break;
    ++coeffs[i];
    std::size_t first = 0;
    while (coeffs[first] == 0) ++first;
    if (coeffs[first] != 1) continue;
    Vec v(ambient, 0);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (!coeffs[k]) continue;
      for (std::size_t j = 0; j < ambient; ++j)
        v[j] = F.add(v[j], F.mul(coeffs[k], basis[k][j]));
    }
    reps.push_back(std::move(v));
  }
  return reps;
}

// Random element of the group-algebra image: an F_p-combination of a few
// short random words in the generators.
PrimeFieldMatrix random_algebra_element(const GModule& m, Rng& rng) {
  const std::size_t d = m.dim;
  PrimeFieldMatrix acc(m.field, d, d);
  std::size_t terms = 1 + rng.below(3);
  for (std::size_t t = 0; t < terms; ++t) {
    PrimeFieldMatrix w = PrimeFieldMatrix::identity(m.field, d);
    std::size_t len = 1 + rng.below(4);
    for (std::size_t i = 0; i < len; ++i)
      w = w * m.generators[rng.below(m.generators.size())];
    acc = acc + w.scaled(rng.below(m.field.modulus()));
  }
  return acc;
}

// {v : r . v = 0 for every row r}; the annihilator of a dual submodule is
// a submodule of the original module.
std::vector<Vec> annihilator(const PrimeField& F,
                             const std::vector<Vec>& dual_rows,
                             std::size_t dim) {
  PrimeFieldMatrix m(F, dual_rows.size(), dim);
  for (std::size_t i = 0; i < dual_rows.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) m.set(i, j, dual_rows[i][j]);
  return rank_nullspace(m).nullspace;
}

PrimeFieldMatrix commutant_system(const GModule& m) {
  const std::size_t d = m.dim;
  const PrimeField& F = m.field;
  PrimeFieldMatrix sys(F, m.generators.size() * d * d, d * d);
  std::size_t row = 0;
  for (const PrimeFieldMatrix& g : m.generators) {
    // Equation (a,b): sum_c X[a][c] g[c][b] - g[a][c] X[c][b] = 0.
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        for (std::size_t c = 0; c < d; ++c) {
          const std::size_t col_ac = a * d + c;
          const std::size_t col_cb = c * d + b;
          sys.set(row, col_ac, F.add(sys.at(row, col_ac), g.at(c, b)));
          sys.set(row, col_cb, F.sub(sys.at(row, col_cb), g.at(a, c)));
        }
        ++row;
      }
  }
  return sys;
}

std::vector<PrimeFieldMatrix> commutant_basis(const GModule& m) {
  std::vector<PrimeFieldMatrix> out;
  if (m.dim == 0) return out;
  for (const Vec& v : rank_nullspace(commutant_system(m)).nullspace) {
    PrimeFieldMatrix x(m.field, m.dim, m.dim);
    x.entries() = v;
    out.push_back(std::move(x));
  }
  return out;
}

SimplicityVerdict with_commutant(const GModule& m, SimplicityVerdict v) {
  v.commutant_dim = commutant_dimension(m);
  v.absolutely_simple = v.simple && v.commutant_dim == 1;
  return v;
}

SimplicityVerdict not_simple(const GModule& m, std::vector<Vec> witness) {
  // Witnesses are always handed back verified: re-spin and check properness.
  EchelonBasis check(m.field, m.dim);
  for (const Vec& v : witness) check.insert(v);
  close_under_action(m, check);
  if (check.dim() == 0 || check.dim() >= m.dim)
    throw std::logic_error("meataxe: witness failed verification");
  return with_commutant(m,
                        SimplicityVerdict{false, false, 0, check.rows()});
}

}  // namespace

std::vector<Vec> spin(const GModule& m, const std::vector<Vec>& seeds) {
  EchelonBasis basis(m.field, m.dim);
  for (const Vec& s : seeds) {
    if (s.size() != m.dim)
      throw std::invalid_argument("spin: seed dimension mismatch");
    basis.insert(s);
  }
  close_under_action(m, basis);
  return basis.rows();
}

std::size_t commutant_dimension(const GModule& m) {
  if (m.dim == 0) return 0;
  return rank_nullspace(commutant_system(m)).nullspace.size();
}

SimplicityVerdict is_simple(const GModule& m, RngSeed seed) {
  const std::size_t d = m.dim;
  if (d == 0)
    throw std::invalid_argument("is_simple: zero-dimensional module");
  if (d == 1) return with_commutant(m, SimplicityVerdict{true, false, 0, {}});

  const PrimeField& F = m.field;
  Rng rng(seed);
  GModule mt = transpose_module(m);
  const std::size_t space = checked_pow(F.modulus(), d, kTinySpaceBound);

  for (std::size_t attempt = 0; attempt < kAttemptCap; ++attempt) {
    if (attempt >= 64 && space <= kTinySpaceBound) break;  // exhaust instead

    PrimeFieldMatrix theta = random_algebra_element(m, rng);
    RankNullspace rn = rank_nullspace(theta);
    const std::size_t nullity = rn.nullspace.size();
    if (nullity == 0) continue;

    const std::size_t line_bound = kKernelScanCap * (F.modulus() - 1);
    const std::size_t kernel_size =
        checked_pow(F.modulus(), nullity, line_bound);
    const bool scannable =
        kernel_size <= line_bound &&
        (kernel_size - 1) / (F.modulus() - 1) <= kKernelScanCap;
    if (scannable) {
      // Full kernel scan. If some kernel vector generates a proper
      // submodule the module is reducible; if all generate V, one dual
      // kernel vector decides (its dual spin is either everything, proving
      // simplicity, or a proper dual submodule whose annihilator is a
      // proper submodule here).
      for (const Vec& v : subspace_line_reps(F, rn.nullspace, d)) {
        EchelonBasis sp = spin_one(m, v);
        if (sp.dim() < d) return not_simple(m, sp.rows());
      }
      RankNullspace rnt = rank_nullspace(theta.transpose());
      if (rnt.nullspace.empty())
        throw std::logic_error("is_simple: transpose nullity mismatch");
      EchelonBasis dual_span = spin_one(mt, rnt.nullspace.front());
      if (dual_span.dim() == d)
        return with_commutant(m, SimplicityVerdict{true, false, 0, {}});
      return not_simple(m, annihilator(F, dual_span.rows(), d));
    }
    // Kernel too large to scan exhaustively: use it for the reducibility
    // direction only.
    for (const Vec& v : rn.nullspace) {
      EchelonBasis sp = spin_one(m, v);
      if (sp.dim() < d) return not_simple(m, sp.rows());
    }
  }

  if (space <= kTinySpaceBound) {
    SubmoduleReport rep = enumerate_submodules_tiny(m);
    if (rep.count == 2)
      return with_commutant(m, SimplicityVerdict{true, false, 0, {}});
    std::vector<std::uint64_t> counter(d, 0);
    while (true) {
      std::size_t i = 0;
      while (i < d && counter[i] == F.modulus() - 1) counter[i++] = 0;
      if (i == d) break;
      ++counter[i];
      EchelonBasis sp = spin_one(m, counter);
      if (sp.dim() > 0 && sp.dim() < d) return not_simple(m, sp.rows());
    }
    throw std::logic_error("is_simple: enumeration disagreement");
  }
  throw std::runtime_error(
      "is_simple: undecided within attempt budget on a large module");
}

SimplicityVerdict is_absolutely_simple(const GModule& m, RngSeed seed) {
  return is_simple(m, seed);  // verdict already carries the commutant test
}

SubmoduleReport enumerate_submodules_tiny(const GModule& m) {
  const std::size_t d = m.dim;
  const PrimeField& F = m.field;
  const std::size_t space = checked_pow(F.modulus(), d, kTinySpaceBound);
  if (space > kTinySpaceBound)
    throw std::invalid_argument(
        "enumerate_submodules_tiny: p^dim > 2^20; use is_simple instead");

  SubmoduleReport out;
  out.exhaustive = true;
  std::set<std::vector<std::uint64_t>> submodule_keys;

  // The zero submodule (spin of the zero vector) and, for dim > 0, the full
  // module, which need not be cyclic, are always counted.
  {
    EchelonBasis zero(F, d);
    submodule_keys.insert(zero.key());
  }
  if (d > 0) {
    EchelonBasis full(F, d);
    for (std::size_t i = 0; i < d; ++i) {
      Vec e(d, 0);
      e[i] = 1;
      full.insert(e);
    }
    submodule_keys.insert(full.key());
  }

  // Spin every vector; scalar multiples share a spin, so only vectors with
  // first nonzero coordinate 1 are actually spun.
  std::vector<std::uint64_t> counter(d, 0);
  while (true) {
    std::size_t i = 0;
    while (i < d && counter[i] == F.modulus() - 1) counter[i++] = 0;
    if (i == d) break;
    ++counter[i];
    std::size_t first = 0;
    while (first < d && counter[first] == 0) ++first;
    if (counter[first] != 1) continue;
    submodule_keys.insert(spin_one(m, counter).key());
  }

  for (const auto& key : submodule_keys)
    out.dims.push_back(static_cast<std::size_t>(key.front()));
  std::sort(out.dims.begin(), out.dims.end());
  out.count = submodule_keys.size();
  return out;
}

std::optional<std::vector<PrimeFieldMatrix>> stable_subalgebra_probe(
    const GModule& m, RngSeed seed, std::size_t budget) {
  const std::size_t d = m.dim;
  if (d < 2)
    throw std::invalid_argument("stable_subalgebra_probe: dim must be >= 2");
  const PrimeField& F = m.field;
  Rng rng(seed);

  std::vector<PrimeFieldMatrix> gen_inverses;
  for (const PrimeFieldMatrix& g : m.generators)
    gen_inverses.push_back(inverse(g));
  std::vector<PrimeFieldMatrix> commutant = commutant_basis(m);

  auto flatten = [](const PrimeFieldMatrix& x) { return x.entries(); };

  for (std::size_t trial = 0; trial < budget; ++trial) {
    PrimeFieldMatrix starter(F, d, d);
    switch (trial % 3) {
      case 0:
        starter = random_algebra_element(m, rng);
        break;
      case 1:
        for (const PrimeFieldMatrix& c : commutant)
          starter = starter + c.scaled(rng.below(F.modulus()));
        break;
      default:
        starter = random_algebra_element(m, rng);
        if (!commutant.empty())
          starter = starter * commutant[rng.below(commutant.size())];
        break;
    }

    // Close span{Id, starter} under products and conjugation by generators.
    EchelonBasis span(F, d * d);
    std::vector<PrimeFieldMatrix> basis;
    auto add_elem = [&](const PrimeFieldMatrix& x) {
      if (!span.insert(flatten(x))) return false;
      PrimeFieldMatrix y(F, d, d);
      y.entries() = span.row_unsorted(span.dim() - 1);
      basis.push_back(std::move(y));
      return true;
    };
    add_elem(PrimeFieldMatrix::identity(F, d));
    add_elem(starter);

    bool grew = true;
    while (grew && span.dim() < d * d) {
      grew = false;
      const std::size_t nb = basis.size();
      for (std::size_t i = 0; i < nb && span.dim() < d * d; ++i) {
        for (std::size_t g = 0; g < m.generators.size(); ++g)
          if (add_elem(m.generators[g] * basis[i] * gen_inverses[g]))
            grew = true;
        for (std::size_t j = 0; j < nb && span.dim() < d * d; ++j)
          if (add_elem(basis[i] * basis[j])) grew = true;
      }
    }

    const std::size_t dim_r = span.dim();
    if (dim_r <= 1 || dim_r >= d * d) continue;

    // Certify the find: exact closure re-verification on the final basis.
    bool ok = span.contains(flatten(PrimeFieldMatrix::identity(F, d)));
    for (std::size_t i = 0; ok && i < basis.size(); ++i) {
      for (std::size_t j = 0; ok && j < basis.size(); ++j)
        ok = span.contains(flatten(basis[i] * basis[j]));
      for (std::size_t g = 0; ok && g < m.generators.size(); ++g)
        ok = span.contains(
            flatten(m.generators[g] * basis[i] * gen_inverses[g]));
    }
    if (!ok)
      throw std::logic_error(
          "stable_subalgebra_probe: closure verification failed");
    return basis;
  }
  return std::nullopt;
}

}  // namespace superell
