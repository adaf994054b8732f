#include "superell/galois.hpp"

#include <algorithm>
#include <stdexcept>

namespace superell {

std::string to_string(GaloisVerdict v) {
  switch (v) {
    case GaloisVerdict::SymmetricGroup:
      return "SymmetricGroup";
    case GaloisVerdict::AlternatingGroup:
      return "AlternatingGroup";
    case GaloisVerdict::ContainsAlternating:
      return "ContainsAlternating";
    default:
      return "Inconclusive";
  }
}

FrobeniusWitness frobenius_cycle_type(const IntPoly& f, std::uint64_t ell,
                                      RngSeed seed) {
  if (!PrimeField::is_prime(ell))
    throw std::invalid_argument("frobenius_cycle_type: ell must be prime");
  PrimeField F(ell);
  if (F.reduce(f.leading_coeff()) == 0)
    throw std::invalid_argument(
        "frobenius_cycle_type: ell divides the leading coefficient");
  mpz_class disc = discriminant(f);
  if (disc == 0)
    throw std::invalid_argument("frobenius_cycle_type: f not squarefree");
  if (mpz_divisible_ui_p(disc.get_mpz_t(), static_cast<unsigned long>(ell)))
    throw std::invalid_argument(
        "frobenius_cycle_type: ell divides the discriminant");

  ModPoly fm = f.reduce_mod(F);
  Factorization fac = factor_mod_p(fm, derive_seed(seed, ell));
  std::vector<std::uint32_t> parts;
  for (const PolyFactor& pf : fac.factors) {
    if (pf.multiplicity != 1)
      throw std::logic_error(
          "frobenius_cycle_type: repeated factor despite unramified ell");
    parts.push_back(static_cast<std::uint32_t>(pf.factor.degree()));
  }
  std::vector<ModPoly> factors;
  for (const PolyFactor& pf : fac.factors) factors.push_back(pf.factor);
  return FrobeniusWitness{ell, CycleType(std::move(parts)),
                          std::move(factors)};
}

bool disc_is_square(const mpz_class& d) {
  if (d == 0)
    throw std::invalid_argument(
        "disc_is_square: zero discriminant (input not squarefree)");
  if (d < 0) return false;
  return mpz_perfect_square_p(d.get_mpz_t()) != 0;
}

namespace {

bool is_n_cycle(const CycleType& t, std::size_t n) {
  return t.parts().size() == 1 && t.parts().front() == n;
}

// [q, 1, ..., 1] with q prime and n/2 < q < n-2.
bool jordan_pattern(const CycleType& t, std::size_t n) {
  const auto& parts = t.parts();
  if (parts.empty()) return false;
  std::uint32_t q = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] != 1) return false;
  if (!PrimeField::is_prime(q)) return false;
  return 2 * static_cast<std::size_t>(q) > n &&
         static_cast<std::size_t>(q) + 2 < n;
}

// Exactly one even part, equal to 2, all other parts odd: an odd power of
// such an element is a transposition.
bool transposition_pattern(const CycleType& t) {
  std::size_t evens = 0;
  for (std::uint32_t part : t.parts()) {
    if (part % 2 == 0) {
      ++evens;
      if (part != 2) return false;
    }
  }
  return evens == 1;
}

bool two_transitivity_pattern(const CycleType& t, std::size_t n) {
  const auto& parts = t.parts();
  return parts.size() == 2 && parts[0] == n - 1 && parts[1] == 1;
}

}  // namespace

GaloisCertificate certify(const IntPoly& f, std::uint64_t prime_budget,
                          RngSeed seed) {
  if (f.degree() < 2)
    throw std::invalid_argument("certify: deg f must be >= 2");
  const std::size_t n = static_cast<std::size_t>(f.degree());

  GaloisCertificate cert;
  cert.disc = discriminant(f);
  if (cert.disc == 0)
    throw std::invalid_argument("certify: f is not squarefree");
  cert.disc_square = disc_is_square(cert.disc);

  bool transitive = false;       // R1
  bool contains_alt = false;     // R2
  bool has_transposition = false;
  bool two_transitive = false;
  std::uint64_t r1_ell = 0, r2_ell = 0, r3_ell = 0, tt_ell = 0;

  for (std::uint64_t ell = 2; ell <= prime_budget; ++ell) {
    if (!PrimeField::is_prime(ell)) continue;
    PrimeField F(ell);
    if (F.reduce(f.leading_coeff()) == 0) continue;
    if (mpz_divisible_ui_p(cert.disc.get_mpz_t(),
                           static_cast<unsigned long>(ell)))
      continue;
    FrobeniusWitness w = frobenius_cycle_type(f, ell, seed);
    if (is_n_cycle(w.pattern, n) && !transitive) {
      transitive = true;
      r1_ell = ell;
    }
    if (jordan_pattern(w.pattern, n) && !contains_alt) {
      contains_alt = true;
      r2_ell = ell;
    }
    if (transposition_pattern(w.pattern) && !has_transposition) {
      has_transposition = true;
      r3_ell = ell;
    }
    if (two_transitivity_pattern(w.pattern, n) && !two_transitive) {
      two_transitive = true;
      tt_ell = ell;
    }
    cert.witnesses.push_back(std::move(w));
  }
  std::sort(cert.witnesses.begin(), cert.witnesses.end(),
            [](const FrobeniusWitness& a, const FrobeniusWitness& b) {
              return a.ell < b.ell;
            });

  if (transitive)
    cert.rules_fired.push_back("R1:n-cycle@" + std::to_string(r1_ell));
  if (transitive && contains_alt)
    cert.rules_fired.push_back("R2:jordan-prime-cycle@" +
                               std::to_string(r2_ell));
  bool primitive = PrimeField::is_prime(n) || (transitive && two_transitive);
  if (transitive && two_transitive)
    cert.rules_fired.push_back("2T:(n-1)-cycle@" + std::to_string(tt_ell));
  bool symmetric_by_transposition =
      transitive && has_transposition && primitive;
  if (symmetric_by_transposition)
    cert.rules_fired.push_back("R3:transposition@" + std::to_string(r3_ell));

  cert.rules_fired.push_back(std::string("parity:disc-") +
                             (cert.disc_square ? "square" : "nonsquare"));

  if (n == 2 && transitive) {
    // Transitive subgroups of S_2: only S_2 itself.
    cert.verdict = GaloisVerdict::SymmetricGroup;
    cert.rules_fired.push_back("n=2:transitive-implies-full");
  } else if (symmetric_by_transposition) {
    if (cert.disc_square)
      throw std::logic_error(
          "certify: transposition certificate contradicts square "
          "discriminant");
    cert.verdict = GaloisVerdict::SymmetricGroup;
  } else if (transitive && contains_alt) {
    cert.verdict = cert.disc_square ? GaloisVerdict::AlternatingGroup
                                    : GaloisVerdict::SymmetricGroup;
  } else {
    cert.verdict = GaloisVerdict::Inconclusive;
    if (!transitive) {
      cert.notes.push_back(
          "no irreducibility witness (no pattern [n] found within budget)");
      // A rational root pins down the reason precisely.
      for (long r = -50; r <= 50; ++r) {
        if (f.evaluate(mpz_class(r)) == 0) {
          cert.notes.push_back("f is reducible over Q: rational root " +
                               std::to_string(r));
          break;
        }
      }
    } else {
      cert.notes.push_back(
          "transitive, but no alternating-group or transposition "
          "certificate fired within budget");
    }
  }
  return cert;
}

}  // namespace superell
