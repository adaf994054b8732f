#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "superell/poly_int.hpp"
#include "superell/poly_mod.hpp"
#include "superell/quotient.hpp"

namespace superell {

// The curve y^p = f(x) for an odd prime p and squarefree f of degree >= 4,
// over Q or over a prime field F_q.
struct CurveSpec {
  std::uint64_t p;
  std::variant<IntPoly, ModPoly> f;
  std::size_t n;  // deg f

  static CurveSpec make(std::uint64_t p, IntPoly f);
  static CurveSpec make(std::uint64_t p, ModPoly f);
  bool over_rationals() const { return std::holds_alternative<IntPoly>(f); }
};

struct DifferentialEntry {
  std::size_t a;                // exponent of x
  std::size_t b;                // exponent of y (1 <= b <= p-1)
  std::uint64_t eigen_exponent; // (-b) mod p
};

struct DifferentialBasis {
  std::vector<DifferentialEntry> entries;
};

struct MultiplicityProfile {
  std::map<std::uint64_t, std::size_t> counts;  // eigen exponent -> count
  // For p = 3 only: the pair (n_sigma, n_sigma_bar) and their coprimality.
  std::optional<std::pair<std::size_t, std::size_t>> sigma_pair;
  std::optional<bool> ribet_coprime;
};

// (p-1)(n-1)/2 when p does not divide n, (p-1)(n-2)/2 when it does.
std::size_t genus(std::size_t n, std::uint64_t p);

// All x^a dx / y^b with 1 <= b <= p-1 and p(a+1) < b n; requires p not
// dividing n (reduce the curve first otherwise). The inequality is strict;
// equality cannot occur when p does not divide n.
DifferentialBasis differential_basis(std::size_t n, std::uint64_t p);

// Eigenvalue-exponent multiplicities of the order-p automorphism on the
// differentials. For p | n the counts are computed on degree n-1 (the
// reduced model), which the closed forms depend on only through n.
MultiplicityProfile eigen_multiplicities(std::size_t n, std::uint64_t p);

// Closed form for p = 3: n = 3k-e (0 < e < 3) gives (k-1, 2k-1-floor(2e/3));
// n = 3k gives (k-1, 2k-1) via reduction.
std::pair<std::size_t, std::size_t> trigonal_multiplicities(std::size_t n);

// Degree reduction at a root alpha of f in F_q (requires p | n):
// f = (x - alpha) f1, h = f1(x + alpha), h1 = reversal of h.
CurveSpec reduce_degree(const CurveSpec& c, std::uint64_t alpha);

// Same transform over Q at a rational root.
struct RationalReduction {
  RatPoly h1;
  bool h1_squarefree;
};
RationalReduction reduce_degree_rational(const IntPoly& f, std::uint64_t p,
                                         const mpq_class& alpha);

// Same transform over Q(alpha) where alpha is the class of x in Q[x]/(f);
// used when f has no rational root. f is assumed irreducible over Q.
struct RootFieldReduction {
  std::vector<RatQuotient> h1_coeffs;  // ascending, degree n-1
  bool h1_squarefree;
};
RootFieldReduction reduce_degree_over_root_field(const IntPoly& f,
                                                 std::uint64_t p);

struct CurveReport {
  std::size_t n;
  std::uint64_t p;
  std::size_t genus_value;
  std::optional<DifferentialBasis> basis;  // of the reduced model if p | n
  MultiplicityProfile multiplicities;
  bool reduced_model_used;       // p | n: data comes from degree n-1
  bool explicit_model_skipped;   // p | n over Q without a rational root
  std::optional<std::string> reduction_root;   // the root used, if any
  std::optional<std::string> reduced_model;    // h1 as text, if constructed
  std::vector<std::string> notes;
};

CurveReport curve_report(const CurveSpec& c);

}  // namespace superell
