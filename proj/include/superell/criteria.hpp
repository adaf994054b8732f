#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "superell/perm_group.hpp"

namespace superell {

// Input for the very-simplicity case analysis: the heart module of Alt(B)
// (or Sym(B), which inherits from the subgroup) on n >= 5 points over F_p.
struct CriteriaInput {
  std::size_t n;
  std::uint64_t p;
  GroupFamily group;
  std::size_t module_dim;  // n-1 if p does not divide n, else n-2

  static CriteriaInput make(std::size_t n, std::uint64_t p,
                            GroupFamily group = GroupFamily::Alternating);
};

enum class CriteriaStatus { VerySimple, Inconclusive };
enum class CriteriaMode { Verified, PaperTheorem };

struct CriterionCheck {
  std::string name;
  std::string lhs, rhs;  // decimal strings, exact values compared
  std::string relation;  // "=", "!=", ">", ">=", "<", "in", "notin"
  bool pass;
};

struct CaseJustification {
  std::string case_tag;
  std::vector<CriterionCheck> checks;
  bool complete;  // all checks passed
};

struct CriteriaVerdict {
  CriteriaStatus status;
  CriteriaMode mode;
  std::vector<CaseJustification> justification;
  std::string reason;  // set when Inconclusive
};

// p = 2^(2^r) + 1 with r >= 0, so 3 counts (matching the worked list
// 3, 5, 17, 257 rather than the stricter r >= 1 reading).
bool is_fermat_prime(std::uint64_t p);

struct SuperpResult {
  std::size_t N;
  mpz_class order_h;   // n!/2
  bool embed_excluded; // n!/2 > N!
  bool case_i;         // N prime
  bool case_ii;        // N = 8 or twice a prime, with both exclusions
  bool case_iii;       // #H >= (p^isqrt(N)-1)^isqrt(N) / (p-1)
  bool case_iv;        // #H >= (p^N - 1)/(p - 1)
  CaseJustification details_i, details_ii, details_iii, details_iv;
};

// The four order/shape conditions, each evaluated exactly in arbitrary
// precision. Requires n >= 5.
SuperpResult check_superp(const CriteriaInput& in);

struct VerybignResult {
  bool holds;
  std::size_t N;
  std::size_t isqrt_N;
  std::size_t n_over_3;
  CaseJustification details;
};

// For p > 3, n >= 8: true iff isqrt(N) - 1 < floor(n/3), the inequality
// that rules out every nontrivial factorization of N.
VerybignResult check_verybign(std::size_t n, std::uint64_t p);

// Walks the case tree: p=3 via the order bound, p>=5 with n>=8 via the
// factorization bound, 5<=n<=7 via prime / twice-prime dimensions. For
// n=5 with p = +-1 mod 5 (p >= 11) no case closes and the verdict is
// Inconclusive in Verified mode. p=2 rests on an external result and is
// likewise reported Inconclusive in Verified mode.
CriteriaVerdict decide_very_simple(std::size_t n, std::uint64_t p,
                                   CriteriaMode mode);

}  // namespace superell
