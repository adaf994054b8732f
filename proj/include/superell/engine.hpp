#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superell/criteria.hpp"
#include "superell/curve.hpp"
#include "superell/galois.hpp"

namespace superell {

enum class GaloisSource { Certified, UserAsserted };

struct GaloisHypothesis {
  GaloisSource source;
  GaloisVerdict group;  // SymmetricGroup or AlternatingGroup
};

struct Conclusion {
  bool value = false;
  // Names the implication that justifies a true value, or the failing gate.
  std::string via;
};

struct EndoVerdict {
  struct Hypotheses {
    bool n_ge_5 = false;
    bool p_odd_prime = false;
    std::optional<GaloisHypothesis> galois;
    std::optional<CriteriaVerdict> very_simple;
  };
  struct Conclusions {
    Conclusion maximal_commutative;   // Z[delta_p] maximal commutative
    Conclusion center_cm_subfield;    // center of End^0 is a CM subfield
    Conclusion fermat_full_ring;      // End = Z[delta_p] for Fermat p
    std::optional<Conclusion> hodge_flag;  // p = 3 only
    std::optional<Conclusion> tate_flag;   // p = 3 only
  };

  std::uint64_t p = 0;
  std::size_t n = 0;
  std::size_t jacobian_dim = 0;  // = genus
  Hypotheses hypotheses;
  Conclusions conclusions;
  std::vector<std::string> notes;
};

// Assembles the implication chain for y^p = f(x): every finitely checkable
// hypothesis is computed, the abelian-variety implications themselves are
// treated as axioms. A failed gate flips every conclusion false and names
// itself.
EndoVerdict endomorphism_verdict(const CurveSpec& curve,
                                 std::optional<GaloisHypothesis> galois,
                                 CriteriaMode mode);

// For p = 3: hodge = (3 does not divide n-1) AND multiplicities coprime;
// the two formulations agree for n >= 5 (asserted) and are both reported
// at n = 4, where they differ (multiplicities (1,2) are coprime although
// 3 | n-1). tate = hodge AND the base field contains sqrt(-3).
// For p != 3 both flags are absent.
std::pair<std::optional<Conclusion>, std::optional<Conclusion>>
hodge_tate_flags(std::uint64_t p, std::size_t n,
                 bool base_has_sqrt_minus3);

}  // namespace superell
