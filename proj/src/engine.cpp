#include "superell/engine.hpp"

#include <numeric>
#include <stdexcept>

namespace superell {

std::pair<std::optional<Conclusion>, std::optional<Conclusion>>
hodge_tate_flags(std::uint64_t p, std::size_t n, bool base_has_sqrt_minus3) {
  if (p != 3) return {std::nullopt, std::nullopt};
  if (n < 4)
    throw std::invalid_argument("hodge_tate_flags: n must be >= 4");
  bool divisibility_ok = (n - 1) % 3 != 0;
  auto [ns, nsb] = trigonal_multiplicities(n);
  bool coprime = std::gcd(ns, nsb) == 1;
  if (n >= 5 && divisibility_ok != coprime)
    throw std::logic_error(
        "hodge_tate_flags: divisibility and coprimality formulations "
        "disagree for n >= 5");

  Conclusion hodge;
  hodge.value = divisibility_ok && coprime;
  if (hodge.value) {
    hodge.via =
        "coprime-multiplicities(" + std::to_string(ns) + "," +
        std::to_string(nsb) + ")+divisor-class-generation";
  } else if (!divisibility_ok) {
    hodge.via = "3 divides n-1 = " + std::to_string(n - 1) +
                " (multiplicities (" + std::to_string(ns) + "," +
                std::to_string(nsb) + "))";
  } else {
    hodge.via = "multiplicities not coprime";
  }

  Conclusion tate;
  tate.value = hodge.value && base_has_sqrt_minus3;
  if (tate.value)
    tate.via = hodge.via + "+sqrt(-3)-in-base-field";
  else if (hodge.value)
    tate.via = "base field not known to contain sqrt(-3)";
  else
    tate.via = hodge.via;
  return {hodge, tate};
}

EndoVerdict endomorphism_verdict(const CurveSpec& curve,
                                 std::optional<GaloisHypothesis> galois,
                                 CriteriaMode mode) {
  EndoVerdict v;
  v.p = curve.p;
  v.n = curve.n;
  v.jacobian_dim = genus(curve.n, curve.p);

  v.hypotheses.p_odd_prime = true;  // enforced by CurveSpec construction
  v.hypotheses.n_ge_5 = curve.n >= 5;
  if (galois) {
    if (galois->group != GaloisVerdict::SymmetricGroup &&
        galois->group != GaloisVerdict::AlternatingGroup)
      throw std::invalid_argument(
          "endomorphism_verdict: galois hypothesis must be the symmetric "
          "or alternating group");
    v.hypotheses.galois = galois;
    if (galois->source == GaloisSource::UserAsserted)
      v.notes.push_back(
          "galois group supplied by the caller, not certified here");
  }

  if (v.hypotheses.n_ge_5) {
    v.hypotheses.very_simple = decide_very_simple(curve.n, curve.p, mode);
  } else {
    CriteriaVerdict cv;
    cv.mode = mode;
    cv.status = CriteriaStatus::Inconclusive;
    cv.reason = "n < 5: outside the range of the case analysis";
    v.hypotheses.very_simple = cv;
  }

  const bool galois_ok = v.hypotheses.galois.has_value();
  const bool very_simple_ok = v.hypotheses.very_simple->status ==
                              CriteriaStatus::VerySimple;

  std::string failing;
  if (!v.hypotheses.n_ge_5)
    failing = "n_ge_5";
  else if (!galois_ok)
    failing = "galois";
  else if (!very_simple_ok)
    failing = "very_simple";

  auto& concl = v.conclusions;
  if (failing.empty()) {
    concl.maximal_commutative.value = true;
    concl.maximal_commutative.via =
        "very-simple-heart-module+galois-sn-or-an+n>=5 => "
        "Z[delta_p] maximal commutative";
    concl.center_cm_subfield.value = true;
    concl.center_cm_subfield.via =
        "maximal-commutative => center is a CM subfield of Q(delta_p)";
    if (is_fermat_prime(curve.p)) {
      concl.fermat_full_ring.value = true;
      concl.fermat_full_ring.via =
          "p Fermat: the cyclotomic field has no proper CM subfield, so "
          "End = Z[delta_p]";
    } else {
      concl.fermat_full_ring.via =
          "p = " + std::to_string(curve.p) + " is not a Fermat prime";
    }
  } else {
    concl.maximal_commutative.via = "gate failed: " + failing;
    concl.center_cm_subfield.via = "gate failed: " + failing;
    concl.fermat_full_ring.via = "gate failed: " + failing;
  }

  if (curve.p == 3) {
    auto [hodge, tate] = hodge_tate_flags(3, curve.n, false);
    // The divisor-class conclusions additionally require the full
    // endomorphism-ring conclusion.
    if (!concl.fermat_full_ring.value) {
      hodge->value = false;
      tate->value = false;
      if (!failing.empty()) {
        hodge->via = "gate failed: " + failing;
        tate->via = "gate failed: " + failing;
      } else {
        hodge->via = "endomorphism ring not pinned down";
        tate->via = hodge->via;
      }
    }
    concl.hodge_flag = hodge;
    concl.tate_flag = tate;
    std::size_t k = (curve.n % 3 == 0) ? curve.n / 3 : (curve.n + 2) / 3;
    std::size_t e = 3 * k - curve.n;
    if (e <= 1)
      v.notes.push_back("jacobian dimension " +
                        std::to_string(v.jacobian_dim) + " = 3k-2 with k = " +
                        std::to_string(k));
    if (curve.n == 4)
      v.notes.push_back(
          "n = 4 boundary: multiplicities (1,2) are coprime although 3 "
          "divides n-1; the theorems need n >= 5 and no conclusion is "
          "drawn");
  }

  if (galois_ok)
    v.notes.push_back(
        "adjoining the p-th roots of unity is an abelian extension, so the "
        "galois image stays symmetric/alternating over it");

  return v;
}

}  // namespace superell
