#include "superell/report.hpp"

namespace superell {

Json to_json(const GaloisCertificate& cert) {
  Json j;
  j["verdict"] = to_string(cert.verdict);
  j["disc"] = cert.disc.get_str();
  j["disc_is_square"] = cert.disc_square;
  Json witnesses = Json::array();
  for (const FrobeniusWitness& w : cert.witnesses) {
    Json jw;
    jw["ell"] = w.ell;
    jw["pattern"] = w.pattern.to_string();
    witnesses.push_back(std::move(jw));
  }
  j["witnesses"] = std::move(witnesses);
  j["rules_fired"] = cert.rules_fired;
  j["notes"] = cert.notes;
  return j;
}

Json to_json(const CriteriaVerdict& v) {
  Json j;
  j["status"] = v.status == CriteriaStatus::VerySimple ? "VerySimple"
                                                       : "Inconclusive";
  j["mode"] =
      v.mode == CriteriaMode::Verified ? "verified" : "paper-theorem";
  Json cases = Json::array();
  for (const CaseJustification& c : v.justification) {
    Json jc;
    jc["case"] = c.case_tag;
    jc["complete"] = c.complete;
    Json checks = Json::array();
    for (const CriterionCheck& chk : c.checks) {
      Json jk;
      jk["name"] = chk.name;
      jk["lhs"] = chk.lhs;
      jk["rhs"] = chk.rhs;
      jk["relation"] = chk.relation;
      jk["pass"] = chk.pass;
      checks.push_back(std::move(jk));
    }
    jc["checks"] = std::move(checks);
    cases.push_back(std::move(jc));
  }
  j["cases"] = std::move(cases);
  if (v.reason.empty())
    j["reason"] = nullptr;
  else
    j["reason"] = v.reason;
  return j;
}

Json to_json(const SimplicityVerdict& v) {
  Json j;
  j["simple"] = v.simple;
  j["absolutely_simple"] = v.absolutely_simple;
  j["commutant_dim"] = v.commutant_dim;
  j["has_witness"] = v.witness.has_value();
  return j;
}

Json to_json(const DifferentialBasis& basis) {
  Json j = Json::array();
  for (const DifferentialEntry& e : basis.entries) {
    Json je;
    je["a"] = e.a;
    je["b"] = e.b;
    je["eigen_exponent"] = e.eigen_exponent;
    j.push_back(std::move(je));
  }
  return j;
}

Json to_json(const MultiplicityProfile& profile) {
  Json j;
  Json counts;
  for (const auto& [exponent, count] : profile.counts)
    counts[std::to_string(exponent)] = count;
  j["counts"] = std::move(counts);
  if (profile.sigma_pair) {
    j["n_sigma"] = profile.sigma_pair->first;
    j["n_sigma_bar"] = profile.sigma_pair->second;
  } else {
    j["n_sigma"] = nullptr;
    j["n_sigma_bar"] = nullptr;
  }
  if (profile.ribet_coprime)
    j["ribet_coprime"] = *profile.ribet_coprime;
  else
    j["ribet_coprime"] = nullptr;
  return j;
}

Json to_json(const CurveReport& report) {
  Json j;
  j["basis"] = to_json(*report.basis);
  j["multiplicities"] = to_json(report.multiplicities);
  if (report.multiplicities.ribet_coprime)
    j["ribet_coprime"] = *report.multiplicities.ribet_coprime;
  else
    j["ribet_coprime"] = nullptr;
  j["reduced_model_used"] = report.reduced_model_used;
  j["explicit_model_skipped"] = report.explicit_model_skipped;
  j["reduction_root"] = report.reduction_root
                            ? Json(*report.reduction_root)
                            : Json(nullptr);
  j["reduced_model"] =
      report.reduced_model ? Json(*report.reduced_model) : Json(nullptr);
  j["notes"] = report.notes;
  return j;
}

namespace {

Json to_json(const Conclusion& c) {
  Json j;
  j["value"] = c.value;
  j["via"] = c.via;
  return j;
}

}  // namespace

Json to_json(const EndoVerdict& v) {
  Json j;
  Json hyp;
  hyp["n_ge_5"] = v.hypotheses.n_ge_5;
  hyp["p_odd_prime"] = v.hypotheses.p_odd_prime;
  if (v.hypotheses.galois) {
    Json g;
    g["source"] = v.hypotheses.galois->source == GaloisSource::Certified
                      ? "certified"
                      : "user-asserted";
    g["group"] = to_string(v.hypotheses.galois->group);
    hyp["galois"] = std::move(g);
  } else {
    hyp["galois"] = nullptr;
  }
  hyp["very_simple"] = v.hypotheses.very_simple
                           ? to_json(*v.hypotheses.very_simple)
                           : Json(nullptr);
  j["hypotheses"] = std::move(hyp);

  Json c;
  c["maximal_commutative"] = to_json(v.conclusions.maximal_commutative);
  c["center_cm_subfield"] = to_json(v.conclusions.center_cm_subfield);
  c["fermat_full_ring"] = to_json(v.conclusions.fermat_full_ring);
  c["hodge"] = v.conclusions.hodge_flag ? to_json(*v.conclusions.hodge_flag)
                                        : Json(nullptr);
  c["tate"] = v.conclusions.tate_flag ? to_json(*v.conclusions.tate_flag)
                                      : Json(nullptr);
  j["conclusions"] = std::move(c);
  j["jacobian_dim"] = v.jacobian_dim;
  j["notes"] = v.notes;
  return j;
}

Json assemble_report(const ReportSections& s) {
  Json j;
  j["input"] = s.input;
  j["p"] = s.p;
  j["n"] = s.n;
  j["genus"] = s.genus ? Json(*s.genus) : Json(nullptr);
  j["galois"] = s.galois ? *s.galois : Json(nullptr);
  j["module"] = s.module ? *s.module : Json(nullptr);
  j["curve"] = s.curve ? *s.curve : Json(nullptr);
  j["conclusions"] = s.conclusions ? *s.conclusions : Json(nullptr);
  j["warnings"] = s.warnings;
  j["schema_version"] = kSchemaVersion;
  return j;
}

const std::string& report_schema_text() {
  static const std::string schema = R"SCHEMA({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "superell report",
  "type": "object",
  "required": ["input", "p", "n", "genus", "galois", "module", "curve",
               "conclusions", "warnings", "schema_version"],
  "properties": {
    "input": {"type": "object"},
    "p": {"type": "integer"},
    "n": {"type": "integer"},
    "genus": {"type": ["integer", "null"]},
    "galois": {
      "type": ["object", "null"],
      "required": ["verdict", "disc", "disc_is_square", "witnesses",
                   "rules_fired"],
      "properties": {
        "verdict": {"type": "string",
                    "enum": ["SymmetricGroup", "AlternatingGroup",
                             "ContainsAlternating", "Inconclusive"]},
        "disc": {"type": "string"},
        "disc_is_square": {"type": "boolean"},
        "witnesses": {
          "type": "array",
          "items": {
            "type": "object",
            "required": ["ell", "pattern"],
            "properties": {
              "ell": {"type": "integer"},
              "pattern": {"type": "string"}
            }
          }
        },
        "rules_fired": {"type": "array", "items": {"type": "string"}},
        "notes": {"type": "array", "items": {"type": "string"}}
      }
    },
    "module": {
      "type": ["object", "null"],
      "required": ["dim", "simple", "absolutely_simple", "commutant_dim",
                   "very_simple"],
      "properties": {
        "label": {"type": "string"},
        "dim": {"type": "integer"},
        "simple": {"type": "boolean"},
        "absolutely_simple": {"type": "boolean"},
        "commutant_dim": {"type": "integer"},
        "very_simple": {
          "type": "object",
          "required": ["status", "mode", "cases", "reason"],
          "properties": {
            "status": {"type": "string",
                       "enum": ["VerySimple", "Inconclusive"]},
            "mode": {"type": "string",
                     "enum": ["verified", "paper-theorem"]},
            "cases": {"type": "array"},
            "reason": {"type": ["string", "null"]}
          }
        }
      }
    },
    "curve": {
      "type": ["object", "null"],
      "required": ["basis", "multiplicities", "ribet_coprime"],
      "properties": {
        "basis": {
          "type": "array",
          "items": {
            "type": "object",
            "required": ["a", "b", "eigen_exponent"],
            "properties": {
              "a": {"type": "integer"},
              "b": {"type": "integer"},
              "eigen_exponent": {"type": "integer"}
            }
          }
        },
        "multiplicities": {
          "type": "object",
          "required": ["counts", "n_sigma", "n_sigma_bar", "ribet_coprime"],
          "properties": {
            "counts": {"type": "object"},
            "n_sigma": {"type": ["integer", "null"]},
            "n_sigma_bar": {"type": ["integer", "null"]},
            "ribet_coprime": {"type": ["boolean", "null"]}
          }
        },
        "ribet_coprime": {"type": ["boolean", "null"]},
        "reduced_model_used": {"type": "boolean"},
        "explicit_model_skipped": {"type": "boolean"},
        "reduction_root": {"type": ["string", "null"]},
        "reduced_model": {"type": ["string", "null"]},
        "notes": {"type": "array", "items": {"type": "string"}}
      }
    },
    "conclusions": {
      "type": ["object", "null"],
      "required": ["hypotheses", "conclusions", "jacobian_dim", "notes"],
      "properties": {
        "hypotheses": {"type": "object"},
        "conclusions": {
          "type": "object",
          "required": ["maximal_commutative", "center_cm_subfield",
                       "fermat_full_ring", "hodge", "tate"],
          "properties": {
            "maximal_commutative": {"$ref": "#/definitions/conclusion"},
            "center_cm_subfield": {"$ref": "#/definitions/conclusion"},
            "fermat_full_ring": {"$ref": "#/definitions/conclusion"},
            "hodge": {"$ref": "#/definitions/nullable_conclusion"},
            "tate": {"$ref": "#/definitions/nullable_conclusion"}
          }
        },
        "jacobian_dim": {"type": "integer"},
        "notes": {"type": "array", "items": {"type": "string"}}
      }
    },
    "warnings": {"type": "array", "items": {"type": "string"}},
    "schema_version": {"type": "integer", "const": 1}
  },
  "definitions": {
    "conclusion": {
      "type": "object",
      "required": ["value", "via"],
      "properties": {
        "value": {"type": "boolean"},
        "via": {"type": "string"}
      }
    },
    "nullable_conclusion": {
      "type": ["object", "null"],
      "required": ["value", "via"],
      "properties": {
        "value": {"type": "boolean"},
        "via": {"type": "string"}
      }
    }
  }
})SCHEMA";
  return schema;
}

}  // namespace superell
