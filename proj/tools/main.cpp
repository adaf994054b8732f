#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "superell/engine.hpp"
#include "superell/meataxe.hpp"
#include "superell/parse.hpp"
#include "superell/report.hpp"

namespace {

using namespace superell;

struct Options {
  std::uint64_t p = 0;
  std::string f_text;
  std::size_t n = 0;
  std::string group = "alt";
  std::string mode = "verified";
  RngSeed seed = 0;
  std::uint64_t prime_budget = 200;
  std::string assert_galois;
  bool json = false;
};

CriteriaMode mode_of(const Options& opt) {
  return opt.mode == "paper" ? CriteriaMode::PaperTheorem
                             : CriteriaMode::Verified;
}

GroupFamily family_of(const Options& opt) {
  return opt.group == "sym" ? GroupFamily::Symmetric
                            : GroupFamily::Alternating;
}

void print_text(const Json& j, std::ostream& os, int indent = 0) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || value.is_array()) {
        os << pad << key << ":\n";
        print_text(value, os, indent + 2);
      } else {
        os << pad << key << ": " << value.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (value.is_object() || value.is_array()) {
        os << pad << "-\n";
        print_text(value, os, indent + 2);
      } else {
        os << pad << "- " << value.dump() << "\n";
      }
    }
  } else {
    os << pad << j.dump() << "\n";
  }
}

void emit(const Json& report, bool as_json) {
  if (as_json)
    std::cout << report.dump(2) << "\n";
  else
    print_text(report, std::cout);
}

Json module_section(const GModule& mod, const SimplicityVerdict& verdict,
                    const CriteriaVerdict& criteria) {
  Json m;
  m["label"] = mod.label;
  m["dim"] = mod.dim;
  m["simple"] = verdict.simple;
  m["absolutely_simple"] = verdict.absolutely_simple;
  m["commutant_dim"] = verdict.commutant_dim;
  m["very_simple"] = to_json(criteria);
  return m;
}

std::optional<GaloisHypothesis> asserted_galois(const Options& opt,
                                                std::vector<std::string>& warnings) {
  if (opt.assert_galois.empty()) return std::nullopt;
  GaloisVerdict g = opt.assert_galois == "sn" ? GaloisVerdict::SymmetricGroup
                                              : GaloisVerdict::AlternatingGroup;
  warnings.push_back("galois group user-asserted as " + to_string(g) +
                     ", not certified");
  return GaloisHypothesis{GaloisSource::UserAsserted, g};
}

int run_analyze(const Options& opt) {
  ParsedPoly parsed = parse_polynomial(opt.f_text);
  ReportSections s;
  std::vector<std::string> warnings;

  CurveSpec curve = parsed.modulus
                        ? CurveSpec::make(opt.p, parsed.poly.reduce_mod(
                                                     PrimeField(*parsed.modulus)))
                        : CurveSpec::make(opt.p, parsed.poly);
  s.p = opt.p;
  s.n = curve.n;
  s.genus = genus(curve.n, curve.p);

  s.input = Json{{"command", "analyze"},
                 {"f", opt.f_text},
                 {"base", parsed.modulus
                              ? "F_" + std::to_string(*parsed.modulus)
                              : std::string("Q")},
                 {"p", opt.p},
                 {"seed", std::to_string(opt.seed)},
                 {"prime_budget", opt.prime_budget},
                 {"mode", opt.mode},
                 {"assert_galois",
                  opt.assert_galois.empty() ? Json(nullptr)
                                            : Json(opt.assert_galois)}};

  // Galois hypothesis: user assertion wins; otherwise certify over Q.
  std::optional<GaloisHypothesis> galois = asserted_galois(opt, warnings);
  std::optional<GaloisCertificate> cert;
  if (!galois) {
    if (parsed.modulus) {
      warnings.push_back(
          "certification is only implemented over Q; pass --assert-galois "
          "for curves over a finite field");
    } else {
      cert = certify(parsed.poly, opt.prime_budget, opt.seed);
      if (cert->verdict == GaloisVerdict::SymmetricGroup ||
          cert->verdict == GaloisVerdict::AlternatingGroup)
        galois = GaloisHypothesis{GaloisSource::Certified, cert->verdict};
      else
        warnings.push_back(
            "galois certification inconclusive within the prime budget");
    }
  }
  if (cert) s.galois = to_json(*cert);

  // The heart module for the (known or assumed) group image. Without a
  // certified group the alternating case is computed: it is the subgroup
  // case, and conclusions stay gated anyway.
  GroupFamily family = GroupFamily::Alternating;
  if (galois && galois->group == GaloisVerdict::SymmetricGroup)
    family = GroupFamily::Symmetric;
  GModule mod = build_v00(curve.n, PrimeField(opt.p), GroupSpec{family, curve.n});
  SimplicityVerdict simplicity = is_absolutely_simple(mod, opt.seed);
  CriteriaVerdict criteria =
      curve.n >= 5
          ? decide_very_simple(curve.n, opt.p, mode_of(opt))
          : CriteriaVerdict{CriteriaStatus::Inconclusive, mode_of(opt), {},
                            "n < 5: outside the range of the case analysis"};
  s.module = module_section(mod, simplicity, criteria);

  CurveReport curve_rep = curve_report(curve);
  s.curve = to_json(curve_rep);

  EndoVerdict verdict = endomorphism_verdict(curve, galois, mode_of(opt));
  s.conclusions = to_json(verdict);
  s.warnings = warnings;

  emit(assemble_report(s), opt.json);
  return 0;
}

int run_module(const Options& opt) {
  if (opt.n == 0)
    throw std::invalid_argument("module: --n is required");
  PrimeField field(opt.p);
  GModule mod = build_v00(opt.n, field, GroupSpec{family_of(opt), opt.n});
  SimplicityVerdict verdict = is_absolutely_simple(mod, opt.seed);
  CriteriaVerdict criteria =
      opt.n >= 5 ? decide_very_simple(opt.n, opt.p, mode_of(opt))
                 : CriteriaVerdict{CriteriaStatus::Inconclusive, mode_of(opt),
                                   {}, "n < 5: outside the case analysis"};

  ReportSections s;
  s.input = Json{{"command", "module"},
                 {"n", opt.n},
                 {"p", opt.p},
                 {"group", opt.group},
                 {"mode", opt.mode},
                 {"seed", std::to_string(opt.seed)}};
  s.p = opt.p;
  s.n = opt.n;
  s.module = module_section(mod, verdict, criteria);
  emit(assemble_report(s), opt.json);
  return 0;
}

int run_galois(const Options& opt) {
  ParsedPoly parsed = parse_polynomial(opt.f_text);
  if (parsed.modulus)
    throw std::invalid_argument(
        "galois: certification works over Q; got a polynomial mod q");
  GaloisCertificate cert = certify(parsed.poly, opt.prime_budget, opt.seed);

  ReportSections s;
  s.input = Json{{"command", "galois"},
                 {"f", opt.f_text},
                 {"prime_budget", opt.prime_budget},
                 {"seed", std::to_string(opt.seed)}};
  s.p = opt.p;
  s.n = static_cast<std::size_t>(parsed.poly.degree());
  s.galois = to_json(cert);
  emit(assemble_report(s), opt.json);
  return 0;
}

int run_basis(const Options& opt) {
  if (opt.n == 0) throw std::invalid_argument("basis: --n is required");
  DifferentialBasis basis = differential_basis(opt.n, opt.p);
  MultiplicityProfile profile = eigen_multiplicities(opt.n, opt.p);

  ReportSections s;
  s.input = Json{{"command", "basis"}, {"n", opt.n}, {"p", opt.p}};
  s.p = opt.p;
  s.n = opt.n;
  s.genus = genus(opt.n, opt.p);
  Json curve;
  curve["basis"] = to_json(basis);
  curve["multiplicities"] = to_json(profile);
  curve["ribet_coprime"] = profile.ribet_coprime ? Json(*profile.ribet_coprime)
                                                 : Json(nullptr);
  curve["reduced_model_used"] = false;
  curve["explicit_model_skipped"] = false;
  curve["reduction_root"] = nullptr;
  curve["reduced_model"] = nullptr;
  curve["notes"] = Json::array();
  s.curve = std::move(curve);
  emit(assemble_report(s), opt.json);
  return 0;
}

int run_reduce(const Options& opt) {
  ParsedPoly parsed = parse_polynomial(opt.f_text);
  ReportSections s;
  s.p = opt.p;
  std::vector<std::string> notes;
  std::string reduced_text;
  std::string root_text;
  bool squarefree_ok = true;

  if (parsed.modulus) {
    PrimeField Fq(*parsed.modulus);
    CurveSpec curve = CurveSpec::make(opt.p, parsed.poly.reduce_mod(Fq));
    s.n = curve.n;
    s.genus = genus(curve.n, curve.p);
    std::optional<std::uint64_t> root;
    const ModPoly& f = std::get<ModPoly>(curve.f);
    for (std::uint64_t a = 0; a < Fq.modulus() && !root; ++a)
      if (f.evaluate(a) == 0) root = a;
    if (!root)
      throw std::invalid_argument(
          "reduce: f has no root in the base field; the transform needs "
          "one");
    CurveSpec reduced = reduce_degree(curve, *root);
    reduced_text = std::get<ModPoly>(reduced.f).to_string();
    root_text = std::to_string(*root);
    if (genus(reduced.n, reduced.p) != genus(curve.n, curve.p))
      throw std::logic_error("reduce: genus not preserved");
  } else {
    CurveSpec curve = CurveSpec::make(opt.p, parsed.poly);
    s.n = curve.n;
    s.genus = genus(curve.n, curve.p);
    if (curve.n % opt.p != 0)
      throw std::invalid_argument("reduce: p does not divide deg f");
    const IntPoly& f = parsed.poly;
    std::optional<mpz_class> root;
    if (f.coeff(0) == 0) root = 0;
    for (long r = -1000; r <= 1000 && !root; ++r)
      if (f.evaluate(mpz_class(r)) == 0) root = r;
    if (root) {
      RationalReduction red = reduce_degree_rational(f, opt.p, mpq_class(*root));
      reduced_text = red.h1.to_string();
      root_text = root->get_str();
      squarefree_ok = red.h1_squarefree;
    } else {
      RootFieldReduction red = reduce_degree_over_root_field(f, opt.p);
      notes.push_back(
          "no rational root found: reduction performed over Q(alpha) with "
          "alpha a root of f (assumed irreducible)");
      std::string text;
      for (std::size_t i = red.h1_coeffs.size(); i-- > 0;) {
        if (!text.empty()) text += " + ";
        text += "(" + red.h1_coeffs[i].representative().to_string("alpha") +
                ")*x^" + std::to_string(i);
      }
      reduced_text = text;
      root_text = "alpha (class of x in Q[x]/(f))";
      squarefree_ok = red.h1_squarefree;
    }
  }

  s.input = Json{{"command", "reduce"}, {"f", opt.f_text}, {"p", opt.p}};
  Json curve;
  curve["basis"] = Json::array();
  Json mult;
  mult["counts"] = Json::object();
  mult["n_sigma"] = nullptr;
  mult["n_sigma_bar"] = nullptr;
  mult["ribet_coprime"] = nullptr;
  curve["multiplicities"] = std::move(mult);
  curve["ribet_coprime"] = nullptr;
  curve["reduced_model_used"] = true;
  curve["explicit_model_skipped"] = false;
  curve["reduction_root"] = root_text;
  curve["reduced_model"] = reduced_text;
  notes.push_back(std::string("reduced model squarefree: ") +
                  (squarefree_ok ? "yes" : "no"));
  notes.push_back("genus preserved: " + std::to_string(*s.genus));
  curve["notes"] = notes;
  s.curve = std::move(curve);
  emit(assemble_report(s), opt.json);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Endomorphism-ring verification for jacobians of y^p = f(x): "
      "permutation-module computations, very-simplicity criteria, curve "
      "invariants, and Galois certification"};
  app.set_help_all_flag("--help-all");

  bool print_schema = false;
  app.add_flag("--schema", print_schema, "print the report JSON schema");

  Options opt;
  auto add_common = [&](CLI::App* cmd, bool needs_f, bool needs_p) {
    if (needs_p)
      cmd->add_option("--p", opt.p, "the odd prime p of y^p = f(x)")
          ->required();
    if (needs_f)
      cmd->add_option("--f", opt.f_text,
                      "polynomial, e.g. \"x^5 - x - 1\" or \"x^6+x+1 mod 7\"")
          ->required();
    cmd->add_option("--seed", opt.seed, "seed for randomized routines");
    cmd->add_flag("--json", opt.json, "emit JSON instead of text");
    return cmd;
  };

  CLI::App* analyze = add_common(app.add_subcommand("analyze",
                                                    "full verdict pipeline"),
                                 true, true);
  analyze->add_option("--prime-budget", opt.prime_budget,
                      "largest prime scanned for certification");
  analyze->add_option("--mode", opt.mode, "verified | paper")
      ->check(CLI::IsMember({"verified", "paper"}));
  analyze->add_option("--assert-galois", opt.assert_galois,
                      "assert the galois group instead of certifying")
      ->check(CLI::IsMember({"sn", "an"}));

  CLI::App* module_cmd = add_common(
      app.add_subcommand("module", "heart-module and simplicity analysis"),
      false, true);
  module_cmd->add_option("--n", opt.n, "number of points")->required();
  module_cmd->add_option("--group", opt.group, "sym | alt")
      ->check(CLI::IsMember({"sym", "alt"}));
  module_cmd->add_option("--mode", opt.mode, "verified | paper")
      ->check(CLI::IsMember({"verified", "paper"}));

  CLI::App* galois_cmd = add_common(
      app.add_subcommand("galois", "galois-group certificate for f over Q"),
      true, false);
  galois_cmd->add_option("--prime-budget", opt.prime_budget,
                         "largest prime scanned");

  CLI::App* basis_cmd = add_common(
      app.add_subcommand("basis", "differential basis and multiplicities"),
      false, true);
  basis_cmd->add_option("--n", opt.n, "degree of f")->required();

  add_common(app.add_subcommand(
                 "reduce", "degree reduction at a root when p divides deg f"),
             true, true);

  app.require_subcommand(0, 1);

  CLI11_PARSE(app, argc, argv);

  if (print_schema) {
    std::cout << superell::report_schema_text() << "\n";
    return 0;
  }
  if (app.get_subcommands().empty()) {
    std::cerr << app.help() << std::endl;
    return 2;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "analyze") return run_analyze(opt);
    if (name == "module") return run_module(opt);
    if (name == "galois") return run_galois(opt);
    if (name == "basis") return run_basis(opt);
    if (name == "reduce") return run_reduce(opt);
    std::cerr << "unknown subcommand\n";
    return 2;
  } catch (const superell::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
