#include "superell/curve.hpp"

#include <numeric>
#include <stdexcept>

namespace superell {

namespace {

void require_odd_prime(std::uint64_t p) {
  if (p == 2 || !PrimeField::is_prime(p))
    throw std::invalid_argument("curve: p must be an odd prime");
}

bool int_poly_squarefree(const IntPoly& f) {
  return discriminant(f) != 0;
}

// Bounded scan for an integer root (divisors of the constant term).
std::optional<mpz_class> find_integer_root(const IntPoly& f) {
  const mpz_class c0 = f.coeff(0);
  if (c0 == 0) return mpz_class(0);
  const mpz_class limit = 100000;
  mpz_class bound = abs(c0);
  for (mpz_class d = 1; d * d <= bound && d <= limit; ++d) {
    if (bound % d != 0) continue;
    for (const mpz_class& cand :
         {mpz_class(d), mpz_class(-d), mpz_class(bound / d),
          mpz_class(-(bound / d))}) {
      if (f.evaluate(cand) == 0) return cand;
    }
  }
  return std::nullopt;
}

}  // namespace

CurveSpec CurveSpec::make(std::uint64_t p, IntPoly f) {
  require_odd_prime(p);
  if (f.degree() < 4)
    throw std::invalid_argument("curve: deg f must be >= 4");
  if (!int_poly_squarefree(f))
    throw std::invalid_argument("curve: f must be squarefree");
  std::size_t n = static_cast<std::size_t>(f.degree());
  return CurveSpec{p, std::move(f), n};
}

CurveSpec CurveSpec::make(std::uint64_t p, ModPoly f) {
  require_odd_prime(p);
  if (f.degree() < 4)
    throw std::invalid_argument("curve: deg f must be >= 4");
  if (!is_squarefree(f))
    throw std::invalid_argument("curve: f must be squarefree");
  std::size_t n = static_cast<std::size_t>(f.degree());
  return CurveSpec{p, std::move(f), n};
}

std::size_t genus(std::size_t n, std::uint64_t p) {
  if (n < 4) throw std::invalid_argument("genus: n must be >= 4");
  if (!PrimeField::is_prime(p))
    throw std::invalid_argument("genus: p must be prime");
  if (n % p == 0) return (p - 1) * (n - 2) / 2;
  return (p - 1) * (n - 1) / 2;
}

DifferentialBasis differential_basis(std::size_t n, std::uint64_t p) {
  require_odd_prime(p);
  if (n < 4) throw std::invalid_argument("differential_basis: n must be >= 4");
  if (n % p == 0)
    throw std::invalid_argument(
        "differential_basis: p divides n; apply reduce_degree and use the "
        "degree n-1 model");
  DifferentialBasis basis;
  for (std::size_t b = 1; b <= p - 1; ++b) {
    for (std::size_t a = 0; p * (a + 1) < b * n; ++a)
      basis.entries.push_back(
          DifferentialEntry{a, b, (p - b % p) % p});
  }
  return basis;
}

MultiplicityProfile eigen_multiplicities(std::size_t n, std::uint64_t p) {
  require_odd_prime(p);
  std::size_t effective_n = (n % p == 0) ? n - 1 : n;
  DifferentialBasis basis = differential_basis(effective_n, p);
  MultiplicityProfile profile;
  for (const DifferentialEntry& e : basis.entries)
    profile.counts[e.eigen_exponent] += 1;
  if (p == 3) {
    // n_sigma counts the dx/y family (exponent 2), n_sigma_bar the dx/y^2
    // family (exponent 1).
    std::size_t n_sigma = profile.counts.count(2) ? profile.counts.at(2) : 0;
    std::size_t n_sigma_bar =
        profile.counts.count(1) ? profile.counts.at(1) : 0;
    profile.sigma_pair = {n_sigma, n_sigma_bar};
    profile.ribet_coprime = std::gcd(n_sigma, n_sigma_bar) == 1;
  }
  return profile;
}

std::pair<std::size_t, std::size_t> trigonal_multiplicities(std::size_t n) {
  if (n < 4)
    throw std::invalid_argument("trigonal_multiplicities: n must be >= 4");
  if (n % 3 == 0) {
    std::size_t k = n / 3;
    return {k - 1, 2 * k - 1};
  }
  // n = 3k - e with 0 < e < 3.
  std::size_t k = (n + 2) / 3;
  std::size_t e = 3 * k - n;
  return {k - 1, 2 * k - 1 - (2 * e) / 3};
}

CurveSpec reduce_degree(const CurveSpec& c, std::uint64_t alpha) {
  if (c.n % c.p != 0)
    throw std::invalid_argument("reduce_degree: p does not divide deg f");
  if (c.over_rationals())
    throw std::invalid_argument(
        "reduce_degree: curve is over Q; use the rational or root-field "
        "variant");
  const ModPoly& f = std::get<ModPoly>(c.f);
  const PrimeField& Fq = f.field();
  alpha %= Fq.modulus();
  if (f.evaluate(alpha) != 0)
    throw std::invalid_argument("reduce_degree: alpha is not a root of f");

  // f = (x - alpha) f1 by exact division.
  ModPoly linear(Fq, {Fq.neg(alpha), 1});
  auto [f1, rem] = f.divmod(linear);
  if (!rem.is_zero())
    throw std::logic_error("reduce_degree: exact division failed");
  ModPoly h = f1.shifted(alpha);   // h(x) = f1(x + alpha)
  ModPoly h1 = h.reversed();       // h1(x) = x^(n-1) h(1/x)
  if (h1.degree() != static_cast<int>(c.n - 1))
    throw std::logic_error(
        "reduce_degree: h(0) = f'(alpha) vanished on a squarefree input");
  // Separability of f forces h1 separable; checked, not trusted.
  if (!is_squarefree(h1))
    throw std::logic_error("reduce_degree: h1 unexpectedly not squarefree");
  return CurveSpec::make(c.p, h1);
}

RationalReduction reduce_degree_rational(const IntPoly& f, std::uint64_t p,
                                         const mpq_class& alpha) {
  require_odd_prime(p);
  if (f.degree() < 4)
    throw std::invalid_argument("reduce_degree_rational: deg f < 4");
  const std::size_t n = static_cast<std::size_t>(f.degree());
  if (n % p != 0)
    throw std::invalid_argument("reduce_degree_rational: p does not divide n");
  if (f.evaluate(alpha) != 0)
    throw std::invalid_argument("reduce_degree_rational: alpha not a root");

  RationalField Q;
  std::vector<mpq_class> fc;
  for (const mpz_class& z : f.coeffs()) fc.emplace_back(z);
  RatPoly fq(Q, std::move(fc));
  RatPoly linear(Q, {-alpha, mpq_class(1)});
  auto [f1, rem] = fq.divmod(linear);
  if (!rem.is_zero())
    throw std::logic_error("reduce_degree_rational: division not exact");
  // h = f1(x + alpha) by Horner, then reverse.
  RatPoly x_plus_a(Q, {alpha, mpq_class(1)});
  RatPoly h(Q);
  for (std::size_t i = f1.coeffs().size(); i-- > 0;)
    h = h * x_plus_a + RatPoly(Q, {f1.coeffs()[i]});
  std::vector<mpq_class> rev(h.coeffs().rbegin(), h.coeffs().rend());
  while (rev.size() < n) rev.push_back(mpq_class(0));
  RatPoly h1(Q, std::move(rev));
  bool sqf = field_poly_gcd(h1, h1.derivative()).degree() == 0;
  return RationalReduction{std::move(h1), sqf};
}

RootFieldReduction reduce_degree_over_root_field(const IntPoly& f,
                                                 std::uint64_t p) {
  require_odd_prime(p);
  if (f.degree() < 4)
    throw std::invalid_argument("reduce_degree_over_root_field: deg f < 4");
  const std::size_t n = static_cast<std::size_t>(f.degree());
  if (n % p != 0)
    throw std::invalid_argument(
        "reduce_degree_over_root_field: p does not divide n");

  RationalField Q;
  std::vector<mpq_class> fc;
  for (const mpz_class& z : f.coeffs()) fc.emplace_back(z);
  RatPoly modulus(Q, fc);

  // Work with polynomials in x whose coefficients live in Q(alpha).
  auto elem = [&](const RatPoly& rep) { return RatQuotient(modulus, rep); };
  auto from_rat = [&](const mpq_class& c) {
    return elem(RatPoly(Q, {c}));
  };
  RatQuotient alpha = elem(RatPoly(Q, {mpq_class(0), mpq_class(1)}));
  RatQuotient zero = from_rat(0);

  // f over Q(alpha), then synthetic division by (x - alpha):
  // f1_i = f_{i+1} + alpha * f1_{i+1}, from the top down.
  std::vector<RatQuotient> f1(n, zero);
  RatQuotient carry = zero;
  for (std::size_t i = n; i-- > 1;) {
    carry = from_rat(f.coeffs()[i]) + alpha * carry;
    f1[i - 1] = carry;
  }
  // Remainder check: f(alpha) = 0 in Q(alpha) by construction of the
  // quotient ring; f1 has degree n-1 with f1_{n-1} = lc(f).

  // h = f1(x + alpha) via Horner in the polynomial variable.
  std::vector<RatQuotient> h;  // ascending
  auto poly_mul_x_plus_alpha = [&](const std::vector<RatQuotient>& poly) {
    std::vector<RatQuotient> out(poly.size() + 1, zero);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      out[i + 1] = out[i + 1] + poly[i];
      out[i] = out[i] + alpha * poly[i];
    }
    return out;
  };
  for (std::size_t i = n; i-- > 0;) {
    h = poly_mul_x_plus_alpha(h);
    if (h.empty()) h.push_back(zero);
    h[0] = h[0] + f1[i];
  }
  // h has degree n-1; h1 = reversal.
  std::vector<RatQuotient> h1(h.rbegin(), h.rend());
  while (h1.size() < n) h1.push_back(zero);

  // Squarefreeness of h1 over Q(alpha) via gcd with its derivative.
  auto derivative = [&](const std::vector<RatQuotient>& poly) {
    std::vector<RatQuotient> out;
    for (std::size_t i = 1; i < poly.size(); ++i) {
      RatQuotient m = zero;
      for (std::size_t t = 0; t < i; ++t) m = m + poly[i];
      out.push_back(m);
    }
    return out;
  };
  auto degree_of = [&](const std::vector<RatQuotient>& poly) {
    std::size_t d = poly.size();
    while (d > 0 && poly[d - 1].is_zero()) --d;
    return static_cast<int>(d) - 1;
  };
  auto poly_mod = [&](std::vector<RatQuotient> a,
                      const std::vector<RatQuotient>& b) {
    int db = degree_of(b);
    RatQuotient lead_inv = quotient_invert(b[static_cast<std::size_t>(db)]);
    while (degree_of(a) >= db && db >= 0) {
      int da = degree_of(a);
      RatQuotient q = a[static_cast<std::size_t>(da)] * lead_inv;
      for (int i = 0; i <= db; ++i) {
        std::size_t ai = static_cast<std::size_t>(da - db + i);
        a[ai] = a[ai] - q * b[static_cast<std::size_t>(i)];
      }
      a.erase(a.begin() + da, a.end());  // top coefficient now zero
      while (!a.empty() && a.back().is_zero()) a.pop_back();
      if (a.empty()) break;
    }
    return a;
  };
  std::vector<RatQuotient> u = h1, v = derivative(h1);
  while (degree_of(v) >= 0) {
    std::vector<RatQuotient> r = poly_mod(u, v);
    u = v;
    v = r;
  }
  bool sqf = degree_of(u) == 0;

  return RootFieldReduction{std::move(h1), sqf};
}

CurveReport curve_report(const CurveSpec& c) {
  CurveReport rep;
  rep.n = c.n;
  rep.p = c.p;
  rep.genus_value = genus(c.n, c.p);
  rep.reduced_model_used = (c.n % c.p == 0);
  rep.explicit_model_skipped = false;
  rep.multiplicities = eigen_multiplicities(c.n, c.p);

  if (!rep.reduced_model_used) {
    rep.basis = differential_basis(c.n, c.p);
  } else {
    rep.basis = differential_basis(c.n - 1, c.p);
    rep.notes.push_back(
        "p divides deg f: differential data computed on the degree n-1 "
        "reduced model");
    if (c.over_rationals()) {
      const IntPoly& f = std::get<IntPoly>(c.f);
      std::optional<mpz_class> root = find_integer_root(f);
      if (root) {
        RationalReduction red =
            reduce_degree_rational(f, c.p, mpq_class(*root));
        rep.reduction_root = root->get_str();
        rep.reduced_model = red.h1.to_string();
      } else {
        rep.explicit_model_skipped = true;
        rep.notes.push_back(
            "no rational root accessible: multiplicities reported from the "
            "degree n-1 closed forms without constructing the reduced "
            "model explicitly");
      }
    } else {
      const ModPoly& f = std::get<ModPoly>(c.f);
      const PrimeField& Fq = f.field();
      std::optional<std::uint64_t> root;
      for (std::uint64_t a = 0; a < Fq.modulus() && !root; ++a)
        if (f.evaluate(a) == 0) root = a;
      if (root) {
        CurveSpec reduced = reduce_degree(c, *root);
        rep.reduction_root = std::to_string(*root);
        rep.reduced_model = std::get<ModPoly>(reduced.f).to_string();
      } else {
        rep.explicit_model_skipped = true;
        rep.notes.push_back(
            "f has no root in the base field: multiplicities reported from "
            "the degree n-1 closed forms");
      }
    }
  }

  if (c.p == 3 && rep.multiplicities.sigma_pair) {
    auto closed = trigonal_multiplicities(c.n);
    if (closed != *rep.multiplicities.sigma_pair)
      throw std::logic_error(
          "curve_report: closed-form multiplicities disagree with "
          "enumeration");
  }
  return rep;
}

}  // namespace superell
