#include "superell/poly_mod.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "superell/matrix.hpp"

namespace superell {

void ModPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly::ModPoly(PrimeField field, std::vector<std::uint64_t> coeffs)
    : f_(field), c_(std::move(coeffs)) {
  for (auto& x : c_) x %= f_.modulus();
  normalize();
}

ModPoly ModPoly::x_power(PrimeField field, std::size_t k) {
  std::vector<std::uint64_t> c(k + 1, 0);
  c[k] = 1;
  return ModPoly(field, std::move(c));
}

ModPoly ModPoly::constant(PrimeField field, std::uint64_t c) {
  return ModPoly(field, {c});
}

std::uint64_t ModPoly::leading_coeff() const {
  if (c_.empty()) throw std::domain_error("leading_coeff of zero polynomial");
  return c_.back();
}

ModPoly ModPoly::operator+(const ModPoly& o) const {
  if (f_ != o.f_) throw std::invalid_argument("ModPoly add: field mismatch");
  std::vector<std::uint64_t> c(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f_.add(coeff(i), o.coeff(i));
  return ModPoly(f_, std::move(c));
}

ModPoly ModPoly::operator-(const ModPoly& o) const {
  if (f_ != o.f_) throw std::invalid_argument("ModPoly sub: field mismatch");
  std::vector<std::uint64_t> c(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f_.sub(coeff(i), o.coeff(i));
  return ModPoly(f_, std::move(c));
}

ModPoly ModPoly::operator*(const ModPoly& o) const {
  if (f_ != o.f_) throw std::invalid_argument("ModPoly mul: field mismatch");
  if (is_zero() || o.is_zero()) return ModPoly(f_);
  const std::uint64_t p = f_.modulus();
  std::vector<std::uint64_t> c(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i]) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      c[i + j] = (c[i + j] + c_[i] * o.c_[j]) % p;
  }
  return ModPoly(f_, std::move(c));
}

ModPoly ModPoly::scaled(std::uint64_t s) const {
  std::vector<std::uint64_t> c(c_.size());
  s %= f_.modulus();
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = f_.mul(c_[i], s);
  return ModPoly(f_, std::move(c));
}

ModPoly ModPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(f_.inv(leading_coeff()));
}

ModPoly ModPoly::derivative() const {
  if (c_.size() <= 1) return ModPoly(f_);
  std::vector<std::uint64_t> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    c[i - 1] = f_.mul(c_[i], i % f_.modulus());
  return ModPoly(f_, std::move(c));
}

std::uint64_t ModPoly::evaluate(std::uint64_t x) const {
  std::uint64_t r = 0;
  x %= f_.modulus();
  for (std::size_t i = c_.size(); i-- > 0;) r = f_.add(f_.mul(r, x), c_[i]);
  return r;
}

std::pair<ModPoly, ModPoly> ModPoly::divmod(const ModPoly& divisor) const {
  if (f_ != divisor.f_)
    throw std::invalid_argument("ModPoly divmod: field mismatch");
  if (divisor.is_zero()) throw std::domain_error("ModPoly: division by zero");
  if (degree() < divisor.degree()) return {ModPoly(f_), *this};
  std::vector<std::uint64_t> rem = c_;
  const std::size_t dd = divisor.c_.size() - 1;
  std::vector<std::uint64_t> quo(c_.size() - dd, 0);
  std::uint64_t lc_inv = f_.inv(divisor.leading_coeff());
  for (std::size_t i = rem.size(); i-- > dd;) {
    std::uint64_t q = f_.mul(rem[i], lc_inv);
    if (!q) continue;
    quo[i - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j)
      rem[i - dd + j] = f_.sub(rem[i - dd + j], f_.mul(q, divisor.c_[j]));
  }
  return {ModPoly(f_, std::move(quo)), ModPoly(f_, std::move(rem))};
}

ModPoly ModPoly::shifted(std::uint64_t alpha) const {
  // Horner: f(x + a) built from the top coefficient down.
  ModPoly x_plus_a(f_, {alpha % f_.modulus(), 1});
  ModPoly r(f_);
  for (std::size_t i = c_.size(); i-- > 0;)
    r = r * x_plus_a + ModPoly::constant(f_, c_[i]);
  return r;
}

ModPoly ModPoly::reversed() const {
  std::vector<std::uint64_t> c(c_.rbegin(), c_.rend());
  return ModPoly(f_, std::move(c));
}

bool ModPoly::operator<(const ModPoly& o) const {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  for (std::size_t i = c_.size(); i-- > 0;)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

std::string ModPoly::to_string() const {
  std::string out;
  if (is_zero()) {
    out = "0";
  } else {
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (!c_[i]) continue;
      if (!out.empty()) out += " + ";
      bool need_coeff = (c_[i] != 1) || (i == 0);
      if (need_coeff) out += std::to_string(c_[i]);
      if (i > 0) {
        if (need_coeff) out += "*";
        out += "x";
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
  }
  return out + " mod " + std::to_string(f_.modulus());
}

ModPoly poly_gcd(const ModPoly& a, const ModPoly& b) {
  if (a.field() != b.field())
    throw std::invalid_argument("poly_gcd: field mismatch");
  if (a.is_zero() && b.is_zero())
    throw std::invalid_argument("poly_gcd: gcd(0, 0) undefined");
  ModPoly u = a, v = b;
  while (!v.is_zero()) {
    ModPoly r = u % v;
    u = v;
    v = r;
  }
  return u.monic();
}

ModPoly pow_mod(const ModPoly& base, const mpz_class& e, const ModPoly& mod) {
  if (e < 0) throw std::invalid_argument("pow_mod: negative exponent");
  ModPoly r = ModPoly::constant(base.field(), 1) % mod;
  ModPoly b = base % mod;
  const mp_bitcnt_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return r;
  for (mp_bitcnt_t i = bits; i-- > 0;) {
    r = (r * r) % mod;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * b) % mod;
  }
  return r;
}

bool is_squarefree(const ModPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("is_squarefree: degree < 1");
  ModPoly d = f.derivative();
  if (d.is_zero()) return false;  // p-th power times something
  return poly_gcd(f, d).degree() == 0;
}

namespace {

// f with f' == 0 is g(x^p); over F_p the coefficients transfer unchanged.
ModPoly pth_root(const ModPoly& f) {
  const std::uint64_t p = f.field().modulus();
  std::vector<std::uint64_t> c(static_cast<std::size_t>(f.degree()) / p + 1);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coeff(i * p);
  return ModPoly(f.field(), std::move(c));
}

// Monic squarefree decomposition: list of (g, m) with product g^m = input.
void squarefree_decompose(const ModPoly& f, unsigned outer_mult,
                          std::vector<std::pair<ModPoly, unsigned>>& out) {
  const std::uint64_t p = f.field().modulus();
  ModPoly d = f.derivative();
  if (d.is_zero()) {
    squarefree_decompose(pth_root(f), outer_mult * static_cast<unsigned>(p),
                         out);
    return;
  }
  ModPoly c = poly_gcd(f, d);
  ModPoly w = f / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    ModPoly y = poly_gcd(w, c);
    ModPoly z = w / y;
    if (z.degree() > 0) out.emplace_back(z.monic(), i * outer_mult);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0)
    squarefree_decompose(pth_root(c), outer_mult * static_cast<unsigned>(p),
                         out);
}

// Distinct-degree split of a monic squarefree f: (product, d) pairs.
std::vector<std::pair<ModPoly, unsigned>> distinct_degree(const ModPoly& f) {
  std::vector<std::pair<ModPoly, unsigned>> out;
  const PrimeField& F = f.field();
  ModPoly rem = f;
  ModPoly h = ModPoly::x_power(F, 1) % rem;
  unsigned d = 0;
  while (rem.degree() > 0) {
    ++d;
    if (2 * d > static_cast<unsigned>(rem.degree())) {
      out.emplace_back(rem, static_cast<unsigned>(rem.degree()));
      break;
    }
    h = pow_mod(h, mpz_class(static_cast<unsigned long>(F.modulus())), rem);
    ModPoly g = poly_gcd(h - ModPoly::x_power(F, 1), rem);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      rem = rem / g;
      h = h % rem;
    }
  }
  return out;
}

ModPoly random_poly_below(const PrimeField& F, int degree_bound, Rng& rng) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(degree_bound));
  for (auto& x : c) x = rng.below(F.modulus());
  return ModPoly(F, std::move(c));
}

// Equal-degree split (Cantor-Zassenhaus) of monic squarefree f whose
// irreducible factors all have degree d.
void equal_degree(const ModPoly& f, unsigned d, Rng& rng,
                  std::vector<ModPoly>& out) {
  if (f.degree() == static_cast<int>(d)) {
    out.push_back(f);
    return;
  }
  const PrimeField& F = f.field();
  const std::uint64_t p = F.modulus();
  while (true) {
    ModPoly a = random_poly_below(F, f.degree(), rng);
    if (a.degree() < 1) continue;
    ModPoly g = poly_gcd(a, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
    ModPoly b(F);
    if (p == 2) {
      // Trace map a + a^2 + a^4 + ... + a^(2^(d-1)) mod f.
      ModPoly t = a % f;
      b = t;
      for (unsigned i = 1; i < d; ++i) {
        t = (t * t) % f;
        b = b + t;
      }
    } else {
      mpz_class e;
      mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), d);
      e = (e - 1) / 2;
      b = pow_mod(a, e, f) - ModPoly::constant(F, 1);
    }
    if (b.is_zero()) continue;
    g = poly_gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

ModPoly Factorization::product_times_unit() const {
  if (factors.empty())
    throw std::logic_error("Factorization: empty factor list");
  const PrimeField& F = factors.front().factor.field();
  ModPoly prod = ModPoly::constant(F, unit);
  for (const PolyFactor& pf : factors)
    for (unsigned i = 0; i < pf.multiplicity; ++i) prod = prod * pf.factor;
  return prod;
}

Factorization factor_mod_p(const ModPoly& f, RngSeed seed) {
  if (f.degree() < 1)
    throw std::invalid_argument("factor_mod_p: degree must be >= 1");
  Rng rng(seed);
  Factorization out;
  out.unit = f.leading_coeff();

  std::vector<std::pair<ModPoly, unsigned>> sqf;
  squarefree_decompose(f.monic(), 1, sqf);
  for (const auto& [part, mult] : sqf) {
    for (const auto& [prod, d] : distinct_degree(part)) {
      std::vector<ModPoly> irred;
      equal_degree(prod, d, rng, irred);
      for (ModPoly& g : irred)
        out.factors.push_back(PolyFactor{std::move(g), mult});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const PolyFactor& a, const PolyFactor& b) {
              return a.factor < b.factor;
            });
  return out;
}

bool is_irreducible(const ModPoly& f) {
  if (f.degree() < 1)
    throw std::invalid_argument("is_irreducible: degree must be >= 1");
  if (f.degree() == 1) return true;
  if (!is_squarefree(f)) return false;
  auto dd = distinct_degree(f.monic());
  return dd.size() == 1 && dd.front().second ==
                               static_cast<unsigned>(f.degree());
}

std::uint64_t resultant_mod(const ModPoly& a, const ModPoly& b) {
  if (a.degree() < 1 || b.degree() < 1)
    throw std::invalid_argument("resultant_mod: both degrees must be >= 1");
  const PrimeField& F = a.field();
  const std::size_t m = static_cast<std::size_t>(a.degree());
  const std::size_t n = static_cast<std::size_t>(b.degree());
  PrimeFieldMatrix syl(F, m + n, m + n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j <= m; ++j) syl.set(r, r + j, a.coeff(m - j));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= n; ++j) syl.set(n + r, r + j, b.coeff(n - j));
  return determinant(syl);
}

std::uint64_t discriminant_mod(const ModPoly& f) {
  if (f.degree() < 2)
    throw std::invalid_argument("discriminant_mod: degree must be >= 2");
  const PrimeField& F = f.field();
  ModPoly df = f.derivative();
  if (df.is_zero()) return 0;
  std::uint64_t res = df.degree() == 0
                          ? F.pow(df.leading_coeff(),
                                  static_cast<std::uint64_t>(f.degree()))
                          : resultant_mod(f, df);
  // resultant(f, f') carries an extra lc(f)^(deg f - 1 - deg f') factor
  // relative to lc * disc when deg f' < deg f - 1; over F_p just divide.
  std::uint64_t value = F.mul(res, F.inv(f.leading_coeff()));
  const int n = f.degree();
  // The Sylvester matrix here is (deg f + deg f') wide; the textbook
  // disc formula assumes deg f' = deg f - 1, which holds unless p | deg f.
  int gap = (n - 1) - df.degree();
  for (int i = 0; i < gap; ++i)
    value = F.mul(value, f.leading_coeff());
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) value = F.neg(value);
  return value;
}

}  // namespace superell
