#include "superell/poly_int.hpp"

#include <stdexcept>

#include "superell/poly_mod.hpp"

namespace superell {

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
  normalize();
}

IntPoly IntPoly::from_ints(std::vector<long> coeffs) {
  std::vector<mpz_class> c(coeffs.begin(), coeffs.end());
  return IntPoly(std::move(c));
}

IntPoly IntPoly::x_power(std::size_t k) {
  std::vector<mpz_class> c(k + 1, 0);
  c[k] = 1;
  return IntPoly(std::move(c));
}

const mpz_class& IntPoly::coeff(std::size_t k) const {
  static const mpz_class zero = 0;
  return k < c_.size() ? c_[k] : zero;
}

const mpz_class& IntPoly::leading_coeff() const {
  if (c_.empty()) throw std::domain_error("leading_coeff of zero polynomial");
  return c_.back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<mpz_class> c(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<mpz_class> c(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - o.coeff(i);
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<mpz_class> c(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::negated() const {
  std::vector<mpz_class> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly();
  std::vector<mpz_class> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    c[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(c));
}

mpz_class IntPoly::evaluate(const mpz_class& x) const {
  mpz_class r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

mpq_class IntPoly::evaluate(const mpq_class& x) const {
  mpq_class r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + mpq_class(c_[i]);
  return r;
}

ModPoly IntPoly::reduce_mod(const PrimeField& field) const {
  std::vector<std::uint64_t> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = field.reduce(c_[i]);
  return ModPoly(field, std::move(c));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const mpz_class& a = c_[i];
    if (a == 0) continue;
    mpz_class mag = abs(a);
    if (out.empty()) {
      if (a < 0) out += "-";
    } else {
      out += (a < 0) ? " - " : " + ";
    }
    bool need_coeff = (mag != 1) || (i == 0);
    if (need_coeff) out += mag.get_str();
    if (i > 0) {
      if (need_coeff) out += "*";
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

namespace {

// Exact determinant by Bareiss fraction-free elimination.
mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : mpz_class(-a[n - 1][n - 1]);
}

}  // namespace

mpz_class resultant(const IntPoly& a, const IntPoly& b) {
  if (a.degree() < 1 || b.degree() < 1)
    throw std::invalid_argument("resultant: both degrees must be >= 1");
  const std::size_t m = static_cast<std::size_t>(a.degree());
  const std::size_t n = static_cast<std::size_t>(b.degree());
  std::vector<std::vector<mpz_class>> syl(m + n,
                                          std::vector<mpz_class>(m + n, 0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j <= m; ++j) syl[r][r + j] = a.coeff(m - j);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= n; ++j) syl[n + r][r + j] = b.coeff(n - j);
  return bareiss_determinant(std::move(syl));
}

mpz_class discriminant(const IntPoly& f) {
  if (f.degree() < 2)
    throw std::invalid_argument("discriminant: degree must be >= 2");
  IntPoly df = f.derivative();
  if (df.is_zero())
    throw std::invalid_argument("discriminant: zero derivative");
  const int n = f.degree();
  mpz_class res = resultant(f, df);
  mpz_class disc;
  mpz_divexact(disc.get_mpz_t(), res.get_mpz_t(),
               f.leading_coeff().get_mpz_t());
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) disc = -disc;
  return disc;
}

}  // namespace superell
