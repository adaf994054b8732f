#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "superell/prime_field.hpp"

namespace superell {

// Coefficient-field drivers for the generic polynomial template below.

struct RationalField {
  using Elem = mpq_class;
  static Elem zero() { return mpq_class(0); }
  static Elem one() { return mpq_class(1); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("RationalField: inverse of zero");
    return 1 / a;
  }
  static bool is_zero(const Elem& a) { return a == 0; }
  static std::string to_string(const Elem& a) { return a.get_str(); }
  bool operator==(const RationalField&) const { return true; }
};

struct FpField {
  PrimeField f;
  using Elem = std::uint64_t;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const { return f.add(a, b); }
  Elem sub(Elem a, Elem b) const { return f.sub(a, b); }
  Elem mul(Elem a, Elem b) const { return f.mul(a, b); }
  Elem neg(Elem a) const { return f.neg(a); }
  Elem inv(Elem a) const { return f.inv(a); }
  static bool is_zero(Elem a) { return a == 0; }
  static std::string to_string(Elem a) { return std::to_string(a); }
  bool operator==(const FpField& o) const { return f == o.f; }
};

// Dense univariate polynomial over an abstract field K. Only the quotient
// ring machinery needs the generic form; everything mod p uses ModPoly.
template <class K>
class FieldPoly {
 public:
  using Elem = typename K::Elem;

  explicit FieldPoly(K k) : k_(k) {}
  FieldPoly(K k, std::vector<Elem> coeffs) : k_(k), c_(std::move(coeffs)) {
    normalize();
  }

  const K& base() const { return k_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Elem{}; }
  const std::vector<Elem>& coeffs() const { return c_; }
  Elem leading_coeff() const {
    if (c_.empty())
      throw std::domain_error("FieldPoly: leading_coeff of zero");
    return c_.back();
  }

  FieldPoly operator+(const FieldPoly& o) const {
    std::vector<Elem> c(std::max(c_.size(), o.c_.size()), Elem{});
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = k_.add(get(i), o.get(i));
    return FieldPoly(k_, std::move(c));
  }
  FieldPoly operator-(const FieldPoly& o) const {
    std::vector<Elem> c(std::max(c_.size(), o.c_.size()), Elem{});
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = k_.sub(get(i), o.get(i));
    return FieldPoly(k_, std::move(c));
  }
  FieldPoly operator*(const FieldPoly& o) const {
    if (is_zero() || o.is_zero()) return FieldPoly(k_);
    std::vector<Elem> c(c_.size() + o.c_.size() - 1, Elem{});
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j)
        c[i + j] = k_.add(c[i + j], k_.mul(c_[i], o.c_[j]));
    return FieldPoly(k_, std::move(c));
  }
  FieldPoly scaled(const Elem& s) const {
    std::vector<Elem> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = k_.mul(c_[i], s);
    return FieldPoly(k_, std::move(c));
  }
  FieldPoly monic() const {
    if (is_zero()) return *this;
    return scaled(k_.inv(leading_coeff()));
  }
  FieldPoly derivative() const {
    if (c_.size() <= 1) return FieldPoly(k_);
    std::vector<Elem> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      Elem m = Elem{};
      for (std::size_t t = 0; t < i; ++t) m = k_.add(m, k_.one());
      c[i - 1] = k_.mul(c_[i], m);
    }
    return FieldPoly(k_, std::move(c));
  }

  std::pair<FieldPoly, FieldPoly> divmod(const FieldPoly& d) const {
    if (d.is_zero()) throw std::domain_error("FieldPoly: division by zero");
    if (degree() < d.degree()) return {FieldPoly(k_), *this};
    std::vector<Elem> rem = c_;
    const std::size_t dd = d.c_.size() - 1;
    std::vector<Elem> quo(c_.size() - dd, Elem{});
    Elem lc_inv = k_.inv(d.leading_coeff());
    for (std::size_t i = rem.size(); i-- > dd;) {
      Elem q = k_.mul(rem[i], lc_inv);
      if (K::is_zero(q)) continue;
      quo[i - dd] = q;
      for (std::size_t j = 0; j <= dd; ++j)
        rem[i - dd + j] = k_.sub(rem[i - dd + j], k_.mul(q, d.c_[j]));
    }
    return {FieldPoly(k_, std::move(quo)), FieldPoly(k_, std::move(rem))};
  }
  FieldPoly operator%(const FieldPoly& d) const { return divmod(d).second; }
  FieldPoly operator/(const FieldPoly& d) const { return divmod(d).first; }

  bool operator==(const FieldPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!K::is_zero(k_.sub(c_[i], o.c_[i]))) return false;
    return true;
  }

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (K::is_zero(c_[i])) continue;
      if (!out.empty()) out += " + ";
      out += "(" + K::to_string(c_[i]) + ")";
      if (i > 0) {
        out += "*" + var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  K k_;
  std::vector<Elem> c_;
  Elem get(std::size_t i) const { return i < c_.size() ? c_[i] : Elem{}; }
  void normalize() {
    while (!c_.empty() && K::is_zero(c_.back())) c_.pop_back();
  }
};

// gcd(a, b) monic, plus Bezout cofactor u with u*a = g (mod b).
template <class K>
FieldPoly<K> field_poly_gcd(const FieldPoly<K>& a, const FieldPoly<K>& b) {
  FieldPoly<K> u = a, v = b;
  while (!v.is_zero()) {
    FieldPoly<K> r = u % v;
    u = v;
    v = r;
  }
  return u.monic();
}

// Raised when inverting a zero divisor; carries the factor of the modulus
// that the extended Euclid run exposed.
class NonInvertibleError : public std::domain_error {
 public:
  explicit NonInvertibleError(std::string factor)
      : std::domain_error("quotient ring: element not invertible; modulus has factor " +
                          factor),
        factor_(std::move(factor)) {}
  const std::string& factor() const { return factor_; }

 private:
  std::string factor_;
};

// Element of K[x]/(modulus). The modulus is assumed irreducible over K when
// the quotient is used as a field; this is not verified here, but inversion
// detects any counterexample it stumbles on and reports the factor.
template <class K>
class QuotientRingElement {
 public:
  QuotientRingElement(FieldPoly<K> modulus, FieldPoly<K> representative)
      : mod_(std::move(modulus)), rep_(std::move(representative) % mod_) {
    if (mod_.degree() < 1)
      throw std::invalid_argument("QuotientRingElement: modulus degree < 1");
  }

  const FieldPoly<K>& modulus() const { return mod_; }
  const FieldPoly<K>& representative() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }

  QuotientRingElement operator+(const QuotientRingElement& o) const {
    return QuotientRingElement(mod_, rep_ + o.rep_);
  }
  QuotientRingElement operator-(const QuotientRingElement& o) const {
    return QuotientRingElement(mod_, rep_ - o.rep_);
  }
  QuotientRingElement operator*(const QuotientRingElement& o) const {
    return QuotientRingElement(mod_, rep_ * o.rep_);
  }

  bool operator==(const QuotientRingElement& o) const {
    return rep_ == o.rep_;
  }

 private:
  FieldPoly<K> mod_, rep_;
};

// Multiplicative inverse in K[x]/(modulus) via extended Euclid. Errors with
// the discovered nontrivial factor when gcd(rep, modulus) != 1.
template <class K>
QuotientRingElement<K> quotient_invert(const QuotientRingElement<K>& e) {
  const FieldPoly<K>& m = e.modulus();
  const K& k = m.base();
  if (e.is_zero()) throw NonInvertibleError(m.to_string());
  // Invariants: r0 = t0*a (mod m), r1 = t1*a (mod m).
  FieldPoly<K> r0 = m, r1 = e.representative();
  FieldPoly<K> t0(k), t1(k, {k.one()});
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = r1;
    r1 = r;
    FieldPoly<K> t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0.degree() != 0) throw NonInvertibleError(r0.monic().to_string());
  // r0 is a nonzero constant: t0 * rep = r0 (mod m).
  FieldPoly<K> inv_rep = t0.scaled(k.inv(r0.leading_coeff()));
  return QuotientRingElement<K>(m, inv_rep);
}

using RatPoly = FieldPoly<RationalField>;
using RatQuotient = QuotientRingElement<RationalField>;
using FpPoly = FieldPoly<FpField>;
using FpQuotient = QuotientRingElement<FpField>;

}  // namespace superell
