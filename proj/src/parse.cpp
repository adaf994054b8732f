#include "superell/parse.hpp"

#include <cctype>
#include <map>

namespace superell {

namespace {

constexpr std::size_t kMaxExponent = 10000;

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
      ++i;
  }
  bool done() const { return i >= s.size(); }
  char peek() const { return s[i]; }

  // Consumes '-' or the UTF-8 minus sign U+2212; returns true if consumed.
  bool eat_minus() {
    if (i < s.size() && s[i] == '-') {
      ++i;
      return true;
    }
    if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
        static_cast<unsigned char>(s[i + 1]) == 0x88 &&
        static_cast<unsigned char>(s[i + 2]) == 0x92) {
      i += 3;
      return true;
    }
    return false;
  }

  bool eat(char c) {
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  bool lookahead_word(const std::string& w) const {
    if (s.compare(i, w.size(), w) != 0) return false;
    std::size_t after = i + w.size();
    return after >= s.size() ||
           !std::isalnum(static_cast<unsigned char>(s[after]));
  }

  mpz_class read_integer() {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      ++i;
    if (i == start) throw ParseError(start, "expected digits");
    return mpz_class(s.substr(start, i - start), 10);
  }
};

}  // namespace

ParsedPoly parse_polynomial(const std::string& text) {
  Cursor c{text};
  std::map<std::size_t, mpz_class> coeffs;
  bool first_term = true;

  while (true) {
    c.skip_ws();
    if (c.done()) {
      if (first_term) throw ParseError(c.i, "empty polynomial");
      break;
    }
    if (!first_term || c.lookahead_word("mod")) {
      if (c.lookahead_word("mod")) break;
    }

    // Sign.
    bool negative = false;
    if (c.eat_minus()) {
      negative = true;
    } else if (c.eat('+')) {
      if (first_term) throw ParseError(c.i - 1, "unexpected '+'");
    } else if (!first_term) {
      throw ParseError(c.i, "expected '+' or '-' between terms");
    }
    c.skip_ws();
    if (c.done()) throw ParseError(c.i, "dangling sign");

    // Coefficient and/or x-part.
    mpz_class coeff = 1;
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coeff = c.read_integer();
      saw_coeff = true;
      c.skip_ws();
      c.eat('*');
      c.skip_ws();
    }
    std::size_t exponent = 0;
    if (!c.done() && c.peek() == 'x') {
      ++c.i;
      c.skip_ws();
      if (c.eat('^')) {
        c.skip_ws();
        if (c.done() ||
            !std::isdigit(static_cast<unsigned char>(c.peek())))
          throw ParseError(c.i, "expected exponent digits after '^'");
        mpz_class e = c.read_integer();
        if (e > static_cast<unsigned long>(kMaxExponent))
          throw ParseError(c.i, "exponent too large");
        exponent = e.get_ui();
      } else {
        exponent = 1;
      }
    } else if (!saw_coeff) {
      throw ParseError(c.i, "expected coefficient or 'x'");
    }

    if (negative) coeff = -coeff;
    coeffs[exponent] += coeff;
    first_term = false;
  }

  // Optional "mod q".
  std::optional<std::uint64_t> modulus;
  c.skip_ws();
  if (!c.done()) {
    if (!c.lookahead_word("mod"))
      throw ParseError(c.i, "unexpected trailing input");
    c.i += 3;
    c.skip_ws();
    if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek())))
      throw ParseError(c.i, "expected prime after 'mod'");
    std::size_t q_offset = c.i;
    mpz_class q = c.read_integer();
    c.skip_ws();
    if (!c.done()) throw ParseError(c.i, "unexpected trailing input");
    if (q > PrimeField::kMaxModulus)
      throw ParseError(q_offset, "modulus too large");
    std::uint64_t q_u = q.get_ui();
    if (!PrimeField::is_prime(q_u))
      throw ParseError(q_offset, "modulus " + q.get_str() + " is not prime");
    modulus = q_u;
  }

  std::size_t deg = coeffs.empty() ? 0 : coeffs.rbegin()->first;
  std::vector<mpz_class> v(deg + 1, 0);
  for (const auto& [e, a] : coeffs) v[e] = a;
  return ParsedPoly{IntPoly(std::move(v)), modulus};
}

}  // namespace superell
