#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "superell/poly_int.hpp"

namespace superell {

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : std::invalid_argument("syntax error at offset " +
                              std::to_string(offset) + ": " + message),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

struct ParsedPoly {
  IntPoly poly;
  std::optional<std::uint64_t> modulus;  // present for "... mod q"
};

// Grammar: terms c, x^k, c*x^k or c x^k joined by '+'/'-' (ASCII or U+2212),
// whitespace-insensitive, optional trailing "mod q" with q prime.
ParsedPoly parse_polynomial(const std::string& text);

}  // namespace superell
