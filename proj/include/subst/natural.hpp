#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace subst {

// Arbitrary-precision natural number. Words of the substitution system map
// onto these one-to-one (leftmost symbol = most significant digit).
using Natural = mpz_class;

// Alphabet symbol; always in [0, p-1] for the radix p it belongs to.
using Symbol = std::uint32_t;

// Positional base / alphabet size, p >= 2.
class Radix {
 public:
  explicit Radix(unsigned long p) : p_(p) {
    if (p < 2) {
      throw std::invalid_argument("radix must be >= 2, got " + std::to_string(p));
    }
  }

  unsigned long value() const noexcept { return p_; }
  operator unsigned long() const noexcept { return p_; }

  friend bool operator==(Radix, Radix) = default;

 private:
  unsigned long p_;
};

// Parses a decimal natural; throws std::invalid_argument on anything else.
inline Natural parse_natural(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("not a natural number: '" + text + "'");
  }
  return Natural(text, 10);
}

inline std::string to_decimal(const Natural& n) { return n.get_str(10); }

}  // namespace subst
