#pragma once

// Digit arithmetic over arbitrary-precision naturals: the B-function window,
// the radix-p digit function, exact digit counts, radix conversion and the
// concatenation operator J_p.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "subst/natural.hpp"

namespace subst {

// Raised by from_digits when an entry is not a valid radix-p symbol.
class SymbolRangeError : public std::invalid_argument {
 public:
  SymbolRangeError(std::size_t index, Symbol symbol, unsigned long radix);

  std::size_t index() const noexcept { return index_; }
  Symbol symbol() const noexcept { return symbol_; }

 private:
  std::size_t index_;
  Symbol symbol_;
};

// 1/2 (sign(x+y) - sign(x-y)) with sign(0) = 0.
// For y > 0: 1 inside |x| < y, 1/2 on the border, 0 outside.
double bfunc(double x, double y) noexcept;

// k-th radix-p digit of a, k = 0 least significant:
// floor(a / p^k) - p floor(a / p^(k+1)). p = 1 yields 0 for every k.
Symbol digit(unsigned long p, std::size_t k, const Natural& a);

// p^k as a natural.
Natural power(Radix p, std::size_t k);

// 1 + floor(log_p a) computed exactly; 1 for a = 0.
std::size_t num_digits(Radix p, const Natural& a);

// Radix-p digits, least significant first, exactly num_digits(p, a) long.
std::vector<Symbol> to_digits(Radix p, const Natural& a);

// Sum of p^k ds[k]. Throws SymbolRangeError naming the first bad entry.
Natural from_digits(Radix p, std::span<const Symbol> ds);

// J_p(a, b) = b p^(num_digits(p, a)) + a: the digits of b placed above a.
Natural concat(Radix p, const Natural& a, const Natural& b);

// log_p((J_p(a, b) - a) / b), recovered exactly from the concatenated value.
// Requires b >= 1.
std::size_t concat_exponent(Radix p, const Natural& a, const Natural& b);

// Exact integer logarithm: returns k when n == p^k, throws otherwise.
std::size_t exact_log(Radix p, const Natural& n);

// floor(log_p n) for n >= 1.
std::size_t floor_log(Radix p, const Natural& n);

}  // namespace subst
