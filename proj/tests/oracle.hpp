#pragma once

// Deliberately naive reference computations for the tests. Nothing here
// calls into the library's digit or substitution code.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace oracle {

// Single-character-symbol substitution on plain strings.
inline std::string substitute(const std::map<char, std::string>& rule, const std::string& word) {
  std::string out;
  for (char c : word) out += rule.at(c);
  return out;
}

inline std::string iterate(const std::map<char, std::string>& rule, std::string word, int steps) {
  for (int i = 0; i < steps; ++i) word = substitute(rule, word);
  return word;
}

// Value of a digit string (most significant first, '0'-'9') in radix p, by
// repeated multiplication.
inline mpz_class value(const std::string& digits, unsigned long p) {
  mpz_class acc = 0;
  for (char c : digits) acc = acc * p + (c - '0');
  return acc;
}

// Digit string of n in radix p (p <= 10), most significant first, via
// repeated division.
inline std::string spell(mpz_class n, unsigned long p) {
  if (n == 0) return "0";
  std::string s;
  while (n > 0) {
    mpz_class r = n % p;
    s.insert(s.begin(), static_cast<char>('0' + r.get_ui()));
    n /= p;
  }
  return s;
}

// Digit count by repeated multiplication.
inline std::size_t digit_count(const mpz_class& n, unsigned long p) {
  std::size_t k = 1;
  mpz_class bound = p;
  while (bound <= n) {
    bound *= p;
    ++k;
  }
  return k;
}

}  // namespace oracle
