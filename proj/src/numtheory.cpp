#include "subst/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace subst {

namespace {

constexpr unsigned long kGmpMaxBase = 62;
constexpr std::size_t kSchoolbookDigits = 32;

// Digit alphabet mpz_get_str/mpz_set_str use for bases 37..62.
constexpr const char* kWideAlphabet =
    "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";

Symbol char_to_symbol(char c, unsigned long p) {
  if (c >= '0' && c <= '9') return static_cast<Symbol>(c - '0');
  if (c >= 'A' && c <= 'Z') return static_cast<Symbol>(c - 'A' + 10);
  return static_cast<Symbol>(c - 'a' + (p <= 36 ? 10 : 36));
}

char symbol_to_char(Symbol s, unsigned long p) {
  if (p <= 36) return "0123456789abcdefghijklmnopqrstuvwxyz"[s];
  return kWideAlphabet[s];
}

void require_non_negative(const Natural& a) {
  if (sgn(a) < 0) throw std::invalid_argument("negative value is not a natural number");
}

// Writes exactly `count` radix-p digits of a (a < p^count) into out, LSB first.
void split_digits(unsigned long p, const Natural& a, std::size_t count, Symbol* out) {
  if (count <= kSchoolbookDigits) {
    Natural rest = a;
    for (std::size_t i = 0; i < count; ++i) {
      out[i] = static_cast<Symbol>(mpz_tdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), p));
    }
    return;
  }
  const std::size_t low = count / 2;
  Natural scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), p, low);
  Natural high;
  Natural rem;
  mpz_tdiv_qr(high.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), scale.get_mpz_t());
  split_digits(p, rem, low, out);
  split_digits(p, high, count - low, out + low);
}

Natural join_digits(unsigned long p, std::span<const Symbol> ds) {
  if (ds.size() <= kSchoolbookDigits) {
    Natural acc = 0;
    for (auto it = ds.rbegin(); it != ds.rend(); ++it) {
      acc *= p;
      acc += *it;
    }
    return acc;
  }
  const std::size_t low = ds.size() / 2;
  Natural high = join_digits(p, ds.subspan(low));
  Natural scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), p, low);
  return high * scale + join_digits(p, ds.first(low));
}

}  // namespace

SymbolRangeError::SymbolRangeError(std::size_t index, Symbol symbol, unsigned long radix)
    : std::invalid_argument("symbol " + std::to_string(symbol) + " at index " +
                            std::to_string(index) + " is outside [0, " +
                            std::to_string(radix - 1) + "]"),
      index_(index),
      symbol_(symbol) {}

double bfunc(double x, double y) noexcept {
  auto sign = [](double v) { return static_cast<double>((v > 0.0) - (v < 0.0)); };
  return 0.5 * (sign(x + y) - sign(x - y));
}

Symbol digit(unsigned long p, std::size_t k, const Natural& a) {
  require_non_negative(a);
  if (p == 0) throw std::invalid_argument("digit function needs p >= 1");
  if (p == 1) return 0;
  if (k >= num_digits(Radix(p), a)) return 0;
  Natural lower;
  Natural upper;
  Natural pk = power(Radix(p), k);
  mpz_fdiv_q(lower.get_mpz_t(), a.get_mpz_t(), pk.get_mpz_t());
  pk *= p;
  mpz_fdiv_q(upper.get_mpz_t(), a.get_mpz_t(), pk.get_mpz_t());
  Natural d = lower - upper * p;
  return static_cast<Symbol>(d.get_ui());
}

Natural power(Radix p, std::size_t k) {
  Natural r;
  mpz_ui_pow_ui(r.get_mpz_t(), p.value(), k);
  return r;
}

std::size_t num_digits(Radix p, const Natural& a) {
  require_non_negative(a);
  if (sgn(a) == 0) return 1;
  std::size_t estimate;
  if (p.value() <= kGmpMaxBase) {
    // mpz_sizeinbase is exact or one too large.
    estimate = mpz_sizeinbase(a.get_mpz_t(), static_cast<int>(p.value()));
  } else {
    const double bits = static_cast<double>(mpz_sizeinbase(a.get_mpz_t(), 2));
    estimate = static_cast<std::size_t>(std::max(1.0, std::floor(bits / std::log2(p.value()))));
  }
  // Invariant sought: p^(n-1) <= a < p^n.
  while (cmp(a, power(p, estimate)) >= 0) ++estimate;
  while (estimate > 1 && cmp(a, power(p, estimate - 1)) < 0) --estimate;
  return estimate;
}

std::vector<Symbol> to_digits(Radix p, const Natural& a) {
  require_non_negative(a);
  const std::size_t n = num_digits(p, a);
  std::vector<Symbol> out(n);
  if (p.value() <= kGmpMaxBase) {
    const std::string text = a.get_str(static_cast<int>(p.value()));
    // get_str has no leading zeros, so its length is n.
    for (std::size_t i = 0; i < n; ++i) out[i] = char_to_symbol(text[n - 1 - i], p.value());
    return out;
  }
  split_digits(p.value(), a, n, out.data());
  return out;
}

Natural from_digits(Radix p, std::span<const Symbol> ds) {
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (ds[i] >= p.value()) throw SymbolRangeError(i, ds[i], p.value());
  }
  if (ds.empty()) return Natural(0);
  if (p.value() <= kGmpMaxBase) {
    std::string text(ds.size(), '0');
    for (std::size_t i = 0; i < ds.size(); ++i) {
      text[ds.size() - 1 - i] = symbol_to_char(ds[i], p.value());
    }
    return Natural(text, static_cast<int>(p.value()));
  }
  return join_digits(p.value(), ds);
}

Natural concat(Radix p, const Natural& a, const Natural& b) {
  require_non_negative(b);
  return b * power(p, num_digits(p, a)) + a;
}

std::size_t floor_log(Radix p, const Natural& n) {
  if (sgn(n) <= 0) throw std::invalid_argument("logarithm of a non-positive number");
  return num_digits(p, n) - 1;
}

std::size_t exact_log(Radix p, const Natural& n) {
  const std::size_t k = floor_log(p, n);
  if (power(p, k) != n) {
    throw std::domain_error(n.get_str() + " is not a power of " + std::to_string(p.value()));
  }
  return k;
}

std::size_t concat_exponent(Radix p, const Natural& a, const Natural& b) {
  if (sgn(b) <= 0) throw std::invalid_argument("concat_exponent is undefined for b = 0");
  const Natural shifted = concat(p, a, b) - a;
  if (!mpz_divisible_p(shifted.get_mpz_t(), b.get_mpz_t())) {
    throw std::logic_error("concatenation is not divisible by its upper operand");
  }
  return exact_log(p, Natural(shifted / b));
}

}  // namespace subst
