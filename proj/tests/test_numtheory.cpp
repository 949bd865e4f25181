#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "subst/numtheory.hpp"

using namespace subst;

TEST_CASE("bfunc window and borders") {
  CHECK(bfunc(1.0, 0.5) == 0.0);
  CHECK(bfunc(0.0, 0.5) == 1.0);
  CHECK(bfunc(0.5, 0.5) == 0.5);
  CHECK(bfunc(-0.5, 0.5) == 0.5);
  CHECK(bfunc(0.0, 0.0) == 0.0);
  CHECK(bfunc(0.25, -1.0) == -1.0);  // sign(y) flips the window
}

TEST_CASE("bfunc over integer offsets is the Kronecker delta") {
  for (int n = -6; n <= 6; ++n) {
    for (int m = -6; m <= 6; ++m) {
      CHECK(bfunc(n - m, 0.5) == (n == m ? 1.0 : 0.0));
    }
  }
}

TEST_CASE("bfunc is an indicator off the borders") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> x(-5, 5), y(0.01, 5);
  for (int i = 0; i < 2000; ++i) {
    const double a = x(rng), b = y(rng);
    CHECK(bfunc(a, b) == (std::abs(a) < b ? 1.0 : 0.0));
  }
}

TEST_CASE("digit") {
  const Natural a = 8674;
  CHECK(digit(10, 0, a) == 4);
  CHECK(digit(10, 1, a) == 7);
  CHECK(digit(10, 2, a) == 6);
  CHECK(digit(10, 3, a) == 8);
  CHECK(digit(2, 3, Natural(40)) == 1);
  CHECK(digit(7, 0, Natural(0)) == 0);
  CHECK(digit(1, 5, Natural(99)) == 0);
  CHECK(digit(1, 0, Natural(99)) == 0);
  CHECK_THROWS(digit(10, 0, Natural(-3)));
}

TEST_CASE("num_digits") {
  CHECK(num_digits(Radix(10), Natural(8674)) == 4);
  CHECK(num_digits(Radix(3), Natural(16)) == 3);
  CHECK(num_digits(Radix(2), Natural(0)) == 1);
  CHECK_THROWS_AS(Radix(1), std::invalid_argument);
}

TEST_CASE("num_digits is exact at powers of p") {
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 10ul, 36ul, 61ul, 62ul, 63ul, 100ul, 1000003ul}) {
    for (std::size_t k = 1; k <= 64; ++k) {
      const Natural pk = power(Radix(p), k);
      CHECK(num_digits(Radix(p), pk) == k + 1);
      CHECK(num_digits(Radix(p), Natural(pk - 1)) == k);
    }
  }
}

TEST_CASE("to_digits / from_digits") {
  CHECK(to_digits(Radix(2), Natural(40)) == std::vector<Symbol>{0, 0, 0, 1, 0, 1});
  CHECK(to_digits(Radix(3), Natural(16)) == std::vector<Symbol>{1, 2, 1});
  CHECK(to_digits(Radix(5), Natural(0)) == std::vector<Symbol>{0});

  const std::vector<Symbol> cantor{0, 0, 0, 1, 0, 1};
  CHECK(from_digits(Radix(2), cantor) == 40);
  const std::vector<Symbol> twelve{2, 1};
  CHECK(from_digits(Radix(3), twelve) == 5);
  CHECK(from_digits(Radix(10), std::vector<Symbol>{}) == 0);
}

TEST_CASE("from_digits names the offending index") {
  const std::vector<Symbol> bad{1, 0, 3, 1};
  try {
    (void)from_digits(Radix(3), bad);
    FAIL("expected SymbolRangeError");
  } catch (const SymbolRangeError& e) {
    CHECK(e.index() == 2);
    CHECK(e.symbol() == 3);
  }
}

TEST_CASE("digit reconstruction and vanishing for A < 1e6") {
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 10ul}) {
    for (unsigned long a = 0; a < 1000000; a += (a < 2000 ? 1 : 997)) {
      const Natural n = a;
      const std::size_t nd = num_digits(Radix(p), n);
      REQUIRE(nd == oracle::digit_count(n, p));
      Natural sum = 0;
      for (std::size_t k = 0; k < nd; ++k) sum += power(Radix(p), k) * digit(p, k, n);
      REQUIRE(sum == n);
      for (std::size_t k = nd; k < nd + 8; ++k) REQUIRE(digit(p, k, n) == 0);
    }
  }
}

TEST_CASE("round trips, including radices beyond the fast conversion path") {
  std::mt19937_64 rng(11);
  gmp_randclass gmp(gmp_randinit_mt);
  gmp.seed(11);
  for (unsigned long p : {2ul, 3ul, 7ul, 10ul, 36ul, 37ul, 62ul, 63ul, 97ul, 65536ul}) {
    for (int i = 0; i < 40; ++i) {
      const Natural a = gmp.get_z_bits(1 + static_cast<unsigned long>(rng() % 3000));
      const auto ds = to_digits(Radix(p), a);
      REQUIRE(ds.size() == num_digits(Radix(p), a));
      REQUIRE(from_digits(Radix(p), ds) == a);
      if (a != 0) REQUIRE(ds.back() != 0);
      for (Symbol s : ds) REQUIRE(s < p);
    }
    // canonical digit sequences survive the other direction
    std::uniform_int_distribution<Symbol> sym(0, static_cast<Symbol>(p - 1));
    for (int i = 0; i < 40; ++i) {
      std::vector<Symbol> ds(1 + rng() % 500);
      for (auto& s : ds) s = sym(rng);
      if (ds.back() == 0) ds.back() = 1;
      REQUIRE(to_digits(Radix(p), from_digits(Radix(p), ds)) == ds);
    }
  }
}

TEST_CASE("concat") {
  CHECK(concat(Radix(10), Natural(2149), Natural(987605)) == Natural("9876052149"));
  CHECK(concat(Radix(10), Natural(85467443), Natural(85467443)) == Natural("8546744385467443"));
  CHECK(concat(Radix(7), Natural(1234), Natural(0)) == 1234);
  CHECK(concat_exponent(Radix(10), Natural(2149), Natural(987605)) == 4);
  CHECK(concat_exponent(Radix(10), Natural(85467443), Natural(85467443)) == 8);
  CHECK(concat_exponent(Radix(2), Natural(1), Natural(1)) == 1);
  CHECK_THROWS_AS(concat_exponent(Radix(10), Natural(5), Natural(0)), std::invalid_argument);
}

TEST_CASE("concat places digits of B above digits of A") {
  std::mt19937_64 rng(3);
  for (unsigned long p : {2ul, 3ul, 10ul, 40ul}) {
    for (int i = 0; i < 200; ++i) {
      const Natural a = static_cast<unsigned long>(rng() % 100000);
      const Natural b = 1 + static_cast<unsigned long>(rng() % 100000);
      const Natural j = concat(Radix(p), a, b);
      const std::size_t na = num_digits(Radix(p), a);
      const std::size_t nb = num_digits(Radix(p), b);
      REQUIRE(num_digits(Radix(p), j) == na + nb);
      REQUIRE(concat_exponent(Radix(p), a, b) == na);
      for (std::size_t k = 0; k < na + nb; ++k) {
        REQUIRE(digit(p, k, j) == (k < na ? digit(p, k, a) : digit(p, k - na, b)));
      }
    }
  }
}

TEST_CASE("exact_log") {
  CHECK(exact_log(Radix(3), Natural(81)) == 4);
  CHECK(exact_log(Radix(3), Natural(1)) == 0);
  CHECK_THROWS(exact_log(Radix(3), Natural(82)));
  CHECK(floor_log(Radix(10), Natural(999)) == 2);
}
