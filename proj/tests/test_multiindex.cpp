#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gevlab/big_int.hpp"
#include "gevlab/lemmas.hpp"
#include "gevlab/multi_index.hpp"
#include "gevlab/rng.hpp"

using namespace gevlab;
using lemmas::StarVariant;

TEST_CASE("biguint arithmetic round-trips") {
  CHECK(BigUint::factorial(20).to_string() == "2432902008176640000");
  BigUint p(1);
  p <<= 128;
  CHECK(p.to_string() == "340282366920938463463374607431768211456");

  Rng rng(2024);
  for (int it = 0; it < 500; ++it) {
    BigUint a(rng.next_u64()), b(rng.next_u64() | 1);
    for (int k = 0; k < static_cast<int>(rng.next_u64() % 5); ++k) a = a * BigUint(rng.next_u64());
    for (int k = 0; k < static_cast<int>(rng.next_u64() % 3); ++k) b = b * BigUint(rng.next_u64());
    BigUint q, r;
    BigUint::divmod(a, b, q, r);
    CHECK(r < b);
    CHECK(q * b + r == a);
    BigUint g = BigUint::gcd(a, b);
    CHECK((a % g).is_zero());
    CHECK((b % g).is_zero());
  }
}

TEST_CASE("bigratio lowest terms and comparison") {
  BigRatio r(BigInt(BigUint(6)), BigUint(8));
  CHECK(r.to_string() == "3/4");
  CHECK(r < BigRatio(1, 1));
  CHECK(BigRatio(2, 6) == BigRatio(1, 3));
  CHECK(BigRatio(-2, 4).to_string() == "-1/2");
  CHECK(BigRatio(10, 30).to_double() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("weight: binomial of the tangential part") {
  CHECK(weight_u64({2, 1, 3}) == 3);  // 3!/(2! 1!)
  for (int k = 0; k < 12; ++k) CHECK(weight_u64({0, 0, k}) == 1);
  // exact factorial oracle for (4,4,0)
  BigUint oracle = BigUint::factorial(8) / (BigUint::factorial(4) * BigUint::factorial(4));
  CHECK(oracle.as_u64() == 70);
  CHECK(weight_u64({4, 4, 0}) == 70);
}

TEST_CASE("weight is independent of the normal order") {
  Rng rng(5);
  for (int it = 0; it < 100; ++it) {
    int a1 = static_cast<int>(rng.next_u64() % 12), a2 = static_cast<int>(rng.next_u64() % 12);
    int a3 = static_cast<int>(rng.next_u64() % 12), b3 = static_cast<int>(rng.next_u64() % 12);
    CHECK(weight_u64({a1, a2, a3}) == weight_u64({a1, a2, b3}));
  }
}

TEST_CASE("choose_ratio examples") {
  // binom(a,b) = 4, M_a = 6, M_b = 2, M_{a-b} = 2 -> 4*6/(2*2) = 6
  CHECK(lemmas::choose_ratio({2, 2, 1}, {1, 1, 0}) == BigRatio(6, 1));
  CHECK(lemmas::choose_ratio({3, 1, 4}, {3, 1, 4}) == BigRatio(1, 1));
  // equals binom(|a|,|b|) = binom(2,1): the bound can be attained
  CHECK(lemmas::choose_ratio({1, 1, 0}, {1, 0, 0}) == BigRatio(2, 1));
  CHECK_THROWS_AS((void)lemmas::choose_ratio({1, 0, 0}, {2, 0, 0}), std::invalid_argument);
}

TEST_CASE("choose bound has no violations at small order") {
  CHECK(lemmas::verify_choose_lemma(1).empty());
  CHECK(lemmas::verify_choose_lemma(6).empty());
  auto scan = lemmas::scan_choose_lemma(10);
  CHECK(scan.violations.empty());
  // the bound is attained (ratio 1) but never exceeded
  CHECK(scan.worst_ratio == BigRatio(1, 1));
}

TEST_CASE("product identity: ones and the j=0 edge") {
  lemmas::CoeffMap x, y;
  for (const auto& b : indices_of_order(1)) x[{b.a1, b.a2, b.a3}] = 1;
  for (const auto& g : indices_of_order(2)) y[{g.a1, g.a2, g.a3}] = 1;
  auto sides = lemmas::product_identity_sides(3, 1, x, y);
  CHECK(sides.lhs.to_string() == "18");  // 3 betas * 6 gammas
  CHECK(sides.rhs.to_string() == "18");

  lemmas::CoeffMap x0, y0;
  x0[{0, 0, 0}] = 7;
  std::int64_t ysum = 0;
  Rng rng(3);
  for (const auto& g : indices_of_order(4)) {
    auto v = rng.uniform_int(-9, 9);
    y0[{g.a1, g.a2, g.a3}] = v;
    ysum += v;
  }
  auto s0 = lemmas::product_identity_sides(4, 0, x0, y0);
  CHECK(s0.lhs == BigInt(7 * ysum));
  CHECK(s0.rhs == BigInt(7 * ysum));
}

TEST_CASE("product identity holds on random integer maps") {
  Rng rng(99);
  for (int it = 0; it < 60; ++it) {
    const int m = 1 + static_cast<int>(rng.next_u64() % 8);
    const int j = static_cast<int>(rng.next_u64() % (m + 1));
    lemmas::CoeffMap x, y;
    for (const auto& b : indices_of_order(j)) x[{b.a1, b.a2, b.a3}] = rng.uniform_int(-9, 9);
    for (const auto& g : indices_of_order(m - j)) y[{g.a1, g.a2, g.a3}] = rng.uniform_int(-9, 9);
    CHECK(lemmas::verify_product_identity(m, j, x, y));
  }
}

TEST_CASE("star ratio examples") {
  CHECK(lemmas::lemma_star_ratio(0, 0, 3, StarVariant::Plain) == BigRatio(1, 3));
  // sum 6 + 1 + 1 + 2 = 10, denominator 5 * binom(4,2) = 30
  CHECK(lemmas::lemma_star_ratio(2, 2, 5, StarVariant::Plain) == BigRatio(1, 3));
  CHECK(lemmas::lemma_star_ratio(1, 0, 3, StarVariant::Shift1) == BigRatio(1, 3));
  CHECK_THROWS_AS((void)lemmas::lemma_star_ratio(0, 1, 3, StarVariant::Shift1), std::invalid_argument);
  CHECK_THROWS_AS((void)lemmas::lemma_star_ratio(1, 0, 3, StarVariant::Shift2), std::invalid_argument);
  CHECK_THROWS_AS((void)lemmas::lemma_star_ratio(2, 2, 4, StarVariant::Plain), std::invalid_argument);
}

TEST_CASE("star variants are mirror images") {
  for (int b1 = 0; b1 <= 9; ++b1)
    for (int b2 = 0; b2 <= 9; ++b2) {
      const int m = std::max(3, b1 + b2 + 1);
      CHECK(lemmas::lemma_star_ratio(b1, b2, m, StarVariant::Plain) ==
            lemmas::lemma_star_ratio(b2, b1, m, StarVariant::Plain));
      if (b1 >= 1)
        CHECK(lemmas::lemma_star_ratio(b1, b2, m, StarVariant::Shift1) ==
              lemmas::lemma_star_ratio(b2, b1, m, StarVariant::Shift2));
    }
}

TEST_CASE("star sup over a small range matches the known extrema") {
  auto plain = lemmas::star_sup(60, StarVariant::Plain);
  CHECK(plain.sup == BigRatio(2, 3));
  auto s1 = lemmas::star_sup(60, StarVariant::Shift1);
  CHECK(s1.sup == BigRatio(1, 2));
  auto s2 = lemmas::star_sup(60, StarVariant::Shift2);
  CHECK(s2.sup == BigRatio(1, 2));
}

TEST_CASE("stirling bounds") {
  auto b1 = lemmas::stirling_bounds(1);
  CHECK(!b1.log_scale);
  CHECK(b1.lower < b1.value);
  // the upper bound degenerates to equality at n = 1
  CHECK(b1.upper == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(b1.value == 1.0);

  auto b10 = lemmas::stirling_bounds(10);
  CHECK(b10.lower < 3628800.0);
  CHECK(b10.value == doctest::Approx(3628800.0));
  CHECK(3628800.0 < b10.upper);

  auto b1000 = lemmas::stirling_bounds(1000);
  CHECK(b1000.log_scale);
  CHECK(b1000.lower < b1000.value);
  CHECK(b1000.value < b1000.upper);

  for (std::int64_t n : {2, 3, 17, 170}) {
    auto b = lemmas::stirling_bounds(n);
    CHECK(b.lower < b.value);
    CHECK(b.value < b.upper);
  }
}

TEST_CASE("pairwise binomial inequality") {
  CHECK(lemmas::verify_binomial_pair(20).empty());
}
