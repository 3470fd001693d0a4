#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kneser/numth.hpp"

using namespace kneser;

TEST_CASE("digits_base_p expands exactly") {
  CHECK(digits_base_p(10, 2).digits == std::vector<std::uint32_t>{0, 1, 0, 1});
  CHECK(digits_base_p(0, 5).digits == std::vector<std::uint32_t>{0});
  CHECK(digits_base_p(13, 2).digits == std::vector<std::uint32_t>{1, 0, 1, 1});
  CHECK(digits_base_p(13, 2).value() == 13);
}

TEST_CASE("digits_base_p rejects non-prime bases") {
  CHECK_THROWS_AS(digits_base_p(10, 4), std::domain_error);
  CHECK_THROWS_AS(digits_base_p(10, 1), std::domain_error);
  CHECK_THROWS_AS(lucas_residue(10, 3, 6), std::domain_error);
}

TEST_CASE("digit expansion round-trips") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> dist(0, 1'000'000);
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    for (int i = 0; i < 200; ++i) {
      const std::uint64_t m = dist(rng);
      const DigitExpansion e = digits_base_p(m, p);
      CHECK(e.value() == m);
      for (std::uint32_t d : e.digits) CHECK(d < p);
      if (m > 0) CHECK(e.digits.back() != 0);
    }
  }
}

TEST_CASE("lucas_residue examples") {
  CHECK(lucas_residue(5, 2, 2) == 0);  // C(5,2) = 10
  for (std::uint64_t m : {0u, 1u, 7u, 100u}) {
    for (std::uint64_t p : {2u, 5u, 11u}) {
      CHECK(lucas_residue(m, 0, p) == 1 % p);
    }
  }
  CHECK(lucas_residue(10, 3, 2) == 0);
  CHECK(binom_exact(10, 3) == 120);
}

TEST_CASE("binom_exact examples") {
  CHECK(binom_exact(5, 2) == 10);
  CHECK(binom_exact(0, 0) == 1);
  CHECK(binom_exact(17, 17) == 1);
  CHECK(binom_exact(13, 6) == 1716);
  CHECK(binom_exact(3, 5) == 0);
}

TEST_CASE("lucas_residue agrees with the exact oracle") {
  for (std::uint64_t m = 0; m <= 120; ++m) {
    for (std::uint64_t n = 0; n <= m; ++n) {
      const BigNat exact = binom_exact(m, n);
      for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u}) {
        CHECK(lucas_residue(m, n, p) == exact % p);
      }
    }
  }
}

TEST_CASE("odd_graph_order_parity examples") {
  CHECK(odd_graph_order_parity(2).verdict == Parity::Even);  // C(5,2) = 10
  CHECK(odd_graph_order_parity(3).verdict == Parity::Odd);   // 3 = 2^2 - 1
  CHECK(binom_exact(7, 3) == 35);
  const ParityCertificate c6 = odd_graph_order_parity(6);
  CHECK(c6.verdict == Parity::Even);
  REQUIRE(c6.zero_index.has_value());
  CHECK(*c6.zero_index == 0);  // 6 = 110 in binary
  CHECK_THROWS_AS(odd_graph_order_parity(0), std::domain_error);
}

TEST_CASE("parity verdict matches both residue routes for k <= 64") {
  for (std::uint64_t k = 1; k <= 64; ++k) {
    const ParityCertificate cert = odd_graph_order_parity(k);
    const bool odd_claim = cert.verdict == Parity::Odd;
    CHECK(odd_claim == is_power_of_two(k + 1));
    CHECK((lucas_residue(2 * k + 1, k, 2) == 1) == odd_claim);
    CHECK((binom_exact(2 * k + 1, k) % 2 == 1) == odd_claim);
    if (cert.verdict == Parity::Even) {
      REQUIRE(cert.zero_index.has_value());
      const auto& d = cert.expansion_k.digits;
      CHECK(*cert.zero_index < d.size() - 1);
      CHECK(d[*cert.zero_index] == 0);
      for (std::size_t i = *cert.zero_index + 1; i < d.size(); ++i) CHECK(d[i] == 1);
    }
  }
}

TEST_CASE("is_multiple_of_4 examples") {
  CHECK(is_multiple_of_4(6));    // 1716 = 4 * 429
  CHECK(!is_multiple_of_4(8));   // 24310 = 4 * 6077 + 2
  CHECK(binom_exact(17, 8) == 24310);
  CHECK(is_multiple_of_4(10));
  CHECK_THROWS_AS(is_multiple_of_4(7), std::domain_error);
  CHECK_THROWS_AS(is_multiple_of_4(4), std::domain_error);
}

TEST_CASE("is_multiple_of_4 agrees with the exact oracle for even k <= 64") {
  for (std::uint64_t k = 6; k <= 64; k += 2) {
    const bool claim = is_multiple_of_4(k);
    CHECK(claim == (binom_exact(2 * k + 1, k) % 4 == 0));
    CHECK(claim == !is_power_of_two(k));
  }
}
