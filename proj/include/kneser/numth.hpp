#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

namespace kneser {

using BigNat = boost::multiprecision::cpp_int;

/// Base-p digit expansion, least significant digit first.
/// The expansion of 0 is the single digit {0}; otherwise the top digit is nonzero.
struct DigitExpansion {
  std::uint64_t base = 2;
  std::vector<std::uint32_t> digits;

  std::uint64_t value() const;
};

enum class Parity { Even, Odd };

/// Parity of C(2k+1, k) together with the binary-expansion data that decides it.
/// verdict == Odd exactly when every binary digit of k is 1, i.e. k = 2^t - 1.
/// When Even, zero_index is the largest index whose digit is 0 (all higher
/// digits below the top are 1).
struct ParityCertificate {
  std::uint64_t k = 0;
  DigitExpansion expansion_k;
  std::optional<std::size_t> zero_index;
  Parity verdict = Parity::Even;
};

bool is_prime(std::uint64_t p);
bool is_power_of_two(std::uint64_t x);

DigitExpansion digits_base_p(std::uint64_t m, std::uint64_t p);

/// C(m, n) mod p via the digitwise product of the base-p expansions.
/// Digitwise C(a, b) = 0 when a < b; the shorter expansion is zero-padded.
std::uint64_t lucas_residue(std::uint64_t m, std::uint64_t n, std::uint64_t p);

/// Exact C(m, n); 0 when n > m. Multiplicative formula with exact division.
BigNat binom_exact(std::uint64_t m, std::uint64_t n);

ParityCertificate odd_graph_order_parity(std::uint64_t k);

/// Whether 4 divides C(2k+1, k), for even k > 4. Equivalent to k not being a
/// power of two; computed by the reduction C(2k+1,k) = 2(2k+1)t with
/// (k+1)t = C(2k-1, k-1) and k+1 odd, so 4 | C(2k+1,k) iff C(2k-1,k-1) is even.
bool is_multiple_of_4(std::uint64_t k);

}  // namespace kneser
