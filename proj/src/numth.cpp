#include "kneser/numth.hpp"

#include <stdexcept>

#include "kneser/errors.hpp"

namespace kneser {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t x, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  x %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, x, p);
    x = mul_mod(x, x, p);
    e >>= 1;
  }
  return r;
}

// C(a, b) mod p for 0 <= a, b < p. Since a < p no factor of p appears, so the
// denominator is invertible mod p (Fermat inverse).
std::uint64_t small_binom_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 1; i <= b; ++i) {
    num = mul_mod(num, (a + 1 - i) % p, p);
    den = mul_mod(den, i % p, p);
  }
  if (p == 2) return num;  // den is 1 mod 2 when nonzero path taken
  return mul_mod(num, pow_mod(den, p - 2, p), p);
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw std::domain_error("modulus " + std::to_string(p) + " is not prime");
  }
}

}  // namespace

std::uint64_t DigitExpansion::value() const {
  std::uint64_t v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    v = v * base + digits[i];
  }
  return v;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

bool is_power_of_two(std::uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

DigitExpansion digits_base_p(std::uint64_t m, std::uint64_t p) {
  require_prime(p);
  DigitExpansion e;
  e.base = p;
  if (m == 0) {
    e.digits.push_back(0);
    return e;
  }
  while (m > 0) {
    e.digits.push_back(static_cast<std::uint32_t>(m % p));
    m /= p;
  }
  return e;
}

std::uint64_t lucas_residue(std::uint64_t m, std::uint64_t n, std::uint64_t p) {
  require_prime(p);
  const DigitExpansion dm = digits_base_p(m, p);
  const DigitExpansion dn = digits_base_p(n, p);
  const std::size_t len = std::max(dm.digits.size(), dn.digits.size());
  std::uint64_t r = 1 % p;
  for (std::size_t i = 0; i < len && r != 0; ++i) {
    const std::uint64_t a = i < dm.digits.size() ? dm.digits[i] : 0;
    const std::uint64_t b = i < dn.digits.size() ? dn.digits[i] : 0;
    r = mul_mod(r, small_binom_mod(a, b, p), p);
  }
  return r;
}

BigNat binom_exact(std::uint64_t m, std::uint64_t n) {
  if (n > m) return 0;
  n = std::min(n, m - n);
  BigNat r = 1;
  for (std::uint64_t i = 1; i <= n; ++i) {
    r *= (m - n + i);
    r /= i;  // exact: C(m-n+i, i) is an integer
  }
  return r;
}

ParityCertificate odd_graph_order_parity(std::uint64_t k) {
  if (k < 1) throw std::domain_error("odd_graph_order_parity requires k >= 1");
  ParityCertificate cert;
  cert.k = k;
  cert.expansion_k = digits_base_p(k, 2);
  const auto& d = cert.expansion_k.digits;
  std::optional<std::size_t> largest_zero;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) largest_zero = i;
  }
  if (!largest_zero) {
    cert.verdict = Parity::Odd;  // all digits 1: k = 2^t - 1
  } else {
    cert.verdict = Parity::Even;
    cert.zero_index = largest_zero;
  }
  return cert;
}

bool is_multiple_of_4(std::uint64_t k) {
  if (k % 2 != 0 || k <= 4) {
    throw std::domain_error("is_multiple_of_4 requires even k > 4");
  }
  return odd_graph_order_parity(k - 1).verdict == Parity::Even;
}

}  // namespace kneser
