#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kneser {

/// A bijection of [n] = {1, ..., n}. Points are 1-based throughout.
class Permutation {
 public:
  /// Identity on [n].
  explicit Permutation(std::uint32_t degree);

  /// images[i-1] = theta(i). Throws std::domain_error if not a bijection.
  static Permutation from_images(std::vector<std::uint32_t> images);

  /// Disjoint cycle notation, e.g. "(1 2)(3 4)". Omitted points are fixed;
  /// the empty (or all-whitespace) string is the identity.
  static Permutation parse_cycles(std::string_view text, std::uint32_t degree);

  std::uint32_t degree() const { return static_cast<std::uint32_t>(images_.size()); }
  std::uint32_t apply(std::uint32_t point) const { return images_[point - 1]; }

  Permutation inverse() const;
  bool is_identity() const;

  const std::vector<std::uint32_t>& images() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// i -> p(q(i)): the right factor acts first.
Permutation compose(const Permutation& p, const Permutation& q);

/// Disjoint cycles covering [n], length-1 cycles included. Canonical form:
/// each cycle starts at its minimum point, cycles sorted by starting point.
struct CycleDecomposition {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::uint32_t degree = 0;

  /// Cycle-notation text, fixed points omitted; "" for the identity.
  std::string to_string() const;
};

CycleDecomposition cycle_decomposition(const Permutation& p);

std::uint64_t order(const Permutation& p);

/// The (a, b) structure of an order-2 permutation: a transpositions
/// (x_r < y_r, sorted by x_r) and b fixed points (ascending), 2a + b = n.
struct InvolutionShape {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> transpositions;
  std::vector<std::uint32_t> fixed_points;
  std::uint32_t degree = 0;
};

/// Throws std::domain_error unless order(p) == 2 (the identity is rejected).
InvolutionShape involution_shape(const Permutation& p);

Permutation to_permutation(const InvolutionShape& shape);

constexpr std::uint32_t kDefaultInvolutionBound = 12;

/// Visits every order-2 element of Sym([n]) exactly once.
/// Throws resource_error when n exceeds the bound.
void enumerate_involutions(std::uint32_t n,
                           const std::function<void(const Permutation&)>& visit,
                           std::uint32_t bound = kDefaultInvolutionBound);

/// Closed-form count of involutions of Sym([n]): sum over a >= 1 of
/// n! / (a! 2^a (n-2a)!).
std::uint64_t involution_count(std::uint32_t n);

/// Uniformly random involution of Sym([n]) (identity excluded).
Permutation random_involution(std::uint32_t n, std::mt19937_64& rng);

}  // namespace kneser
