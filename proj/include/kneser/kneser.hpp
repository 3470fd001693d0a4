#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kneser/numth.hpp"
#include "kneser/perm.hpp"

namespace kneser {

constexpr std::uint32_t kMaxGroundSet = 64;

/// Parameters of K(n, k) under the standing hypothesis n > 4, 1 < k < n/2.
struct KneserParams {
  std::uint32_t n = 0;
  std::uint32_t k = 0;

  bool odd_graph() const { return n == 2 * k + 1; }
};

/// Throws std::domain_error naming the violated bound.
KneserParams validate(std::uint32_t n, std::uint32_t k);

/// A k-element subset of [n], stored as a bitmask (bit i-1 <-> point i).
class KSubset {
 public:
  KSubset(std::uint64_t mask, std::uint32_t n, std::uint32_t k);

  static KSubset of(const std::vector<std::uint32_t>& elements, std::uint32_t n);

  /// Parses "{a,b,c}" with ascending elements.
  static KSubset parse(std::string_view text, std::uint32_t n);

  /// {1, 2, ..., k}: the lexicographically first k-subset.
  static KSubset first(std::uint32_t n, std::uint32_t k);

  /// Next k-subset in colex bitmask order, or nullopt after the last.
  std::optional<KSubset> next() const;

  std::uint64_t mask() const { return mask_; }
  std::uint32_t n() const { return n_; }
  std::uint32_t k() const { return k_; }

  bool contains(std::uint32_t point) const { return (mask_ >> (point - 1)) & 1u; }
  std::vector<std::uint32_t> elements() const;

  /// Canonical text form "{a,b,c}", ascending.
  std::string to_string() const;

  friend bool operator==(const KSubset&, const KSubset&) = default;
  friend bool operator<(const KSubset& a, const KSubset& b) { return a.mask_ < b.mask_; }

 private:
  std::uint64_t mask_;
  std::uint32_t n_, k_;
};

/// Disjointness adjacency of the Kneser graph.
bool adjacent(const KSubset& u, const KSubset& v);

/// The automorphism induced by theta: elementwise image of the subset.
KSubset induced_map(const Permutation& theta, const KSubset& v);

/// C(n, k).
BigNat vertex_count(const KneserParams& params);

/// C(n-k, k); equals k+1 for odd graphs.
BigNat degree_count(const KneserParams& params);

/// A permutation theta with induced_map(theta, u) = v: sorted u maps to
/// sorted v, sorted complement to sorted complement.
Permutation transitivity_witness(const KSubset& u, const KSubset& v);

/// Materialization cap; KNESER_MAX_MATERIALIZE overrides the default 10^6.
std::uint64_t materialize_limit();

/// Visits every k-subset of [n]. Throws resource_error when C(n,k) exceeds
/// the materialization limit.
void for_each_subset(const KneserParams& params,
                     const std::function<void(const KSubset&)>& visit);

}  // namespace kneser
