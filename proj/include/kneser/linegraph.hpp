#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kneser/kneser.hpp"
#include "kneser/witness.hpp"

namespace kneser {

/// A vertex of the line graph: an unordered pair of disjoint k-subsets,
/// stored with the lexicographically smaller bitmask first.
class EdgePair {
 public:
  /// Canonicalizes; throws std::domain_error unless u, v are disjoint
  /// subsets with the same parameters.
  EdgePair(KSubset u, KSubset v);

  const KSubset& first() const { return u_; }
  const KSubset& second() const { return v_; }

  /// "{{a,b},{c,d}}" with canonical ordering.
  std::string to_string() const;

  friend bool operator==(const EdgePair&, const EdgePair&) = default;
  friend bool operator<(const EdgePair& a, const EdgePair& b) {
    return a.u_ < b.u_ || (a.u_ == b.u_ && a.v_ < b.v_);
  }

 private:
  KSubset u_, v_;
};

/// True iff the two edges share exactly one endpoint subset.
/// Throws std::domain_error when e1 == e2.
bool line_adjacent(const EdgePair& e1, const EdgePair& e2);

/// The lifted automorphism: endpointwise induced_map, re-canonicalized.
EdgePair lift(const Permutation& theta, const EdgePair& e);

/// Order of L(O_{k+1}): (k+1) C(2k+1, k) / 2, exact.
BigNat line_order_odd(std::uint64_t k);

/// All line-graph vertices of K(n,k), subject to the materialization limit.
std::vector<EdgePair> enumerate_line_vertices(const KneserParams& params);

Classification classify_line_odd(std::uint64_t k);

}  // namespace kneser
