#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include <json.hpp>

#include "kneser/kneser.hpp"
#include "kneser/numth.hpp"
#include "kneser/perm.hpp"

namespace kneser {

enum class Verdict { NonCayley, Unresolved };

std::string to_string(Verdict v);

/// A classification record for one family member. verdict == NonCayley is
/// emitted only when every recorded hypothesis in `evidence` holds; Unresolved
/// never claims Cayley-ness.
struct Classification {
  std::string family;  // "kneser" | "odd" | "line-odd"
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  BigNat order;
  std::string parity_note;  // "even" | "odd" | "0 mod 4" | "2 mod 4" | ...
  Verdict verdict = Verdict::Unresolved;
  std::string theorem_tag;  // "Thm2.1-I" | "Thm2.1-II" | "Thm2.8" | "Thm2.13" | "None"
  nlohmann::json evidence;

  nlohmann::json to_json() const;
  std::string tsv_row() const;
  static std::string tsv_header();
};

/// A k-subset fixed setwise by the involution, built case by case from its
/// transposition/fixed-point structure. Requires n odd, or n and k both even.
/// The result is re-verified against induced_map before being returned.
KSubset fixed_vertex(const InvolutionShape& shape, const KneserParams& params);

/// Two disjoint k-subsets, each fixed setwise by the involution. Requires k
/// even. Deterministic greedy construction; feasibility follows from
/// 2a + b = n > 2k. Both subsets are re-verified before return.
std::pair<KSubset, KSubset> disjoint_fixed_pair(const InvolutionShape& shape,
                                                const KneserParams& params);

Classification classify_kneser(std::uint32_t n, std::uint32_t k);
Classification classify_odd(std::uint64_t k);

}  // namespace kneser
