#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kneser/kneser.hpp"
#include "kneser/numth.hpp"
#include "kneser/perm.hpp"

namespace kneser {

enum class SweepMode { Exhaustive, Sampled };

struct SampledConfig {
  std::uint64_t seed = 0;
  std::uint64_t count = 0;
};

/// Result of sweeping involutions of Sym([n]) and checking that each one
/// fixes a vertex of K(n,k). In exhaustive mode involutions_checked equals
/// the closed-form involution count.
struct VerificationReport {
  KneserParams params;
  SweepMode mode = SweepMode::Exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t involutions_checked = 0;
  std::vector<std::pair<std::string, std::string>> failures;  // (cycles, reason)
  double elapsed_seconds = 0.0;

  bool verified() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

enum class SearchOutcome { NoRegularSubgroup, Found, Skipped };

struct SubgroupSearchResult {
  KneserParams params;
  BigNat target_order;
  SearchOutcome outcome = SearchOutcome::Skipped;
  std::string skip_reason;
  std::vector<std::string> generators;  // cycle notation, when Found
  std::uint64_t subgroups_examined = 0;
  std::uint64_t target_order_subgroups = 0;
  double elapsed_seconds = 0.0;

  nlohmann::json to_json() const;
};

constexpr std::uint32_t kExhaustiveSweepBound = 12;
constexpr std::uint32_t kSubgroupSearchBound = 6;

/// Checks that every involution (all of them in exhaustive mode, or `count`
/// seeded random ones) fixes the vertex built by fixed_vertex. Params must
/// satisfy n odd or (n even and k even); exhaustive mode requires n <= 12.
VerificationReport verify_involutions_fix(const KneserParams& params, SweepMode mode,
                                          std::optional<SampledConfig> sampled = {});

/// Exhaustive search for a subgroup of Sym([n]) of order C(n,k) acting
/// regularly on the k-subsets. Exhausts every subgroup of that order (built
/// by incremental closure over the full subgroup lattice below the target
/// order); any Found result is independently re-verified. Over-budget
/// requests return Skipped, never a false absence.
SubgroupSearchResult search_regular_subgroup(const KneserParams& params,
                                             std::uint32_t degree_budget = kSubgroupSearchBound);

}  // namespace kneser
