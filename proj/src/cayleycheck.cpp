#include "kneser/cayleycheck.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "kneser/errors.hpp"
#include "kneser/witness.hpp"

namespace kneser {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void require_theorem_hypotheses(const KneserParams& params) {
  validate(params.n, params.k);
  const bool n_odd = params.n % 2 == 1;
  if (!n_odd && params.k % 2 != 0) {
    throw std::domain_error("fixed-vertex sweep requires n odd, or n and k both even");
  }
}

}  // namespace

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json failures_json = nlohmann::json::array();
  for (const auto& [perm, reason] : failures) {
    failures_json.push_back({{"involution", perm}, {"reason", reason}});
  }
  nlohmann::json j{
      {"n", params.n},
      {"k", params.k},
      {"mode", mode == SweepMode::Exhaustive ? "exhaustive" : "sampled"},
      {"involutions_checked", involutions_checked},
      {"failures", failures_json},
      {"verified", verified()},
      {"elapsed_seconds", elapsed_seconds},
  };
  if (mode == SweepMode::Sampled) j["seed"] = seed;
  return j;
}

VerificationReport verify_involutions_fix(const KneserParams& params, SweepMode mode,
                                          std::optional<SampledConfig> sampled) {
  require_theorem_hypotheses(params);
  VerificationReport report;
  report.params = params;
  report.mode = mode;
  const auto start = Clock::now();

  auto check = [&](const Permutation& theta) {
    ++report.involutions_checked;
    try {
      const InvolutionShape shape = involution_shape(theta);
      const KSubset v = fixed_vertex(shape, params);
      if (induced_map(theta, v) != v) {
        report.failures.emplace_back(cycle_decomposition(theta).to_string(),
                                     "returned vertex not fixed");
      }
    } catch (const std::exception& e) {
      report.failures.emplace_back(cycle_decomposition(theta).to_string(), e.what());
    }
  };

  if (mode == SweepMode::Exhaustive) {
    if (params.n > kExhaustiveSweepBound) {
      throw resource_error("exhaustive sweep limited to n <= " +
                           std::to_string(kExhaustiveSweepBound) +
                           "; use sampled mode");
    }
    enumerate_involutions(params.n, check, kExhaustiveSweepBound);
  } else {
    if (!sampled || sampled->count == 0) {
      throw std::domain_error("sampled mode requires a seed and a positive count");
    }
    report.seed = sampled->seed;
    std::mt19937_64 rng(sampled->seed);
    for (std::uint64_t i = 0; i < sampled->count; ++i) {
      check(random_involution(params.n, rng));
    }
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

nlohmann::json SubgroupSearchResult::to_json() const {
  std::string outcome_str;
  switch (outcome) {
    case SearchOutcome::NoRegularSubgroup: outcome_str = "NoRegularSubgroup"; break;
    case SearchOutcome::Found: outcome_str = "Found"; break;
    case SearchOutcome::Skipped: outcome_str = "Skipped"; break;
  }
  nlohmann::json j{
      {"n", params.n},
      {"k", params.k},
      {"target_order", target_order.str()},
      {"outcome", outcome_str},
      {"subgroups_examined", subgroups_examined},
      {"target_order_subgroups", target_order_subgroups},
      {"elapsed_seconds", elapsed_seconds},
  };
  if (outcome == SearchOutcome::Skipped) j["skip_reason"] = skip_reason;
  if (outcome == SearchOutcome::Found) j["generators"] = generators;
  return j;
}

namespace {

// Dense model of Sym([n]) for small n: element list in lexicographic order,
// multiplication table, and the induced action on k-subsets.
struct SmallSymmetricGroup {
  std::uint32_t n = 0;
  std::vector<std::vector<std::uint8_t>> elements;  // images, 0-based values
  std::vector<std::uint16_t> mul;                   // g*g table
  std::uint16_t identity = 0;
  std::vector<std::vector<std::uint16_t>> subset_action;  // [element][subset]
  std::size_t subset_count = 0;

  std::size_t size() const { return elements.size(); }
  std::uint16_t product(std::uint16_t a, std::uint16_t b) const {
    return mul[a * size() + b];
  }

  std::uint16_t index_of(const std::vector<std::uint8_t>& images) const {
    const auto it = std::lower_bound(elements.begin(), elements.end(), images);
    return static_cast<std::uint16_t>(it - elements.begin());
  }

  Permutation to_permutation(std::uint16_t e) const {
    std::vector<std::uint32_t> images(n);
    for (std::uint32_t i = 0; i < n; ++i) images[i] = elements[e][i] + 1;
    return Permutation::from_images(std::move(images));
  }
};

SmallSymmetricGroup build_group(const KneserParams& params) {
  SmallSymmetricGroup g;
  g.n = params.n;
  std::vector<std::uint8_t> images(params.n);
  std::iota(images.begin(), images.end(), std::uint8_t{0});
  do {
    g.elements.push_back(images);
  } while (std::next_permutation(images.begin(), images.end()));

  const std::size_t size = g.elements.size();
  g.mul.resize(size * size);
  std::vector<std::uint8_t> prod(params.n);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      for (std::uint32_t i = 0; i < params.n; ++i) {
        prod[i] = g.elements[a][g.elements[b][i]];  // right factor acts first
      }
      g.mul[a * size + b] = g.index_of(prod);
    }
  }
  std::vector<std::uint8_t> id(params.n);
  std::iota(id.begin(), id.end(), std::uint8_t{0});
  g.identity = g.index_of(id);

  // k-subset action
  std::vector<std::uint64_t> subsets;
  for (std::optional<KSubset> s = KSubset::first(params.n, params.k); s; s = s->next()) {
    subsets.push_back(s->mask());
  }
  g.subset_count = subsets.size();
  auto subset_index = [&](std::uint64_t mask) {
    return static_cast<std::uint16_t>(
        std::lower_bound(subsets.begin(), subsets.end(), mask) - subsets.begin());
  };
  g.subset_action.resize(size);
  for (std::size_t e = 0; e < size; ++e) {
    g.subset_action[e].resize(subsets.size());
    for (std::size_t s = 0; s < subsets.size(); ++s) {
      std::uint64_t image = 0;
      for (std::uint32_t i = 0; i < params.n; ++i) {
        if ((subsets[s] >> i) & 1u) image |= std::uint64_t{1} << g.elements[e][i];
      }
      g.subset_action[e][s] = subset_index(image);
    }
  }
  return g;
}

// Closure of the given elements under the group product. Returns an empty
// vector when the closure grows past `cap`.
std::vector<std::uint16_t> closure(const SmallSymmetricGroup& g,
                                   std::vector<std::uint16_t> gens,
                                   std::uint64_t cap) {
  std::vector<char> member(g.size(), 0);
  std::vector<std::uint16_t> elems;
  std::deque<std::uint16_t> work;
  auto add = [&](std::uint16_t e) {
    if (!member[e]) {
      member[e] = 1;
      elems.push_back(e);
      work.push_back(e);
    }
  };
  add(g.identity);
  for (std::uint16_t e : gens) add(e);
  while (!work.empty()) {
    if (elems.size() > cap) return {};
    const std::uint16_t x = work.front();
    work.pop_front();
    for (std::size_t i = 0; i < elems.size(); ++i) {
      const std::uint16_t y = elems[i];
      add(g.product(x, y));
      add(g.product(y, x));
      if (elems.size() > cap) return {};
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

bool acts_regularly(const SmallSymmetricGroup& g, const std::vector<std::uint16_t>& sub) {
  if (sub.size() != g.subset_count) return false;
  // semiregular: no non-identity element fixes a subset
  for (std::uint16_t e : sub) {
    if (e == g.identity) continue;
    for (std::size_t s = 0; s < g.subset_count; ++s) {
      if (g.subset_action[e][s] == s) return false;
    }
  }
  // transitive: orbit of subset 0 covers everything
  std::set<std::uint16_t> orbit;
  for (std::uint16_t e : sub) orbit.insert(g.subset_action[e][0]);
  return orbit.size() == g.subset_count;
}

bool contains_involution(const SmallSymmetricGroup& g,
                         const std::vector<std::uint16_t>& sub) {
  for (std::uint16_t e : sub) {
    if (e != g.identity && g.product(e, e) == g.identity) return true;
  }
  return false;
}

}  // namespace

SubgroupSearchResult search_regular_subgroup(const KneserParams& params,
                                             std::uint32_t degree_budget) {
  validate(params.n, params.k);
  SubgroupSearchResult result;
  result.params = params;
  result.target_order = vertex_count(params);
  const auto start = Clock::now();

  BigNat group_order = 1;
  for (std::uint32_t i = 2; i <= params.n; ++i) group_order *= i;
  if (result.target_order > group_order) {
    // no subgroup can exceed the group order
    result.outcome = SearchOutcome::NoRegularSubgroup;
    result.elapsed_seconds = seconds_since(start);
    return result;
  }
  if (params.n > degree_budget) {
    result.outcome = SearchOutcome::Skipped;
    result.skip_reason = "degree " + std::to_string(params.n) + " exceeds the budget " +
                         std::to_string(degree_budget);
    result.elapsed_seconds = seconds_since(start);
    return result;
  }
  if (result.target_order > materialize_limit()) {
    result.outcome = SearchOutcome::Skipped;
    result.skip_reason = "C(n,k) exceeds the materialization limit";
    result.elapsed_seconds = seconds_since(start);
    return result;
  }

  const SmallSymmetricGroup g = build_group(params);
  const std::uint64_t target = result.target_order.convert_to<std::uint64_t>();

  // Every subgroup of an order-`target` group has order dividing `target`
  // (Lagrange), so the lattice walk below the target is exhaustive: each
  // order-`target` subgroup is reached by adding one generator at a time
  // through its own subgroup chain.
  std::set<std::vector<std::uint16_t>> visited;
  std::map<std::vector<std::uint16_t>, std::vector<std::uint16_t>> generating_sets;
  std::deque<std::vector<std::uint16_t>> frontier;
  std::vector<std::vector<std::uint16_t>> hits;

  const std::vector<std::uint16_t> trivial{g.identity};
  visited.insert(trivial);
  generating_sets[trivial] = {};
  frontier.push_back(trivial);

  while (!frontier.empty()) {
    const std::vector<std::uint16_t> sub = std::move(frontier.front());
    frontier.pop_front();
    std::vector<char> member(g.size(), 0);
    for (std::uint16_t e : sub) member[e] = 1;
    for (std::uint16_t cand = 0; cand < g.size(); ++cand) {
      if (member[cand]) continue;
      std::vector<std::uint16_t> gens = generating_sets[sub];
      gens.push_back(cand);
      const std::vector<std::uint16_t> ext = closure(g, gens, target);
      if (ext.empty()) continue;  // grew past the target
      if (target % ext.size() != 0) continue;
      if (!visited.insert(ext).second) continue;
      generating_sets[ext] = gens;
      if (ext.size() % 2 == 0 && !contains_involution(g, ext)) {
        throw invariant_error("even-order subgroup without an involution");
      }
      if (ext.size() == target) {
        hits.push_back(ext);
      } else {
        frontier.push_back(ext);
      }
    }
  }

  result.subgroups_examined = visited.size();
  result.target_order_subgroups = hits.size();
  for (const auto& sub : hits) {
    if (!acts_regularly(g, sub)) continue;
    // independent re-verification of the candidate before reporting
    const std::vector<std::uint16_t> regen = closure(g, generating_sets[sub], target);
    if (regen != sub || regen.size() != target || !acts_regularly(g, regen)) {
      throw invariant_error("regular-subgroup candidate failed re-verification");
    }
    result.outcome = SearchOutcome::Found;
    for (std::uint16_t e : generating_sets[sub]) {
      result.generators.push_back(cycle_decomposition(g.to_permutation(e)).to_string());
    }
    result.elapsed_seconds = seconds_since(start);
    return result;
  }
  result.outcome = SearchOutcome::NoRegularSubgroup;
  result.elapsed_seconds = seconds_since(start);
  return result;
}

}  // namespace kneser
