#include "kneser/linegraph.hpp"

#include <stdexcept>
#include <utility>

#include "kneser/errors.hpp"

namespace kneser {

EdgePair::EdgePair(KSubset u, KSubset v) : u_(std::move(u)), v_(std::move(v)) {
  if (!adjacent(u_, v_)) {
    throw std::domain_error("EdgePair: endpoints are not disjoint");
  }
  if (v_ < u_) std::swap(u_, v_);
}

std::string EdgePair::to_string() const {
  return "{" + u_.to_string() + "," + v_.to_string() + "}";
}

bool line_adjacent(const EdgePair& e1, const EdgePair& e2) {
  if (e1 == e2) throw std::domain_error("line_adjacent: identical edges (no loops)");
  const int shared = int(e1.first() == e2.first()) + int(e1.first() == e2.second()) +
                     int(e1.second() == e2.first()) + int(e1.second() == e2.second());
  return shared == 1;
}

EdgePair lift(const Permutation& theta, const EdgePair& e) {
  return EdgePair(induced_map(theta, e.first()), induced_map(theta, e.second()));
}

BigNat line_order_odd(std::uint64_t k) {
  if (k < 2) throw std::domain_error("line_order_odd requires k >= 2");
  BigNat v = binom_exact(2 * k + 1, k) * (k + 1);
  return v / 2;  // exact: handshake count
}

std::vector<EdgePair> enumerate_line_vertices(const KneserParams& params) {
  std::vector<KSubset> vertices;
  for_each_subset(params, [&](const KSubset& s) { vertices.push_back(s); });
  std::vector<EdgePair> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (adjacent(vertices[i], vertices[j])) {
        edges.emplace_back(vertices[i], vertices[j]);
        if (edges.size() > materialize_limit()) {
          throw resource_error("line graph exceeds the materialization limit");
        }
      }
    }
  }
  return edges;
}

Classification classify_line_odd(std::uint64_t k) {
  if (k < 2) throw std::domain_error("classify_line_odd requires k >= 2");
  Classification c;
  c.family = "line-odd";
  c.n = 2 * k + 1;
  c.k = k;
  c.order = line_order_odd(k);
  const bool k_even = k % 2 == 0;
  const bool in_range = k > 4;
  const bool mult4 = (k_even && in_range) ? is_multiple_of_4(k) : false;
  const BigNat base_mod4 = binom_exact(2 * k + 1, k) % 4;
  c.parity_note = base_mod4.str() + " mod 4";
  c.evidence = nlohmann::json{
      {"k_even", k_even},
      {"k_greater_than_4", in_range},
      {"k_power_of_two", is_power_of_two(k)},
      {"base_order_mod_4", base_mod4.str()},
      {"base_order_multiple_of_4", k_even && in_range ? nlohmann::json(mult4)
                                                      : nlohmann::json(nullptr)},
  };
  if (k_even && in_range && mult4) {
    c.verdict = Verdict::NonCayley;
    c.theorem_tag = "Thm2.13";
  } else {
    c.verdict = Verdict::Unresolved;
    c.theorem_tag = "None";
  }
  return c;
}

}  // namespace kneser
