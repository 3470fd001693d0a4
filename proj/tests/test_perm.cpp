#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "kneser/errors.hpp"
#include "kneser/perm.hpp"

using namespace kneser;

namespace {

Permutation random_permutation(std::uint32_t n, std::mt19937_64& rng) {
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 1u);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(std::move(images));
}

}  // namespace

TEST_CASE("parse_cycles") {
  const Permutation p = Permutation::parse_cycles("(1 2)", 5);
  CHECK(p.apply(1) == 2);
  CHECK(p.apply(2) == 1);
  CHECK(p.apply(3) == 3);
  CHECK(Permutation::parse_cycles("", 4).is_identity());
  CHECK(Permutation::parse_cycles("  ", 4).is_identity());

  const Permutation three = Permutation::parse_cycles("(1 2 3)", 5);
  CHECK(order(three) == 3);
  CHECK(compose(three, compose(three, three)).is_identity());
}

TEST_CASE("parse_cycles rejects malformed input") {
  CHECK_THROWS_AS(Permutation::parse_cycles("(1 2)(2 3)", 5), parse_error);
  CHECK_THROWS_AS(Permutation::parse_cycles("(1 6)", 5), parse_error);
  CHECK_THROWS_AS(Permutation::parse_cycles("(1 2", 5), parse_error);
  CHECK_THROWS_AS(Permutation::parse_cycles("1 2)", 5), parse_error);
  CHECK_THROWS_AS(Permutation::parse_cycles("(0 1)", 5), parse_error);
}

TEST_CASE("compose applies the right factor first") {
  const Permutation t12 = Permutation::parse_cycles("(1 2)", 3);
  CHECK(compose(t12, t12).is_identity());
  const Permutation q = Permutation::parse_cycles("(1 3 2)", 3);
  CHECK(compose(Permutation(3), q) == q);

  // (1 2) after (2 3), evaluated pointwise: 1->1->2, 2->3->3, 3->2->1
  const Permutation r = compose(t12, Permutation::parse_cycles("(2 3)", 3));
  CHECK(r.apply(1) == 2);
  CHECK(r.apply(2) == 3);
  CHECK(r.apply(3) == 1);

  CHECK_THROWS_AS(compose(Permutation(3), Permutation(4)), std::domain_error);
}

TEST_CASE("compose with inverse gives the identity") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const Permutation p = random_permutation(8, rng);
    CHECK(compose(p, p.inverse()).is_identity());
    CHECK(compose(p.inverse(), p).is_identity());
  }
}

TEST_CASE("cycle_decomposition canonical form") {
  const CycleDecomposition id3 = cycle_decomposition(Permutation(3));
  CHECK(id3.cycles.size() == 3);
  CHECK(id3.to_string() == "");

  const CycleDecomposition d =
      cycle_decomposition(Permutation::parse_cycles("(1 2)(3 4)", 5));
  REQUIRE(d.cycles.size() == 3);
  CHECK(d.cycles[0] == std::vector<std::uint32_t>{1, 2});
  CHECK(d.cycles[1] == std::vector<std::uint32_t>{3, 4});
  CHECK(d.cycles[2] == std::vector<std::uint32_t>{5});

  const CycleDecomposition e =
      cycle_decomposition(Permutation::parse_cycles("(1 3 2)", 4));
  CHECK(e.cycles[0] == std::vector<std::uint32_t>{1, 3, 2});
  CHECK(e.cycles[1] == std::vector<std::uint32_t>{4});
}

TEST_CASE("cycle_decomposition round-trips") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const Permutation p = random_permutation(9, rng);
    const CycleDecomposition d = cycle_decomposition(p);
    Permutation rebuilt(9);
    for (const auto& cycle : d.cycles) {
      std::vector<std::uint32_t> images = rebuilt.images();
      for (std::size_t j = 0; j < cycle.size(); ++j) {
        images[cycle[j] - 1] = cycle[(j + 1) % cycle.size()];
      }
      rebuilt = Permutation::from_images(std::move(images));
    }
    CHECK(rebuilt == p);
    CHECK(Permutation::parse_cycles(d.to_string(), 9) == p);
  }
}

TEST_CASE("order") {
  CHECK(order(Permutation::parse_cycles("(1 2)(3 4 5)", 5)) == 6);
  CHECK(order(Permutation(6)) == 1);
  CHECK(order(Permutation::parse_cycles("(1 2)(3 4)", 4)) == 2);
}

TEST_CASE("involution_shape") {
  const InvolutionShape s = involution_shape(Permutation::parse_cycles("(1 2)(3 4)", 5));
  CHECK(s.transpositions ==
        std::vector<std::pair<std::uint32_t, std::uint32_t>>{{1, 2}, {3, 4}});
  CHECK(s.fixed_points == std::vector<std::uint32_t>{5});

  const InvolutionShape t = involution_shape(Permutation::parse_cycles("(2 5)", 5));
  CHECK(t.transpositions ==
        std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 5}});
  CHECK(t.fixed_points == std::vector<std::uint32_t>{1, 3, 4});

  CHECK_THROWS_AS(involution_shape(Permutation(5)), std::domain_error);
  CHECK_THROWS_AS(involution_shape(Permutation::parse_cycles("(1 2 3)", 5)),
                  std::domain_error);
}

TEST_CASE("enumerate_involutions counts and structure") {
  const std::uint64_t expected[] = {0, 0, 1, 3, 9, 25, 75, 231, 763};
  for (std::uint32_t n = 2; n <= 8; ++n) {
    std::set<std::vector<std::uint32_t>> seen;
    enumerate_involutions(n, [&](const Permutation& p) {
      CHECK(order(p) == 2);
      const InvolutionShape s = involution_shape(p);
      CHECK(2 * s.transpositions.size() + s.fixed_points.size() == n);
      CHECK(s.transpositions.size() >= 1);
      CHECK(seen.insert(p.images()).second);
    });
    CHECK(seen.size() == expected[n]);
    CHECK(involution_count(n) == expected[n]);
  }
  CHECK_THROWS_AS(enumerate_involutions(13, [](const Permutation&) {}),
                  resource_error);
}

TEST_CASE("to_permutation inverts involution_shape") {
  enumerate_involutions(6, [&](const Permutation& p) {
    CHECK(to_permutation(involution_shape(p)) == p);
  });
}

TEST_CASE("random_involution is a non-identity involution") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    const Permutation p = random_involution(15, rng);
    CHECK(order(p) == 2);
  }
}
