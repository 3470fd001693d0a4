#include "kneser/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "kneser/errors.hpp"

namespace kneser {

Permutation::Permutation(std::uint32_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 1u);
}

Permutation Permutation::from_images(std::vector<std::uint32_t> images) {
  const std::uint32_t n = static_cast<std::uint32_t>(images.size());
  std::vector<bool> seen(n, false);
  for (std::uint32_t img : images) {
    if (img < 1 || img > n || seen[img - 1]) {
      throw std::domain_error("image sequence is not a bijection of [n]");
    }
    seen[img - 1] = true;
  }
  Permutation p(n);
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::parse_cycles(std::string_view text, std::uint32_t degree) {
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw parse_error("expected '(' in cycle notation");
    ++i;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw parse_error("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw parse_error("expected point or ')' in cycle");
      }
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > degree) throw parse_error("point " + std::to_string(v) + " exceeds degree");
        ++i;
      }
      if (v == 0) throw parse_error("points are 1-based");
      if (used[v - 1]) throw parse_error("point " + std::to_string(v) + " repeated");
      used[v - 1] = true;
      cycle.push_back(static_cast<std::uint32_t>(v));
    }
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      p.images_[cycle[j] - 1] = cycle[(j + 1) % cycle.size()];
    }
    skip_ws();
  }
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i) {
    inv[images_[i] - 1] = i + 1;
  }
  Permutation p(degree());
  p.images_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (std::uint32_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i + 1) return false;
  }
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw std::domain_error("compose: degree mismatch");
  }
  std::vector<std::uint32_t> images(p.degree());
  for (std::uint32_t i = 1; i <= p.degree(); ++i) {
    images[i - 1] = p.apply(q.apply(i));
  }
  return Permutation::from_images(std::move(images));
}

CycleDecomposition cycle_decomposition(const Permutation& p) {
  CycleDecomposition d;
  d.degree = p.degree();
  std::vector<bool> seen(p.degree(), false);
  for (std::uint32_t start = 1; start <= p.degree(); ++start) {
    if (seen[start - 1]) continue;
    std::vector<std::uint32_t> cycle;
    std::uint32_t x = start;
    do {
      seen[x - 1] = true;
      cycle.push_back(x);
      x = p.apply(x);
    } while (x != start);
    d.cycles.push_back(std::move(cycle));
  }
  return d;
}

std::string CycleDecomposition::to_string() const {
  std::string s;
  for (const auto& cycle : cycles) {
    if (cycle.size() < 2) continue;
    s += '(';
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      if (j) s += ' ';
      s += std::to_string(cycle[j]);
    }
    s += ')';
  }
  return s;
}

std::uint64_t order(const Permutation& p) {
  std::uint64_t ord = 1;
  for (const auto& cycle : cycle_decomposition(p).cycles) {
    ord = std::lcm(ord, static_cast<std::uint64_t>(cycle.size()));
  }
  return ord;
}

InvolutionShape involution_shape(const Permutation& p) {
  if (order(p) != 2) {
    throw std::domain_error("involution_shape: permutation is not of order 2");
  }
  InvolutionShape shape;
  shape.degree = p.degree();
  for (std::uint32_t i = 1; i <= p.degree(); ++i) {
    const std::uint32_t img = p.apply(i);
    if (img == i) {
      shape.fixed_points.push_back(i);
    } else if (i < img) {
      shape.transpositions.emplace_back(i, img);
    }
  }
  return shape;
}

Permutation to_permutation(const InvolutionShape& shape) {
  Permutation p(shape.degree);
  std::vector<std::uint32_t> images = p.images();
  for (const auto& [x, y] : shape.transpositions) {
    images[x - 1] = y;
    images[y - 1] = x;
  }
  return Permutation::from_images(std::move(images));
}

namespace {

void enumerate_involutions_rec(std::vector<std::uint32_t>& images,
                               std::uint32_t next, bool moved,
                               const std::function<void(const Permutation&)>& visit) {
  const std::uint32_t n = static_cast<std::uint32_t>(images.size());
  std::uint32_t first = 0;
  for (std::uint32_t i = next; i <= n; ++i) {
    if (images[i - 1] == 0) {
      first = i;
      break;
    }
  }
  if (first == 0) {
    if (moved) {
      std::vector<std::uint32_t> imgs(images);
      visit(Permutation::from_images(std::move(imgs)));
    }
    return;
  }
  // first stays fixed
  images[first - 1] = first;
  enumerate_involutions_rec(images, first + 1, moved, visit);
  images[first - 1] = 0;
  // or pairs with some larger unassigned point
  for (std::uint32_t j = first + 1; j <= n; ++j) {
    if (images[j - 1] != 0) continue;
    images[first - 1] = j;
    images[j - 1] = first;
    enumerate_involutions_rec(images, first + 1, true, visit);
    images[first - 1] = 0;
    images[j - 1] = 0;
  }
}

}  // namespace

void enumerate_involutions(std::uint32_t n,
                           const std::function<void(const Permutation&)>& visit,
                           std::uint32_t bound) {
  if (n > bound) {
    throw resource_error("enumerate_involutions: degree " + std::to_string(n) +
                         " exceeds bound " + std::to_string(bound));
  }
  std::vector<std::uint32_t> images(n, 0);
  enumerate_involutions_rec(images, 1, false, visit);
}

std::uint64_t involution_count(std::uint32_t n) {
  // T(m) counts involutions including the identity: T(m) = T(m-1) + (m-1) T(m-2).
  std::uint64_t t0 = 1, t1 = 1;
  for (std::uint32_t m = 2; m <= n; ++m) {
    const std::uint64_t t2 = t1 + static_cast<std::uint64_t>(m - 1) * t0;
    t0 = t1;
    t1 = t2;
  }
  return t1 - 1;
}

Permutation random_involution(std::uint32_t n, std::mt19937_64& rng) {
  if (n < 2) throw std::domain_error("random_involution requires n >= 2");
  // T(m) = T(m-1) + (m-1) T(m-2); point m is fixed with probability T(m-1)/T(m).
  std::vector<double> t(n + 1);
  t[0] = 1.0;
  t[1] = 1.0;
  for (std::uint32_t m = 2; m <= n; ++m) t[m] = t[m - 1] + (m - 1) * t[m - 2];
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (;;) {
    std::vector<std::uint32_t> images(n, 0);
    std::vector<std::uint32_t> unassigned(n);
    std::iota(unassigned.begin(), unassigned.end(), 1u);
    bool moved = false;
    while (!unassigned.empty()) {
      const std::uint32_t m = static_cast<std::uint32_t>(unassigned.size());
      const std::uint32_t point = unassigned.back();
      unassigned.pop_back();
      if (m == 1 || unit(rng) < t[m - 1] / t[m]) {
        images[point - 1] = point;
      } else {
        std::uniform_int_distribution<std::size_t> pick(0, unassigned.size() - 1);
        const std::size_t idx = pick(rng);
        const std::uint32_t partner = unassigned[idx];
        unassigned.erase(unassigned.begin() + static_cast<std::ptrdiff_t>(idx));
        images[point - 1] = partner;
        images[partner - 1] = point;
        moved = true;
      }
    }
    if (moved) return Permutation::from_images(std::move(images));
  }
}

}  // namespace kneser
