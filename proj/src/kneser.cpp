#include "kneser/kneser.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

#include "kneser/errors.hpp"

namespace kneser {

KneserParams validate(std::uint32_t n, std::uint32_t k) {
  if (n > kMaxGroundSet) {
    throw std::domain_error("n = " + std::to_string(n) + " exceeds the ground-set cap " +
                            std::to_string(kMaxGroundSet));
  }
  if (n <= 4) throw std::domain_error("n > 4 fails (n = " + std::to_string(n) + ")");
  if (k <= 1) throw std::domain_error("k > 1 fails (k = " + std::to_string(k) + ")");
  if (2 * k >= n) {
    throw std::domain_error("k < n/2 fails (n = " + std::to_string(n) +
                            ", k = " + std::to_string(k) + ")");
  }
  return KneserParams{n, k};
}

KSubset::KSubset(std::uint64_t mask, std::uint32_t n, std::uint32_t k)
    : mask_(mask), n_(n), k_(k) {
  if (n == 0 || n > kMaxGroundSet) {
    throw std::domain_error("KSubset: invalid ground-set size");
  }
  if (n < 64 && (mask >> n) != 0) {
    throw std::domain_error("KSubset: bit above position n");
  }
  if (static_cast<std::uint32_t>(std::popcount(mask)) != k) {
    throw std::domain_error("KSubset: popcount does not equal k");
  }
}

KSubset KSubset::of(const std::vector<std::uint32_t>& elements, std::uint32_t n) {
  std::uint64_t mask = 0;
  for (std::uint32_t e : elements) {
    if (e < 1 || e > n) throw std::domain_error("KSubset: element out of range");
    mask |= std::uint64_t{1} << (e - 1);
  }
  return KSubset(mask, n, static_cast<std::uint32_t>(elements.size()));
}

KSubset KSubset::parse(std::string_view text, std::uint32_t n) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '{') throw parse_error("subset must start with '{'");
  ++i;
  std::vector<std::uint32_t> elems;
  skip_ws();
  if (i < text.size() && text[i] == '}') {
    ++i;
  } else {
    for (;;) {
      skip_ws();
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw parse_error("expected element in subset literal");
      }
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > n) throw parse_error("element " + std::to_string(v) + " exceeds n");
        ++i;
      }
      elems.push_back(static_cast<std::uint32_t>(v));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == '}') {
        ++i;
        break;
      }
      throw parse_error("expected ',' or '}' in subset literal");
    }
  }
  skip_ws();
  if (i != text.size()) throw parse_error("trailing characters after subset literal");
  try {
    return KSubset::of(elems, n);
  } catch (const std::domain_error& e) {
    throw parse_error(e.what());
  }
}

KSubset KSubset::first(std::uint32_t n, std::uint32_t k) {
  const std::uint64_t mask = k == 0 ? 0 : (~std::uint64_t{0} >> (64 - k));
  return KSubset(mask, n, k);
}

std::optional<KSubset> KSubset::next() const {
  // Gosper's hack: next mask with the same popcount.
  const std::uint64_t c = mask_ & (~mask_ + 1);
  const std::uint64_t r = mask_ + c;
  if (r == 0) return std::nullopt;
  const std::uint64_t next_mask = (((r ^ mask_) >> 2) / c) | r;
  const std::uint64_t limit = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  if (next_mask > limit) return std::nullopt;
  return KSubset(next_mask, n_, k_);
}

std::vector<std::uint32_t> KSubset::elements() const {
  std::vector<std::uint32_t> out;
  out.reserve(k_);
  for (std::uint32_t i = 1; i <= n_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string KSubset::to_string() const {
  std::string s = "{";
  bool sep = false;
  for (std::uint32_t e : elements()) {
    if (sep) s += ',';
    s += std::to_string(e);
    sep = true;
  }
  s += '}';
  return s;
}

namespace {

void require_same_params(const KSubset& u, const KSubset& v) {
  if (u.n() != v.n() || u.k() != v.k()) {
    throw std::domain_error("subsets have different (n, k) parameters");
  }
}

}  // namespace

bool adjacent(const KSubset& u, const KSubset& v) {
  require_same_params(u, v);
  return (u.mask() & v.mask()) == 0;
}

KSubset induced_map(const Permutation& theta, const KSubset& v) {
  if (theta.degree() != v.n()) {
    throw std::domain_error("induced_map: permutation degree does not match n");
  }
  std::uint64_t mask = 0;
  for (std::uint32_t i = 1; i <= v.n(); ++i) {
    if (v.contains(i)) mask |= std::uint64_t{1} << (theta.apply(i) - 1);
  }
  return KSubset(mask, v.n(), v.k());
}

BigNat vertex_count(const KneserParams& params) {
  return binom_exact(params.n, params.k);
}

BigNat degree_count(const KneserParams& params) {
  return binom_exact(params.n - params.k, params.k);
}

Permutation transitivity_witness(const KSubset& u, const KSubset& v) {
  require_same_params(u, v);
  const std::uint32_t n = u.n();
  std::vector<std::uint32_t> images(n, 0);
  std::vector<std::uint32_t> u_in, v_in, u_out, v_out;
  for (std::uint32_t i = 1; i <= n; ++i) {
    (u.contains(i) ? u_in : u_out).push_back(i);
    (v.contains(i) ? v_in : v_out).push_back(i);
  }
  for (std::size_t i = 0; i < u_in.size(); ++i) images[u_in[i] - 1] = v_in[i];
  for (std::size_t i = 0; i < u_out.size(); ++i) images[u_out[i] - 1] = v_out[i];
  return Permutation::from_images(std::move(images));
}

std::uint64_t materialize_limit() {
  if (const char* env = std::getenv("KNESER_MAX_MATERIALIZE")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 1'000'000;
}

void for_each_subset(const KneserParams& params,
                     const std::function<void(const KSubset&)>& visit) {
  if (vertex_count(params) > materialize_limit()) {
    throw resource_error("C(n,k) exceeds the materialization limit");
  }
  for (std::optional<KSubset> s = KSubset::first(params.n, params.k); s; s = s->next()) {
    visit(*s);
  }
}

}  // namespace kneser
