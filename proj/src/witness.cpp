#include "kneser/witness.hpp"

#include <algorithm>
#include <stdexcept>

#include "kneser/errors.hpp"

namespace kneser {

std::string to_string(Verdict v) {
  return v == Verdict::NonCayley ? "NonCayley" : "Unresolved";
}

nlohmann::json Classification::to_json() const {
  return nlohmann::json{
      {"family", family},
      {"n", n},
      {"k", k},
      {"order", order.str()},
      {"parity", parity_note},
      {"verdict", to_string(verdict)},
      {"theorem_tag", theorem_tag},
      {"evidence", evidence},
  };
}

std::string Classification::tsv_header() {
  return "family\tn\tk\torder\tparity\tverdict\ttheorem_tag";
}

std::string Classification::tsv_row() const {
  return family + '\t' + std::to_string(n) + '\t' + std::to_string(k) + '\t' +
         order.str() + '\t' + parity_note + '\t' + to_string(verdict) + '\t' + theorem_tag;
}

namespace {

void append_pairs(std::vector<std::uint32_t>& elems, const InvolutionShape& shape,
                  std::size_t count) {
  for (std::size_t r = 0; r < count; ++r) {
    elems.push_back(shape.transpositions[r].first);
    elems.push_back(shape.transpositions[r].second);
  }
}

KSubset verified_fixed(const std::vector<std::uint32_t>& elems,
                       const InvolutionShape& shape, const KneserParams& params,
                       const char* what) {
  const KSubset v = KSubset::of(elems, params.n);
  if (v.k() != params.k) {
    throw invariant_error(std::string(what) + ": constructed subset has wrong size");
  }
  if (induced_map(to_permutation(shape), v) != v) {
    throw invariant_error(std::string(what) + ": constructed subset is not fixed");
  }
  return v;
}

}  // namespace

KSubset fixed_vertex(const InvolutionShape& shape, const KneserParams& params) {
  if (shape.degree != params.n) {
    throw std::domain_error("fixed_vertex: shape degree does not match n");
  }
  const std::size_t a = shape.transpositions.size();
  const std::uint32_t k = params.k;
  const bool n_odd = params.n % 2 == 1;
  if (!n_odd && k % 2 != 0) {
    throw std::domain_error("fixed_vertex: n even requires k even");
  }

  std::vector<std::uint32_t> elems;
  if (n_odd) {
    if (2 * a <= k) {
      // all pairs plus t = k - 2a fixed points; t <= b since n > 2k
      append_pairs(elems, shape, a);
      const std::size_t t = k - 2 * a;
      elems.insert(elems.end(), shape.fixed_points.begin(),
                   shape.fixed_points.begin() + static_cast<std::ptrdiff_t>(t));
    } else if (k % 2 == 0) {
      append_pairs(elems, shape, k / 2);
    } else {
      // k = 2c + 1; b is odd, so a fixed point exists
      append_pairs(elems, shape, (k - 1) / 2);
      elems.push_back(shape.fixed_points.front());
    }
  } else {
    const std::size_t e = k / 2;
    if (a < e) {
      append_pairs(elems, shape, a);
      const std::size_t t = k - 2 * a;
      elems.insert(elems.end(), shape.fixed_points.begin(),
                   shape.fixed_points.begin() + static_cast<std::ptrdiff_t>(t));
    } else {
      append_pairs(elems, shape, e);
    }
  }
  return verified_fixed(elems, shape, params, "fixed_vertex");
}

std::pair<KSubset, KSubset> disjoint_fixed_pair(const InvolutionShape& shape,
                                                const KneserParams& params) {
  if (shape.degree != params.n) {
    throw std::domain_error("disjoint_fixed_pair: shape degree does not match n");
  }
  const std::uint32_t k = params.k;
  if (k % 2 != 0) {
    throw std::domain_error("disjoint_fixed_pair requires even k");
  }
  const std::size_t a = shape.transpositions.size();
  const std::size_t b = shape.fixed_points.size();

  std::vector<std::uint32_t> v_elems, w_elems;
  if (2 * a <= k) {
    // v takes every pair plus t fixed points, w the next k fixed points;
    // b - t = n - k > k guarantees supply.
    append_pairs(v_elems, shape, a);
    const std::size_t t = k - 2 * a;
    if (t + k > b) {
      throw invariant_error("disjoint_fixed_pair: not enough fixed points");
    }
    v_elems.insert(v_elems.end(), shape.fixed_points.begin(),
                   shape.fixed_points.begin() + static_cast<std::ptrdiff_t>(t));
    w_elems.insert(w_elems.end(),
                   shape.fixed_points.begin() + static_cast<std::ptrdiff_t>(t),
                   shape.fixed_points.begin() + static_cast<std::ptrdiff_t>(t + k));
  } else {
    // v = first l pairs; w = whole remaining pairs, remainder from fixed points.
    const std::size_t l = k / 2;
    append_pairs(v_elems, shape, l);
    const std::size_t whole = std::min(a - l, l);
    for (std::size_t r = l; r < l + whole; ++r) {
      w_elems.push_back(shape.transpositions[r].first);
      w_elems.push_back(shape.transpositions[r].second);
    }
    const std::size_t rem = k - 2 * whole;  // even
    if (rem > b) {
      throw invariant_error("disjoint_fixed_pair: not enough fixed points");
    }
    w_elems.insert(w_elems.end(), shape.fixed_points.begin(),
                   shape.fixed_points.begin() + static_cast<std::ptrdiff_t>(rem));
  }

  const KSubset v = verified_fixed(v_elems, shape, params, "disjoint_fixed_pair(v)");
  const KSubset w = verified_fixed(w_elems, shape, params, "disjoint_fixed_pair(w)");
  if ((v.mask() & w.mask()) != 0) {
    throw invariant_error("disjoint_fixed_pair: subsets intersect");
  }
  return {v, w};
}

Classification classify_kneser(std::uint32_t n, std::uint32_t k) {
  const KneserParams params = validate(n, k);
  Classification c;
  c.family = "kneser";
  c.n = n;
  c.k = k;
  c.order = vertex_count(params);
  const std::uint64_t mod2 = lucas_residue(n, k, 2);
  const bool order_even = mod2 == 0;
  const bool n_even = n % 2 == 0;
  const bool k_even = k % 2 == 0;
  c.parity_note = order_even ? "even" : "odd";
  c.evidence = nlohmann::json{
      {"order_mod_2", mod2},
      {"n_parity", n_even ? "even" : "odd"},
      {"k_parity", k_even ? "even" : "odd"},
  };
  if (order_even && !n_even) {
    c.verdict = Verdict::NonCayley;
    c.theorem_tag = "Thm2.1-I";
  } else if (order_even && n_even && k_even) {
    c.verdict = Verdict::NonCayley;
    c.theorem_tag = "Thm2.1-II";
  } else {
    c.verdict = Verdict::Unresolved;
    c.theorem_tag = "None";
  }
  return c;
}

Classification classify_odd(std::uint64_t k) {
  if (k < 1) throw std::domain_error("classify_odd requires k >= 1");
  const ParityCertificate cert = odd_graph_order_parity(k);
  Classification c;
  c.family = "odd";
  c.n = 2 * k + 1;
  c.k = k;
  c.order = binom_exact(2 * k + 1, k);
  const bool even = cert.verdict == Parity::Even;
  c.parity_note = even ? "even" : "odd";
  c.evidence = nlohmann::json{
      {"binary_digits_of_k", cert.expansion_k.digits},
      {"even_odd_graph", even},
      // k with odd order are exactly k = 2^t - 1, a density-zero set.
      {"note", "orders are even for all k outside the sparse family k = 2^t - 1"},
  };
  if (cert.zero_index) c.evidence["zero_index"] = *cert.zero_index;
  if (even) {
    c.verdict = Verdict::NonCayley;
    c.theorem_tag = "Thm2.8";
  } else {
    c.verdict = Verdict::Unresolved;
    c.theorem_tag = "None";
  }
  return c;
}

}  // namespace kneser
