#include "kneser_capi.h"

#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "kneser/cayleycheck.hpp"
#include "kneser/errors.hpp"
#include "kneser/kneser.hpp"
#include "kneser/linegraph.hpp"
#include "kneser/numth.hpp"
#include "kneser/perm.hpp"
#include "kneser/witness.hpp"

struct kn_perm {
  kneser::Permutation value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
kn_status guarded(Fn&& fn) {
  try {
    fn();
    return KN_OK;
  } catch (const kneser::parse_error& e) {
    g_last_error = e.what();
    return KN_ERR_PARSE;
  } catch (const kneser::resource_error& e) {
    g_last_error = e.what();
    return KN_ERR_RESOURCE;
  } catch (const kneser::invariant_error& e) {
    g_last_error = e.what();
    return KN_ERR_INVARIANT;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return KN_ERR_DOMAIN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return KN_ERR_DOMAIN;
  }
}

kn_status require(bool ok, const char* what) {
  if (!ok) {
    g_last_error = what;
    return KN_ERR_ARG;
  }
  return KN_OK;
}

}  // namespace

extern "C" {

const char* kn_last_error(void) { return g_last_error.c_str(); }

void kn_string_free(char* s) { delete[] s; }

kn_status kn_lucas_residue(uint64_t m, uint64_t n, uint64_t p, uint64_t* out) {
  if (kn_status s = require(out != nullptr, "out is null")) return s;
  return guarded([&] { *out = kneser::lucas_residue(m, n, p); });
}

kn_status kn_binom_exact(uint64_t m, uint64_t n, char** out_decimal) {
  if (kn_status s = require(out_decimal != nullptr, "out_decimal is null")) return s;
  return guarded([&] { *out_decimal = dup_string(kneser::binom_exact(m, n).str()); });
}

kn_status kn_odd_order_parity(uint64_t k, char** out_json) {
  if (kn_status s = require(out_json != nullptr, "out_json is null")) return s;
  return guarded([&] {
    const kneser::ParityCertificate cert = kneser::odd_graph_order_parity(k);
    nlohmann::json j{
        {"k", cert.k},
        {"binary_digits", cert.expansion_k.digits},
        {"verdict", cert.verdict == kneser::Parity::Even ? "Even" : "Odd"},
    };
    if (cert.zero_index) j["zero_index"] = *cert.zero_index;
    *out_json = dup_string(j.dump());
  });
}

kn_status kn_multiple_of_4(uint64_t k, int* out) {
  if (kn_status s = require(out != nullptr, "out is null")) return s;
  return guarded([&] { *out = kneser::is_multiple_of_4(k) ? 1 : 0; });
}

kn_status kn_perm_parse(const char* cycles, uint32_t degree, kn_perm** out) {
  if (kn_status s = require(cycles != nullptr && out != nullptr, "null argument"))
    return s;
  return guarded([&] {
    *out = new kn_perm{kneser::Permutation::parse_cycles(cycles, degree)};
  });
}

void kn_perm_free(kn_perm* p) { delete p; }

kn_status kn_perm_order(const kn_perm* p, uint64_t* out) {
  if (kn_status s = require(p != nullptr && out != nullptr, "null argument")) return s;
  return guarded([&] { *out = kneser::order(p->value); });
}

kn_status kn_perm_cycles(const kn_perm* p, char** out_text) {
  if (kn_status s = require(p != nullptr && out_text != nullptr, "null argument"))
    return s;
  return guarded([&] {
    *out_text = dup_string(kneser::cycle_decomposition(p->value).to_string());
  });
}

kn_status kn_fixed_vertex(const kn_perm* p, uint32_t n, uint32_t k, char** out_subset) {
  if (kn_status s = require(p != nullptr && out_subset != nullptr, "null argument"))
    return s;
  return guarded([&] {
    const kneser::KneserParams params = kneser::validate(n, k);
    const kneser::InvolutionShape shape = kneser::involution_shape(p->value);
    *out_subset = dup_string(kneser::fixed_vertex(shape, params).to_string());
  });
}

kn_status kn_disjoint_fixed_pair(const kn_perm* p, uint32_t n, uint32_t k,
                                 char** out_v, char** out_w) {
  if (kn_status s = require(p != nullptr && out_v != nullptr && out_w != nullptr,
                            "null argument"))
    return s;
  return guarded([&] {
    const kneser::KneserParams params = kneser::validate(n, k);
    const kneser::InvolutionShape shape = kneser::involution_shape(p->value);
    const auto [v, w] = kneser::disjoint_fixed_pair(shape, params);
    *out_v = dup_string(v.to_string());
    *out_w = dup_string(w.to_string());
  });
}

kn_status kn_classify_kneser(uint32_t n, uint32_t k, char** out_json) {
  if (kn_status s = require(out_json != nullptr, "out_json is null")) return s;
  return guarded([&] {
    *out_json = dup_string(kneser::classify_kneser(n, k).to_json().dump());
  });
}

kn_status kn_classify_odd(uint64_t k, char** out_json) {
  if (kn_status s = require(out_json != nullptr, "out_json is null")) return s;
  return guarded([&] {
    *out_json = dup_string(kneser::classify_odd(k).to_json().dump());
  });
}

kn_status kn_classify_line_odd(uint64_t k, char** out_json) {
  if (kn_status s = require(out_json != nullptr, "out_json is null")) return s;
  return guarded([&] {
    *out_json = dup_string(kneser::classify_line_odd(k).to_json().dump());
  });
}

kn_status kn_line_order_odd(uint64_t k, char** out_decimal) {
  if (kn_status s = require(out_decimal != nullptr, "out_decimal is null")) return s;
  return guarded([&] { *out_decimal = dup_string(kneser::line_order_odd(k).str()); });
}

kn_status kn_verify_involutions(uint32_t n, uint32_t k, uint64_t sample_count,
                                uint64_t seed, char** out_json) {
  if (kn_status s = require(out_json != nullptr, "out_json is null")) return s;
  return guarded([&] {
    const kneser::KneserParams params = kneser::validate(n, k);
    kneser::VerificationReport report;
    if (sample_count == 0) {
      report = kneser::verify_involutions_fix(params, kneser::SweepMode::Exhaustive);
    } else {
      report = kneser::verify_involutions_fix(params, kneser::SweepMode::Sampled,
                                              kneser::SampledConfig{seed, sample_count});
    }
    *out_json = dup_string(report.to_json().dump());
  });
}

kn_status kn_search_regular_subgroup(uint32_t n, uint32_t k, char** out_json) {
  if (kn_status s = require(out_json != nullptr, "out_json is null")) return s;
  return guarded([&] {
    const kneser::KneserParams params = kneser::validate(n, k);
    *out_json = dup_string(kneser::search_regular_subgroup(params).to_json().dump());
  });
}

}  // extern "C"
