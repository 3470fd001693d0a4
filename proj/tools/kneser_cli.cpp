// Command-line front end over the shared-library C API.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kneser_capi.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerificationFailure = 2;

struct StringDeleter {
  void operator()(char* s) const { kn_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

[[noreturn]] void fail_usage(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(kExitUsage);
}

void check(kn_status status) {
  if (status != KN_OK) fail_usage(kn_last_error());
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto pos = text.find("..");
  if (pos == std::string::npos) fail_usage("range must be of the form A..B");
  try {
    const std::uint64_t lo = std::stoull(text.substr(0, pos));
    const std::uint64_t hi = std::stoull(text.substr(pos + 2));
    if (lo > hi) fail_usage("empty range " + text);
    return {lo, hi};
  } catch (const std::exception&) {
    fail_usage("range must be of the form A..B");
  }
}

void render_classifications(const std::vector<nlohmann::json>& rows,
                            const std::string& format) {
  if (format == "json") {
    std::cout << nlohmann::json(rows).dump(2) << "\n";
    return;
  }
  std::cout << "family\tn\tk\torder\tparity\tverdict\ttheorem_tag\n";
  for (const auto& row : rows) {
    std::cout << row["family"].get<std::string>() << '\t' << row["n"] << '\t'
              << row["k"] << '\t' << row["order"].get<std::string>() << '\t'
              << row["parity"].get<std::string>() << '\t'
              << row["verdict"].get<std::string>() << '\t'
              << row["theorem_tag"].get<std::string>() << "\n";
  }
}

nlohmann::json classify_one(const std::string& family, std::uint64_t n, std::uint64_t k) {
  CString out;
  char* raw = nullptr;
  if (family == "kneser") {
    check(kn_classify_kneser(static_cast<uint32_t>(n), static_cast<uint32_t>(k), &raw));
  } else if (family == "odd") {
    check(kn_classify_odd(k, &raw));
  } else {
    check(kn_classify_line_odd(k, &raw));
  }
  out.reset(raw);
  return nlohmann::json::parse(out.get());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kneser graph non-Cayley classification and verification"};
  app.require_subcommand(1);
  std::string format = "tsv";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"tsv", "json"}));

  // classify
  auto* classify = app.add_subcommand("classify", "classify a graph family");
  classify->require_subcommand(1);
  std::uint32_t cl_n = 0, cl_k = 0;
  auto* cl_kneser = classify->add_subcommand("kneser", "one Kneser graph K(n,k)");
  cl_kneser->add_option("--n", cl_n, "ground-set size")->required();
  cl_kneser->add_option("--k", cl_k, "subset size")->required();
  std::uint64_t cl_odd_k = 0;
  std::string cl_odd_range, cl_line_range;
  auto* cl_odd = classify->add_subcommand("odd", "odd graphs O_{k+1}");
  auto* cl_odd_k_opt = cl_odd->add_option("--k", cl_odd_k, "single k");
  auto* cl_odd_range_opt = cl_odd->add_option("--k-range", cl_odd_range, "inclusive A..B");
  std::uint64_t cl_line_k = 0;
  auto* cl_line = classify->add_subcommand("line-odd", "line graphs L(O_{k+1})");
  auto* cl_line_k_opt = cl_line->add_option("--k", cl_line_k, "single k");
  auto* cl_line_range_opt =
      cl_line->add_option("--k-range", cl_line_range, "inclusive A..B");

  // witness
  auto* witness = app.add_subcommand("witness", "fixed vertex for an involution");
  std::uint32_t w_n = 0, w_k = 0;
  std::string w_perm;
  bool w_pair = false;
  witness->add_option("--n", w_n, "ground-set size")->required();
  witness->add_option("--k", w_k, "subset size")->required();
  witness->add_option("--perm", w_perm, "involution in cycle notation")->required();
  witness->add_flag("--pair", w_pair, "produce a disjoint fixed pair");

  // verify
  auto* verify = app.add_subcommand("verify", "exhaustive or sampled verification");
  verify->require_subcommand(1);
  std::uint32_t v_n = 0, v_k = 0;
  std::uint64_t v_sample = 0, v_seed = 0;
  auto* v_inv = verify->add_subcommand("involutions", "every involution fixes a vertex");
  v_inv->add_option("--n", v_n, "ground-set size")->required();
  v_inv->add_option("--k", v_k, "subset size")->required();
  v_inv->add_option("--sample", v_sample, "sampled mode: number of involutions");
  v_inv->add_option("--seed", v_seed, "sampled mode: RNG seed");
  std::uint32_t s_n = 0, s_k = 0;
  auto* v_sub = verify->add_subcommand("regular-subgroup",
                                       "exhaustive regular-subgroup search");
  v_sub->add_option("--n", s_n, "ground-set size")->required();
  v_sub->add_option("--k", s_k, "subset size")->required();

  // linegraph-order
  auto* lg = app.add_subcommand("linegraph-order", "order of L(O_{k+1})");
  std::uint64_t lg_k = 0;
  lg->add_option("--k", lg_k, "odd-graph parameter")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (cl_kneser->parsed()) {
    render_classifications({classify_one("kneser", cl_n, cl_k)}, format);
    return kExitOk;
  }
  if (cl_odd->parsed() || cl_line->parsed()) {
    const bool is_odd = cl_odd->parsed();
    const std::string family = is_odd ? "odd" : "line-odd";
    std::uint64_t lo, hi;
    if ((is_odd ? cl_odd_range_opt : cl_line_range_opt)->count() > 0) {
      std::tie(lo, hi) = parse_range(is_odd ? cl_odd_range : cl_line_range);
    } else if ((is_odd ? cl_odd_k_opt : cl_line_k_opt)->count() > 0) {
      lo = hi = is_odd ? cl_odd_k : cl_line_k;
    } else {
      fail_usage("provide --k or --k-range");
    }
    std::vector<nlohmann::json> rows;
    for (std::uint64_t k = lo; k <= hi; ++k) {
      rows.push_back(classify_one(family, 2 * k + 1, k));
    }
    render_classifications(rows, format);
    return kExitOk;
  }

  if (witness->parsed()) {
    kn_perm* perm = nullptr;
    check(kn_perm_parse(w_perm.c_str(), w_n, &perm));
    std::unique_ptr<kn_perm, decltype(&kn_perm_free)> guard(perm, kn_perm_free);
    uint64_t ord = 0;
    check(kn_perm_order(perm, &ord));
    if (ord != 2) fail_usage("permutation has order " + std::to_string(ord) + ", not 2");
    if (w_pair) {
      char *rv = nullptr, *rw = nullptr;
      check(kn_disjoint_fixed_pair(perm, w_n, w_k, &rv, &rw));
      CString v(rv), w(rw);
      if (format == "json") {
        std::cout << nlohmann::json{{"v", v.get()}, {"w", w.get()}, {"verified", true}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << "v = " << v.get() << "\n"
                  << "w = " << w.get() << "\n"
                  << "θ(v) = v, θ(w) = w, v ∩ w = ∅\n";
      }
    } else {
      char* rv = nullptr;
      check(kn_fixed_vertex(perm, w_n, w_k, &rv));
      CString v(rv);
      if (format == "json") {
        std::cout << nlohmann::json{{"v", v.get()}, {"verified", true}}.dump(2) << "\n";
      } else {
        std::cout << "v = " << v.get() << "\n"
                  << "θ(v) = v\n";
      }
    }
    return kExitOk;
  }

  if (v_inv->parsed()) {
    char* raw = nullptr;
    check(kn_verify_involutions(v_n, v_k, v_sample, v_seed, &raw));
    CString out(raw);
    const auto report = nlohmann::json::parse(out.get());
    if (format == "json") {
      std::cout << report.dump(2) << "\n";
    } else {
      std::cout << report["involutions_checked"] << " involutions checked, "
                << report["failures"].size() << " failures ("
                << report["mode"].get<std::string>() << ")\n";
    }
    return report["verified"].get<bool>() ? kExitOk : kExitVerificationFailure;
  }

  if (v_sub->parsed()) {
    char* raw = nullptr;
    check(kn_search_regular_subgroup(s_n, s_k, &raw));
    CString out(raw);
    const auto result = nlohmann::json::parse(out.get());
    const std::string outcome = result["outcome"].get<std::string>();
    if (format == "json") {
      std::cout << result.dump(2) << "\n";
    } else {
      std::cout << outcome << " (target order " << result["target_order"].get<std::string>()
                << ", " << result["subgroups_examined"] << " subgroups examined)\n";
    }
    // a regular subgroup found where the classification says NonCayley would
    // falsify a verification step
    if (outcome == "Found") {
      char* cls_raw = nullptr;
      if (kn_classify_kneser(s_n, s_k, &cls_raw) == KN_OK) {
        CString cls(cls_raw);
        if (nlohmann::json::parse(cls.get())["verdict"] == "NonCayley") {
          return kExitVerificationFailure;
        }
      }
    }
    return kExitOk;
  }

  if (lg->parsed()) {
    char* raw = nullptr;
    check(kn_line_order_odd(lg_k, &raw));
    CString out(raw);
    if (format == "json") {
      std::cout << nlohmann::json{{"k", lg_k}, {"line_order", out.get()}}.dump(2) << "\n";
    } else {
      std::cout << out.get() << "\n";
    }
    return kExitOk;
  }

  return kExitUsage;
}
