// fareylcm: computes lcm{1,...,n} through exact and certified
// trigonometric/Gamma product routes and verifies the identity catalog.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "fareylcm/cyclotomic.hpp"
#include "fareylcm/farey.hpp"
#include "fareylcm/identities.hpp"
#include "fareylcm/numtheory.hpp"
#include "fareylcm/oeis.hpp"

namespace {

using json = nlohmann::json;
using namespace fareylcm;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitExternal = 3;

enum class Format { Text, Json, Csv };

struct GlobalOpts {
  Format format = Format::Text;
  int workers = 1;
  long max_bits = 0;
  std::string cache_dir;
};

std::string default_cache_dir() {
  if (const char* xdg = std::getenv("XDG_CACHE_HOME")) {
    return (std::filesystem::path(xdg) / "fareylcm").string();
  }
  if (const char* home = std::getenv("HOME")) {
    return (std::filesystem::path(home) / ".cache" / "fareylcm").string();
  }
  return ".fareylcm-cache";
}

json report_to_json(const identities::IdentityReport& r) {
  return json{{"n", r.n},
              {"status", std::string(identities::status_name(r.status))},
              {"value", r.value},
              {"rhs", r.rhs},
              {"lhs_midpoint", r.lhs.midpoint},
              {"lhs_radius_exp2", r.lhs.exact ? json(nullptr) : json(r.lhs.radius_exp2)},
              {"bits", r.bits_used},
              {"factors", r.factor_count},
              {"retries", r.retries},
              {"ms", r.elapsed_ms},
              {"detail", r.detail}};
}

void print_report_table(const std::vector<identities::IdentityReport>& reports, Format fmt,
                        const std::string& command, const std::string& eq_name, std::int64_t from,
                        std::int64_t to, bool bench) {
  if (fmt == Format::Json) {
    json doc{{"command", command}, {"equation", eq_name}, {"from", from}, {"to", to}};
    json rows = json::array();
    for (const auto& r : reports) rows.push_back(report_to_json(r));
    doc["reports"] = std::move(rows);
    std::cout << doc.dump(2) << "\n";
    return;
  }
  if (fmt == Format::Csv) {
    if (bench) {
      std::cout << "n,factors,bits,retries,ms\n";
      for (const auto& r : reports) {
        std::cout << r.n << ',' << r.factor_count << ',' << r.bits_used << ',' << r.retries << ','
                  << r.elapsed_ms << "\n";
      }
    } else {
      std::cout << "n,status,value,bits,factors,ms\n";
      for (const auto& r : reports) {
        std::cout << r.n << ',' << identities::status_name(r.status) << ',' << r.value << ','
                  << r.bits_used << ',' << r.factor_count << ',' << r.elapsed_ms << "\n";
      }
    }
    return;
  }
  if (bench) {
    std::cout << "     n   factors      bits  retries        ms\n";
    for (const auto& r : reports) {
      std::printf("%6lld  %8ld  %8ld  %7d  %8.2f\n", static_cast<long long>(r.n), r.factor_count,
                  r.bits_used, r.retries, r.elapsed_ms);
    }
    return;
  }
  std::cout << "     n    status  value                         bits   factors        ms\n";
  for (const auto& r : reports) {
    std::printf("%6lld  %8s  %-28s %5ld  %8ld  %8.2f", static_cast<long long>(r.n),
                std::string(identities::status_name(r.status)).c_str(), r.value.c_str(),
                r.bits_used, r.factor_count, r.elapsed_ms);
    if (!r.detail.empty()) std::printf("  # %s", r.detail.c_str());
    std::printf("\n");
  }
}

int cmd_lcm(std::int64_t n, const std::string& method, long bits_override, const GlobalOpts& g) {
  if (method == "oracle") {
    if (n < 0) {
      std::cerr << "error: n must be >= 0 for the oracle method\n";
      return kExitUsage;
    }
    BigInt v = numtheory::lcm_upto(n);
    if (g.format == Format::Json) {
      std::cout << json{{"command", "lcm"}, {"n", n}, {"method", method}, {"value", v.get_str()}}.dump(2)
                << "\n";
    } else if (g.format == Format::Csv) {
      std::cout << "n,method,value\n" << n << ",oracle," << v.get_str() << "\n";
    } else {
      std::cout << v.get_str() << "\n";
    }
    return kExitOk;
  }
  if (n < 2) {
    std::cerr << "error: the " << method << " route is defined for n >= 2\n";
    return kExitUsage;
  }
  identities::PrecisionPlan plan;
  if (bits_override > 0) plan.initial_bits = bits_override;
  plan.max_bits = g.max_bits;
  auto rep = method == "sine" ? identities::lcm_via_farey_sine(n, plan)
                              : identities::lcm_via_farey_gamma(n, plan);
  if (g.format == Format::Json) {
    json doc{{"command", "lcm"}, {"n", n}, {"method", method}};
    doc["report"] = report_to_json(rep);
    std::cout << doc.dump(2) << "\n";
  } else if (g.format == Format::Csv) {
    std::cout << "n,method,value,status,bits,factors,ms\n"
              << n << ',' << method << ',' << rep.value << ',' << identities::status_name(rep.status)
              << ',' << rep.bits_used << ',' << rep.factor_count << ',' << rep.elapsed_ms << "\n";
  } else {
    std::cout << rep.value << "\n";
    std::cerr << "bits=" << rep.bits_used << " factors=" << rep.factor_count
              << " status=" << identities::status_name(rep.status) << "\n";
  }
  return rep.status == identities::Status::Verified ? kExitOk : kExitVerifyFailed;
}

int cmd_verify(const std::string& eq_name, std::int64_t from, std::int64_t to, const GlobalOpts& g,
               bool bench) {
  auto eq = identities::parse_equation(eq_name);
  if (!eq) {
    std::cerr << "error: unknown equation id '" << eq_name << "'\n";
    return kExitUsage;
  }
  identities::PrecisionPlan plan;
  plan.max_bits = g.max_bits;
  auto reports = identities::verify_range(*eq, from, to, plan, g.workers);
  print_report_table(reports, g.format, bench ? "bench" : "verify", eq_name, from, to, bench);
  for (const auto& r : reports) {
    if (r.status == identities::Status::Failed) return kExitVerifyFailed;
  }
  return kExitOk;
}

int cmd_farey(std::int64_t n, bool half, const GlobalOpts& g) {
  if (n < 1) {
    std::cerr << "error: order must be >= 1\n";
    return kExitUsage;
  }
  std::vector<farey::Fraction> fractions;
  auto seq = half ? farey::farey_half(n, true) : farey::farey_sequence(n);
  for (farey::Fraction r : seq) fractions.push_back(r);
  if (g.format == Format::Json) {
    json arr = json::array();
    for (const auto& r : fractions) arr.push_back(r.str());
    std::cout << json{{"command", "farey"},
                      {"order", n},
                      {"half", half},
                      {"fractions", std::move(arr)},
                      {"count", fractions.size()}}
                     .dump(2)
              << "\n";
  } else if (g.format == Format::Csv) {
    std::cout << "numerator,denominator\n";
    for (const auto& r : fractions) std::cout << r.num() << ',' << r.den() << "\n";
  } else {
    for (std::size_t i = 0; i < fractions.size(); ++i) {
      std::cout << (i ? " " : "") << fractions[i].str();
    }
    std::cout << "\ncount: " << fractions.size() << "\n";
  }
  return kExitOk;
}

int cmd_cyclo(std::int64_t n, std::optional<std::int64_t> at, const GlobalOpts& g) {
  if (n < 1) {
    std::cerr << "error: n must be >= 1\n";
    return kExitUsage;
  }
  auto poly = cyclotomic::cyclotomic_poly(n);
  if (at) {
    BigInt v = cyclotomic::eval_int(poly, BigInt(static_cast<long>(*at)));
    if (g.format == Format::Json) {
      std::cout << json{{"command", "cyclo"}, {"n", n}, {"at", *at}, {"value", v.get_str()}}.dump(2)
                << "\n";
    } else if (g.format == Format::Csv) {
      std::cout << "n,at,value\n" << n << ',' << *at << ',' << v.get_str() << "\n";
    } else {
      std::cout << v.get_str() << "\n";
    }
    return kExitOk;
  }
  if (g.format == Format::Json) {
    json arr = json::array();
    for (const auto& c : poly.coeffs()) arr.push_back(c.get_str());
    std::cout << json{{"command", "cyclo"}, {"n", n}, {"degree", poly.degree()}, {"coefficients", arr}}
                     .dump(2)
              << "\n";
  } else if (g.format == Format::Csv) {
    std::cout << "index,coefficient\n";
    for (std::int64_t i = 0; i <= poly.degree(); ++i) {
      std::cout << i << ',' << poly.coeff(i).get_str() << "\n";
    }
  } else {
    std::cout << poly.str() << "\n";
  }
  return kExitOk;
}

int cmd_oeis_check(const std::string& id, std::int64_t upto, bool offline, bool refresh,
                   const GlobalOpts& g) {
  if (!oeis::is_supported_sequence(id)) {
    std::cerr << "error: unsupported sequence id '" << id << "' (supported: A003418, A048671)\n";
    return kExitUsage;
  }
  std::string body;
  std::string source;
  if (offline) {
    body = oeis::fixture_text(id);
    source = "bundled";
  } else {
    try {
      auto fetched = oeis::fetch_bfile(id, oeis::default_base_url(), g.cache_dir, refresh);
      source = fetched.from_cache ? "cache" : "fetch";
      body = std::move(fetched.body);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitExternal;
    }
  }
  oeis::BFile bfile;
  try {
    bfile = oeis::parse_bfile(body, id);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitExternal;
  }
  auto result = oeis::check_sequence(bfile, upto);
  if (g.format == Format::Json) {
    json mism = json::array();
    for (const auto& m : result.mismatches) {
      mism.push_back({{"index", m.index},
                      {"expected", m.expected.get_str()},
                      {"found", m.found.get_str()}});
    }
    std::cout << json{{"command", "oeis-check"},
                      {"sequence", id},
                      {"source", source},
                      {"checked", result.checked},
                      {"mismatches", std::move(mism)}}
                     .dump(2)
              << "\n";
  } else if (g.format == Format::Csv) {
    std::cout << "index,expected,found\n";
    for (const auto& m : result.mismatches) {
      std::cout << m.index << ',' << m.expected.get_str() << ',' << m.found.get_str() << "\n";
    }
  } else {
    std::cout << id << ": checked " << result.checked << " terms (" << source << "), "
              << result.mismatches.size() << " mismatches\n";
    for (const auto& m : result.mismatches) {
      std::cout << "  index " << m.index << ": expected " << m.expected.get_str() << ", b-file has "
                << m.found.get_str() << "\n";
    }
  }
  return result.mismatches.empty() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified lcm{1..n} products over Farey-sampled sines and Gamma values"};
  app.require_subcommand(1);

  GlobalOpts g;
  g.cache_dir = default_cache_dir();
  std::map<std::string, Format> format_map{
      {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
  app.add_option("--format", g.format, "output format")
      ->transform(CLI::CheckedTransformer(format_map, CLI::ignore_case));
  app.add_option("--workers", g.workers, "worker threads for verify/bench")->check(CLI::Range(1, 256));
  app.add_option("--max-bits", g.max_bits, "hard precision cap (0 = adaptive)");
  app.add_option("--cache-dir", g.cache_dir, "b-file cache directory");

  auto* lcm_cmd = app.add_subcommand("lcm", "compute lcm{1..n}");
  std::int64_t lcm_n = 0;
  std::string method = "oracle";
  long bits_override = 0;
  lcm_cmd->add_option("n", lcm_n, "upper bound")->required();
  lcm_cmd->add_option("--method", method, "oracle | sine | gamma")
      ->check(CLI::IsMember({"oracle", "sine", "gamma"}));
  lcm_cmd->add_option("--bits", bits_override, "initial working precision override");

  auto* verify_cmd = app.add_subcommand("verify", "verify an identity over a range of n");
  std::string eq_name;
  std::int64_t from = 0, to = 0;
  verify_cmd->add_option("equation", eq_name, "equation id (E1..E14, E12F, PHI_M1, GCI, GUT)")
      ->required();
  verify_cmd->add_option("--from", from, "first n")->required();
  verify_cmd->add_option("--to", to, "last n")->required();

  auto* farey_cmd = app.add_subcommand("farey", "list the Farey sequence F(n)");
  std::int64_t farey_n = 0;
  bool half = false;
  farey_cmd->add_option("n", farey_n, "order")->required();
  farey_cmd->add_flag("--half", half, "restrict to (0, 1/2]");

  auto* cyclo_cmd = app.add_subcommand("cyclo", "cyclotomic polynomial coefficients");
  std::int64_t cyclo_n = 0;
  std::int64_t at_value = 0;
  cyclo_cmd->add_option("n", cyclo_n, "index")->required();
  auto* at_opt = cyclo_cmd->add_option("--at", at_value, "evaluate at this integer");

  auto* oeis_cmd = app.add_subcommand("oeis-check", "cross-check a sequence against its b-file");
  std::string seq_id;
  std::int64_t upto = 200;
  bool offline = false, refresh = false;
  oeis_cmd->add_option("sequence", seq_id, "A003418 or A048671")->required();
  oeis_cmd->add_option("--upto", upto, "check indices up to this bound");
  oeis_cmd->add_flag("--offline", offline, "use the bundled fixture, no network");
  oeis_cmd->add_flag("--refresh", refresh, "bypass and rewrite the cache");

  auto* bench_cmd = app.add_subcommand("bench", "timing and precision table for an identity");
  std::string bench_eq;
  std::int64_t bench_from = 0, bench_to = 0;
  bench_cmd->add_option("--eq", bench_eq, "equation id")->required();
  bench_cmd->add_option("--from", bench_from, "first n")->required();
  bench_cmd->add_option("--to", bench_to, "last n")->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();  // global flags after subcommand

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (lcm_cmd->parsed()) return cmd_lcm(lcm_n, method, bits_override, g);
    if (verify_cmd->parsed()) return cmd_verify(eq_name, from, to, g, /*bench=*/false);
    if (farey_cmd->parsed()) return cmd_farey(farey_n, half, g);
    if (cyclo_cmd->parsed()) {
      return cmd_cyclo(cyclo_n, at_opt->count() ? std::optional(at_value) : std::nullopt, g);
    }
    if (oeis_cmd->parsed()) return cmd_oeis_check(seq_id, upto, offline, refresh, g);
    if (bench_cmd->parsed()) return cmd_verify(bench_eq, bench_from, bench_to, g, /*bench=*/true);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitExternal;
  }
  return kExitUsage;
}
