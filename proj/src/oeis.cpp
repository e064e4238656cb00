#include "fareylcm/oeis.hpp"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fareylcm::oeis {

namespace detail {
extern const char* const kFixtureA003418;
extern const char* const kFixtureA048671;
}  // namespace detail

bool is_supported_sequence(std::string_view id) {
  return id == "A003418" || id == "A048671";
}

BigInt oracle_value(std::string_view id, std::int64_t index) {
  if (id == "A003418") return numtheory::lcm_upto(index);
  if (id == "A048671") return numtheory::lcm_bar(index);
  throw std::invalid_argument("unsupported sequence id: " + std::string(id));
}

BFile parse_bfile(std::string_view text, std::string sequence_id) {
  BFile out;
  out.sequence_id = std::move(sequence_id);
  std::istringstream in{std::string(text)};
  std::string line;
  std::int64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;  // blank
    if (line[start] == '#') continue;          // comment
    std::istringstream fields(line.substr(start));
    std::int64_t index = 0;
    std::string value_str;
    if (!(fields >> index >> value_str)) {
      throw std::runtime_error(out.sequence_id + ": malformed b-file line " + std::to_string(lineno) +
                               ": " + line);
    }
    std::string trailing;
    if (fields >> trailing) {
      throw std::runtime_error(out.sequence_id + ": trailing data on b-file line " +
                               std::to_string(lineno));
    }
    BigInt value;
    if (mpz_set_str(value.get_mpz_t(), value_str.c_str(), 10) != 0) {
      throw std::runtime_error(out.sequence_id + ": bad integer on b-file line " +
                               std::to_string(lineno) + ": " + value_str);
    }
    if (!out.entries.empty() && index <= out.entries.back().index) {
      throw std::runtime_error(out.sequence_id + ": indices not strictly increasing at line " +
                               std::to_string(lineno));
    }
    out.entries.push_back({index, std::move(value)});
  }
  return out;
}

std::string_view fixture_text(std::string_view id) {
  if (id == "A003418") return detail::kFixtureA003418;
  if (id == "A048671") return detail::kFixtureA048671;
  throw std::invalid_argument("no bundled fixture for sequence id: " + std::string(id));
}

std::string default_base_url() {
  if (const char* env = std::getenv("FAREYLCM_OEIS_BASE_URL")) return env;
  return "https://oeis.org";
}

namespace {

std::filesystem::path cache_path(const std::string& cache_dir, std::string_view id) {
  return std::filesystem::path(cache_dir) / (std::string(id) + ".txt");
}

}  // namespace

FetchResult fetch_bfile(std::string_view id, const std::string& base_url,
                        const std::string& cache_dir, bool refresh) {
  if (!is_supported_sequence(id)) {
    throw std::invalid_argument("unsupported sequence id: " + std::string(id));
  }
  auto path = cache_path(cache_dir, id);
  if (!refresh && std::filesystem::exists(path)) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream body;
    body << in.rdbuf();
    if (in.good() || in.eof()) return {body.str(), true};
  }
  httplib::Client client(base_url);
  client.set_follow_location(true);
  client.set_connection_timeout(15);
  client.set_read_timeout(30);
  std::string target = "/" + std::string(id) + "/b" + std::string(id.substr(1)) + ".txt";
  auto res = client.Get(target);
  if (!res) {
    throw std::runtime_error("network failure fetching " + base_url + target + ": " +
                             httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw std::runtime_error("HTTP " + std::to_string(res->status) + " fetching " + base_url + target);
  }
  std::filesystem::create_directories(cache_dir);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << res->body;
  out.close();
  return {res->body, false};
}

CheckResult check_sequence(const BFile& bfile, std::int64_t upto) {
  CheckResult result;
  for (const auto& entry : bfile.entries) {
    if (entry.index > upto) break;
    if (entry.index < 0) continue;
    BigInt expected = oracle_value(bfile.sequence_id, entry.index);
    ++result.checked;
    if (expected != entry.value) {
      result.mismatches.push_back({entry.index, expected, entry.value});
    }
  }
  return result;
}

}  // namespace fareylcm::oeis
