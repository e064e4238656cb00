// End-to-end tests that drive the installed CLI binary (path provided via
// the FAREYLCM_BIN environment variable set by CTest).

#include <doctest.h>

#include <httplib.h>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "fareylcm/numtheory.hpp"
#include "fareylcm/oeis.hpp"

namespace {

using json = nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string cli_path() {
  const char* p = std::getenv("FAREYLCM_BIN");
  REQUIRE_MESSAGE(p != nullptr, "FAREYLCM_BIN must point at the CLI binary");
  return p;
}

RunResult run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = cli_path() + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) {
    result.out.append(buf, got);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string field;
  while (std::getline(in, field, ',')) out.push_back(field);
  return out;
}

std::filesystem::path fresh_dir(const std::string& tag) {
  auto dir = std::filesystem::temp_directory_path() / ("fareylcm-test-" + tag + "-" +
                                                       std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("lcm subcommand") {
  auto sine = run("lcm 10 --method sine");
  CHECK(sine.exit_code == 0);
  REQUIRE(!lines(sine.out).empty());
  CHECK(lines(sine.out)[0] == "2520");

  auto oracle = run("lcm 1 --method oracle");
  CHECK(oracle.exit_code == 0);
  CHECK(lines(oracle.out)[0] == "1");

  CHECK(run("lcm 1 --method sine").exit_code == 1);
  CHECK(run("lcm 10 --method gamma").out.substr(0, 4) == "2520");
}

TEST_CASE("verify E4 csv over 0..50") {
  auto r = run("verify E4 --from 0 --to 50 --format csv");
  CHECK(r.exit_code == 0);
  auto rows = lines(r.out);
  REQUIRE(rows.size() == 52);  // header + 51 reports
  CHECK(rows[0] == "n,status,value,bits,factors,ms");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(split_csv(rows[i])[1] == "Verified");
  }
}

TEST_CASE("verify E13 alternates by parity") {
  auto r = run("verify E13 --from 2 --to 20 --format csv");
  CHECK(r.exit_code == 0);
  auto rows = lines(r.out);
  REQUIRE(rows.size() == 20);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    auto f = split_csv(rows[i]);
    std::int64_t n = std::stoll(f[0]);
    CHECK(f[1] == "Verified");
    CHECK(f[2] == (n % 2 == 0 ? "0" : "1"));
  }
}

TEST_CASE("verify GCI skips prime powers") {
  auto r = run("verify GCI --from 2 --to 12 --format csv");
  CHECK(r.exit_code == 0);
  std::vector<std::int64_t> skipped;
  for (const auto& row : lines(r.out)) {
    auto f = split_csv(row);
    if (f.size() > 1 && f[1] == "Skipped") skipped.push_back(std::stoll(f[0]));
  }
  CHECK(skipped == std::vector<std::int64_t>{2, 3, 4, 5, 7, 8, 9, 11});
}

TEST_CASE("verify rejects unknown equation ids") {
  CHECK(run("verify E5 --from 1 --to 2").exit_code == 1);
}

TEST_CASE("farey subcommand") {
  auto r5 = run("farey 5");
  CHECK(r5.exit_code == 0);
  auto r5_lines = lines(r5.out);
  REQUIRE(r5_lines.size() == 2);
  CHECK(r5_lines[0] == "0/1 1/5 1/4 1/3 2/5 1/2 3/5 2/3 3/4 4/5 1/1");
  CHECK(r5_lines[1] == "count: 11");

  CHECK(lines(run("farey 1").out)[0] == "0/1 1/1");
  CHECK(lines(run("farey 5 --half").out)[0] == "1/5 1/4 1/3 2/5 1/2");
  CHECK(run("farey 0").exit_code == 1);
}

TEST_CASE("cyclo subcommand") {
  CHECK(lines(run("cyclo 6").out)[0] == "1 -1 1");
  CHECK(lines(run("cyclo 9 --at 1").out)[0] == "3");
  CHECK(lines(run("cyclo 6 --at=-1").out)[0] == "3");
}

TEST_CASE("oeis-check --offline touches no network") {
  // poison the base URL with a closed port: any fetch attempt would fail
  setenv("FAREYLCM_OEIS_BASE_URL", "http://127.0.0.1:1", 1);
  auto dir = fresh_dir("offline");
  auto a = run("oeis-check A003418 --upto 199 --offline --cache-dir " + dir.string());
  CHECK(a.exit_code == 0);
  CHECK(a.out.find("0 mismatches") != std::string::npos);
  auto b = run("oeis-check A048671 --upto 200 --offline --cache-dir " + dir.string());
  CHECK(b.exit_code == 0);
  CHECK(b.out.find("0 mismatches") != std::string::npos);
  // no cache writes in offline mode
  CHECK(std::filesystem::is_empty(dir));
  unsetenv("FAREYLCM_OEIS_BASE_URL");
}

TEST_CASE("oeis-check rejects unsupported sequences") {
  CHECK(run("oeis-check A000001 --upto 10 --offline").exit_code == 1);
}

TEST_CASE("oeis-check network failure without --offline exits 3") {
  setenv("FAREYLCM_OEIS_BASE_URL", "http://127.0.0.1:1", 1);
  auto dir = fresh_dir("netfail");
  CHECK(run("oeis-check A003418 --upto 10 --cache-dir " + dir.string()).exit_code == 3);
  unsetenv("FAREYLCM_OEIS_BASE_URL");
}

TEST_CASE("oeis-check fetch, cache and refresh against a local stub") {
  std::string fixture(fareylcm::oeis::fixture_text("A003418"));
  httplib::Server server;
  std::atomic<int> hits{0};
  server.Get("/A003418/b003418.txt", [&](const httplib::Request&, httplib::Response& res) {
    ++hits;
    res.set_content(fixture, "text/plain");
  });
  int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread listener([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  setenv("FAREYLCM_OEIS_BASE_URL", ("http://127.0.0.1:" + std::to_string(port)).c_str(), 1);
  auto dir = fresh_dir("fetch");

  auto first = run("oeis-check A003418 --upto 199 --cache-dir " + dir.string());
  CHECK(first.exit_code == 0);
  CHECK(first.out.find("fetch") != std::string::npos);
  CHECK(hits.load() == 1);

  // cache file is byte-identical to what the server sent
  std::ifstream cached(dir / "A003418.txt", std::ios::binary);
  std::ostringstream body;
  body << cached.rdbuf();
  CHECK(body.str() == fixture);

  auto second = run("oeis-check A003418 --upto 199 --cache-dir " + dir.string());
  CHECK(second.exit_code == 0);
  CHECK(second.out.find("cache") != std::string::npos);
  CHECK(hits.load() == 1);  // cache hit, no new request

  auto third = run("oeis-check A003418 --upto 199 --refresh --cache-dir " + dir.string());
  CHECK(third.exit_code == 0);
  CHECK(hits.load() == 2);  // --refresh bypasses the cache

  server.stop();
  listener.join();
  unsetenv("FAREYLCM_OEIS_BASE_URL");
}

TEST_CASE("json output parses and round-trips") {
  auto r = run("verify E4 --from 2 --to 10 --format json");
  CHECK(r.exit_code == 0);
  json doc = json::parse(r.out);  // throws on malformed output
  CHECK(doc["command"] == "verify");
  CHECK(doc["equation"] == "E4");
  REQUIRE(doc["reports"].size() == 9);
  for (const auto& row : doc["reports"]) {
    CHECK(row["status"] == "Verified");
    std::int64_t n = row["n"].get<std::int64_t>();
    auto cls = fareylcm::numtheory::classify_prime_power(n);
    CHECK(row["value"].get<std::string>() ==
          (cls.is_prime_power ? std::to_string(cls.prime) : "1"));
  }
  CHECK(json::parse(doc.dump()) == doc);

  json lcm_doc = json::parse(run("lcm 12 --method sine --format json").out);
  CHECK(lcm_doc["report"]["value"] == "27720");

  json farey_doc = json::parse(run("farey 5 --format json").out);
  CHECK(farey_doc["count"] == 11);
  json cyclo_doc = json::parse(run("cyclo 6 --format json").out);
  CHECK(cyclo_doc["coefficients"] == json::array({"1", "-1", "1"}));
  json oeis_doc = json::parse(run("oeis-check A003418 --upto 50 --offline --format json").out);
  CHECK(oeis_doc["mismatches"].empty());
}

TEST_CASE("verify output is stable across worker counts") {
  auto strip_ms = [](const std::string& body) {
    std::string kept;
    for (const auto& row : lines(body)) {
      auto f = split_csv(row);
      for (std::size_t i = 0; i + 1 < f.size(); ++i) kept += f[i] + ",";  // drop the ms column
      kept += "\n";
    }
    return kept;
  };
  auto one = run("verify E3 --from 2 --to 40 --workers 1 --format csv");
  auto eight = run("verify E3 --from 2 --to 40 --workers 8 --format csv");
  CHECK(one.exit_code == 0);
  CHECK(eight.exit_code == 0);
  CHECK(strip_ms(one.out) == strip_ms(eight.out));
}

TEST_CASE("bench tables") {
  auto empty = run("bench --eq E3 --from 5 --to 4 --format csv");
  CHECK(empty.exit_code == 0);
  CHECK(lines(empty.out).size() == 1);  // header only

  auto r = run("bench --eq E4 --from 2 --to 30 --format csv");
  CHECK(r.exit_code == 0);
  auto rows = lines(r.out);
  REQUIRE(rows.size() == 30);
  CHECK(rows[0] == "n,factors,bits,retries,ms");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    auto f = split_csv(rows[i]);
    std::int64_t n = std::stoll(f[0]);
    CHECK(std::stoll(f[1]) == fareylcm::numtheory::totient(n));
  }
}
