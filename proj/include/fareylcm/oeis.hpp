#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fareylcm/numtheory.hpp"

namespace fareylcm::oeis {

// Parsed b-file: plain text lines "index value", '#' comments and blank
// lines ignored, indices strictly increasing.
struct BFileEntry {
  std::int64_t index = 0;
  BigInt value;
};

struct BFile {
  std::string sequence_id;  // "A003418" etc.
  std::vector<BFileEntry> entries;
};

// The two sequences this artifact cross-checks.
bool is_supported_sequence(std::string_view id);

// Exact oracle value for a supported sequence at the given index.
BigInt oracle_value(std::string_view id, std::int64_t index);

// Throws std::runtime_error on malformed lines or non-increasing indices.
BFile parse_bfile(std::string_view text, std::string sequence_id);

// 200-term fixture bundled into the binary; throws on unsupported id.
std::string_view fixture_text(std::string_view id);

// Base URL for b-file fetches: FAREYLCM_OEIS_BASE_URL when set, else
// https://oeis.org.
std::string default_base_url();

struct FetchResult {
  std::string body;
  bool from_cache = false;
};

// GET <base>/<id>/b<digits>.txt with a verbatim on-disk cache under
// cache_dir (one file per sequence id). refresh bypasses the cache.
// Throws std::runtime_error on network or HTTP failure.
FetchResult fetch_bfile(std::string_view id, const std::string& base_url,
                        const std::string& cache_dir, bool refresh);

struct Mismatch {
  std::int64_t index = 0;
  BigInt expected;  // oracle value
  BigInt found;     // b-file value
};

struct CheckResult {
  std::int64_t checked = 0;
  std::vector<Mismatch> mismatches;
};

// Compares b-file entries with indices <= upto against the exact oracle.
CheckResult check_sequence(const BFile& bfile, std::int64_t upto);

}  // namespace fareylcm::oeis
