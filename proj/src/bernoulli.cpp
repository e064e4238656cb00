#include "fareylcm/bernoulli.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace fareylcm::hpreal {

namespace {

// Tangent numbers T_1..T_n (1, 2, 16, 272, ...) by the Seidel-style
// triangle: integer multiplies and adds only, no rational arithmetic.
std::vector<mpz_class> tangent_numbers(int n) {
  std::vector<mpz_class> t(static_cast<std::size_t>(n) + 1);
  t[1] = 1;
  for (int k = 2; k <= n; ++k) t[k] = (k - 1) * t[k - 1];
  for (int k = 2; k <= n; ++k) {
    for (int j = k; j <= n; ++j) {
      t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
    }
  }
  return t;
}

std::mutex g_mutex;
std::vector<mpq_class> g_table;  // g_table[j-1] = B_{2j}

}  // namespace

mpq_class bernoulli_2j(int j) {
  if (j < 1) throw std::invalid_argument("bernoulli_2j: j must be >= 1");
  std::lock_guard<std::mutex> lock(g_mutex);
  if (static_cast<std::size_t>(j) > g_table.size()) {
    int n = std::max(j, static_cast<int>(g_table.size()) * 2 + 8);
    auto t = tangent_numbers(n);
    g_table.resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
      mpz_class pow4;  // 2^(2i)
      mpz_ui_pow_ui(pow4.get_mpz_t(), 2, static_cast<unsigned long>(2 * i));
      mpq_class b(t[static_cast<std::size_t>(i)] * (2 * i), pow4 * (pow4 - 1));
      b.canonicalize();
      if (i % 2 == 0) b = -b;
      g_table[static_cast<std::size_t>(i) - 1] = b;
    }
  }
  return g_table[static_cast<std::size_t>(j) - 1];
}

}  // namespace fareylcm::hpreal
