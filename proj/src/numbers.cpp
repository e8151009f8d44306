#include "deco/numbers.hpp"

#include "deco/error.hpp"

namespace deco {

std::uint64_t factorial(int n) {
  if (n < 0) throw error(errc::value_out_of_range, "factorial of a negative number", n);
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

std::uint64_t catalan(int n) {
  return binomial(2 * n, n) / static_cast<std::uint64_t>(n + 1);
}

} // namespace deco
