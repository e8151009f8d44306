#pragma once

#include <cstdint>

namespace deco {

std::uint64_t factorial(int n);
std::uint64_t binomial(int n, int k);

/// Catalan number C(2n,n)/(n+1).
std::uint64_t catalan(int n);

} // namespace deco
