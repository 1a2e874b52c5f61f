#include "gevlab/multi_index.hpp"

#include <stdexcept>

namespace gevlab {

std::uint64_t binomial_u64(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n-k+i) can overflow; go through 128 bits and check
    unsigned __int128 t = static_cast<unsigned __int128>(r) * static_cast<std::uint64_t>(n - k + i);
    t /= static_cast<std::uint64_t>(i);
    if (t > ~std::uint64_t{0}) throw std::overflow_error("binomial_u64 overflow");
    r = static_cast<std::uint64_t>(t);
  }
  return r;
}

std::uint64_t weight_u64(const MultiIndex& a) { return binomial_u64(a.a1 + a.a2, a.a1); }

BigUint weight_big(const MultiIndex& a) {
  return BigUint::binomial(static_cast<unsigned>(a.a1 + a.a2), static_cast<unsigned>(a.a1));
}

BigUint multi_binomial(const MultiIndex& alpha, const MultiIndex& beta) {
  if (!beta.leq(alpha)) throw std::invalid_argument("multi_binomial: beta must be <= alpha");
  BigUint r = BigUint::binomial(alpha.a1, beta.a1);
  r *= BigUint::binomial(alpha.a2, beta.a2);
  r *= BigUint::binomial(alpha.a3, beta.a3);
  return r;
}

std::vector<MultiIndex> indices_of_order(int m) {
  std::vector<MultiIndex> out;
  out.reserve(static_cast<std::size_t>((m + 1) * (m + 2) / 2));
  for (int a1 = 0; a1 <= m; ++a1)
    for (int a2 = 0; a2 <= m - a1; ++a2) out.push_back({a1, a2, m - a1 - a2});
  return out;
}

std::vector<MultiIndex> indices_up_to(int m) {
  std::vector<MultiIndex> out;
  for (int k = 0; k <= m; ++k) {
    auto v = indices_of_order(k);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

}  // namespace gevlab
