#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gevlab/big_int.hpp"

namespace gevlab {

/// Derivative multi-index (a1, a2, a3); a1, a2 are the tangential orders.
struct MultiIndex {
  int a1 = 0, a2 = 0, a3 = 0;

  int order() const { return a1 + a2 + a3; }
  std::array<int, 2> tangential() const { return {a1, a2}; }
  int tangential_order() const { return a1 + a2; }

  bool operator==(const MultiIndex&) const = default;
  bool leq(const MultiIndex& o) const { return a1 <= o.a1 && a2 <= o.a2 && a3 <= o.a3; }
  MultiIndex operator+(const MultiIndex& o) const { return {a1 + o.a1, a2 + o.a2, a3 + o.a3}; }
  MultiIndex operator-(const MultiIndex& o) const { return {a1 - o.a1, a2 - o.a2, a3 - o.a3}; }

  std::string to_string() const {
    return "(" + std::to_string(a1) + "," + std::to_string(a2) + "," + std::to_string(a3) + ")";
  }
};

/// binom(n, k) in 64 bits; throws on overflow.
std::uint64_t binomial_u64(int n, int k);

/// The tangential binomial weight binom(a1+a2, a1).
std::uint64_t weight_u64(const MultiIndex& a);
BigUint weight_big(const MultiIndex& a);

/// Product of per-axis binomials binom(alpha_i, beta_i); requires beta <= alpha.
BigUint multi_binomial(const MultiIndex& alpha, const MultiIndex& beta);

/// All alpha with |alpha| = m, in lexicographic (a1, a2) order; a3 is determined.
std::vector<MultiIndex> indices_of_order(int m);

/// All alpha with |alpha| <= m, ordered by |alpha| then lexicographically.
std::vector<MultiIndex> indices_up_to(int m);

/// Visits every beta <= alpha (componentwise), lexicographic in (b1, b2, b3).
template <class F>
void for_each_leq(const MultiIndex& alpha, F&& f) {
  for (int b1 = 0; b1 <= alpha.a1; ++b1)
    for (int b2 = 0; b2 <= alpha.a2; ++b2)
      for (int b3 = 0; b3 <= alpha.a3; ++b3) f(MultiIndex{b1, b2, b3});
}

}  // namespace gevlab
