#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gevlab/big_int.hpp"
#include "gevlab/multi_index.hpp"

namespace gevlab::lemmas {

/// binom(alpha,beta) * M_alpha / (M_beta * M_{alpha-beta}), exact.
/// Requires beta <= alpha componentwise.
BigRatio choose_ratio(const MultiIndex& alpha, const MultiIndex& beta);

struct ChooseViolation {
  MultiIndex alpha, beta;
  BigRatio lhs;
  BigUint rhs;
};

/// Enumerates every alpha with |alpha| <= max_order and every beta <= alpha,
/// returning the pairs where choose_ratio exceeds binom(|alpha|, |beta|).
/// An empty list certifies the bound on the scanned range.
std::vector<ChooseViolation> verify_choose_lemma(int max_order);

/// Largest choose ratio / binom(|alpha|,|beta|) witnessed during the scan,
/// with its argmax. Used for the CSV certificate.
struct ChooseScan {
  std::vector<ChooseViolation> violations;
  BigRatio worst_ratio;  // max of lhs / rhs over the scan
  MultiIndex worst_alpha, worst_beta;
};
ChooseScan scan_choose_lemma(int max_order);

using CoeffMap = std::map<std::array<int, 3>, std::int64_t>;

/// Checks the double-sum re-labeling identity with exact integer arithmetic:
/// sum_{|alpha|=m} sum_{|beta|=j, beta<=alpha} x_beta y_{alpha-beta}
///   == (sum_{|beta|=j} x_beta) (sum_{|gamma|=m-j} y_gamma).
bool verify_product_identity(int m, int j, const CoeffMap& x, const CoeffMap& y);

/// Both sides of the identity, for reporting.
struct ProductSides {
  BigInt lhs, rhs;
};
ProductSides product_identity_sides(int m, int j, const CoeffMap& x, const CoeffMap& y);

enum class StarVariant { Plain, Shift1, Shift2 };

/// The double sum of the given variant divided by m * binom(b1+b2, b1),
/// exact. Requires b1 + b2 <= m - 1 and m >= 3; Shift1 requires b1 >= 1,
/// Shift2 requires b2 >= 1. The uniform bound asserts this ratio <= C.
BigRatio lemma_star_ratio(int b1, int b2, int m, StarVariant variant);

struct StarSup {
  BigRatio sup;
  int b1 = 0, b2 = 0, m = 0;
};

/// Exact sup of lemma_star_ratio over all admissible (b1, b2) with
/// b1 + b2 <= range, at the minimal admissible m (the ratio is decreasing
/// in m, so that is where the sup over m sits).
StarSup star_sup(int range, StarVariant variant);

struct StirlingBounds {
  double lower = 0, upper = 0, value = 0;  // natural logs when log_scale
  bool log_scale = false;
};

/// e^{7/8} sqrt(n) (n/e)^n, n!, e sqrt(n) (n/e)^n. Linear values for
/// n <= 170, natural logs beyond that. lower < n! < upper for n >= 2;
/// at n = 1 the upper bound is an equality.
StirlingBounds stirling_bounds(std::int64_t n);

struct BinomPairViolation {
  int n = 0, m = 0, i = 0, j = 0;
};

/// Checks binom(n,i)*binom(m,j) <= binom(n+m,i+j) for all n,m <= nmax and
/// admissible i, j; returns violations (expected empty).
std::vector<BinomPairViolation> verify_binomial_pair(int nmax);

}  // namespace gevlab::lemmas
