#include "gevlab/lemmas.hpp"

#include <cmath>
#include <stdexcept>

#include "gevlab/kernels.hpp"

namespace gevlab::lemmas {

namespace {

/// Read-only Pascal triangle of BigUint binomials, built once per scan and
/// then shared across worker threads.
class PascalCache {
 public:
  explicit PascalCache(int nmax) : nmax_(nmax) {
    rows_.resize(static_cast<std::size_t>(nmax) + 1);
    for (int n = 0; n <= nmax; ++n) {
      auto& row = rows_[static_cast<std::size_t>(n)];
      row.resize(static_cast<std::size_t>(n) + 1);
      row[0] = BigUint(1);
      row[static_cast<std::size_t>(n)] = BigUint(1);
      for (int k = 1; k < n; ++k)
        row[static_cast<std::size_t>(k)] =
            rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] +
            rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
    }
  }

  const BigUint& at(int n, int k) const {
    static const BigUint zero;
    if (k < 0 || k > n) return zero;
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

  int nmax() const { return nmax_; }

 private:
  int nmax_;
  std::vector<std::vector<BigUint>> rows_;
};

/// Raw numerator sum of a star variant; denominator is m * binom(b1+b2, b1).
BigUint star_numerator(int b1, int b2, StarVariant variant, const PascalCache& pc) {
  BigUint sum;
  switch (variant) {
    case StarVariant::Plain:
      for (int s = 0; 2 * s <= b1; ++s)
        for (int t = 0; 2 * t <= b2; ++t)
          sum += pc.at(b1 + b2 - 2 * s - 2 * t, b1 - 2 * s) * pc.at(s + t, s);
      break;
    case StarVariant::Shift1:
      for (int s = 0; 2 * s <= b1 - 1; ++s)
        for (int t = 0; 2 * t <= b2; ++t)
          sum += pc.at(b1 + b2 - 2 * s - 1 - 2 * t, b1 - 2 * s - 1) * pc.at(s + t, s);
      break;
    case StarVariant::Shift2:
      for (int s = 0; 2 * s <= b1; ++s)
        for (int t = 0; 2 * t <= b2 - 1; ++t)
          sum += pc.at(b1 + b2 - 2 * s - 2 * t - 1, b1 - 2 * s) * pc.at(s + t, s);
      break;
  }
  return sum;
}

void check_star_preconditions(int b1, int b2, int m, StarVariant variant) {
  if (b1 < 0 || b2 < 0) throw std::invalid_argument("lemma_star_ratio: negative index");
  if (m < 3) throw std::invalid_argument("lemma_star_ratio: m must be >= 3");
  if (b1 + b2 > m - 1) throw std::invalid_argument("lemma_star_ratio: requires b1 + b2 <= m - 1");
  if (variant == StarVariant::Shift1 && b1 < 1)
    throw std::invalid_argument("lemma_star_ratio: shift1 requires b1 >= 1");
  if (variant == StarVariant::Shift2 && b2 < 1)
    throw std::invalid_argument("lemma_star_ratio: shift2 requires b2 >= 1");
}

}  // namespace

BigRatio choose_ratio(const MultiIndex& alpha, const MultiIndex& beta) {
  if (!beta.leq(alpha)) throw std::invalid_argument("choose_ratio: beta must be <= alpha");
  BigUint num = multi_binomial(alpha, beta) * weight_big(alpha);
  BigUint den = weight_big(beta) * weight_big(alpha - beta);
  return BigRatio(BigInt(num), den);
}

ChooseScan scan_choose_lemma(int max_order) {
  if (max_order < 1) throw std::invalid_argument("scan_choose_lemma: max_order must be >= 1");
  const auto alphas = indices_up_to(max_order);
  const int nchunks = 64;
  const auto n = static_cast<std::int64_t>(alphas.size());

  struct Local {
    std::vector<ChooseViolation> violations;
    BigRatio worst{0, 1};
    MultiIndex wa, wb;
    bool any = false;
  };
  std::vector<Local> locals(nchunks);

  kernels::parallel_for(nchunks, [&](std::int64_t c) {
    Local& loc = locals[static_cast<std::size_t>(c)];
    std::int64_t lo = n * c / nchunks, hi = n * (c + 1) / nchunks;
    for (std::int64_t ia = lo; ia < hi; ++ia) {
      const MultiIndex& alpha = alphas[static_cast<std::size_t>(ia)];
      for_each_leq(alpha, [&](const MultiIndex& beta) {
        BigRatio lhs = choose_ratio(alpha, beta);
        BigUint rhs = BigUint::binomial(static_cast<unsigned>(alpha.order()),
                                        static_cast<unsigned>(beta.order()));
        if (lhs > BigRatio(BigInt(rhs), BigUint(1)))
          loc.violations.push_back({alpha, beta, lhs, rhs});
        BigRatio frac(lhs.num(), lhs.den() * rhs);
        if (!loc.any || frac > loc.worst) {
          loc.worst = frac;
          loc.wa = alpha;
          loc.wb = beta;
          loc.any = true;
        }
      });
    }
  });

  ChooseScan out;
  out.worst_ratio = BigRatio(0, 1);
  bool any = false;
  for (const auto& loc : locals) {
    out.violations.insert(out.violations.end(), loc.violations.begin(), loc.violations.end());
    if (loc.any && (!any || loc.worst > out.worst_ratio)) {
      out.worst_ratio = loc.worst;
      out.worst_alpha = loc.wa;
      out.worst_beta = loc.wb;
      any = true;
    }
  }
  return out;
}

std::vector<ChooseViolation> verify_choose_lemma(int max_order) {
  return scan_choose_lemma(max_order).violations;
}

ProductSides product_identity_sides(int m, int j, const CoeffMap& x, const CoeffMap& y) {
  if (j < 0 || j > m) throw std::invalid_argument("product_identity: requires 0 <= j <= m");
  auto get = [](const CoeffMap& c, const MultiIndex& k) -> std::int64_t {
    auto it = c.find({k.a1, k.a2, k.a3});
    return it == c.end() ? 0 : it->second;
  };
  BigInt lhs;
  for (const auto& alpha : indices_of_order(m)) {
    for (const auto& beta : indices_of_order(j)) {
      if (!beta.leq(alpha)) continue;
      lhs += BigInt(get(x, beta)) * BigInt(get(y, alpha - beta));
    }
  }
  BigInt sx, sy;
  for (const auto& beta : indices_of_order(j)) sx += BigInt(get(x, beta));
  for (const auto& gamma : indices_of_order(m - j)) sy += BigInt(get(y, gamma));
  return {lhs, sx * sy};
}

bool verify_product_identity(int m, int j, const CoeffMap& x, const CoeffMap& y) {
  auto sides = product_identity_sides(m, j, x, y);
  return sides.lhs == sides.rhs;
}

BigRatio lemma_star_ratio(int b1, int b2, int m, StarVariant variant) {
  check_star_preconditions(b1, b2, m, variant);
  PascalCache pc(b1 + b2);
  BigUint num = star_numerator(b1, b2, variant, pc);
  BigUint den = BigUint(static_cast<std::uint64_t>(m)) * pc.at(b1 + b2, b1);
  return BigRatio(BigInt(num), den);
}

StarSup star_sup(int range, StarVariant variant) {
  if (range < 0) throw std::invalid_argument("star_sup: negative range");
  PascalCache pc(range);

  struct Cand {
    BigUint num, den;  // unreduced ratio num/den
    int b1 = 0, b2 = 0, m = 0;
    bool any = false;
  };
  // exact comparison without reduction
  auto better = [](const Cand& a, const Cand& b) {
    return a.num * b.den > b.num * a.den;
  };

  std::vector<Cand> per_b(static_cast<std::size_t>(range) + 1);
  kernels::parallel_for(range + 1, [&](std::int64_t bb) {
    const int b = static_cast<int>(bb);
    Cand best;
    for (int b1 = 0; b1 <= b; ++b1) {
      const int b2 = b - b1;
      if (variant == StarVariant::Shift1 && b1 < 1) continue;
      if (variant == StarVariant::Shift2 && b2 < 1) continue;
      const int m = std::max(3, b + 1);  // ratio is decreasing in m
      Cand c{star_numerator(b1, b2, variant, pc),
             BigUint(static_cast<std::uint64_t>(m)) * pc.at(b, b1), b1, b2, m, true};
      if (c.num.is_zero()) continue;
      if (!best.any || better(c, best)) best = c;
    }
    per_b[static_cast<std::size_t>(bb)] = best;
  });

  Cand best;
  for (const auto& c : per_b) {
    if (!c.any) continue;
    if (!best.any || better(c, best)) best = c;
  }
  StarSup out;
  if (best.any) {
    out.sup = BigRatio(BigInt(best.num), best.den);
    out.b1 = best.b1;
    out.b2 = best.b2;
    out.m = best.m;
  }
  return out;
}

StirlingBounds stirling_bounds(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("stirling_bounds: n must be >= 1");
  const double dn = static_cast<double>(n);
  const double log_core = 0.5 * std::log(dn) + dn * (std::log(dn) - 1.0);
  StirlingBounds b;
  if (n <= 170) {
    double f = 1.0;
    for (std::int64_t i = 2; i <= n; ++i) f *= static_cast<double>(i);
    b.value = f;
    b.lower = std::exp(7.0 / 8.0 + log_core);
    b.upper = std::exp(1.0 + log_core);
    b.log_scale = false;
  } else {
    b.value = std::lgamma(dn + 1.0);
    b.lower = 7.0 / 8.0 + log_core;
    b.upper = 1.0 + log_core;
    b.log_scale = true;
  }
  return b;
}

std::vector<BinomPairViolation> verify_binomial_pair(int nmax) {
  PascalCache pc(2 * nmax);
  std::vector<std::vector<BinomPairViolation>> per_n(static_cast<std::size_t>(nmax) + 1);
  kernels::parallel_for(nmax + 1, [&](std::int64_t nn) {
    const int n = static_cast<int>(nn);
    auto& out = per_n[static_cast<std::size_t>(nn)];
    for (int m = 0; m <= nmax; ++m)
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= m; ++j)
          if (pc.at(n, i) * pc.at(m, j) > pc.at(n + m, i + j)) out.push_back({n, m, i, j});
  });
  std::vector<BinomPairViolation> out;
  for (auto& v : per_n) out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace gevlab::lemmas
