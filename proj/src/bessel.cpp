#include "gevlab/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace gevlab {

std::vector<double> bessel_jn_array(int nmax, double x) {
  if (nmax < 0) throw std::invalid_argument("bessel_jn_array: nmax must be >= 0");
  std::vector<double> out(static_cast<std::size_t>(nmax) + 1, 0.0);
  const bool neg = x < 0;
  x = std::abs(x);
  if (x == 0.0) {
    out[0] = 1.0;
    return out;
  }

  // start well above both the order and the turning point n ~ x
  int m = nmax + static_cast<int>(std::sqrt(60.0 * nmax)) + 2;
  m = std::max(m, static_cast<int>(x) + static_cast<int>(std::sqrt(60.0 * x)) + 2);
  m += m % 2;

  double jp = 0.0;       // J_{k+1}
  double j = 1e-30;      // J_k (arbitrary scale)
  double norm = 0.0;     // J_0 + 2 sum J_{2k}
  for (int k = m; k >= 1; --k) {
    double jm = (2.0 * k / x) * j - jp;
    jp = j;
    j = jm;
    if (std::abs(j) > 1e250) {  // rescale to avoid overflow
      const double scale = 1e-250;
      j *= scale;
      jp *= scale;
      norm *= scale;
      for (auto& v : out) v *= scale;
    }
    if (k - 1 <= nmax) out[static_cast<std::size_t>(k - 1)] = j;
    if ((k - 1) % 2 == 0) norm += (k - 1 == 0) ? j : 2.0 * j;
  }
  for (auto& v : out) v /= norm;
  if (neg)
    for (std::size_t n = 1; n < out.size(); n += 2) out[n] = -out[n];
  return out;
}

double bessel_jn(int n, double x) {
  const bool flip = n < 0;
  n = std::abs(n);
  double v = bessel_jn_array(n, x)[static_cast<std::size_t>(n)];
  if (flip && n % 2 == 1) v = -v;
  return v;
}

}  // namespace gevlab
