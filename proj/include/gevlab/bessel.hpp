#pragma once

#include <vector>

namespace gevlab {

/// J_0(x) .. J_nmax(x) by Miller's downward recurrence with the
/// J_0 + 2*sum J_{2k} = 1 normalization. Accurate to ~1e-14 for the
/// argument ranges used here (|x| up to a few hundred).
std::vector<double> bessel_jn_array(int nmax, double x);

double bessel_jn(int n, double x);

}  // namespace gevlab
