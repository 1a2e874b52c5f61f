#pragma once

#include <array>
#include <complex>

namespace gevlab::fft {

using cdouble = std::complex<double>;

/// In-place 3D complex transforms on row-major data of dims n.
/// backward() is the synthesis sum_k c_k e^{+i k.x} (unnormalized);
/// forward() is the analysis direction, normalized by 1/(n1*n2*n3).
/// Plans are cached with FFTW_ESTIMATE so results do not depend on
/// measurement-time planning choices.
void backward(const std::array<int, 3>& n, cdouble* data);
void forward(const std::array<int, 3>& n, cdouble* data);

/// Smallest 5-smooth integer >= n (fast FFT sizes).
int good_size(int n);

}  // namespace gevlab::fft
