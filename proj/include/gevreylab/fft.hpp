#pragma once

#include <complex>
#include <cstddef>

// Thin plan-caching wrapper over FFTW's complex transforms. Plans use
// FFTW_ESTIMATE so planning is deterministic, and FFTW_UNALIGNED so the
// cached plans can execute on arbitrary caller buffers. Transforms are
// unnormalized (forward kernel e^{-2*pi*i*jk/n}).

namespace gvl::fft {

using cd = std::complex<double>;

void forward(int n, const cd* in, cd* out);
void backward(int n, const cd* in, cd* out);

// 2-D transforms on row-major m x n data (row = time slice).
void forward_2d(int m, int n, const cd* in, cd* out);
void backward_2d(int m, int n, const cd* in, cd* out);

}  // namespace gvl::fft
