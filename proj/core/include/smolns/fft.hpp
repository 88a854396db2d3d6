#pragma once

#include <complex>

namespace smolns::fft {

// Thin cache of FFTW complex-to-complex plans. Transforms are unnormalized
// (FFTW convention, forward sign -1); callers apply 1/N where a normalized
// coefficient set is wanted. Plans are created with FFTW_ESTIMATE so planning
// is deterministic, and execution on distinct buffers is thread safe.

// In-place 2-D transform of a row-major [n0][n1] array.
void forward_2d(int n0, int n1, std::complex<double>* data);
void backward_2d(int n0, int n1, std::complex<double>* data);

// In-place batch of 1-D transforms: howmany transforms of length n whose
// elements are stride apart; consecutive transforms start dist apart.
void forward_many(int n, int howmany, int stride, int dist, std::complex<double>* data);
void backward_many(int n, int howmany, int stride, int dist, std::complex<double>* data);

}  // namespace smolns::fft
