#pragma once

#include <complex>
#include <vector>

namespace sawtooth {

// In-place radix-2 FFT; size must be a power of two.
void fft_pow2(std::vector<std::complex<double>>& a, bool inverse);

// DFT of arbitrary length (Bluestein's algorithm for non-powers of two).
std::vector<std::complex<double>> dft(const std::vector<double>& x);

// |DFT|^2 at bins 0..N/2 of the input.
std::vector<double> periodogram(const std::vector<double>& x);

}  // namespace sawtooth
