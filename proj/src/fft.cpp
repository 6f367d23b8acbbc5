#include "sawtooth/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sawtooth {

void fft_pow2(std::vector<std::complex<double>>& a, bool inverse) {
  const size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("fft_pow2: size must be a power of two");
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang =
        (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (size_t j = 0; j < len / 2; ++j) {
        std::complex<double> u = a[i + j];
        std::complex<double> v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
  if (inverse)
    for (auto& x : a) x /= static_cast<double>(n);
}

std::vector<std::complex<double>> dft(const std::vector<double>& x) {
  const size_t n = x.size();
  if (n == 0) throw std::invalid_argument("dft: empty input");
  if ((n & (n - 1)) == 0) {
    std::vector<std::complex<double>> a(x.begin(), x.end());
    fft_pow2(a, false);
    return a;
  }
  // Bluestein: X[k] = conj(w[k]) * (x.w  circularly convolved with conj(w)),
  // w[j] = exp(-i pi j^2 / n).
  size_t m = 1;
  while (m < 2 * n - 1) m <<= 1;
  std::vector<std::complex<double>> w(n), a(m), b(m);
  for (size_t j = 0; j < n; ++j) {
    // j^2 mod 2n avoids precision loss for large j
    const double e = std::numbers::pi *
                     static_cast<double>((j * j) % (2 * n)) /
                     static_cast<double>(n);
    w[j] = std::complex<double>(std::cos(e), -std::sin(e));
    a[j] = x[j] * w[j];
  }
  b[0] = std::conj(w[0]);
  for (size_t j = 1; j < n; ++j) b[j] = b[m - j] = std::conj(w[j]);
  fft_pow2(a, false);
  fft_pow2(b, false);
  for (size_t j = 0; j < m; ++j) a[j] *= b[j];
  fft_pow2(a, true);
  std::vector<std::complex<double>> out(n);
  for (size_t k = 0; k < n; ++k) out[k] = a[k] * w[k];
  return out;
}

std::vector<double> periodogram(const std::vector<double>& x) {
  auto spec = dft(x);
  std::vector<double> p(x.size() / 2 + 1);
  for (size_t k = 0; k < p.size(); ++k) p[k] = std::norm(spec[k]);
  return p;
}

}  // namespace sawtooth
