#include "tscat/fft.hpp"

#include <cmath>

#include "tscat/errors.hpp"

namespace tscat {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

namespace {

void fft_radix2(std::vector<std::complex<double>>& a, bool invert) {
  const std::size_t n = a.size();
  if (!is_power_of_two(n)) throw Precondition("fft size must be a power of two");
  if (n == 1) return;

  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  // twiddle table for the full size; stage tables are strided views of it
  const double sign = invert ? 1.0 : -1.0;
  std::vector<std::complex<double>> tw(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k)
    tw[k] = std::polar(1.0, sign * 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n));

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> w = tw[k * stride];
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }

  if (invert) {
    const double inv_n = 1.0 / static_cast<double>(n);
    for (auto& x : a) x *= inv_n;
  }
}

}  // namespace

void fft_forward(std::vector<std::complex<double>>& a) { fft_radix2(a, false); }

void fft_inverse(std::vector<std::complex<double>>& a) { fft_radix2(a, true); }

}  // namespace tscat
