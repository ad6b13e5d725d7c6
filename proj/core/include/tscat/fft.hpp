#ifndef TSCAT_FFT_HPP
#define TSCAT_FFT_HPP

#include <complex>
#include <vector>

namespace tscat {

/// In-place forward DFT, X_m = sum_j x_j e^{-2 pi i j m / N}.  N must be a
/// power of two.  Twiddles come from a per-call table of direct std::polar
/// evaluations, so there is no phase drift to accumulate across stages.
void fft_forward(std::vector<std::complex<double>>& a);

/// In-place inverse DFT, x_j = (1/N) sum_m X_m e^{+2 pi i j m / N}.
void fft_inverse(std::vector<std::complex<double>>& a);

bool is_power_of_two(std::size_t n);

}  // namespace tscat

#endif
