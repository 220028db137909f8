#ifndef LACUNA_FFT_HPP
#define LACUNA_FFT_HPP

#include <complex>
#include <vector>

namespace lacuna {

/// Unnormalized forward DFT / (1/N)-normalized inverse, any rank up to 8.
/// Under this convention sum |F|^2 = N sum |f|^2 (checked as the Plancherel
/// invariant in the tests). Plan creation is serialized internally; transforms
/// on distinct buffers may run concurrently.
void dft_forward(const std::vector<int>& dims, std::vector<std::complex<double>>& inout);
void dft_inverse(const std::vector<int>& dims, std::vector<std::complex<double>>& inout);

/// Signed lattice frequency of index k on an axis of extent d: k for
/// k < d/2, k - d otherwise, scaled by 2*pi/(d*h).
inline double lattice_freq(int k, int d, double h) {
    int s = k < (d + 1) / 2 ? k : k - d;
    return 2.0 * 3.14159265358979323846 * s / (d * h);
}

} // namespace lacuna

#endif
