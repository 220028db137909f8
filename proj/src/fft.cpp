#include "lacuna/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace lacuna {

namespace {

std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}

void run(const std::vector<int>& dims, std::vector<std::complex<double>>& inout, int sign) {
    size_t total = 1;
    for (int d : dims) total *= static_cast<size_t>(d);
    if (inout.size() != total) throw std::invalid_argument("dft: data length mismatch");
    auto* buf = reinterpret_cast<fftw_complex*>(inout.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        plan = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(), buf, buf, sign,
                             FFTW_ESTIMATE);
    }
    if (!plan) throw std::runtime_error("dft: planning failed");
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        fftw_destroy_plan(plan);
    }
    if (sign == FFTW_BACKWARD) {
        double inv = 1.0 / static_cast<double>(total);
        for (auto& z : inout) z *= inv;
    }
}

} // namespace

void dft_forward(const std::vector<int>& dims, std::vector<std::complex<double>>& inout) {
    run(dims, inout, FFTW_FORWARD);
}

void dft_inverse(const std::vector<int>& dims, std::vector<std::complex<double>>& inout) {
    run(dims, inout, FFTW_BACKWARD);
}

} // namespace lacuna
