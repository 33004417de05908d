#pragma once

// Thin RAII layer over FFTW. Planning is serialized (FFTW's planner is not
// thread-safe); executing an existing plan on fresh buffers is.

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

namespace fptlab {

struct fftw_buffer_deleter {
    void operator()(std::complex<double>* p) const noexcept;
};

using fft_buffer = std::unique_ptr<std::complex<double>[], fftw_buffer_deleter>;

fft_buffer make_fft_buffer(std::size_t n);

/// In-place forward complex DFT of fixed size, sum_j z_j e^{-2 pi i jk/n}.
class forward_fft {
public:
    explicit forward_fft(std::size_t n);
    ~forward_fft();
    forward_fft(const forward_fft&) = delete;
    forward_fft& operator=(const forward_fft&) = delete;

    std::size_t size() const noexcept { return n_; }
    /// `data` must come from make_fft_buffer(size()).
    void execute(std::complex<double>* data) const noexcept;

private:
    std::size_t n_;
    void* plan_;
};

/// DFT of a real sequence that is symmetric (x_k = x_{n-k}); the result is real.
std::vector<double> real_symmetric_spectrum(const std::vector<double>& row);

} // namespace fptlab
