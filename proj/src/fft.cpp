#include "fptlab/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <new>

namespace fptlab {
namespace {

std::mutex& planner_mutex()
{
    static std::mutex m;
    return m;
}

} // namespace

void fftw_buffer_deleter::operator()(std::complex<double>* p) const noexcept { fftw_free(p); }

fft_buffer make_fft_buffer(std::size_t n)
{
    auto* raw = static_cast<std::complex<double>*>(fftw_malloc(sizeof(std::complex<double>) * n));
    if (raw == nullptr) throw std::bad_alloc();
    return fft_buffer(raw);
}

forward_fft::forward_fft(std::size_t n) : n_(n)
{
    auto scratch = make_fft_buffer(n);
    std::lock_guard lock(planner_mutex());
    auto* z = reinterpret_cast<fftw_complex*>(scratch.get());
    plan_ = fftw_plan_dft_1d(static_cast<int>(n), z, z, FFTW_FORWARD, FFTW_ESTIMATE);
    if (plan_ == nullptr) throw std::bad_alloc();
}

forward_fft::~forward_fft()
{
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_));
}

void forward_fft::execute(std::complex<double>* data) const noexcept
{
    auto* z = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(static_cast<fftw_plan>(plan_), z, z);
}

std::vector<double> real_symmetric_spectrum(const std::vector<double>& row)
{
    const std::size_t n = row.size();
    forward_fft fft(n);
    auto buf = make_fft_buffer(n);
    for (std::size_t k = 0; k < n; ++k) buf[k] = {row[k], 0.0};
    fft.execute(buf.get());
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = buf[k].real();
    return out;
}

} // namespace fptlab
