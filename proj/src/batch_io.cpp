#include "fptlab/batch_io.hpp"

#include "fptlab/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>

namespace fptlab {
namespace {

template <class T>
void put(std::ostream& os, T value)
{
    std::array<char, sizeof(T)> bytes;
    std::memcpy(bytes.data(), &value, sizeof(T));
    if constexpr (std::endian::native == std::endian::big)
        std::reverse(bytes.begin(), bytes.end());
    os.write(bytes.data(), bytes.size());
}

template <class T>
T get(std::istream& is)
{
    std::array<char, sizeof(T)> bytes;
    if (!is.read(bytes.data(), bytes.size())) throw numerical_error("read_batch: truncated file");
    if constexpr (std::endian::native == std::endian::big)
        std::reverse(bytes.begin(), bytes.end());
    T value;
    std::memcpy(&value, bytes.data(), sizeof(T));
    return value;
}

constexpr std::array<char, 4> magic{'F', 'P', 'T', 'B'};

} // namespace

void write_batch(const std::filesystem::path& file, const sample_path_batch& batch,
                 const covariance_model& model)
{
    std::ofstream os(file, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("write_batch: cannot open " + file.string());
    os.write(magic.data(), magic.size());
    put<std::uint32_t>(os, 1);
    put<std::uint64_t>(os, batch.n_paths);
    put<std::uint64_t>(os, batch.grid.n_steps);
    put<double>(os, batch.grid.dt);
    put<std::uint64_t>(os, batch.seed);
    put<std::uint64_t>(os, batch.first_path);
    put<std::uint32_t>(os, static_cast<std::uint32_t>(model.family()));
    put<double>(os, model.alpha());
    put<double>(os, model.beta());
    std::uint32_t tag = 0;
    double param = 0.0;
    if (const auto* f = std::get_if<fixed_start>(&batch.conditioning)) {
        tag = 1;
        param = f->x0;
    } else if (const auto* t = std::get_if<truncated_start>(&batch.conditioning)) {
        tag = 2;
        param = t->spec.epsilon;
    }
    put<std::uint32_t>(os, tag);
    put<double>(os, param);
    for (double v : batch.values) put<double>(os, v);
    if (!os) throw std::runtime_error("write_batch: write failed for " + file.string());
}

batch_dump read_batch(const std::filesystem::path& file)
{
    std::ifstream is(file, std::ios::binary);
    if (!is) throw std::runtime_error("read_batch: cannot open " + file.string());
    std::array<char, 4> m{};
    is.read(m.data(), m.size());
    if (!is || m != magic) throw numerical_error("read_batch: bad magic");
    batch_dump dump;
    auto& h = dump.header;
    h.version = get<std::uint32_t>(is);
    h.n_paths = get<std::uint64_t>(is);
    h.n_steps = get<std::uint64_t>(is);
    h.dt = get<double>(is);
    h.seed = get<std::uint64_t>(is);
    h.first_path = get<std::uint64_t>(is);
    h.family = get<std::uint32_t>(is);
    h.alpha = get<double>(is);
    h.beta = get<double>(is);
    h.conditioning = get<std::uint32_t>(is);
    h.conditioning_param = get<double>(is);
    dump.values.resize(h.n_paths * h.n_steps);
    for (double& v : dump.values) v = get<double>(is);
    return dump;
}

} // namespace fptlab
