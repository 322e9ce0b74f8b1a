#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace qpb::detail {

// Unnormalized DFTs. `forward` uses the kernel exp(-2 pi i jk/n), `backward`
// exp(+2 pi i jk/n). Plans are cached process-wide behind a mutex; execution
// uses the new-array interface and is safe from any thread.
enum class FftSign { forward, backward };

void fft(std::span<const std::complex<double>> in, std::span<std::complex<double>> out,
         FftSign sign);

// Full 3D transform of an n^3 row-major cube.
void fft3(std::span<const std::complex<double>> in, std::span<std::complex<double>> out,
          std::size_t n, FftSign sign);

// 1D transform of every line along `axis` of an n^dim cube, in place.
void fft_axis(std::span<std::complex<double>> data, std::size_t n, int dim, int axis,
              FftSign sign);

}  // namespace qpb::detail
