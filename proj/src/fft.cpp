#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace qpb::detail {
namespace {

using cplx = std::complex<double>;

class PlanCache {
 public:
  ~PlanCache() {
    std::lock_guard lock(mutex_);
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(int rank, std::size_t n, FftSign sign) {
    const auto key = std::make_tuple(rank, n, sign);
    std::lock_guard lock(mutex_);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;

    const std::size_t total = rank == 1 ? n : n * n * n;
    std::vector<cplx> in(total), out(total);
    auto* pin = reinterpret_cast<fftw_complex*>(in.data());
    auto* pout = reinterpret_cast<fftw_complex*>(out.data());
    const int dir = sign == FftSign::forward ? FFTW_FORWARD : FFTW_BACKWARD;
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    const int ni = static_cast<int>(n);
    fftw_plan plan = rank == 1 ? fftw_plan_dft_1d(ni, pin, pout, dir, flags)
                               : fftw_plan_dft_3d(ni, ni, ni, pin, pout, dir, flags);
    if (plan == nullptr) throw std::runtime_error("FFTW failed to create a plan");
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<int, std::size_t, FftSign>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

void execute(fftw_plan plan, std::span<const cplx> in, std::span<cplx> out) {
  // FFTW does not modify the input of an out-of-place complex transform.
  auto* pin = reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in.data()));
  auto* pout = reinterpret_cast<fftw_complex*>(out.data());
  fftw_execute_dft(plan, pin, pout);
}

}  // namespace

void fft(std::span<const cplx> in, std::span<cplx> out, FftSign sign) {
  if (in.size() != out.size() || in.data() == out.data()) {
    throw std::invalid_argument("fft requires distinct buffers of equal length");
  }
  execute(cache().get(1, in.size(), sign), in, out);
}

void fft3(std::span<const cplx> in, std::span<cplx> out, std::size_t n, FftSign sign) {
  if (in.size() != n * n * n || out.size() != in.size() || in.data() == out.data()) {
    throw std::invalid_argument("fft3 requires distinct n^3 buffers");
  }
  execute(cache().get(3, n, sign), in, out);
}

void fft_axis(std::span<cplx> data, std::size_t n, int dim, int axis, FftSign sign) {
  if (dim == 1) {
    std::vector<cplx> tmp(data.begin(), data.end());
    fft(tmp, data, sign);
    return;
  }
  const std::size_t stride = axis == 0 ? n * n : axis == 1 ? n : 1;
  std::vector<cplx> line(n), spec(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      // Base offset of the line: the two indices other than `axis`.
      std::size_t base = 0;
      switch (axis) {
        case 0: base = a * n + b; break;
        case 1: base = a * n * n + b; break;
        default: base = (a * n + b) * n; break;
      }
      for (std::size_t j = 0; j < n; ++j) line[j] = data[base + j * stride];
      fft(line, spec, sign);
      for (std::size_t j = 0; j < n; ++j) data[base + j * stride] = spec[j];
    }
  }
}

}  // namespace qpb::detail
