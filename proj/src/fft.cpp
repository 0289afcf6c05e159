#include "dircyc/fft.hpp"

#include <fftw3.h>

#include <memory>
#include <mutex>
#include <stdexcept>

namespace dircyc {

namespace {

// FFTW's planner is not reentrant; execution of distinct plans is.
std::mutex& plannerMutex() {
  static std::mutex m;
  return m;
}

struct PlanDeleter {
  void operator()(fftw_plan_s* p) const {
    std::lock_guard lock(plannerMutex());
    fftw_destroy_plan(p);
  }
};

std::vector<Complex> run(std::span<const Complex> x, int rank, const int* dims, bool inverse) {
  std::vector<Complex> in(x.begin(), x.end());
  std::vector<Complex> out(x.size());
  auto* src = reinterpret_cast<fftw_complex*>(in.data());
  auto* dst = reinterpret_cast<fftw_complex*>(out.data());
  std::unique_ptr<fftw_plan_s, PlanDeleter> plan;
  {
    std::lock_guard lock(plannerMutex());
    plan.reset(fftw_plan_dft(rank, dims, src, dst, inverse ? FFTW_BACKWARD : FFTW_FORWARD, FFTW_ESTIMATE));
  }
  if (!plan) throw std::runtime_error("fftw planning failed");
  fftw_execute(plan.get());
  return out;
}

}  // namespace

std::vector<Complex> dft(std::span<const Complex> x, bool inverse) {
  if (x.empty()) return {};
  const int n = static_cast<int>(x.size());
  return run(x, 1, &n, inverse);
}

std::vector<Complex> dft2(std::span<const Complex> x, int rows, int cols, bool inverse) {
  if (rows <= 0 || cols <= 0 || x.size() != static_cast<std::size_t>(rows) * cols)
    throw std::invalid_argument("dft2: shape mismatch");
  const int dims[2] = {rows, cols};
  return run(x, 2, dims, inverse);
}

}  // namespace dircyc
