#include "wigflow/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <mutex>
#include <new>

#include "wigflow/errors.hpp"

namespace wigflow::fft {

namespace {

// FFTW planning is not thread-safe; execution with new-array calls is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

long floor_mod(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

struct LatticeDft::PlanHolder {
  fftw_plan plan = nullptr;
};

LatticeDft::Workspace::Workspace(std::size_t length)
    : data_(static_cast<cplx*>(fftw_malloc(sizeof(cplx) * std::max<std::size_t>(length, 1)))) {
  if (data_ == nullptr) throw std::bad_alloc();
}

LatticeDft::Workspace::~Workspace() { fftw_free(data_); }

LatticeDft::LatticeDft(std::size_t length, Direction direction) : length_(length), plan_(new PlanHolder) {
  if (length == 0) throw InputError("FFT length must be positive");
  Workspace scratch(length);
  auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
  const int sign = direction == Direction::Forward ? FFTW_FORWARD : FFTW_BACKWARD;
  std::lock_guard lock(planner_mutex());
  plan_->plan = fftw_plan_dft_1d(static_cast<int>(length), buf, buf, sign, FFTW_ESTIMATE);
  if (plan_->plan == nullptr) throw NumericalError("FFTW failed to create a plan");
}

LatticeDft::~LatticeDft() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plan_->plan);
}

void LatticeDft::transform(std::span<const cplx> x, long n0, long k0, std::span<cplx> out,
                           Workspace& ws) const {
  const long L = static_cast<long>(length_);
  cplx* buf = ws.data();
  std::fill(buf, buf + L, cplx{});
  long bin = floor_mod(n0, L);
  for (const cplx& v : x) {
    buf[bin] += v;
    if (++bin == L) bin = 0;
  }
  auto* raw = reinterpret_cast<fftw_complex*>(buf);
  fftw_execute_dft(plan_->plan, raw, raw);
  long src = floor_mod(k0, L);
  for (cplx& o : out) {
    o = buf[src];
    if (++src == L) src = 0;
  }
}

}  // namespace wigflow::fft
