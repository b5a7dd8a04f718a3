#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>

namespace wigflow::fft {

using cplx = std::complex<double>;

enum class Direction { Forward = -1, Backward = +1 };

/// Discrete Fourier sums on an integer lattice, backed by FFTW.
///
/// For input samples x[m] attached to lattice indices n = n0 + m, computes
///
///     out[k] = sum_m x[m] * exp(sign * 2*pi*i * (k0 + k) * (n0 + m) / L)
///
/// for k = 0 .. out.size()-1. Inputs longer than L are folded modulo L and
/// outputs longer than L repeat periodically, so the result is exact for any
/// sizes. One plan is shared; each thread supplies its own Workspace.
class LatticeDft {
 public:
  LatticeDft(std::size_t length, Direction direction);
  ~LatticeDft();
  LatticeDft(const LatticeDft&) = delete;
  LatticeDft& operator=(const LatticeDft&) = delete;

  std::size_t length() const { return length_; }

  class Workspace {
   public:
    explicit Workspace(std::size_t length);
    ~Workspace();
    Workspace(const Workspace&) = delete;
    Workspace& operator=(const Workspace&) = delete;
    cplx* data() { return data_; }

   private:
    cplx* data_;
  };

  void transform(std::span<const cplx> x, long n0, long k0, std::span<cplx> out, Workspace& ws) const;

 private:
  std::size_t length_;
  struct PlanHolder;
  std::unique_ptr<PlanHolder> plan_;
};

}  // namespace wigflow::fft
