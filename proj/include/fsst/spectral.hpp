#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fsst {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Reduces any integer index into [0, n).
inline std::size_t wrap_index(std::int64_t k, std::size_t n) {
  const auto m = static_cast<std::int64_t>(n);
  const std::int64_t r = k % m;
  return static_cast<std::size_t>(r < 0 ? r + m : r);
}

// min(|a-b|, n-|a-b|) on Z_n.
inline std::size_t cyclic_distance(std::int64_t a, std::int64_t b, std::size_t n) {
  const std::size_t d = wrap_index(a - b, n);
  return d <= n - d ? d : n - d;
}

// Same distance for real-valued positions (e.g. an analytic instantaneous frequency).
double cyclic_distance(double a, double b, std::size_t n);

// A length-N sequence indexed by the cyclic group Z_N. The tag keeps time-domain
// signals and spectra from being mixed up by accident.
template <class Tag>
class CyclicSequence {
 public:
  CyclicSequence() = default;
  explicit CyclicSequence(std::vector<cplx> values);

  static CyclicSequence zeros(std::size_t n) { return CyclicSequence(std::vector<cplx>(n)); }
  static CyclicSequence from_real(std::span<const double> values);

  std::size_t size() const { return values_.size(); }

  // Cyclic access: index k resolves to k mod N.
  const cplx& operator[](std::int64_t k) const { return values_[wrap_index(k, values_.size())]; }
  cplx& operator[](std::int64_t k) { return values_[wrap_index(k, values_.size())]; }

  std::span<const cplx> values() const { return values_; }
  std::span<cplx> values() { return values_; }

  bool operator==(const CyclicSequence&) const = default;

 private:
  std::vector<cplx> values_;
};

struct TimeDomain;
struct FrequencyDomain;

using ComplexSignal = CyclicSequence<TimeDomain>;
using Spectrum = CyclicSequence<FrequencyDomain>;

extern template class CyclicSequence<TimeDomain>;
extern template class CyclicSequence<FrequencyDomain>;

// Direct O(N^2) DFT with a precomputed twiddle table. Phases are reduced
// as (m*n mod N) before lookup so large N keeps full double accuracy.
class DftKernel {
 public:
  explicit DftKernel(std::size_t n);

  std::size_t size() const { return twiddles_.size(); }

  // out[m] = sum_n in[n] e^{-2 pi i m n / N}
  void forward(std::span<const cplx> in, std::span<cplx> out) const;
  // out[n] = (1/N) sum_m in[m] e^{2 pi i m n / N}
  void inverse(std::span<const cplx> in, std::span<cplx> out) const;

  // e^{-2 pi i k / N}
  const cplx& twiddle(std::int64_t k) const { return twiddles_[wrap_index(k, twiddles_.size())]; }

 private:
  std::vector<cplx> twiddles_;
};

Spectrum dft(const ComplexSignal& x);
ComplexSignal idft(const Spectrum& x_hat);

// output(n) = x(n - k)
ComplexSignal translate(const ComplexSignal& x, std::int64_t k);
// output(n) = e^{-2 pi i l n / N} x(n)
ComplexSignal modulate(const ComplexSignal& x, std::int64_t l);
// M_l T_k x
ComplexSignal tf_shift(const ComplexSignal& x, std::int64_t k, std::int64_t l);

// <x, y> = sum_n x(n) conj(y(n)); throws std::invalid_argument on length mismatch.
template <class Tag>
cplx inner_product(const CyclicSequence<Tag>& x, const CyclicSequence<Tag>& y);

// sum_n |x(n)|^2
template <class Tag>
double energy(const CyclicSequence<Tag>& x);

}  // namespace fsst
