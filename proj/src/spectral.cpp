#include "fsst/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fsst {

double cyclic_distance(double a, double b, std::size_t n) {
  const double period = static_cast<double>(n);
  double d = std::fmod(std::abs(a - b), period);
  return std::min(d, period - d);
}

template <class Tag>
CyclicSequence<Tag>::CyclicSequence(std::vector<cplx> values) : values_(std::move(values)) {
  if (values_.size() < 2) {
    throw std::invalid_argument("cyclic sequence needs N >= 2, got N = " + std::to_string(values_.size()));
  }
}

template <class Tag>
CyclicSequence<Tag> CyclicSequence<Tag>::from_real(std::span<const double> values) {
  std::vector<cplx> v(values.begin(), values.end());
  return CyclicSequence(std::move(v));
}

template class CyclicSequence<TimeDomain>;
template class CyclicSequence<FrequencyDomain>;

DftKernel::DftKernel(std::size_t n) : twiddles_(n) {
  if (n == 0) throw std::invalid_argument("DFT size must be positive");
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = -kTwoPi * static_cast<double>(k) / static_cast<double>(n);
    twiddles_[k] = {std::cos(angle), std::sin(angle)};
  }
}

void DftKernel::forward(std::span<const cplx> in, std::span<cplx> out) const {
  const std::size_t n = size();
  if (in.size() != n || out.size() != n) throw std::invalid_argument("DFT buffer size mismatch");
  for (std::size_t m = 0; m < n; ++m) {
    cplx acc{};
    std::size_t phase = 0;  // m*k mod n, advanced incrementally
    for (std::size_t k = 0; k < n; ++k) {
      acc += in[k] * twiddles_[phase];
      phase += m;
      if (phase >= n) phase -= n;
    }
    out[m] = acc;
  }
}

void DftKernel::inverse(std::span<const cplx> in, std::span<cplx> out) const {
  const std::size_t n = size();
  if (in.size() != n || out.size() != n) throw std::invalid_argument("DFT buffer size mismatch");
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc{};
    std::size_t phase = 0;
    for (std::size_t m = 0; m < n; ++m) {
      acc += in[m] * std::conj(twiddles_[phase]);
      phase += k;
      if (phase >= n) phase -= n;
    }
    out[k] = acc * scale;
  }
}

Spectrum dft(const ComplexSignal& x) {
  auto out = Spectrum::zeros(x.size());
  DftKernel(x.size()).forward(x.values(), out.values());
  return out;
}

ComplexSignal idft(const Spectrum& x_hat) {
  auto out = ComplexSignal::zeros(x_hat.size());
  DftKernel(x_hat.size()).inverse(x_hat.values(), out.values());
  return out;
}

ComplexSignal translate(const ComplexSignal& x, std::int64_t k) {
  auto out = ComplexSignal::zeros(x.size());
  for (std::size_t n = 0; n < x.size(); ++n) {
    out[static_cast<std::int64_t>(n)] = x[static_cast<std::int64_t>(n) - k];
  }
  return out;
}

ComplexSignal modulate(const ComplexSignal& x, std::int64_t l) {
  const std::size_t n_total = x.size();
  const std::size_t lr = wrap_index(l, n_total);
  auto out = ComplexSignal::zeros(n_total);
  for (std::size_t n = 0; n < n_total; ++n) {
    const double angle = -kTwoPi * static_cast<double>((lr * n) % n_total) / static_cast<double>(n_total);
    out[static_cast<std::int64_t>(n)] = std::polar(1.0, angle) * x[static_cast<std::int64_t>(n)];
  }
  return out;
}

ComplexSignal tf_shift(const ComplexSignal& x, std::int64_t k, std::int64_t l) {
  return modulate(translate(x, k), l);
}

template <class Tag>
cplx inner_product(const CyclicSequence<Tag>& x, const CyclicSequence<Tag>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("inner product of sequences with different N");
  cplx acc{};
  for (std::size_t n = 0; n < x.size(); ++n) acc += x.values()[n] * std::conj(y.values()[n]);
  return acc;
}

template <class Tag>
double energy(const CyclicSequence<Tag>& x) {
  double acc = 0.0;
  for (const auto& v : x.values()) acc += std::norm(v);
  return acc;
}

template cplx inner_product(const ComplexSignal&, const ComplexSignal&);
template cplx inner_product(const Spectrum&, const Spectrum&);
template double energy(const ComplexSignal&);
template double energy(const Spectrum&);

}  // namespace fsst
