#include "fsst/stft.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fsst {

std::string_view to_string(TfKind kind) {
  switch (kind) {
    case TfKind::stft: return "stft";
    case TfKind::modified_stft: return "modified-stft";
    case TfKind::sst: return "sst";
    case TfKind::itvps: return "itvps";
  }
  return "unknown";
}

TFMatrix::TFMatrix(std::size_t n, TfKind kind) : TFMatrix(n, kind, std::vector<cplx>(n * n)) {}

TFMatrix::TFMatrix(std::size_t n, TfKind kind, std::vector<cplx> entries)
    : n_(n), kind_(kind), entries_(std::move(entries)) {
  if (n_ < 2) throw std::invalid_argument("time-frequency matrix needs N >= 2");
  if (entries_.size() != n_ * n_) {
    throw std::invalid_argument("time-frequency matrix expects " + std::to_string(n_ * n_) + " entries, got " +
                                std::to_string(entries_.size()));
  }
}

double TFMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : entries_) m = std::max(m, std::abs(v));
  return m;
}

namespace {

void check_sizes(const ComplexSignal& x, const WindowSpec& w) {
  if (x.size() != w.size()) {
    throw std::invalid_argument("signal length " + std::to_string(x.size()) + " does not match window length " +
                                std::to_string(w.size()));
  }
}

}  // namespace

TFMatrix modified_stft(const ComplexSignal& x, const WindowSpec& w) {
  check_sizes(x, w);
  const std::size_t n_total = x.size();
  const DftKernel kernel(n_total);
  TFMatrix out(n_total, TfKind::modified_stft);
  std::vector<cplx> segment(n_total);
  // Row n is the DFT of m -> x(m + n) conj(g(m)).
  for (std::size_t n = 0; n < n_total; ++n) {
    for (std::size_t m = 0; m < n_total; ++m) {
      const auto mi = static_cast<std::int64_t>(m);
      segment[m] = x[mi + static_cast<std::int64_t>(n)] * std::conj(w.g()[mi]);
    }
    kernel.forward(segment, out.row(n));
  }
  return out;
}

TFMatrix stft(const ComplexSignal& x, const WindowSpec& w) {
  check_sizes(x, w);
  const std::size_t n_total = x.size();
  const DftKernel kernel(n_total);
  TFMatrix out(n_total, TfKind::stft);
  std::vector<cplx> segment(n_total);
  for (std::size_t k = 0; k < n_total; ++k) {
    for (std::size_t n = 0; n < n_total; ++n) {
      const auto ni = static_cast<std::int64_t>(n);
      segment[n] = x[ni] * std::conj(w.g()[ni - static_cast<std::int64_t>(k)]);
    }
    kernel.forward(segment, out.row(k));
  }
  return out;
}

}  // namespace fsst
