#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "fsst/spectral.hpp"
#include "fsst/window.hpp"

namespace fsst {

enum class TfKind { stft, modified_stft, sst, itvps };

std::string_view to_string(TfKind kind);

// N x N time-frequency matrix, row-major: rows are time n, columns are
// frequency (l for STFTs, xi for reassigned / ideal spectra).
class TFMatrix {
 public:
  TFMatrix(std::size_t n, TfKind kind);
  TFMatrix(std::size_t n, TfKind kind, std::vector<cplx> entries);

  std::size_t size() const { return n_; }
  TfKind kind() const { return kind_; }

  cplx& operator()(std::size_t n, std::size_t l) { return entries_[n * n_ + l]; }
  const cplx& operator()(std::size_t n, std::size_t l) const { return entries_[n * n_ + l]; }

  // Cyclic access in both indices.
  const cplx& cyclic(std::int64_t n, std::int64_t l) const { return (*this)(wrap_index(n, n_), wrap_index(l, n_)); }

  std::span<const cplx> row(std::size_t n) const { return {entries_.data() + n * n_, n_}; }
  std::span<cplx> row(std::size_t n) { return {entries_.data() + n * n_, n_}; }
  std::span<const cplx> entries() const { return entries_; }

  double max_abs() const;

 private:
  std::size_t n_;
  TfKind kind_;
  std::vector<cplx> entries_;
};

// entries(k, l) = <x, M_l T_k g> = sum_n x(n) conj(g(n-k)) e^{-2 pi i l n / N}
TFMatrix stft(const ComplexSignal& x, const WindowSpec& w);

// entries(n, l) = <x, T_n M_l g> = sum_k x(k) conj(g(k-n)) e^{-2 pi i l (k-n) / N}
//
// A unit harmonic at integer frequency w gives e^{2 pi i w n / N} conj(g_hat(w - l)),
// so consecutive rows differ by the phase e^{2 pi i w / N}.
TFMatrix modified_stft(const ComplexSignal& x, const WindowSpec& w);

}  // namespace fsst
