#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "fsst/spectral.hpp"

namespace fsst {

class DegenerateWindow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Analysis window given by its spectrum. The spectrum is nonzero only on the
// cyclic interval of `support_width` bins {-floor(W/2), ..., ceil(W/2)-1}
// around bin 0; the time-domain window is its inverse DFT.
class WindowSpec {
 public:
  // Throws std::invalid_argument if W is outside [1, N) or g_hat has a nonzero
  // bin outside the declared interval.
  WindowSpec(Spectrum g_hat, std::size_t support_width);

  std::size_t size() const { return g_hat_.size(); }
  std::size_t support_width() const { return support_width_; }
  const ComplexSignal& g() const { return g_; }
  const Spectrum& g_hat() const { return g_hat_; }

  // First and last bin (signed) of the declared support.
  std::int64_t support_begin() const { return -static_cast<std::int64_t>(support_width_ / 2); }
  std::int64_t support_end() const { return support_begin() + static_cast<std::int64_t>(support_width_) - 1; }
  bool in_support(std::int64_t xi) const;

  // sum_n |g(n)|
  double l1_norm() const;

 private:
  Spectrum g_hat_;
  ComplexSignal g_;
  std::size_t support_width_;
};

// Hann taper over W consecutive bins, sin^2(pi (j+1) / (W+1)) for j = 0..W-1,
// scaled so the taper sums to 1 (hence g(0) = 1/N). Odd W is symmetric about
// bin 0; even W is centred on bin -1/2.
WindowSpec make_hann_freq_window(std::size_t n, std::size_t support_width);

// |supp(g_hat)| < d/2
bool validate_separation(const WindowSpec& w, std::int64_t d);

// C_g = N conj(g(0)), the column-sum constant of the modified STFT.
// Throws DegenerateWindow when |g(0)| < 1e-14.
cplx recon_constant(const WindowSpec& w);

}  // namespace fsst
