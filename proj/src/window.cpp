#include "fsst/window.hpp"

#include <cmath>
#include <string>

namespace fsst {

WindowSpec::WindowSpec(Spectrum g_hat, std::size_t support_width)
    : g_hat_(std::move(g_hat)), support_width_(support_width) {
  const std::size_t n = g_hat_.size();
  if (support_width_ == 0 || support_width_ >= n) {
    throw std::invalid_argument("window support width must lie in [1, N), got W = " +
                                std::to_string(support_width_) + " for N = " + std::to_string(n));
  }
  for (std::size_t xi = 0; xi < n; ++xi) {
    if (g_hat_.values()[xi] != cplx{} && !in_support(static_cast<std::int64_t>(xi))) {
      throw std::invalid_argument("window spectrum has a nonzero bin outside its declared support: bin " +
                                  std::to_string(xi));
    }
  }
  g_ = idft(g_hat_);
}

bool WindowSpec::in_support(std::int64_t xi) const {
  // Offset from the first support bin, reduced mod N.
  const std::size_t offset = wrap_index(xi - support_begin(), size());
  return offset < support_width_;
}

double WindowSpec::l1_norm() const {
  double acc = 0.0;
  for (const auto& v : g_.values()) acc += std::abs(v);
  return acc;
}

WindowSpec make_hann_freq_window(std::size_t n, std::size_t support_width) {
  if (support_width == 0 || support_width >= n) {
    throw std::invalid_argument("Hann window support must lie in [1, N), got W = " + std::to_string(support_width) +
                                " for N = " + std::to_string(n));
  }
  std::vector<double> taper(support_width);
  double total = 0.0;
  for (std::size_t j = 0; j < (support_width + 1) / 2; ++j) {
    const double s = std::sin(kPi * static_cast<double>(j + 1) / static_cast<double>(support_width + 1));
    taper[j] = taper[support_width - 1 - j] = s * s;
  }
  for (const double t : taper) total += t;
  auto g_hat = Spectrum::zeros(n);
  const std::int64_t first = -static_cast<std::int64_t>(support_width / 2);
  for (std::size_t j = 0; j < support_width; ++j) {
    g_hat[first + static_cast<std::int64_t>(j)] = taper[j] / total;
  }
  return WindowSpec(std::move(g_hat), support_width);
}

bool validate_separation(const WindowSpec& w, std::int64_t d) {
  return 2 * static_cast<std::int64_t>(w.support_width()) < d;
}

cplx recon_constant(const WindowSpec& w) {
  const cplx g0 = w.g()[0];
  if (std::abs(g0) < 1e-14) throw DegenerateWindow("window has g(0) ~ 0; band reconstruction is undefined");
  return static_cast<double>(w.size()) * std::conj(g0);
}

}  // namespace fsst
