#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "fsst/signals.hpp"
#include "fsst/stft.hpp"
#include "fsst/window.hpp"

namespace fsst {

inline constexpr double kDefaultZeroThreshold = 1e-12;

// [v] if v <= [v] + 0.5, else [v] + 1, with [v] = floor(v). Ties round down.
std::int64_t round_half_down(double v);

// Instantaneous frequency information per (n, l), in [0, N). Entries where the
// modified STFT (or its successor in time) is numerically zero are masked and
// hold 0.
class OmegaMatrix {
 public:
  explicit OmegaMatrix(std::size_t n) : n_(n), values_(n * n, 0), mask_(n * n, 0) {}

  std::size_t size() const { return n_; }
  std::int64_t operator()(std::size_t n, std::size_t l) const { return values_[n * n_ + l]; }
  bool defined(std::size_t n, std::size_t l) const { return mask_[n * n_ + l] != 0; }

  void set(std::size_t n, std::size_t l, std::int64_t omega) {
    values_[n * n_ + l] = omega;
    mask_[n * n_ + l] = 1;
  }

  std::size_t defined_count() const;

 private:
  std::size_t n_;
  std::vector<std::int64_t> values_;
  std::vector<unsigned char> mask_;
};

// omega(n, l) = round_half_down(N/(2 pi) arg(V(n+1, l) / V(n, l))) mod N, principal
// branch. Entries with |V(n,l)| or |V(n+1,l)| <= zero_threshold * max|V| are masked.
OmegaMatrix inst_freq_info(const TFMatrix& v, double zero_threshold = kDefaultZeroThreshold);

// S(n, xi) = sum of V(n, l) over defined l with omega(n, l) == xi.
TFMatrix sst(const TFMatrix& v, const OmegaMatrix& omega);

// Per-time band around a candidate ridge.
struct RidgeBand {
  std::vector<std::int64_t> center;
  std::size_t half_width = 0;

  // Band covering every bin of Z_N.
  static RidgeBand full(std::size_t n) { return {std::vector<std::int64_t>(n, 0), n / 2}; }
};

// (1 / C_g) sum over xi with cyclic |xi - center(n)| <= half_width of S(n, xi).
ComplexSignal reconstruct_component(const TFMatrix& s, const RidgeBand& band, const WindowSpec& w);

// 2 Re of the complex band sum; for a real input and a band on the positive
// frequency ridge this gives A(n) cos(2 pi phi(n) / N).
std::vector<double> reconstruct_real_component(const TFMatrix& s, const RidgeBand& band, const WindowSpec& w);

// Window moments at time n, with dist(k, n) the cyclic distance:
//   I_s^j = sum_k |g(k - n - j + 1)| dist(k, n)^s      (s, j in {1, 2})
//   I_3^j = sum_k |g(k - n - j + 1)| (k + 1)
struct WindowMoments {
  double I11 = 0, I21 = 0, I12 = 0, I22 = 0;
  double I31 = 0, I32 = 0;
};
WindowMoments window_moments(const ComplexSignal& g, std::size_t n);

// Computable constants of the instantaneous-frequency error bounds at one time index.
struct ErrorBoundReport {
  std::size_t n = 0;
  std::size_t n_total = 0;  // transform size N
  double I11 = 0, I21 = 0, I12 = 0, I22 = 0;
  double I31 = 0, I32 = 0;
  double delta = 0;    // min |V| over defined entries
  double M = 1;        // max(1, |V(n,l)| / |V(n+1,l)|) over defined pairs
  double M_prime = 0;  // 1 / min(delta_x, delta_y)
  double eps = 0;
  double eps_tilde = 0.5;
  double eps_prime = 0;  // ||e||_inf ||g||_1
  // Off-ridge magnitude bounds for V(n, l) and V(n+1, l).
  double off_ridge_bound = 0;
  double off_ridge_bound_next = 0;

  // eps_tilde + N M' eps' / pi
  double noisy_total() const;
  // Bound on |omega_y - omega_x| when both sides are rounded: N M' eps' / pi + 1.
  double omega_drift_bound() const;
};

struct BoundOptions {
  double eps = 0.0;
  bool real_signal = false;
  double eps_prime = 0.0;
  // delta of the noisy transform; infinity when there is none.
  double delta_noisy = std::numeric_limits<double>::infinity();
  double zero_threshold = kDefaultZeroThreshold;
};

// Summary of |V| over defined entries, shared by every time index.
struct MagnitudeStats {
  double delta = 0;
  double M = 1;
};
MagnitudeStats magnitude_stats(const TFMatrix& v, double zero_threshold = kDefaultZeroThreshold);

// Throws std::invalid_argument if V has no entry above the zero threshold.
ErrorBoundReport error_bound(const ComponentModel& model, const WindowSpec& w, const TFMatrix& v, std::size_t n,
                             const BoundOptions& options);

// Same, with the magnitude statistics already computed.
ErrorBoundReport error_bound(const ComponentModel& model, const WindowSpec& w, const MagnitudeStats& stats,
                             std::size_t n, const BoundOptions& options);

// True when (n, l) lies in Z_k: cyclic |l - phi'_k(n)| < d/2.
bool in_ridge_zone(const ComponentModel& model, std::size_t k, std::size_t n, std::size_t l);

struct BoundCheck {
  std::size_t checked = 0;
  std::size_t violations = 0;
  double worst_gap = 0.0;  // largest observed left-hand side
};

// Counts defined entries (n, l) in some Z_k with cyclic
// |omega(n, l) - phi'_k(n)| > eps_tilde(n).
BoundCheck check_frequency_bound(const ComponentModel& model, const WindowSpec& w, const TFMatrix& v,
                                 const OmegaMatrix& omega, const BoundOptions& options);

// Counts entries outside every Z_k where |V(n, l)| or |V(n+1, l)| exceeds the
// corresponding off-ridge bound.
BoundCheck check_off_ridge_bound(const ComponentModel& model, const WindowSpec& w, const TFMatrix& v,
                                 const BoundOptions& options);

}  // namespace fsst
