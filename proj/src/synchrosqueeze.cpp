#include "fsst/synchrosqueeze.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fsst {

std::int64_t round_half_down(double v) {
  const double whole = std::floor(v);
  const auto base = static_cast<std::int64_t>(whole);
  return v <= whole + 0.5 ? base : base + 1;
}

std::size_t OmegaMatrix::defined_count() const {
  return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), static_cast<unsigned char>(1)));
}

OmegaMatrix inst_freq_info(const TFMatrix& v, double zero_threshold) {
  if (v.kind() != TfKind::modified_stft) {
    throw std::invalid_argument("instantaneous frequency information needs a modified STFT, got " +
                                std::string(to_string(v.kind())));
  }
  if (zero_threshold < 0.0) throw std::invalid_argument("zero threshold must be non-negative");
  const std::size_t n_total = v.size();
  const double floor_abs = zero_threshold * v.max_abs();
  const double scale = static_cast<double>(n_total) / kTwoPi;
  OmegaMatrix omega(n_total);
  for (std::size_t n = 0; n < n_total; ++n) {
    const std::size_t next = (n + 1) % n_total;
    for (std::size_t l = 0; l < n_total; ++l) {
      const cplx cur = v(n, l);
      const cplx nxt = v(next, l);
      if (std::abs(cur) <= floor_abs || std::abs(nxt) <= floor_abs) continue;
      // Re((N / 2 pi i) ln(nxt / cur)) = (N / 2 pi) arg(nxt / cur)
      const double freq = scale * std::arg(nxt * std::conj(cur));
      omega.set(n, l, static_cast<std::int64_t>(wrap_index(round_half_down(freq), n_total)));
    }
  }
  return omega;
}

TFMatrix sst(const TFMatrix& v, const OmegaMatrix& omega) {
  if (v.size() != omega.size()) throw std::invalid_argument("STFT and omega matrix sizes differ");
  const std::size_t n_total = v.size();
  TFMatrix out(n_total, TfKind::sst);
  for (std::size_t n = 0; n < n_total; ++n) {
    auto dst = out.row(n);
    for (std::size_t l = 0; l < n_total; ++l) {
      if (omega.defined(n, l)) dst[static_cast<std::size_t>(omega(n, l))] += v(n, l);
    }
  }
  return out;
}

namespace {

cplx band_sum(const TFMatrix& s, const RidgeBand& band, std::size_t n) {
  const std::size_t n_total = s.size();
  const auto hw = static_cast<std::int64_t>(std::min(band.half_width, n_total / 2));
  const std::int64_t c = band.center[n];
  cplx acc{};
  // Offsets -hw..hw visit each bin at most once because hw <= N/2, except
  // that for even N and hw == N/2 both ends land on the same bin.
  const std::int64_t hi = (2 * hw + 1 > static_cast<std::int64_t>(n_total)) ? hw - 1 : hw;
  for (std::int64_t off = -hw; off <= hi; ++off) acc += s.cyclic(static_cast<std::int64_t>(n), c + off);
  return acc;
}

void check_band(const TFMatrix& s, const RidgeBand& band, const WindowSpec& w) {
  if (s.kind() != TfKind::sst) throw std::invalid_argument("band reconstruction expects a synchrosqueezed matrix");
  if (w.size() != s.size()) throw std::invalid_argument("window length does not match the transform size");
  if (band.center.size() != s.size()) {
    throw std::invalid_argument("ridge band has " + std::to_string(band.center.size()) + " centres, expected " +
                                std::to_string(s.size()));
  }
  for (const auto c : band.center) {
    if (c < 0 || c >= static_cast<std::int64_t>(s.size())) {
      throw std::invalid_argument("ridge band centre " + std::to_string(c) + " is outside [0, N)");
    }
  }
}

}  // namespace

ComplexSignal reconstruct_component(const TFMatrix& s, const RidgeBand& band, const WindowSpec& w) {
  check_band(s, band, w);
  const cplx c_g = recon_constant(w);
  auto out = ComplexSignal::zeros(s.size());
  for (std::size_t n = 0; n < s.size(); ++n) out.values()[n] = band_sum(s, band, n) / c_g;
  return out;
}

std::vector<double> reconstruct_real_component(const TFMatrix& s, const RidgeBand& band, const WindowSpec& w) {
  const ComplexSignal analytic = reconstruct_component(s, band, w);
  std::vector<double> out(s.size());
  for (std::size_t n = 0; n < s.size(); ++n) out[n] = 2.0 * analytic.values()[n].real();
  return out;
}

double ErrorBoundReport::noisy_total() const {
  return eps_tilde + static_cast<double>(n_total) * M_prime * eps_prime / kPi;
}

double ErrorBoundReport::omega_drift_bound() const {
  return static_cast<double>(n_total) * M_prime * eps_prime / kPi + 1.0;
}

MagnitudeStats magnitude_stats(const TFMatrix& v, double zero_threshold) {
  const std::size_t n_total = v.size();
  const double floor_abs = zero_threshold * v.max_abs();
  MagnitudeStats stats{std::numeric_limits<double>::infinity(), 1.0};
  for (std::size_t n = 0; n < n_total; ++n) {
    const std::size_t next = (n + 1) % n_total;
    for (std::size_t l = 0; l < n_total; ++l) {
      const double cur = std::abs(v(n, l));
      if (cur <= floor_abs) continue;
      stats.delta = std::min(stats.delta, cur);
      const double nxt = std::abs(v(next, l));
      if (nxt > floor_abs) stats.M = std::max(stats.M, cur / nxt);
    }
  }
  if (!std::isfinite(stats.delta)) throw std::invalid_argument("transform is zero everywhere; delta is undefined");
  return stats;
}

WindowMoments window_moments(const ComplexSignal& g, std::size_t n) {
  const std::size_t n_total = g.size();
  const auto ni = static_cast<std::int64_t>(n);
  WindowMoments m;
  for (std::size_t k = 0; k < n_total; ++k) {
    const auto ki = static_cast<std::int64_t>(k);
    const double g_here = std::abs(g[ki - ni]);
    const double g_next = std::abs(g[ki - ni - 1]);
    const auto dist = static_cast<double>(cyclic_distance(ki, ni, n_total));
    m.I11 += g_here * dist;
    m.I21 += g_here * dist * dist;
    m.I12 += g_next * dist;
    m.I22 += g_next * dist * dist;
    m.I31 += g_here * static_cast<double>(k + 1);
    m.I32 += g_next * static_cast<double>(k + 1);
  }
  return m;
}

ErrorBoundReport error_bound(const ComponentModel& model, const WindowSpec& w, const TFMatrix& v, std::size_t n,
                             const BoundOptions& options) {
  if (v.size() != w.size()) throw std::invalid_argument("window length does not match the transform size");
  return error_bound(model, w, magnitude_stats(v, options.zero_threshold), n, options);
}

ErrorBoundReport error_bound(const ComponentModel& model, const WindowSpec& w, const MagnitudeStats& stats,
                             std::size_t n, const BoundOptions& options) {
  if (options.eps < 0.0 || options.eps_prime < 0.0) throw std::invalid_argument("eps and eps' must be non-negative");
  const std::size_t n_total = w.size();
  if (n >= n_total) throw std::invalid_argument("time index outside [0, N)");

  ErrorBoundReport r;
  r.n = n;
  r.n_total = n_total;
  const auto moments = window_moments(w.g(), n);
  r.I11 = moments.I11;
  r.I21 = moments.I21;
  r.I12 = moments.I12;
  r.I22 = moments.I22;
  r.I31 = moments.I31;
  r.I32 = moments.I32;
  r.delta = stats.delta;
  r.M = stats.M;
  r.M_prime = 1.0 / std::min(stats.delta, options.delta_noisy);
  r.eps = options.eps;
  r.eps_prime = options.eps_prime;

  const double extra_here = options.real_signal ? r.I31 : 0.0;
  const double extra_next = options.real_signal ? r.I32 : 0.0;
  double bracket = 0.0;
  for (const auto& c : model.components) {
    double sup_freq = 0.0;
    for (std::size_t m = 0; m < model.n; ++m) sup_freq = std::max(sup_freq, std::abs(c.inst_freq(static_cast<double>(m))));
    const double a = std::abs(c.amp(static_cast<double>(n)));
    const double here = r.I11 + kPi * a * r.I21 + extra_here;
    const double next = r.I12 + kPi * a * r.I22 + extra_next;
    bracket += sup_freq * (here + next);
    r.off_ridge_bound += options.eps * sup_freq * here;
    r.off_ridge_bound_next += options.eps * sup_freq * next;
  }
  r.eps_tilde = static_cast<double>(n_total) * r.M * options.eps / (kTwoPi * r.delta) * bracket + 0.5;
  return r;
}

}  // namespace fsst

namespace fsst {

bool in_ridge_zone(const ComponentModel& model, std::size_t k, std::size_t n, std::size_t l) {
  const double freq = model.components.at(k).inst_freq(static_cast<double>(n));
  return cyclic_distance(static_cast<double>(l), freq, model.n) < static_cast<double>(model.d) / 2.0;
}

namespace {

void check_model_size(const ComponentModel& model, const TFMatrix& v) {
  if (model.n != v.size()) {
    throw std::invalid_argument("model N = " + std::to_string(model.n) + " does not match transform N = " +
                                std::to_string(v.size()));
  }
}

}  // namespace

BoundCheck check_frequency_bound(const ComponentModel& model, const WindowSpec& w, const TFMatrix& v,
                                 const OmegaMatrix& omega, const BoundOptions& options) {
  check_model_size(model, v);
  const auto stats = magnitude_stats(v, options.zero_threshold);
  const std::size_t n_total = v.size();
  BoundCheck out;
  for (std::size_t n = 0; n < n_total; ++n) {
    const auto report = error_bound(model, w, stats, n, options);
    for (std::size_t l = 0; l < n_total; ++l) {
      if (!omega.defined(n, l)) continue;
      for (std::size_t k = 0; k < model.count(); ++k) {
        if (!in_ridge_zone(model, k, n, l)) continue;
        const double gap = cyclic_distance(static_cast<double>(omega(n, l)),
                                           model.components[k].inst_freq(static_cast<double>(n)), n_total);
        ++out.checked;
        out.worst_gap = std::max(out.worst_gap, gap);
        if (gap > report.eps_tilde) ++out.violations;
      }
    }
  }
  return out;
}

BoundCheck check_off_ridge_bound(const ComponentModel& model, const WindowSpec& w, const TFMatrix& v,
                                 const BoundOptions& options) {
  check_model_size(model, v);
  const auto stats = magnitude_stats(v, options.zero_threshold);
  const std::size_t n_total = v.size();
  BoundCheck out;
  for (std::size_t n = 0; n < n_total; ++n) {
    const auto report = error_bound(model, w, stats, n, options);
    for (std::size_t l = 0; l < n_total; ++l) {
      bool inside = false;
      for (std::size_t k = 0; k < model.count() && !inside; ++k) inside = in_ridge_zone(model, k, n, l);
      if (inside) continue;
      const double here = std::abs(v(n, l));
      const double next = std::abs(v((n + 1) % n_total, l));
      ++out.checked;
      out.worst_gap = std::max(out.worst_gap, std::max(here, next));
      if (here > report.off_ridge_bound || next > report.off_ridge_bound_next) ++out.violations;
    }
  }
  return out;
}

}  // namespace fsst
