#include "fsst/signals.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include "fsst/stft.hpp"
#include "fsst/synchrosqueeze.hpp"

namespace fsst {

double Component::phase(double n) const { return linear * n + quadratic * n * n + cos_amp * std::cos(cos_rate * n); }

double Component::inst_freq(double n) const {
  return linear + 2.0 * quadratic * n - cos_amp * cos_rate * std::sin(cos_rate * n);
}

double Component::chirp_rate(double n) const {
  return 2.0 * quadratic - cos_amp * cos_rate * cos_rate * std::cos(cos_rate * n);
}

cplx ComponentModel::component_value(std::size_t k, std::size_t t) const {
  const Component& c = components.at(k);
  const auto tn = static_cast<double>(t);
  const double angle = kTwoPi * c.phase(tn) / static_cast<double>(n);
  if (real_valued) return c.amp(tn) * std::cos(angle);
  return std::polar(c.amp(tn), angle);
}

ComplexSignal ComponentModel::component_signal(std::size_t k) const {
  auto out = ComplexSignal::zeros(n);
  for (std::size_t t = 0; t < n; ++t) out.values()[t] = component_value(k, t);
  return out;
}

ComplexSignal ComponentModel::synthesize() const {
  auto out = ComplexSignal::zeros(n);
  for (std::size_t k = 0; k < count(); ++k) {
    for (std::size_t t = 0; t < n; ++t) out.values()[t] += component_value(k, t);
  }
  return out;
}

std::vector<std::size_t> ComponentModel::separation_violations() const {
  std::vector<std::size_t> bad;
  if (count() < 2) return bad;
  std::vector<double> freqs(count());
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t k = 0; k < count(); ++k) freqs[k] = components[k].inst_freq(static_cast<double>(t));
    std::sort(freqs.begin(), freqs.end(), std::greater<>());
    for (std::size_t k = 0; k + 1 < freqs.size(); ++k) {
      if (!(freqs[k] - freqs[k + 1] > static_cast<double>(d))) {
        bad.push_back(t);
        break;
      }
    }
  }
  return bad;
}

double ComponentModel::smoothness_eps() const {
  double eps = 0.0;
  for (const auto& c : components) {
    double sup_freq = 0.0, sup_rate = 0.0, sup_amp_rate = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
      const auto tn = static_cast<double>(t);
      sup_freq = std::max(sup_freq, std::abs(c.inst_freq(tn)));
      sup_rate = std::max(sup_rate, std::abs(c.chirp_rate(tn)));
      sup_amp_rate = std::max(sup_amp_rate, std::abs(c.amp_rate(tn)));
    }
    if (sup_freq == 0.0) continue;
    eps = std::max(eps, std::max(sup_rate, sup_amp_rate) / sup_freq);
  }
  return eps;
}

namespace {

void check_length(std::size_t n) {
  if (n < 2) throw std::invalid_argument("signal length must be at least 2");
}

ComplexSignal sample(std::size_t n, const std::function<double(double)>& f) {
  auto out = ComplexSignal::zeros(n);
  for (std::size_t t = 0; t < n; ++t) out.values()[t] = f(static_cast<double>(t));
  return out;
}

}  // namespace

// Phases in bins are the cycle counts of each printed formula scaled by N.

GeneratedSignal gen_chirp(std::size_t n) {
  check_length(n);
  const auto nn = static_cast<double>(n);
  ComponentModel model{"chirp", n, static_cast<std::int64_t>(n / 10), true,
                       {Component{"chirp", 1.0, nn / 20.0, nn * 0.05 / 400.0, 0.0, 0.0}}};
  auto x = sample(n, [](double t) { return std::cos(kTwoPi * (t / 20.0 + 0.05 * (t / 20.0) * (t / 20.0))); });
  return {std::move(x), std::move(model)};
}

GeneratedSignal gen_two_component(std::size_t n) {
  check_length(n);
  const auto nn = static_cast<double>(n);
  ComponentModel model{"two", n, static_cast<std::int64_t>(n / 10), true,
                       {Component{"fm", 1.0, nn / 5.0, 0.0, nn * 0.02, 0.1},
                        Component{"chirp", 1.0, nn * 0.3, nn * 0.02 / 100.0, 0.0, 0.0}}};
  // The first term follows the stated phase 40n + 4 cos(n/10) (N = 200).
  auto x = sample(n, [](double t) {
    return std::cos(kTwoPi * (t / 5.0 + 0.02 * std::cos(t / 10.0))) +
           std::cos(kTwoPi * (3.0 * t / 10.0 + 0.02 * (t / 10.0) * (t / 10.0)));
  });
  return {std::move(x), std::move(model)};
}

GeneratedSignal gen_interlacing(std::size_t n) {
  check_length(n);
  const auto nn = static_cast<double>(n);
  ComponentModel model{"interlace", n, static_cast<std::int64_t>(n / 10), true,
                       {Component{"tone", 1.0, nn / 4.0, 0.0, 0.0, 0.0},
                        Component{"chirp", 1.0, nn / 10.0, nn * 0.05 / 100.0, 0.0, 0.0}}};
  auto x = sample(n, [](double t) {
    return std::cos(5.0 * kPi * (t / 10.0)) + std::cos(kTwoPi * (t / 10.0 + 0.05 * (t / 10.0) * (t / 10.0)));
  });
  return {std::move(x), std::move(model)};
}

GeneratedSignal generate(const std::string& name, std::size_t n) {
  if (name == "chirp") return gen_chirp(n);
  if (name == "two") return gen_two_component(n);
  if (name == "interlace") return gen_interlacing(n);
  throw std::invalid_argument("unknown signal '" + name + "' (expected chirp, two or interlace)");
}

std::vector<double> make_noise(std::size_t n, double level, std::uint64_t seed) {
  if (!(level >= 0.0)) throw std::invalid_argument("noise level must be non-negative");
  std::vector<double> e(n, 0.0);
  if (level == 0.0 || n == 0) return e;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  double peak = 0.0;
  for (auto& v : e) {
    v = dist(rng);
    peak = std::max(peak, std::abs(v));
  }
  if (peak == 0.0) return e;
  for (auto& v : e) v *= level / peak;
  // The largest sample lands on exactly +-level.
  const auto it = std::max_element(e.begin(), e.end(), [](double a, double b) { return std::abs(a) < std::abs(b); });
  *it = std::copysign(level, *it);
  return e;
}

ComplexSignal add_noise(const ComplexSignal& x, double level, std::uint64_t seed) {
  const auto e = make_noise(x.size(), level, seed);
  ComplexSignal y = x;
  for (std::size_t t = 0; t < x.size(); ++t) y.values()[t] += e[t];
  return y;
}

TFMatrix itvps(const ComponentModel& model, std::size_t n) {
  TFMatrix p(n, TfKind::itvps);
  for (const auto& c : model.components) {
    for (std::size_t t = 0; t < n; ++t) {
      const auto tn = static_cast<double>(t);
      const double a = c.amp(tn);
      if (a == 0.0) continue;
      p(t, wrap_index(round_half_down(c.inst_freq(tn)), n)) += a * a;
    }
  }
  return p;
}

}  // namespace fsst
