#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fsst/spectral.hpp"

namespace fsst {

class TFMatrix;

// One oscillatory component with a closed-form phase in bins:
//   phi(n) = linear * n + quadratic * n^2 + cos_amp * cos(cos_rate * n)
// The oscillation is A e^{2 pi i phi(n) / N} (complex) or A cos(2 pi phi(n) / N)
// (real). Amplitude is constant.
struct Component {
  std::string name;
  double amplitude = 1.0;
  double linear = 0.0;
  double quadratic = 0.0;
  double cos_amp = 0.0;
  double cos_rate = 0.0;

  double amp(double) const { return amplitude; }
  double amp_rate(double) const { return 0.0; }
  double phase(double n) const;
  // Analytic first derivative of phase: the instantaneous frequency in bins.
  double inst_freq(double n) const;
  // Analytic second derivative of phase.
  double chirp_rate(double n) const;

  bool operator==(const Component&) const = default;
};

struct ComponentModel {
  std::string signal;  // generator family: chirp | two | interlace
  std::size_t n = 0;
  std::int64_t d = 0;  // nominal separation of consecutive instantaneous frequencies
  bool real_valued = true;
  std::vector<Component> components;

  std::size_t count() const { return components.size(); }

  // Sample of component k at time n (real part only for real models).
  cplx component_value(std::size_t k, std::size_t n) const;
  ComplexSignal component_signal(std::size_t k) const;
  // Sum of all components.
  ComplexSignal synthesize() const;

  // Time indices where some pair of sorted instantaneous frequencies is not
  // separated by more than d.
  std::vector<std::size_t> separation_violations() const;

  // Smallest eps with ||phi''|| <= eps ||phi'|| and ||A'|| <= eps ||phi'|| for
  // every component (sup norms over n = 0..N-1).
  double smoothness_eps() const;

  bool operator==(const ComponentModel&) const = default;
};

struct GeneratedSignal {
  ComplexSignal x;
  ComponentModel model;
};

// Test signals, all defined for n = 0..N-1 (N = 200 by default).
// x(n) = cos(2 pi (n/20 + 0.05 (n/20)^2))
GeneratedSignal gen_chirp(std::size_t n = 200);
// Two FM components with instantaneous frequencies 40 - 0.4 sin(n/10) and 60 + 0.08 n (at N = 200).
GeneratedSignal gen_two_component(std::size_t n = 200);
// cos(5 pi n / 10) + cos(2 pi (n/10 + 0.05 (n/10)^2)); the two ridges cross at n = 150.
GeneratedSignal gen_interlacing(std::size_t n = 200);

// Dispatches on "chirp", "two", "interlace"; throws std::invalid_argument otherwise.
GeneratedSignal generate(const std::string& name, std::size_t n = 200);

// Real noise, uniform on [-1, 1] per sample then rescaled so that max |e| == level.
std::vector<double> make_noise(std::size_t n, double level, std::uint64_t seed);
ComplexSignal add_noise(const ComplexSignal& x, double level, std::uint64_t seed);

// Ideal time-varying power spectrum: A_k(n)^2 at bin round_half_down(phi'_k(n)) mod N.
TFMatrix itvps(const ComponentModel& model, std::size_t n);

}  // namespace fsst
