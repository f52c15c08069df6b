// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure.
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fsst/analysis.hpp"
#include "fsst/io.hpp"
#include "fsst/signals.hpp"
#include "fsst/spectral.hpp"
#include "fsst/stft.hpp"
#include "fsst/synchrosqueeze.hpp"
#include "fsst/window.hpp"
#include "oracle.hpp"

using namespace fsst;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(const std::string& id, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %s: %s\n", ok ? "PASS" : "FAIL", id.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

constexpr std::size_t kN = 200;
constexpr std::size_t kLo = 10;
constexpr std::size_t kHi = 190;

std::vector<double> freq_curve(const ComponentModel& m, std::size_t k) {
  std::vector<double> f(m.n);
  for (std::size_t n = 0; n < m.n; ++n) f[n] = m.components[k].inst_freq(static_cast<double>(n));
  return f;
}

RidgeSet sst_ridges(const TFMatrix& s, const ComponentModel& m) {
  const BinRange range = m.real_valued ? BinRange{0, m.n / 2 + 1} : BinRange{};
  return extract_ridges(s, m.count(), static_cast<std::size_t>(m.d / 2), range);
}

TFMatrix sst_of(const ComplexSignal& x, const WindowSpec& w) {
  const auto v = modified_stft(x, w);
  return sst(v, inst_freq_info(v));
}

std::vector<double> real_part(const ComplexSignal& x) {
  std::vector<double> out(x.size());
  for (std::size_t n = 0; n < x.size(); ++n) out[n] = x[n].real();
  return out;
}

void spectral_identities() {
  std::mt19937_64 rng(101);
  double worst_inv = 0.0, worst_pl = 0.0;
  for (const std::size_t n : {16u, 64u, 200u, 512u}) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto x = oracle::random_signal(n, rng);
      const auto xh = dft(x);
      const auto back = idft(xh);
      worst_inv = std::max(worst_inv, oracle::max_abs_diff(back.values(), x.values()) / oracle::l2(x.values()));
      const double ex = energy(x);
      worst_pl = std::max(worst_pl, std::abs(energy(xh) / static_cast<double>(n) - ex) / ex);
    }
  }
  report("1", worst_inv <= 1e-10 && worst_pl <= 1e-10,
         "worst inversion error " + num(worst_inv) + ", worst Plancherel error " + num(worst_pl));
}

void oracle_equivalence() {
  std::mt19937_64 rng(202);
  double worst = 0.0;
  std::size_t cases = 0;
  for (std::size_t n = 2; n <= 64; ++n) {
    for (const std::size_t wsz : {std::size_t{1}, n / 3 + 1, n - 1}) {
      if (wsz < 1 || wsz >= n) continue;
      const auto x = oracle::random_signal(n, rng);
      const auto w = make_hann_freq_window(n, wsz);
      const auto v = modified_stft(x, w);
      const auto ref = oracle::naive_modified_stft(oracle::to_vector(x.values()), oracle::to_vector(w.g().values()));
      const double scale = std::max(1.0, oracle::l2(ref));
      worst = std::max(worst, oracle::max_abs_diff(v.entries(), ref) / scale);
      ++cases;
    }
  }
  report("2", worst <= 1e-10, std::to_string(cases) + " cases, worst scaled difference " + num(worst));
}

void harmonic_exactness() {
  constexpr std::size_t n = 64;
  std::size_t bad_omega = 0, unmasked = 0;
  double worst_leak = 0.0;
  for (const std::size_t wsz : {1u, 5u, 9u}) {
    const auto w = make_hann_freq_window(n, wsz);
    for (std::size_t om = 0; om < n; ++om) {
      std::vector<cplx> vals(n);
      for (std::size_t k = 0; k < n; ++k) {
        vals[k] = std::polar(1.0, kTwoPi * static_cast<double>((om * k) % n) / static_cast<double>(n));
      }
      const ComplexSignal x(vals);
      const auto v = modified_stft(x, w);
      const auto omega = inst_freq_info(v);
      for (std::size_t t = 0; t < n; ++t) {
        for (std::size_t l = 0; l < n; ++l) {
          if (!omega.defined(t, l)) continue;
          ++unmasked;
          if (omega(t, l) != static_cast<std::int64_t>(om)) ++bad_omega;
        }
      }
      const auto s = sst(v, omega);
      double total = 0.0, off = 0.0;
      for (std::size_t t = 0; t < n; ++t) {
        for (std::size_t xi = 0; xi < n; ++xi) {
          const double p = std::norm(s(t, xi));
          total += p;
          if (xi != om) off += p;
        }
      }
      worst_leak = std::max(worst_leak, off / total);
    }
  }
  report("3", bad_omega == 0 && worst_leak <= 1e-20 && unmasked > 0,
         std::to_string(unmasked) + " unmasked entries, " + std::to_string(bad_omega) +
             " wrong, worst off-row energy share " + num(worst_leak));
}

void column_sum_inversion() {
  std::mt19937_64 rng(404);
  double worst_sum = 0.0, worst_rec = 0.0;
  for (const std::size_t n : {8u, 33u, 64u, 200u}) {
    for (const std::size_t wsz : {std::size_t{1}, std::size_t{5}, n / 2}) {
      const auto w = make_hann_freq_window(n, wsz);
      const cplx cg = recon_constant(w);
      for (int trial = 0; trial < 3; ++trial) {
        const auto x = oracle::random_signal(n, rng);
        const auto v = modified_stft(x, w);
        const double scale = oracle::l2(x.values());
        for (std::size_t t = 0; t < n; ++t) {
          cplx acc{};
          for (std::size_t l = 0; l < n; ++l) acc += v(t, l);
          worst_sum = std::max(worst_sum, std::abs(acc - cg * x[t]) / scale);
        }
        const auto rec = reconstruct_component(sst(v, inst_freq_info(v)), RidgeBand::full(n), w);
        worst_rec = std::max(worst_rec, oracle::max_abs_diff(rec.values(), x.values()) / scale);
      }
    }
  }
  report("4", worst_sum <= 1e-10 && worst_rec <= 1e-10,
         "worst column-sum error " + num(worst_sum) + ", worst full-band reconstruction error " + num(worst_rec));
}

void chirp_ridge() {
  const auto g = gen_chirp(kN);
  const auto w = make_hann_freq_window(kN, 10);
  const auto f = freq_curve(g.model, 0);
  const auto sst_hit = fraction_within(sst_ridges(sst_of(g.x, w), g.model).curves[0], f, 1.0, kLo, kHi, kN);
  const auto stft_hit = fraction_within(sst_ridges(stft(g.x, w), g.model).curves[0], f, 1.0, kLo, kHi, kN);
  report("5", sst_hit >= 0.95 && stft_hit < 0.95,
         "SST within 1 bin on " + num(100 * sst_hit) + "% of columns, STFT on " + num(100 * stft_hit) + "%");
}

void two_component() {
  const auto w = make_hann_freq_window(kN, 10);
  const auto g = gen_two_component(kN);
  const auto ridges = sst_ridges(sst_of(g.x, w), g.model);
  double hit_min = 1.0;
  std::string detail = "sig2 ridge hits";
  for (std::size_t k = 0; k < 2; ++k) {
    const double hit = fraction_within(ridges.curves[k], freq_curve(g.model, k), 2.0, kLo, kHi, kN);
    hit_min = std::min(hit_min, hit);
    detail += " " + num(100 * hit) + "%";
  }
  bool conc_ok = true;
  detail += "; concentration SST/STFT";
  for (const auto* name : {"chirp", "two", "interlace"}) {
    const auto s = generate(name, kN);
    const auto truth = truth_ridges(s.model);
    const double cs = concentration(sst_of(s.x, w), truth, 2);
    const double cv = concentration(stft(s.x, w), truth, 2);
    conc_ok = conc_ok && cs > cv;
    detail += " " + std::string(name) + " " + num(cs) + "/" + num(cv);
  }
  report("6", hit_min >= 0.90 && conc_ok, detail);
}

void reconstruction() {
  const auto w = make_hann_freq_window(kN, 10);
  double worst = 0.0;
  std::string detail = "relative l2 errors";
  for (const auto* name : {"chirp", "two"}) {
    const auto g = generate(name, kN);
    const auto s = sst_of(g.x, w);
    const auto truth = truth_ridges(g.model);
    for (std::size_t k = 0; k < g.model.count(); ++k) {
      const auto rec = reconstruct_real_component(s, RidgeBand{truth.curves[k], 6}, w);
      const auto ref = real_part(g.model.component_signal(k));
      const double e = relative_l2_error(rec, ref, kLo, kHi);
      worst = std::max(worst, e);
      detail += " " + std::string(name) + "[" + std::to_string(k) + "] " + num(100 * e) + "%";
    }
  }
  report("7", worst <= 0.05, detail);
}

void frequency_bound() {
  const auto w = make_hann_freq_window(kN, 9);
  std::size_t checked = 0, violations = 0;
  for (const auto* name : {"chirp", "two"}) {
    const auto g = generate(name, kN);
    if (!validate_separation(w, g.model.d)) {
      report("8", false, std::string(name) + " does not satisfy the separation hypothesis at W=9");
      return;
    }
    const auto v = modified_stft(g.x, w);
    BoundOptions opts;
    opts.eps = g.model.smoothness_eps();
    opts.real_signal = g.model.real_valued;
    const auto c = check_frequency_bound(g.model, w, v, inst_freq_info(v), opts);
    checked += c.checked;
    violations += c.violations;
  }
  report("8", checked > 0 && violations == 0,
         std::to_string(violations) + " violations over " + std::to_string(checked) + " on-ridge entries");
}

void stability() {
  constexpr double level = 0.4;
  const auto w = make_hann_freq_window(kN, 10);
  const double eps_prime = level * w.l1_norm();
  std::size_t drift_violations = 0, drift_checked = 0;
  double worst_ratio = 0.0;
  double worst_recon_drift = 0.0;
  double worst_hit = 1.0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    for (const auto* name : {"chirp", "two"}) {
      const auto g = generate(name, kN);
      const auto y = add_noise(g.x, level, seed);
      const auto vx = modified_stft(g.x, w);
      const auto vy = modified_stft(y, w);
      const auto ox = inst_freq_info(vx);
      const auto oy = inst_freq_info(vy);
      const double m_prime = 1.0 / std::min(magnitude_stats(vx).delta, magnitude_stats(vy).delta);
      const double bound = static_cast<double>(kN) * m_prime * eps_prime / kPi + 1.0;
      for (std::size_t n = 0; n < kN; ++n) {
        for (std::size_t l = 0; l < kN; ++l) {
          if (!ox.defined(n, l) || !oy.defined(n, l)) continue;
          ++drift_checked;
          const double gap = static_cast<double>(cyclic_distance(ox(n, l), oy(n, l), kN));
          worst_ratio = std::max(worst_ratio, gap / bound);
          if (gap > bound) ++drift_violations;
        }
      }

      const auto sx = sst(vx, ox);
      const auto sy = sst(vy, oy);
      const auto truth = truth_ridges(g.model);
      for (std::size_t k = 0; k < g.model.count(); ++k) {
        const RidgeBand band{truth.curves[k], 6};
        const auto rx = reconstruct_real_component(sx, band, w);
        const auto ry = reconstruct_real_component(sy, band, w);
        for (std::size_t n = 0; n < kN; ++n) worst_recon_drift = std::max(worst_recon_drift, std::abs(ry[n] - rx[n]));
      }

      if (std::string(name) == "chirp") {
        const auto ridge = sst_ridges(sy, g.model).curves[0];
        worst_hit = std::min(worst_hit, fraction_within(ridge, freq_curve(g.model, 0), 3.0, kLo, kHi, kN));
      }
    }
  }
  report("9a", drift_checked > 0 && drift_violations == 0,
         std::to_string(drift_violations) + " frequency drift violations over " + std::to_string(drift_checked) +
             " jointly unmasked entries, largest gap/bound " + num(worst_ratio));
  report("9b", worst_recon_drift <= eps_prime,
         "largest band reconstruction drift " + num(worst_recon_drift) + " against eps' " + num(eps_prime));
  report("9c", worst_hit >= 0.85, "noisy chirp ridge within 3 bins on at least " + num(100 * worst_hit) + "%");
}

int shell(const std::string& cmd) {
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

bool run_pipeline(const std::string& bin, const fs::path& dir) {
  const auto p = [&](const char* f) { return (dir / f).string(); };
  const std::vector<std::string> steps = {
      "gen --signal two --noise 0.4 --seed 11 --out " + p("s.csv"),
      "gen --signal interlace --out " + p("i.csv"),
      "transform --kind stft --in " + p("s.csv") + " --out " + p("stft.csv"),
      "transform --kind modified-stft --in " + p("s.csv") + " --out " + p("v.csv"),
      "transform --kind sst --in " + p("s.csv") + " --out " + p("t.csv"),
      "transform --kind itvps --model " + p("s.json") + " --out " + p("p.csv"),
      "transform --kind sst --support 9 --in " + p("i.csv") + " --out " + p("it.csv"),
      "reconstruct --sst " + p("t.csv") + " --model " + p("s.json") + " --component 1 --out " + p("c1.csv"),
      "reconstruct --sst " + p("t.csv") + " --band -1 --out " + p("full.csv"),
      "metrics --stft " + p("v.csv") + " --sst " + p("t.csv") + " --model " + p("s.json") + " --out " + p("m.json"),
      "plot --in " + p("t.csv") + " --out " + p("t.pgm"),
      "plot --log --in " + p("p.csv") + " --out " + p("p.pgm"),
  };
  for (const auto& step : steps) {
    if (shell(bin + " " + step + " >>" + p("stderr.txt") + " 2>&1") != 0) return false;
  }
  return true;
}

void determinism() {
  const std::string bin = FSST_CLI_PATH;
  const fs::path root = fs::temp_directory_path() / ("fsst_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(root);
  const fs::path a = root / "a";
  const fs::path b = root / "b";
  fs::create_directories(a);
  fs::create_directories(b);
  if (!run_pipeline(bin, a) || !run_pipeline(bin, b)) {
    report("10", false, "a CLI step exited with a non-zero status");
    fs::remove_all(root);
    return;
  }
  std::size_t files = 0, differing = 0;
  for (const auto& entry : fs::directory_iterator(a)) {
    ++files;
    const auto other = b / entry.path().filename();
    if (!fs::exists(other) || read_text_file(entry.path()) != read_text_file(other)) ++differing;
  }
  fs::remove_all(root);
  report("10", files > 0 && differing == 0,
         std::to_string(files) + " files compared across two runs, " + std::to_string(differing) + " differ");
}

}  // namespace

int main() {
  spectral_identities();
  oracle_equivalence();
  harmonic_exactness();
  column_sum_inversion();
  chirp_ridge();
  two_component();
  reconstruction();
  frequency_bound();
  stability();
  determinism();
  std::printf("%s: %d criterion line(s) failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
