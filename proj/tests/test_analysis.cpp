#include <doctest.h>

#include <random>

#include "fsst/analysis.hpp"
#include "fsst/synchrosqueeze.hpp"

using namespace fsst;

namespace {

struct Pipeline {
  TFMatrix v;
  TFMatrix s;
};

Pipeline run(const ComplexSignal& x, std::size_t width) {
  const auto w = make_hann_freq_window(x.size(), width);
  auto v = modified_stft(x, w);
  auto s = sst(v, inst_freq_info(v));
  return {std::move(v), std::move(s)};
}

std::vector<double> freqs(const Component& c, std::size_t n) {
  std::vector<double> f(n);
  for (std::size_t t = 0; t < n; ++t) f[t] = c.inst_freq(static_cast<double>(t));
  return f;
}

}  // namespace

TEST_CASE("ridges of the ideal spectrum are the rounded frequencies") {
  const auto chirp = gen_chirp();
  const auto p = itvps(chirp.model, 200);
  const auto r = extract_ridges(p, 1, 0);
  CHECK(r.flagged_count() == 0);
  for (std::size_t t = 0; t < 200; ++t) CHECK(r.curves[0][t] == round_half_down(10.0 + t / 20.0));
  const auto truth = truth_ridges(chirp.model);
  CHECK(truth.curves[0] == r.curves[0]);
}

TEST_CASE("zero matrix flags every column") {
  const auto r = extract_ridges(TFMatrix(16, TfKind::sst), 1, 0);
  CHECK(r.flagged_count() == 16);
  CHECK_THROWS_AS(extract_ridges(TFMatrix(16, TfKind::sst), 0, 0), std::invalid_argument);
}

TEST_CASE("peak picking honours separation and ties") {
  TFMatrix t(8, TfKind::sst);
  for (std::size_t n = 0; n < 8; ++n) {
    t(n, 1) = 3.0;
    t(n, 3) = 2.0;
    t(n, 6) = 2.0;
  }
  const auto two = extract_ridges(t, 2, 0);
  CHECK(two.curves[0][0] == 1);
  CHECK(two.curves[1][0] == 3);  // equal peaks: smaller bin wins
  const auto spaced = extract_ridges(t, 2, 3);
  CHECK(spaced.curves[0][0] == 1);
  CHECK(spaced.curves[1][0] == 6);  // bin 3 is only 2 away from bin 1
  const auto limited = extract_ridges(t, 3, 4);
  CHECK(limited.flagged_count() == 8);
  const auto ranged = extract_ridges(t, 1, 0, BinRange{2, 8});
  CHECK(ranged.curves[0][0] == 3);
}

TEST_CASE("ridge extraction is scale invariant") {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> dist;
  std::vector<cplx> entries(24 * 24);
  for (auto& e : entries) e = {dist(rng), dist(rng)};
  const TFMatrix t(24, TfKind::sst, entries);
  for (auto& e : entries) e *= cplx(-3.5, 1.25);
  const TFMatrix scaled(24, TfKind::sst, entries);
  const auto a = extract_ridges(t, 3, 2);
  const auto b = extract_ridges(scaled, 3, 2);
  CHECK(a.curves == b.curves);
}

TEST_CASE("SST ridge of the chirp tracks the true frequency") {
  const auto chirp = gen_chirp();
  const auto p = run(chirp.x, 10);
  const auto r = extract_ridges(p.s, 1, 0, BinRange{0, 101});
  const auto f = freqs(chirp.model.components[0], 200);
  CHECK(fraction_within(r.curves[0], f, 1.0, 10, 190, 200) >= 0.95);
}

TEST_CASE("concentration examples and invariants") {
  const auto chirp = gen_chirp();
  const auto truth = truth_ridges(chirp.model);
  const auto p = itvps(chirp.model, 200);
  CHECK(concentration(p, truth, 0) == 1.0);

  TFMatrix uniform(20, TfKind::sst, std::vector<cplx>(400, cplx(1.0)));
  RidgeSet line{20, {std::vector<std::int64_t>(20, 7)}, std::vector<bool>(20, false)};
  for (std::size_t b = 0; b < 5; ++b) CHECK(concentration(uniform, line, b) == doctest::Approx((2.0 * b + 1) / 20.0));

  const auto pipe = run(chirp.x, 10);
  double prev = 0.0;
  for (std::size_t b = 0; b <= 100; b += 5) {
    const double c = concentration(pipe.s, truth, b);
    CHECK(c >= prev);
    prev = c;
  }
  CHECK(concentration(pipe.s, truth, 100) == doctest::Approx(1.0));
  CHECK(concentration(pipe.v, truth, 100) == doctest::Approx(1.0));
  CHECK(concentration(pipe.s, truth, 2) > concentration(pipe.v, truth, 2));
  CHECK_THROWS_AS(concentration(TFMatrix(200, TfKind::sst), truth, 2), std::invalid_argument);
}

TEST_CASE("ridge error statistics") {
  const auto truth = truth_ridges(gen_two_component().model);
  auto same = ridge_error(truth, truth);
  for (const auto& e : same) {
    CHECK(e.mean == 0.0);
    CHECK(e.max == 0.0);
  }
  RidgeSet shifted = truth;
  for (auto& curve : shifted.curves) {
    for (auto& bin : curve) bin = static_cast<std::int64_t>(wrap_index(bin + 1, 200));
  }
  for (const auto& e : ridge_error(shifted, truth)) {
    CHECK(e.mean == 1.0);
    CHECK(e.max == 1.0);
  }
  RidgeSet one = truth;
  one.curves.pop_back();
  CHECK_THROWS_AS(ridge_error(one, truth), std::invalid_argument);
}

TEST_CASE("SST ridges of the two-component signal stay close to the truth") {
  const auto g = gen_two_component();
  const auto p = run(g.x, 10);
  const auto est = extract_ridges(p.s, 2, 10, BinRange{0, 101});
  for (const auto& e : ridge_error(est, truth_ridges(g.model))) CHECK(e.mean <= 2.0);
}

TEST_CASE("relative l2 error") {
  const std::vector<double> ref{1.0, 2.0, 2.0};
  const std::vector<double> est{1.0, 2.0, 3.0};
  CHECK(relative_l2_error(est, ref, 0, 3) == doctest::Approx(1.0 / 3.0));
  CHECK(relative_l2_error(est, ref, 0, 2) == 0.0);
  CHECK_THROWS_AS(relative_l2_error(est, ref, 2, 2), std::invalid_argument);
}
